#include "branchlab/catalog_io.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#ifndef BRANCHLAB_CATALOG_PATH
#define BRANCHLAB_CATALOG_PATH "catalog.json"
#endif

namespace branchlab {

using nlohmann::json;

namespace {

json vec(const WeightVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

WeightVector vec_from(const json& a) {
    WeightVector v;
    for (const auto& x : a) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

const char* weyl_kinds[] = {"A", "B", "C", "D", "BC", "G2", "Trivial", "Product"};
const char* group_kinds[] = {"U", "SU", "SO", "Spin", "Sp", "G2", "Product", "AlmostProduct"};
const char* constraint_kinds[] = {"nonneg", "zero", "even"};
const char* sides[] = {"P", "Q", "R"};
const char* symbol_kinds[] = {"casimir", "euler", "powersum", "pfaffian"};
const char* hilbert_kinds[] = {"linear", "quadratic", "weight_pair", "combin"};

template <std::size_t N>
int index_of(const char* (&names)[N], const std::string& s) {
    for (std::size_t i = 0; i < N; ++i)
        if (s == names[i]) return int(i);
    throw std::invalid_argument("catalog: unknown tag '" + s + "'");
}

json constraint_json(const LinearConstraint& c) {
    return {{"kind", constraint_kinds[int(c.kind)]}, {"coeffs", c.coeffs}, {"constant", c.constant}};
}

LinearConstraint constraint_from(const json& j) {
    return {LinearConstraint::Kind(index_of(constraint_kinds, j.at("kind"))), j.at("coeffs").get<std::vector<long>>(),
            j.at("constant").get<long>()};
}

json space_json(const ParamSpace& s) {
    json cs = json::array();
    for (const auto& c : s.constraints) cs.push_back(constraint_json(c));
    std::vector<bool> sg = s.is_signed;
    return {{"names", s.names}, {"signed", sg}, {"constraints", cs}};
}

ParamSpace space_from(const json& j) {
    ParamSpace s;
    s.names = j.at("names").get<std::vector<std::string>>();
    s.is_signed = j.at("signed").get<std::vector<bool>>();
    for (const auto& c : j.at("constraints")) s.constraints.push_back(constraint_from(c));
    return s;
}

json ch_json(const CartanHelgason& ch) {
    json roots = json::array();
    for (const auto& r : ch.restricted_positive) roots.push_back(vec(r));
    return {{"present", ch.present},         {"traceless", ch.traceless},           {"restricted_positive", roots},
            {"zero_coords", ch.zero_coords}, {"equal_pairs", ch.equal_pairs}, {"opposite_pairs", ch.opposite_pairs}};
}

CartanHelgason ch_from(const json& j) {
    CartanHelgason ch;
    ch.present = j.at("present");
    ch.traceless = j.at("traceless");
    for (const auto& r : j.at("restricted_positive")) ch.restricted_positive.push_back(vec_from(r));
    ch.zero_coords = j.at("zero_coords").get<std::vector<int>>();
    ch.equal_pairs = j.at("equal_pairs").get<std::vector<std::pair<int, int>>>();
    ch.opposite_pairs = j.at("opposite_pairs").get<std::vector<std::pair<int, int>>>();
    return ch;
}

}  // namespace

json to_json(const WeylType& t) {
    json j = {{"kind", weyl_kinds[int(t.kind)]}, {"n", t.n}};
    if (t.kind == WeylType::Kind::Product) {
        j["factors"] = json::array();
        for (const auto& f : t.factors) j["factors"].push_back(to_json(f));
    }
    return j;
}

WeylType weyl_from_json(const json& j) {
    using K = WeylType::Kind;
    int n = j.at("n");
    switch (K(index_of(weyl_kinds, j.at("kind")))) {
        case K::A: return WeylType::A(n);
        case K::B: return WeylType::B(n);
        case K::C: return WeylType::C(n);
        case K::D: return WeylType::D(n);
        case K::BC: return WeylType::BC(n);
        case K::G2: return WeylType::G2();
        case K::Trivial: return WeylType::Trivial();
        case K::Product: {
            std::vector<WeylType> fs;
            for (const auto& f : j.at("factors")) fs.push_back(weyl_from_json(f));
            return WeylType::Product(std::move(fs));
        }
    }
    throw std::invalid_argument("catalog: bad Weyl type");
}

json to_json(const GroupDescriptor& g) {
    json j = {{"kind", group_kinds[int(g.kind)]}, {"n", g.n}, {"name", g.name()}};
    if (!g.factors.empty()) {
        j["factors"] = json::array();
        for (const auto& f : g.factors) j["factors"].push_back(to_json(f));
    }
    return j;
}

GroupDescriptor group_from_json(const json& j) {
    using K = GroupDescriptor::Kind;
    int n = j.at("n");
    switch (K(index_of(group_kinds, j.at("kind")))) {
        case K::U: return GroupDescriptor::U(n);
        case K::SU: return GroupDescriptor::SU(n);
        case K::SO: return GroupDescriptor::SO(n);
        case K::Spin: return GroupDescriptor::Spin(n);
        case K::Sp: return GroupDescriptor::Sp(n);
        case K::G2: return GroupDescriptor::G2();
        case K::Product:
        case K::AlmostProduct: {
            std::vector<GroupDescriptor> fs;
            for (const auto& f : j.at("factors")) fs.push_back(group_from_json(f));
            return j.at("kind") == "Product" ? GroupDescriptor::Product(std::move(fs))
                                             : GroupDescriptor::AlmostProduct(std::move(fs));
        }
    }
    throw std::invalid_argument("catalog: bad group");
}

json to_json(const AffineMap& m) {
    json rows = json::array();
    for (const auto& r : m.matrix) rows.push_back(vec(r));
    return {{"source_dim", m.source_dim()}, {"matrix", rows}, {"offset", vec(m.offset)}};
}

AffineMap affine_from_json(const json& j) {
    AffineMap m;
    m.offset = vec_from(j.at("offset"));
    std::size_t src = j.at("source_dim");
    for (const auto& r : j.at("matrix")) m.matrix.push_back(vec_from(r));
    if (m.matrix.size() != m.offset.size()) throw std::invalid_argument("catalog: affine map shape");
    for (const auto& r : m.matrix)
        if (r.size() != src) throw std::invalid_argument("catalog: affine map shape");
    return m;
}

json to_json(const Symbol& s) {
    return {{"side", sides[int(s.side)]}, {"kind", symbol_kinds[int(s.kind)]},
            {"factor", s.factor},         {"coord", s.coord},
            {"exponent", s.exponent},     {"scale", to_string(s.scale)},
            {"name", s.name}};
}

Symbol symbol_from_json(const json& j) {
    Symbol s;
    s.side = Symbol::Side(index_of(sides, j.at("side")));
    s.kind = Symbol::Kind(index_of(symbol_kinds, j.at("kind")));
    s.factor = j.at("factor");
    s.coord = j.at("coord");
    s.exponent = j.at("exponent");
    s.scale = parse_rational(j.at("scale"));
    s.name = j.at("name");
    return s;
}

json to_json(const CaseRecord& c) {
    json rels = json::array();
    for (const auto& r : c.relations) {
        json terms = json::array();
        for (const auto& [coef, sym] : r.terms) terms.push_back({{"coeff", to_string(coef)}, {"symbol", to_json(sym)}});
        rels.push_back({{"name", r.name}, {"terms", terms}});
    }
    json indep = json::array();
    for (const auto& s : c.independent) indep.push_back(to_json(s));
    json hil = json::array();
    for (const auto& f : c.hilbert) hil.push_back({{"kind", hilbert_kinds[int(f.kind)]}, {"args", f.args}});
    json branch = {{"free_names", c.branch.free_names}, {"constraints", json::array()}, {"to_theta", to_json(c.branch.to_theta)}};
    for (const auto& k : c.branch.constraints) branch["constraints"].push_back(constraint_json(k));
    json j = {{"id", c.id()},
              {"tag", c.tag},
              {"size", c.size},
              {"names", {{"Gt", c.gt_name}, {"Ht", c.ht_name}, {"G", c.g_name}, {"H", c.h_name}, {"K", c.k_name}}},
              {"groups", {{"Gt", to_json(c.gt)}, {"G", to_json(c.g)}, {"K", to_json(c.k)}}},
              {"theta", space_json(c.theta)},
              {"pi", space_json(c.pi)},
              {"tau", space_json(c.tau)},
              {"theta_to_pi", to_json(c.theta_to_pi)},
              {"theta_to_tau", to_json(c.theta_to_tau)},
              {"pi_hw", to_json(c.pi_hw)},
              {"theta_hw", to_json(c.theta_hw)},
              {"tau_hw", to_json(c.tau_hw)},
              {"restricted_weyl", to_json(c.restricted_weyl)},
              {"lambda_rho", to_json(c.lambda_rho)},
              {"mu", c.mu ? to_json(*c.mu) : json(nullptr)},
              {"branch", branch},
              {"transfer", to_json(c.transfer)},
              {"relations", rels},
              {"independent", indep},
              {"ranks", c.ranks},
              {"central", c.central},
              {"degrees", c.degrees},
              {"hilbert", hil},
              {"cartan_helgason", ch_json(c.ch)}};
    return j;
}

CaseRecord case_from_json(const json& j) {
    CaseRecord c;
    c.tag = j.at("tag");
    c.size = j.at("size");
    const auto& nm = j.at("names");
    c.gt_name = nm.at("Gt");
    c.ht_name = nm.at("Ht");
    c.g_name = nm.at("G");
    c.h_name = nm.at("H");
    c.k_name = nm.at("K");
    c.gt = group_from_json(j.at("groups").at("Gt"));
    c.g = group_from_json(j.at("groups").at("G"));
    c.k = group_from_json(j.at("groups").at("K"));
    c.theta = space_from(j.at("theta"));
    c.pi = space_from(j.at("pi"));
    c.tau = space_from(j.at("tau"));
    c.theta_to_pi = affine_from_json(j.at("theta_to_pi"));
    c.theta_to_tau = affine_from_json(j.at("theta_to_tau"));
    c.pi_hw = affine_from_json(j.at("pi_hw"));
    c.theta_hw = affine_from_json(j.at("theta_hw"));
    c.tau_hw = affine_from_json(j.at("tau_hw"));
    c.restricted_weyl = weyl_from_json(j.at("restricted_weyl"));
    c.lambda_rho = affine_from_json(j.at("lambda_rho"));
    if (!j.at("mu").is_null()) c.mu = affine_from_json(j.at("mu"));
    const auto& b = j.at("branch");
    c.branch.free_names = b.at("free_names").get<std::vector<std::string>>();
    c.branch.free_count = c.branch.free_names.size();
    for (const auto& k : b.at("constraints")) c.branch.constraints.push_back(constraint_from(k));
    c.branch.to_theta = affine_from_json(b.at("to_theta"));
    c.transfer = affine_from_json(j.at("transfer"));
    for (const auto& r : j.at("relations")) {
        Relation rel{r.at("name"), {}};
        for (const auto& t : r.at("terms"))
            rel.terms.emplace_back(parse_rational(t.at("coeff")), symbol_from_json(t.at("symbol")));
        c.relations.push_back(std::move(rel));
    }
    for (const auto& s : j.at("independent")) c.independent.push_back(symbol_from_json(s));
    c.ranks = j.at("ranks").get<std::array<int, 3>>();
    c.central = j.value("central", 0);
    c.degrees = j.at("degrees").get<std::vector<int>>();
    for (const auto& f : j.at("hilbert"))
        c.hilbert.push_back({HilbertFactor::Kind(index_of(hilbert_kinds, f.at("kind"))), f.at("args").get<std::vector<long>>()});
    c.ch = ch_from(j.at("cartan_helgason"));
    return c;
}

json catalog_to_json(const std::vector<CaseRecord>& cases, int max_n) {
    json arr = json::array();
    for (const auto& c : cases) arr.push_back(to_json(c));
    return {{"version", kCatalogVersion}, {"max_n", max_n}, {"cases", arr}};
}

std::vector<CaseRecord> catalog_from_json(const json& doc, int max_n) {
    if (doc.at("version") != kCatalogVersion) throw std::runtime_error("catalog: unsupported version");
    if (max_n > doc.at("max_n").get<int>())
        throw std::runtime_error("catalog: built for max_n " + doc.at("max_n").dump() + ", requested " + std::to_string(max_n));
    std::vector<CaseRecord> out;
    for (const auto& j : doc.at("cases")) {
        CaseRecord c = case_from_json(j);
        if (c.size <= max_n) out.push_back(std::move(c));
    }
    return out;
}

std::vector<CaseRecord> load_catalog(const std::string& path, int max_n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog " + path);
    return catalog_from_json(json::parse(in), max_n);
}

void save_catalog(const std::string& path, const std::vector<CaseRecord>& cases, int max_n) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << catalog_to_json(cases, max_n).dump(1) << '\n';
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("BRANCHLAB_CATALOG"); env && *env) return env;
    return BRANCHLAB_CATALOG_PATH;
}

}  // namespace branchlab
