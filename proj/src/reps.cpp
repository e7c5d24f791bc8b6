#include "branchlab/reps.hpp"

#include <stdexcept>

namespace branchlab {

static GroupDescriptor simple(GroupDescriptor::Kind k, int n, WeylType w) {
    GroupDescriptor g;
    g.kind = k;
    g.n = n;
    g.weyl = std::move(w);
    g.rho = rho(g.weyl);
    return g;
}

static WeylType orthogonal_type(int n) {
    if (n < 2) throw std::invalid_argument("SO(n) needs n >= 2");
    if (n == 2) return WeylType::A(0);
    return n % 2 ? WeylType::B(n / 2) : WeylType::D(n / 2);
}

GroupDescriptor GroupDescriptor::U(int n) {
    if (n < 1) throw std::invalid_argument("U(n) needs n >= 1");
    return simple(Kind::U, n, WeylType::A(n - 1));
}
GroupDescriptor GroupDescriptor::SU(int n) {
    if (n < 2) throw std::invalid_argument("SU(n) needs n >= 2");
    return simple(Kind::SU, n, WeylType::A(n - 1));
}
GroupDescriptor GroupDescriptor::SO(int n) { return simple(Kind::SO, n, orthogonal_type(n)); }
GroupDescriptor GroupDescriptor::Spin(int n) { return simple(Kind::Spin, n, orthogonal_type(n)); }
GroupDescriptor GroupDescriptor::Sp(int n) { return simple(Kind::Sp, n, WeylType::C(n)); }
GroupDescriptor GroupDescriptor::G2() { return simple(Kind::G2, 2, WeylType::G2()); }

static GroupDescriptor compound(GroupDescriptor::Kind k, std::vector<GroupDescriptor> fs) {
    if (fs.empty()) throw std::invalid_argument("product of no groups");
    GroupDescriptor g;
    g.kind = k;
    std::vector<WeylType> ws;
    for (const auto& f : fs) {
        ws.push_back(f.weyl);
        g.rho.insert(g.rho.end(), f.rho.begin(), f.rho.end());
    }
    g.weyl = WeylType::Product(std::move(ws));
    g.factors = std::move(fs);
    return g;
}

GroupDescriptor GroupDescriptor::Product(std::vector<GroupDescriptor> fs) { return compound(Kind::Product, std::move(fs)); }
GroupDescriptor GroupDescriptor::AlmostProduct(std::vector<GroupDescriptor> fs) {
    return compound(Kind::AlmostProduct, std::move(fs));
}

std::size_t GroupDescriptor::factor_count() const {
    return (kind == Kind::Product || kind == Kind::AlmostProduct) ? factors.size() : 1;
}

std::string GroupDescriptor::name() const {
    switch (kind) {
        case Kind::U: return "U(" + std::to_string(n) + ")";
        case Kind::SU: return "SU(" + std::to_string(n) + ")";
        case Kind::SO: return "SO(" + std::to_string(n) + ")";
        case Kind::Spin: return "Spin(" + std::to_string(n) + ")";
        case Kind::Sp: return "Sp(" + std::to_string(n) + ")";
        case Kind::G2: return "G2";
        case Kind::Product:
        case Kind::AlmostProduct: {
            std::string s;
            for (std::size_t i = 0; i < factors.size(); ++i)
                s += (i ? (kind == Kind::Product ? "x" : ".") : "") + factors[i].name();
            return s;
        }
    }
    return "?";
}

static bool all_integral(const WeightVector& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

bool is_valid_label(const GroupDescriptor& g, const WeightVector& hw) {
    using K = GroupDescriptor::Kind;
    if (hw.size() != g.rank()) return false;
    if (g.kind == K::Product || g.kind == K::AlmostProduct) {
        auto parts = split_factors(g.weyl, hw);
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!is_valid_label(g.factors[i], parts[i])) return false;
        if (g.kind == K::AlmostProduct) {
            Rational s = 0;
            for (const auto& x : hw) s += x;
            if (!is_integer(s) || s.get_num() % 2 != 0) return false;
        }
        return true;
    }
    if (!is_dominant(g.weyl, hw)) return false;
    switch (g.kind) {
        case K::SU:
            return all_integral(hw) && hw.back() == 0;
        case K::Spin: {
            if (all_integral(hw)) return true;
            for (const auto& x : hw)
                if (!is_half_integer(x)) return false;
            return g.n > 2;
        }
        default: return all_integral(hw);
    }
}

void require_valid(const IrrepLabel& r) {
    if (!is_valid_label(r.group, r.highest_weight))
        throw std::invalid_argument("invalid label " + to_string(r.highest_weight) + " for " + r.group.name());
}

// SU(n) labels are U(n) labels; the centre is projected out before any pairing.
static WeightVector traceless(const WeightVector& v) {
    Rational mean = 0;
    for (const auto& x : v) mean += x;
    mean /= Rational(long(v.size()));
    WeightVector out = v;
    for (auto& x : out) x -= mean;
    return out;
}

static Rational simple_casimir(const GroupDescriptor& g, const WeightVector& hw) {
    WeightVector l = g.kind == GroupDescriptor::Kind::SU ? traceless(hw) : hw;
    WeightVector s = l;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += 2 * g.rho[i];
    return pairing(g.weyl, l, s);
}

std::vector<Rational> casimir_eigenvalue(const IrrepLabel& r) {
    require_valid(r);
    const auto& g = r.group;
    if (g.factor_count() == 1 && g.factors.empty()) return {simple_casimir(g, r.highest_weight)};
    std::vector<Rational> out;
    auto parts = split_factors(g.weyl, r.highest_weight);
    for (std::size_t i = 0; i < parts.size(); ++i) out.push_back(simple_casimir(g.factors[i], parts[i]));
    return out;
}

Rational casimir_total(const IrrepLabel& r) {
    Rational s = 0;
    for (const auto& c : casimir_eigenvalue(r)) s += c;
    return s;
}

static WeightVector shifted(const GroupDescriptor& g, const WeightVector& hw) {
    if (!g.factors.empty()) {
        WeightVector out;
        auto parts = split_factors(g.weyl, hw);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto p = shifted(g.factors[i], parts[i]);
            out.insert(out.end(), p.begin(), p.end());
        }
        return out;
    }
    WeightVector l = g.kind == GroupDescriptor::Kind::SU ? traceless(hw) : hw;
    for (std::size_t i = 0; i < l.size(); ++i) l[i] += g.rho[i];
    return l;
}

InfinitesimalCharacter infinitesimal_character(const IrrepLabel& r) {
    require_valid(r);
    return {r.group.weyl, dominant_representative(r.group.weyl, shifted(r.group, r.highest_weight))};
}

Integer dimension(const IrrepLabel& r) {
    require_valid(r);
    return weyl_dimension(r.group.weyl, r.group.rho, r.highest_weight);
}

WeightVector rho_shift_T(const WeightVector& ambient_rho, const WeightVector& rho_a, const RatMatrix& embed,
                         const WeightVector& nu) {
    if (embed.size() != ambient_rho.size()) throw std::invalid_argument("rho_shift_T: dimension mismatch");
    WeightVector out = ambient_rho;
    for (std::size_t i = 0; i < embed.size(); ++i) {
        if (embed[i].size() != nu.size() || embed[i].size() != rho_a.size())
            throw std::invalid_argument("rho_shift_T: dimension mismatch");
        for (std::size_t j = 0; j < nu.size(); ++j) out[i] += embed[i][j] * (nu[j] - rho_a[j]);
    }
    return out;
}

bool cartan_helgason_admissible(const WeightVector& lambda, const std::vector<WeightVector>& restricted_positive,
                                const std::function<bool(const WeightVector&)>& t_kill) {
    if (!t_kill(lambda)) return false;
    for (const auto& a : restricted_positive) {
        Rational q = inner_product(lambda, a) / inner_product(a, a);
        if (!is_integer(q) || q < 0) return false;
    }
    return true;
}

}  // namespace branchlab
