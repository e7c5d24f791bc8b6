#include "branchlab/dgx.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace branchlab {

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
    Poly p;
    p.add_term(e, c);
    return p;
}

Poly Poly::x() { return monomial({1, 0, 0}); }
Poly Poly::y() { return monomial({0, 1, 0}); }
Poly Poly::z() { return monomial({0, 0, 1}); }

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

Rational Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    Poly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    *this = std::move(out);
    return *this;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out(1);
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }

Rational Poly::eval(const Rational& x, const Rational& y, const Rational& z) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_)
        s += c * branchlab::pow(x, unsigned(e[0])) * branchlab::pow(y, unsigned(e[1])) * branchlab::pow(z, unsigned(e[2]));
    return s;
}

Poly Poly::substitute_z(const Rational& value) const {
    Poly out;
    for (const auto& [e, c] : terms_) out.add_term({e[0], e[1], 0}, c * branchlab::pow(value, unsigned(e[2])));
    return out;
}

Poly Poly::swap_xy() const {
    Poly out;
    for (const auto& [e, c] : terms_) out.add_term({e[1], e[0], e[2]}, c);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string s;
    static const char* names[] = {"x", "y", "z"};
    for (std::size_t t = 0; t < ts.size(); ++t) {
        auto [e, c] = ts[t];
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        s += t == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (e[std::size_t(v)] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[std::size_t(v)] > 1) mono += "^" + std::to_string(e[std::size_t(v)]);
        }
        if (mono.empty()) s += branchlab::to_string(a);
        else if (a == 1) s += mono;
        else s += branchlab::to_string(a) + "*" + mono;
    }
    return s;
}

std::vector<NamedPoly> dgx_generators() {
    const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
    return {
        {"r1", x + y + z + 1},
        {"r2", x.pow(2) + 6 * z * x + z.pow(2) + y.pow(2) + 6 * y + 1},
        {"r3", x.pow(3) + 15 * z * x.pow(2) + 15 * z.pow(2) * x + z.pow(3) + y.pow(3) + 15 * y.pow(2) + 15 * y + 1},
        {"r4", (x - 1) * (y - z)},
        {"q", Poly(rat(3, 4)) * (z - 9)},
        {"p1", x - 9},
        {"p2", y - 9},
    };
}

Poly dgx_generator(const std::string& name) {
    for (auto& g : dgx_generators())
        if (g.name == name) return g.poly;
    throw std::invalid_argument("unknown generator " + name);
}

std::vector<NamedPoly> r_generators() {
    std::vector<NamedPoly> out;
    for (const char* n : {"q", "r1", "r2", "r3", "r4"}) out.push_back({n, dgx_generator(n)});
    return out;
}

Poly r4_from_pfaffian() { return (Poly::z() - Poly::x()) * (Poly::y() - 1); }

Poly Combination::evaluate(const std::vector<NamedPoly>& gens) const {
    Poly out;
    for (const auto& [c, alpha] : terms) {
        Poly p(c);
        for (std::size_t i = 0; i < alpha.size(); ++i) p *= gens[i].poly.pow(unsigned(alpha[i]));
        out += p;
    }
    return out;
}

std::string Combination::to_string(const std::vector<NamedPoly>& gens) const {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& [c, alpha] = terms[t];
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        s += t == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += gens[i].name;
            if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
        }
        if (mono.empty()) s += branchlab::to_string(a);
        else if (a == 1) s += mono;
        else s += branchlab::to_string(a) + "*" + mono;
    }
    return s;
}

std::vector<std::vector<int>> generator_products(const std::vector<NamedPoly>& gens, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> alpha(gens.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == gens.size()) {
            out.push_back(alpha);
            return;
        }
        int d = gens[i].poly.degree();
        if (d <= 0) throw std::invalid_argument("generator_products: constant generator " + gens[i].name);
        for (int a = 0; a * d <= left; ++a) {
            alpha[i] = a;
            rec(i + 1, left - a * d);
        }
        alpha[i] = 0;
    };
    if (bound >= 0) rec(0, bound);
    return out;
}

namespace {

std::map<Exponent, std::size_t> monomial_rows(int bound) {
    std::map<Exponent, std::size_t> rows;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b)
            for (int c = 0; a + b + c <= bound; ++c) rows.emplace(Exponent{a, b, c}, 0);
    std::size_t i = 0;
    for (auto& [e, idx] : rows) idx = i++;
    return rows;
}

Poly product(const std::vector<NamedPoly>& gens, const std::vector<int>& alpha) {
    Poly p(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) p *= gens[i].poly.pow(unsigned(alpha[i]));
    return p;
}

void fill_column(RatMatrix& m, const std::map<Exponent, std::size_t>& rows, std::size_t col, const Poly& p) {
    for (const auto& [e, c] : p.terms()) m[rows.at(e)][col] = c;
}

std::vector<Rational> rhs(const std::map<Exponent, std::size_t>& rows, const Poly& f) {
    std::vector<Rational> b(rows.size(), Rational(0));
    for (const auto& [e, c] : f.terms()) {
        auto it = rows.find(e);
        if (it == rows.end()) throw std::invalid_argument("polynomial exceeds the degree bound");
        b[it->second] = c;
    }
    return b;
}

}  // namespace

std::optional<Combination> membership(const Poly& f, const std::vector<NamedPoly>& gens, int degree_bound) {
    if (degree_bound < f.degree()) throw std::invalid_argument("membership: degree_bound below deg f");
    auto prods = generator_products(gens, degree_bound);
    auto rows = monomial_rows(degree_bound);
    RatMatrix m(rows.size(), std::vector<Rational>(prods.size(), Rational(0)));
    for (std::size_t j = 0; j < prods.size(); ++j) fill_column(m, rows, j, product(gens, prods[j]));
    std::vector<Rational> sol;
    if (!solve(m, rhs(rows, f), sol)) return std::nullopt;
    Combination out;
    for (std::size_t j = 0; j < prods.size(); ++j)
        if (sol[j] != 0) out.terms.emplace_back(sol[j], prods[j]);
    return out;
}

SymmetryWitness x_not_in_R_witness(const std::vector<NamedPoly>& gens) {
    SymmetryWitness w;
    bool all_symmetric = true;
    for (const auto& g : gens) {
        Poly s = g.poly.substitute_z(1);
        bool sym = s == s.swap_xy();
        all_symmetric = all_symmetric && sym;
        w.transcript.push_back(g.name + "(x,y,1) = " + s.to_string() + (sym ? " : symmetric" : " : NOT symmetric"));
    }
    Poly x = Poly::x();
    bool x_sym = x == x.swap_xy();
    w.transcript.push_back(std::string("x(x,y,1) = x : ") + (x_sym ? "symmetric" : "not symmetric"));
    w.passed = all_symmetric && !x_sym;
    return w;
}

SymmetryWitness x_not_in_R_witness() { return x_not_in_R_witness(r_generators()); }

RxDecomposer::RxDecomposer(std::vector<NamedPoly> gens, int bound)
    : gens_(std::move(gens)), bound_(bound), g_products_(generator_products(gens_, bound)),
      h_products_(generator_products(gens_, bound - 1)), rows_(monomial_rows(bound)) {
    const std::size_t ng = g_products_.size();
    RatMatrix m(rows_.size(), std::vector<Rational>(ng + h_products_.size(), Rational(0)));
    for (std::size_t j = 0; j < ng; ++j) fill_column(m, rows_, j, product(gens_, g_products_[j]));
    for (std::size_t j = 0; j < h_products_.size(); ++j)
        fill_column(m, rows_, ng + j, product(gens_, h_products_[j]) * Poly::x());
    solver_ = std::make_unique<LinearSolver>(m);
}

std::optional<RxDecomposition> RxDecomposer::decompose(const Poly& f) const {
    if (f.degree() > bound_) throw std::invalid_argument("RxDecomposer: polynomial exceeds the bound");
    std::vector<Rational> sol;
    if (!solver_->solve(rhs(rows_, f), sol)) return std::nullopt;
    RxDecomposition d;
    const std::size_t ng = g_products_.size();
    for (std::size_t j = 0; j < sol.size(); ++j) {
        if (sol[j] == 0) continue;
        if (j < ng) d.g.terms.emplace_back(sol[j], g_products_[j]);
        else d.h.terms.emplace_back(sol[j], h_products_[j - ng]);
    }
    d.g_poly = d.g.evaluate(gens_);
    d.h_poly = d.h.evaluate(gens_);
    return d;
}

RxDecomposition decompose_R_plus_Rx(const Poly& f, int degree_bound) {
    if (degree_bound < f.degree()) throw std::invalid_argument("decompose_R_plus_Rx: degree_bound below deg f");
    RxDecomposer dec(r_generators(), degree_bound);
    if (auto d = dec.decompose(f)) return *d;
    for (const auto& [e, c] : f.terms())
        if (!dec.decompose(Poly::monomial(e))) throw std::runtime_error("no R + Rx decomposition for " + Poly::monomial(e).to_string());
    throw std::runtime_error("no R + Rx decomposition for " + f.to_string());
}

Poly q_a(const Poly& f, long a) { return f.substitute_z(Rational((a + 3) * (a + 3))); }

}  // namespace branchlab
