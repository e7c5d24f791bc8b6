#include "branchlab/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace branchlab {

WeightVector weight(std::initializer_list<Rational> xs) { return WeightVector(xs); }

WeightVector weight_from_ints(const std::vector<long>& xs) {
    WeightVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::string to_string(const WeightVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

WeylType WeylType::A(int n) {
    if (n < 0) throw std::invalid_argument("A(n) needs n >= 0");
    return {Kind::A, n, {}};
}
WeylType WeylType::B(int n) {
    if (n < 1) throw std::invalid_argument("B(n) needs n >= 1");
    return {Kind::B, n, {}};
}
WeylType WeylType::C(int n) {
    if (n < 1) throw std::invalid_argument("C(n) needs n >= 1");
    return {Kind::C, n, {}};
}
WeylType WeylType::D(int n) {
    if (n < 2) throw std::invalid_argument("D(n) needs n >= 2");
    return {Kind::D, n, {}};
}
WeylType WeylType::BC(int n) {
    if (n < 1) throw std::invalid_argument("BC(n) needs n >= 1");
    return {Kind::BC, n, {}};
}
WeylType WeylType::G2() { return {Kind::G2, 2, {}}; }
WeylType WeylType::Trivial() { return {Kind::Trivial, 0, {}}; }
WeylType WeylType::Product(std::vector<WeylType> fs) { return {Kind::Product, 0, std::move(fs)}; }

std::size_t WeylType::dim() const {
    switch (kind) {
        case Kind::A: return std::size_t(n) + 1;
        case Kind::B:
        case Kind::C:
        case Kind::D:
        case Kind::BC: return std::size_t(n);
        case Kind::G2: return 2;
        case Kind::Trivial: return 0;
        case Kind::Product: {
            std::size_t d = 0;
            for (const auto& f : factors) d += f.dim();
            return d;
        }
    }
    return 0;
}

std::string WeylType::name() const {
    switch (kind) {
        case Kind::A: return "A" + std::to_string(n);
        case Kind::B: return "B" + std::to_string(n);
        case Kind::C: return "C" + std::to_string(n);
        case Kind::D: return "D" + std::to_string(n);
        case Kind::BC: return "BC" + std::to_string(n);
        case Kind::G2: return "G2";
        case Kind::Trivial: return "1";
        case Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].name();
            return s;
        }
    }
    return "?";
}

static void check_len(const WeightVector& v, std::size_t n, const char* what) {
    if (v.size() != n) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

Rational inner_product(const WeightVector& v, const WeightVector& w) {
    check_len(w, v.size(), "inner_product");
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0 && sgn(w[i]) != 0) s += v[i] * w[i];
    return s;
}

Rational pairing(const WeylType& t, const WeightVector& v, const WeightVector& w) {
    if (t.kind != WeylType::Kind::G2) return inner_product(v, w);
    check_len(v, 2, "pairing");
    check_len(w, 2, "pairing");
    return 3 * v[0] * w[0] + Rational(3, 2) * (v[0] * w[1] + v[1] * w[0]) + v[1] * w[1];
}

static WeightVector unit(std::size_t n, std::size_t i, long c = 1) {
    WeightVector v(n, Rational(0));
    v[i] = c;
    return v;
}

static WeightVector combo(std::size_t n, std::size_t i, long ci, std::size_t j, long cj) {
    WeightVector v(n, Rational(0));
    v[i] += ci;
    v[j] += cj;
    return v;
}

std::vector<WeightVector> positive_roots(const WeylType& t) {
    using K = WeylType::Kind;
    std::vector<WeightVector> out;
    std::size_t n = t.dim();
    switch (t.kind) {
        case K::A:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) out.push_back(combo(n, i, 1, j, -1));
            break;
        case K::B:
        case K::C:
        case K::D:
        case K::BC:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    out.push_back(combo(n, i, 1, j, -1));
                    out.push_back(combo(n, i, 1, j, 1));
                }
            for (std::size_t i = 0; i < n; ++i) {
                if (t.kind == K::B || t.kind == K::BC) out.push_back(unit(n, i));
                if (t.kind == K::C || t.kind == K::BC) out.push_back(unit(n, i, 2));
            }
            break;
        case K::G2:
            for (auto p : {std::pair{2, -3}, {-1, 2}, {1, -1}, {0, 1}, {-1, 3}, {1, 0}})
                out.push_back(weight_from_ints({p.first, p.second}));
            break;
        case K::Trivial:
        case K::Product: throw std::invalid_argument("positive_roots: decompose " + t.name() + " first");
    }
    return out;
}

std::vector<WeightVector> simple_roots(const WeylType& t) {
    using K = WeylType::Kind;
    std::vector<WeightVector> out;
    std::size_t n = t.dim();
    switch (t.kind) {
        case K::A:
            for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(combo(n, i, 1, i + 1, -1));
            break;
        case K::B:
        case K::C:
        case K::BC:
        case K::D:
            for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(combo(n, i, 1, i + 1, -1));
            if (t.kind == K::D) out.push_back(combo(n, n - 2, 1, n - 1, 1));
            else if (t.kind == K::C) out.push_back(unit(n, n - 1, 2));
            else out.push_back(unit(n, n - 1));
            break;
        case K::G2:
            out.push_back(weight_from_ints({2, -3}));
            out.push_back(weight_from_ints({-1, 2}));
            break;
        case K::Trivial:
        case K::Product: throw std::invalid_argument("simple_roots: decompose " + t.name() + " first");
    }
    return out;
}

WeightVector rho(const WeylType& t) {
    if (t.kind == WeylType::Kind::Product || t.kind == WeylType::Kind::Trivial)
        throw std::invalid_argument("rho: decompose " + t.name() + " first");
    WeightVector r(t.dim(), Rational(0));
    for (const auto& a : positive_roots(t))
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += a[i];
    for (auto& x : r) x /= 2;
    return r;
}

std::vector<WeightVector> split_factors(const WeylType& t, const WeightVector& v) {
    check_len(v, t.dim(), "split_factors");
    if (t.kind != WeylType::Kind::Product) return {v};
    std::vector<WeightVector> out;
    std::size_t off = 0;
    for (const auto& f : t.factors) {
        out.emplace_back(v.begin() + long(off), v.begin() + long(off + f.dim()));
        off += f.dim();
    }
    return out;
}

WeightVector reflect(const WeylType& t, const WeightVector& alpha, const WeightVector& v) {
    Rational c = 2 * pairing(t, v, alpha) / pairing(t, alpha, alpha);
    WeightVector out = v;
    if (c == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(alpha[i]) != 0) out[i] -= c * alpha[i];
    return out;
}

bool is_dominant(const WeylType& t, const WeightVector& v) {
    check_len(v, t.dim(), "is_dominant");
    if (t.kind == WeylType::Kind::Trivial) return true;
    if (t.kind == WeylType::Kind::Product) {
        auto parts = split_factors(t, v);
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!is_dominant(t.factors[i], parts[i])) return false;
        return true;
    }
    using K = WeylType::Kind;
    if (t.kind == K::G2) {
        for (const auto& a : simple_roots(t))
            if (pairing(t, v, a) < 0) return false;
        return true;
    }
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (v[i] < v[i + 1]) return false;
    if (n == 0 || t.kind == K::A) return true;
    if (t.kind == K::D) return n < 2 || v[n - 2] + v[n - 1] >= 0;
    return sgn(v[n - 1]) >= 0;
}

std::vector<WeightVector> weyl_orbit(const WeylType& t, const WeightVector& v) {
    check_len(v, t.dim(), "weyl_orbit");
    if (t.kind == WeylType::Kind::Trivial) return {v};
    if (t.kind == WeylType::Kind::Product) {
        auto parts = split_factors(t, v);
        std::vector<WeightVector> acc{WeightVector{}};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<WeightVector> next;
            for (const auto& head : acc)
                for (const auto& o : weyl_orbit(t.factors[i], parts[i])) {
                    WeightVector w = head;
                    w.insert(w.end(), o.begin(), o.end());
                    next.push_back(std::move(w));
                }
            acc = std::move(next);
        }
        std::sort(acc.begin(), acc.end());
        return acc;
    }
    if (t.kind == WeylType::Kind::A) {
        WeightVector w = v;
        std::sort(w.begin(), w.end());
        std::vector<WeightVector> out;
        do out.push_back(w);
        while (std::next_permutation(w.begin(), w.end()));
        return out;
    }
    auto simple = simple_roots(t);
    std::set<WeightVector> seen{v};
    std::vector<WeightVector> frontier{v};
    while (!frontier.empty()) {
        std::vector<WeightVector> next;
        for (const auto& w : frontier)
            for (const auto& a : simple) {
                auto r = reflect(t, a, w);
                if (seen.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

WeightVector dominant_representative(const WeylType& t, const WeightVector& v) {
    using K = WeylType::Kind;
    check_len(v, t.dim(), "dominant_representative");
    switch (t.kind) {
        case K::Trivial: return v;
        case K::Product: {
            WeightVector out;
            auto parts = split_factors(t, v);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                auto d = dominant_representative(t.factors[i], parts[i]);
                out.insert(out.end(), d.begin(), d.end());
            }
            return out;
        }
        case K::A: {
            WeightVector out = v;
            std::sort(out.begin(), out.end(), std::greater<>());
            return out;
        }
        case K::B:
        case K::C:
        case K::BC:
        case K::D: {
            WeightVector out = v;
            std::size_t negatives = 0;
            bool has_zero = false;
            for (auto& x : out) {
                if (x < 0) {
                    ++negatives;
                    x = -x;
                }
                if (x == 0) has_zero = true;
            }
            std::sort(out.begin(), out.end(), std::greater<>());
            if (t.kind == K::D && negatives % 2 == 1 && !has_zero) out.back() = -out.back();
            return out;
        }
        case K::G2:
            for (const auto& w : weyl_orbit(t, v))
                if (is_dominant(t, w)) return w;
            break;
    }
    throw std::logic_error("dominant_representative: no dominant element found");
}

bool weyl_orbit_equal(const WeylType& t, const WeightVector& v, const WeightVector& w) {
    check_len(w, v.size(), "weyl_orbit_equal");
    return dominant_representative(t, v) == dominant_representative(t, w);
}

Integer weyl_dimension(const WeylType& t, const WeightVector& rho_t, const WeightVector& lambda) {
    check_len(lambda, t.dim(), "weyl_dimension");
    check_len(rho_t, t.dim(), "weyl_dimension");
    if (!is_dominant(t, lambda)) throw std::invalid_argument("weyl_dimension: non-dominant weight " + to_string(lambda));
    if (t.kind == WeylType::Kind::Trivial) return 1;
    if (t.kind == WeylType::Kind::Product) {
        auto ls = split_factors(t, lambda);
        auto rs = split_factors(t, rho_t);
        Integer d = 1;
        for (std::size_t i = 0; i < ls.size(); ++i) d *= weyl_dimension(t.factors[i], rs[i], ls[i]);
        return d;
    }
    WeightVector shifted = lambda;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += rho_t[i];
    using K = WeylType::Kind;
    Rational num = 1, den = 1;
    if (t.kind == K::A || t.kind == K::B || t.kind == K::C || t.kind == K::D) {
        const std::size_t n = shifted.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                num *= shifted[i] - shifted[j];
                den *= rho_t[i] - rho_t[j];
                if (t.kind == K::A) continue;
                num *= shifted[i] + shifted[j];
                den *= rho_t[i] + rho_t[j];
            }
            if (t.kind == K::B || t.kind == K::C) {
                num *= shifted[i];
                den *= rho_t[i];
            }
        }
    } else {
        for (const auto& a : positive_roots(t)) {
            num *= pairing(t, shifted, a);
            den *= pairing(t, rho_t, a);
        }
    }
    Rational d = num / den;
    if (!is_integer(d)) throw std::logic_error("weyl_dimension: non-integral result");
    return d.get_num();
}

}  // namespace branchlab
