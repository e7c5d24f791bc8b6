#include "branchlab/catalog.hpp"

namespace branchlab {

namespace {

using V = WeightVector;
using G = GroupDescriptor;
using LC = LinearConstraint;
using S = Symbol;

Rational q(long a, long b = 1) { return rat(a, b); }

V zeros(std::size_t n) { return V(n, Rational(0)); }

V cat(V a, const V& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

LC ge(std::vector<long> c, long k = 0) { return {LC::Kind::NonNegative, std::move(c), k}; }
LC even(std::vector<long> c, long k = 0) { return {LC::Kind::Even, std::move(c), k}; }

// coefficient vector with entries at the given positions
std::vector<long> co(std::size_t n, std::initializer_list<std::pair<int, long>> entries) {
    std::vector<long> v(n, 0);
    for (auto [i, c] : entries) v[std::size_t(i)] += c;
    return v;
}

ParamSpace space(std::vector<std::string> names, std::vector<bool> sign, std::vector<LC> cs = {}) {
    return {std::move(names), std::move(sign), std::move(cs)};
}

std::vector<LC> decreasing(std::size_t n, std::size_t total, std::size_t offset = 0) {
    std::vector<LC> out;
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(ge(co(total, {{int(offset + i), 1}, {int(offset + i + 1), -1}})));
    return out;
}

std::vector<std::string> cat_names(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<std::string> indexed(const std::string& base, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(base + std::to_string(i));
    return out;
}

S cas(S::Side side, int factor = -1, Rational scale = 1) {
    static const char* base[] = {"C_Gt", "C_K", "C_G"};
    std::string name = base[int(side)];
    if (factor >= 0) name += "^(" + std::to_string(factor + 1) + ")";
    if (scale != 1) name = to_string(scale) + "*" + name;
    return {side, S::Kind::Casimir, factor, 0, 0, scale, name};
}

S eul(S::Side side, int coord) { return {side, S::Kind::Euler, -1, coord, 0, 1, side == S::Side::Q ? "E_K" : "E_G"}; }

S pw(S::Side side, int exponent, int index, Rational scale = 1) {
    static const char* base[] = {"P_", "Q_", "R_"};
    return {side, S::Kind::PowerSum, -1, 0, exponent, scale, base[int(side)] + std::to_string(index)};
}

S pf(S::Side side, int index, Rational scale) {
    return {side, S::Kind::Pfaffian, -1, 0, 0, scale, std::string("R_") + std::to_string(index)};
}

constexpr S::Side P = S::Side::P;
constexpr S::Side Q = S::Side::Q;
constexpr S::Side R = S::Side::R;

Relation rel(std::string name, std::vector<std::pair<Rational, S>> terms) { return {std::move(name), std::move(terms)}; }

Relation casimir_rel(Rational cp, Rational cr, Rational cq) {
    return rel("casimir", {{cp, cas(P)}, {cr, cas(R)}, {cq, cas(Q)}});
}

HilbertFactor hf(HilbertFactor::Kind k, std::vector<long> args = {}) { return {k, std::move(args)}; }
const HilbertFactor kLinear{HilbertFactor::Kind::Linear, {}};
const HilbertFactor kQuadratic{HilbertFactor::Kind::Quadratic, {}};

V unit(std::size_t n, std::size_t i, Rational c = 1) {
    V v = zeros(n);
    v[i] = c;
    return v;
}

CartanHelgason sphere_ch(std::size_t rank) {
    CartanHelgason ch;
    ch.present = true;
    ch.restricted_positive = {unit(rank, 0)};
    for (std::size_t i = 1; i < rank; ++i) ch.zero_coords.push_back(int(i));
    return ch;
}

// h_i = (e_{2i-1} + e_{2i}) / 2 on `total` coordinates
V h(std::size_t total, std::size_t i) {
    V v = zeros(total);
    v[2 * i] = q(1, 2);
    v[2 * i + 1] = q(1, 2);
    return v;
}

V add(V a, const V& b, Rational c = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

std::vector<std::pair<int, int>> pairs(std::size_t m) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < m; ++i) out.emplace_back(int(2 * i), int(2 * i + 1));
    return out;
}

// Branch rule with one free parameter per entry, constraints over (pi || free).
BranchRule branch(std::vector<std::string> free, std::vector<LC> cs, std::size_t pi_dim,
                  const std::function<V(const V&)>& to_theta) {
    BranchRule b;
    b.free_count = free.size();
    b.free_names = std::move(free);
    b.constraints = std::move(cs);
    b.to_theta = affine_from(pi_dim + b.free_count, to_theta);
    return b;
}

CaseRecord case_i(int n) {
    CaseRecord c;
    c.tag = "i";
    c.size = n;
    c.gt_name = "SO(" + std::to_string(2 * n + 2) + ")";
    c.ht_name = "SO(" + std::to_string(2 * n + 1) + ")";
    c.g_name = "U(" + std::to_string(n + 1) + ")";
    c.h_name = "U(" + std::to_string(n) + ")";
    c.k_name = "U(" + std::to_string(n) + ")xU(1)";
    c.gt = G::SO(2 * n + 2);
    c.g = G::U(n + 1);
    c.k = G::Product({G::U(n), G::U(1)});
    std::size_t N = std::size_t(n) + 1;
    c.theta = space({"k", "l"}, {false, false});
    c.pi = space({"j"}, {false});
    c.tau = space({"a"}, {true});
    c.theta_to_pi = affine_from(2, [](const V& t) { return V{t[0] + t[1]}; });
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[0] - t[1]}; });
    c.pi_hw = affine_from(1, [N](const V& p) { return unit(N, 0, p[0]); });
    c.theta_hw = affine_from(2, [N](const V& t) { return add(unit(N, 0, t[0]), unit(N, N - 1, -t[1])); });
    c.tau_hw = affine_from(1, [N](const V& p) { return unit(N, N - 1, p[0]); });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [n](const V& p) { return V{p[0] + n}; });
    c.branch = branch({"k"}, {ge({0, 1}), ge({1, -1})}, 1, [](const V& x) { return V{x[1], x[0] - x[1]}; });
    c.transfer = affine_from(2, [n](const V& x) {
        V v{(x[0] + x[1]) / 2};
        for (int i = 1; i < n; ++i) v.push_back(q(n - 2 * i, 2));
        v.push_back((x[1] - x[0]) / 2);
        return v;
    });
    c.relations = {casimir_rel(1, -2, 1)};
    c.independent = {cas(P), eul(Q, n)};
    c.ranks = {1, 1, 2};
    c.degrees = {1, 2};
    c.hilbert = {kQuadratic, kLinear};
    c.ch = sphere_ch(N);
    return c;
}

CaseRecord case_i_prime(int n) {
    CaseRecord c = case_i(n);
    c.tag = "i'";
    c.ht_name = "SO(" + std::to_string(2 * n + 1) + ")";
    c.g_name = "SU(" + std::to_string(n + 1) + ")";
    c.h_name = "SU(" + std::to_string(n) + ")";
    c.k_name = "U(" + std::to_string(n) + ")";
    c.g = G::SU(n + 1);
    c.k = G::U(n);
    std::size_t N = std::size_t(n) + 1;
    c.tau = space({"c"}, {true});
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[1] - t[0]}; });
    c.theta_hw = affine_from(2, [N](const V& t) {
        V v(N, t[1]);
        v[0] = t[0] + t[1];
        v[N - 1] = 0;
        return v;
    });
    c.tau_hw = affine_from(1, [n](const V& p) { return V(std::size_t(n), p[0]); });
    c.transfer = affine_from(2, [n](const V& x) {
        Rational a = -x[1];
        V v{(x[0] + a) / 2};
        for (int i = 1; i < n; ++i) v.push_back(q(n - 2 * i, 2));
        v.push_back((a - x[0]) / 2);
        for (auto& t : v) t -= a / (n + 1);
        return v;
    });
    c.relations = {casimir_rel(1, -2, q(n - 1, long(n) * (n + 1)))};
    c.independent = {cas(P), eul(Q, 0)};
    return c;
}

CaseRecord case_ii_odd(int m) {
    CaseRecord c;
    c.tag = "ii_odd";
    c.size = m;
    const std::size_t M = std::size_t(m), D = 2 * M - 1;
    c.gt_name = "SO(" + std::to_string(4 * m) + ")";
    c.ht_name = "U(" + std::to_string(2 * m) + ")";
    c.g_name = "SO(" + std::to_string(4 * m - 1) + ")";
    c.h_name = "U(" + std::to_string(2 * m - 1) + ")";
    c.k_name = "SO(" + std::to_string(4 * m - 2) + ")";
    c.gt = G::SO(4 * m);
    c.g = G::SO(4 * m - 1);
    c.k = G::SO(4 * m - 2);
    c.theta = space(alternating_concat(indexed("j", M), indexed("k", M - 1)), std::vector<bool>(D, false), decreasing(D, D));
    c.pi = space(indexed("j", M), std::vector<bool>(M, false), decreasing(M, M));
    c.tau = space(indexed("k", M - 1), std::vector<bool>(M - 1, false), decreasing(M - 1, M - 1));
    c.theta_to_pi = affine_from(D, [M](const V& t) {
        V v;
        for (std::size_t i = 0; i < M; ++i) v.push_back(t[2 * i]);
        return v;
    });
    c.theta_to_tau = affine_from(D, [M](const V& t) {
        V v;
        for (std::size_t i = 0; i + 1 < M; ++i) v.push_back(t[2 * i + 1]);
        return v;
    });
    c.pi_hw = affine_from(M, [](const V& j) { return alternating_concat(j, j); });
    c.theta_hw = affine_from(D, [](const V& t) { return t; });
    c.tau_hw = affine_from(M - 1, [](const V& k) { return alternating_concat(cat(k, {Rational(0)}), k); });
    c.restricted_weyl = WeylType::C(m);
    c.lambda_rho = affine_from(M, [m](const V& j) {
        V v;
        for (int i = 1; i <= m; ++i) v.push_back(2 * j[std::size_t(i - 1)] + 4 * (m - i) + 1);
        return v;
    });
    c.mu = affine_from(M - 1, [m](const V& k) {
        V v;
        for (int i = 1; i < m; ++i) v.push_back(2 * k[std::size_t(i - 1)] + 4 * (m - i) - 1);
        return v;
    });
    std::vector<LC> bc;
    const std::size_t T = M + M - 1;
    for (std::size_t i = 0; i + 1 < M; ++i) {
        bc.push_back(ge(co(T, {{int(i), 1}, {int(M + i), -1}})));
        bc.push_back(ge(co(T, {{int(M + i), 1}, {int(i + 1), -1}})));
    }
    c.branch = branch(indexed("k", M - 1), bc, M, [M](const V& x) {
        V j(x.begin(), x.begin() + long(M)), k(x.begin() + long(M), x.end());
        return alternating_concat(j, k);
    });
    c.transfer = affine_from(M + M - 1, [M, m](const V& x) {
        V a, b;
        for (std::size_t i = 0; i < M; ++i) a.push_back(x[i] / 2);
        for (int i = 1; i < m; ++i) b.push_back(x[M + std::size_t(i - 1)] + 2 * (m - i) - q(1, 2));
        return alternating_concat(a, b);
    });
    for (int k = 1; k <= m; ++k) {
        Rational p2 = pow(Rational(2), unsigned(2 * k));
        c.relations.push_back(rel("P_" + std::to_string(k) + "+Q_" + std::to_string(k) + "=2^" + std::to_string(2 * k) +
                                      "R_" + std::to_string(k),
                                  {{1, pw(P, 2 * k, k)}, {1, pw(Q, 2 * k, k)}, {-p2, pw(R, 2 * k, k)}}));
    }
    c.relations.push_back(casimir_rel(1, -2, 1));
    for (int k = 1; k <= m; ++k) c.independent.push_back(pw(P, 2 * k, k));
    for (int k = 1; k < m; ++k) c.independent.push_back(pw(Q, 2 * k, k));
    c.ranks = {m, m - 1, 2 * m - 1};
    for (int k = 1; k < m; ++k) c.degrees.insert(c.degrees.end(), {2 * k, 2 * k});
    c.degrees.push_back(2 * m);
    c.ch.present = true;
    const std::size_t N = 2 * M;
    for (std::size_t i = 0; i < M; ++i) c.ch.restricted_positive.push_back(add(zeros(N), h(N, i), 2));
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t k = i + 1; k < M; ++k) {
            c.ch.restricted_positive.push_back(add(h(N, i), h(N, k), -1));
            c.ch.restricted_positive.push_back(add(h(N, i), h(N, k), 1));
        }
    c.ch.equal_pairs = pairs(M);
    return c;
}

CaseRecord case_ii_even(int m) {
    CaseRecord c;
    c.tag = "ii_even";
    c.size = m;
    const std::size_t M = std::size_t(m), D = 2 * M;
    c.gt_name = "SO(" + std::to_string(4 * m + 2) + ")";
    c.ht_name = "U(" + std::to_string(2 * m + 1) + ")";
    c.g_name = "SO(" + std::to_string(4 * m + 1) + ")";
    c.h_name = "U(" + std::to_string(2 * m) + ")";
    c.k_name = "SO(" + std::to_string(4 * m) + ")";
    c.gt = G::SO(4 * m + 2);
    c.g = G::SO(4 * m + 1);
    c.k = G::SO(4 * m);
    c.theta = space(alternating_concat(indexed("j", M), indexed("k", M)), std::vector<bool>(D, false), decreasing(D, D));
    c.pi = space(indexed("j", M), std::vector<bool>(M, false), decreasing(M, M));
    c.tau = space(indexed("k", M), std::vector<bool>(M, false), decreasing(M, M));
    c.theta_to_pi = affine_from(D, [M](const V& t) {
        V v;
        for (std::size_t i = 0; i < M; ++i) v.push_back(t[2 * i]);
        return v;
    });
    c.theta_to_tau = affine_from(D, [M](const V& t) {
        V v;
        for (std::size_t i = 0; i < M; ++i) v.push_back(t[2 * i + 1]);
        return v;
    });
    c.pi_hw = affine_from(M, [](const V& j) { return alternating_concat(cat(j, {Rational(0)}), j); });
    c.theta_hw = affine_from(D, [](const V& t) { return t; });
    c.tau_hw = affine_from(M, [](const V& k) { return alternating_concat(k, k); });
    c.restricted_weyl = WeylType::BC(m);
    c.lambda_rho = affine_from(M, [m](const V& j) {
        V v;
        for (int i = 1; i <= m; ++i) v.push_back(2 * j[std::size_t(i - 1)] + 4 * (m - i) + 3);
        return v;
    });
    c.mu = affine_from(M, [m](const V& k) {
        V v;
        for (int i = 1; i <= m; ++i) v.push_back(2 * k[std::size_t(i - 1)] + 4 * (m - i) + 1);
        return v;
    });
    std::vector<LC> bc;
    const std::size_t T = 2 * M;
    for (std::size_t i = 0; i < M; ++i) {
        bc.push_back(ge(co(T, {{int(i), 1}, {int(M + i), -1}})));
        if (i + 1 < M) bc.push_back(ge(co(T, {{int(M + i), 1}, {int(i + 1), -1}})));
        else bc.push_back(ge(co(T, {{int(M + i), 1}})));
    }
    c.branch = branch(indexed("k", M), bc, M, [M](const V& x) {
        V j(x.begin(), x.begin() + long(M)), k(x.begin() + long(M), x.end());
        return alternating_concat(j, k);
    });
    c.transfer = affine_from(2 * M, [M, m](const V& x) {
        V a, b;
        for (std::size_t i = 0; i < M; ++i) a.push_back(x[i] / 2);
        for (int i = 1; i <= m; ++i) b.push_back(x[M + std::size_t(i - 1)] + 2 * (m - i) + q(1, 2));
        return alternating_concat(a, b);
    });
    for (int k = 1; k <= m; ++k) {
        Rational p2 = pow(Rational(2), unsigned(2 * k));
        c.relations.push_back(rel("P_" + std::to_string(k) + "+Q_" + std::to_string(k) + "=2^" + std::to_string(2 * k) +
                                      "R_" + std::to_string(k),
                                  {{1, pw(P, 2 * k, k)}, {1, pw(Q, 2 * k, k)}, {-p2, pw(R, 2 * k, k)}}));
    }
    c.relations.push_back(casimir_rel(1, -2, 1));
    for (int k = 1; k <= m; ++k) c.independent.push_back(pw(P, 2 * k, k));
    for (int k = 1; k <= m; ++k) c.independent.push_back(pw(Q, 2 * k, k));
    c.ranks = {m, m, 2 * m};
    for (int k = 1; k <= m; ++k) c.degrees.insert(c.degrees.end(), {2 * k, 2 * k});
    c.ch.present = true;
    const std::size_t N = 2 * M + 1;
    for (std::size_t i = 0; i < M; ++i) {
        c.ch.restricted_positive.push_back(h(N, i));
        c.ch.restricted_positive.push_back(add(zeros(N), h(N, i), 2));
    }
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t k = i + 1; k < M; ++k) {
            c.ch.restricted_positive.push_back(add(h(N, i), h(N, k), -1));
            c.ch.restricted_positive.push_back(add(h(N, i), h(N, k), 1));
        }
    c.ch.equal_pairs = pairs(M);
    c.ch.zero_coords = {int(N - 1)};
    return c;
}

CaseRecord case_iii(int n) {
    CaseRecord c;
    c.tag = "iii";
    c.size = n;
    const std::size_t N = 2 * std::size_t(n) + 2;
    c.gt_name = "SU(" + std::to_string(N) + ")";
    c.ht_name = "U(" + std::to_string(N - 1) + ")";
    c.g_name = "Sp(" + std::to_string(n + 1) + ")";
    c.h_name = "Sp(" + std::to_string(n) + ")xU(1)";
    c.k_name = "Sp(" + std::to_string(n) + ")xSp(1)";
    c.gt = G::SU(int(N));
    c.g = G::Sp(n + 1);
    c.k = G::Product({G::Sp(n), G::Sp(1)});
    c.theta = space({"k", "l"}, {false, false}, {ge({1, -1}), even({1, -1})});
    c.pi = space({"j"}, {false});
    c.tau = space({"p"}, {false}, {even({1})});
    c.theta_to_pi = affine_from(2, [](const V& t) { return V{(t[0] + t[1]) / 2}; });
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[0] - t[1]}; });
    c.pi_hw = affine_from(1, [N](const V& p) {
        V v(N, p[0]);
        v[0] = 2 * p[0];
        v[N - 1] = 0;
        return v;
    });
    c.theta_hw = affine_from(2, [n](const V& t) {
        V v = zeros(std::size_t(n) + 1);
        v[0] = t[0];
        v[1] = t[1];
        return v;
    });
    c.tau_hw = affine_from(1, [n](const V& p) { return unit(std::size_t(n) + 1, std::size_t(n), p[0]); });
    c.restricted_weyl = WeylType::BC(1);
    c.lambda_rho = affine_from(1, [n](const V& p) { return V{2 * p[0] + 2 * n + 1}; });
    c.branch = branch({"k"}, {ge({-1, 1}), ge({2, -1})}, 1, [](const V& x) { return V{x[1], 2 * x[0] - x[1]}; });
    c.transfer = affine_from(2, [n](const V& x) {
        V v{x[0] / 2 + x[1] / 2 + q(1, 2), x[0] / 2 - x[1] / 2 - q(1, 2)};
        for (int i = n - 1; i >= 1; --i) v.push_back(i);
        return v;
    });
    c.relations = {casimir_rel(2, -2, 1)};
    c.independent = {cas(P), cas(Q)};
    c.ranks = {1, 1, 2};
    c.degrees = {2, 2};
    c.hilbert = {hf(HilbertFactor::Kind::WeightPair, {2, -2}), kQuadratic};
    c.ch.present = true;
    c.ch.traceless = true;
    V hh = zeros(N);
    hh[0] = q(1, 2);
    hh[N - 1] = q(-1, 2);
    c.ch.restricted_positive = {hh, add(zeros(N), hh, 2)};
    for (std::size_t i = 1; i + 1 < N; ++i) c.ch.zero_coords.push_back(int(i));
    c.ch.opposite_pairs = {{0, int(N - 1)}};
    return c;
}

CaseRecord case_iv(int n) {
    CaseRecord c;
    c.tag = "iv";
    c.size = n;
    const std::size_t Nn = std::size_t(n), D = 2 * Nn + 1;
    c.gt_name = "U(" + std::to_string(2 * n + 2) + ")";
    c.ht_name = "Sp(" + std::to_string(n + 1) + ")";
    c.g_name = "U(" + std::to_string(2 * n + 1) + ")";
    c.h_name = "Sp(" + std::to_string(n) + ")";
    c.k_name = "U(" + std::to_string(2 * n) + ")xU(1)";
    c.gt = G::U(2 * n + 2);
    c.g = G::U(2 * n + 1);
    c.k = G::Product({G::U(2 * n), G::U(1)});
    c.theta = space(alternating_concat(indexed("j", Nn + 1), indexed("k", Nn)), std::vector<bool>(D, true), decreasing(D, D));
    c.pi = space(indexed("j", Nn + 1), std::vector<bool>(Nn + 1, true), decreasing(Nn + 1, Nn + 1));
    c.tau = space(cat_names(indexed("k", Nn), {"c"}), std::vector<bool>(Nn + 1, true), decreasing(Nn, Nn + 1));
    c.theta_to_pi = affine_from(D, [Nn](const V& t) {
        V v;
        for (std::size_t i = 0; i <= Nn; ++i) v.push_back(t[2 * i]);
        return v;
    });
    c.theta_to_tau = affine_from(D, [Nn](const V& t) {
        V v;
        Rational s = 0;
        for (std::size_t i = 0; i < t.size(); ++i) s += (i % 2 == 0) ? t[i] : -t[i];
        for (std::size_t i = 0; i < Nn; ++i) v.push_back(t[2 * i + 1]);
        v.push_back(s);
        return v;
    });
    c.pi_hw = affine_from(Nn + 1, [](const V& j) { return alternating_concat(j, j); });
    c.theta_hw = affine_from(D, [](const V& t) { return t; });
    c.tau_hw = affine_from(Nn + 1, [Nn](const V& p) {
        V k(p.begin(), p.begin() + long(Nn));
        return cat(alternating_concat(k, k), {p[Nn]});
    });
    c.restricted_weyl = WeylType::A(n);
    c.lambda_rho = affine_from(Nn + 1, [n](const V& j) {
        V v;
        for (int i = 1; i <= n + 1; ++i) v.push_back(2 * j[std::size_t(i - 1)] + 2 * n - 4 * i + 4);
        return v;
    });
    c.mu = affine_from(Nn + 1, [n](const V& p) {
        V v;
        for (int i = 1; i <= n; ++i) v.push_back(2 * p[std::size_t(i - 1)] + 2 * n - 4 * i + 2);
        return v;
    });
    std::vector<LC> bc;
    const std::size_t T = 2 * Nn + 1;
    for (std::size_t i = 0; i < Nn; ++i) {
        bc.push_back(ge(co(T, {{int(i), 1}, {int(Nn + 1 + i), -1}})));
        bc.push_back(ge(co(T, {{int(Nn + 1 + i), 1}, {int(i + 1), -1}})));
    }
    c.branch = branch(indexed("k", Nn), bc, Nn + 1, [Nn](const V& x) {
        V j(x.begin(), x.begin() + long(Nn + 1)), k(x.begin() + long(Nn + 1), x.end());
        return alternating_concat(j, k);
    });
    c.transfer = affine_from(2 * Nn + 2, [Nn, n](const V& x) {
        V a, b;
        for (std::size_t i = 0; i <= Nn; ++i) a.push_back(x[i] / 2);
        for (int i = 1; i <= n; ++i) b.push_back(x[Nn + std::size_t(i)] + n - 2 * i + 1);
        return alternating_concat(a, b);
    });
    for (int k = 1; k <= n + 1; ++k) {
        Rational p2 = pow(Rational(2), unsigned(k));
        c.relations.push_back(rel("P_" + std::to_string(k) + "+Q_" + std::to_string(k) + "=2^" + std::to_string(k) + "R_" +
                                      std::to_string(k),
                                  {{1, pw(P, k, k)}, {1, pw(Q, k, k)}, {-p2, pw(R, k, k)}}));
    }
    c.relations.push_back(rel("casimir", {{1, cas(P)}, {-2, cas(R)}, {1, cas(Q, 0)}}));
    for (int k = 1; k <= n + 1; ++k) c.independent.push_back(pw(P, k, k));
    for (int k = 1; k <= n; ++k) c.independent.push_back(pw(Q, k, k));
    c.ranks = {n, n, 2 * n};
    c.central = 1;
    c.degrees = {1};
    for (int k = 2; k <= n; ++k) c.degrees.insert(c.degrees.end(), {k, k});
    c.degrees.push_back(n + 1);
    c.hilbert = {hf(HilbertFactor::Kind::Combin, {n})};
    c.ch.present = true;
    const std::size_t N = 2 * Nn + 2;
    for (std::size_t i = 0; i <= Nn; ++i)
        for (std::size_t k = i + 1; k <= Nn; ++k) c.ch.restricted_positive.push_back(add(h(N, i), h(N, k), -1));
    c.ch.equal_pairs = pairs(Nn + 1);
    return c;
}

CaseRecord case_v(int n) {
    CaseRecord c;
    c.tag = "v";
    c.size = n;
    const std::size_t Nn = std::size_t(n);
    c.gt_name = "SO(" + std::to_string(4 * n + 4) + ")";
    c.ht_name = "SO(" + std::to_string(4 * n + 3) + ")";
    c.g_name = "Sp(" + std::to_string(n + 1) + ").Sp(1)";
    c.h_name = "Sp(" + std::to_string(n) + ").Sp(1)";
    c.k_name = "Sp(" + std::to_string(n) + ").Sp(1).Sp(1)";
    c.gt = G::SO(4 * n + 4);
    c.g = G::AlmostProduct({G::Sp(n + 1), G::Sp(1)});
    c.k = G::AlmostProduct({G::Sp(n), G::Sp(1), G::Sp(1)});
    c.theta = space({"k", "l"}, {false, false}, {ge({1, -1})});
    c.pi = space({"j"}, {false});
    c.tau = space({"p"}, {false});
    c.theta_to_pi = affine_from(2, [](const V& t) { return V{t[0] + t[1]}; });
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[0] - t[1]}; });
    c.pi_hw = affine_from(1, [Nn](const V& p) { return unit(2 * Nn + 2, 0, p[0]); });
    c.theta_hw = affine_from(2, [Nn](const V& t) {
        V v = zeros(Nn + 2);
        v[0] = t[0];
        v[1] = t[1];
        v[Nn + 1] = t[0] - t[1];
        return v;
    });
    c.tau_hw = affine_from(1, [Nn](const V& p) {
        V v = zeros(Nn + 2);
        v[Nn] = p[0];
        v[Nn + 1] = p[0];
        return v;
    });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [n](const V& p) { return V{p[0] + 2 * n + 1}; });
    c.branch = branch({"k"}, {ge({-1, 2}), ge({1, -1})}, 1, [](const V& x) { return V{x[1], x[0] - x[1]}; });
    c.transfer = affine_from(2, [n](const V& x) {
        Rational a = x[1] + 1;
        V v{(x[0] + a) / 2, (x[0] - a) / 2};
        for (int i = n - 1; i >= 1; --i) v.push_back(i);
        v.push_back(a);
        return v;
    });
    c.relations = {rel("casimir", {{1, cas(P)}, {-2, cas(R, 0)}, {1, cas(Q, 1)}}),
                   rel("sp1", {{1, cas(R, 1)}, {-1, cas(Q, 1)}}),
                   rel("fiber", {{1, cas(Q, 1)}, {-1, cas(Q, 2)}})};
    c.independent = {cas(P), cas(Q, 1)};
    c.ranks = {1, 1, 2};
    c.degrees = {2, 2};
    c.hilbert = {kQuadratic, kQuadratic};
    c.ch = sphere_ch(2 * Nn + 2);
    return c;
}

CaseRecord case_v_prime(int n) {
    CaseRecord c = case_v(n);
    c.tag = "v'";
    const std::size_t Nn = std::size_t(n);
    c.g_name = "Sp(" + std::to_string(n + 1) + ").U(1)";
    c.h_name = "Sp(" + std::to_string(n) + ").U(1)";
    c.k_name = "Sp(" + std::to_string(n) + ").Sp(1).U(1)";
    c.g = G::AlmostProduct({G::Sp(n + 1), G::U(1)});
    c.k = G::AlmostProduct({G::Sp(n), G::Sp(1), G::U(1)});
    c.theta = space({"k", "l", "c"}, {false, false, true},
                    {ge({1, -1, 0}), ge({1, -1, -1}), ge({1, -1, 1}), even({1, -1, -1})});
    c.tau = space({"p", "c"}, {false, true}, {ge({1, -1}), ge({1, 1}), even({1, -1})});
    c.theta_to_pi = affine_from(3, [](const V& t) { return V{t[0] + t[1]}; });
    c.theta_to_tau = affine_from(3, [](const V& t) { return V{t[0] - t[1], t[2]}; });
    c.theta_hw = affine_from(3, [Nn](const V& t) {
        V v = zeros(Nn + 2);
        v[0] = t[0];
        v[1] = t[1];
        v[Nn + 1] = t[2];
        return v;
    });
    c.tau_hw = affine_from(2, [Nn](const V& p) {
        V v = zeros(Nn + 2);
        v[Nn] = p[0];
        v[Nn + 1] = p[1];
        return v;
    });
    c.branch = branch({"k", "c"}, {ge({-1, 2, 0}), ge({1, -1, 0}), ge({-1, 2, -1}), ge({-1, 2, 1}), even({-1, 2, -1})}, 1,
                      [](const V& x) { return V{x[1], x[0] - x[1], x[2]}; });
    c.transfer = affine_from(3, [n](const V& x) {
        V v{(x[0] + x[1] + 1) / 2, (x[0] - x[1] - 1) / 2};
        for (int i = n - 1; i >= 1; --i) v.push_back(i);
        v.push_back(x[2]);
        return v;
    });
    c.relations = {rel("casimir", {{1, cas(P)}, {-2, cas(R, 0)}, {1, cas(Q, 1)}}),
                   rel("euler", {{1, eul(R, n + 1)}, {-1, eul(Q, n + 1)}})};
    c.independent = {cas(P), cas(Q, 1), eul(Q, n + 1)};
    c.ranks = {1, 2, 3};
    c.degrees = {1, 2, 2};
    c.hilbert = {kQuadratic, hf(HilbertFactor::Kind::WeightPair, {2, -2}), kLinear};
    return c;
}

CaseRecord fixed(std::string tag, std::string gt, std::string ht, std::string g, std::string h, std::string k) {
    CaseRecord c;
    c.tag = std::move(tag);
    c.gt_name = std::move(gt);
    c.ht_name = std::move(ht);
    c.g_name = std::move(g);
    c.h_name = std::move(h);
    c.k_name = std::move(k);
    return c;
}

CaseRecord case_vi() {
    CaseRecord c = fixed("vi", "SO(16)", "SO(15)", "Spin(9)", "Spin(7)", "Spin(8)");
    c.gt = G::SO(16);
    c.g = G::Spin(9);
    c.k = G::Spin(8);
    c.theta = space({"j", "k"}, {false, false}, {ge({1, -1}), even({1, -1})});
    c.pi = space({"j"}, {false});
    c.tau = space({"k"}, {false});
    c.theta_to_pi = affine_from(2, [](const V& t) { return V{t[0]}; });
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[1]}; });
    c.pi_hw = affine_from(1, [](const V& p) { return unit(8, 0, p[0]); });
    c.theta_hw = affine_from(2, [](const V& t) { return V{t[0] / 2, t[1] / 2, t[1] / 2, t[1] / 2}; });
    c.tau_hw = affine_from(1, [](const V& p) { return V(4, p[0] / 2); });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [](const V& p) { return V{p[0] + 7}; });
    c.branch = branch({"k"}, {ge({0, 1}), ge({1, -1}), even({1, -1})}, 1, [](const V& x) { return V{x[0], x[1]}; });
    c.transfer = affine_from(2, [](const V& x) { return V{x[0] / 2, (x[1] + 5) / 2, (x[1] + 3) / 2, (x[1] + 1) / 2}; });
    c.relations = {casimir_rel(1, -4, 3)};
    c.independent = {cas(P), cas(Q)};
    c.ranks = {1, 1, 2};
    c.degrees = {2, 2};
    c.hilbert = {kQuadratic, kQuadratic};
    c.ch = sphere_ch(8);
    return c;
}

CaseRecord case_vii() {
    CaseRecord c = fixed("vii", "SO(8)", "Spin(7)", "SO(5)xSO(3)", "SO(4)", "SO(4)xSO(3)");
    c.gt = G::SO(8);
    c.g = G::Product({G::SO(5), G::SO(3)});
    c.k = G::Product({G::SO(4), G::SO(3)});
    c.theta = space({"j", "k"}, {false, false}, {ge({1, -1})});
    c.pi = space({"j"}, {false});
    c.tau = space({"k"}, {false});
    c.theta_to_pi = affine_from(2, [](const V& t) { return V{t[0]}; });
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[1]}; });
    c.pi_hw = affine_from(1, [](const V& p) { return V(4, p[0]); });
    c.theta_hw = affine_from(2, [](const V& t) { return V{t[0], t[1], t[1]}; });
    c.tau_hw = affine_from(1, [](const V& p) { return V(3, p[0]); });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [](const V& p) { return V{2 * p[0] + 3}; });
    c.branch = branch({"k"}, {ge({0, 1}), ge({1, -1})}, 1, [](const V& x) { return V{x[0], x[1]}; });
    c.transfer = affine_from(2, [](const V& x) { return V{x[0] / 2, x[1] + q(1, 2), x[1] + q(1, 2)}; });
    c.relations = {rel("casimir", {{1, cas(P)}, {-4, cas(R, 0)}, {4, cas(R, 1)}}),
                   rel("so3", {{2, cas(R, 1)}, {-1, cas(Q, 0)}})};
    c.independent = {cas(P), cas(Q, 0)};
    c.ranks = {1, 1, 2};
    c.degrees = {2, 2};
    c.hilbert = {kQuadratic, kQuadratic};
    return c;
}

CaseRecord case_viii() {
    CaseRecord c = fixed("viii", "SO(7)", "G2", "SO(5)xSO(2)", "U(2)", "SO(4)xSO(2)");
    c.gt = G::SO(7);
    c.g = G::Product({G::SO(5), G::SO(2)});
    c.k = G::Product({G::SO(4), G::SO(2)});
    c.theta = space({"j", "k", "a"}, {false, false, true}, {ge({1, -1, 0}), ge({0, 1, -1}), ge({0, 1, 1})});
    c.pi = space({"j"}, {false});
    c.tau = space({"k", "a"}, {false, true}, {ge({1, -1}), ge({1, 1})});
    c.theta_to_pi = affine_from(3, [](const V& t) { return V{t[0]}; });
    c.theta_to_tau = affine_from(3, [](const V& t) { return V{t[1], t[2]}; });
    c.pi_hw = affine_from(1, [](const V& p) { return V(3, p[0]); });
    c.theta_hw = affine_from(3, [](const V& t) { return V{t[0], t[1], t[2]}; });
    c.tau_hw = affine_from(2, [](const V& p) { return V{p[0], p[0], p[1]}; });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [](const V& p) { return V{p[0] + q(3, 2)}; });
    c.branch = branch({"k", "a"}, {ge({1, -1, 0}), ge({0, 1, -1}), ge({0, 1, 1})}, 1,
                      [](const V& x) { return V{x[0], x[1], x[2]}; });
    c.transfer = affine_from(3, [](const V& x) { return V{x[0], x[1] + q(1, 2), x[2]}; });
    c.relations = {rel("euler", {{1, eul(R, 2)}, {-1, eul(Q, 2)}}),
                   rel("casimir", {{2, cas(P)}, {-6, cas(R, 0)}, {3, cas(Q, 0)}})};
    c.independent = {cas(P), cas(Q, 0), eul(Q, 2)};
    c.ranks = {1, 2, 3};
    c.degrees = {1, 2, 2};
    c.hilbert = {kQuadratic, hf(HilbertFactor::Kind::WeightPair, {2, -2}), kLinear};
    return c;
}

CaseRecord case_ix() {
    CaseRecord c = fixed("ix", "SO(7)", "G2", "SO(6)", "SU(3)", "U(3)");
    c.gt = G::SO(7);
    c.g = G::SO(6);
    c.k = G::U(3);
    c.theta = space({"j", "k"}, {false, true}, {ge({1, -1}), ge({1, 1})});
    c.pi = space({"j"}, {false});
    c.tau = space({"k"}, {true});
    c.theta_to_pi = affine_from(2, [](const V& t) { return V{t[0]}; });
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[1]}; });
    c.pi_hw = affine_from(1, [](const V& p) { return V(3, p[0]); });
    c.theta_hw = affine_from(2, [](const V& t) { return V{t[0], t[0], t[1]}; });
    c.tau_hw = affine_from(1, [](const V& p) { return V(3, p[0]); });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [](const V& p) { return V{p[0] + q(3, 2)}; });
    c.branch = branch({"k"}, {ge({1, -1}), ge({1, 1})}, 1, [](const V& x) { return V{x[0], x[1]}; });
    c.transfer = affine_from(2, [](const V& x) { return V{x[0] + q(1, 2), x[0] - q(1, 2), x[1]}; });
    c.relations = {rel("casimir", {{2, cas(P)}, {-3, cas(R)}, {3, cas(Q, -1, q(1, 3))}})};
    c.independent = {cas(P), eul(Q, 0)};
    c.ranks = {1, 1, 2};
    c.degrees = {1, 2};
    c.hilbert = {hf(HilbertFactor::Kind::WeightPair, {1, -1}), kLinear};
    return c;
}

CaseRecord case_x() {
    CaseRecord c = fixed("x", "SO(7)", "SO(6)", "G2", "SU(3)", "SU(3)");
    c.gt = G::SO(7);
    c.g = G::G2();
    c.k = G::SU(3);
    c.theta = space({"k"}, {false});
    c.pi = space({"k"}, {false});
    c.tau = space({}, {});
    c.theta_to_pi = affine_from(1, [](const V& t) { return V{t[0]}; });
    c.theta_to_tau = affine_from(1, [](const V&) { return V{}; });
    c.pi_hw = affine_from(1, [](const V& p) { return unit(3, 0, p[0]); });
    c.theta_hw = affine_from(1, [](const V& t) { return V{0, t[0]}; });
    c.tau_hw = affine_from(0, [](const V&) { return zeros(3); });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [](const V& p) { return V{p[0] + q(5, 2)}; });
    c.branch = branch({}, {}, 1, [](const V& x) { return V{x[0]}; });
    c.transfer = affine_from(1, [](const V& x) { return V{1, x[0] - q(3, 2)}; });
    c.relations = {rel("casimir", {{1, cas(P)}, {-1, cas(R)}})};
    c.independent = {cas(P)};
    c.ranks = {1, 0, 1};
    c.degrees = {2};
    c.hilbert = {hf(HilbertFactor::Kind::WeightPair, {1, -1})};
    c.ch = sphere_ch(3);
    return c;
}

CaseRecord case_xi() {
    CaseRecord c = fixed("xi", "SO(8)", "Spin(7)", "SO(7)", "G2", "G2");
    c.gt = G::SO(8);
    c.g = G::SO(7);
    c.k = G::G2();
    c.theta = space({"k"}, {false});
    c.pi = space({"k"}, {false});
    c.tau = space({}, {});
    c.theta_to_pi = affine_from(1, [](const V& t) { return V{t[0]}; });
    c.theta_to_tau = affine_from(1, [](const V&) { return V{}; });
    c.pi_hw = affine_from(1, [](const V& p) { return V(4, p[0]); });
    c.theta_hw = affine_from(1, [](const V& t) { return V(3, t[0]); });
    c.tau_hw = affine_from(0, [](const V&) { return zeros(2); });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [](const V& p) { return V{2 * p[0] + 3}; });
    c.branch = branch({}, {}, 1, [](const V& x) { return V{x[0]}; });
    c.transfer = affine_from(1, [](const V& x) { return V{(x[0] + 2) / 2, x[0] / 2, (x[0] - 2) / 2}; });
    c.relations = {rel("casimir", {{3, cas(P)}, {-4, cas(R)}})};
    c.independent = {cas(P)};
    c.ranks = {1, 0, 1};
    c.degrees = {2};
    c.hilbert = {kQuadratic};
    return c;
}

CaseRecord case_xii() {
    CaseRecord c = case_xi();
    c.tag = "xii";
    c.ht_name = "SO(7)";
    c.g_name = "Spin(7)";
    c.g = G::Spin(7);
    c.pi_hw = affine_from(1, [](const V& p) { return unit(4, 0, p[0]); });
    c.theta_hw = affine_from(1, [](const V& t) { return V(3, t[0] / 2); });
    c.lambda_rho = affine_from(1, [](const V& p) { return V{p[0] + 3}; });
    c.ch = sphere_ch(4);
    return c;
}

CaseRecord case_xiii() {
    CaseRecord c = fixed("xiii", "SO(8)", "Spin(7)", "SO(6)xSO(2)", "U(3)", "U(3)xSO(2)");
    c.gt = G::SO(8);
    c.g = G::Product({G::SO(6), G::SO(2)});
    c.k = G::Product({G::U(3), G::SO(2)});
    c.theta = space({"j", "a"}, {false, true}, {ge({1, -1}), ge({1, 1})});
    c.pi = space({"j"}, {false});
    c.tau = space({"a"}, {true});
    c.theta_to_pi = affine_from(2, [](const V& t) { return V{t[0]}; });
    c.theta_to_tau = affine_from(2, [](const V& t) { return V{t[1]}; });
    c.pi_hw = affine_from(1, [](const V& p) { return V(4, p[0]); });
    c.theta_hw = affine_from(2, [](const V& t) { return V{t[0], t[0], t[1], t[1]}; });
    c.tau_hw = affine_from(1, [](const V& p) { return V(4, p[0]); });
    c.restricted_weyl = WeylType::B(1);
    c.lambda_rho = affine_from(1, [](const V& p) { return V{2 * p[0] + 3}; });
    c.branch = branch({"a"}, {ge({1, -1}), ge({1, 1})}, 1, [](const V& x) { return V{x[0], x[1]}; });
    c.transfer = affine_from(2, [](const V& x) { return V{(x[0] + 1) / 2, (x[0] - 1) / 2, x[1], x[1]}; });
    c.relations = {casimir_rel(1, -2, 1)};
    c.independent = {cas(P), eul(Q, 0)};
    c.ranks = {1, 1, 2};
    c.degrees = {1, 2};
    c.hilbert = {kQuadratic, kLinear};
    return c;
}

CaseRecord case_xiii_prime() {
    CaseRecord c = case_xiii();
    c.tag = "xiii'";
    c.g_name = "SO(6)";
    c.k_name = "U(3)";
    c.g = G::SO(6);
    c.k = G::U(3);
    c.theta_hw = affine_from(2, [](const V& t) { return V{t[0], t[0], t[1]}; });
    c.tau_hw = affine_from(1, [](const V& p) { return V(3, p[0]); });
    c.transfer = affine_from(2, [](const V& x) { return V{(x[0] + 1) / 2, (x[0] - 1) / 2, x[1]}; });
    c.relations = {casimir_rel(1, -2, q(2, 3))};
    return c;
}

CaseRecord case_xiv() {
    CaseRecord c = fixed("xiv", "SO(8)", "SO(6)xSO(2)", "Spin(7)", "U(3)", "Spin(6)");
    c.gt = G::SO(8);
    c.g = G::Spin(7);
    c.k = G::Spin(6);
    c.theta = space({"j1", "k1", "j2"}, {false, false, false}, {ge({1, -1, 0}), ge({0, 1, -1})});
    c.pi = space({"j1", "j2"}, {false, false}, {ge({1, -1})});
    c.tau = space({"k1"}, {false});
    c.theta_to_pi = affine_from(3, [](const V& t) { return V{t[0], t[2]}; });
    c.theta_to_tau = affine_from(3, [](const V& t) { return V{t[1]}; });
    c.pi_hw = affine_from(2, [](const V& p) { return V{p[0] + p[1], p[0] - p[1], 0, 0}; });
    c.theta_hw = affine_from(3, [](const V& t) { return t; });
    c.tau_hw = affine_from(1, [](const V& p) { return V{p[0], p[0], 0}; });
    c.restricted_weyl = WeylType::C(2);
    c.lambda_rho = affine_from(2, [](const V& p) { return V{2 * p[0] + 5, 2 * p[1] + 1}; });
    c.mu = affine_from(1, [](const V& p) { return V{2 * p[0] + 3}; });
    c.branch = branch({"k1"}, {ge({1, 0, -1}), ge({0, -1, 1})}, 2, [](const V& x) { return V{x[0], x[2], x[1]}; });
    c.transfer = affine_from(3, [](const V& x) { return V{x[0] / 2, x[2] + q(3, 2), x[1] / 2}; });
    for (int k = 1; k <= 2; ++k) {
        Rational p2 = pow(Rational(2), unsigned(2 * k));
        c.relations.push_back(rel("P_" + std::to_string(k) + "+Q_" + std::to_string(k) + "=2^" + std::to_string(2 * k) +
                                      "R_" + std::to_string(k),
                                  {{1, pw(P, 2 * k, k)}, {1, pw(Q, 2 * k, k)}, {-p2, pw(R, 2 * k, k)}}));
    }
    c.relations.push_back(casimir_rel(1, -2, 1));
    c.independent = {pw(P, 2, 1), pw(P, 4, 2), pw(Q, 2, 1)};
    c.ranks = {2, 1, 3};
    c.degrees = {2, 2, 4};
    c.ch.present = true;
    c.ch.restricted_positive = {V{1, 0, 0, 0}, V{0, 1, 0, 0}, V{1, 1, 0, 0}, V{1, -1, 0, 0}};
    c.ch.zero_coords = {2, 3};
    return c;
}

CaseRecord case_star() {
    CaseRecord c = fixed("star", "Spin(8)xSpin(8)", "Spin(7)xSpin(7)", "Spin(8)", "G2", "Spin(7)");
    c.gt = G::Product({G::Spin(8), G::Spin(8)});
    c.g = G::Spin(8);
    c.k = G::Spin(7);
    c.theta = space({"j", "j'", "a"}, {false, false, false},
                    {ge({-1, 1, 1}), ge({1, -1, 1}), ge({1, 1, -1}), even({1, 1, -1})});
    c.pi = space({"j", "j'"}, {false, false});
    c.tau = space({"a"}, {false});
    c.theta_to_pi = affine_from(3, [](const V& t) { return V{t[0], t[1]}; });
    c.theta_to_tau = affine_from(3, [](const V& t) { return V{t[2]}; });
    c.pi_hw = affine_from(2, [](const V& p) { return V{p[0], 0, 0, 0, p[1], 0, 0, 0}; });
    c.theta_hw = affine_from(3, [](const V& t) {
        return V{(t[0] + t[2]) / 2, t[1] / 2, t[1] / 2, (t[2] - t[0]) / 2};
    });
    c.tau_hw = affine_from(1, [](const V& p) { return V(3, p[0] / 2); });
    c.restricted_weyl = WeylType::Product({WeylType::B(1), WeylType::B(1)});
    c.lambda_rho = affine_from(2, [](const V& p) { return V{p[0] + 3, p[1] + 3}; });
    c.branch = branch({"a"}, {ge({-1, 1, 1}), ge({1, -1, 1}), ge({1, 1, -1}), even({1, 1, -1})}, 2,
                      [](const V& x) { return V{x[0], x[1], x[2]}; });
    c.transfer = affine_from(3, [](const V& x) {
        return V{(x[0] + x[2] + 3) / 2, (x[1] + 1) / 2, (x[1] - 1) / 2, (x[2] + 3 - x[0]) / 2};
    });
    c.relations = {rel("casimir", {{3, cas(P, 0)}, {3, cas(P, 1)}, {-6, cas(R)}, {4, cas(Q)}})};
    c.independent = {cas(P, 0), cas(P, 1), cas(Q)};
    c.ranks = {2, 1, 3};
    c.degrees = {2, 2, 2};
    c.hilbert = {hf(HilbertFactor::Kind::WeightPair, {1, -1}), kQuadratic, kQuadratic};
    c.ch.present = true;
    c.ch.restricted_positive = {unit(8, 0), unit(8, 4)};
    c.ch.zero_coords = {1, 2, 3, 5, 6, 7};
    return c;
}

}  // namespace

std::vector<Symbol> star_r_generators() {
    std::vector<Symbol> out;
    for (int k = 1; k <= 3; ++k) out.push_back(pw(R, 2 * k, k, pow(Rational(2), unsigned(2 * k - 1))));
    out.push_back(pf(R, 4, 16));
    return out;
}

std::vector<std::string> case_tags() {
    return {"i", "i'", "ii_odd", "ii_even", "iii", "iv", "v", "v'", "vi", "vii",
            "viii", "ix", "x", "xi", "xii", "xiii", "xiii'", "xiv", "star"};
}

std::vector<CaseRecord> all_cases(int max_n) {
    std::vector<CaseRecord> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(case_i(n));
    for (int n = 2; n <= max_n; ++n) out.push_back(case_i_prime(n));
    for (int m = 1; m <= max_n; ++m) out.push_back(case_ii_odd(m));
    for (int m = 1; m <= max_n; ++m) out.push_back(case_ii_even(m));
    for (int n = 1; n <= max_n; ++n) out.push_back(case_iii(n));
    for (int n = 1; n <= max_n; ++n) out.push_back(case_iv(n));
    for (int n = 1; n <= max_n; ++n) out.push_back(case_v(n));
    for (int n = 1; n <= max_n; ++n) out.push_back(case_v_prime(n));
    for (auto f : {case_vi, case_vii, case_viii, case_ix, case_x, case_xi, case_xii, case_xiii, case_xiii_prime,
                   case_xiv, case_star})
        out.push_back(f());
    return out;
}

}  // namespace branchlab
