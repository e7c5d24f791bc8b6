#include "doctest.h"

#include "branchlab/weights.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

using namespace branchlab;

namespace {

std::set<WeightVector> as_set(const std::vector<WeightVector>& v) { return {v.begin(), v.end()}; }

// Vectors with two entries in {+1,-1}, first nonzero entry positive.
std::set<WeightVector> brute_pm_pairs(std::size_t n) {
    std::set<WeightVector> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int s : {1, -1}) {
                WeightVector v(n, Rational(0));
                v[i] = 1;
                v[j] = s;
                out.insert(v);
            }
    return out;
}

WeightVector half_sum(const std::vector<WeightVector>& roots, std::size_t n) {
    WeightVector r(n, Rational(0));
    for (const auto& a : roots)
        for (std::size_t i = 0; i < n; ++i) r[i] += a[i] / 2;
    return r;
}

// All signed permutations; even_only keeps an even number of sign changes.
std::vector<WeightVector> signed_perms(WeightVector v, bool even_only) {
    std::vector<WeightVector> out;
    std::sort(v.begin(), v.end());
    do {
        for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
            if (even_only && __builtin_popcount(mask) % 2) continue;
            WeightVector w = v;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (mask & (1u << i)) w[i] = -w[i];
            out.push_back(w);
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Number of Gelfand-Tsetlin patterns with top row lambda.
long gt_count(const std::vector<long>& top) {
    if (top.size() <= 1) return 1;
    long total = 0;
    std::vector<long> row(top.size() - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == row.size()) {
            total += gt_count(row);
            return;
        }
        for (long x = top[i + 1]; x <= top[i]; ++x) {
            row[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

long binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("positive roots") {
    CHECK(as_set(positive_roots(WeylType::B(2))) ==
          as_set({weight_from_ints({1, -1}), weight_from_ints({1, 1}), weight_from_ints({1, 0}), weight_from_ints({0, 1})}));
    CHECK(positive_roots(WeylType::A(1)) == std::vector<WeightVector>{weight_from_ints({1, -1})});
    auto d4 = positive_roots(WeylType::D(4));
    CHECK(d4.size() == 12);
    CHECK(as_set(d4) == brute_pm_pairs(4));
}

TEST_CASE("rho is the half-sum of positive roots") {
    CHECK(rho(WeylType::B(4)) == weight({rat(7, 2), rat(5, 2), rat(3, 2), rat(1, 2)}));
    CHECK(rho(WeylType::D(4)) == weight_from_ints({3, 2, 1, 0}));
    CHECK(rho(WeylType::A(1)) == weight({rat(1, 2), rat(-1, 2)}));
    for (auto t : {WeylType::A(3), WeylType::B(3), WeylType::C(3), WeylType::D(5), WeylType::G2()})
        CHECK(rho(t) == half_sum(positive_roots(t), t.dim()));
}

TEST_CASE("dominant representatives") {
    CHECK(dominant_representative(WeylType::B(2), weight_from_ints({-1, 3})) == weight_from_ints({3, 1}));
    CHECK(dominant_representative(WeylType::A(2), weight_from_ints({0, 5, -1})) == weight_from_ints({5, 0, -1}));
    WeightVector v = weight_from_ints({-2, 1, -1});
    WeightVector oracle;
    for (const auto& w : signed_perms(v, true))
        if (w[0] >= w[1] && w[1] >= abs(w[2])) oracle = w;
    CHECK(oracle == weight_from_ints({2, 1, 1}));
    CHECK(dominant_representative(WeylType::D(3), v) == oracle);
}

TEST_CASE("orbit equality") {
    CHECK(weyl_orbit_equal(WeylType::B(2), weight_from_ints({3, 1}), weight_from_ints({-1, 3})));
    CHECK(weyl_orbit_equal(WeylType::A(1), weight_from_ints({1, 0}), weight_from_ints({0, 1})));
    auto orbit = signed_perms(weight_from_ints({2, 1, 1}), true);
    bool oracle = std::find(orbit.begin(), orbit.end(), weight_from_ints({2, 1, -1})) != orbit.end();
    CHECK_FALSE(oracle);
    CHECK_FALSE(weyl_orbit_equal(WeylType::D(3), weight_from_ints({2, 1, 1}), weight_from_ints({2, 1, -1})));
}

TEST_CASE("inner product") {
    CHECK(inner_product(weight_from_ints({1, 0}), weight_from_ints({0, 1})) == 0);
    WeightVector h = weight({rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)});
    CHECK(inner_product(h, h) == 1);
    CHECK(inner_product(weight_from_ints({2, 1}), weight_from_ints({2, 1})) == 5);
}

TEST_CASE("Weyl dimension") {
    auto b2 = WeylType::B(2);
    CHECK(weyl_dimension(b2, rho(b2), weight_from_ints({1, 0})) == 5);
    CHECK(weyl_dimension(b2, rho(b2), weight_from_ints({2, 0})) == binom(6, 2) - binom(4, 0));
    auto d4 = WeylType::D(4);
    CHECK(weyl_dimension(d4, rho(d4), weight_from_ints({1, 0, 0, 0})) == 8);
    CHECK_THROWS(weyl_dimension(b2, rho(b2), weight_from_ints({0, 1})));
}

TEST_CASE("property: spherical harmonics dimensions for SO(N)") {
    for (int N = 5; N <= 10; ++N) {
        auto t = N % 2 ? WeylType::B(N / 2) : WeylType::D(N / 2);
        for (long j = 0; j <= 6; ++j) {
            WeightVector l(t.dim(), Rational(0));
            l[0] = j;
            CHECK(weyl_dimension(t, rho(t), l) == binom(N + j - 1, j) - binom(N + j - 3, j - 2));
        }
    }
}

TEST_CASE("property: type A dimensions count Gelfand-Tsetlin patterns") {
    std::mt19937 gen(3);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 3;
        std::vector<long> l(n);
        for (auto& x : l) x = d(gen);
        std::sort(l.rbegin(), l.rend());
        auto t = WeylType::A(int(n) - 1);
        CHECK(weyl_dimension(t, rho(t), weight_from_ints(l)) == gt_count(l));
    }
}

TEST_CASE("property: orbits are closed and share one dominant element") {
    std::mt19937 gen(5);
    std::uniform_int_distribution<long> d(-3, 3);
    for (auto t : {WeylType::A(2), WeylType::B(3), WeylType::C(2), WeylType::D(4), WeylType::G2()}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<long> raw(t.dim());
            for (auto& x : raw) x = d(gen);
            WeightVector v = weight_from_ints(raw);
            auto orbit = weyl_orbit(t, v);
            auto dom = dominant_representative(t, v);
            CHECK(is_dominant(t, dom));
            for (const auto& w : orbit) {
                CHECK(dominant_representative(t, w) == dom);
                CHECK(pairing(t, w, w) == pairing(t, v, v));
            }
            for (const auto& a : simple_roots(t)) {
                auto r = reflect(t, a, v);
                CHECK(std::binary_search(orbit.begin(), orbit.end(), r));
            }
        }
    }
}

TEST_CASE("property: classical orbits match signed permutations") {
    for (const auto& raw : std::vector<std::vector<long>>{{2, 1, 0}, {3, -1, 1}, {1, 1, 0}}) {
        WeightVector v = weight_from_ints(raw);
        auto b = weyl_orbit(WeylType::B(3), v);
        CHECK(as_set(b) == as_set(signed_perms(v, false)));
        auto dd = weyl_orbit(WeylType::D(3), v);
        CHECK(as_set(dd) == as_set(signed_perms(v, true)));
    }
}
