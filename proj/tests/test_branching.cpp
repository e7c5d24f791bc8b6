#include "doctest.h"

#include "branchlab/branching.hpp"
#include "support.hpp"

#include <functional>
#include <random>

using namespace branchlab;
using testsupport::get;

namespace {

Integer dim_of(const GroupDescriptor& g, const WeightVector& l) { return dimension({g, l}); }

GroupDescriptor so_or_spin(int N, const WeightVector& l) {
    return is_integer(l.empty() ? Rational(0) : l[0]) ? GroupDescriptor::SO(N) : GroupDescriptor::Spin(N);
}

// Every mu in the box satisfying the classical interlacing inequalities.
WeightMultiset brute_SO(int N, const WeightVector& l) {
    const std::size_t m = std::size_t((N - 1) / 2);
    const Rational shift = is_integer(l[0]) ? Rational(0) : rat(1, 2);
    const long top = to_long(l[0] - shift) + 1;
    std::vector<WeightVector> out;
    WeightVector mu(m);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            bool ok = true;
            if (N % 2) {  // SO(2n+1) -> SO(2n): l1 >= mu1 >= ... >= ln >= |mun|
                for (std::size_t k = 0; k < m && ok; ++k) {
                    ok = l[k] >= (k + 1 < m ? mu[k] : abs(mu[k]));
                    if (k + 1 < m) ok = ok && mu[k] >= l[k + 1];
                }
            } else {  // SO(2n) -> SO(2n-1): l1 >= mu1 >= l2 >= ... >= mu_{n-1} >= |ln|
                for (std::size_t k = 0; k < m && ok; ++k) ok = l[k] >= mu[k] && mu[k] >= (k + 2 < l.size() ? l[k + 1] : abs(l[k + 1]));
            }
            if (ok) out.push_back(mu);
            return;
        }
        for (long v = -top; v <= top; ++v) {
            mu[i] = v + shift;
            rec(i + 1);
        }
    };
    rec(0);
    return to_multiset(out);
}

// Valid SO(N) or Spin(N) labels with |entries| <= hi.
std::vector<WeightVector> label_box(int N, long hi, bool half) {
    const std::size_t r = std::size_t(N / 2);
    const auto g = half ? GroupDescriptor::Spin(N) : GroupDescriptor::SO(N);
    std::vector<WeightVector> out;
    WeightVector cur;
    std::function<void()> rec = [&]() {
        if (cur.size() == r) {
            if (is_valid_label(g, cur)) out.push_back(cur);
            return;
        }
        for (long v = -hi; v <= hi; ++v) {
            cur.push_back(half ? Rational(2 * v + 1, 2) : Rational(v));
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace

TEST_CASE("SO branching examples") {
    auto r = branch_SO_step(5, weight_from_ints({1, 0}));
    CHECK(r == WeightMultiset{{weight_from_ints({0, 0}), 1}, {weight_from_ints({1, 0}), 1}});
    for (long k = 0; k <= 4; ++k) {
        auto s = branch_SO_step(8, weight_from_ints({k, k, k, k}));
        CHECK(s == WeightMultiset{{weight_from_ints({k, k, k}), 1}});
        auto t = branch_SO_step(7, weight_from_ints({k, k, k}));
        CHECK(long(t.size()) == 2 * k + 1);
        for (const auto& [mu, mult] : t) {
            CHECK(mult == 1);
            CHECK(mu[0] == k);
            CHECK(mu[1] == k);
            CHECK(abs(mu[2]) <= k);
        }
    }
}

TEST_CASE("U branching examples") {
    auto r = branch_U_step(2, weight_from_ints({1, 0}));
    CHECK(r == WeightMultiset{{weight_from_ints({0, 1}), 1}, {weight_from_ints({1, 0}), 1}});
    auto z = branch_U_step(4, weight_from_ints({0, 0, 0, 0}));
    CHECK(z == WeightMultiset{{weight_from_ints({0, 0, 0, 0}), 1}});
    Integer total = 0;
    for (const auto& [mu, mult] : branch_U_step(4, weight_from_ints({1, 1, 0, 0}))) {
        WeightVector head(mu.begin(), mu.end() - 1);
        total += mult * dim_of(GroupDescriptor::U(3), head);
    }
    CHECK(total == 6);
}

TEST_CASE("property: SO interlacing matches a brute-force scan and conserves dimension") {
    for (int N = 4; N <= 9; ++N) {
        for (bool half : {false, true}) {
            for (const auto& l : label_box(N, 3, half)) {
                auto got = branch_SO_step(N, l);
                CHECK(got == brute_SO(N, l));
                Integer sum = 0;
                for (const auto& [mu, mult] : got) sum += mult * dim_of(so_or_spin(N - 1, mu), mu);
                CHECK(sum == dim_of(so_or_spin(N, l), l));
            }
        }
    }
}

TEST_CASE("property: U branching conserves dimension and charge") {
    std::mt19937 gen(1);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 80; ++trial) {
        int N = 2 + trial % 4;
        std::vector<long> raw(static_cast<std::size_t>(N));
        for (auto& x : raw) x = d(gen);
        std::sort(raw.rbegin(), raw.rend());
        WeightVector l = weight_from_ints(raw);
        Rational total_charge = 0;
        for (const auto& x : l) total_charge += x;
        Integer sum = 0;
        for (const auto& [mu, mult] : branch_U_step(N, l)) {
            WeightVector head(mu.begin(), mu.end() - 1);
            Rational s = mu.back();
            for (const auto& x : head) s += x;
            CHECK(s == total_charge);
            sum += mult * dim_of(GroupDescriptor::U(N - 1), head);
        }
        CHECK(sum == dim_of(GroupDescriptor::U(N), l));
    }
}

TEST_CASE("case branching") {
    CHECK(branch_case(get("i:2"), {3}) == std::vector<Params>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    CHECK(branch_case(get("vi"), {4}) == std::vector<Params>{{4, 0}, {4, 2}, {4, 4}});
    auto labels = branch_case_labels(get("vi"), {4});
    REQUIRE(labels.size() == 3);
    CHECK(labels[1].highest_weight == weight({2, 1, 1, 1}));
    CHECK(branch_case(get("star"), {1, 1}) == std::vector<Params>{{1, 1, 0}, {1, 1, 2}});
    auto star = branch_case_labels(get("star"), {1, 1});
    REQUIRE(star.size() == 2);
    CHECK(star[0].highest_weight == weight({rat(1, 2), rat(1, 2), rat(1, 2), rat(-1, 2)}));
    CHECK(star[1].highest_weight == weight({rat(3, 2), rat(1, 2), rat(1, 2), rat(1, 2)}));
}
