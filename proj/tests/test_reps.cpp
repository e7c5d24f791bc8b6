#include "doctest.h"

#include "branchlab/reps.hpp"

#include <map>

using namespace branchlab;

namespace {

IrrepLabel L(const GroupDescriptor& g, std::vector<long> hw) { return {g, weight_from_ints(hw)}; }

// Dominant integral labels with entries in [lo, hi].
std::vector<WeightVector> grid(const GroupDescriptor& g, long lo, long hi) {
    std::vector<WeightVector> out;
    WeightVector cur;
    std::function<void()> rec = [&]() {
        if (cur.size() == g.rank()) {
            if (is_valid_label(g, cur)) out.push_back(cur);
            return;
        }
        for (long v = lo; v <= hi; ++v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace

TEST_CASE("Casimir eigenvalues of natural representations") {
    for (int n = 3; n <= 9; ++n) {
        std::vector<long> hw(std::size_t(n / 2), 0);
        hw[0] = 1;
        CHECK(casimir_total(L(GroupDescriptor::SO(n), hw)) == n - 1);
    }
    for (int n = 1; n <= 4; ++n) {
        std::vector<long> hw(std::size_t(n), 0);
        hw[0] = 1;
        CHECK(casimir_total(L(GroupDescriptor::Sp(n), hw)) == 2 * n + 1);
    }
    IrrepLabel s{GroupDescriptor::Spin(8), weight({1, 1, 1, 1})};
    CHECK(casimir_total(s) == 16);
}

TEST_CASE("Casimir of the trivial representation vanishes") {
    for (const auto& g : {GroupDescriptor::U(3), GroupDescriptor::SU(4), GroupDescriptor::SO(7), GroupDescriptor::Spin(8),
                          GroupDescriptor::Sp(2), GroupDescriptor::G2(),
                          GroupDescriptor::Product({GroupDescriptor::U(2), GroupDescriptor::U(1)})}) {
        IrrepLabel t{g, WeightVector(g.rank(), Rational(0))};
        for (const auto& c : casimir_eigenvalue(t)) CHECK(c == 0);
    }
}

TEST_CASE("property: SO(N) spherical harmonics have Casimir j(j+N-2)") {
    for (int N = 3; N <= 16; ++N)
        for (long j = 0; j <= 6; ++j) {
            std::vector<long> hw(std::size_t(N / 2), 0);
            hw[0] = j;
            CHECK(casimir_total(L(GroupDescriptor::SO(N), hw)) == j * (j + N - 2));
        }
}

TEST_CASE("property: U(n) Casimir matches the row-sum formula") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : grid(GroupDescriptor::U(n), -3, 3)) {
            Rational oracle = 0;
            for (int i = 1; i <= n; ++i) oracle += l[i - 1] * (l[i - 1] + n + 1 - 2 * i);
            CHECK(casimir_total({GroupDescriptor::U(n), l}) == oracle);
        }
}

TEST_CASE("G2 in the fundamental-weight basis") {
    auto g = GroupDescriptor::G2();
    CHECK(dimension(L(g, {0, 1})) == 7);
    CHECK(dimension(L(g, {1, 0})) == 14);
    // G2 acts transitively on S^6, so k*w2 has the Laplacian eigenvalue of H^k(R^7).
    for (long k = 0; k <= 6; ++k) CHECK(casimir_total(L(g, {0, k})) == casimir_total(L(GroupDescriptor::SO(7), {k, 0, 0})));
}

TEST_CASE("infinitesimal characters") {
    for (long j = 0; j <= 4; ++j)
        for (long k = 0; k <= j; ++k)
            CHECK(infinitesimal_character(L(GroupDescriptor::SO(5), {j, k})).value == weight({j + rat(3, 2), k + rat(1, 2)}));
    CHECK(infinitesimal_character(L(GroupDescriptor::U(3), {0, 0, 0})).value == weight_from_ints({1, 0, -1}));
    for (const auto& g : {GroupDescriptor::SO(7), GroupDescriptor::Sp(2), GroupDescriptor::G2()})
        CHECK(infinitesimal_character({g, WeightVector(g.rank(), Rational(0))}).value == g.rho);
}

TEST_CASE("property: infinitesimal character separates dominant labels") {
    for (const auto& g : {GroupDescriptor::SO(5), GroupDescriptor::U(3), GroupDescriptor::Sp(2), GroupDescriptor::G2(),
                          GroupDescriptor::SO(6)}) {
        std::map<WeightVector, WeightVector> seen;
        for (const auto& l : grid(g, -6, 6)) {
            auto chi = infinitesimal_character({g, l}).value;
            auto [it, fresh] = seen.emplace(chi, l);
            CHECK_MESSAGE(fresh, g.name() << " collision " << to_string(l) << " " << to_string(it->second));
        }
    }
}

TEST_CASE("label validation") {
    CHECK(is_valid_label(GroupDescriptor::Spin(7), weight({rat(1, 2), rat(1, 2), rat(1, 2)})));
    CHECK_FALSE(is_valid_label(GroupDescriptor::SO(7), weight({rat(1, 2), rat(1, 2), rat(1, 2)})));
    CHECK_FALSE(is_valid_label(GroupDescriptor::SO(5), weight_from_ints({0, 1})));
    CHECK(is_valid_label(GroupDescriptor::SO(6), weight_from_ints({1, 1, -1})));
    CHECK_FALSE(is_valid_label(GroupDescriptor::SU(3), weight_from_ints({1, 0, 1})));
    CHECK_THROWS(require_valid(L(GroupDescriptor::Sp(2), {0, 1})));
}

TEST_CASE("rho shift") {
    auto amb = GroupDescriptor::SO(8).rho;
    RatMatrix embed = {{1}, {0}, {0}, {0}};
    CHECK(rho_shift_T(amb, weight({0}), embed, weight({0})) == amb);
    CHECK(rho_shift_T(amb, weight({rat(1, 2)}), embed, weight({5})) == weight({3 + rat(9, 2), 2, 1, 0}));
}

TEST_CASE("Cartan-Helgason for spheres") {
    // SO(2n+2)/SO(2n+1): restricted root e1, kills every other coordinate.
    for (int n = 1; n <= 3; ++n) {
        std::vector<WeightVector> pos = {WeightVector(std::size_t(n + 1), Rational(0))};
        pos[0][0] = 1;
        auto kill = [](const WeightVector& l) {
            for (std::size_t i = 1; i < l.size(); ++i)
                if (l[i] != 0) return false;
            return true;
        };
        for (long j = 0; j <= 8; ++j) {
            WeightVector l(std::size_t(n + 1), Rational(0));
            l[0] = j;
            CHECK(cartan_helgason_admissible(l, pos, kill));
        }
        WeightVector half(std::size_t(n + 1), Rational(0));
        half[0] = rat(1, 2);
        CHECK_FALSE(cartan_helgason_admissible(half, pos, kill));
        WeightVector two(std::size_t(n + 1), Rational(0));
        two[0] = two[1] = 1;
        CHECK_FALSE(cartan_helgason_admissible(two, pos, kill));
    }
}
