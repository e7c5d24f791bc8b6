#include "doctest.h"

#include "branchlab/rational.hpp"

#include <random>

using namespace branchlab;

TEST_CASE("canonical text form") {
    CHECK(to_string(rat(14, 4)) == "7/2");
    CHECK(to_string(rat(-6, 3)) == "-2");
    CHECK(to_string(rat(0, 5)) == "0");
    CHECK(parse_rational("10/4") == rat(5, 2));
    CHECK(parse_rational("-3") == -3);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("integrality predicates") {
    CHECK(is_integer(rat(4, 2)));
    CHECK_FALSE(is_integer(rat(1, 2)));
    CHECK(is_half_integer(rat(-3, 2)));
    CHECK_FALSE(is_half_integer(rat(1, 3)));
    CHECK(to_long(rat(-8, 2)) == -4);
    CHECK_THROWS(to_long(rat(1, 2)));
    CHECK(pow(rat(-1, 2), 3) == rat(-1, 8));
    CHECK(pow(rat(5), 0) == 1);
}

TEST_CASE("rank and solve") {
    RatMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m) == 2);
    auto info = rank_info(m);
    CHECK(info.pivot_rows.size() == 2);
    std::vector<Rational> x;
    REQUIRE(solve(m, {3, 6, 1}, x));
    CHECK(m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2] == 3);
    CHECK(m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2] == 1);
    CHECK_FALSE(solve(m, {1, 0, 0}, x));
}

namespace {

// Cofactor expansion; independent of the elimination code.
Rational det(const RatMatrix& m) {
    if (m.size() == 1) return m[0][0];
    Rational d = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        RatMatrix minor;
        for (std::size_t i = 1; i < m.size(); ++i) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Rational t = m[0][j] * det(minor);
        d += (j % 2 == 0) ? t : Rational(-t);
    }
    return d;
}

}  // namespace

TEST_CASE("square rank agrees with the determinant on random matrices") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 4;
        RatMatrix m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& e : row) e = Rational(coef(gen), 1 + trial % 3);
        CHECK((rank(m) == n) == (det(m) != 0));
    }
}

TEST_CASE("LinearSolver and RowEchelon agree with direct elimination") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix a(5, std::vector<Rational>(3));
        for (auto& row : a)
            for (auto& e : row) e = coef(gen);
        LinearSolver solver(a);
        RowEchelon ech(3);
        for (const auto& row : a) ech.add(row);
        CHECK(solver.rank() == rank(a));
        CHECK(ech.rank() == rank(a));
        std::vector<Rational> b(5);
        for (auto& e : b) e = coef(gen);
        std::vector<Rational> x1, x2;
        bool ok1 = solver.solve(b, x1), ok2 = solve(a, b, x2);
        CHECK(ok1 == ok2);
        if (ok1)
            for (std::size_t i = 0; i < 5; ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < 3; ++j) s += a[i][j] * x1[j];
                CHECK(s == b[i]);
            }
    }
}
