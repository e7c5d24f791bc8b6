#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace branchlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form: "7/2", "-3", "0".
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

Rational rat(long num, long den = 1);

bool is_integer(const Rational& q);
bool is_half_integer(const Rational& q);  // q in Z + 1/2
long to_long(const Rational& q);          // throws unless integral and fits

Rational pow(const Rational& q, unsigned e);

using RatMatrix = std::vector<std::vector<Rational>>;

// Row-reduces a copy; returns rank and the pivot rows of the original matrix.
struct RankInfo {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};
RankInfo rank_info(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Solves A x = b; empty optional-like flag when inconsistent.
bool solve(const RatMatrix& a, const std::vector<Rational>& b, std::vector<Rational>& x);

// Factors A once so that many right-hand sides can be solved cheaply.
class LinearSolver {
public:
    explicit LinearSolver(const RatMatrix& a);
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;
    std::size_t rank() const { return pivot_cols_.size(); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    RatMatrix upper_;      // echelon form of A
    RatMatrix transform_;  // row operations: upper_ = transform_ * A
    std::vector<std::size_t> pivot_cols_;
};

// Row space built one row at a time.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}
    // Returns true if the row raised the rank.
    bool add(std::vector<Rational> row);
    std::size_t rank() const { return basis_.size(); }
    bool full() const { return rank() == cols_; }

private:
    std::size_t cols_;
    RatMatrix basis_;  // each row normalized to 1 at its pivot
    std::vector<std::size_t> pivots_;
};

}  // namespace branchlab
