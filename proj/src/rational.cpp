#include "branchlab/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace branchlab {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_half_integer(const Rational& q) { return q.get_den() == 2; }

long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) throw std::domain_error("not a machine integer: " + to_string(q));
    return q.get_num().get_si();
}

Rational pow(const Rational& q, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

namespace {

// Gaussian elimination on an augmented copy; tracks which original row sits where.
struct Echelon {
    RatMatrix m;
    std::vector<std::size_t> origin;
    std::vector<std::size_t> pivot_cols;
};

Echelon eliminate(const RatMatrix& in, std::size_t ncols) {
    Echelon e;
    e.m = in;
    e.origin.resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) e.origin[i] = i;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < e.m.size(); ++c) {
        std::size_t p = r;
        while (p < e.m.size() && e.m[p][c] == 0) ++p;
        if (p == e.m.size()) continue;
        std::swap(e.m[p], e.m[r]);
        std::swap(e.origin[p], e.origin[r]);
        for (std::size_t i = r + 1; i < e.m.size(); ++i) {
            if (e.m[i][c] == 0) continue;
            Rational f = e.m[i][c] / e.m[r][c];
            for (std::size_t k = c; k < e.m[i].size(); ++k) e.m[i][k] -= f * e.m[r][k];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace

RankInfo rank_info(const RatMatrix& m) {
    RankInfo info;
    if (m.empty()) return info;
    Echelon e = eliminate(m, m[0].size());
    info.rank = e.pivot_cols.size();
    for (std::size_t i = 0; i < info.rank; ++i) info.pivot_rows.push_back(e.origin[i]);
    std::sort(info.pivot_rows.begin(), info.pivot_rows.end());
    return info;
}

std::size_t rank(const RatMatrix& m) { return rank_info(m).rank; }

bool solve(const RatMatrix& a, const std::vector<Rational>& b, std::vector<Rational>& x) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    std::size_t n = a.empty() ? 0 : a[0].size();
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = eliminate(aug, n);
    std::size_t r = e.pivot_cols.size();
    for (std::size_t i = r; i < e.m.size(); ++i)
        if (e.m[i][n] != 0) return false;
    x.assign(n, Rational(0));
    for (std::size_t i = r; i-- > 0;) {
        std::size_t c = e.pivot_cols[i];
        Rational s = e.m[i][n];
        for (std::size_t k = c + 1; k < n; ++k) s -= e.m[i][k] * x[k];
        x[c] = s / e.m[i][c];
    }
    return true;
}

LinearSolver::LinearSolver(const RatMatrix& a) : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()) {
    RatMatrix aug = a;
    for (std::size_t i = 0; i < rows_; ++i) {
        aug[i].resize(cols_ + rows_, Rational(0));
        aug[i][cols_ + i] = 1;
    }
    Echelon e = eliminate(aug, cols_);
    pivot_cols_ = e.pivot_cols;
    upper_.resize(rows_);
    transform_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        upper_[i].assign(e.m[i].begin(), e.m[i].begin() + long(cols_));
        transform_[i].assign(e.m[i].begin() + long(cols_), e.m[i].end());
    }
}

bool LinearSolver::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const {
    if (b.size() != rows_) throw std::invalid_argument("LinearSolver: dimension mismatch");
    std::vector<Rational> y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < rows_; ++k)
            if (transform_[i][k] != 0 && b[k] != 0) y[i] += transform_[i][k] * b[k];
    const std::size_t r = pivot_cols_.size();
    for (std::size_t i = r; i < rows_; ++i)
        if (y[i] != 0) return false;
    x.assign(cols_, Rational(0));
    for (std::size_t i = r; i-- > 0;) {
        std::size_t c = pivot_cols_[i];
        Rational s = y[i];
        for (std::size_t k = c + 1; k < cols_; ++k)
            if (upper_[i][k] != 0) s -= upper_[i][k] * x[k];
        x[c] = s / upper_[i][c];
    }
    return true;
}

bool RowEchelon::add(std::vector<Rational> row) {
    if (row.size() != cols_) throw std::invalid_argument("RowEchelon: dimension mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational f = row[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t k = pivots_[i]; k < cols_; ++k)
            if (basis_[i][k] != 0) row[k] -= f * basis_[i][k];
    }
    std::size_t p = 0;
    while (p < cols_ && row[p] == 0) ++p;
    if (p == cols_) return false;
    const Rational lead = row[p];
    for (std::size_t k = p; k < cols_; ++k) row[k] /= lead;
    // Keep the basis reduced at the new pivot so later rows see one pass.
    for (auto& b : basis_) {
        const Rational f = b[p];
        if (f == 0) continue;
        for (std::size_t k = p; k < cols_; ++k) b[k] -= f * row[k];
    }
    basis_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

}  // namespace branchlab
