#include "branchlab/branching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace branchlab {

WeightMultiset to_multiset(std::vector<WeightVector> ws) {
    std::map<WeightVector, int> counts;
    for (auto& w : ws) ++counts[std::move(w)];
    return {counts.begin(), counts.end()};
}

namespace {

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Values x with lo <= x <= hi and x congruent to ref mod 1.
std::vector<Rational> between(const Rational& lo, const Rational& hi, const Rational& ref) {
    std::vector<Rational> out;
    Rational frac = ref - Rational(floor_of(ref));
    Rational x = Rational(-floor_of(frac - lo)) + frac;  // smallest admissible value >= lo
    for (; x <= hi; x += 1) out.push_back(x);
    return out;
}

void interlace(const std::vector<std::pair<Rational, Rational>>& ranges, const Rational& ref, std::size_t i,
               WeightVector& cur, std::vector<WeightVector>& out) {
    if (i == ranges.size()) {
        out.push_back(cur);
        return;
    }
    for (const auto& x : between(ranges[i].first, ranges[i].second, ref)) {
        cur.push_back(x);
        interlace(ranges, ref, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

WeightMultiset branch_SO_step(int N, const WeightVector& lambda) {
    if (N < 3) throw std::invalid_argument("branch_SO_step needs N >= 3");
    GroupDescriptor g = is_valid_label(GroupDescriptor::SO(N), lambda) ? GroupDescriptor::SO(N) : GroupDescriptor::Spin(N);
    require_valid({g, lambda});
    const std::size_t r = lambda.size();
    std::vector<std::pair<Rational, Rational>> ranges;
    std::vector<WeightVector> out;
    WeightVector cur;
    if (N % 2) {
        // B_r -> D_r: lambda_1 >= mu_1 >= ... >= lambda_r >= |mu_r|
        for (std::size_t i = 0; i + 1 < r; ++i) ranges.push_back({lambda[i + 1], lambda[i]});
        ranges.push_back({-lambda[r - 1], lambda[r - 1]});
    } else {
        // D_r -> B_{r-1}: lambda_1 >= mu_1 >= ... >= mu_{r-1} >= |lambda_r|
        for (std::size_t i = 0; i + 1 < r; ++i) {
            Rational lo = i + 2 == r ? Rational(abs(lambda[i + 1])) : lambda[i + 1];
            ranges.push_back({lo, lambda[i]});
        }
    }
    interlace(ranges, lambda[0], 0, cur, out);
    return to_multiset(std::move(out));
}

WeightMultiset branch_U_step(int N, const WeightVector& lambda) {
    if (N < 1 || lambda.size() != std::size_t(N)) throw std::invalid_argument("branch_U_step: bad rank");
    require_valid({GroupDescriptor::U(N), lambda});
    std::vector<std::pair<Rational, Rational>> ranges;
    for (int i = 0; i + 1 < N; ++i) ranges.push_back({lambda[std::size_t(i + 1)], lambda[std::size_t(i)]});
    std::vector<WeightVector> mus;
    WeightVector cur;
    interlace(ranges, 0, 0, cur, mus);
    Rational total = 0;
    for (const auto& x : lambda) total += x;
    for (auto& mu : mus) {
        Rational s = 0;
        for (const auto& x : mu) s += x;
        mu.push_back(total - s);
    }
    return to_multiset(std::move(mus));
}

std::vector<Params> branch_case(const CaseRecord& c, const Params& pi) {
    if (!c.pi.contains(pi)) throw std::invalid_argument(c.id() + ": pi outside Disc(G~/H~)");
    const auto& b = c.branch;
    const std::size_t d = pi.size();
    ParamSpace free;
    free.names = b.free_names;
    free.is_signed.assign(b.free_count, true);
    long bound = 2;
    for (long x : pi) bound = std::max(bound, 2 * std::abs(x) + 2);
    for (const auto& k : b.constraints) {
        LinearConstraint r{k.kind, {k.coeffs.begin() + long(d), k.coeffs.end()}, k.constant};
        for (std::size_t i = 0; i < d; ++i) r.constant += k.coeffs[i] * pi[i];
        free.constraints.push_back(std::move(r));
    }
    std::vector<Params> out;
    for (const auto& f : free.enumerate(bound)) {
        Params x = pi;
        x.insert(x.end(), f.begin(), f.end());
        WeightVector t = b.to_theta.apply(x);
        Params theta;
        for (const auto& v : t) theta.push_back(to_long(v));
        out.push_back(std::move(theta));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IrrepLabel> branch_case_labels(const CaseRecord& c, const Params& pi) {
    std::vector<IrrepLabel> out;
    for (const auto& t : branch_case(c, pi)) out.push_back(theta_label(c, t));
    return out;
}

}  // namespace branchlab
