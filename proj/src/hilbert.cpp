#include "branchlab/hilbert.hpp"

#include <functional>
#include <stdexcept>

namespace branchlab {

Integer v_sequence(const std::vector<int>& degrees, int N) {
    if (N < 0) return 0;
    std::vector<Integer> ways(std::size_t(N) + 1, 0);
    ways[0] = 1;
    for (int m : degrees) {
        if (m <= 0) throw std::invalid_argument("v_sequence: degrees must be positive");
        for (int s = m; s <= N; ++s) ways[std::size_t(s)] += ways[std::size_t(s - m)];
    }
    return ways[std::size_t(N)];
}

namespace {

// Decreasing (a_1, b_1, ..., a_n, b_n) >= 0 with 2 sum a - sum b = N.
Integer combin_count(int n, int N) {
    Integer count = 0;
    std::vector<int> x(2 * std::size_t(n));
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t i, int cap, long weight) {
        if (i == x.size()) {
            if (weight == N) ++count;
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            x[i] = v;
            rec(i + 1, v, weight + (i % 2 == 0 ? 2 * v : -v));
        }
    };
    // 2 sum a - sum b >= a_1, so a_1 <= N bounds everything.
    rec(0, N, 0);
    return count;
}

}  // namespace

Integer factor_count(const HilbertFactor& f, int N) {
    if (N < 0) return 0;
    switch (f.kind) {
        case HilbertFactor::Kind::Linear: return 1;
        case HilbertFactor::Kind::Quadratic: return N % 2 == 0 ? 1 : 0;
        case HilbertFactor::Kind::WeightPair: {
            Integer count = 0;
            for (long a = 0; a <= N; ++a)
                if (a * f.args.at(0) + (N - a) * f.args.at(1) == 0) ++count;
            return count;
        }
        case HilbertFactor::Kind::Combin: return combin_count(int(f.args.at(0)), N);
    }
    return 0;
}

bool has_hilbert_model(const CaseRecord& c) { return !c.hilbert.empty(); }

Integer graded_invariant_dim(const CaseRecord& c, int N) {
    if (!has_hilbert_model(c)) throw std::invalid_argument(c.id() + ": no stored Hilbert model");
    if (N < 0) return 0;
    // Convolution of the factor series.
    std::vector<Integer> acc(std::size_t(N) + 1, 0);
    acc[0] = 1;
    for (const auto& f : c.hilbert) {
        std::vector<Integer> next(acc.size(), 0);
        for (int s = 0; s <= N; ++s)
            for (int t = 0; s + t <= N; ++t) next[std::size_t(s + t)] += acc[std::size_t(s)] * factor_count(f, t);
        acc = std::move(next);
    }
    return acc[std::size_t(N)];
}

bool check_generator_degrees(const CaseRecord& c, int Nmax) {
    for (int N = 0; N <= Nmax; ++N)
        if (v_sequence(c.degrees, N) != graded_invariant_dim(c, N)) return false;
    return true;
}

}  // namespace branchlab
