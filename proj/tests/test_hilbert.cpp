#include "doctest.h"

#include "branchlab/hilbert.hpp"
#include "support.hpp"

#include <functional>
#include <map>

using namespace branchlab;
using testsupport::cases;
using testsupport::get;

namespace {

// Direct scan over all exponent tuples.
long naive_v(const std::vector<int>& m, int N) {
    long count = 0;
    std::vector<int> a(m.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == m.size()) {
            count += left == 0;
            return;
        }
        for (int x = 0; x * m[i] <= left; ++x) rec(i + 1, left - x * m[i]);
    };
    rec(0, N);
    return count;
}

// Non-increasing (a1,b1,...,an,bn) in N^{2n} with 2*sum(a) - sum(b) = N.
long combin_scan(int n, int N) {
    long count = 0;
    std::vector<int> v(std::size_t(2 * n));
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
        if (i == v.size()) {
            int s = 0;
            for (std::size_t k = 0; k < v.size(); ++k) s += k % 2 ? -v[k] : 2 * v[k];
            count += s == N;
            return;
        }
        for (int x = 0; x <= cap; ++x) {
            v[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, 2 * N);
    return count;
}

std::vector<Integer> series(const std::vector<int>& m, int nmax) {
    std::vector<Integer> out;
    for (int N = 0; N <= nmax; ++N) out.push_back(v_sequence(m, N));
    return out;
}

}  // namespace

TEST_CASE("v_sequence examples") {
    CHECK(v_sequence({1, 2}, 4) == 3);
    CHECK(v_sequence({2, 2, 2}, 4) == 6);
    for (const auto& m : std::vector<std::vector<int>>{{}, {1}, {3, 5}, {2, 2, 2}}) CHECK(v_sequence(m, 0) == 1);
}

TEST_CASE("property: v_sequence agrees with naive enumeration") {
    std::vector<int> m;
    std::function<void(int)> rec = [&](int lo) {
        for (int N = 0; N <= 20; ++N) CHECK(v_sequence(m, N) == naive_v(m, N));
        if (m.size() == 4) return;
        for (int p = lo; p <= 5; ++p) {
            m.push_back(p);
            rec(p);
            m.pop_back();
        }
    };
    rec(1);
}

TEST_CASE("graded invariant dimensions") {
    CHECK(graded_invariant_dim(get("i:2"), 4) == 3);
    CHECK(graded_invariant_dim(get("iv:1"), 2) == 2);
    CHECK(graded_invariant_dim(get("star"), 2) == 3);
    for (int n = 1; n <= 2; ++n)
        for (int N = 0; N <= 8; ++N) CHECK(graded_invariant_dim(get("iv:" + std::to_string(n)), N) == combin_scan(n, N));
}

TEST_CASE("generator degrees") {
    CHECK(get("i:1").degrees == std::vector<int>{1, 2});
    CHECK(get("vi").degrees == std::vector<int>{2, 2});
    for (const std::string id : {"i:1", "i:2", "i:3", "iii:1", "iv:1", "iv:2", "iv:3", "v:1", "v:2", "vi", "vii", "viii", "ix", "x",
                                 "xi", "star"})
        CHECK_MESSAGE(has_hilbert_model(get(id)), id);
    for (const auto& c : cases())
        if (has_hilbert_model(c)) CHECK_MESSAGE(check_generator_degrees(c, 12), c.id());
    CHECK_THROWS(graded_invariant_dim(get("xiv"), 2));
}

TEST_CASE("central generator of the unitary model") {
    // The invariants of gl(2n+1)/sp(n) are those of sl(2n+1)/sp(n) times one central degree-1 generator.
    for (int n = 1; n <= 3; ++n) {
        const auto& c = get("iv:" + std::to_string(n));
        std::vector<int> full{1, 1};
        for (int k = 2; k <= n; ++k) full.insert(full.end(), {k, k});
        full.push_back(n + 1);
        std::vector<int> with_centre = c.degrees;
        with_centre.push_back(1);
        std::sort(with_centre.begin(), with_centre.end());
        CHECK(with_centre == full);
    }
}

TEST_CASE("property: stored degree multisets are determined by their series") {
    std::map<std::vector<Integer>, std::vector<std::vector<int>>> by_series;
    std::vector<int> m;
    std::function<void(int)> rec = [&](int lo) {
        by_series[series(m, 12)].push_back(m);
        if (m.size() == 7) return;
        for (int p = lo; p <= 6; ++p) {
            m.push_back(p);
            rec(p);
            m.pop_back();
        }
    };
    rec(1);
    for (const auto& c : cases()) {
        auto d = c.degrees;
        std::sort(d.begin(), d.end());
        const auto& same = by_series[series(d, 12)];
        CHECK_MESSAGE(same.size() == 1, c.id());
        if (same.size() == 1) CHECK(same[0] == d);
    }
}
