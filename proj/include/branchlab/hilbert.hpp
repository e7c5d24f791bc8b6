#pragma once

#include "branchlab/catalog.hpp"

#include <vector>

namespace branchlab {

// Number of (a_1..a_k) in N^k with sum a_i m_i = N.
Integer v_sequence(const std::vector<int>& degrees, int N);

// Degree-N count of a single factor of a stored model.
Integer factor_count(const HilbertFactor& f, int N);

// dim S^N(g/h)^H from the case's combinatorial model; throws if the case has none.
Integer graded_invariant_dim(const CaseRecord& c, int N);

bool has_hilbert_model(const CaseRecord& c);

// v_sequence(degrees, N) == graded_invariant_dim(c, N) for N <= Nmax.
bool check_generator_degrees(const CaseRecord& c, int Nmax);

}  // namespace branchlab
