#pragma once

#include "branchlab/catalog.hpp"

#include <utility>
#include <vector>

namespace branchlab {

// Sorted (weight, multiplicity) pairs.
using WeightMultiset = std::vector<std::pair<WeightVector, int>>;

WeightMultiset to_multiset(std::vector<WeightVector> ws);

// SO(N) -> SO(N-1) by interlacing; Spin labels (all half-integral) branch the same way.
WeightMultiset branch_SO_step(int N, const WeightVector& lambda);

// U(N) -> U(N-1) x U(1); each entry is mu with the U(1) charge appended.
WeightMultiset branch_U_step(int N, const WeightVector& lambda);

// Theta parameters occurring in pi restricted to G, sorted lexicographically.
std::vector<Params> branch_case(const CaseRecord& c, const Params& pi);
std::vector<IrrepLabel> branch_case_labels(const CaseRecord& c, const Params& pi);

}  // namespace branchlab
