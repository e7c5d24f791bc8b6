#pragma once

#include "branchlab/reps.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace branchlab {

using Params = std::vector<long>;

struct LinearConstraint {
    enum class Kind { NonNegative, Zero, Even };
    Kind kind = Kind::NonNegative;
    std::vector<long> coeffs;
    long constant = 0;

    long value(const Params& p) const;
    bool holds(const Params& p) const;
};

struct ParamSpace {
    std::vector<std::string> names;
    std::vector<bool> is_signed;  // signed parameters range over [-bound, bound]
    std::vector<LinearConstraint> constraints;

    std::size_t dim() const { return names.size(); }
    bool contains(const Params& p) const;
    // Every tuple with all |coordinates| <= bound that satisfies the constraints, lexicographically sorted.
    std::vector<Params> enumerate(long bound) const;
};

struct AffineMap {
    RatMatrix matrix;  // target_dim x source_dim
    WeightVector offset;

    std::size_t source_dim() const;
    std::size_t target_dim() const { return offset.size(); }
    WeightVector apply(const WeightVector& x) const;
    WeightVector apply(const Params& x) const;
};

// Builds the affine map whose values on 0 and the unit vectors agree with f.
AffineMap affine_from(std::size_t source_dim, const std::function<WeightVector(const WeightVector&)>& f);

struct BranchRule {
    std::size_t free_count = 0;
    std::vector<std::string> free_names;
    std::vector<LinearConstraint> constraints;  // over (pi params || free params)
    AffineMap to_theta;                          // (pi params || free params) -> theta params
};

struct Symbol {
    enum class Side { P, Q, R };  // P: pi(theta) of G~, Q: tau(theta) of K, R: theta of G
    enum class Kind { Casimir, Euler, PowerSum, Pfaffian };
    Side side = Side::P;
    Kind kind = Kind::Casimir;
    int factor = -1;    // Casimir: factor index, -1 for the sum over factors
    int coord = 0;      // Euler: coordinate of the highest weight
    int exponent = 0;   // PowerSum
    Rational scale = 1;
    std::string name;
};

struct Relation {
    std::string name;
    std::vector<std::pair<Rational, Symbol>> terms;  // claims sum(coeff * value) == 0
};

struct CartanHelgason {
    bool present = false;
    bool traceless = false;  // project out the centre first (SU labels)
    std::vector<WeightVector> restricted_positive;
    std::vector<int> zero_coords;
    std::vector<std::pair<int, int>> equal_pairs;
    std::vector<std::pair<int, int>> opposite_pairs;

    bool kills(const WeightVector& lambda) const;
};

struct HilbertFactor {
    enum class Kind { Linear, Quadratic, WeightPair, Combin };
    Kind kind = Kind::Linear;
    std::vector<long> args;  // WeightPair: (w1, w2); Combin: (n)
};

struct CaseRecord {
    std::string tag;
    int size = 0;  // 0 for fixed-size cases
    std::string gt_name, ht_name, g_name, h_name, k_name;
    GroupDescriptor gt, g, k;

    ParamSpace theta, pi, tau;
    AffineMap theta_to_pi, theta_to_tau;
    AffineMap pi_hw, theta_hw, tau_hw;

    WeylType restricted_weyl;
    AffineMap lambda_rho;  // pi params -> lambda + rho_a
    std::optional<AffineMap> mu;  // tau params -> fiber parameter vector

    BranchRule branch;
    AffineMap transfer;  // (lambda || tau params) -> j*

    std::vector<Relation> relations;
    std::vector<Symbol> independent;
    std::array<int, 3> ranks{};
    int central = 0;  // extra central generators of a U(N) model over the ranks above
    std::vector<int> degrees;
    std::vector<HilbertFactor> hilbert;  // empty: no stored model
    CartanHelgason ch;

    std::string id() const;
    bool symmetric() const { return ch.present; }
};

std::vector<CaseRecord> all_cases(int max_n);
std::vector<std::string> case_tags();
// R-side generators r_1..r_4 of the star case (power sums and the Pfaffian).
std::vector<Symbol> star_r_generators();

// Alternating concatenation (j1,k1,j2,k2,...); len(k) must be len(j) or len(j)-1.
template <class T>
std::vector<T> alternating_concat(const std::vector<T>& j, const std::vector<T>& k);

std::vector<Params> enumerate_disc(const CaseRecord& c, long bound);
IrrepLabel theta_label(const CaseRecord& c, const Params& theta);
IrrepLabel pi_label(const CaseRecord& c, const Params& pi);
IrrepLabel tau_label(const CaseRecord& c, const Params& tau);
Params pi_params(const CaseRecord& c, const Params& theta);
Params tau_params(const CaseRecord& c, const Params& theta);
std::pair<IrrepLabel, IrrepLabel> pi_tau(const CaseRecord& c, const Params& theta);
std::array<int, 3> rank_triple(const CaseRecord& c);

}  // namespace branchlab

#include "branchlab/catalog_impl.hpp"
