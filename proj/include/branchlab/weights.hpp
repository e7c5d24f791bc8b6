#pragma once

#include "branchlab/rational.hpp"

#include <string>
#include <vector>

namespace branchlab {

using WeightVector = std::vector<Rational>;

WeightVector weight(std::initializer_list<Rational> xs);
WeightVector weight_from_ints(const std::vector<long>& xs);
std::string to_string(const WeightVector& v);

// A(0) is the one-coordinate torus: no roots, trivial Weyl group.
struct WeylType {
    enum class Kind { A, B, C, D, BC, G2, Trivial, Product };
    Kind kind = Kind::Trivial;
    int n = 0;
    std::vector<WeylType> factors;

    static WeylType A(int n);
    static WeylType B(int n);
    static WeylType C(int n);
    static WeylType D(int n);
    static WeylType BC(int n);
    static WeylType G2();
    static WeylType Trivial();
    static WeylType Product(std::vector<WeylType> fs);

    std::size_t dim() const;  // number of coordinates
    std::string name() const;
    bool operator==(const WeylType&) const = default;
};

// Plain coordinate dot product.
Rational inner_product(const WeightVector& v, const WeightVector& w);
// Invariant form of the type: the G2 Gram matrix in the fundamental-weight basis, the dot product otherwise.
Rational pairing(const WeylType& t, const WeightVector& v, const WeightVector& w);

std::vector<WeightVector> positive_roots(const WeylType& t);
std::vector<WeightVector> simple_roots(const WeylType& t);
WeightVector rho(const WeylType& t);

WeightVector reflect(const WeylType& t, const WeightVector& alpha, const WeightVector& v);
bool is_dominant(const WeylType& t, const WeightVector& v);
WeightVector dominant_representative(const WeylType& t, const WeightVector& v);
bool weyl_orbit_equal(const WeylType& t, const WeightVector& v, const WeightVector& w);

// Closure of {v} under simple reflections; sorted, duplicates removed.
std::vector<WeightVector> weyl_orbit(const WeylType& t, const WeightVector& v);

Integer weyl_dimension(const WeylType& t, const WeightVector& rho_t, const WeightVector& lambda);

// Splits a product-type vector into factor blocks (a single block for non-products).
std::vector<WeightVector> split_factors(const WeylType& t, const WeightVector& v);

}  // namespace branchlab
