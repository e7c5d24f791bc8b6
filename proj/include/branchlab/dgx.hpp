#pragma once

#include "branchlab/rational.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace branchlab {

using Exponent = std::array<int, 3>;

// Polynomials in x, y, z with rational coefficients; zero terms are never stored.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rational(c)) {}
    static Poly monomial(const Exponent& e, const Rational& c = 1);
    static Poly x();
    static Poly y();
    static Poly z();

    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rational coefficient(const Exponent& e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;
    Poly pow(unsigned e) const;

    Rational eval(const Rational& x, const Rational& y, const Rational& z) const;
    Poly substitute_z(const Rational& value) const;
    Poly swap_xy() const;
    std::string to_string() const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

private:
    void add_term(const Exponent& e, const Rational& c);
    std::map<Exponent, Rational> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);

struct NamedPoly {
    std::string name;
    Poly poly;
};

// r1..r4, q, p1, p2 in their closed forms for the product case.
std::vector<NamedPoly> dgx_generators();
// Generators of R: q, r1, r2, r3, r4.
std::vector<NamedPoly> r_generators();
Poly dgx_generator(const std::string& name);
// The Pfaffian generator recomputed from the stored infinitesimal characters.
Poly r4_from_pfaffian();

// Linear combination of products of generators, one exponent per generator.
struct Combination {
    std::vector<std::pair<Rational, std::vector<int>>> terms;
    Poly evaluate(const std::vector<NamedPoly>& gens) const;
    std::string to_string(const std::vector<NamedPoly>& gens) const;
};

// Products of gens with weighted degree <= bound (weights = polynomial degrees).
std::vector<std::vector<int>> generator_products(const std::vector<NamedPoly>& gens, int bound);

// Expresses f through products of gens of total degree <= degree_bound, if possible.
std::optional<Combination> membership(const Poly& f, const std::vector<NamedPoly>& gens, int degree_bound);

struct SymmetryWitness {
    bool passed = false;
    std::vector<std::string> transcript;
};

// At z = 1 every generator of R is symmetric in x and y while x is not.
SymmetryWitness x_not_in_R_witness(const std::vector<NamedPoly>& gens);
SymmetryWitness x_not_in_R_witness();

struct RxDecomposition {
    Combination g, h;  // f = g + h * x with g, h in R
    Poly g_poly, h_poly;
};

// Eliminates once for a degree bound; decomposes any f of degree <= bound.
class RxDecomposer {
public:
    RxDecomposer(std::vector<NamedPoly> gens, int bound);
    std::optional<RxDecomposition> decompose(const Poly& f) const;
    int bound() const { return bound_; }

private:
    std::vector<NamedPoly> gens_;
    int bound_;
    std::vector<std::vector<int>> g_products_, h_products_;
    std::map<Exponent, std::size_t> rows_;
    std::unique_ptr<LinearSolver> solver_;
};

// Throws with the offending monomial when no decomposition exists within the bound.
RxDecomposition decompose_R_plus_Rx(const Poly& f, int degree_bound);

// Specialization z = (a+3)^2.
Poly q_a(const Poly& f, long a);

}  // namespace branchlab
