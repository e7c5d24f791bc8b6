#pragma once

#include "branchlab/weights.hpp"

#include <functional>
#include <string>
#include <vector>

namespace branchlab {

struct GroupDescriptor {
    enum class Kind { U, SU, SO, Spin, Sp, G2, Product, AlmostProduct };
    Kind kind = Kind::U;
    int n = 0;  // the matrix size parameter: U(n), SO(n), Sp(n)
    std::vector<GroupDescriptor> factors;
    WeylType weyl;
    WeightVector rho;

    static GroupDescriptor U(int n);
    static GroupDescriptor SU(int n);
    static GroupDescriptor SO(int n);
    static GroupDescriptor Spin(int n);
    static GroupDescriptor Sp(int n);
    static GroupDescriptor G2();
    static GroupDescriptor Product(std::vector<GroupDescriptor> fs);
    // Computations happen on the product cover; labels must have even total coordinate sum.
    static GroupDescriptor AlmostProduct(std::vector<GroupDescriptor> fs);

    std::size_t rank() const { return weyl.dim(); }
    std::size_t factor_count() const;
    std::string name() const;
};

struct IrrepLabel {
    GroupDescriptor group;
    WeightVector highest_weight;
};

struct InfinitesimalCharacter {
    WeylType weyl;
    WeightVector value;
    bool operator==(const InfinitesimalCharacter& o) const { return value == o.value; }
};

bool is_valid_label(const GroupDescriptor& g, const WeightVector& hw);
void require_valid(const IrrepLabel& r);

// One entry per factor (a single entry for simple groups and tori).
std::vector<Rational> casimir_eigenvalue(const IrrepLabel& r);
Rational casimir_total(const IrrepLabel& r);

InfinitesimalCharacter infinitesimal_character(const IrrepLabel& r);

Integer dimension(const IrrepLabel& r);

// T(nu) = embed*nu + ambient_rho - embed*rho_a.
WeightVector rho_shift_T(const WeightVector& ambient_rho, const WeightVector& rho_a, const RatMatrix& embed,
                         const WeightVector& nu);

bool cartan_helgason_admissible(const WeightVector& lambda, const std::vector<WeightVector>& restricted_positive,
                                const std::function<bool(const WeightVector&)>& t_kill);

}  // namespace branchlab
