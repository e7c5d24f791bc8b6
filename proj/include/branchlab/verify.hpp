#pragma once

#include "branchlab/catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace branchlab {

// Euler symbols return the integer a of the eigenvalue sqrt(-1)*a.
Rational evaluate_generator(const CaseRecord& c, const Symbol& s, const Params& theta);

struct Failure {
    Params theta;
    std::string expected, got;
};

struct CheckResult {
    CheckResult() = default;
    CheckResult(std::string n) : name(std::move(n)) {}  // NOLINT: implicit from a name

    std::string name;
    long run = 0;
    long failed = 0;
    std::optional<Failure> first_failure;

    void record(bool ok, const Params& theta = {}, const std::string& expected = "", const std::string& got = "");
    bool passed() const { return failed == 0; }
};

struct CaseReport {
    std::string case_id;
    long bound = 0;
    std::vector<CheckResult> checks;

    long checks_run() const;
    long failures() const;
    bool passed() const { return failures() == 0; }
    const CheckResult* find(const std::string& name) const;
};

CaseReport check_relations(const CaseRecord& c, long bound);

// S_tau as an affine map of lambda alone.
AffineMap transfer_map(const CaseRecord& c, const Params& tau);
CaseReport check_transfer(const CaseRecord& c, long bound);

struct Certificate {
    bool full_rank = false;
    std::size_t rank = 0, columns = 0;
    std::vector<Params> witness;  // sample points of an invertible minor
};

// Moment matrix of all monomials of total degree <= degree in the generator values.
Certificate independence_certificate(const CaseRecord& c, const std::vector<Symbol>& gens, long bound, int degree);

CheckResult check_rank_identity(const CaseRecord& c);
CheckResult check_degree_counts(const CaseRecord& c);
CheckResult check_pi_tau(const CaseRecord& c, long bound);
CheckResult check_strong_multiplicity_free(const CaseRecord& c, long bound);
CheckResult check_dimension_conservation(const CaseRecord& c, long bound);
CheckResult check_cartan_helgason(const CaseRecord& c, long bound);
CheckResult check_generator_degree_model(const CaseRecord& c, int nmax);
CheckResult check_independence(const CaseRecord& c, long bound, int degree);
CheckResult check_casimir_cross(const CaseRecord& c, long bound);
CheckResult check_index_two(const CaseRecord& c, long bound);

CheckResult check_dgx_membership();
CheckResult check_x_not_in_R();
CheckResult check_R_plus_Rx(int max_degree);
CheckResult check_dgx_evaluation(const CaseRecord& star, long bound);
CheckResult check_q_a(long bound);

struct VerifyOptions {
    long bound = 8;
    int degree = 2;
    int nmax = 12;
};

CaseReport verify_case(const CaseRecord& c, const VerifyOptions& opt);

nlohmann::json to_json(const CaseReport& r);

std::string params_string(const Params& p);

}  // namespace branchlab
