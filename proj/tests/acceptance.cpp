#include "branchlab/catalog.hpp"
#include "branchlab/hilbert.hpp"
#include "branchlab/reps.hpp"
#include "branchlab/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace branchlab;

namespace {

struct Tally {
    long run = 0, failed = 0;
    std::string first;

    void add(const CheckResult& r, const std::string& where) {
        run += r.run;
        failed += r.failed;
        if (r.failed && first.empty()) {
            first = where + " " + r.name;
            if (r.first_failure)
                first += " at " + params_string(r.first_failure->theta) + ": expected " + r.first_failure->expected +
                         ", got " + r.first_failure->got;
        }
    }
    void add(const CaseReport& rep) {
        for (const auto& ch : rep.checks) add(ch, rep.case_id);
    }
};

int failures = 0;

void line(int id, const std::string& title, const std::string& tolerance, const std::function<Tally()>& body,
          double budget = 0) {
    auto t0 = std::chrono::steady_clock::now();
    Tally t = body();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = t.failed == 0 && t.run > 0 && (budget <= 0 || secs < budget);
    failures += !ok;
    std::printf("[%s] %d %s: %ld checks, %ld failed, tolerance %s, %.1f s", ok ? "PASS" : "FAIL", id, title.c_str(),
                t.run, t.failed, tolerance.c_str(), secs);
    if (budget > 0) std::printf(" (budget %.0f s)", budget);
    std::printf("\n");
    if (!t.first.empty()) std::printf("       first failure: %s\n", t.first.c_str());
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    long bound = 8;
    int max_n = 3;
    app.add_option("--bound", bound, "parameter bound")->check(CLI::NonNegativeNumber);
    app.add_option("--max-n", max_n, "largest size parameter")->check(CLI::Range(1, 4));
    CLI11_PARSE(app, argc, argv);

    const auto cases = all_cases(max_n);
    std::printf("acceptance: %zu cases, size parameters <= %d, bound %ld\n", cases.size(), max_n, bound);

    line(1, "relation suite", "0 (exact rationals)", [&] {
        Tally t;
        for (const auto& c : cases) t.add(check_relations(c, bound));
        return t;
    }, 60);

    line(2, "transfer suite", "0 (exact)", [&] {
        Tally t;
        for (const auto& c : cases) t.add(check_transfer(c, bound));
        return t;
    });

    line(3, "rank identity", "exact", [&] {
        Tally t;
        for (const auto& c : cases) t.add(check_rank_identity(c), c.id());
        return t;
    });

    line(4, "dimension conservation", "exact (bound 6 for SO(16))", [&] {
        Tally t;
        for (const auto& c : cases) t.add(check_dimension_conservation(c, bound), c.id());
        return t;
    });

    line(5, "strong multiplicity-freeness", "exact", [&] {
        Tally t;
        for (const auto& c : cases) t.add(check_strong_multiplicity_free(c, bound), c.id());
        return t;
    });

    line(6, "generator degrees, Nmax 12", "exact", [&] {
        Tally t;
        for (const auto& c : cases)
            if (has_hilbert_model(c)) t.add(check_generator_degree_model(c, 12), c.id());
        return t;
    });

    line(7, "polynomial ring of the product case", "exact", [&] {
        Tally t;
        const CaseRecord* star = nullptr;
        for (const auto& c : cases)
            if (c.tag == "star") star = &c;
        t.add(check_dgx_membership(), "star");
        t.add(check_x_not_in_R(), "star");
        t.add(check_R_plus_Rx(8), "star");
        t.add(check_dgx_evaluation(*star, std::min(bound, 6L)), "star");
        t.add(check_q_a(bound), "star");
        return t;
    });

    line(8, "independence certificates, degree 2", "exact rank", [&] {
        Tally t;
        for (const auto& c : cases) {
            t.add(check_independence(c, bound, 2), c.id());
            if (c.tag == "ix") t.add(check_index_two(c, 4), c.id());
        }
        return t;
    });

    line(9, "P-side generators against pi(theta) Casimirs", "exact", [&] {
        Tally t;
        for (const auto& c : cases) {
            CheckResult r{"pi-casimir"};
            for (const auto& theta : enumerate_disc(c, bound)) {
                auto want = casimir_eigenvalue(pi_label(c, pi_params(c, theta)));
                Rational total = 0;
                bool ok = true;
                for (std::size_t f = 0; f < want.size(); ++f) {
                    Symbol s{Symbol::Side::P, Symbol::Kind::Casimir, int(f), 0, 0, 1, "C_Gt"};
                    ok = ok && evaluate_generator(c, s, theta) == want[f];
                    total += want[f];
                }
                Rational got = evaluate_generator(c, Symbol{Symbol::Side::P, Symbol::Kind::Casimir, -1, 0, 0, 1, "C_Gt"}, theta);
                r.record(ok && got == total, theta, to_string(total), to_string(got));
            }
            t.add(r, c.id());
        }
        return t;
    });

    std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
