#include "branchlab/catalog_io.hpp"
#include "branchlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace branchlab;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string normalize(std::string s) {
    for (std::string::size_type p; (p = s.find("′")) != std::string::npos;) s.replace(p, 3, "'");
    return s;
}

std::vector<CaseRecord> select(const std::vector<CaseRecord>& all, const std::vector<std::string>& wanted) {
    if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) return all;
    std::vector<CaseRecord> out;
    for (const auto& w0 : wanted) {
        std::string w = normalize(w0);
        bool hit = false;
        for (const auto& c : all) {
            bool match = c.tag == w || c.id() == w || (w == "ii" && c.tag.rfind("ii_", 0) == 0) ||
                         (w.rfind("ii:", 0) == 0 && c.tag.rfind("ii_", 0) == 0 && std::to_string(c.size) == w.substr(3));
            if (match) {
                hit = true;
                bool dup = false;
                for (const auto& o : out) dup = dup || o.id() == c.id();
                if (!dup) out.push_back(c);
            }
        }
        if (!hit) throw UsageError("unknown case '" + w0 + "'");
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

json case_summary(const CaseRecord& c) {
    return {{"id", c.id()},
            {"tag", c.tag},
            {"size", c.size},
            {"Gt", c.gt_name},
            {"Ht", c.ht_name},
            {"G", c.g_name},
            {"H", c.h_name},
            {"K", c.k_name},
            {"ranks", c.ranks},
            {"degrees", c.degrees},
            {"symmetric", c.symmetric()},
            {"hilbert_model", !c.hilbert.empty()}};
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write " + out_path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of spherical branching data"};
    app.require_subcommand(1);
    std::vector<std::string> cases;
    long bound = 8;
    int max_n = 2, degree = 2;
    std::string format = "text", out;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--cases", cases, "case tags or ids, or 'all'")->delimiter(',');
        sub->add_option("--bound", bound, "parameter box bound")->check(CLI::NonNegativeNumber);
        sub->add_option("--max-n", max_n, "largest size parameter")->check(CLI::PositiveNumber);
        sub->add_option("--degree", degree, "moment-matrix degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out, "output path (default stdout)");
    };
    auto* list = app.add_subcommand("list", "list catalog cases");
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    auto* transfer = app.add_subcommand("transfer", "print the transfer map S_tau");
    common(list);
    common(verify);
    common(transfer);
    std::vector<long> tau;
    std::vector<std::string> lambda;
    transfer->add_option("--tau", tau, "tau parameters")->delimiter(',');
    transfer->add_option("--lambda", lambda, "lambda coordinates (rationals)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto all = load_catalog(default_catalog_path(), max_n);
        auto chosen = select(all, cases);
        std::ostringstream os;

        if (*list) {
            if (format == "json") {
                json arr = json::array();
                for (const auto& c : chosen) arr.push_back(case_summary(c));
                os << json{{"schema", 1}, {"cases", arr}}.dump(2) << '\n';
            } else {
                for (const auto& c : chosen)
                    os << c.id() << "  " << c.gt_name << "/" << c.ht_name << " ~ " << c.g_name << "/" << c.h_name
                       << "  K=" << c.k_name << "  ranks=(" << c.ranks[0] << "," << c.ranks[1] << "," << c.ranks[2]
                       << ")  degrees=(" << join(c.degrees) << ")\n";
            }
            emit(out, os.str());
            return 0;
        }

        if (*verify) {
            VerifyOptions opt{bound, degree, 12};
            std::vector<CaseReport> reports;
            for (const auto& c : chosen) reports.push_back(verify_case(c, opt));
            long failures = 0, run = 0;
            for (const auto& r : reports) {
                failures += r.failures();
                run += r.checks_run();
            }
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                json doc = {{"schema", 1},
                            {"bound", bound},
                            {"degree", degree},
                            {"max_n", max_n},
                            {"reports", arr},
                            {"summary", {{"cases", reports.size()}, {"checks_run", run}, {"failures", failures}}}};
                os << doc.dump(2) << '\n';
            } else {
                for (const auto& r : reports) {
                    os << (r.passed() ? "PASS " : "FAIL ") << r.case_id << "  (" << r.checks_run() << " evaluations)\n";
                    for (const auto& ch : r.checks) {
                        os << "    " << (ch.passed() ? "ok   " : "FAIL ") << ch.name << "  " << ch.run - ch.failed << "/"
                           << ch.run << "\n";
                        if (ch.first_failure)
                            os << "         at " << params_string(ch.first_failure->theta)
                               << " expected " << ch.first_failure->expected << " got " << ch.first_failure->got << "\n";
                    }
                }
                os << reports.size() << " cases, " << run << " evaluations, " << failures << " failures\n";
            }
            emit(out, os.str());
            return failures == 0 ? 0 : 1;
        }

        if (*transfer) {
            if (chosen.size() != 1) throw UsageError("transfer needs exactly one case");
            const auto& c = chosen[0];
            AffineMap m;
            try {
                m = transfer_map(c, tau);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            WeightVector lam;
            for (const auto& s : lambda) lam.push_back(parse_rational(s));
            if (!lam.empty() && lam.size() != m.source_dim())
                throw UsageError("lambda needs " + std::to_string(m.source_dim()) + " coordinates");
            if (format == "json") {
                json doc = {{"schema", 1}, {"case", c.id()}, {"tau", tau}, {"map", to_json(m)}};
                if (!lam.empty()) {
                    WeightVector img = m.apply(lam);
                    std::vector<std::string> a, b;
                    for (const auto& x : img) a.push_back(to_string(x));
                    for (const auto& x : dominant_representative(c.g.weyl, img)) b.push_back(to_string(x));
                    doc["image"] = a;
                    doc["canonical"] = b;
                }
                os << doc.dump(2) << '\n';
            } else {
                os << "case " << c.id() << "  tau=" << params_string(tau) << "\n";
                for (std::size_t i = 0; i < m.matrix.size(); ++i) os << "  row " << i << ": " << to_string(m.matrix[i])
                                                                      << "  + " << to_string(m.offset[i]) << "\n";
                if (!lam.empty()) {
                    WeightVector img = m.apply(lam);
                    os << "S(" << to_string(lam) << ") = " << to_string(img) << "\n";
                    os << "canonical: " << to_string(dominant_representative(c.g.weyl, img)) << "\n";
                }
            }
            emit(out, os.str());
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
