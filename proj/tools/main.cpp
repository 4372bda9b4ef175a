// mexsum: tables, identity verification, moment reports, asymptotic sampling
// and ad-hoc q-series expression evaluation on top of the mexsum library.
//
// Exit codes: 0 success / all identities pass, 1 verification failure,
// 2 I/O failure, 3 usage or parse errors (including unknown identity ids).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mexsum/identities.hpp"
#include "mexsum/mexstats.hpp"
#include "mexsum/partitions.hpp"
#include "mexsum/series.hpp"

namespace {

using namespace mexsum;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 3;

// Writes to --out when given, standard output otherwise. Data only; all
// timing and progress goes to standard error.
int emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return std::cout.good() ? kExitOk : kExitIo;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return kExitIo;
    }
    out << content;
    out.flush();
    if (!out.good()) {
        std::cerr << "error: failed writing output file: " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_table(unsigned order, const std::string& format, const std::string& out_path,
              bool no_enum) {
    if (!no_enum && order > mexstats::kEnumRouteCap) {
        std::cerr << "error: enumeration-backed columns (o1/o3) are capped at n <= "
                  << mexstats::kEnumRouteCap << "; pass --no-enum to drop them\n";
        return kExitUsage;
    }
    partitions::warm_caches(order);
    const partitions::D2Table d2 = partitions::d2_table(order);

    std::ostringstream os;
    ordered_json rows = ordered_json::array();
    if (format == "csv") {
        os << (no_enum ? "n,sigma_mex,sigma_bar,sigma_o,sigma_e,o,e,d2,d2e,d2o"
                       : "n,sigma_mex,sigma_bar,sigma_o,sigma_e,o,e,o1,o3,d2,d2e,d2o")
           << '\n';
    }
    for (unsigned n = 0; n <= order; ++n) {
        const mexstats::MexStatRow row = mexstats::compute_row(n, !no_enum);
        if (format == "csv") {
            os << n << ',' << row.sigma_mex << ',' << row.sigma_bar << ',' << row.sigma_o << ','
               << row.sigma_e << ',' << row.o << ',' << row.e;
            if (!no_enum) os << ',' << row.o1 << ',' << row.o3;
            os << ',' << d2.d2[n] << ',' << d2.d2e[n] << ',' << d2.d2o[n] << '\n';
        } else {
            ordered_json j = ordered_json::parse(mexstats::row_to_json(row));
            if (no_enum) {
                j.erase("o1");
                j.erase("o3");
            }
            j["d2"] = d2.d2[n].get_str();
            j["d2e"] = d2.d2e[n].get_str();
            j["d2o"] = d2.d2o[n].get_str();
            rows.push_back(std::move(j));
        }
    }
    if (format == "json") os << rows.dump(2) << '\n';
    return emit(out_path, os.str());
}

int run_moments(unsigned order, unsigned kmax, const std::string& format,
                const std::string& out_path, bool no_enum) {
    partitions::warm_caches(order);
    bool cross_check_failed = false;

    std::ostringstream os;
    ordered_json rows = ordered_json::array();
    if (format == "csv") os << "n,k,sigma,sigma_bar,sigma_o,sigma_e,enum_check\n";
    for (unsigned n = 0; n <= order; ++n) {
        std::vector<mpz_class> hist;
        const bool enumerate = !no_enum && n <= mexstats::kEnumRouteCap;
        if (enumerate) hist = mexstats::mex_histogram(n);
        for (unsigned k = 1; k <= kmax; ++k) {
            const mpz_class sigma = mexstats::sigma_moment(n, k);
            const mpz_class sigma_bar = mexstats::sigma_bar_moment(n, k);
            const mpz_class sigma_o = mexstats::sigma_o_moment(n, k);
            const mpz_class sigma_e = mexstats::sigma_e_moment(n, k);
            std::string check = "skip";
            if (enumerate) {
                mpz_class total = 0, bar = 0, odd = 0, even = 0, mk;
                for (unsigned m = 1; m < hist.size(); ++m) {
                    mpz_ui_pow_ui(mk.get_mpz_t(), m, k);
                    mk *= hist[m];
                    total += mk;
                    bar += (m % 2 == 1) ? mk : -mk;
                    ((m % 2 == 1) ? odd : even) += mk;
                }
                check = (total == sigma && bar == sigma_bar && odd == sigma_o && even == sigma_e)
                            ? "ok"
                            : "FAIL";
                if (check == "FAIL") cross_check_failed = true;
            }
            if (format == "csv") {
                os << n << ',' << k << ',' << sigma << ',' << sigma_bar << ',' << sigma_o << ','
                   << sigma_e << ',' << check << '\n';
            } else {
                rows.push_back({{"n", n},
                                {"k", k},
                                {"sigma", sigma.get_str()},
                                {"sigma_bar", sigma_bar.get_str()},
                                {"sigma_o", sigma_o.get_str()},
                                {"sigma_e", sigma_e.get_str()},
                                {"enum_check", check}});
            }
        }
    }
    if (format == "json") os << rows.dump(2) << '\n';
    const int code = emit(out_path, os.str());
    if (code != kExitOk) return code;
    return cross_check_failed ? kExitVerificationFailure : kExitOk;
}

int run_verify(const std::string& id, unsigned order, bool order_given,
               const std::string& profile, const std::string& format,
               const std::string& out_path, const std::string& file_path, bool list_only) {
    if (list_only) {
        return emit(out_path, identities::format_registry());
    }

    std::vector<identities::IdentityEntry> entries;
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) {
            std::cerr << "error: cannot open identity file: " << file_path << "\n";
            return kExitIo;
        }
        try {
            entries = identities::read_identity_file(in);
        } catch (const identities::ParseError& err) {
            std::cerr << "error: " << file_path << ": " << err.what() << "\n";
            return kExitUsage;
        }
    } else {
        entries = identities::registry();
    }

    if (id != "all") {
        std::vector<identities::IdentityEntry> selected;
        for (const auto& entry : entries) {
            if (entry.id == id) selected.push_back(entry);
        }
        if (selected.empty()) {
            std::cerr << "error: unknown identity id: " << id << "\n";
            return kExitUsage;
        }
        entries = std::move(selected);
    }

    bool all_pass = true;
    std::ostringstream os;
    ordered_json reports = ordered_json::array();
    for (const auto& entry : entries) {
        const unsigned effective_order =
            order_given ? order
                        : (profile == "stress" ? 200u : static_cast<unsigned>(entry.default_order));
        const identities::VerificationReport report =
            identities::verify_entry(entry, effective_order);
        all_pass = all_pass && report.pass;
        std::cerr << entry.id << ": " << (report.pass ? "pass" : "FAIL") << " at order "
                  << report.order << " (" << report.elapsed_ms << " ms)\n";
        if (format == "csv") {
            os << report.id << ',' << report.order << ',' << (report.pass ? "pass" : "fail");
            if (report.mismatch.has_value()) {
                os << ',' << report.mismatch->exponent << ',' << report.mismatch->lhs.get_str()
                   << ',' << report.mismatch->rhs.get_str();
            } else {
                os << ",,,";
            }
            os << '\n';
        } else {
            reports.push_back(ordered_json::parse(identities::report_to_json(report)));
        }
    }
    std::ostringstream framed;
    if (format == "csv") {
        framed << "id,order,status,mismatch_exponent,lhs,rhs\n" << os.str();
    } else {
        framed << reports.dump(2) << '\n';
    }
    const int code = emit(out_path, framed.str());
    if (code != kExitOk) return code;
    return all_pass ? kExitOk : kExitVerificationFailure;
}

int run_expr(const std::string& text, unsigned order, const std::string& format,
             const std::string& out_path) {
    try {
        const identities::ExprPtr expr = identities::parse(text);
        const series::TruncatedSeries value = identities::evaluate(*expr, order);
        std::ostringstream os;
        if (format == "json") {
            os << series::to_json(value) << '\n';
        } else {
            for (std::size_t i = 0; i <= value.order(); ++i) {
                if (i) os << ',';
                os << value.coeff(i);
            }
            os << '\n';
        }
        return emit(out_path, os.str());
    } catch (const identities::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const identities::EvalError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
}

bool parse_sample_spec(const std::string& spec, std::vector<unsigned>& samples) {
    try {
        if (spec.find(':') != std::string::npos) {
            // geometric start:ratio:end, e.g. 100:4:6400
            std::istringstream in(spec);
            std::string a, r, b;
            if (!std::getline(in, a, ':') || !std::getline(in, r, ':') || !std::getline(in, b)) {
                return false;
            }
            const unsigned long start = std::stoul(a), ratio = std::stoul(r), end = std::stoul(b);
            if (start < 1 || ratio < 2 || end < start) return false;
            for (unsigned long n = start; n <= end; n *= ratio) {
                samples.push_back(static_cast<unsigned>(n));
            }
            return true;
        }
        std::istringstream in(spec);
        std::string token;
        while (std::getline(in, token, ',')) {
            const unsigned long n = std::stoul(token);
            if (n < 1) return false;
            samples.push_back(static_cast<unsigned>(n));
        }
        return !samples.empty();
    } catch (const std::exception&) {
        return false;
    }
}

int run_asymptotic(const std::string& spec, const std::string& format,
                   const std::string& out_path) {
    std::vector<unsigned> samples;
    if (!parse_sample_spec(spec, samples)) {
        std::cerr << "error: bad sample spec '" << spec
                  << "' (expected e.g. 100,400,1600 or 100:4:6400)\n";
        return kExitUsage;
    }
    const auto rows = identities::asymptotic_ratios(samples);
    std::ostringstream os;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) arr.push_back({{"n", row.n}, {"ratio", row.ratio}});
        os << arr.dump(2) << '\n';
    } else {
        os << "n,ratio\n";
        for (const auto& row : rows) os << row.n << ',' << row.ratio << '\n';
    }
    return emit(out_path, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimal-excludant partition statistics and q-series identity checks"};
    app.require_subcommand(1);

    unsigned order = 20;
    unsigned kmax = 3;
    std::string format;
    std::string out_path;
    std::string profile = "default";
    bool no_enum = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-N,--order", order, "Highest index / series order");
        cmd->add_option("--format", format, "Output format (default: json for verify, csv otherwise)")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
    };

    CLI::App* table = app.add_subcommand("table", "Per-n table of every mex statistic");
    add_common(table);
    table->add_flag("--no-enum", no_enum, "Skip enumeration-backed columns (o1/o3)");

    CLI::App* verify = app.add_subcommand("verify", "Verify identities coefficient-wise");
    std::string verify_id = "all";
    std::string identity_file;
    bool list_only = false;
    verify->add_option("id", verify_id, "Identity id or 'all'");
    add_common(verify);
    verify->add_option("--profile", profile, "default: order 60; stress: order 200")
        ->check(CLI::IsMember({"default", "stress"}));
    verify->add_option("--file", identity_file, "Verify identities from a text file (ID: LHS == RHS per line)");
    verify->add_flag("--list", list_only, "Print the built-in registry in the text format and exit");

    CLI::App* moments = app.add_subcommand("moments", "Moment sums for k = 1..kmax");
    add_common(moments);
    moments->add_option("--kmax", kmax, "Largest moment power")->check(CLI::Range(1u, 10u));
    moments->add_flag("--no-enum", no_enum, "Skip the enumeration cross-check column");

    CLI::App* asymptotic =
        app.add_subcommand("asymptotic", "Ratio of sigma_mex(n) to its asymptotic main term");
    std::string sample_spec;
    asymptotic->add_option("samples", sample_spec, "Comma list (100,400) or geometric start:ratio:end")
        ->required();
    add_common(asymptotic);

    CLI::App* expr = app.add_subcommand("expr", "Evaluate a q-series expression");
    std::string expr_text;
    expr->add_option("expression", expr_text, "Expression in the identity grammar")->required();
    add_common(expr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (format.empty()) format = *verify ? "json" : "csv";

    try {
        if (*table) return run_table(order, format, out_path, no_enum);
        if (*verify) {
            return run_verify(verify_id, order, verify->count("-N") || verify->count("--order"),
                              profile, format, out_path, identity_file, list_only);
        }
        if (*moments) return run_moments(order, kmax, format, out_path, no_enum);
        if (*asymptotic) return run_asymptotic(sample_spec, format, out_path);
        if (*expr) return run_expr(expr_text, order, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
