// Command-line front end: exact Herzog-Kuehl values, greedy cone
// decomposition of diagram files, the bound functions with their lemma
// grids, desk-scale theorem verification, and the polynomial certificates.
//
// Exit codes: 0 success, 1 mathematical violation or certificate failure,
// 2 usage or input error.

#include "CLI11.hpp"
#include "json.hpp"

#include "betti/bounds.hpp"
#include "betti/certificates.hpp"
#include "betti/decompose.hpp"
#include "betti/degree_sequence.hpp"
#include "betti/diagram.hpp"
#include "betti/io.hpp"
#include "betti/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace betti;

using ojson = nlohmann::ordered_json;

long parse_long(const std::string& token, const std::string& what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " is not an integer: '" + token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument(what + " is not an integer: '" + token + "'");
    return value;
}

DegreeSequence parse_degrees(const std::string& csv) {
    std::vector<long> degrees;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        degrees.push_back(parse_long(token, "degree entry " + std::to_string(degrees.size())));
    return DegreeSequence(std::move(degrees));
}

// "3..9" or a single "9".
std::pair<long, long> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        long v = parse_long(text, "range");
        return {v, v};
    }
    long lo = parse_long(text.substr(0, pos), "range start");
    long hi = parse_long(text.substr(pos + 2), "range end");
    return {lo, hi};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

// ---- pi ---------------------------------------------------------------

struct PiOptions {
    std::string degrees;
    long index = -1;
    bool json = false;
};

int run_pi(const PiOptions& opt) {
    DegreeSequence D = parse_degrees(opt.degrees);
    if (opt.json) {
        ojson doc = ojson::object();
        doc["pi"] = ojson::array();
        for (long i = 0; i <= D.n(); ++i) doc["pi"].push_back(pi(D, i).to_string());
        doc["reg"] = D.regularity();
        doc["sum"] = sum_pi(D).to_string();
        std::cout << doc.dump() << "\n";
        return 0;
    }
    if (opt.index >= 0) {
        std::cout << pi(D, opt.index).to_string() << "\n";
        return 0;
    }
    for (long i = 0; i <= D.n(); ++i) std::cout << (i ? " " : "") << pi(D, i).to_string();
    std::cout << "\n";
    return 0;
}

// ---- decompose --------------------------------------------------------

struct DecomposeOptions {
    std::string input;
    std::string output;
    long codim = -1;
    bool check = false;
    bool rows = false;
};

int run_decompose(const DecomposeOptions& opt) {
    DiagramFile file = diagram_from_json(read_file(opt.input));
    if (opt.rows) std::cout << render_diagram_rows(file.diagram);

    DecomposeResult result = greedy_decompose(file.diagram);
    std::string payload = decomposition_to_json(result.decomposition);
    if (!opt.output.empty())
        write_file(opt.output, payload);
    else
        std::cout << payload;

    if (!result.ok()) {
        std::cerr << "error: " << to_string(result.status);
        if (result.failing_column >= 0) std::cerr << " at column " << result.failing_column;
        std::cerr << ": " << result.message << "\n";
        std::cerr << "partial decomposition written ("
                  << result.decomposition.summands.size() << " summand(s), residual has "
                  << result.residual.entry_count() << " entries)\n";
        if (opt.rows) std::cerr << render_diagram_rows(result.residual);
        return 1;
    }

    long codim = opt.codim >= 0 ? opt.codim : file.codim;
    if (codim >= 0)
        for (const std::string& warning : codim_warnings(result.decomposition, codim))
            std::cerr << "warning: " << warning << "\n";

    if (opt.check) {
        if (recompose(result.decomposition) == file.diagram)
            std::cerr << "check: recomposition reproduces the input exactly\n";
        else {
            std::cerr << "error: recomposition does not reproduce the input\n";
            return 1;
        }
    }
    if (!opt.output.empty())
        std::cerr << "wrote " << result.decomposition.summands.size() << " summand(s) to "
                  << opt.output << "\n";
    return 0;
}

// ---- bounds -----------------------------------------------------------

struct EvalOptions {
    long a = 0, b = 0, e = 0, n = 0, i = 0;
};

int run_bounds_eval(const EvalOptions& opt) {
    Rat value = F(opt.a, opt.b, opt.e, opt.n, opt.i);
    std::string exact = value.to_string();
    std::string display = decimal_display(value);
    std::cout << exact;
    if (display != exact) std::cout << " (" << display << ")";
    std::cout << "\n";
    return 0;
}

int run_bounds_table() {
    bool violation = false;
    for (const ComputationEntry& entry : computation_table()) {
        std::cout << entry.label << " = " << entry.value.to_string();
        if (entry.display != entry.value.to_string()) std::cout << " (" << entry.display << ")";
        if (entry.at_least_two)
            std::cout << " OK";
        else if (entry.asserted) {
            std::cout << " VIOLATION";
            violation = true;
        } else
            std::cout << " below 2 (informational)";
        std::cout << "\n";
    }
    return violation ? 1 : 0;
}

struct LemmaOptions {
    std::string lemma;  // empty: all
    bool unfiltered = false;
    LemmaGrid grid;
};

int run_bounds_lemmas(const LemmaOptions& opt) {
    std::vector<LemmaId> ids =
        opt.lemma.empty() ? all_lemmas() : std::vector<LemmaId>{lemma_from_string(opt.lemma)};
    bool violation = false;
    for (LemmaId id : ids) {
        LemmaReport report = check_lemma(id, opt.grid, !opt.unfiltered);
        std::cout << "(" << lemma_name(id) << ") " << report.points_checked << " points";
        if (report.passed())
            std::cout << " OK\n";
        else {
            std::cout << " " << report.violations.size() << " violation(s)\n";
            for (const LemmaViolation& v : report.violations)
                std::cout << "  " << v.to_string() << "\n";
            violation = true;
        }
    }
    return violation ? 1 : 0;
}

int run_bounds_sharpness() {
    auto [at5, at6] = fn_sharpness();
    std::cout << at5.to_string() << " > " << at6.to_string() << "\n";
    return 0;
}

// ---- verify -----------------------------------------------------------

struct VerifyOptions {
    std::string kind;
    std::string range;  // empty: per-kind default
    long max_d1 = -1;
    long min_d1 = 2;
    bool strengthened = false;
    int workers = 0;  // 0: pick automatically
    bool json = false;
};

ojson violations_json(const std::vector<BoundViolation>& violations) {
    ojson arr = ojson::array();
    for (const BoundViolation& v : violations) {
        ojson item = ojson::object();
        item["degrees"] = v.D.degrees();
        if (v.i >= 0) item["i"] = v.i;
        item["lhs"] = v.lhs.to_string();
        item["rhs"] = v.rhs.to_string();
        arr.push_back(std::move(item));
    }
    return arr;
}

int report_verify(const VerifyReport& report, const std::string& title, bool json) {
    if (json) {
        ojson doc = ojson::object();
        doc["checked"] = report.checked;
        doc["violations"] = violations_json(report.violations);
        doc["excluded"] = ojson::array();
        for (const DegreeSequence& D : report.excluded) doc["excluded"].push_back(D.degrees());
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << title << ": " << report.checked << " sequences checked";
        if (!report.excluded.empty()) std::cout << ", " << report.excluded.size() << " excluded";
        std::cout << ", " << report.violations.size() << " violation(s), " << report.equalities
                  << " met with equality\n";
        for (const BoundViolation& v : report.violations) std::cout << "  " << v.to_string() << "\n";
    }
    return report.passed() ? 0 : 1;
}

int run_verify(const VerifyOptions& opt) {
    int workers = opt.workers > 0 ? opt.workers : default_workers();

    if (opt.kind == "special-cases") {
        SpecialCasesReport report = special_cases();
        long satisfied = static_cast<long>(report.sequences.size()) -
                         static_cast<long>(report.total.violations.size());
        if (opt.json) {
            ojson doc = ojson::object();
            doc["checked"] = report.total.checked;
            doc["violations"] = violations_json(report.total.violations);
            doc["excluded"] = ojson::array();
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << report.sequences.size() << " sequences, " << satisfied
                      << " satisfy total bound\n";
            for (const auto& [family, count] : report.family_counts)
                std::cout << "  n=" << family.first << " d1=" << family.second << ": " << count
                          << " sequence(s)\n";
            for (const BoundViolation& v : report.total.violations)
                std::cout << "  VIOLATION " << v.to_string() << "\n";
            if (!report.half_observations.empty()) {
                std::cout << "doubled-bound misses inside the excluded families (expected):\n";
                for (const BoundViolation& v : report.half_observations)
                    std::cout << "  " << v.to_string() << "\n";
            }
        }
        return report.total.passed() ? 0 : 1;
    }

    EnumSpec spec;
    spec.min_d1 = opt.min_d1;
    spec.strengthened = opt.strengthened;
    if (opt.kind == "total") {
        spec.n_lo = 3;
        spec.n_hi = 9;
        spec.max_d1 = opt.max_d1 > 0 ? opt.max_d1 : 8;
    } else if (opt.kind == "half") {
        spec.n_lo = 6;
        spec.n_hi = 11;
        spec.max_d1 = opt.max_d1 > 0 ? opt.max_d1 : 6;
    } else {  // erman
        spec.n_lo = 3;
        spec.n_hi = 9;
        spec.max_d1 = opt.max_d1 > 0 ? opt.max_d1 : 8;
    }
    if (!opt.range.empty()) {
        auto [lo, hi] = parse_range(opt.range);
        spec.n_lo = lo;
        spec.n_hi = hi;
    }

    if (opt.kind == "total")
        return report_verify(verify_total_bound(spec, workers), "total bound", opt.json);
    if (opt.kind == "half")
        return report_verify(verify_half_double(spec, workers), "doubled first-half bound",
                             opt.json);
    return report_verify(verify_erman_bound(spec, workers), "binomial bound", opt.json);
}

// ---- certify ----------------------------------------------------------

int run_certify(int n, bool json) {
    CertificateReport report = certificate(n);
    if (json) {
        ojson doc = ojson::object();
        doc["n"] = report.n;
        doc["certified"] = report.certified;
        doc["steps"] = ojson::array();
        for (const CertificateStep& step : report.steps) {
            ojson item = ojson::object();
            item["name"] = step.name;
            item["passed"] = step.passed;
            item["detail"] = step.detail;
            doc["steps"].push_back(std::move(item));
        }
        doc["notes"] = report.notes;
        doc["reduced"] = report.reduced.to_string();
        doc["substituted"] = report.substituted.to_string();
        doc["unit_values"] = ojson::array();
        for (const Rat& v : report.unit_values) doc["unit_values"].push_back(v.to_string());
        doc["constant"] = report.constant_value.to_string();
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "certificate for n = " << report.n << ": sum of pi >= "
                  << ((1L << report.n) + (1L << (report.n - 1))) << "\n";
        for (const CertificateStep& step : report.steps)
            std::cout << "  [" << (step.passed ? "ok" : "FAIL") << "] " << step.name << ": "
                      << step.detail << "\n";
        for (const std::string& note : report.notes) std::cout << "  note: " << note << "\n";
        std::cout << (report.certified ? "certified" : "NOT certified") << "\n";
    }
    if (!report.certified) {
        for (const CertificateStep& step : report.steps)
            if (!step.passed) {
                std::cerr << "error: certificate failed at step: " << step.name << "\n";
                break;
            }
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact toolkit for pure Betti diagrams: Herzog-Kuehl values, greedy cone "
        "decomposition, bound functions, desk-scale theorem checks, polynomial certificates"};
    app.require_subcommand(1);

    // pi
    PiOptions pi_opt;
    CLI::App* pi_cmd = app.add_subcommand("pi", "Herzog-Kuehl values of a degree sequence");
    pi_cmd->add_option("--degrees", pi_opt.degrees, "comma-separated degrees, e.g. 0,2,4,5")
        ->required();
    pi_cmd->add_option("--index", pi_opt.index, "print only pi_i for this index");
    pi_cmd->add_flag("--json", pi_opt.json, "emit a JSON report");

    // decompose
    DecomposeOptions dec_opt;
    CLI::App* dec_cmd =
        app.add_subcommand("decompose", "greedy decomposition of a diagram file into pure diagrams");
    dec_cmd->add_option("--input", dec_opt.input, "diagram JSON file")->required();
    dec_cmd->add_option("--output", dec_opt.output, "write the decomposition here (default: stdout)");
    dec_cmd->add_option("--codim", dec_opt.codim, "codimension for summand-length warnings");
    dec_cmd->add_flag("--check", dec_opt.check, "recompose and compare against the input");
    dec_cmd->add_flag("--rows", dec_opt.rows, "print the diagram in row convention j - i");

    // bounds
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "the bound functions F, G, G1");
    bounds_cmd->require_subcommand(1);
    EvalOptions eval_opt;
    CLI::App* eval_cmd = bounds_cmd->add_subcommand("eval", "evaluate F(a,b,e,n,i) exactly");
    eval_cmd->add_option("--a", eval_opt.a, "first degree d_1")->required();
    eval_cmd->add_option("--b", eval_opt.b, "head jump")->required();
    eval_cmd->add_option("--e", eval_opt.e, "tail jump")->required();
    eval_cmd->add_option("--n", eval_opt.n, "sequence length")->required();
    eval_cmd->add_option("--i", eval_opt.i, "position")->required();
    bounds_cmd->add_subcommand("table", "every named computation value with its >=2 flag");
    LemmaOptions lemma_opt;
    CLI::App* lemmas_cmd = bounds_cmd->add_subcommand("lemmas", "grid checks of the bound lemmas");
    lemmas_cmd->add_option("--lemma", lemma_opt.lemma,
                           "single lemma: Fa, Fn, Fbe0, Gi, Gbe2, G1e, G1n9 (default: all)");
    lemmas_cmd->add_flag("--unfiltered", lemma_opt.unfiltered,
                         "drop the hypothesis filters (expect genuine violations)");
    lemmas_cmd->add_option("--a-lo", lemma_opt.grid.a_lo, "grid lower bound for a");
    lemmas_cmd->add_option("--a-hi", lemma_opt.grid.a_hi, "grid upper bound for a");
    lemmas_cmd->add_option("--b-lo", lemma_opt.grid.b_lo, "grid lower bound for b");
    lemmas_cmd->add_option("--b-hi", lemma_opt.grid.b_hi, "grid upper bound for b");
    lemmas_cmd->add_option("--e-lo", lemma_opt.grid.e_lo, "grid lower bound for e");
    lemmas_cmd->add_option("--e-hi", lemma_opt.grid.e_hi, "grid upper bound for e");
    lemmas_cmd->add_option("--n-lo", lemma_opt.grid.n_lo, "grid lower bound for n");
    lemmas_cmd->add_option("--n-hi", lemma_opt.grid.n_hi, "grid upper bound for n");
    lemmas_cmd->add_option("--i-hi", lemma_opt.grid.i_hi, "upper bound for the (Gi) index walk");
    lemmas_cmd->add_option("--g1-n-hi", lemma_opt.grid.g1_n_hi, "upper bound for the (G1n9) scan");
    bounds_cmd->add_subcommand("sharpness", "the non-monotonicity example for F in n");

    // verify
    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "desk-scale theorem verification");
    verify_cmd->require_subcommand(1);
    for (const char* kind : {"total", "half", "erman"}) {
        CLI::App* sub = verify_cmd->add_subcommand(
            kind, std::string(kind) == "total"
                      ? "sum of pi >= 2^n + 2^(n-1) over the enumeration domain"
                      : (std::string(kind) == "half"
                             ? "pi_i >= 2*C(n,i) for i <= ceil(n/2), exclusion families skipped"
                             : "pi_i >= C(n,i) for every i"));
        sub->add_option("--n", verify_opt.range, "length range, e.g. 3..9 or 9");
        sub->add_option("--max-d1", verify_opt.max_d1, "largest first degree");
        sub->add_option("--min-d1", verify_opt.min_d1,
                        "smallest first degree (1 shows why d1 >= 2 is needed)");
        sub->add_flag("--strengthened", verify_opt.strengthened,
                      "use the tighter regularity cap 2*d1 - 3");
        sub->add_option("--workers", verify_opt.workers, "parallel worker count");
        sub->add_flag("--json", verify_opt.json, "emit a JSON report");
    }
    CLI::App* special_cmd =
        verify_cmd->add_subcommand("special-cases", "the 36 sequences excluded from the doubled bound");
    special_cmd->add_flag("--json", verify_opt.json, "emit a JSON report");

    // certify
    int certify_n = 0;
    bool certify_json = false;
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "polynomial certificate for the total bound at small n");
    certify_cmd->add_option("--n", certify_n, "codimension: 3, 4 or 5")->required();
    certify_cmd->add_flag("--json", certify_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(pi_cmd)) return run_pi(pi_opt);
        if (app.got_subcommand(dec_cmd)) return run_decompose(dec_opt);
        if (app.got_subcommand(bounds_cmd)) {
            if (bounds_cmd->got_subcommand("eval")) return run_bounds_eval(eval_opt);
            if (bounds_cmd->got_subcommand("table")) return run_bounds_table();
            if (bounds_cmd->got_subcommand("lemmas")) return run_bounds_lemmas(lemma_opt);
            return run_bounds_sharpness();
        }
        if (app.got_subcommand(verify_cmd)) {
            for (const char* kind : {"total", "half", "erman", "special-cases"})
                if (verify_cmd->got_subcommand(kind)) verify_opt.kind = kind;
            return run_verify(verify_opt);
        }
        return run_certify(certify_n, certify_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // Failed mathematical guarantees surface as logic errors.
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
