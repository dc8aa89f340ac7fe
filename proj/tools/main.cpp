// quintsect command line: evaluate pFq / Fox-Wright / catalog functions,
// verify single identities, run the full catalog, and sweep a case over a
// grid with CSV output.
//
// Exit codes: 0 success / verified, 2 parse error or unknown case,
// 3 domain or classification error (including not-evaluable), 4 series did
// not converge, 5 identity verification failed, 6 output I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quintsect/catalog.hpp"
#include "quintsect/errors.hpp"
#include "quintsect/hypergeom.hpp"
#include "quintsect/identities.hpp"
#include "quintsect/series.hpp"

using namespace quintsect;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoConverge = 4;
constexpr int kExitVerifyFail = 5;
constexpr int kExitIo = 6;

struct CliParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const Cplx& z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

double parse_double(const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw CliParseError("trailing characters in number: " + text);
        return v;
    } catch (const CliParseError&) {
        throw;
    } catch (const std::exception&) {
        throw CliParseError("not a number: " + text);
    }
}

// Complex literal "re[,im]".
Cplx parse_complex(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        return {parse_double(text), 0.0};
    }
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::vector<Cplx> parse_real_list(const std::string& text) {
    std::vector<Cplx> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CliParseError("empty entry in parameter list");
        out.emplace_back(parse_double(item), 0.0);
    }
    return out;
}

// pfq spec string: "a1,a2;b1" or designated "2F1;a1,a2;b1" ("0F1;1.5" has an
// implicitly empty numerator).
PFQSpec parse_pfq_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (!text.empty() && text.back() == ';') parts.push_back("");

    std::optional<std::size_t> p_declared;
    std::optional<std::size_t> q_declared;
    std::size_t start = 0;
    if (!parts.empty()) {
        const std::string& head = parts[0];
        const std::size_t f_pos = head.find_first_of("Ff");
        if (f_pos != std::string::npos && f_pos > 0 && f_pos + 1 < head.size() &&
            head.find_first_not_of("0123456789") == f_pos &&
            head.find_first_not_of("0123456789", f_pos + 1) == std::string::npos) {
            p_declared = std::stoul(head.substr(0, f_pos));
            q_declared = std::stoul(head.substr(f_pos + 1));
            start = 1;
        }
    }

    std::vector<Cplx> numerator;
    std::vector<Cplx> denominator;
    const std::size_t lists = parts.size() - start;
    if (p_declared && *p_declared == 0 && lists == 1) {
        denominator = parse_real_list(parts[start]);
    } else if (lists == 2) {
        numerator = parse_real_list(parts[start]);
        denominator = parse_real_list(parts[start + 1]);
    } else {
        throw CliParseError("expected 'a1,..;b1,..' in pfq spec: " + text);
    }
    if (p_declared && (*p_declared != numerator.size() || *q_declared != denominator.size())) {
        throw CliParseError("declared pFq sizes do not match the parameter lists: " + text);
    }
    try {
        return PFQSpec(numerator, denominator);
    } catch (const SpecError& err) {
        throw CliParseError(err.what());
    }
}

// fox-wright spec string: "(a1:A1),(a2:A2);(b1:B1)".
FoxWrightSpec parse_fox_wright_spec(const std::string& text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string::npos) {
        throw CliParseError("expected '(a:A),..;(b:B),..' in psi spec: " + text);
    }
    auto parse_side = [](const std::string& side) {
        std::vector<FoxWrightParam> out;
        std::size_t pos = 0;
        while (pos < side.size()) {
            if (side[pos] == ',') {
                ++pos;
                continue;
            }
            if (side[pos] != '(') throw CliParseError("expected '(' in psi spec near: " + side.substr(pos));
            const std::size_t close = side.find(')', pos);
            if (close == std::string::npos) throw CliParseError("unbalanced '(' in psi spec");
            const std::string pair = side.substr(pos + 1, close - pos - 1);
            const std::size_t colon = pair.find(':');
            if (colon == std::string::npos) throw CliParseError("expected 'a:A' in psi spec pair: " + pair);
            out.push_back({Cplx{parse_double(pair.substr(0, colon)), 0.0},
                           parse_double(pair.substr(colon + 1))});
            pos = close + 1;
        }
        return out;
    };
    try {
        return FoxWrightSpec(parse_side(text.substr(0, semi)), parse_side(text.substr(semi + 1)));
    } catch (const SpecError& err) {
        throw CliParseError(err.what());
    }
}

ToleranceConfig base_tolerance() {
    ToleranceConfig tol;
    if (const char* env = std::getenv("QUINTSECT_MAX_TERMS")) {
        try {
            tol.max_terms = std::stoll(env);
        } catch (const std::exception&) {
            throw CliParseError("QUINTSECT_MAX_TERMS is not an integer");
        }
        tol.validate();
    }
    return tol;
}

// All output files go through a temp-and-rename so a failed run never leaves
// a partial file behind.
void write_atomically(const std::string& path, const std::string& payload) {
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::ios_base::failure("cannot open " + tmp.string());
        os << payload;
        os.flush();
        if (!os) throw std::ios_base::failure("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::ios_base::failure("cannot rename into " + path);
    }
}

void print_diagnostics(const ConvergenceDiagnostics& diag, bool pfq_view) {
    std::printf("classification = %s\n", to_string(diag.classification));
    if (pfq_view) {
        std::printf("omega = %s\n", fmt(diag.omega).c_str());
    } else {
        std::printf("Delta* = %s\n", fmt(diag.delta_star).c_str());
        std::printf("delta* = %s\n", fmt(diag.small_delta_star).c_str());
        std::printf("mu* = %s\n", fmt(diag.mu_star).c_str());
        std::printf("sigma* = %s\n", fmt(diag.sigma_star).c_str());
    }
}

int print_series_result(const SeriesEvaluation& eval) {
    std::printf("value = %s\n", fmt(eval.value).c_str());
    std::printf("terms_used = %lld\n", static_cast<long long>(eval.terms_used));
    std::printf("tail_estimate = %s\n", fmt(eval.tail_estimate).c_str());
    std::printf("status = %s%s\n", to_string(eval.status),
                eval.low_confidence ? " (low-confidence)" : "");
    return eval.status == SeriesStatus::converged ? kExitOk : kExitNoConverge;
}

struct EvalRequest {
    std::string kind; // pfq | psi | fn
    std::string spec_text;
    std::string point_text;
};

EvalRequest split_eval_tokens(const std::vector<std::string>& tokens) {
    if (tokens.size() < 2) throw CliParseError("usage: <pfq|psi|fn> <spec> @ <z>");
    EvalRequest req;
    req.kind = tokens[0];
    std::size_t at = tokens.size();
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i] == "@") {
            at = i;
            break;
        }
    }
    if (at == tokens.size() || at + 1 != tokens.size() - 1) {
        throw CliParseError("expected '<spec> @ <z>'");
    }
    std::string spec;
    for (std::size_t i = 1; i < at; ++i) {
        if (i > 1) spec += " ";
        spec += tokens[i];
    }
    req.spec_text = spec;
    req.point_text = tokens[at + 1];
    return req;
}

int run_eval(const std::vector<std::string>& tokens, double param, bool diagnose_only) {
    const EvalRequest req = split_eval_tokens(tokens);
    const ToleranceConfig tol = base_tolerance();

    if (req.kind == "pfq") {
        const PFQSpec spec = parse_pfq_spec(req.spec_text);
        const Cplx z = parse_complex(req.point_text);
        const ConvergenceDiagnostics diag = classify_pfq(spec, z);
        if (diagnose_only) {
            print_diagnostics(diag, true);
            return kExitOk;
        }
        if (diag.classification == SeriesDomain::divergent && z != Cplx{0.0, 0.0}) {
            std::fprintf(stderr, "error: series classified divergent at this point\n");
            return kExitDomain;
        }
        const int code = print_series_result(eval_pfq(spec, z, tol));
        print_diagnostics(diag, true);
        return code;
    }
    if (req.kind == "psi" || req.kind == "psi*") {
        const FoxWrightSpec spec = parse_fox_wright_spec(req.spec_text);
        const Cplx z = parse_complex(req.point_text);
        const ConvergenceDiagnostics diag = classify_fox_wright(spec, z);
        if (diagnose_only) {
            print_diagnostics(diag, false);
            return kExitOk;
        }
        if (diag.classification == SeriesDomain::case_ii_iii_unsupported &&
            z != Cplx{0.0, 0.0}) {
            std::fprintf(stderr, "error: only the series-convergence regime is supported\n");
            return kExitDomain;
        }
        const SeriesEvaluation eval = (req.kind == "psi")
                                          ? eval_fox_wright(spec, z, tol)
                                          : eval_fox_wright_normalized(spec, z, tol);
        const int code = print_series_result(eval);
        print_diagnostics(diag, false);
        return code;
    }
    if (req.kind == "fn") {
        const SpecialFunctionId f = special_function_from_string(req.spec_text);
        const Cplx x = parse_complex(req.point_text);
        const RepresentationParts parts = representation_parts(f, x, param);
        const ConvergenceDiagnostics diag = classify_pfq(parts.spec, parts.argument);
        if (diagnose_only) {
            print_diagnostics(diag, true);
            return kExitOk;
        }
        SeriesEvaluation eval = eval_pfq(parts.spec, parts.argument, tol);
        eval.value *= parts.prefactor;
        eval.tail_estimate *= std::abs(parts.prefactor);
        const int code = print_series_result(eval);
        print_diagnostics(diag, true);
        return code;
    }
    throw CliParseError("unknown eval kind (want pfq, psi, psi* or fn): " + req.kind);
}

int run_verify(const std::string& case_id, const std::string& theorem,
               const std::string& spec_text, const std::string& c_text,
               const std::string& x_text, double identity_tol,
               std::optional<double> param) {
    const ToleranceConfig tol = base_tolerance();
    IdentityResidual result;

    if (!case_id.empty()) {
        ApplicationCase app;
        try {
            app = make_application_case(case_id, param);
        } catch (const SpecError& err) {
            std::fprintf(stderr, "error: %s\n", err.what());
            return kExitParse;
        }
        result = verify_case(app, parse_complex(x_text), tol, identity_tol);
    } else if (!theorem.empty()) {
        TheoremInstance inst;
        inst.id = theorem_id_from_string(theorem);
        if (inst.id == TheoremId::pfq_even || inst.id == TheoremId::pfq_weighted) {
            inst.spec = parse_pfq_spec(spec_text);
        } else {
            inst.spec = parse_fox_wright_spec(spec_text);
        }
        inst.c = parse_complex(c_text);
        inst.x = parse_complex(x_text);
        result = check_identity(inst, tol, identity_tol);
    } else {
        throw CliParseError("verify needs --case or --theorem");
    }

    std::printf("lhs = %s\n", fmt(result.lhs).c_str());
    std::printf("rhs = %s\n", fmt(result.rhs).c_str());
    std::printf("residual = %s\n", fmt(result.residual).c_str());
    std::printf("lhs_status = %s\n", to_string(result.lhs_status));
    std::printf("rhs_status = %s\n", to_string(result.rhs_status));
    std::printf("verdict = %s\n", to_string(result.verdict));
    switch (result.verdict) {
        case Verdict::pass: return kExitOk;
        case Verdict::fail: return kExitVerifyFail;
        case Verdict::not_evaluable: return kExitDomain;
    }
    return kExitDomain;
}

std::string report_to_csv(const CatalogReport& report) {
    std::size_t max_points = 0;
    for (const auto& row : report.rows) max_points = std::max(max_points, row.points.size());

    std::string out = "case_id,printed_label,param,domain_radius";
    for (std::size_t i = 1; i <= max_points; ++i) {
        out += ",x" + std::to_string(i) + ",residual" + std::to_string(i);
    }
    out += ",max_residual,ratio_re,ratio_im,status\n";

    for (const auto& row : report.rows) {
        out += row.case_id + "," + row.printed_label + ",";
        if (row.parameterized) out += fmt(row.param);
        out += "," + fmt(row.domain_radius);
        for (std::size_t i = 0; i < max_points; ++i) {
            if (i < row.points.size()) {
                out += "," + fmt(row.points[i].x) + "," + fmt(row.points[i].residual);
            } else {
                out += ",,";
            }
        }
        out += "," + fmt(row.max_residual) + "," + fmt(row.worst_ratio.real()) + "," +
               fmt(row.worst_ratio.imag()) + "," + to_string(row.status) + "\n";
    }
    return out;
}

std::string report_to_records(const CatalogReport& report) {
    std::string out = "# quintsect catalog report v1\n";
    for (const auto& row : report.rows) {
        out += "case_id=" + row.case_id + "\n";
        out += "printed_label=" + row.printed_label + "\n";
        out += "param=";
        if (row.parameterized) out += fmt(row.param);
        out += "\n";
        out += "domain_radius=" + fmt(row.domain_radius) + "\n";
        for (const auto& p : row.points) {
            out += "point=" + fmt(p.x) + " residual=" + fmt(p.residual) + " verdict=" +
                   to_string(p.verdict) + "\n";
        }
        out += "max_residual=" + fmt(row.max_residual) + "\n";
        out += "ratio=" + fmt(row.worst_ratio) + "\n";
        out += "status=" + std::string(to_string(row.status)) + "\n\n";
    }
    return out;
}

std::string report_to_human(const CatalogReport& report) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-18s %-8s %-12s %-12s %s\n", "case", "label",
                  "max_residual", "status", "lhs/rhs at worst point");
    out += line;
    for (const auto& row : report.rows) {
        std::snprintf(line, sizeof(line), "%-18s %-8s %-12.3e %-12s %.12g%+.12gi\n",
                      row.case_id.c_str(), row.printed_label.c_str(), row.max_residual,
                      to_string(row.status), row.worst_ratio.real(), row.worst_ratio.imag());
        out += line;
    }
    return out;
}

int run_verify_all(const std::string& out_path, const std::string& format,
                   double identity_tol, const std::string& catalog_path) {
    const ToleranceConfig tol = base_tolerance();
    std::vector<ApplicationCase> catalog;
    if (catalog_path.empty()) {
        catalog = builtin_catalog();
    } else {
        std::ifstream is(catalog_path);
        if (!is) {
            std::fprintf(stderr, "error: cannot read catalog %s\n", catalog_path.c_str());
            return kExitIo;
        }
        catalog = load_catalog(is);
    }

    const CatalogReport report = verify_all(catalog, identity_tol, tol);

    std::string payload;
    if (format == "csv") {
        payload = report_to_csv(report);
    } else if (format == "structured-records") {
        payload = report_to_records(report);
    } else if (format == "human") {
        payload = report_to_human(report);
    } else {
        throw CliParseError("unknown format: " + format);
    }

    if (out_path.empty()) {
        std::fputs(payload.c_str(), stdout);
    } else {
        try {
            write_atomically(out_path, payload);
        } catch (const std::exception& err) {
            std::fprintf(stderr, "error: %s\n", err.what());
            return kExitIo;
        }
    }
    return kExitOk;
}

int run_sweep(const std::string& case_id, double x_min, double x_max, long steps,
              const std::string& out_path, double identity_tol,
              std::optional<double> param) {
    if (steps < 1) throw CliParseError("--steps must be at least 1");
    const ToleranceConfig tol = base_tolerance();
    ApplicationCase app;
    try {
        app = make_application_case(case_id, param);
    } catch (const SpecError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitParse;
    }

    std::string payload = "x,lhs_re,lhs_im,rhs_re,rhs_im,residual\n";
    for (long i = 0; i <= steps; ++i) {
        const double x = x_min + (x_max - x_min) * static_cast<double>(i) /
                                     static_cast<double>(steps);
        const IdentityResidual r = verify_case(app, Cplx{x, 0.0}, tol, identity_tol);
        payload += fmt(x) + "," + fmt(r.lhs.real()) + "," + fmt(r.lhs.imag()) + "," +
                   fmt(r.rhs.real()) + "," + fmt(r.rhs.imag()) + "," + fmt(r.residual) +
                   "\n";
    }

    if (out_path.empty()) {
        std::fputs(payload.c_str(), stdout);
    } else {
        try {
            write_atomically(out_path, payload);
        } catch (const std::exception& err) {
            std::fprintf(stderr, "error: %s\n", err.what());
            return kExitIo;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pFq and Fox-Wright evaluation with fifth-root multisection identity checks"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate 'pfq a1,..;b1,.. @ z', "
                                                "'psi (a:A),..;(b:B),.. @ z' or 'fn <name> @ x'");
    double eval_param = 1.0;
    eval_cmd->add_option("--param", eval_param, "a / gamma parameter for parameterized functions");
    eval_cmd->prefix_command();

    auto* diagnose_cmd = app.add_subcommand("diagnose", "print convergence diagnostics only");
    double diag_param = 1.0;
    diagnose_cmd->add_option("--param", diag_param, "a / gamma parameter");
    diagnose_cmd->prefix_command();

    auto* verify_cmd = app.add_subcommand("verify", "check one identity instance");
    std::string v_case, v_theorem, v_spec, v_c = "1", v_x = "0";
    double v_tol = 1e-9;
    std::optional<double> v_param;
    verify_cmd->add_option("--case", v_case, "catalog case id (e.g. eq4.6-arctan)");
    verify_cmd->add_option("--theorem", v_theorem,
                           "theorem id: pfq-even, pfq-weighted, psi-even, psi-weighted, "
                           "psistar-even, psistar-weighted");
    verify_cmd->add_option("--spec", v_spec, "parameter lists for --theorem");
    verify_cmd->add_option("--c", v_c, "c value 're[,im]'");
    verify_cmd->add_option("--x", v_x, "x value 're[,im]'");
    verify_cmd->add_option("--tol", v_tol, "identity tolerance (default 1e-9)");
    verify_cmd->add_option("--param", v_param, "a / gamma parameter for parameterized cases");

    auto* all_cmd = app.add_subcommand("verify-all", "run the whole catalog");
    std::string a_out, a_catalog, a_format = "csv";
    double a_tol = 1e-9;
    all_cmd->add_option("--out", a_out, "output path (stdout when omitted)");
    all_cmd->add_option("--tol", a_tol, "identity tolerance (default 1e-9)");
    all_cmd->add_option("--format", a_format, "csv | structured-records | human");
    all_cmd->add_option("--catalog", a_catalog, "load cases from a catalog file");

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one case over a uniform grid");
    std::string s_case, s_out;
    double s_min = 0.0, s_max = 1.0, s_tol = 1e-9;
    long s_steps = 10;
    std::optional<double> s_param;
    sweep_cmd->add_option("--case", s_case, "catalog case id")->required();
    sweep_cmd->add_option("--x-min", s_min, "grid start");
    sweep_cmd->add_option("--x-max", s_max, "grid end");
    sweep_cmd->add_option("--steps", s_steps, "number of grid intervals (rows = steps + 1)");
    sweep_cmd->add_option("--out", s_out, "output path (stdout when omitted)");
    sweep_cmd->add_option("--tol", s_tol, "identity tolerance (default 1e-9)");
    sweep_cmd->add_option("--param", s_param, "a / gamma parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (eval_cmd->parsed()) {
            return run_eval(eval_cmd->remaining(), eval_param, false);
        }
        if (diagnose_cmd->parsed()) {
            return run_eval(diagnose_cmd->remaining(), diag_param, true);
        }
        if (verify_cmd->parsed()) {
            return run_verify(v_case, v_theorem, v_spec, v_c, v_x, v_tol, v_param);
        }
        if (all_cmd->parsed()) {
            return run_verify_all(a_out, a_format, a_tol, a_catalog);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(s_case, s_min, s_max, s_steps, s_out, s_tol, s_param);
        }
    } catch (const CliParseError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitParse;
    } catch (const SpecError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitDomain;
    } catch (const DomainError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitDomain;
    } catch (const PoleError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitDomain;
    } catch (const UndefinedQuotientError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitDomain;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitParse;
    }
    return kExitParse;
}
