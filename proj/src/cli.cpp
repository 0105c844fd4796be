#include "landenkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "landenkit/errors.hpp"
#include "landenkit/landen.hpp"
#include "landenkit/regions.hpp"
#include "landenkit/report.hpp"
#include "landenkit/specialfn.hpp"
#include "landenkit/verify.hpp"

namespace landenkit::cli {

namespace {

using report::Format;
using report::json_number;
using report::json_string;
using report::number;

constexpr double kDefaultGridEnd = 0.97;
constexpr double kExtendedGridEnd = 0.99;

// Numbers are kept as text so that fractions like 1/2 can be accepted.
struct Options {
    std::string format = "table";
    std::string output;
    std::string tail_tol, max_terms, margin_tol;
    std::string start, end, step;
    bool extended_grid = false;

    std::string fn, which, theorem, direction, kind, form, method, coeffs, box;
    std::string a, b, c, x, r, p, q, kappa, nu, b_shape, c_sign;
    std::string n = "200";
    std::string window = "512";
    std::string tol = "1e-8";
    std::string seed = "0", budget = "100";
    bool override_region = false;
};

double required(const std::string& text, const char* flag) {
    if (text.empty()) throw ParamError(std::string("missing --") + flag);
    return verify::parse_real(text);
}

double optional_real(const std::string& text, double fallback) {
    return text.empty() ? fallback : verify::parse_real(text);
}

std::size_t parse_count(const std::string& text, const char* flag) {
    const double v = required(text, flag);
    if (v < 0.0 || v != std::floor(v) || v > 1e15) {
        throw ParamError(std::string("--") + flag + " must be a nonnegative integer");
    }
    return static_cast<std::size_t>(v);
}

specialfn::EvalConfig eval_config(const Options& o) {
    specialfn::EvalConfig cfg;
    if (const char* env = std::getenv("LANDEN_TAIL_TOL"); env != nullptr && *env != '\0') {
        cfg.tail_tol = verify::parse_real(env);
    }
    cfg.tail_tol = optional_real(o.tail_tol, cfg.tail_tol);
    if (!o.max_terms.empty()) cfg.max_terms = parse_count(o.max_terms, "max-terms");
    cfg.validate();
    return cfg;
}

verify::Grid grid_config(const Options& o) {
    verify::Grid grid;
    grid.start = optional_real(o.start, grid.start);
    grid.end = optional_real(o.end, grid.end);
    grid.step = optional_real(o.step, grid.step);
    const double limit = o.extended_grid ? kExtendedGridEnd : kDefaultGridEnd;
    if (grid.end > limit + 1e-12) {
        throw ParamError("grid end " + number(grid.end) + " beyond " + number(limit) +
                         (o.extended_grid ? "" : " (use --extended-grid for up to 0.99)"));
    }
    grid.validate();
    return grid;
}

verify::SweepOptions sweep_options(const Options& o) {
    verify::SweepOptions opts;
    opts.eval = eval_config(o);
    opts.margin_tol = optional_real(o.margin_tol, opts.margin_tol);
    if (!(opts.margin_tol >= 0.0)) throw ParamError("--margin-tol must be nonnegative");
    opts.override_region = o.override_region;
    return opts;
}

specialfn::HyperTriple triple(const Options& o) {
    return {required(o.a, "a"), required(o.b, "b"), required(o.c, "c")};
}

specialfn::BesselParams bessel(const Options& o) {
    const double c_sign = required(o.c_sign, "c-sign");
    if (!o.kappa.empty()) return specialfn::BesselParams::from_kappa(required(o.kappa, "kappa"), c_sign);
    return {required(o.nu, "nu"), optional_real(o.b_shape, 1.0), c_sign};
}

specialfn::KummerParams kummer(const Options& o) { return {required(o.p, "p"), required(o.q, "q")}; }

std::string kind_of(const Options& o) { return o.kind.empty() ? o.direction : o.kind; }

std::string evaluation_text(std::string_view fn, const specialfn::Evaluation& e, Format format) {
    std::ostringstream os;
    const char* conv = e.converged ? "true" : "false";
    switch (format) {
        case Format::Csv:
            os << "fn,value,terms_used,tail_bound,converged\n"
               << fn << ',' << number(e.value) << ',' << e.terms_used << ','
               << number(e.tail_bound) << ',' << conv << '\n';
            break;
        case Format::Json:
            os << "{\"fn\": " << json_string(fn) << ", \"value\": " << json_number(e.value)
               << ", \"terms_used\": " << e.terms_used
               << ", \"tail_bound\": " << json_number(e.tail_bound) << ", \"converged\": " << conv
               << "}\n";
            break;
        case Format::Table:
            os << "value " << number(e.value) << "\nterms_used " << e.terms_used
               << "\ntail_bound " << number(e.tail_bound) << "\nconverged " << conv << '\n';
            break;
    }
    return os.str();
}

struct Outcome {
    std::string text;
    int code = kOk;
};

Outcome cmd_eval(const Options& o, Format format) {
    const auto cfg = eval_config(o);
    specialfn::Evaluation e;
    if (o.fn == "2f1") {
        e = specialfn::gauss_2f1(triple(o), required(o.x, "x"), cfg);
    } else if (o.fn == "k") {
        std::string method = o.method.empty() ? "agm" : o.method;
        if (method != "agm" && method != "series") throw ParamError("--method must be agm or series");
        e = specialfn::elliptic_k(required(o.r, "r"),
                                  method == "agm" ? specialfn::EllipticMethod::Agm
                                                  : specialfn::EllipticMethod::Series,
                                  cfg);
    } else if (o.fn == "kummer") {
        e = specialfn::kummer_phi(kummer(o), required(o.x, "x"), cfg);
    } else if (o.fn == "bessel") {
        e = specialfn::bessel_u(bessel(o), required(o.x, "x"), cfg);
    } else if (o.fn == "closed") {
        const auto form = specialfn::closed_form_from_string(o.form);
        e = {specialfn::closed_form(form, required(o.x, "x")), 0, 0.0, true};
    } else {
        throw ParamError("--fn must be one of 2f1, k, kummer, bessel, closed");
    }
    return {evaluation_text(o.fn, e, format), e.converged ? kOk : kNumericalFailure};
}

Outcome cmd_identity(const Options& o, Format format) {
    const auto cfg = eval_config(o);
    std::string method_name = o.method.empty() ? "agm" : o.method;
    if (method_name != "agm" && method_name != "series") {
        throw ParamError("--method must be agm or series");
    }
    const auto method = method_name == "agm" ? specialfn::EllipticMethod::Agm
                                             : specialfn::EllipticMethod::Series;
    const double tol = required(o.tol, "tol");

    std::function<landen::IdentityResidual(double)> check;
    if (o.which == "landen1") {
        check = [&](double r) { return landen::check_identity_first(r, cfg, method); };
    } else if (o.which == "landen2") {
        check = [&](double r) { return landen::check_identity_second(r, cfg, method); };
    } else if (o.which == "transf" || o.which == "transf-complement") {
        const double a = required(o.a, "a");
        const double b = required(o.b, "b");
        if (o.which == "transf") {
            check = [&cfg, a, b](double r) { return landen::check_transf(a, b, r, cfg); };
        } else {
            check = [&cfg, a, b](double r) { return landen::check_transf_complement(a, b, r, cfg); };
        }
    } else {
        throw ParamError("--which must be landen1, landen2, transf or transf-complement");
    }

    std::vector<landen::IdentityResidual> rows;
    if (!o.r.empty()) {
        rows.push_back(check(required(o.r, "r")));
    } else {
        for (double r : grid_config(o).points()) rows.push_back(check(r));
    }
    const bool ok = std::all_of(rows.begin(), rows.end(),
                                [tol](const auto& row) { return row.rel_residual <= tol; });
    return {report::render(o.which, rows, format), ok ? kOk : kViolation};
}

Outcome cmd_classify(const Options& o, Format format) {
    regions::RegionVerdict v;
    std::string label = o.theorem;
    if (o.theorem == "2.1") {
        v = regions::classify_thm21(triple(o));
    } else if (o.theorem == "2.4") {
        v = regions::classify_thm24(triple(o));
    } else if (o.theorem == "2.3") {
        const auto kind = kind_of(o);
        if (kind == "bessel") {
            v = regions::classify_bessel(bessel(o));
        } else if (kind == "kummer") {
            v = regions::classify_kummer(kummer(o));
        } else {
            throw ParamError("--theorem 2.3 needs --kind bessel or kummer");
        }
        label += ":" + kind;
    } else {
        throw ParamError("--theorem must be 2.1, 2.3 or 2.4");
    }

    const std::string branch(regions::to_string(v.branch));
    const char* boundary = v.boundary ? "true" : "false";
    std::ostringstream os;
    switch (format) {
        case Format::Csv:
            os << "theorem,branch,fired_condition,boundary,note\n"
               << label << ',' << branch << ',' << report::csv_field(v.fired_condition) << ','
               << boundary << ',' << report::csv_field(v.note) << '\n';
            break;
        case Format::Json:
            os << "{\"theorem\": " << json_string(label) << ", \"branch\": " << json_string(branch)
               << ", \"fired_condition\": " << json_string(v.fired_condition)
               << ", \"boundary\": " << boundary << ", \"note\": " << json_string(v.note) << "}\n";
            break;
        case Format::Table:
            os << branch << '\n'
               << "fired_condition " << (v.fired_condition.empty() ? "-" : v.fired_condition)
               << "\nboundary " << boundary << '\n';
            if (!v.note.empty()) os << "note " << v.note << '\n';
            break;
    }
    return {os.str(), kOk};
}

Outcome cmd_seq(const Options& o, Format format) {
    const auto id = regions::seq_id_from_string(o.which);
    specialfn::HyperTriple params{optional_real(o.a, 0.0), optional_real(o.b, 0.0),
                                  optional_real(o.c, 1.0)};
    const auto n_max = parse_count(o.n, "n");
    const auto probe = regions::seq_probe(id, params, n_max);
    const auto values = regions::seq_values(id, params, n_max);
    const std::string cls(regions::to_string(probe.classification));
    const std::string violation =
        probe.first_violation ? std::to_string(*probe.first_violation) : std::string();

    std::ostringstream os;
    switch (format) {
        case Format::Csv:
            os << "n,value\n";
            for (std::size_t k = 0; k < values.size(); ++k) os << k << ',' << number(values[k]) << '\n';
            break;
        case Format::Json:
            os << "{\"seq\": " << json_string(o.which) << ", \"params\": {\"a\": "
               << json_number(params.a) << ", \"b\": " << json_number(params.b)
               << ", \"c\": " << json_number(params.c) << "}, \"n_max\": " << n_max
               << ", \"classification\": " << json_string(cls)
               << ", \"first_violation\": " << (violation.empty() ? "null" : violation)
               << ", \"values\": [";
            for (std::size_t k = 0; k < values.size(); ++k) os << (k ? ", " : "") << json_number(values[k]);
            os << "]}\n";
            break;
        case Format::Table:
            os << o.which << " n_max=" << n_max << ": " << cls
               << "\nfirst_violation " << (violation.empty() ? "none" : violation) << '\n';
            break;
    }
    return {os.str(), kOk};
}

specialfn::CoefficientSeries coefficient_series(const std::string& spec) {
    if (spec.empty() || spec == "ones") return specialfn::CoefficientSeries::ones();
    if (spec == "inv_omega") return specialfn::CoefficientSeries::inv_omega();
    if (spec == "inv_factorial") return specialfn::CoefficientSeries::inv_factorial();
    std::vector<double> coeffs;
    std::string_view rest = spec;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        coeffs.push_back(verify::parse_real(rest.substr(0, comma)));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return specialfn::CoefficientSeries::explicit_list(std::move(coeffs));
}

template <typename Dir, std::size_t N>
Dir pick_direction(const std::string& name, const std::pair<const char*, Dir> (&table)[N]) {
    for (const auto& [label, dir] : table) {
        if (name == label) return dir;
    }
    throw ParamError("unsupported --direction '" + name + "'");
}

Outcome cmd_sweep(const Options& o, Format format) {
    const auto grid = grid_config(o);
    const auto opts = sweep_options(o);
    verify::SweepReport rep;

    if (o.theorem == "2.1") {
        static const std::pair<const char*, verify::Thm21Direction> dirs[] = {
            {"ineq1", verify::Thm21Direction::Ineq1},
            {"ineq2", verify::Thm21Direction::Ineq2},
            {"ineq3", verify::Thm21Direction::Ineq3},
            {"ineq4", verify::Thm21Direction::Ineq4}};
        rep = verify::sweep_thm21(triple(o), pick_direction(o.direction, dirs), grid, opts);
    } else if (o.theorem == "2.2") {
        static const std::pair<const char*, verify::Thm22Direction> dirs[] = {
            {"ineq5", verify::Thm22Direction::Ineq5}, {"reversed", verify::Thm22Direction::Reversed}};
        rep = verify::sweep_thm22(coefficient_series(o.coeffs), pick_direction(o.direction, dirs),
                                  grid, opts, parse_count(o.window, "window"));
    } else if (o.theorem == "2.3") {
        const auto kind = kind_of(o);
        if (kind == "bessel") {
            rep = verify::sweep_thm23(bessel(o), grid, opts);
        } else if (kind == "kummer") {
            rep = verify::sweep_thm23(kummer(o), grid, opts);
        } else {
            throw ParamError("--theorem 2.3 needs --kind bessel or kummer");
        }
    } else if (o.theorem == "2.4") {
        static const std::pair<const char*, verify::Thm24Direction> dirs[] = {
            {"ineq6", verify::Thm24Direction::Ineq6}, {"ineq7", verify::Thm24Direction::Ineq7}};
        rep = verify::sweep_thm24(triple(o), pick_direction(o.direction, dirs), grid, opts);
    } else if (o.theorem == "ineq9") {
        rep = verify::sweep_ineq9(required(o.a, "a"), required(o.b, "b"), grid, opts);
    } else if (o.theorem == "elementary") {
        static const std::pair<const char*, verify::ElementaryCheck> dirs[] = {
            {"arcsin", verify::ElementaryCheck::Arcsin}, {"logpow", verify::ElementaryCheck::LogPower}};
        rep = verify::sweep_elementary(pick_direction(o.direction, dirs), grid, opts.margin_tol);
    } else {
        throw ParamError("--theorem must be 2.1, 2.2, 2.3, 2.4, ineq9 or elementary");
    }
    return {report::render(rep, format), rep.n_violations > 0 ? kViolation : kOk};
}

Outcome cmd_search(const Options& o, Format format) {
    const auto grid = grid_config(o);
    const auto opts = sweep_options(o);
    verify::SearchSpec spec{o.theorem, o.theorem == "2.3" ? kind_of(o) : o.direction,
                            verify::parse_box(o.box)};
    const auto seed = parse_count(o.seed, "seed");
    const auto budget = parse_count(o.budget, "budget");
    const auto found = verify::search_counterexample(spec, seed, budget, grid, opts);

    std::ostringstream os;
    switch (format) {
        case Format::Csv: {
            os << "sample_index";
            if (found) {
                for (const auto& p : found->params) os << ',' << p.name;
            }
            os << ",r,lhs,rhs,margin,verdict\n";
            if (found) {
                os << found->sample_index;
                for (const auto& p : found->params) os << ',' << number(p.value);
                const auto& rec = found->record;
                os << ',' << number(rec.r) << ',' << number(rec.lhs) << ',' << number(rec.rhs)
                   << ',' << number(rec.margin) << ',' << verify::to_string(rec.verdict) << '\n';
            }
            break;
        }
        case Format::Json:
            os << "{\"theorem_id\": " << json_string(spec.theorem_id)
               << ", \"direction\": " << json_string(spec.direction) << ", \"seed\": " << seed
               << ", \"budget\": " << budget << ", \"found\": " << (found ? "true" : "false");
            if (found) {
                os << ", \"sample_index\": " << found->sample_index << ", \"params\": {";
                for (std::size_t i = 0; i < found->params.size(); ++i) {
                    os << (i ? ", " : "") << json_string(found->params[i].name) << ": "
                       << json_number(found->params[i].value);
                }
                const auto& rec = found->record;
                os << "}, \"record\": {\"r\": " << json_number(rec.r)
                   << ", \"lhs\": " << json_number(rec.lhs) << ", \"rhs\": " << json_number(rec.rhs)
                   << ", \"margin\": " << json_number(rec.margin)
                   << ", \"verdict\": " << json_string(verify::to_string(rec.verdict)) << '}';
            }
            os << "}\n";
            break;
        case Format::Table:
            if (!found) {
                os << "no counterexample in " << budget << " samples\n";
                break;
            }
            os << "counterexample at sample " << found->sample_index << ':';
            for (const auto& p : found->params) os << ' ' << p.name << '=' << number(p.value);
            os << "\n  r=" << number(found->record.r) << " lhs=" << number(found->record.lhs)
               << " rhs=" << number(found->record.rhs) << " margin=" << number(found->record.margin)
               << '\n';
            break;
    }
    return {os.str(), found ? kViolation : kOk};
}

void add_common(CLI::App& app, Options& o) {
    app.add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--output", o.output, "write the report to this file");
    app.add_option("--tail-tol", o.tail_tol, "relative series tail tolerance (env LANDEN_TAIL_TOL)");
    app.add_option("--max-terms", o.max_terms, "series term limit");
    app.add_option("--margin-tol", o.margin_tol, "Indeterminate band for margins");
    app.add_option("--start", o.start, "grid start (default 0.01)");
    app.add_option("--end", o.end, "grid end (default 0.97)");
    app.add_option("--step", o.step, "grid step (default 0.01)");
    app.add_flag("--extended-grid", o.extended_grid, "allow a grid end up to 0.99");
}

void add_triple(CLI::App& app, Options& o) {
    app.add_option("--a", o.a);
    app.add_option("--b", o.b);
    app.add_option("--c", o.c);
}

void add_series_params(CLI::App& app, Options& o) {
    app.add_option("--p", o.p, "Kummer numerator parameter");
    app.add_option("--q", o.q, "Kummer denominator parameter");
    app.add_option("--kappa", o.kappa, "Bessel kappa (overrides --nu/--b-shape)");
    app.add_option("--nu", o.nu, "Bessel order");
    app.add_option("--b-shape", o.b_shape, "Bessel shape parameter (default 1)");
    app.add_option("--c-sign", o.c_sign, "Bessel sign parameter");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Landen identities and Landen-type inequalities for hypergeometric series",
                 "landenkit"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    eval->add_option("--fn", o.fn, "2f1, k, kummer, bessel or closed")->required();
    eval->add_option("--x", o.x, "argument");
    eval->add_option("--r", o.r, "modulus for K");
    eval->add_option("--method", o.method, "agm or series (K only)");
    eval->add_option("--form", o.form, "arcsin_form, log_form, geom_form, inv_sqrt_form");
    add_triple(*eval, o);
    add_series_params(*eval, o);

    auto* identity = app.add_subcommand("identity", "residuals of a Landen identity");
    identity->add_option("--which", o.which, "landen1, landen2, transf, transf-complement")
        ->required();
    identity->add_option("--r", o.r, "single modulus (default: the whole grid)");
    identity->add_option("--method", o.method, "agm or series (landen1/landen2)");
    identity->add_option("--tol", o.tol, "exit 1 when a relative residual exceeds this");
    identity->add_option("--a", o.a);
    identity->add_option("--b", o.b);

    auto* classify = app.add_subcommand("classify", "which hypothesis a parameter point meets");
    classify->add_option("--theorem", o.theorem, "2.1, 2.3 or 2.4")->required();
    classify->add_option("--kind", o.kind, "bessel or kummer (2.3)");
    add_triple(*classify, o);
    add_series_params(*classify, o);

    auto* seq = app.add_subcommand("seq", "monotonicity of a proof sequence");
    seq->add_option("--which", o.which, "alpha, beta, gamma, omega, delta")->required();
    seq->add_option("--n", o.n, "last index n_max (default 200)");
    add_triple(*seq, o);

    auto* sweep = app.add_subcommand("sweep", "certify an inequality over the grid");
    sweep->add_option("--theorem", o.theorem, "2.1, 2.2, 2.3, 2.4, ineq9, elementary")->required();
    sweep->add_option("--direction", o.direction, "ineq1..ineq7, reversed, arcsin, logpow");
    sweep->add_option("--kind", o.kind, "bessel or kummer (2.3)");
    sweep->add_option("--coeffs", o.coeffs, "ones, inv_omega, inv_factorial or a0,a1,... (2.2)");
    sweep->add_option("--window", o.window, "coefficient window for 2.2 families (<= 512)");
    sweep->add_flag("--override", o.override_region, "sweep outside the hypothesis region");
    add_triple(*sweep, o);
    add_series_params(*sweep, o);

    auto* search = app.add_subcommand("search", "seeded counterexample search");
    search->add_option("--theorem", o.theorem, "2.1, 2.3, 2.4 or ineq9")->required();
    search->add_option("--direction", o.direction, "claimed direction (2.3: bessel or kummer)");
    search->add_option("--kind", o.kind, "bessel or kummer (2.3)");
    search->add_option("--box", o.box, "a:lo:hi,b:lo:hi,c:lo:hi")->required();
    search->add_option("--seed", o.seed, "RNG seed (default 0)");
    search->add_option("--budget", o.budget, "parameter samples (default 100)");

    for (auto* sub : {eval, identity, classify, seq, sweep, search}) add_common(*sub, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArgs;
    }

    try {
        const Format format = report::format_from_string(o.format);
        Outcome outcome;
        if (eval->parsed()) {
            outcome = cmd_eval(o, format);
        } else if (identity->parsed()) {
            outcome = cmd_identity(o, format);
        } else if (classify->parsed()) {
            outcome = cmd_classify(o, format);
        } else if (seq->parsed()) {
            outcome = cmd_seq(o, format);
        } else if (sweep->parsed()) {
            outcome = cmd_sweep(o, format);
        } else {
            outcome = cmd_search(o, format);
        }

        if (o.output.empty()) {
            out << outcome.text;
        } else {
            std::ofstream file(o.output, std::ios::binary);
            if (!file) throw ParamError("cannot open '" + o.output + "' for writing");
            file << outcome.text;
        }
        return outcome.code;
    } catch (const ParamError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArgs;
    } catch (const RegionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArgs;
    } catch (const CoefficientMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArgs;
    } catch (const DomainError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const SlowConvergence& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace landenkit::cli
