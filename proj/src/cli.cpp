#include "ordh/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ordh/bmo.hpp"
#include "ordh/error.hpp"
#include "ordh/hankel.hpp"
#include "ordh/io.hpp"
#include "ordh/transforms.hpp"
#include "ordh/verify.hpp"

namespace ordh::cli {

namespace {

using json = nlohmann::json;

struct Options {
    std::optional<std::string> order;
    std::optional<std::vector<double>> alpha;
    std::optional<std::size_t> n;
    std::optional<std::size_t> grid;
    std::optional<std::int64_t> box;
    std::optional<double> tol;
    std::optional<int> iters;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> corpus;
    std::optional<double> slack;
    std::optional<std::string> json_path;
    std::optional<std::string> format;
    std::optional<std::string> config;
    std::string symbol_path;
    bool gamma = false;
};

template <typename T>
void fill(std::optional<T>& slot, const json& cfg, const char* key)
{
    if (slot || !cfg.contains(key))
        return;
    try {
        slot = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("config key '") + key + "': " + e.what());
    }
}

// Flags given on the command line win over the config file.
void apply_config(Options& o)
{
    if (!o.config)
        return;
    std::ifstream in(*o.config);
    if (!in)
        throw ParseError("cannot open config file " + *o.config);
    std::stringstream text;
    text << in.rdbuf();
    const json cfg = io::parse(text.str(), "config file " + *o.config);
    if (!cfg.is_object())
        throw ParseError("config file " + *o.config + ": expected a JSON object");
    fill(o.order, cfg, "order");
    fill(o.alpha, cfg, "alpha");
    fill(o.n, cfg, "n");
    fill(o.grid, cfg, "grid");
    fill(o.box, cfg, "box");
    fill(o.tol, cfg, "tol");
    fill(o.iters, cfg, "iters");
    fill(o.seed, cfg, "seed");
    fill(o.corpus, cfg, "corpus");
    fill(o.slack, cfg, "slack");
    fill(o.json_path, cfg, "json");
    fill(o.format, cfg, "format");
}

void validate(const Options& o)
{
    if (o.order && *o.order != "lex" && *o.order != "functional")
        throw InvalidArgument("--order must be lex or functional, got " + *o.order);
    if (o.format && *o.format != "text" && *o.format != "json" && *o.format != "csv")
        throw InvalidArgument("--format must be text, json or csv, got " + *o.format);
    if (o.n && *o.n == 0)
        throw InvalidArgument("--n must be positive");
    if (o.grid && *o.grid == 0)
        throw InvalidArgument("--grid must be positive");
    if (o.box && *o.box <= 0)
        throw InvalidArgument("--box must be positive");
    if (o.tol && !(*o.tol > 0.0))
        throw InvalidArgument("--tol must be positive");
    if (o.iters && *o.iters <= 0)
        throw InvalidArgument("--iters must be positive");
    if (o.corpus && *o.corpus == 0)
        throw InvalidArgument("--corpus must be positive");
    if (o.slack && !(*o.slack > 0.0))
        throw InvalidArgument("--slack must be positive");
    if (o.alpha && o.order && *o.order != "functional")
        throw InvalidArgument("--alpha requires --order functional");
}

bool functional(const Options& o) { return o.order && *o.order == "functional"; }

OrderSpec make_order(const Options& o, std::size_t n)
{
    if (!functional(o))
        return OrderSpec::lexicographic(n);
    if (o.alpha) {
        if (o.alpha->size() != n)
            throw DimensionMismatch(n, o.alpha->size());
        return OrderSpec::functional(*o.alpha);
    }
    return OrderSpec::default_functional(n);
}

PowerIterationOptions power_options(const Options& o)
{
    PowerIterationOptions p;
    if (o.tol)
        p.tol = *o.tol;
    return p;
}

SolverConfig solver_options(const Options& o)
{
    SolverConfig s;
    if (o.iters)
        s.iterations = *o.iters;
    return s;
}

void check_box_size(const OrderSpec& order, const Box& box)
{
    const auto neg = enumerate_cone(order, box, ConeSide::StrictlyNegative).size();
    const auto pos = enumerate_cone(order, box, ConeSide::PositiveWithUnit).size();
    if (std::max(neg, pos) > max_matrix_dim)
        throw InvalidArgument("truncation box gives a matrix dimension of " + std::to_string(std::max(neg, pos)) +
                              ", above the limit " + std::to_string(max_matrix_dim));
}

void write_json_file(const Options& o, const json& doc)
{
    if (!o.json_path)
        return;
    std::ofstream file(*o.json_path);
    if (!file)
        throw InvalidArgument("cannot write " + *o.json_path);
    file << doc.dump(2) << '\n';
}

std::string fmt(double v)
{
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

TrigPoly load_symbol(const Options& o)
{
    TrigPoly phi = io::read_symbol_file(o.symbol_path);
    if (o.n && *o.n != phi.dim())
        throw DimensionMismatch(*o.n, phi.dim());
    return phi;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out)
{
    verify::SuiteConfig config;
    if (functional(o)) {
        config.kind = OrderKind::Functional;
        config.alpha = o.alpha;
        config.dims = {o.alpha ? o.alpha->size() : 2};
    }
    if (o.n)
        config.dims = {*o.n};
    if (o.corpus)
        config.corpus_size = *o.corpus;
    if (o.seed)
        config.seed = *o.seed;
    config.grid_points = o.grid;
    if (o.box) {
        config.box_radius = *o.box;
        for (const auto n : config.dims)
            check_box_size(verify::order_for(config, n), Box::cube(n, *o.box + 1));
    }
    config.solver = solver_options(o);
    config.power = power_options(o);
    if (o.slack)
        config.slack = *o.slack;
    for (const auto n : config.dims)
        verify::order_for(config, n); // reject bad orders before running anything

    const verify::SuiteReport report = verify::run_suite(config);
    const json doc = verify::suite_to_json(config, report);
    const std::string hash = verify::fnv1a_hex(doc.dump());
    write_json_file(o, doc);

    const std::string format = o.format.value_or("text");
    if (format == "json") {
        out << doc.dump(2) << '\n';
    } else if (format == "csv") {
        out << "name,n,status,cases,worst,threshold\n";
        for (const auto& c : report.checks)
            out << c.name << ',' << c.n << ',' << verify::status_name(c.status) << ',' << c.cases << ','
                << fmt(c.worst) << ',' << fmt(c.threshold) << '\n';
    } else {
        for (const auto& c : report.checks) {
            out << std::left << std::setw(8) << verify::status_name(c.status) << std::setw(28) << c.name << " n=" << c.n;
            if (c.status == verify::Status::Skipped) {
                out << "  (" << c.detail << ")\n";
                continue;
            }
            out << "  cases=" << c.cases << "  worst=" << fmt(c.worst) << "  limit=" << fmt(c.threshold);
            if (c.status == verify::Status::Fail)
                out << "  first failure: " << c.detail;
            out << '\n';
        }
        out << "report-hash: " << hash << '\n';
        out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? ExitPass : ExitFailure;
}

// ---------------------------------------------------------------- hankel-norm

int cmd_hankel_norm(const Options& o, std::ostream& out)
{
    const TrigPoly phi = load_symbol(o);
    const std::size_t n = phi.dim();
    const OrderSpec order = make_order(o, n);
    const PowerIterationOptions power = power_options(o);
    const double slack = o.slack.value_or(0.02);
    if (o.gamma)
        minimal_positive(order);

    const Box box = o.box ? Box::cube(n, *o.box) : default_truncation_box(phi);
    check_box_size(order, box);
    GridSpec grid = grid_for(phi);
    if (o.grid)
        grid.points = *o.grid;

    const HankelTruncation direct = hankel_matrix(order, phi, box);
    const HankelTruncation conjugate = hankel_matrix(order, conj(phi), box);
    const double h = operator_norm(direct, power).value;
    const double hbar = operator_norm(conjugate, power).value;
    const double sup = sup_norm_lower(phi, grid);
    const double form = form_norm(order, nehari_kernel(order, phi), box, power);
    const double allowance = slack * l2_norm(phi);
    const bool nehari_ok = h <= sup + allowance + 1e-12 && form <= sup + allowance + 1e-12;

    json doc = {{"order", io::order_to_json(order)},
                {"box", io::box_to_json(box)},
                {"grid_points", grid.points},
                {"symbol", io::symbol_to_json(phi)},
                {"hankel_norm", h},
                {"conj_hankel_norm", hbar},
                {"seminorm", h + hbar},
                {"sup_estimate", sup},
                {"nehari_form_norm", form},
                {"nehari_allowance", allowance},
                {"nehari_holds", nehari_ok}};
    std::optional<double> gamma_norm;
    if (o.gamma) {
        gamma_norm = operator_norm(gamma_matrix(order, gamma_kernel(order, phi), box), power).value;
        doc["gamma_norm"] = *gamma_norm;
    }
    write_json_file(o, doc);

    const std::string format = o.format.value_or("text");
    if (format == "json") {
        out << doc.dump(2) << '\n';
    } else if (format == "csv") {
        out << "hankel_norm,conj_hankel_norm,seminorm,sup_estimate,nehari_form_norm,nehari_holds";
        out << (gamma_norm ? ",gamma_norm\n" : "\n");
        out << fmt(h) << ',' << fmt(hbar) << ',' << fmt(h + hbar) << ',' << fmt(sup) << ',' << fmt(form) << ','
            << (nehari_ok ? "true" : "false");
        if (gamma_norm)
            out << ',' << fmt(*gamma_norm);
        out << '\n';
    } else {
        out << "|H_phi|        = " << fmt(h) << '\n';
        out << "|H_conj(phi)|  = " << fmt(hbar) << '\n';
        out << "|phi|_H        = " << fmt(h + hbar) << '\n';
        out << "sup estimate   = " << fmt(sup) << "  (grid " << grid.points << ")\n";
        out << "form norm      = " << fmt(form) << '\n';
        if (gamma_norm)
            out << "|Gamma|        = " << fmt(*gamma_norm) << '\n';
        out << "nehari bound   : " << (nehari_ok ? "holds" : "VIOLATED") << " (allowance " << fmt(allowance) << ")\n";
    }
    return nehari_ok ? ExitPass : ExitFailure;
}

// ---------------------------------------------------------------- bmo

int cmd_bmo(const Options& o, std::ostream& out)
{
    const TrigPoly phi = load_symbol(o);
    const std::size_t n = phi.dim();
    const OrderSpec order = make_order(o, n);
    minimal_positive(order);

    SandwichConfig config;
    if (o.box) {
        config.trunc_box = Box::cube(n, *o.box);
        check_box_size(order, *config.trunc_box);
    } else {
        check_box_size(order, default_truncation_box(phi));
    }
    if (o.grid)
        config.grid = GridSpec{n, *o.grid};
    config.solver = solver_options(o);
    config.power = power_options(o);
    if (o.slack)
        config.slack = *o.slack;

    const BmoReport report = sandwich_verify(order, phi, config);
    const json doc = io::report_to_json(report);
    write_json_file(o, doc);

    const std::string format = o.format.value_or("text");
    if (format == "json") {
        out << doc.dump(2) << '\n';
    } else if (format == "csv") {
        out << "seminorm,conj_part,direct_part,star_upper,def2_upper,analytic,passed\n";
        out << fmt(report.seminorm.value) << ',' << fmt(report.seminorm.conj_part) << ','
            << fmt(report.seminorm.direct_part) << ',' << fmt(report.star_upper) << ',' << fmt(report.def2_upper) << ','
            << (report.analytic ? "true" : "false") << ',' << (report.passed() ? "true" : "false") << '\n';
    } else {
        out << "|phi|_H       = " << fmt(report.seminorm.value) << "  (|H_conj| " << fmt(report.seminorm.conj_part)
            << ", |H| " << fmt(report.seminorm.direct_part) << ")\n";
        out << "star upper    = " << fmt(report.star_upper) << "  (" << report.star_optimized.iterations
            << " solver steps)\n";
        out << "sum upper     = " << fmt(report.def2_upper) << '\n';
        out << "analytic      = " << (report.analytic ? "yes (BMOA: |H_conj(phi)| bounds the norm)" : "no") << '\n';
        for (const auto& v : report.verdicts)
            out << (v.holds ? "PASS  " : "FAIL  ") << v.name << "  " << fmt(v.lhs) << " <= " << fmt(v.rhs) << '\n';
        out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? ExitPass : ExitFailure;
}

// ---------------------------------------------------------------- demo

int cmd_demo(const Options& o, std::ostream& out)
{
    const OrderSpec lex = OrderSpec::lexicographic(1);
    const Box box = Box::cube(1, 2);
    auto chi = [](std::int64_t k, cplx c = 1.0) { return TrigPoly::character(CharacterIndex{k}, c); };
    const TrigPoly cosine = chi(1, 0.5) + chi(-1, 0.5);

    out << "Worked examples on T with the usual order of Z (chi_k(x) = e^{2 pi i k x}).\n\n";

    out << "hilbert(cos) = sin: the multiplier -i sgn(k) sends 1/2 chi_1 + 1/2 chi_-1 to\n  "
        << io::symbol_to_json(hilbert(lex, cosine)).dump() << "\n\n";

    const std::vector<CharacterIndex> rows{{-1}, {-2}}, cols{{0}, {1}};
    const TrigPoly two = chi(-1) + chi(-2);
    const HankelTruncation m = hankel_matrix(lex, two, rows, cols);
    out << "H for chi_-1 + chi_-2 on rows {-1,-2} x cols {0,1} (entry phi^(row - col)):\n";
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r)
        out << "  [" << m.entries(r, 0).real() << ' ' << m.entries(r, 1).real() << "]\n";
    out << "  norm " << fmt(operator_norm(m, power_options(o)).value) << " (golden ratio "
        << fmt((1.0 + std::sqrt(5.0)) / 2.0) << ")\n\n";

    out << "|chi_1|_H = " << fmt(hankel_seminorm(lex, chi(1), box, power_options(o)).value)
        << ": only the conjugate chi_-1 has a Hankel part, of rank one\n";
    const TrigPoly sine = hilbert(lex, cosine);
    const HankelSeminorm s = hankel_seminorm(lex, sine, box, power_options(o));
    out << "sin: |H_phi| = " << fmt(s.direct_part) << ", |H_conj(phi)| = " << fmt(s.conj_part) << "\n\n";

    const StarPair star = to_star(lex, TrigPoly(1), cosine);
    out << "sin = f + hilbert(g) with f = 0, g = cos becomes P- f1 + P+ g1 with\n"
        << "  f1 = " << io::symbol_to_json(star.f1).dump() << "\n  g1 = " << io::symbol_to_json(star.g1).dump()
        << "\n\n";

    const TrigPoly sym = chi(-1) + chi(1);
    const BmoReport report = sandwich_verify(lex, sym);
    out << "chi_-1 + chi_1 = 2 cos: |phi|_H = " << fmt(report.seminorm.value) << ", star bound "
        << fmt(report.star_upper) << ", sum bound " << fmt(report.def2_upper) << '\n';
    for (const auto& v : report.verdicts)
        out << "  " << (v.holds ? "PASS  " : "FAIL  ") << v.name << '\n';

    const verify::CheckResult examples = verify::check_worked_examples();
    out << "\nworked-examples check: " << verify::status_name(examples.status) << '\n';
    return examples.status == verify::Status::Fail || !report.passed() ? ExitFailure : ExitPass;
}

void add_common(CLI::App& app, Options& o)
{
    app.add_option("--order", o.order, "lex or functional");
    app.add_option("--alpha", o.alpha, "functional order coefficients (n >= 2)");
    app.add_option("--n", o.n, "dimension");
    app.add_option("--grid", o.grid, "grid points per axis for sup-norm estimates");
    app.add_option("--box", o.box, "truncation cube radius");
    app.add_option("--tol", o.tol, "power iteration tolerance");
    app.add_option("--iters", o.iters, "star optimizer iterations");
    app.add_option("--seed", o.seed, "corpus seed");
    app.add_option("--slack", o.slack, "relative slack for inequalities");
    app.add_option("--json", o.json_path, "write the full report as JSON to this path");
    app.add_option("--format", o.format, "stdout format: text, json or csv");
    app.add_option("--config", o.config, "JSON config file; flags win");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Harmonic analysis on the torus with an ordered dual group", "ordh"};
    app.require_subcommand(1);
    Options o;

    auto* verify_cmd = app.add_subcommand("verify", "run the identity and inequality suite");
    add_common(*verify_cmd, o);
    verify_cmd->add_option("--corpus", o.corpus, "random polynomials per dimension");

    auto* hankel_cmd = app.add_subcommand("hankel-norm", "truncated Hankel norms of a symbol");
    add_common(*hankel_cmd, o);
    hankel_cmd->add_option("symbol", o.symbol_path, "symbol JSON file")->required();
    hankel_cmd->add_flag("--gamma", o.gamma, "also compute the Gamma-form norm");

    auto* bmo_cmd = app.add_subcommand("bmo", "BMO bounds and norm chain for a symbol");
    add_common(*bmo_cmd, o);
    bmo_cmd->add_option("symbol", o.symbol_path, "symbol JSON file")->required();

    auto* demo_cmd = app.add_subcommand("demo", "print the one-dimensional worked examples");
    add_common(*demo_cmd, o);

    std::vector<const char*> argv{"ordh"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitPass;
    } catch (const CLI::ParseError& e) {
        err << "ordh: " << e.what() << '\n';
        return ExitUsage;
    }

    try {
        apply_config(o);
        validate(o);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (hankel_cmd->parsed())
            return cmd_hankel_norm(o, out);
        if (bmo_cmd->parsed())
            return cmd_bmo(o, out);
        return cmd_demo(o, out);
    } catch (const NoMinimalPositive& e) {
        err << "ordh: NoMinimalPositive: " << e.what() << '\n';
        return ExitUsage;
    } catch (const ParseError& e) {
        err << "ordh: parse error: " << e.what() << '\n';
        return ExitUsage;
    } catch (const InvalidArgument& e) {
        err << "ordh: " << e.what() << '\n';
        return ExitUsage;
    } catch (const DimensionMismatch& e) {
        err << "ordh: " << e.what() << '\n';
        return ExitUsage;
    } catch (const Error& e) {
        err << "ordh: " << e.what() << '\n';
        return ExitFailure;
    }
}

} // namespace ordh::cli
