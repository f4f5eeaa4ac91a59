#include "ordh/bmo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ordh/error.hpp"
#include "ordh/transforms.hpp"

namespace ordh {

namespace {

constexpr cplx I{0.0, 1.0};

double reconstruction_scale(const TrigPoly& phi)
{
    return 1e-12 * std::max(1.0, max_coeff_modulus(phi));
}

} // namespace

TrigPoly reconstruct(const OrderSpec& order, const BmoDecomposition& d)
{
    if (d.style == DecompositionStyle::SumWithConjugate)
        return d.first + hilbert(order, d.second);
    return p_minus(order, d.first) + p_plus(order, d.second);
}

BmoDecomposition def2_upper(const OrderSpec& order, const TrigPoly& f, const TrigPoly& g, const GridSpec& grid)
{
    check_dim(order.dim(), f.dim());
    check_dim(order.dim(), g.dim());
    return {DecompositionStyle::SumWithConjugate, f, g, sup_norm_lower(f, grid) + sup_norm_lower(g, grid), grid};
}

BmoDecomposition star_decomposition(const OrderSpec& order, const TrigPoly& f1, const TrigPoly& g1,
                                    const GridSpec& grid)
{
    check_dim(order.dim(), f1.dim());
    check_dim(order.dim(), g1.dim());
    return {DecompositionStyle::Projections, f1, g1,
            std::max(sup_norm_lower(f1, grid), sup_norm_lower(g1, grid)), grid};
}

StarPair to_star(const OrderSpec& order, const TrigPoly& f, const TrigPoly& g)
{
    check_dim(order.dim(), f.dim());
    check_dim(order.dim(), g.dim());
    const TrigPoly g_mean = TrigPoly::constant(g.dim(), g.constant_term());
    return {f + I * g, f - I * g + I * g_mean};
}

SumPair from_star(const OrderSpec& order, const TrigPoly& f1, const TrigPoly& g1)
{
    check_dim(order.dim(), f1.dim());
    check_dim(order.dim(), g1.dim());
    const std::size_t n = f1.dim();
    TrigPoly f = f1 + g1;
    f -= TrigPoly::constant(n, f1.constant_term());
    f += TrigPoly::constant(n, g1.constant_term());
    return {0.5 * f, 0.5 * (I * g1 - I * f1)};
}

StarPair conj_closure_witness(const OrderSpec& order, const StarPair& phi)
{
    check_dim(order.dim(), phi.f1.dim());
    check_dim(order.dim(), phi.g1.dim());
    TrigPoly g1 = conj(phi.f1);
    g1.set(CharacterIndex::zero(order.dim()), std::conj(phi.g1.constant_term()));
    return {conj(phi.g1), std::move(g1)};
}

StarPair analytic_part_witness(const OrderSpec& order, const StarPair& phi)
{
    check_dim(order.dim(), phi.g1.dim());
    return {TrigPoly(order.dim()), phi.g1};
}

// --------------------------------------------------------------------------

Box default_free_box(const TrigPoly& phi)
{
    auto points = phi.support();
    points.push_back(CharacterIndex::zero(phi.dim()));
    return Box::covering(phi.dim(), points, 2);
}

Box default_truncation_box(const TrigPoly& phi)
{
    auto points = phi.support();
    points.push_back(CharacterIndex::zero(phi.dim()));
    return Box::covering(phi.dim(), points, 1);
}

namespace {

// Values of one part (f1 or g1) on the grid plus its free coefficients. The grid
// values are updated incrementally through the Dirichlet kernel of the free set:
// moving every free coefficient by -delta conj(chi_k(x*)) changes the values by
// -delta K(x - x*), and x - x* is again a grid point.
struct Part {
    std::vector<CharacterIndex> free;
    std::vector<cplx> coeffs;
    std::vector<cplx> values;
    std::vector<cplx> kernel;
    std::size_t argmax = 0;
    double max_sq = 0.0;

    void refresh_max()
    {
        max_sq = 0.0;
        argmax = 0;
        for (std::size_t p = 0; p < values.size(); ++p) {
            const double a = std::norm(values[p]);
            if (a > max_sq) {
                max_sq = a;
                argmax = p;
            }
        }
    }
};

class GridIndexer {
public:
    explicit GridIndexer(const GridSpec& grid) : grid_(grid), m_(static_cast<std::int64_t>(grid.points))
    {
        roots_.resize(grid.points);
        for (std::size_t j = 0; j < grid.points; ++j)
            roots_[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m_));
    }

    std::vector<std::int64_t> split(std::size_t flat) const
    {
        std::vector<std::int64_t> idx(grid_.n);
        for (std::size_t i = grid_.n; i-- > 0;) {
            idx[i] = static_cast<std::int64_t>(flat % grid_.points);
            flat /= grid_.points;
        }
        return idx;
    }

    cplx character_at(const CharacterIndex& k, const std::vector<std::int64_t>& idx) const
    {
        std::int64_t phase = 0;
        for (std::size_t i = 0; i < grid_.n; ++i)
            phase = (phase + ((k[i] % m_) + m_) % m_ * idx[i]) % m_;
        return roots_[static_cast<std::size_t>(phase)];
    }

    // values[p] -= delta * kernel[p - anchor] for all grid points p
    void shifted_update(std::vector<cplx>& values, const std::vector<cplx>& kernel, std::size_t anchor,
                        cplx delta) const
    {
        const auto a = split(anchor);
        const std::size_t n = grid_.n;
        std::vector<std::size_t> stride(n, 1);
        for (std::size_t i = n - 1; i-- > 0;)
            stride[i] = stride[i + 1] * grid_.points;
        // per-coordinate contribution of (i - a_i) mod m to the kernel offset
        std::vector<std::vector<std::size_t>> offset(n, std::vector<std::size_t>(grid_.points));
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t i = 0; i < grid_.points; ++i)
                offset[d][i] = static_cast<std::size_t>(((static_cast<std::int64_t>(i) - a[d]) % m_ + m_) % m_) *
                               stride[d];

        std::vector<std::size_t> idx(n, 0);
        std::size_t q = 0;
        for (std::size_t d = 0; d < n; ++d)
            q += offset[d][0];
        for (std::size_t p = 0; p < values.size(); ++p) {
            values[p] -= delta * kernel[q];
            for (std::size_t d = n; d-- > 0;) {
                q -= offset[d][idx[d]];
                if (++idx[d] < grid_.points) {
                    q += offset[d][idx[d]];
                    break;
                }
                idx[d] = 0;
                q += offset[d][0];
            }
        }
    }

private:
    GridSpec grid_;
    std::int64_t m_;
    std::vector<cplx> roots_;
};

TrigPoly with_free(const TrigPoly& fixed, const Part& part)
{
    TrigPoly out = fixed;
    for (std::size_t i = 0; i < part.free.size(); ++i)
        out.accumulate(part.free[i], part.coeffs[i]);
    return out;
}

Part make_part(const TrigPoly& fixed, std::vector<CharacterIndex> free, const GridSpec& grid)
{
    Part part;
    TrigPoly kernel(fixed.dim());
    for (const auto& k : free)
        kernel.set(k, 1.0);
    part.coeffs.assign(free.size(), cplx{});
    part.free = std::move(free);
    part.values = evaluate_grid(fixed, grid);
    part.kernel = evaluate_grid(kernel, grid);
    part.refresh_max();
    return part;
}

} // namespace

StarOptimization star_upper_optimize(const OrderSpec& order, const TrigPoly& phi, const Box& free_box,
                                     const GridSpec& grid, const SolverConfig& solver)
{
    check_dim(order.dim(), phi.dim());
    check_dim(order.dim(), grid.n);
    free_box.validate(order.dim());
    if (solver.iterations < 0 || !(solver.tol >= 0.0) || !(solver.step_scale >= 0.0))
        throw InvalidArgument("star_upper_optimize: invalid solver configuration");

    const TrigPoly fixed_f1 = p_minus(order, phi);
    const TrigPoly fixed_g1 = p_plus(order, phi);

    Part f1 = make_part(fixed_f1, enumerate_cone(order, free_box, ConeSide::PositiveWithUnit), grid);
    Part g1 = make_part(fixed_g1, enumerate_cone(order, free_box, ConeSide::StrictlyNegative), grid);
    const GridIndexer indexer(grid);

    StarOptimization out;
    out.free_plus = f1.free.size();
    out.free_minus = g1.free.size();
    out.initial_objective = std::sqrt(std::max(f1.max_sq, g1.max_sq));
    const double c = solver.step_scale > 0.0 ? solver.step_scale : out.initial_objective;

    double best = out.initial_objective;
    std::vector<cplx> best_f1 = f1.coeffs;
    std::vector<cplx> best_g1 = g1.coeffs;

    int t = 0;
    while (t < solver.iterations && best > solver.tol * std::max(c, 1e-300)) {
        Part& active = f1.max_sq >= g1.max_sq ? f1 : g1;
        if (active.free.empty())
            break; // the maximum sits on a part with nothing to vary
        const double step = c / std::sqrt(static_cast<double>(++t));
        if (step < solver.tol * c)
            break;

        const cplx peak = active.values[active.argmax];
        const double peak_abs = std::abs(peak);
        if (peak_abs == 0.0)
            break;
        const cplx delta = step * (peak / peak_abs) / static_cast<double>(active.free.size());
        const auto anchor = indexer.split(active.argmax);
        for (std::size_t i = 0; i < active.free.size(); ++i)
            active.coeffs[i] -= delta * std::conj(indexer.character_at(active.free[i], anchor));
        indexer.shifted_update(active.values, active.kernel, active.argmax, delta);
        active.refresh_max();

        const double objective = std::sqrt(std::max(f1.max_sq, g1.max_sq));
        if (!std::isfinite(objective))
            throw NumericalError("star_upper_optimize: objective became non-finite");
        if (objective < best) {
            best = objective;
            best_f1 = f1.coeffs;
            best_g1 = g1.coeffs;
        }
    }
    out.iterations = t;

    f1.coeffs = best_f1;
    g1.coeffs = best_g1;
    out.best = star_decomposition(order, with_free(fixed_f1, f1), with_free(fixed_g1, g1), grid);
    // fresh evaluation can exceed the tracked value by drift; never report worse than the start
    if (out.best.bound > out.initial_objective)
        out.best = star_decomposition(order, fixed_f1, fixed_g1, grid);
    out.final_objective = out.best.bound;
    return out;
}

// --------------------------------------------------------------------------

HankelSeminorm hankel_seminorm(const OrderSpec& order, const TrigPoly& phi, const Box& box,
                               const PowerIterationOptions& options)
{
    check_dim(order.dim(), phi.dim());
    minimal_positive(order); // the seminorm characterization needs chi_1
    HankelSeminorm out;
    out.conj_part = operator_norm(hankel_matrix(order, conj(phi), box), options).value;
    out.direct_part = operator_norm(hankel_matrix(order, phi, box), options).value;
    out.value = out.conj_part + out.direct_part;
    return out;
}

BmoaReport bmoa_check(const OrderSpec& order, const TrigPoly& phi, const Box& box,
                      const PowerIterationOptions& options)
{
    check_dim(order.dim(), phi.dim());
    return {is_analytic(order, phi), operator_norm(hankel_matrix(order, conj(phi), box), options).value};
}

Verdict check_inequality(std::string name, double lhs, double rhs, double slack)
{
    const bool holds = std::isfinite(lhs) && std::isfinite(rhs) && lhs <= rhs * (1.0 + slack) + 1e-12;
    return {std::move(name), lhs, rhs, slack, holds};
}

bool BmoReport::passed() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

BmoReport sandwich_verify(const OrderSpec& order, const TrigPoly& phi, const SandwichConfig& config)
{
    check_dim(order.dim(), phi.dim());
    minimal_positive(order);

    BmoReport report;
    report.symbol = phi;
    report.slack = config.slack;
    report.analytic = is_analytic(order, phi);
    report.trunc_box = config.trunc_box.value_or(default_truncation_box(phi));
    const Box free_box = config.free_box.value_or(default_free_box(phi));
    if (config.grid) {
        report.grid = *config.grid;
    } else {
        report.grid = GridSpec::default_for(order.dim());
        std::int64_t degree = 0;
        for (std::size_t i = 0; i < free_box.dim(); ++i)
            degree = std::max({degree, std::abs(free_box.lo[i]), std::abs(free_box.hi[i])});
        report.grid.points = std::max<std::size_t>(report.grid.points, 2 * static_cast<std::size_t>(degree) + 1);
    }
    const GridSpec& grid = report.grid;

    report.seminorm = hankel_seminorm(order, phi, report.trunc_box, config.power);

    const SumPair witness = config.def2_witness.value_or(SumPair{phi, TrigPoly(phi.dim())});
    report.def2 = def2_upper(order, witness.f, witness.g, grid);
    const StarPair constructive = to_star(order, witness.f, witness.g);
    report.star_constructive = star_decomposition(order, constructive.f1, constructive.g1, grid);
    report.star_optimized = star_upper_optimize(order, phi, free_box, grid, config.solver);
    const BmoDecomposition& opt = report.star_optimized.best;
    const SumPair back = from_star(order, opt.first, opt.second);
    report.def2_from_star = def2_upper(order, back.f, back.g, grid);

    report.star_upper = std::min(opt.bound, report.star_constructive.bound);
    report.def2_upper = std::min(report.def2.bound, report.def2_from_star.bound);

    const double tiny = reconstruction_scale(phi);
    auto exact = [&](const char* name, const BmoDecomposition& d) {
        report.verdicts.push_back(
            check_inequality(name, max_coeff_distance(reconstruct(order, d), phi), tiny, 0.0));
    };
    exact("sum-form witness reconstructs phi", report.def2);
    exact("to_star witness reconstructs phi", report.star_constructive);
    exact("optimized projection form reconstructs phi", opt);
    exact("from_star witness reconstructs phi", report.def2_from_star);

    const double h = report.seminorm.value;
    const double slack = config.slack;
    report.verdicts.push_back(check_inequality("|phi|_H <= 2 star_upper(optimized)", h, 2.0 * opt.bound, slack));
    report.verdicts.push_back(
        check_inequality("|phi|_H <= 2 star_upper(to_star)", h, 2.0 * report.star_constructive.bound, slack));
    report.verdicts.push_back(check_inequality("|phi|_H <= 4 def2_upper", h, 4.0 * report.def2.bound, slack));
    report.verdicts.push_back(check_inequality("star_upper(to_star) <= 2 def2_upper",
                                               report.star_constructive.bound, 2.0 * report.def2.bound, slack));
    const double f1_sup = sup_norm_lower(opt.first, grid);
    const double g1_sup = sup_norm_lower(opt.second, grid);
    report.verdicts.push_back(check_inequality("def2(from_star) <= 3/2 (sup f1 + sup g1)",
                                               report.def2_from_star.bound, 1.5 * (f1_sup + g1_sup), slack));
    return report;
}

} // namespace ordh
