#pragma once
//
// BMO / BMOA norm machinery.
//
// Two families of upper bounds come from explicit decompositions of a symbol phi:
//
//   sum form:         phi = f + hilbert(g),         bound |f|_inf + |g|_inf
//   projection form:  phi = P- f1 + P+ g1,          bound max(|f1|_inf, |g1|_inf)
//
// and lower bounds come from truncated Hankel norms, |phi|_H = |H_conj(phi)| + |H_phi|.
// None of the infimum norms is computed exactly; sup norms are grid estimates.
//

#include <optional>
#include <string>
#include <vector>

#include "ordh/hankel.hpp"
#include "ordh/ordered_group.hpp"
#include "ordh/trigpoly.hpp"

namespace ordh {

enum class DecompositionStyle {
    SumWithConjugate, ///< phi = first + hilbert(second)
    Projections,      ///< phi = P-(first) + P+(second)
};

struct BmoDecomposition {
    DecompositionStyle style = DecompositionStyle::SumWithConjugate;
    TrigPoly first;
    TrigPoly second;
    double bound = 0.0; ///< sum (sum form) or max (projection form) of grid sup norms
    GridSpec grid;
};

/// The symbol a decomposition represents.
TrigPoly reconstruct(const OrderSpec& order, const BmoDecomposition& d);

/// Sum-form decomposition phi = f + hilbert(g) with bound sup(f) + sup(g).
BmoDecomposition def2_upper(const OrderSpec& order, const TrigPoly& f, const TrigPoly& g, const GridSpec& grid);

/// Projection-form decomposition phi = P- f1 + P+ g1 with bound max(sup(f1), sup(g1)).
BmoDecomposition star_decomposition(const OrderSpec& order, const TrigPoly& f1, const TrigPoly& g1,
                                    const GridSpec& grid);

struct StarPair {
    TrigPoly f1; ///< source of the P- part
    TrigPoly g1; ///< source of the P+ part
};

struct SumPair {
    TrigPoly f;
    TrigPoly g; ///< enters through its Hilbert transform
};

/// f + hilbert(g) -> (f1, g1) = (f + i g, f - i g + i g^(0)).
StarPair to_star(const OrderSpec& order, const TrigPoly& f, const TrigPoly& g);

/// P- f1 + P+ g1 -> (f, g) = (1/2 (f1 + g1 - f1^(0) + g1^(0)), 1/2 (i g1 - i f1)).
SumPair from_star(const OrderSpec& order, const TrigPoly& f1, const TrigPoly& g1);

/// Projection-form witnesses for conj(phi) given phi = P- f1 + P+ g1.
///
/// Returns (conj(g1), conj(f1) with its constant term replaced by conj(g1^(0))).
/// The first witness has exactly the sup norm of g1; the second differs from
/// conj(f1) only in the constant term.
StarPair conj_closure_witness(const OrderSpec& order, const StarPair& phi);

/// P+ of a projection-form decomposition is again one, with no P- part: (0, g1).
StarPair analytic_part_witness(const OrderSpec& order, const StarPair& phi);

struct SolverConfig {
    int iterations = 2000;
    double step_scale = 0.0; ///< c in the step c / sqrt(t); 0 means the initial objective
    double tol = 1e-12;      ///< stop once the objective or the step falls below tol * c
};

struct StarOptimization {
    BmoDecomposition best;
    int iterations = 0;
    double initial_objective = 0.0;
    double final_objective = 0.0;
    std::size_t free_plus = 0;  ///< free coefficients of f1 (on X+)
    std::size_t free_minus = 0; ///< free coefficients of g1 (on X-)
};

/// Box around the support of phi (and the origin), grown by 2 in every coordinate.
Box default_free_box(const TrigPoly& phi);

/// Minimizes max(grid-sup(f1), grid-sup(g1)) over projection-form decompositions of phi.
///
/// f1 carries the coefficients of phi on X- and g1 those on X+; the free variables
/// are the coefficients of f1 on the X+ part of free_box and of g1 on its X- part.
/// Projected subgradient descent: at each step the part attaining the objective is
/// moved against the subgradient at its maximizing grid point, so that the value
/// there changes by c / sqrt(t). The best iterate is returned and is never worse
/// than the starting point (P- phi, P+ phi).
StarOptimization star_upper_optimize(const OrderSpec& order, const TrigPoly& phi, const Box& free_box,
                                     const GridSpec& grid, const SolverConfig& solver = {});

struct HankelSeminorm {
    double value = 0.0;       ///< |H_conj(phi)| + |H_phi| on the truncation
    double conj_part = 0.0;   ///< |H_conj(phi)|, the BMOA seminorm
    double direct_part = 0.0; ///< |H_phi|
};

/// Box around the support of phi (and the origin), grown by 1 in every coordinate.
Box default_truncation_box(const TrigPoly& phi);

/// Truncated Hankel seminorm. Requires a minimal positive element (NoMinimalPositive otherwise).
HankelSeminorm hankel_seminorm(const OrderSpec& order, const TrigPoly& phi, const Box& box,
                               const PowerIterationOptions& options = {});

struct BmoaReport {
    bool analytic = false;
    double conj_hankel_norm = 0.0;
};

BmoaReport bmoa_check(const OrderSpec& order, const TrigPoly& phi, const Box& box,
                      const PowerIterationOptions& options = {});

/// One inequality lhs <= rhs, accepted with relative slack: lhs <= rhs (1 + slack) + 1e-12.
struct Verdict {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
};

Verdict check_inequality(std::string name, double lhs, double rhs, double slack);

struct SandwichConfig {
    std::optional<GridSpec> grid;      ///< default: grid_for(phi) on the free-box degree
    std::optional<Box> trunc_box;      ///< default: default_truncation_box(phi)
    std::optional<Box> free_box;       ///< default: default_free_box(phi)
    std::optional<SumPair> def2_witness; ///< default: (phi, 0)
    SolverConfig solver;
    PowerIterationOptions power;
    double slack = 0.02;
};

struct BmoReport {
    TrigPoly symbol;
    GridSpec grid;
    Box trunc_box;
    double slack = 0.0;
    bool analytic = false;

    HankelSeminorm seminorm;            ///< truncated lower-bound side
    BmoDecomposition def2;              ///< sum-form witness
    BmoDecomposition star_constructive; ///< to_star of the sum-form witness
    StarOptimization star_optimized;    ///< optimizer result
    BmoDecomposition def2_from_star;    ///< from_star of the optimized decomposition

    double star_upper = 0.0; ///< best projection-form bound found
    double def2_upper = 0.0; ///< best sum-form bound found

    std::vector<Verdict> verdicts;

    bool passed() const;
};

/// Runs every bound and checks the sound directions of the norm chain:
///   |phi|_H <= 2 star_upper, |phi|_H <= 4 def2_upper, constructive star <= 2 def2,
///   from_star sum bound <= 3/2 (sup f1 + sup g1), and exact reconstruction of
///   every witness. Violations are reported in the verdicts, not thrown.
BmoReport sandwich_verify(const OrderSpec& order, const TrigPoly& phi, const SandwichConfig& config = {});

} // namespace ordh
