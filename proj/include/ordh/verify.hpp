#pragma once
//
// The identity / inequality suite behind `ordh verify`. Each check runs over a
// corpus of polynomials and reports pass, fail or skipped together with the worst
// value of its metric. Checks that need the minimal positive element report
// SKIPPED(NoMinimalPositive) under a functional order.
//

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ordh/bmo.hpp"
#include "ordh/hankel.hpp"
#include "ordh/ordered_group.hpp"
#include "ordh/trigpoly.hpp"

namespace ordh::verify {

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);

struct CheckResult {
    std::string name;
    std::size_t n = 0;
    Status status = Status::Pass;
    std::size_t cases = 0;
    std::string metric; ///< what `worst` measures
    double worst = 0.0;
    double threshold = 0.0; ///< pass iff worst <= threshold
    std::string detail;     ///< first failure or skip reason
};

struct Settings {
    GridSpec grid;                 ///< sup-norm grid
    std::int64_t box_radius = 0;   ///< truncation cube radius; 0 = derived from degree
    SolverConfig solver;
    PowerIterationOptions power;
    double slack = 0.02;
};

/// Tolerance for coefficient-exact identities.
inline constexpr double exact_tol = 1e-12;

CheckResult check_hilbert_multiplier(const OrderSpec& order, std::span<const TrigPoly> corpus);
CheckResult check_conjugate_from_projections(const OrderSpec& order, std::span<const TrigPoly> corpus);
CheckResult check_projections_from_hilbert(const OrderSpec& order, std::span<const TrigPoly> corpus);
CheckResult check_projection_algebra(const OrderSpec& order, std::span<const TrigPoly> corpus);
CheckResult check_analytic_completion(const OrderSpec& order, std::span<const TrigPoly> corpus);
CheckResult check_l2_contraction(const OrderSpec& order, std::span<const TrigPoly> corpus);
CheckResult check_conjugation_closure(const OrderSpec& order, std::span<const TrigPoly> corpus, const GridSpec& grid);
CheckResult check_star_conversions(const OrderSpec& order, std::span<const TrigPoly> corpus, const GridSpec& grid);
CheckResult check_analytic_part(const OrderSpec& order, std::span<const TrigPoly> corpus);
CheckResult check_index_bijection(const OrderSpec& order, const Box& box);
CheckResult check_unitary_transfer(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                                   const PowerIterationOptions& power);
CheckResult check_symbol_locality(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box);
CheckResult check_matrix_action(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box);
CheckResult check_adjoint(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box);
CheckResult check_intertwining(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                               std::span<const CharacterIndex> shifts);
CheckResult check_truncation_monotone(const OrderSpec& order, std::span<const TrigPoly> corpus,
                                      const PowerIterationOptions& power);
CheckResult check_nehari(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                         const GridSpec& grid, double slack, const PowerIterationOptions& power);
CheckResult check_bmoa_membership(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                                  const GridSpec& grid, double slack, const PowerIterationOptions& power);
CheckResult check_seminorm_axioms(const OrderSpec& order, std::span<const TrigPoly> corpus, std::uint64_t seed,
                                  const PowerIterationOptions& power);
CheckResult check_seminorm_chain(const OrderSpec& order, std::span<const TrigPoly> corpus,
                                 const SandwichConfig& config);
/// The fixed one-dimensional worked examples.
CheckResult check_worked_examples();

/// Up to `count` shifts from the nonnegative cone near the origin, spread out in order.
std::vector<CharacterIndex> pick_shifts(const OrderSpec& order, std::size_t count);

struct SuiteConfig {
    OrderKind kind = OrderKind::Lexicographic;
    std::optional<std::vector<double>> alpha; ///< functional order coefficients (default sqrt primes)
    std::vector<std::size_t> dims = {1, 2};
    std::size_t corpus_size = 40;
    std::uint64_t seed = 20240601;
    std::optional<std::size_t> grid_points;
    std::int64_t box_radius = 0; ///< 0 = derived from corpus degree
    SolverConfig solver;
    PowerIterationOptions power;
    double slack = 0.02;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Runs every check for every dimension in the config.
SuiteReport run_suite(const SuiteConfig& config);

OrderSpec order_for(const SuiteConfig& config, std::size_t n);

nlohmann::json suite_to_json(const SuiteConfig& config, const SuiteReport& report);

/// FNV-1a 64 of the text, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

} // namespace ordh::verify
