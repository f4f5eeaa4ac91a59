#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ordh/trigpoly.hpp"

namespace ordh {

/// Seeded generator for test polynomials. Uses only the fully specified
/// mt19937_64 output so corpora are identical across standard libraries.
class CorpusRng {
public:
    explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

/// Between 1 and max_terms terms with indices in [-max_degree, max_degree]^n and
/// coefficients with real and imaginary parts in [-1, 1]. Repeated indices merge.
TrigPoly random_poly(CorpusRng& rng, std::size_t n, std::size_t max_terms, std::int64_t max_degree);

std::vector<TrigPoly> make_corpus(std::uint64_t seed, std::size_t count, std::size_t n, std::size_t max_terms,
                                  std::int64_t max_degree);

} // namespace ordh
