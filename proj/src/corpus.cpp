#include "ordh/corpus.hpp"

#include "ordh/error.hpp"

namespace ordh {

std::int64_t CorpusRng::integer(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw InvalidArgument("CorpusRng::integer: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

TrigPoly random_poly(CorpusRng& rng, std::size_t n, std::size_t max_terms, std::int64_t max_degree)
{
    TrigPoly f(n);
    const auto terms = rng.integer(1, static_cast<std::int64_t>(std::max<std::size_t>(max_terms, 1)));
    for (std::int64_t t = 0; t < terms; ++t) {
        CharacterIndex k(n);
        for (std::size_t i = 0; i < n; ++i)
            k[i] = rng.integer(-max_degree, max_degree);
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        f.accumulate(k, {re, im});
    }
    return f;
}

std::vector<TrigPoly> make_corpus(std::uint64_t seed, std::size_t count, std::size_t n, std::size_t max_terms,
                                  std::int64_t max_degree)
{
    CorpusRng rng(seed);
    std::vector<TrigPoly> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        corpus.push_back(random_poly(rng, n, max_terms, max_degree));
    return corpus;
}

} // namespace ordh
