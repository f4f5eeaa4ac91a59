#include "ordh/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ordh/error.hpp"
#include "ordh/parallel.hpp"

namespace ordh {

GridSpec GridSpec::default_for(std::size_t n)
{
    switch (n) {
    case 1: return {1, 512};
    case 2: return {2, 128};
    case 3: return {3, 32};
    default: return {n, 16};
    }
}

std::size_t GridSpec::total() const
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= points;
    return total;
}

GridSpec grid_for(const TrigPoly& f)
{
    GridSpec grid = GridSpec::default_for(f.dim());
    grid.points = std::max<std::size_t>(grid.points, 2 * static_cast<std::size_t>(f.max_degree()) + 1);
    return grid;
}

// --------------------------------------------------------------------------

TrigPoly::TrigPoly(std::size_t n, double drop_tol) : n_(n), drop_tol_(drop_tol)
{
    if (n == 0)
        throw InvalidArgument("polynomial dimension must be at least 1");
    if (!(drop_tol >= 0.0))
        throw InvalidArgument("drop tolerance must be nonnegative");
}

TrigPoly TrigPoly::character(const CharacterIndex& k, cplx c)
{
    TrigPoly p(k.dim());
    p.set(k, c);
    return p;
}

TrigPoly TrigPoly::constant(std::size_t n, cplx c)
{
    return character(CharacterIndex::zero(n), c);
}

cplx TrigPoly::coeff(const CharacterIndex& k) const
{
    check_dim(n_, k.dim());
    const auto it = terms_.find(k);
    return it == terms_.end() ? cplx{} : it->second;
}

void TrigPoly::set(const CharacterIndex& k, cplx c)
{
    check_dim(n_, k.dim());
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw NumericalError("non-finite coefficient at " + k.to_string());
    if (keep(c))
        terms_[k] = c;
    else
        terms_.erase(k);
}

void TrigPoly::accumulate(const CharacterIndex& k, cplx c)
{
    set(k, coeff(k) + c);
}

std::vector<CharacterIndex> TrigPoly::support() const
{
    std::vector<CharacterIndex> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.push_back(k);
    return out;
}

std::int64_t TrigPoly::max_degree() const
{
    std::int64_t d = 0;
    for (const auto& [k, c] : terms_)
        for (auto v : k.coords())
            d = std::max(d, v < 0 ? -v : v);
    return d;
}

TrigPoly TrigPoly::operator-() const
{
    TrigPoly r(*this);
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other)
{
    check_dim(n_, other.n_);
    for (const auto& [k, c] : other.terms_)
        accumulate(k, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other)
{
    check_dim(n_, other.n_);
    for (const auto& [k, c] : other.terms_)
        accumulate(k, -c);
    return *this;
}

TrigPoly& TrigPoly::operator*=(cplx c)
{
    Terms scaled;
    for (const auto& [k, v] : terms_) {
        const cplx w = v * c;
        if (keep(w))
            scaled.emplace_hint(scaled.end(), k, w);
    }
    terms_ = std::move(scaled);
    return *this;
}

// --------------------------------------------------------------------------

TrigPoly add(const TrigPoly& f, const TrigPoly& g)
{
    return f + g;
}

TrigPoly scale(cplx c, const TrigPoly& f)
{
    return f * c;
}

TrigPoly multiply(const TrigPoly& f, const TrigPoly& g)
{
    check_dim(f.dim(), g.dim());
    // accumulate the raw sums first so the drop tolerance applies to final values only
    std::map<CharacterIndex, cplx> sums;
    for (const auto& [j, a] : f.terms())
        for (const auto& [k, b] : g.terms())
            sums[j + k] += a * b;
    TrigPoly out(f.dim(), f.drop_tolerance());
    for (const auto& [k, c] : sums)
        out.set(k, c);
    return out;
}

TrigPoly conj(const TrigPoly& f)
{
    TrigPoly out(f.dim(), f.drop_tolerance());
    for (const auto& [k, c] : f.terms())
        out.set(-k, std::conj(c));
    return out;
}

cplx evaluate(const TrigPoly& f, std::span<const double> x)
{
    check_dim(f.dim(), x.size());
    cplx sum{};
    for (const auto& [k, c] : f.terms()) {
        double phase = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            phase += static_cast<double>(k[i]) * x[i];
        phase -= std::floor(phase);
        sum += c * std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
    return sum;
}

std::vector<cplx> evaluate_grid(const TrigPoly& f, const GridSpec& grid)
{
    check_dim(f.dim(), grid.n);
    if (grid.points == 0)
        throw InvalidArgument("grid needs at least one point per circle");
    const auto m = static_cast<std::int64_t>(grid.points);
    const std::size_t n = grid.n;

    // roots of unity exp(2 pi i j / m); phases are reduced exactly in integers
    std::vector<cplx> roots(grid.points);
    for (std::size_t j = 0; j < grid.points; ++j)
        roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));

    std::vector<std::int64_t> reduced;
    std::vector<cplx> coeffs;
    for (const auto& [k, c] : f.terms()) {
        for (std::size_t i = 0; i < n; ++i)
            reduced.push_back(((k[i] % m) + m) % m);
        coeffs.push_back(c);
    }

    std::vector<cplx> values(grid.total());
    parallel_for(values.size(), [&](std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> idx(n);
        for (std::size_t p = begin; p < end; ++p) {
            std::size_t rest = p;
            for (std::size_t i = n; i-- > 0;) {
                idx[i] = static_cast<std::int64_t>(rest % grid.points);
                rest /= grid.points;
            }
            cplx sum{};
            for (std::size_t t = 0; t < coeffs.size(); ++t) {
                std::int64_t phase = 0;
                for (std::size_t i = 0; i < n; ++i)
                    phase = (phase + reduced[t * n + i] * idx[i]) % m;
                sum += coeffs[t] * roots[static_cast<std::size_t>(phase)];
            }
            values[p] = sum;
        }
    });
    return values;
}

double sup_norm_lower(const TrigPoly& f, const GridSpec& grid)
{
    double best = 0.0;
    for (const cplx& v : evaluate_grid(f, grid))
        best = std::max(best, std::abs(v));
    return best;
}

double lp_norm_estimate(const TrigPoly& f, double p, const GridSpec& grid)
{
    if (!(p >= 1.0) || !std::isfinite(p))
        throw InvalidArgument("lp_norm_estimate needs p in [1, inf)");
    const auto values = evaluate_grid(f, grid);
    double sum = 0.0;
    for (const cplx& v : values)
        sum += std::pow(std::abs(v), p);
    return std::pow(sum / static_cast<double>(values.size()), 1.0 / p);
}

double l2_norm(const TrigPoly& f)
{
    double sum = 0.0;
    for (const auto& [k, c] : f.terms())
        sum += std::norm(c);
    return std::sqrt(sum);
}

cplx inner(const TrigPoly& f, const TrigPoly& g)
{
    check_dim(f.dim(), g.dim());
    cplx sum{};
    for (const auto& [k, c] : f.terms())
        sum += c * std::conj(g.coeff(k));
    return sum;
}

bool is_real_valued(const TrigPoly& f, double tol)
{
    for (const auto& [k, c] : f.terms())
        if (std::abs(f.coeff(-k) - std::conj(c)) > tol)
            return false;
    return true;
}

double max_coeff_distance(const TrigPoly& f, const TrigPoly& g)
{
    check_dim(f.dim(), g.dim());
    double d = 0.0;
    for (const auto& [k, c] : f.terms())
        d = std::max(d, std::abs(c - g.coeff(k)));
    for (const auto& [k, c] : g.terms())
        d = std::max(d, std::abs(c - f.coeff(k)));
    return d;
}

double max_coeff_modulus(const TrigPoly& f)
{
    double d = 0.0;
    for (const auto& [k, c] : f.terms())
        d = std::max(d, std::abs(c));
    return d;
}

} // namespace ordh
