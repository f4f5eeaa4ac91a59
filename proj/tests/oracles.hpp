#pragma once
// Reference computations used by the tests. None of them calls back into the
// library code they check.

#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "ordh/hankel.hpp"
#include "ordh/trigpoly.hpp"

namespace oracle {

using ordh::cplx;

/// Largest singular value by a dense SVD.
inline double dense_norm(const ordh::Matrix& m)
{
    if (m.size() == 0)
        return 0.0;
    Eigen::JacobiSVD<ordh::Matrix> svd(m);
    return svd.singularValues()(0);
}

/// sum_k c_k exp(2 pi i k.x), evaluated term by term in long double.
inline cplx direct_eval(const ordh::TrigPoly& f, std::span<const double> x)
{
    long double re = 0.0L, im = 0.0L;
    for (const auto& [k, c] : f.terms()) {
        long double phase = 0.0L;
        for (std::size_t i = 0; i < k.dim(); ++i)
            phase += static_cast<long double>(k[i]) * static_cast<long double>(x[i]);
        phase -= std::floor(phase);
        const long double angle = 2.0L * std::numbers::pi_v<long double> * phase;
        re += c.real() * std::cos(angle) - c.imag() * std::sin(angle);
        im += c.real() * std::sin(angle) + c.imag() * std::cos(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

/// Sign of the first nonzero coordinate.
inline int lex_sign(const ordh::CharacterIndex& k)
{
    for (auto v : k.coords())
        if (v != 0)
            return v > 0 ? 1 : -1;
    return 0;
}

/// alpha.k in long double.
inline long double dot(std::span<const double> alpha, const ordh::CharacterIndex& k)
{
    long double s = 0.0L;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        s += static_cast<long double>(alpha[i]) * static_cast<long double>(k[i]);
    return s;
}

/// Convergents p/q of the continued fraction of sqrt 2 = [1; 2, 2, 2, ...].
inline std::vector<std::pair<std::int64_t, std::int64_t>> sqrt2_convergents(std::size_t count)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t p0 = 1, q0 = 0, p1 = 1, q1 = 1;
    out.emplace_back(p1, q1);
    while (out.size() < count) {
        const std::int64_t p2 = 2 * p1 + p0, q2 = 2 * q1 + q0;
        out.emplace_back(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return out;
}

/// Dense H_phi truncation straight from the definition entry(i, j) = phi^(rows[i] - cols[j]).
inline ordh::Matrix hankel_by_definition(const ordh::TrigPoly& phi, std::span<const ordh::CharacterIndex> rows,
                                         std::span<const ordh::CharacterIndex> cols)
{
    ordh::Matrix m = ordh::Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<std::int64_t> d(rows[i].dim());
            for (std::size_t t = 0; t < d.size(); ++t)
                d[t] = rows[i][t] - cols[j][t];
            const auto it = phi.terms().find(ordh::CharacterIndex(d));
            if (it != phi.terms().end())
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = it->second;
        }
    return m;
}

/// Every index of the cube [-r, r]^n, in no particular order.
inline std::vector<ordh::CharacterIndex> cube_points(std::size_t n, std::int64_t r)
{
    std::vector<ordh::CharacterIndex> out{ordh::CharacterIndex(n)};
    for (std::size_t axis = 0; axis < n; ++axis) {
        std::vector<ordh::CharacterIndex> next;
        for (const auto& k : out)
            for (std::int64_t v = -r; v <= r; ++v) {
                ordh::CharacterIndex m = k;
                m[axis] = v;
                next.push_back(m);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace oracle
