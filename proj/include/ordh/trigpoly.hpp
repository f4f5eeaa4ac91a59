#pragma once
//
// Sparse trigonometric polynomials on T^n: finite maps from character index to
// Fourier coefficient. These stand in for the L^2 / L^inf / H^2 elements of the
// theory; every identity handled by the library is exact on the coefficient level.
//

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ordh/ordered_group.hpp"

namespace ordh {

using cplx = std::complex<double>;

/// Uniform grid x_j = j / points on every circle of T^n.
struct GridSpec {
    std::size_t n = 1;
    std::size_t points = 512;

    /// 512 points for n = 1, 128 for n = 2, 32 for n = 3, 16 beyond.
    static GridSpec default_for(std::size_t n);

    std::size_t total() const;
};

class TrigPoly {
public:
    using Terms = std::map<CharacterIndex, cplx>;

    TrigPoly() = default;
    /// Zero polynomial. Coefficients with modulus <= drop_tol are never stored
    /// (with the default 0 only exact zeros are dropped).
    explicit TrigPoly(std::size_t n, double drop_tol = 0.0);

    static TrigPoly character(const CharacterIndex& k, cplx c = 1.0);
    static TrigPoly constant(std::size_t n, cplx c);

    std::size_t dim() const { return n_; }
    double drop_tolerance() const { return drop_tol_; }

    /// Fourier coefficient at k (zero when absent).
    cplx coeff(const CharacterIndex& k) const;
    cplx constant_term() const { return coeff(CharacterIndex::zero(n_)); }

    void set(const CharacterIndex& k, cplx c);
    void accumulate(const CharacterIndex& k, cplx c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::vector<CharacterIndex> support() const;
    /// max |k_i| over the support; 0 for the zero polynomial.
    std::int64_t max_degree() const;

    TrigPoly operator-() const;
    TrigPoly& operator+=(const TrigPoly& other);
    TrigPoly& operator-=(const TrigPoly& other);
    TrigPoly& operator*=(cplx c);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, cplx c) { return a *= c; }
    friend TrigPoly operator*(cplx c, TrigPoly a) { return a *= c; }

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    bool keep(cplx c) const { return std::abs(c) > drop_tol_; }

    std::size_t n_ = 1;
    double drop_tol_ = 0.0;
    Terms terms_;
};

TrigPoly add(const TrigPoly& f, const TrigPoly& g);
TrigPoly scale(cplx c, const TrigPoly& f);

/// Product of functions = convolution of coefficient maps.
TrigPoly multiply(const TrigPoly& f, const TrigPoly& g);

/// Pointwise complex conjugate: coefficient at k becomes conj of the coefficient at -k.
TrigPoly conj(const TrigPoly& f);

cplx evaluate(const TrigPoly& f, std::span<const double> x);

/// Values at all grid points, row-major by coordinate (last coordinate fastest).
std::vector<cplx> evaluate_grid(const TrigPoly& f, const GridSpec& grid);

/// Maximum modulus over the grid; a lower bound on the sup norm.
double sup_norm_lower(const TrigPoly& f, const GridSpec& grid);
/// (mean over the grid of |f|^p)^(1/p).
double lp_norm_estimate(const TrigPoly& f, double p, const GridSpec& grid);
/// Exact L^2 norm from the coefficients (normalized Haar measure).
double l2_norm(const TrigPoly& f);
/// <f, g> = sum_k f^(k) conj(g^(k)), linear in f.
cplx inner(const TrigPoly& f, const TrigPoly& g);

/// True when f^(-k) == conj f^(k) within tol, i.e. f is real valued.
bool is_real_valued(const TrigPoly& f, double tol = 0.0);

/// sup_k |f^(k) - g^(k)|.
double max_coeff_distance(const TrigPoly& f, const TrigPoly& g);
/// sup_k |f^(k)|.
double max_coeff_modulus(const TrigPoly& f);

/// Grid with at least 2 * max_degree + 1 points per circle and no coarser than the default.
GridSpec grid_for(const TrigPoly& f);

} // namespace ordh
