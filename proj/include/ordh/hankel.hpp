#pragma once
//
// Hankel operators in their two realizations:
//
//   H_phi : H^2 -> H^2_-,  f -> P-(phi f),  matrix entry (xi, chi) = phi^(xi - chi)
//   Gamma : l2(X+) -> l2(X+),  matrix entry (chi, xi) = a(chi + xi)
//
// and the finite truncations used to estimate their norms. Truncated norms are
// lower bounds for the norms of the full operators.
//

#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ordh/ordered_group.hpp"
#include "ordh/trigpoly.hpp"

namespace ordh {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class HankelForm {
    Symbol, ///< H_phi: rows in X-, columns in X+
    Gamma,  ///< l2(X+) realization: rows and columns in X+
};

/// A finite slice of a Hankel operator with explicit row/column indices.
struct HankelTruncation {
    HankelForm form = HankelForm::Symbol;
    std::vector<CharacterIndex> rows;
    std::vector<CharacterIndex> cols;
    Matrix entries;
    std::string provenance;
};

/// Kernel of a Hankel form or Gamma-operator: a finitely supported function on X+.
class HankelKernel {
public:
    explicit HankelKernel(std::size_t n) : n_(n) {}

    std::size_t dim() const { return n_; }
    cplx operator()(const CharacterIndex& k) const;
    void set(const CharacterIndex& k, cplx value);
    const std::map<CharacterIndex, cplx>& values() const { return values_; }

private:
    std::size_t n_;
    std::map<CharacterIndex, cplx> values_;
};

/// H_phi f = P-(phi f). Throws NotAnalytic unless P- f == 0.
TrigPoly apply_hankel(const OrderSpec& order, const TrigPoly& symbol, const TrigPoly& f);

/// Matrix of H_phi between the given indices: entries(i, j) = phi^(rows[i] - cols[j]).
/// Throws ConeViolation unless rows lie in X- and cols in X+.
HankelTruncation hankel_matrix(const OrderSpec& order, const TrigPoly& symbol,
                               std::span<const CharacterIndex> rows, std::span<const CharacterIndex> cols);
/// Rows: negative indices of the box, columns: nonnegative indices of the box.
HankelTruncation hankel_matrix(const OrderSpec& order, const TrigPoly& symbol, const Box& box);

/// a(chi) = phi^(-chi - chi_1) on X+; only negative coefficients of phi contribute.
HankelKernel gamma_kernel(const OrderSpec& order, const TrigPoly& symbol);

/// Gamma truncation on the nonnegative indices of the box: entries(chi, xi) = a(chi + xi).
HankelTruncation gamma_matrix(const OrderSpec& order, const HankelKernel& kernel, const Box& box);
HankelTruncation gamma_matrix(const OrderSpec& order, const HankelKernel& kernel,
                              std::span<const CharacterIndex> indices);

/// Kernel k(chi) = phi^(-chi) of the Hankel form induced by a bounded symbol.
HankelKernel nehari_kernel(const OrderSpec& order, const TrigPoly& symbol);

struct PowerIterationOptions {
    double tol = 1e-10;
    int max_iters = 200000;
};

struct NormEstimate {
    double value = 0.0;  ///< largest singular value of the truncation
    Vector right;        ///< unit right singular vector
    Vector left;         ///< unit left singular vector (zero when value == 0)
    int iterations = 0;
    double gap = 0.0;    ///< estimated remaining relative error in value^2
};

/// Largest singular value by power iteration on T*T.
///
/// The start vector is deterministic. Iteration stops once the relative change of
/// the Rayleigh quotient is below tol and the geometric extrapolation of the
/// remaining increase (from the ratio of successive changes) is below tol too.
/// Throws NoConvergence after max_iters.
NormEstimate operator_norm(const Matrix& m, const PowerIterationOptions& options = {});
NormEstimate operator_norm(const HankelTruncation& t, const PowerIterationOptions& options = {});

/// Gamma truncation -> H_phi truncation: rows relabelled by j_map, entries untouched.
HankelTruncation unitary_transfer(const OrderSpec& order, const HankelTruncation& gamma);
/// H_phi truncation -> Gamma truncation: rows relabelled by j_map_inverse.
HankelTruncation unitary_transfer_inverse(const OrderSpec& order, const HankelTruncation& h);

/// Matrix of the adjoint H_phi^* = P+ (conj(phi) . ) on H^2_-, assembled column by
/// column from the action on characters: entries(i, j) = <P+(conj(phi) chi_{cols[j]}), chi_{rows[i]}>.
/// Rows must lie in X+, columns in X-.
HankelTruncation adjoint_matrix(const OrderSpec& order, const TrigPoly& symbol,
                                std::span<const CharacterIndex> rows, std::span<const CharacterIndex> cols);

/// Both sides of H_phi S_chi = P- S_chi H_phi over the box (S_chi: multiplication by chi).
///
/// lhs is assembled directly; rhs is the product of the truncated shift with a
/// truncated H_phi over the negative indices of the box. A row xi of rhs is exact
/// (interior) when xi - chi lies in the box; other rows lose mass to truncation.
struct ShiftCompression {
    CharacterIndex shift;
    std::vector<CharacterIndex> rows;
    std::vector<CharacterIndex> cols;
    Matrix lhs;
    Matrix rhs;
    std::vector<bool> interior_rows;
};

ShiftCompression shift_compress(const OrderSpec& order, const CharacterIndex& shift, const TrigPoly& symbol,
                                const Box& box);

/// Norm of the bilinear form A(a, b) = sum k(chi + eta) a(chi) b(eta) over the box's X+ part.
double form_norm(const OrderSpec& order, const HankelKernel& kernel, const Box& box,
                 const PowerIterationOptions& options = {});

/// Coefficients of f on the given indices as a column vector.
Vector coefficient_vector(const TrigPoly& f, std::span<const CharacterIndex> indices);

} // namespace ordh
