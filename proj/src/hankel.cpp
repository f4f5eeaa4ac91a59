#include "ordh/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ordh/error.hpp"
#include "ordh/parallel.hpp"
#include "ordh/transforms.hpp"

namespace ordh {

cplx HankelKernel::operator()(const CharacterIndex& k) const
{
    check_dim(n_, k.dim());
    const auto it = values_.find(k);
    return it == values_.end() ? cplx{} : it->second;
}

void HankelKernel::set(const CharacterIndex& k, cplx value)
{
    check_dim(n_, k.dim());
    if (value == cplx{})
        values_.erase(k);
    else
        values_[k] = value;
}

namespace {

void require_side(const OrderSpec& order, std::span<const CharacterIndex> indices, ConeSide side,
                  const char* what)
{
    for (const auto& k : indices) {
        check_dim(order.dim(), k.dim());
        const bool negative = cone_sign(order, k) < 0;
        if (negative != (side == ConeSide::StrictlyNegative))
            throw ConeViolation(std::string(what) + " index " + k.to_string() +
                                (negative ? " is negative" : " is not negative"));
    }
}

// Fills rows in parallel; each entry depends on (row, col) only.
template <typename EntryFn>
Matrix assemble(std::size_t rows, std::size_t cols, EntryFn entry)
{
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    parallel_for(
        rows,
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry(r, c);
        },
        64);
    return m;
}

} // namespace

TrigPoly apply_hankel(const OrderSpec& order, const TrigPoly& symbol, const TrigPoly& f)
{
    check_dim(order.dim(), symbol.dim());
    if (!is_analytic(order, f))
        throw NotAnalytic();
    return p_minus(order, multiply(symbol, f));
}

HankelTruncation hankel_matrix(const OrderSpec& order, const TrigPoly& symbol,
                               std::span<const CharacterIndex> rows, std::span<const CharacterIndex> cols)
{
    check_dim(order.dim(), symbol.dim());
    require_side(order, rows, ConeSide::StrictlyNegative, "row");
    require_side(order, cols, ConeSide::PositiveWithUnit, "column");
    HankelTruncation t;
    t.form = HankelForm::Symbol;
    t.rows.assign(rows.begin(), rows.end());
    t.cols.assign(cols.begin(), cols.end());
    t.entries = assemble(rows.size(), cols.size(),
                         [&](std::size_t r, std::size_t c) { return symbol.coeff(rows[r] - cols[c]); });
    t.provenance = "hankel_matrix";
    return t;
}

HankelTruncation hankel_matrix(const OrderSpec& order, const TrigPoly& symbol, const Box& box)
{
    const auto rows = enumerate_cone(order, box, ConeSide::StrictlyNegative);
    const auto cols = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
    return hankel_matrix(order, symbol, rows, cols);
}

HankelKernel gamma_kernel(const OrderSpec& order, const TrigPoly& symbol)
{
    check_dim(order.dim(), symbol.dim());
    const CharacterIndex chi1 = minimal_positive(order);
    HankelKernel kernel(order.dim());
    // a(chi) = phi^(xi) with xi = -chi - chi_1 running over X-
    for (const auto& [xi, c] : symbol.terms())
        if (cone_sign(order, xi) < 0)
            kernel.set(-xi - chi1, c);
    return kernel;
}

HankelTruncation gamma_matrix(const OrderSpec& order, const HankelKernel& kernel,
                              std::span<const CharacterIndex> indices)
{
    check_dim(order.dim(), kernel.dim());
    require_side(order, indices, ConeSide::PositiveWithUnit, "gamma");
    HankelTruncation t;
    t.form = HankelForm::Gamma;
    t.rows.assign(indices.begin(), indices.end());
    t.cols = t.rows;
    t.entries = assemble(indices.size(), indices.size(),
                         [&](std::size_t r, std::size_t c) { return kernel(indices[r] + indices[c]); });
    t.provenance = "gamma_matrix";
    return t;
}

HankelTruncation gamma_matrix(const OrderSpec& order, const HankelKernel& kernel, const Box& box)
{
    const auto indices = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
    return gamma_matrix(order, kernel, indices);
}

HankelKernel nehari_kernel(const OrderSpec& order, const TrigPoly& symbol)
{
    check_dim(order.dim(), symbol.dim());
    HankelKernel kernel(order.dim());
    for (const auto& [k, c] : symbol.terms())
        if (cone_sign(order, k) <= 0)
            kernel.set(-k, c);
    return kernel;
}

// --------------------------------------------------------------------------

namespace {

Vector start_vector(Eigen::Index size)
{
    // all-ones with a small quasi-random (golden ratio) perturbation, so that no
    // structured matrix can have its top singular space orthogonal to the start
    Vector v(size);
    const double golden = std::numbers::phi - 1.0;
    for (Eigen::Index i = 0; i < size; ++i) {
        const double t = static_cast<double>(i + 1) * golden;
        v(i) = cplx(1.0 + 0.5 * (t - std::floor(t)), 0.0);
    }
    return v / v.norm();
}

} // namespace

NormEstimate operator_norm(const Matrix& m, const PowerIterationOptions& options)
{
    if (!(options.tol > 0.0))
        throw InvalidArgument("operator_norm needs tol > 0");
    if (options.max_iters < 1)
        throw InvalidArgument("operator_norm needs max_iters >= 1");

    NormEstimate out;
    out.right = Vector::Zero(m.cols());
    out.left = Vector::Zero(m.rows());
    if (m.size() == 0)
        return out;
    if (!m.allFinite())
        throw NumericalError("operator_norm: matrix has non-finite entries");
    if (m.cwiseAbs().maxCoeff() == 0.0) {
        out.right = start_vector(m.cols());
        return out;
    }

    Vector v = start_vector(m.cols());
    Vector w = m * v;
    if (w.squaredNorm() == 0.0) {
        // start happened to be in the kernel: use the heaviest column instead
        Eigen::Index j = 0;
        m.colwise().squaredNorm().maxCoeff(&j);
        v = Vector::Unit(m.cols(), j);
        w = m * v;
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double lambda = w.squaredNorm();
    double prev_change = -1.0;
    for (int it = 1; it <= options.max_iters; ++it) {
        Vector u = m.adjoint() * w;
        v = u / u.norm();
        w = m * v;
        const double next = w.squaredNorm();
        const double change = next - lambda;
        lambda = std::max(lambda, next);

        double remaining = std::abs(change);
        if (change > 0.0 && prev_change > 0.0) {
            const double ratio = change / prev_change;
            remaining = ratio < 1.0 ? change * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
        }
        const double scale = options.tol * lambda;
        const bool at_rounding = std::abs(change) <= 8.0 * eps * lambda;
        out.iterations = it;
        out.gap = remaining / lambda;
        if ((std::abs(change) <= scale && remaining <= scale) || at_rounding) {
            out.value = w.norm();
            out.right = v;
            out.left = w / out.value;
            out.gap = at_rounding ? std::abs(change) / lambda : out.gap;
            return out;
        }
        prev_change = change;
    }
    throw NoConvergence(std::sqrt(lambda), out.gap, options.max_iters);
}

NormEstimate operator_norm(const HankelTruncation& t, const PowerIterationOptions& options)
{
    return operator_norm(t.entries, options);
}

// --------------------------------------------------------------------------

HankelTruncation unitary_transfer(const OrderSpec& order, const HankelTruncation& gamma)
{
    if (gamma.form != HankelForm::Gamma)
        throw InvalidArgument("unitary_transfer expects a Gamma-form truncation");
    minimal_positive(order);
    HankelTruncation h;
    h.form = HankelForm::Symbol;
    h.rows.reserve(gamma.rows.size());
    for (const auto& chi : gamma.rows)
        h.rows.push_back(j_map(order, chi));
    h.cols = gamma.cols;
    h.entries = gamma.entries;
    h.provenance = "unitary_transfer(" + gamma.provenance + ")";
    return h;
}

HankelTruncation unitary_transfer_inverse(const OrderSpec& order, const HankelTruncation& h)
{
    if (h.form != HankelForm::Symbol)
        throw InvalidArgument("unitary_transfer_inverse expects a symbol-form truncation");
    minimal_positive(order);
    HankelTruncation gamma;
    gamma.form = HankelForm::Gamma;
    gamma.rows.reserve(h.rows.size());
    for (const auto& xi : h.rows)
        gamma.rows.push_back(j_map_inverse(order, xi));
    gamma.cols = h.cols;
    gamma.entries = h.entries;
    gamma.provenance = "unitary_transfer_inverse(" + h.provenance + ")";
    return gamma;
}

HankelTruncation adjoint_matrix(const OrderSpec& order, const TrigPoly& symbol,
                                std::span<const CharacterIndex> rows, std::span<const CharacterIndex> cols)
{
    check_dim(order.dim(), symbol.dim());
    require_side(order, rows, ConeSide::PositiveWithUnit, "adjoint row");
    require_side(order, cols, ConeSide::StrictlyNegative, "adjoint column");
    const TrigPoly conj_symbol = conj(symbol);
    HankelTruncation t;
    t.form = HankelForm::Symbol;
    t.rows.assign(rows.begin(), rows.end());
    t.cols.assign(cols.begin(), cols.end());
    t.entries = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const TrigPoly image = p_plus(order, multiply(conj_symbol, TrigPoly::character(cols[c])));
        t.entries.col(static_cast<Eigen::Index>(c)) = coefficient_vector(image, rows);
    }
    t.provenance = "adjoint_matrix";
    return t;
}

ShiftCompression shift_compress(const OrderSpec& order, const CharacterIndex& shift, const TrigPoly& symbol,
                                const Box& box)
{
    check_dim(order.dim(), shift.dim());
    if (cone_sign(order, shift) < 0)
        throw ConeViolation("shift must lie in the positive cone, got " + shift.to_string());

    ShiftCompression out;
    out.shift = shift;
    out.rows = enumerate_cone(order, box, ConeSide::StrictlyNegative);
    out.cols = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
    const auto rows = static_cast<Eigen::Index>(out.rows.size());
    const auto cols = static_cast<Eigen::Index>(out.cols.size());

    // H_phi S_chi, column by column from the action on chi + eta
    out.lhs = Matrix::Zero(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        const TrigPoly shifted = TrigPoly::character(out.cols[static_cast<std::size_t>(c)] + shift);
        out.lhs.col(c) = coefficient_vector(apply_hankel(order, symbol, shifted), out.rows);
    }

    // P- S_chi restricted to H^2_- of the box, times the truncated H_phi
    const HankelTruncation h = hankel_matrix(order, symbol, out.rows, out.cols);
    Matrix s = Matrix::Zero(rows, rows);
    out.interior_rows.assign(out.rows.size(), false);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const CharacterIndex source = out.rows[static_cast<std::size_t>(r)] - shift;
        for (Eigen::Index z = 0; z < rows; ++z)
            if (out.rows[static_cast<std::size_t>(z)] == source)
                s(r, z) = 1.0;
        out.interior_rows[static_cast<std::size_t>(r)] = box.contains(source);
    }
    out.rhs = s * h.entries;
    return out;
}

double form_norm(const OrderSpec& order, const HankelKernel& kernel, const Box& box,
                 const PowerIterationOptions& options)
{
    return operator_norm(gamma_matrix(order, kernel, box), options).value;
}

Vector coefficient_vector(const TrigPoly& f, std::span<const CharacterIndex> indices)
{
    Vector v(static_cast<Eigen::Index>(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = f.coeff(indices[i]);
    return v;
}

} // namespace ordh
