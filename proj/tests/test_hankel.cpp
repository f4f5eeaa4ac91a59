#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "ordh/corpus.hpp"
#include "ordh/error.hpp"
#include "ordh/hankel.hpp"
#include "ordh/transforms.hpp"

using namespace ordh;

namespace {

const cplx I{0.0, 1.0};

TrigPoly chi(std::int64_t k, cplx c = 1.0) { return TrigPoly::character(CharacterIndex{k}, c); }

Matrix random_matrix(CorpusRng& rng, Eigen::Index r, Eigen::Index c)
{
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return m;
}

} // namespace

TEST_CASE("small Hankel matrices in one variable")
{
    const auto lex = OrderSpec::lexicographic(1);
    const std::vector<CharacterIndex> rows{{-1}, {-2}}, cols{{0}, {1}};
    Matrix a(2, 2), b(2, 2);
    a << 1.0, 0.0, 0.0, 0.0;
    b << 0.0, 1.0, 1.0, 0.0;
    CHECK(hankel_matrix(lex, chi(-1), rows, cols).entries == a);
    CHECK(hankel_matrix(lex, chi(-2), rows, cols).entries == b);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(operator_norm(hankel_matrix(lex, chi(-1) + chi(-2), rows, cols)).value ==
          doctest::Approx(golden).epsilon(1e-10));
    CHECK_THROWS_AS(hankel_matrix(lex, chi(-1), cols, rows), ConeViolation);
}

TEST_CASE("rank-one symbols")
{
    const auto lex = OrderSpec::lexicographic(1);
    const Box box = Box::cube(1, 4);
    CHECK(operator_norm(hankel_matrix(lex, chi(-1), box)).value == doctest::Approx(1.0));
    const TrigPoly sine = chi(1, -0.5 * I) + chi(-1, 0.5 * I);
    CHECK(operator_norm(hankel_matrix(lex, sine, box)).value == doctest::Approx(0.5));
    CHECK(operator_norm(hankel_matrix(lex, conj(sine), box)).value == doctest::Approx(0.5));
    CHECK(operator_norm(hankel_matrix(lex, TrigPoly::constant(1, 1.0), box)).value == 0.0);
}

TEST_CASE("hankel_matrix agrees with the entrywise definition")
{
    CorpusRng rng(31);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto order = OrderSpec::lexicographic(n);
        const Box box = Box::cube(n, n == 3 ? 1 : 3);
        for (int trial = 0; trial < 10; ++trial) {
            const TrigPoly phi = random_poly(rng, n, 12, 3);
            const HankelTruncation h = hankel_matrix(order, phi, box);
            CHECK(h.entries == oracle::hankel_by_definition(phi, h.rows, h.cols));
            CHECK(h.rows == enumerate_cone(order, box, ConeSide::StrictlyNegative));
            CHECK(h.cols == enumerate_cone(order, box, ConeSide::PositiveWithUnit));
        }
    }
}

TEST_CASE("power iteration matches a dense SVD")
{
    CorpusRng rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const auto r = rng.integer(1, 25), c = rng.integer(1, 25);
        const Matrix m = random_matrix(rng, r, c);
        CHECK(operator_norm(m).value == doctest::Approx(oracle::dense_norm(m)).epsilon(1e-9));
    }
    Matrix flip(1, 2);
    flip << 1.0, -1.0;
    CHECK(operator_norm(flip).value == doctest::Approx(std::sqrt(2.0)));
    CHECK(operator_norm(Matrix::Zero(3, 4)).value == 0.0);
    CHECK(operator_norm(Matrix(0, 0)).value == 0.0);
}

TEST_CASE("power iteration returns singular vectors")
{
    CorpusRng rng(41);
    const Matrix m = random_matrix(rng, 8, 6);
    const NormEstimate e = operator_norm(m);
    CHECK(e.right.norm() == doctest::Approx(1.0));
    CHECK((m * e.right).norm() == doctest::Approx(e.value).epsilon(1e-10));
    CHECK((m * e.right - e.value * e.left).norm() <= 1e-4);
}

TEST_CASE("power iteration gives up with NoConvergence")
{
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0 - 1e-7;
    m(0, 1) = 1e-3;
    PowerIterationOptions opts;
    opts.tol = 1e-15;
    opts.max_iters = 3;
    try {
        operator_norm(m, opts);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        CHECK(e.iterations == 3);
        CHECK(e.last_value > 0.9);
    }
    opts.tol = 0.0;
    CHECK_THROWS_AS(operator_norm(m, opts), InvalidArgument);
}

TEST_CASE("truncated norm of a one-variable symbol stabilises once the box covers its degree")
{
    CorpusRng rng(43);
    const auto lex = OrderSpec::lexicographic(1);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t d = rng.integer(1, 8);
        const TrigPoly phi = random_poly(rng, 1, 17, d);
        const HankelTruncation h = hankel_matrix(lex, phi, Box::cube(1, d));
        const double oracle_value = oracle::dense_norm(h.entries);
        CHECK(std::abs(operator_norm(h).value - oracle_value) <= 1e-9 * std::max(1.0, oracle_value));
        const double wider = operator_norm(hankel_matrix(lex, phi, Box::cube(1, d + 3))).value;
        CHECK(std::abs(wider - oracle_value) <= 1e-9 * std::max(1.0, oracle_value));
    }
}

TEST_CASE("only the negative part of the symbol matters")
{
    CorpusRng rng(47);
    const auto order = OrderSpec::lexicographic(2);
    const Box box = Box::cube(2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const TrigPoly phi = random_poly(rng, 2, 12, 2);
        CHECK(hankel_matrix(order, phi, box).entries == hankel_matrix(order, p_minus(order, phi), box).entries);
    }
}

TEST_CASE("apply_hankel is the matrix action and rejects non-analytic input")
{
    const auto lex = OrderSpec::lexicographic(1);
    const TrigPoly phi = chi(-2, 3.0) + chi(1);
    CHECK_THROWS_AS(apply_hankel(lex, phi, chi(-1)), NotAnalytic);
    const TrigPoly image = apply_hankel(lex, phi, chi(0) + chi(1, 2.0));
    CHECK(image == chi(-2, 3.0) + chi(-1, 6.0));
}

TEST_CASE("Gamma truncation carries the same entries as H after relabelling")
{
    CorpusRng rng(53);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto order = OrderSpec::lexicographic(n);
        const Box box = Box::cube(n, n == 3 ? 1 : 2);
        for (int trial = 0; trial < 10; ++trial) {
            const TrigPoly phi = random_poly(rng, n, 10, 2);
            const HankelTruncation gamma = gamma_matrix(order, gamma_kernel(order, phi), box);
            const HankelTruncation h = unitary_transfer(order, gamma);
            CHECK(h.entries == gamma.entries);
            CHECK(h.entries == oracle::hankel_by_definition(phi, h.rows, h.cols));
            CHECK(operator_norm(h).value == operator_norm(gamma).value);
            const HankelTruncation back = unitary_transfer_inverse(order, h);
            CHECK(back.rows == gamma.rows);
            CHECK(back.entries == gamma.entries);
        }
    }
}

TEST_CASE("Gamma matrices are symmetric and relabel to H")
{
    const auto lex = OrderSpec::lexicographic(1);
    HankelKernel one(1);
    one.set(CharacterIndex{1}, 1.0);
    const HankelTruncation g = gamma_matrix(lex, one, Box::cube(1, 0, 1));
    Matrix anti(2, 2);
    anti << 0.0, 1.0, 1.0, 0.0;
    CHECK(g.entries == anti);

    CorpusRng rng(67);
    const auto order = OrderSpec::lexicographic(2);
    const HankelTruncation r = gamma_matrix(order, gamma_kernel(order, random_poly(rng, 2, 12, 3)), Box::cube(2, 2));
    CHECK(r.entries == r.entries.transpose());

    const HankelTruncation single = gamma_matrix(lex, gamma_kernel(lex, chi(-1)), Box::cube(1, 0, 0));
    const HankelTruncation h = unitary_transfer(lex, single);
    CHECK(h.rows == std::vector<CharacterIndex>{{-1}});
    CHECK(h.cols == std::vector<CharacterIndex>{{0}});
    CHECK(h.entries(0, 0) == cplx{1.0});
    CHECK_THROWS_AS(unitary_transfer(OrderSpec::default_functional(2), HankelTruncation{HankelForm::Gamma, {}, {}, {}, ""}),
                    NoMinimalPositive);
}

TEST_CASE("Gamma kernel reads coefficients at -chi - chi_1")
{
    const auto lex = OrderSpec::lexicographic(1);
    const HankelKernel a = gamma_kernel(lex, chi(-1, 2.0) + chi(-3, I) + chi(2, 5.0));
    CHECK(a(CharacterIndex{0}) == cplx{2.0});
    CHECK(a(CharacterIndex{2}) == I);
    CHECK(a(CharacterIndex{1}) == cplx{});
    CHECK_THROWS_AS(gamma_kernel(OrderSpec::default_functional(2), TrigPoly(2)), NoMinimalPositive);
}

TEST_CASE("adjoint matrix is the conjugate transpose")
{
    CorpusRng rng(59);
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto order = OrderSpec::lexicographic(n);
        const Box box = Box::cube(n, 2);
        const auto neg = enumerate_cone(order, box, ConeSide::StrictlyNegative);
        const auto pos = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
        for (int trial = 0; trial < 10; ++trial) {
            const TrigPoly phi = random_poly(rng, n, 10, 3);
            const Matrix h = hankel_matrix(order, phi, neg, pos).entries;
            const Matrix adj = adjoint_matrix(order, phi, pos, neg).entries;
            CHECK((adj - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("H_phi S_chi = P- S_chi H_phi on interior rows")
{
    CorpusRng rng(61);
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto order = OrderSpec::lexicographic(n);
        const Box box = Box::cube(n, 3);
        for (int trial = 0; trial < 5; ++trial) {
            const TrigPoly phi = random_poly(rng, n, 8, 2);
            for (const auto& shift : enumerate_cone(order, Box::cube(n, 1), ConeSide::PositiveWithUnit)) {
                const ShiftCompression s = shift_compress(order, shift, phi, box);
                std::size_t interior = 0;
                for (std::size_t r = 0; r < s.rows.size(); ++r) {
                    if (!s.interior_rows[r])
                        continue;
                    ++interior;
                    const auto i = static_cast<Eigen::Index>(r);
                    CHECK((s.lhs.row(i) - s.rhs.row(i)).cwiseAbs().maxCoeff() <= 1e-12);
                }
                CHECK(interior > 0);
            }
        }
    }
    CHECK_THROWS_AS(shift_compress(OrderSpec::lexicographic(1), CharacterIndex{-1}, chi(-1), Box::cube(1, 2)),
                    ConeViolation);
}

TEST_CASE("Nehari form norm of simple symbols")
{
    const auto lex = OrderSpec::lexicographic(1);
    const Box box = Box::cube(1, 4);
    // k(chi) = phi^(-chi): chi_-1 gives an anti-diagonal of ones
    CHECK(form_norm(lex, nehari_kernel(lex, chi(-1)), box) == doctest::Approx(1.0));
    // the constant term feeds k(0)
    CHECK(form_norm(lex, nehari_kernel(lex, TrigPoly::constant(1, 2.0)), box) == doctest::Approx(2.0));
    CHECK(form_norm(lex, nehari_kernel(lex, chi(1)), box) == 0.0);
}

TEST_CASE("coefficient vector")
{
    const std::vector<CharacterIndex> idx{{0}, {2}, {5}};
    const Vector v = coefficient_vector(chi(2, 3.0) + chi(4), idx);
    CHECK(v(0) == cplx{});
    CHECK(v(1) == cplx{3.0});
    CHECK(v(2) == cplx{});
}
