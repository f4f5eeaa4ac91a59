#include "ordh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "ordh/corpus.hpp"
#include "ordh/error.hpp"
#include "ordh/io.hpp"
#include "ordh/parallel.hpp"
#include "ordh/transforms.hpp"

namespace ordh::verify {

const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

namespace {

constexpr cplx I{0.0, 1.0};

class Tally {
public:
    Tally(std::string name, std::size_t n, std::string metric, double threshold)
    {
        result_.name = std::move(name);
        result_.n = n;
        result_.metric = std::move(metric);
        result_.threshold = threshold;
    }

    void record(double value, const std::string& what)
    {
        ++result_.cases;
        if (!(value <= result_.threshold) || !std::isfinite(value))
            fail(what + " (" + format(value) + ")");
        if (std::isfinite(value))
            result_.worst = std::max(result_.worst, value);
        else
            result_.worst = value;
    }

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            fail(what);
    }

    void fail(const std::string& what)
    {
        result_.status = Status::Fail;
        if (result_.detail.empty())
            result_.detail = what;
    }

    CheckResult finish() { return result_; }

    static std::string format(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", v);
        return buf;
    }

private:
    CheckResult result_;
};

double rel_error(const TrigPoly& got, const TrigPoly& want)
{
    return max_coeff_distance(got, want) / std::max(1.0, max_coeff_modulus(want));
}

double matrix_error(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return std::numeric_limits<double>::infinity();
    if (a.size() == 0)
        return 0.0;
    return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

std::string label(std::size_t i)
{
    return "corpus[" + std::to_string(i) + "]";
}

template <typename Body>
CheckResult gated(const std::string& name, std::size_t n, Body body)
{
    try {
        return body();
    } catch (const NoMinimalPositive&) {
        CheckResult r;
        r.name = name;
        r.n = n;
        r.status = Status::Skipped;
        r.detail = "NoMinimalPositive";
        return r;
    }
}

// Pairs of corpus members (i, i+1) drive the two-argument checks.
template <typename Body>
void for_pairs(std::span<const TrigPoly> corpus, Body body)
{
    for (std::size_t i = 0; i < corpus.size(); ++i)
        body(i, corpus[i], corpus[(i + 1) % corpus.size()]);
}

} // namespace

// --------------------------------------------------------------------------

CheckResult check_hilbert_multiplier(const OrderSpec& order, std::span<const TrigPoly> corpus)
{
    Tally t("hilbert-multiplier", order.dim(), "max relative coefficient error", exact_tol);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const TrigPoly h = hilbert(order, corpus[i]);
        TrigPoly expected(order.dim());
        for (const auto& [k, c] : corpus[i].terms())
            expected.set(k, -I * static_cast<double>(cone_sign(order, k)) * c);
        t.record(rel_error(h, expected), label(i));
        t.expect(h.coeff(CharacterIndex::zero(order.dim())) == cplx{}, label(i) + ": nonzero mean of transform");
        // the multiplier squares to -1 off the unit character
        TrigPoly centered = corpus[i];
        centered.set(CharacterIndex::zero(order.dim()), 0.0);
        t.record(rel_error(hilbert(order, h), -centered), label(i) + " (square)");
    }
    return t.finish();
}

CheckResult check_conjugate_from_projections(const OrderSpec& order, std::span<const TrigPoly> corpus)
{
    Tally t("conjugate-from-projections", order.dim(), "max relative coefficient error", exact_tol);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        t.record(rel_error(conjugate_from_projections(order, corpus[i]), hilbert(order, corpus[i])), label(i));
    return t.finish();
}

CheckResult check_projections_from_hilbert(const OrderSpec& order, std::span<const TrigPoly> corpus)
{
    Tally t("projections-from-hilbert", order.dim(), "max relative coefficient error", exact_tol);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto [minus, plus] = projections_from_hilbert(order, corpus[i]);
        t.record(rel_error(minus, p_minus(order, corpus[i])), label(i) + " P-");
        t.record(rel_error(plus, p_plus(order, corpus[i])), label(i) + " P+");
    }
    return t.finish();
}

CheckResult check_projection_algebra(const OrderSpec& order, std::span<const TrigPoly> corpus)
{
    Tally t("projection-algebra", order.dim(), "max relative error", exact_tol);
    for_pairs(corpus, [&](std::size_t i, const TrigPoly& f, const TrigPoly& g) {
        const TrigPoly pp = p_plus(order, f);
        const TrigPoly pm = p_minus(order, f);
        t.record(rel_error(p_plus(order, pp), pp), label(i) + " P+ idempotent");
        t.record(rel_error(p_minus(order, pm), pm), label(i) + " P- idempotent");
        t.record(rel_error(pp + pm, f), label(i) + " P+ + P- = Id");
        t.record(rel_error(p_plus(order, pm), TrigPoly(order.dim())), label(i) + " P+ P- = 0");
        t.record(std::abs(inner(pp, p_minus(order, g))), label(i) + " <P+ f, P- g>");
    });
    return t.finish();
}

CheckResult check_analytic_completion(const OrderSpec& order, std::span<const TrigPoly> corpus)
{
    Tally t("analytic-completion", order.dim(), "max |P-(u + i u~)| coefficient", exact_tol);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const TrigPoly u = 0.5 * (corpus[i] + conj(corpus[i]));
        t.expect(is_real_valued(u, exact_tol), label(i) + ": symmetrized polynomial is not real valued");
        const TrigPoly completed = u + I * hilbert(order, u);
        t.record(max_coeff_modulus(p_minus(order, completed)), label(i));
        t.expect(is_real_valued(hilbert(order, u), exact_tol), label(i) + ": conjugate of real u is not real");
    }
    return t.finish();
}

CheckResult check_l2_contraction(const OrderSpec& order, std::span<const TrigPoly> corpus)
{
    Tally t("l2-contraction", order.dim(), "max |Hf|_2 / |f|_2", 1.0 + exact_tol);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const double base = l2_norm(corpus[i]);
        t.record(base == 0.0 ? 0.0 : l2_norm(hilbert(order, corpus[i])) / base, label(i));
    }
    return t.finish();
}

CheckResult check_conjugation_closure(const OrderSpec& order, std::span<const TrigPoly> corpus, const GridSpec& grid)
{
    Tally t("conjugation-closure", order.dim(), "max relative error", 1e-9);
    for_pairs(corpus, [&](std::size_t i, const TrigPoly& f1, const TrigPoly& g1) {
        const TrigPoly phi = p_minus(order, f1) + p_plus(order, g1);
        const StarPair w = conj_closure_witness(order, {f1, g1});
        t.record(rel_error(p_minus(order, w.f1) + p_plus(order, w.g1), conj(phi)), label(i) + " reconstruction");
        const double sup_g1 = sup_norm_lower(g1, grid);
        t.record(std::abs(sup_norm_lower(w.f1, grid) - sup_g1) / std::max(1.0, sup_g1), label(i) + " sup(f1')");
        const double allowance = sup_norm_lower(f1, grid) + std::abs(f1.constant_term() - g1.constant_term());
        t.record(std::max(0.0, sup_norm_lower(w.g1, grid) - allowance) / std::max(1.0, allowance),
                 label(i) + " sup(g1')");
    });
    return t.finish();
}

CheckResult check_star_conversions(const OrderSpec& order, std::span<const TrigPoly> corpus, const GridSpec& grid)
{
    Tally t("star-conversions", order.dim(), "max relative error / bound excess", exact_tol);
    for_pairs(corpus, [&](std::size_t i, const TrigPoly& f, const TrigPoly& g) {
        const TrigPoly phi = f + hilbert(order, g);
        const StarPair s = to_star(order, f, g);
        t.record(rel_error(p_minus(order, s.f1) + p_plus(order, s.g1), phi), label(i) + " to_star");
        const SumPair back = from_star(order, s.f1, s.g1);
        t.record(rel_error(back.f + hilbert(order, back.g), phi), label(i) + " round trip");

        const double sf = sup_norm_lower(f, grid), sg = sup_norm_lower(g, grid);
        const double sf1 = sup_norm_lower(s.f1, grid), sg1 = sup_norm_lower(s.g1, grid);
        const double scale = std::max(1.0, sf + sg);
        t.record(std::max(0.0, sf1 - (sf + sg)) / scale, label(i) + " sup f1 <= sup f + sup g");
        t.record(std::max(0.0, sg1 - 2.0 * (sf + sg)) / scale, label(i) + " sup g1 <= 2 (sup f + sup g)");

        // from_star applied to an arbitrary pair
        const SumPair d = from_star(order, f, g);
        const TrigPoly psi = p_minus(order, f) + p_plus(order, g);
        t.record(rel_error(d.f + hilbert(order, d.g), psi), label(i) + " from_star");
        const double excess = sup_norm_lower(d.f, grid) + sup_norm_lower(d.g, grid) - 1.5 * (sf + sg);
        t.record(std::max(0.0, excess) / scale, label(i) + " from_star bound 3/2");
    });
    return t.finish();
}

CheckResult check_analytic_part(const OrderSpec& order, std::span<const TrigPoly> corpus)
{
    Tally t("analytic-part", order.dim(), "max relative error", exact_tol);
    for_pairs(corpus, [&](std::size_t i, const TrigPoly& f1, const TrigPoly& g1) {
        const TrigPoly phi = p_minus(order, f1) + p_plus(order, g1);
        const StarPair w = analytic_part_witness(order, {f1, g1});
        t.expect(w.f1.is_zero(), label(i) + ": analytic witness has a P- part");
        t.record(rel_error(p_minus(order, w.f1) + p_plus(order, w.g1), p_plus(order, phi)), label(i));
    });
    return t.finish();
}

CheckResult check_index_bijection(const OrderSpec& order, const Box& box)
{
    return gated("index-bijection", order.dim(), [&] {
        const CharacterIndex chi1 = minimal_positive(order);
        Tally t("index-bijection", order.dim(), "violations", 0.0);
        const auto positives = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
        const auto negatives = enumerate_cone(order, box, ConeSide::StrictlyNegative);

        std::set<CharacterIndex> images;
        double violations = 0.0;
        for (const auto& k : positives) {
            const CharacterIndex xi = j_map(order, k);
            violations += cone_sign(order, xi) == -1 ? 0.0 : 1.0;
            violations += j_map_inverse(order, xi) == k ? 0.0 : 1.0;
            images.insert(xi);
            // chi_1 is least: nothing strictly between 0 and chi_1
            const bool between = compare(order, CharacterIndex::zero(order.dim()), k) == std::strong_ordering::less &&
                                 compare(order, k, chi1) == std::strong_ordering::less;
            violations += between ? 1.0 : 0.0;
        }
        violations += images.size() == positives.size() ? 0.0 : 1.0;
        for (const auto& xi : negatives)
            if (box.contains(-xi - chi1))
                violations += images.count(xi) ? 0.0 : 1.0;
        t.record(violations, "bijection over box");
        return t.finish();
    });
}

CheckResult check_unitary_transfer(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                                   const PowerIterationOptions& power)
{
    return gated("unitary-transfer", order.dim(), [&] {
        minimal_positive(order);
        Tally t("unitary-transfer", order.dim(), "max |norm(Gamma) - norm(H)| and entry error", 0.0);
        const auto positives = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const HankelTruncation gamma = gamma_matrix(order, gamma_kernel(order, corpus[i]), positives);
            const HankelTruncation h = unitary_transfer(order, gamma);
            const HankelTruncation direct = hankel_matrix(order, corpus[i], h.rows, h.cols);
            t.record(matrix_error(h.entries, direct.entries), label(i) + " entries");
            const double a = operator_norm(gamma, power).value;
            const double b = operator_norm(h, power).value;
            t.record(std::abs(a - b), label(i) + " norms");
            const HankelTruncation back = unitary_transfer_inverse(order, h);
            t.expect(back.rows == gamma.rows, label(i) + ": inverse transfer does not restore rows");
        }
        return t.finish();
    });
}

CheckResult check_symbol_locality(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box)
{
    Tally t("symbol-locality", order.dim(), "max entry difference", 0.0);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Matrix a = hankel_matrix(order, corpus[i], box).entries;
        const Matrix b = hankel_matrix(order, p_minus(order, corpus[i]), box).entries;
        t.record(matrix_error(a, b), label(i));
        const Matrix z = hankel_matrix(order, p_plus(order, corpus[i]), box).entries;
        t.record(z.size() ? z.cwiseAbs().maxCoeff() : 0.0, label(i) + " analytic symbol");
    }
    return t.finish();
}

CheckResult check_matrix_action(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box)
{
    Tally t("matrix-action", order.dim(), "max relative error", exact_tol);
    const auto rows = enumerate_cone(order, box, ConeSide::StrictlyNegative);
    const auto cols = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
    for_pairs(corpus, [&](std::size_t i, const TrigPoly& phi, const TrigPoly& other) {
        // analytic f supported in the column box
        TrigPoly f(order.dim());
        for (const auto& [k, c] : other.terms())
            if (box.contains(k) && cone_sign(order, k) >= 0)
                f.set(k, c);
        const HankelTruncation h = hankel_matrix(order, phi, rows, cols);
        const Vector image = coefficient_vector(apply_hankel(order, phi, f), rows);
        const Vector product = h.entries * coefficient_vector(f, cols);
        const double err = image.size() ? (image - product).cwiseAbs().maxCoeff() : 0.0;
        t.record(err / std::max(1.0, image.size() ? image.cwiseAbs().maxCoeff() : 0.0), label(i));
    });
    return t.finish();
}

CheckResult check_adjoint(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box)
{
    Tally t("adjoint-identity", order.dim(), "max entry error", exact_tol);
    const auto negatives = enumerate_cone(order, box, ConeSide::StrictlyNegative);
    const auto positives = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Matrix h = hankel_matrix(order, corpus[i], negatives, positives).entries;
        const Matrix adj = adjoint_matrix(order, corpus[i], positives, negatives).entries;
        t.record(matrix_error(adj, h.adjoint()), label(i));
    }
    return t.finish();
}

CheckResult check_intertwining(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                               std::span<const CharacterIndex> shifts)
{
    Tally t("shift-intertwining", order.dim(), "max interior entry error", exact_tol);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (const auto& shift : shifts) {
            const ShiftCompression s = shift_compress(order, shift, corpus[i], box);
            double err = 0.0;
            std::size_t interior = 0;
            for (std::size_t r = 0; r < s.rows.size(); ++r) {
                if (!s.interior_rows[r])
                    continue;
                ++interior;
                const auto row = static_cast<Eigen::Index>(r);
                if (s.lhs.cols() > 0)
                    err = std::max(err, (s.lhs.row(row) - s.rhs.row(row)).cwiseAbs().maxCoeff());
            }
            t.expect(interior > 0, label(i) + ": no interior rows for shift " + shift.to_string());
            t.record(err, label(i) + " shift " + shift.to_string());
        }
    }
    return t.finish();
}

CheckResult check_truncation_monotone(const OrderSpec& order, std::span<const TrigPoly> corpus,
                                      const PowerIterationOptions& power)
{
    Tally t("truncation-monotone", order.dim(), "max relative decrease", 10.0 * power.tol);
    const std::int64_t radii = order.dim() == 1 ? 6 : (order.dim() == 2 ? 3 : 2);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        double previous = 0.0;
        for (std::int64_t r = 1; r <= radii; ++r) {
            const double v = operator_norm(hankel_matrix(order, corpus[i], Box::cube(order.dim(), r)), power).value;
            t.record(previous > 0.0 ? std::max(0.0, previous - v) / previous : 0.0,
                     label(i) + " radius " + std::to_string(r));
            previous = v;
        }
    }
    return t.finish();
}

CheckResult check_nehari(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                         const GridSpec& grid, double slack, const PowerIterationOptions& power)
{
    Tally t("nehari-easy-direction", order.dim(), "max form_norm / (grid-sup + slack * |phi|_2)", 1.0);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const double form = form_norm(order, nehari_kernel(order, corpus[i]), box, power);
        const double bound = sup_norm_lower(corpus[i], grid) + slack * l2_norm(corpus[i]);
        t.record(bound > 0.0 ? form / bound : (form > 0.0 ? 2.0 : 0.0), label(i));
    }
    return t.finish();
}

CheckResult check_bmoa_membership(const OrderSpec& order, std::span<const TrigPoly> corpus, const Box& box,
                                  const GridSpec& grid, double slack, const PowerIterationOptions& power)
{
    return gated("bmoa-membership", order.dim(), [&] {
        minimal_positive(order);
        Tally t("bmoa-membership", order.dim(), "max |H_conj(phi)| / (grid-sup (1 + slack))", 1.0);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const TrigPoly analytic = p_plus(order, corpus[i]);
            const BmoaReport r = bmoa_check(order, analytic, box, power);
            t.expect(r.analytic, label(i) + ": P+ phi flagged as non-analytic");
            const double bound = sup_norm_lower(analytic, grid) * (1.0 + slack) + 1e-12;
            t.record(r.conj_hankel_norm / bound, label(i));
            if (!p_minus(order, corpus[i]).is_zero())
                t.expect(!bmoa_check(order, corpus[i], box, power).analytic,
                         label(i) + ": symbol with P- part flagged as analytic");
        }
        return t.finish();
    });
}

CheckResult check_seminorm_axioms(const OrderSpec& order, std::span<const TrigPoly> corpus, std::uint64_t seed,
                                  const PowerIterationOptions& power)
{
    return gated("seminorm-axioms", order.dim(), [&] {
        minimal_positive(order);
        Tally t("seminorm-axioms", order.dim(), "max relative error (homogeneity, triangle excess)", 1e-8);
        CorpusRng rng(seed);
        const std::size_t n = order.dim();
        for_pairs(corpus, [&](std::size_t i, const TrigPoly& phi, const TrigPoly& psi) {
            auto points = phi.support();
            const auto more = psi.support();
            points.insert(points.end(), more.begin(), more.end());
            points.push_back(CharacterIndex::zero(n));
            const Box box = Box::covering(n, points, 1);

            const double h = hankel_seminorm(order, phi, box, power).value;
            const cplx c{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
            const double shifted = hankel_seminorm(order, phi + TrigPoly::constant(n, c), box, power).value;
            t.expect(shifted == h, label(i) + ": |phi + c|_H != |phi|_H");
            t.record(std::abs(shifted - h), label(i) + " translation");

            const double scaled = hankel_seminorm(order, c * phi, box, power).value;
            t.record(std::abs(scaled - std::abs(c) * h) / std::max(1e-300, std::abs(c) * h), label(i) + " homogeneity");

            const double sum = hankel_seminorm(order, phi + psi, box, power).value;
            const double parts = h + hankel_seminorm(order, psi, box, power).value;
            t.record(std::max(0.0, sum - parts) / std::max(1.0, parts), label(i) + " triangle");

            const double constant = hankel_seminorm(order, TrigPoly::constant(n, c), box, power).value;
            t.expect(constant == 0.0, label(i) + ": constant has nonzero seminorm");
            TrigPoly centered = phi;
            centered.set(CharacterIndex::zero(n), 0.0);
            t.expect((h > 0.0) == !centered.is_zero(), label(i) + ": seminorm vanishes on a nonconstant symbol");
        });
        return t.finish();
    });
}

CheckResult check_seminorm_chain(const OrderSpec& order, std::span<const TrigPoly> corpus,
                                 const SandwichConfig& config)
{
    return gated("seminorm-chain", order.dim(), [&] {
        minimal_positive(order);
        Tally t("seminorm-chain", order.dim(), "max lhs / (rhs (1 + slack))", 1.0);
        std::vector<BmoReport> reports(corpus.size());
        parallel_for(
            corpus.size(),
            [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                    reports[i] = sandwich_verify(order, corpus[i], config);
            },
            1);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            for (const auto& v : reports[i].verdicts) {
                const double ratio = v.lhs / (v.rhs * (1.0 + v.slack) + 1e-12);
                t.record(ratio, label(i) + " " + v.name);
            }
        }
        return t.finish();
    });
}

CheckResult check_worked_examples()
{
    Tally t("worked-examples", 1, "max error", 1e-9);
    const OrderSpec lex = OrderSpec::lexicographic(1);
    auto chi = [](std::int64_t k, cplx c = 1.0) { return TrigPoly::character(CharacterIndex{k}, c); };
    const TrigPoly cosine = chi(1, 0.5) + chi(-1, 0.5);
    const TrigPoly sine = chi(1, -0.5 * I) + chi(-1, 0.5 * I);
    const GridSpec grid = GridSpec::default_for(1);

    t.record(max_coeff_distance(hilbert(lex, cosine), sine), "hilbert(cos) = sin");
    t.record(max_coeff_distance(hilbert(lex, TrigPoly::constant(1, 3.0)), TrigPoly(1)), "hilbert(constant) = 0");

    const std::vector<CharacterIndex> rows{{-1}, {-2}}, cols{{0}, {1}};
    Matrix expected(2, 2);
    expected << 1.0, 0.0, 0.0, 0.0;
    t.record(matrix_error(hankel_matrix(lex, chi(-1), rows, cols).entries, expected), "H matrix of chi_-1");
    expected << 0.0, 1.0, 1.0, 0.0;
    t.record(matrix_error(hankel_matrix(lex, chi(-2), rows, cols).entries, expected), "H matrix of chi_-2");

    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    t.record(std::abs(operator_norm(hankel_matrix(lex, chi(-1) + chi(-2), rows, cols)).value - golden),
             "|H| of chi_-1 + chi_-2");

    const Box box = Box::cube(1, 2);
    t.record(std::abs(hankel_seminorm(lex, chi(1), box).value - 1.0), "|chi_1|_H = 1");
    const HankelSeminorm s = hankel_seminorm(lex, sine, box);
    t.record(std::max(std::abs(s.conj_part - 0.5), std::abs(s.direct_part - 0.5)), "|H| of sin parts = 1/2");

    const StarPair star = to_star(lex, TrigPoly(1), cosine);
    t.record(std::max(max_coeff_distance(star.f1, I * cosine), max_coeff_distance(star.g1, -I * cosine)),
             "to_star(0, cos)");
    const SumPair sum = from_star(lex, chi(-1), TrigPoly(1));
    t.record(max_coeff_distance(sum.f + hilbert(lex, sum.g), chi(-1)), "from_star(chi_-1, 0)");

    const TrigPoly two = chi(-1) + chi(1);
    const StarOptimization opt = star_upper_optimize(lex, two, default_free_box(two), grid);
    t.record(std::max(0.0, opt.best.bound - 1.0), "star bound of chi_-1 + chi_1 <= 1");

    const BmoReport report = sandwich_verify(lex, chi(-1));
    t.expect(report.passed(), "sandwich of chi_-1");
    t.record(std::abs(report.seminorm.value - 1.0), "|chi_-1|_H = 1");
    return t.finish();
}

std::vector<CharacterIndex> pick_shifts(const OrderSpec& order, std::size_t count)
{
    const auto pool = enumerate_cone(order, Box::cube(order.dim(), order.dim() == 1 ? 4 : 1), ConeSide::PositiveWithUnit);
    std::vector<CharacterIndex> shifts;
    if (pool.empty() || count == 0)
        return shifts;
    std::vector<CharacterIndex> sorted = pool;
    // nearest to the origin first
    std::stable_sort(sorted.begin(), sorted.end(), [](const CharacterIndex& a, const CharacterIndex& b) {
        std::int64_t na = 0, nb = 0;
        for (auto v : a.coords())
            na += v < 0 ? -v : v;
        for (auto v : b.coords())
            nb += v < 0 ? -v : v;
        return na < nb;
    });
    sorted.resize(std::min(count, sorted.size()));
    std::sort(sorted.begin(), sorted.end(), [&](const CharacterIndex& a, const CharacterIndex& b) {
        return compare(order, a, b) == std::strong_ordering::less;
    });
    return sorted;
}

// --------------------------------------------------------------------------

bool SuiteReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

OrderSpec order_for(const SuiteConfig& config, std::size_t n)
{
    if (config.kind == OrderKind::Lexicographic)
        return OrderSpec::lexicographic(n);
    if (config.alpha) {
        if (config.alpha->size() != n)
            throw InvalidArgument("functional order alpha has length " + std::to_string(config.alpha->size()) +
                                  " but n = " + std::to_string(n));
        return OrderSpec::functional(*config.alpha);
    }
    return OrderSpec::default_functional(n);
}

SuiteReport run_suite(const SuiteConfig& config)
{
    SuiteReport report;
    for (const std::size_t n : config.dims) {
        const OrderSpec order = order_for(config, n);
        const std::int64_t identity_degree = n == 1 ? 8 : (n == 2 ? 4 : 2);
        const std::int64_t operator_degree = n == 1 ? 6 : (n == 2 ? 3 : 1);
        const auto identity = make_corpus(config.seed + n, config.corpus_size, n, 30, identity_degree);
        const auto operators = make_corpus(config.seed + 1000 + n, config.corpus_size, n, 10, operator_degree);

        GridSpec grid = GridSpec::default_for(n);
        if (config.grid_points)
            grid.points = *config.grid_points;
        else
            grid.points = std::max<std::size_t>(grid.points, 2 * static_cast<std::size_t>(identity_degree + 2) + 1);

        const std::int64_t radius = config.box_radius > 0 ? config.box_radius : operator_degree + 1;
        const Box box = Box::cube(n, radius);
        const Box wide = Box::cube(n, radius + 1);

        SandwichConfig sandwich;
        sandwich.grid = grid;
        sandwich.solver = config.solver;
        sandwich.power = config.power;
        sandwich.slack = config.slack;

        auto& c = report.checks;
        c.push_back(check_hilbert_multiplier(order, identity));
        c.push_back(check_conjugate_from_projections(order, identity));
        c.push_back(check_projections_from_hilbert(order, identity));
        c.push_back(check_projection_algebra(order, identity));
        c.push_back(check_analytic_completion(order, identity));
        c.push_back(check_l2_contraction(order, identity));
        c.push_back(check_conjugation_closure(order, identity, grid));
        c.push_back(check_star_conversions(order, identity, grid));
        c.push_back(check_analytic_part(order, identity));
        c.push_back(check_index_bijection(order, wide));
        c.push_back(check_unitary_transfer(order, operators, box, config.power));
        c.push_back(check_symbol_locality(order, operators, box));
        c.push_back(check_matrix_action(order, operators, box));
        c.push_back(check_adjoint(order, operators, box));
        const auto shifts = pick_shifts(order, 5);
        c.push_back(check_intertwining(order, operators, wide, shifts));
        c.push_back(check_truncation_monotone(order, operators, config.power));
        c.push_back(check_nehari(order, operators, box, grid, config.slack, config.power));
        c.push_back(check_bmoa_membership(order, operators, box, grid, config.slack, config.power));
        c.push_back(check_seminorm_axioms(order, operators, config.seed + 2000 + n, config.power));
        c.push_back(check_seminorm_chain(order, operators, sandwich));
        if (n == 1)
            c.push_back(check_worked_examples());
    }
    return report;
}

nlohmann::json suite_to_json(const SuiteConfig& config, const SuiteReport& report)
{
    using nlohmann::json;
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"n", c.n},
                          {"status", c.status == Status::Skipped ? "SKIPPED(" + c.detail + ")"
                                                                 : std::string(status_name(c.status))},
                          {"cases", c.cases},
                          {"metric", c.metric},
                          {"worst", c.worst},
                          {"threshold", c.threshold},
                          {"detail", c.detail}});
    json cfg = {{"order", config.kind == OrderKind::Lexicographic ? "lex" : "functional"},
                {"dims", config.dims},
                {"corpus_size", config.corpus_size},
                {"seed", config.seed},
                {"box_radius", config.box_radius},
                {"solver_iterations", config.solver.iterations},
                {"power_tol", config.power.tol},
                {"slack", config.slack}};
    if (config.alpha)
        cfg["alpha"] = *config.alpha;
    if (config.grid_points)
        cfg["grid_points"] = *config.grid_points;
    return {{"config", cfg}, {"checks", checks}, {"passed", report.passed()}};
}

std::string fnv1a_hex(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace ordh::verify
