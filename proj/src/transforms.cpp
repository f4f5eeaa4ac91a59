#include "ordh/transforms.hpp"

namespace ordh {

namespace {

template <typename Pred>
TrigPoly filter(const OrderSpec& order, const TrigPoly& f, Pred keep)
{
    check_dim(order.dim(), f.dim());
    TrigPoly out(f.dim(), f.drop_tolerance());
    for (const auto& [k, c] : f.terms())
        if (keep(cone_sign(order, k)))
            out.set(k, c);
    return out;
}

constexpr cplx I{0.0, 1.0};

} // namespace

TrigPoly hilbert(const OrderSpec& order, const TrigPoly& f)
{
    check_dim(order.dim(), f.dim());
    TrigPoly out(f.dim(), f.drop_tolerance());
    for (const auto& [k, c] : f.terms()) {
        const int s = cone_sign(order, k);
        if (s != 0)
            out.set(k, -I * static_cast<double>(s) * c);
    }
    return out;
}

TrigPoly p_plus(const OrderSpec& order, const TrigPoly& f)
{
    return filter(order, f, [](int s) { return s >= 0; });
}

TrigPoly p_minus(const OrderSpec& order, const TrigPoly& f)
{
    return filter(order, f, [](int s) { return s < 0; });
}

TrigPoly conjugate_from_projections(const OrderSpec& order, const TrigPoly& psi)
{
    TrigPoly inner = p_plus(order, psi) - p_minus(order, psi);
    inner -= TrigPoly::constant(psi.dim(), psi.constant_term());
    return -I * inner;
}

ProjectionPair projections_from_hilbert(const OrderSpec& order, const TrigPoly& h)
{
    const TrigPoly i_conj = I * hilbert(order, h);
    const TrigPoly mean = TrigPoly::constant(h.dim(), h.constant_term());
    return {0.5 * (h - i_conj - mean), 0.5 * (h + i_conj + mean)};
}

bool is_analytic(const OrderSpec& order, const TrigPoly& f)
{
    return p_minus(order, f).is_zero();
}

} // namespace ordh
