#pragma once
//
// Hilbert transform and Riesz (Hardy) projections for an ordered dual group.
//

#include <utility>

#include "ordh/ordered_group.hpp"
#include "ordh/trigpoly.hpp"

namespace ordh {

/// Conjugate function: the Fourier multiplier -i * cone_sign(k).
TrigPoly hilbert(const OrderSpec& order, const TrigPoly& f);

/// Orthogonal projection onto H^2: keeps coefficients on X+ (unit included).
TrigPoly p_plus(const OrderSpec& order, const TrigPoly& f);
/// Orthogonal projection onto H^2_-: keeps coefficients on X-.
TrigPoly p_minus(const OrderSpec& order, const TrigPoly& f);

/// -i (P+ psi - P- psi - psi^(0)); agrees with hilbert(psi).
TrigPoly conjugate_from_projections(const OrderSpec& order, const TrigPoly& psi);

struct ProjectionPair {
    TrigPoly minus; ///< P- h
    TrigPoly plus;  ///< P+ h
};

/// (1/2 (h - i h~ - h^(0)), 1/2 (h + i h~ + h^(0))), i.e. (P- h, P+ h) computed
/// through the Hilbert transform.
ProjectionPair projections_from_hilbert(const OrderSpec& order, const TrigPoly& h);

/// P-(f) == 0, i.e. f is a polynomial of analytic type.
bool is_analytic(const OrderSpec& order, const TrigPoly& f);

} // namespace ordh
