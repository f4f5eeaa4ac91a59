#include "ordh/ordered_group.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "ordh/error.hpp"

namespace ordh {

void check_dim(std::size_t expected, std::size_t got)
{
    if (expected != got)
        throw DimensionMismatch(expected, got);
}

bool CharacterIndex::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

CharacterIndex CharacterIndex::operator-() const
{
    CharacterIndex r(*this);
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

CharacterIndex& CharacterIndex::operator+=(const CharacterIndex& other)
{
    check_dim(dim(), other.dim());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

CharacterIndex& CharacterIndex::operator-=(const CharacterIndex& other)
{
    check_dim(dim(), other.dim());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

std::string CharacterIndex::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CharacterIndex& k)
{
    os << '(';
    for (std::size_t i = 0; i < k.dim(); ++i)
        os << (i ? "," : "") << k[i];
    return os << ')';
}

// --------------------------------------------------------------------------

OrderSpec OrderSpec::lexicographic(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("order dimension must be at least 1");
    return OrderSpec(OrderKind::Lexicographic, n);
}

OrderSpec OrderSpec::functional(std::vector<double> alpha)
{
    // On Z (n = 1) a functional order is the standard order or its reverse, both of
    // which have a least positive element; the counterexample needs n >= 2.
    if (alpha.size() < 2)
        throw InvalidArgument("functional order needs a coefficient vector of length >= 2");
    OrderSpec order(OrderKind::Functional, alpha.size());
    bool any_nonzero = false;
    for (double a : alpha) {
        if (!std::isfinite(a) || std::abs(a) > 1e6)
            throw InvalidArgument("functional order coefficients must be finite with |alpha_i| <= 1e6");
        const auto scaled = static_cast<std::int64_t>(std::llround(a * functional_denominator));
        any_nonzero = any_nonzero || scaled != 0;
        order.scaled_alpha_.push_back(scaled);
    }
    if (!any_nonzero)
        throw InvalidArgument("functional order coefficient vector is zero");
    order.alpha_ = std::move(alpha);
    return order;
}

OrderSpec OrderSpec::default_functional(std::size_t n)
{
    static constexpr int radicands[] = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    if (n > std::size(radicands))
        throw InvalidArgument("default functional order supports n <= 12");
    std::vector<double> alpha;
    for (std::size_t i = 0; i < n; ++i)
        alpha.push_back(std::sqrt(static_cast<double>(radicands[i])));
    return functional(std::move(alpha));
}

// --------------------------------------------------------------------------

Box Box::cube(std::size_t n, std::int64_t radius)
{
    return cube(n, -radius, radius);
}

Box Box::cube(std::size_t n, std::int64_t lo, std::int64_t hi)
{
    return Box{std::vector<std::int64_t>(n, lo), std::vector<std::int64_t>(n, hi)};
}

Box Box::covering(std::size_t n, std::span<const CharacterIndex> points, std::int64_t inflate)
{
    if (points.empty())
        return cube(n, inflate);
    Box box{std::vector<std::int64_t>(points.front().coords().begin(), points.front().coords().end()),
            std::vector<std::int64_t>(points.front().coords().begin(), points.front().coords().end())};
    for (const auto& k : points) {
        check_dim(n, k.dim());
        for (std::size_t i = 0; i < n; ++i) {
            box.lo[i] = std::min(box.lo[i], k[i]);
            box.hi[i] = std::max(box.hi[i], k[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        box.lo[i] -= inflate;
        box.hi[i] += inflate;
    }
    return box;
}

bool Box::contains(const CharacterIndex& k) const
{
    check_dim(dim(), k.dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (k[i] < lo[i] || k[i] > hi[i])
            return false;
    return true;
}

std::size_t Box::point_count() const
{
    std::size_t count = 1;
    for (std::size_t i = 0; i < dim(); ++i)
        count *= lo[i] <= hi[i] ? static_cast<std::size_t>(hi[i] - lo[i] + 1) : 0;
    return count;
}

void Box::validate(std::size_t n) const
{
    if (lo.size() != hi.size())
        throw InvalidArgument("box bounds have different lengths");
    check_dim(n, lo.size());
    for (std::size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i])
            throw InvalidArgument("box has lo > hi in coordinate " + std::to_string(i));
}

// --------------------------------------------------------------------------

namespace {

int lex_sign(const CharacterIndex& k)
{
    for (std::size_t i = 0; i < k.dim(); ++i) {
        if (k[i] > 0)
            return 1;
        if (k[i] < 0)
            return -1;
    }
    return 0;
}

// Odometer step, last coordinate fastest; visits the box in lexicographic order.
bool advance_in_box(CharacterIndex& k, const Box& box)
{
    for (std::size_t i = k.dim(); i-- > 0;) {
        if (k[i] < box.hi[i]) {
            ++k[i];
            return true;
        }
        k[i] = box.lo[i];
    }
    return false;
}

} // namespace

int cone_sign(const OrderSpec& order, const CharacterIndex& k)
{
    check_dim(order.dim(), k.dim());
    if (order.kind() == OrderKind::Functional) {
        __int128 value = 0;
        for (std::size_t i = 0; i < k.dim(); ++i)
            value += static_cast<__int128>(order.scaled_alpha_[i]) * k[i];
        if (value > 0)
            return 1;
        if (value < 0)
            return -1;
    }
    return lex_sign(k);
}

CharacterIndex minimal_positive(const OrderSpec& order)
{
    if (!order.has_minimal_positive())
        throw NoMinimalPositive();
    CharacterIndex chi1(order.dim());
    chi1[order.dim() - 1] = 1;
    return chi1;
}

std::strong_ordering compare(const OrderSpec& order, const CharacterIndex& j, const CharacterIndex& k)
{
    const int s = cone_sign(order, k - j);
    if (s > 0)
        return std::strong_ordering::less;
    if (s < 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::vector<CharacterIndex> enumerate_cone(const OrderSpec& order, const Box& box, ConeSide side)
{
    box.validate(order.dim());
    std::vector<CharacterIndex> out;
    if (box.point_count() == 0)
        return out;

    CharacterIndex k(box.lo);
    do {
        const int s = cone_sign(order, k);
        if ((side == ConeSide::PositiveWithUnit) == (s >= 0))
            out.push_back(k);
    } while (advance_in_box(k, box));

    // the odometer already visits the box in lexicographic order
    if (order.kind() != OrderKind::Lexicographic)
        std::sort(out.begin(), out.end(), [&](const CharacterIndex& a, const CharacterIndex& b) {
            return compare(order, a, b) == std::strong_ordering::less;
        });
    return out;
}

CharacterIndex j_map(const OrderSpec& order, const CharacterIndex& k)
{
    const CharacterIndex chi1 = minimal_positive(order);
    if (cone_sign(order, k) < 0)
        throw ConeViolation("j_map expects an index in the positive cone, got " + k.to_string());
    return -k - chi1;
}

CharacterIndex j_map_inverse(const OrderSpec& order, const CharacterIndex& xi)
{
    const CharacterIndex chi1 = minimal_positive(order);
    if (cone_sign(order, xi) >= 0)
        throw ConeViolation("j_map_inverse expects a strictly negative index, got " + xi.to_string());
    return -xi - chi1;
}

} // namespace ordh
