#pragma once
//
// Character group Z^n of the torus T^n with a translation-invariant linear order.
//
// Group notation is additive throughout: the product of characters is the sum of
// their indices, the inverse (= complex conjugate) character is the negated index,
// and the unit character is the zero vector.
//

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ordh {

/// Index k of the character x -> exp(2 pi i k.x) on T^n.
class CharacterIndex {
public:
    CharacterIndex() = default;
    explicit CharacterIndex(std::size_t n) : coords_(n, 0) {}
    explicit CharacterIndex(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    CharacterIndex(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    static CharacterIndex zero(std::size_t n) { return CharacterIndex(n); }

    std::size_t dim() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) { return coords_[i]; }
    std::span<const std::int64_t> coords() const { return coords_; }

    bool is_zero() const;

    CharacterIndex operator-() const;
    CharacterIndex& operator+=(const CharacterIndex& other);
    CharacterIndex& operator-=(const CharacterIndex& other);
    friend CharacterIndex operator+(CharacterIndex a, const CharacterIndex& b) { return a += b; }
    friend CharacterIndex operator-(CharacterIndex a, const CharacterIndex& b) { return a -= b; }

    // Structural ordering (coordinate-wise, most significant first). For the
    // lexicographic order this coincides with the group order, which is what
    // lets sorted containers double as order-sorted ones.
    friend bool operator==(const CharacterIndex&, const CharacterIndex&) = default;
    friend auto operator<=>(const CharacterIndex&, const CharacterIndex&) = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const CharacterIndex& k);

enum class OrderKind { Lexicographic, Functional };

/// A linear order on Z^n, given by the sign rule of its positive cone.
///
/// Lexicographic: compare coordinates most-significant-first; (0,...,0,1) is the
/// least positive element.
///
/// Functional: sign of alpha.k for a coefficient vector alpha with rationally
/// independent entries. The coefficients are stored as integers over the common
/// denominator 10^9 and the sign is evaluated exactly on that approximation; ties
/// (alpha.k == 0 for the approximation) fall back to the lexicographic sign so the
/// rule always defines a linear order. Such an order has no least positive element.
class OrderSpec {
public:
    static constexpr std::int64_t functional_denominator = 1'000'000'000;

    static OrderSpec lexicographic(std::size_t n);
    static OrderSpec functional(std::vector<double> alpha);
    /// Functional order with alpha = (1, sqrt 2, sqrt 3, sqrt 5, ...).
    static OrderSpec default_functional(std::size_t n);

    OrderKind kind() const { return kind_; }
    std::size_t dim() const { return n_; }
    const std::vector<double>& alpha() const { return alpha_; }
    bool has_minimal_positive() const { return kind_ == OrderKind::Lexicographic; }

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

private:
    OrderSpec(OrderKind kind, std::size_t n) : kind_(kind), n_(n) {}

    friend int cone_sign(const OrderSpec&, const CharacterIndex&);

    OrderKind kind_ = OrderKind::Lexicographic;
    std::size_t n_ = 1;
    std::vector<double> alpha_;
    std::vector<std::int64_t> scaled_alpha_;
};

/// Finite coordinate box [lo_0, hi_0] x ... x [lo_{n-1}, hi_{n-1}].
struct Box {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;

    static Box cube(std::size_t n, std::int64_t radius);
    static Box cube(std::size_t n, std::int64_t lo, std::int64_t hi);
    /// Smallest box containing every index in `points`, grown by `inflate` on each side.
    /// An empty point set yields the cube of radius `inflate` around the origin.
    static Box covering(std::size_t n, std::span<const CharacterIndex> points, std::int64_t inflate);

    std::size_t dim() const { return lo.size(); }
    bool contains(const CharacterIndex& k) const;
    std::size_t point_count() const;
    void validate(std::size_t n) const;
};

enum class ConeSide { PositiveWithUnit, StrictlyNegative };

/// sgn of the positive cone: +1 on X+ minus the unit, 0 on the unit, -1 on X-.
int cone_sign(const OrderSpec& order, const CharacterIndex& k);

inline bool is_nonnegative(const OrderSpec& order, const CharacterIndex& k) { return cone_sign(order, k) >= 0; }
inline bool is_negative(const OrderSpec& order, const CharacterIndex& k) { return cone_sign(order, k) < 0; }

/// The least element of X+ \ {0}. Throws NoMinimalPositive for functional orders.
CharacterIndex minimal_positive(const OrderSpec& order);

/// Order comparison: j < k iff k - j lies in X+ \ {0}.
std::strong_ordering compare(const OrderSpec& order, const CharacterIndex& j, const CharacterIndex& k);

/// All indices of the box on the requested side of the cone, ascending in the order.
std::vector<CharacterIndex> enumerate_cone(const OrderSpec& order, const Box& box, ConeSide side);

/// k -> -k - chi_1, a bijection X+ -> X-.
CharacterIndex j_map(const OrderSpec& order, const CharacterIndex& k);
/// xi -> -xi - chi_1, the inverse bijection X- -> X+.
CharacterIndex j_map_inverse(const OrderSpec& order, const CharacterIndex& xi);

void check_dim(std::size_t expected, std::size_t got);

} // namespace ordh
