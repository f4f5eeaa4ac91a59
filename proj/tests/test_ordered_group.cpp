#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "ordh/error.hpp"
#include "ordh/ordered_group.hpp"

using namespace ordh;

namespace {

std::vector<OrderSpec> orders_for(std::size_t n)
{
    std::vector<OrderSpec> out{OrderSpec::lexicographic(n)};
    if (n >= 2)
        out.push_back(OrderSpec::default_functional(n));
    return out;
}

} // namespace

TEST_CASE("lexicographic sign is the sign of the first nonzero coordinate")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto order = OrderSpec::lexicographic(n);
        for (const auto& k : oracle::cube_points(n, 3))
            CHECK(cone_sign(order, k) == oracle::lex_sign(k));
    }
}

TEST_CASE("cone axioms hold on a cube")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& order : orders_for(n)) {
            const auto points = oracle::cube_points(n, n == 3 ? 1 : 2);
            for (const auto& a : points) {
                CHECK(cone_sign(order, -a) == -cone_sign(order, a));
                CHECK((cone_sign(order, a) == 0) == a.is_zero());
                for (const auto& b : points) {
                    if (cone_sign(order, a) > 0 && cone_sign(order, b) > 0)
                        CHECK(cone_sign(order, a + b) > 0);
                    // translation invariance of the induced order
                    const auto m = a - b;
                    CHECK(compare(order, a, b) == compare(order, a + m, b + m));
                }
            }
        }
    }
}

TEST_CASE("least positive element of the lexicographic order")
{
    CHECK(minimal_positive(OrderSpec::lexicographic(1)) == CharacterIndex{1});
    CHECK(minimal_positive(OrderSpec::lexicographic(3)) == CharacterIndex{0, 0, 1});
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto order = OrderSpec::lexicographic(n);
        const auto chi1 = minimal_positive(order);
        for (const auto& k : oracle::cube_points(n, 3)) {
            if (cone_sign(order, k) > 0)
                CHECK(cone_sign(order, k - chi1) >= 0);
        }
    }
}

TEST_CASE("functional order agrees with the real sign of alpha.k")
{
    const auto order = OrderSpec::default_functional(3);
    const std::vector<double> alpha{1.0, std::sqrt(2.0), std::sqrt(3.0)};
    for (const auto& k : oracle::cube_points(3, 6)) {
        const long double d = oracle::dot(alpha, k);
        if (std::fabs(static_cast<double>(d)) > 1e-6)
            CHECK(cone_sign(order, k) == (d > 0 ? 1 : -1));
    }
}

TEST_CASE("functional order ties break lexicographically")
{
    const auto order = OrderSpec::functional({1.0, 1.0});
    CHECK(cone_sign(order, CharacterIndex{1, -1}) == 1);
    CHECK(cone_sign(order, CharacterIndex{-1, 1}) == -1);
    CHECK(cone_sign(order, CharacterIndex{2, -1}) == 1);
}

TEST_CASE("irrational functional order has positive elements tending to zero")
{
    const auto order = OrderSpec::default_functional(2);
    CHECK_THROWS_AS(minimal_positive(order), NoMinimalPositive);
    CHECK_FALSE(order.has_minimal_positive());

    // (-p, q) with q sqrt 2 - p > 0 for the convergents above the diagonal; kept to
    // q < 1000 so that |q sqrt 2 - p| stays far above the 1e-9 coefficient rounding
    std::vector<CharacterIndex> positives;
    for (const auto& [p, q] : oracle::sqrt2_convergents(9)) {
        const CharacterIndex k{-p, q};
        if (oracle::dot(std::vector<double>{1.0, std::sqrt(2.0)}, k) > 0)
            positives.push_back(k);
    }
    REQUIRE(positives.size() >= 4);
    for (std::size_t i = 0; i < positives.size(); ++i) {
        CHECK(cone_sign(order, positives[i]) == 1);
        if (i > 0)
            CHECK(compare(order, positives[i], positives[i - 1]) == std::strong_ordering::less);
    }
}

TEST_CASE("functional order rejects bad coefficient vectors")
{
    CHECK_THROWS_AS(OrderSpec::functional({1.0}), InvalidArgument);
    CHECK_THROWS_AS(OrderSpec::functional({0.0, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(OrderSpec::functional({1.0, 2e6}), InvalidArgument);
    CHECK_THROWS_AS(OrderSpec::functional({1.0, NAN}), InvalidArgument);
    CHECK_THROWS_AS(OrderSpec::lexicographic(0), InvalidArgument);
}

TEST_CASE("enumerate_cone on the 3x3 square")
{
    const auto order = OrderSpec::lexicographic(2);
    const Box box = Box::cube(2, 1);
    const auto pos = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
    const std::vector<CharacterIndex> expected{{0, 0}, {0, 1}, {1, -1}, {1, 0}, {1, 1}};
    CHECK(pos == expected);
    const auto neg = enumerate_cone(order, box, ConeSide::StrictlyNegative);
    CHECK(neg.size() == 4);
    for (const auto& k : neg)
        CHECK(cone_sign(order, k) == -1);
}

TEST_CASE("enumerate_cone partitions the box and is ascending")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& order : orders_for(n)) {
            const Box box = Box::cube(n, -2, 1);
            auto pos = enumerate_cone(order, box, ConeSide::PositiveWithUnit);
            auto neg = enumerate_cone(order, box, ConeSide::StrictlyNegative);
            CHECK(pos.size() + neg.size() == box.point_count());
            for (const auto* side : {&pos, &neg})
                for (std::size_t i = 1; i < side->size(); ++i)
                    CHECK(compare(order, (*side)[i - 1], (*side)[i]) == std::strong_ordering::less);
            std::set<CharacterIndex> all(pos.begin(), pos.end());
            all.insert(neg.begin(), neg.end());
            CHECK(all.size() == box.point_count());
        }
    }
}

TEST_CASE("j_map sends the positive cone onto the negative cone")
{
    const auto order = OrderSpec::lexicographic(2);
    CHECK(j_map(order, CharacterIndex{1, -2}) == CharacterIndex{-1, 1});
    CHECK(j_map(order, CharacterIndex{0, 0}) == CharacterIndex{0, -1});
    CHECK_THROWS_AS(j_map(order, CharacterIndex{0, -1}), ConeViolation);
    CHECK_THROWS_AS(j_map_inverse(order, CharacterIndex{0, 0}), ConeViolation);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto lex = OrderSpec::lexicographic(n);
        for (const auto& k : oracle::cube_points(n, 2)) {
            if (cone_sign(lex, k) < 0) {
                const auto back = j_map_inverse(lex, k);
                CHECK(cone_sign(lex, back) >= 0);
                CHECK(j_map(lex, back) == k);
            } else {
                CHECK(cone_sign(lex, j_map(lex, k)) == -1);
            }
        }
    }
    CHECK_THROWS_AS(j_map(OrderSpec::default_functional(2), CharacterIndex{1, 0}), NoMinimalPositive);
}

TEST_CASE("index arithmetic checks dimensions")
{
    CharacterIndex a{1, 2};
    CHECK_THROWS_AS(a += CharacterIndex{1}, DimensionMismatch);
    CHECK((a + CharacterIndex{-1, 3}) == CharacterIndex{0, 5});
    CHECK((-a) == CharacterIndex{-1, -2});
    CHECK(a.to_string() == "(1,2)");
}

TEST_CASE("box helpers")
{
    const std::vector<CharacterIndex> pts{{2, -1}, {-1, 3}};
    const Box b = Box::covering(2, pts, 1);
    CHECK(b.lo == std::vector<std::int64_t>{-2, -2});
    CHECK(b.hi == std::vector<std::int64_t>{3, 4});
    CHECK(b.contains(CharacterIndex{3, 4}));
    CHECK_FALSE(b.contains(CharacterIndex{4, 0}));
    CHECK(Box::cube(2, 1).point_count() == 9);
    CHECK(Box::covering(1, {}, 2).point_count() == 5);
}
