#include <catch2/catch_amalgamated.hpp>

#include <homfly/hecke.hpp>
#include <homfly/skein.hpp>
#include <homfly/twist.hpp>

#include "golden.hpp"

using homfly::BraidWord;
using homfly::HeckeElement;
using homfly::LPoly;

namespace {

HeckeElement elt(int n, const std::vector<int>& letters) {
    HeckeElement e = HeckeElement::identity(n);
    for (int g : letters) e = homfly::right_multiply_generator(e, g > 0 ? g : -g, g > 0 ? 1 : -1);
    return e;
}

} // namespace

TEST_CASE("basis multiplication rules") {
    const HeckeElement id2 = HeckeElement::identity(2);

    // ascending case: T_id T_1 = T_{s1}
    HeckeElement t1 = homfly::right_multiply_generator(id2, 1, +1);
    REQUIRE(t1.coords().size() == 1);
    REQUIRE(t1.coords().count({1, 0}) == 1);
    REQUIRE(t1.coords().at({1, 0}) == LPoly::one());

    // descending case: T_{s1} T_1 = z T_{s1} + T_id
    HeckeElement t1sq = homfly::right_multiply_generator(t1, 1, +1);
    REQUIRE(t1sq.coords().size() == 2);
    REQUIRE(t1sq.coords().at({0, 1}) == LPoly::one());
    REQUIRE(t1sq.coords().at({1, 0}) == LPoly::monomial(0, 1, 1));

    // inverse: T_1 T_1^{-1} = T_id
    REQUIRE(homfly::right_multiply_generator(t1, 1, -1) == id2);
    REQUIRE(elt(2, {-1, 1}) == id2);

    REQUIRE_THROWS_AS(homfly::right_multiply_generator(id2, 2, +1), std::invalid_argument);
    REQUIRE_THROWS_AS(homfly::right_multiply_generator(id2, 0, +1), std::invalid_argument);
    REQUIRE_THROWS_AS(homfly::right_multiply_generator(id2, 1, 0), std::invalid_argument);
}

TEST_CASE("defining relations hold") {
    // braid relation
    REQUIRE(elt(3, {1, 2, 1}) == elt(3, {2, 1, 2}));
    REQUIRE(elt(4, {2, 3, 2}) == elt(4, {3, 2, 3}));
    // distant generators commute
    REQUIRE(elt(4, {1, 3}) == elt(4, {3, 1}));
    REQUIRE(elt(5, {1, 4, -3}) == elt(5, {4, -3, 1}));
    // quadratic relation in element form: T_1^2 - z T_1 - 1 = 0
    HeckeElement lhs = elt(2, {1, 1});
    lhs.add({1, 0}, -LPoly::monomial(0, 1, 1));
    lhs.add({0, 1}, -LPoly::one());
    REQUIRE(lhs.is_zero());
}

TEST_CASE("multiply agrees with generator application") {
    REQUIRE(homfly::multiply(elt(3, {1, 2}), elt(3, {2, 1})) == elt(3, {1, 2, 2, 1}));
    REQUIRE(homfly::multiply(elt(2, {1}), elt(2, {-1})) == HeckeElement::identity(2));
    REQUIRE(homfly::multiply(elt(4, {1, -3}), elt(4, {2, 2})) == elt(4, {1, -3, 2, 2}));

    // associativity with coefficient-bearing factors
    const HeckeElement a = elt(3, {1, -2});
    const HeckeElement b = elt(3, {2, 2});
    const HeckeElement c = elt(3, {-1, -1});
    REQUIRE(homfly::multiply(homfly::multiply(a, b), c) ==
            homfly::multiply(a, homfly::multiply(b, c)));

    REQUIRE_THROWS_AS(homfly::multiply(elt(2, {}), elt(3, {})), std::invalid_argument);
}

TEST_CASE("markov trace") {
    for (int n = 1; n <= 5; ++n)
        REQUIRE(homfly::markov_trace(HeckeElement::identity(n)) == homfly::unlink_value(n));

    // conjugation invariance, the property that makes it a trace
    const HeckeElement x = elt(4, {1, 2, -3});
    const HeckeElement y = elt(4, {3, 1, 2, 2});
    REQUIRE(homfly::markov_trace(homfly::multiply(x, y)) ==
            homfly::markov_trace(homfly::multiply(y, x)));

    const HeckeElement u = elt(3, {-1, 2, 2});
    const HeckeElement v = elt(3, {2, -1});
    REQUIRE(homfly::markov_trace(homfly::multiply(u, v)) ==
            homfly::markov_trace(homfly::multiply(v, u)));
}

TEST_CASE("polynomial via the trace") {
    REQUIRE(homfly::compute_P_hecke(BraidWord(2, {1})) == LPoly::one());
    REQUIRE(homfly::compute_P_hecke(BraidWord(3, {})) == homfly::unlink_value(3));
    REQUIRE(homfly::compute_P_hecke(homfly::full_twist(2)) == golden::hopf());
    REQUIRE(homfly::compute_P_hecke(homfly::torus_braid(3, 5)) == golden::torus35());
}

TEST_CASE("trace route matches the skein engine") {
    for (const BraidWord& b : homfly::random_corpus(701, 30, 4, 10)) {
        homfly::SkeinEngine engine;
        REQUIRE(homfly::compute_P_hecke(b) == engine.compute_P(b));
    }
}

TEST_CASE("basis limit") {
    REQUIRE_THROWS_AS(homfly::compute_P_hecke(BraidWord(8, {1})), std::invalid_argument);
    REQUIRE_THROWS_AS(homfly::compute_P_hecke(BraidWord(5, {1}), 4), std::invalid_argument);
    REQUIRE(homfly::compute_P_hecke(BraidWord(5, {1, 2, 3, 4}), 5) == LPoly::one());
}
