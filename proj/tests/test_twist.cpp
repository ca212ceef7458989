#include <catch2/catch_amalgamated.hpp>

#include <homfly/twist.hpp>

#include "golden.hpp"

#include <cstdlib>

using homfly::BraidWord;
using homfly::LPoly;
using homfly::MfwBounds;
using homfly::ZPoly;

TEST_CASE("mfw bounds") {
    REQUIRE(homfly::mfw_bounds(homfly::torus_braid(3, 5)) == MfwBounds{8, 12, 18});
    REQUIRE(homfly::mfw_bounds(BraidWord(1, {})) == MfwBounds{0, 0, 0});
    REQUIRE(homfly::mfw_bounds(BraidWord(4, golden::nine_crossing_words()[0])) ==
            MfwBounds{-4, 2, 14});

    for (const BraidWord& b : homfly::random_corpus(801, 20, 5, 10)) {
        const MfwBounds m = homfly::mfw_bounds(b);
        const int n = b.strands();
        REQUIRE(m.upper - m.lower == 2 * (n - 1));
        REQUIRE(m.twisted_upper - m.upper == n * (n - 1));
    }
}

TEST_CASE("sharpness flags") {
    const LPoly p = golden::torus35();
    REQUIRE(homfly::sharpness(homfly::torus_braid(3, 5), p) == std::pair{true, true});

    // a positive stabilization keeps P but widens the bounds: the upper
    // bound stops being attained
    std::vector<int> stab = homfly::torus_braid(3, 5).letters();
    stab.push_back(3);
    REQUIRE(homfly::sharpness(BraidWord(4, stab), p) == std::pair{true, false});
}

TEST_CASE("positive twist check on the (3,5) torus word") {
    const auto r = homfly::twist_check_positive(homfly::torus_braid(3, 5));
    REQUIRE(r.strands == 3);
    REQUIRE(r.writhe == 10);
    REQUIRE(r.bounds == MfwBounds{8, 12, 18});
    REQUIRE(r.sign == 1);
    REQUIRE(r.left_col == homfly::column(golden::torus35(), 8));
    REQUIRE(r.right_col_twisted == r.left_col);
    REQUIRE(r.identity_holds);
    REQUIRE(r.lower_sharp);
    REQUIRE(r.upper_twisted_sharp);
}

TEST_CASE("positive twist check on a 4-strand negative-writhe word") {
    const auto r = homfly::twist_check_positive(BraidWord(4, golden::nine_crossing_words()[0]));
    REQUIRE(r.strands == 4);
    REQUIRE(r.writhe == -1);
    REQUIRE(r.bounds == MfwBounds{-4, 2, 14});
    REQUIRE(r.sign == -1);

    ZPoly left;
    left.add_term(0, -1);
    left.add_term(2, -1);
    REQUIRE(r.left_col == left);
    REQUIRE(r.right_col_twisted == -left);
    REQUIRE(r.identity_holds);
    REQUIRE(r.lower_sharp);
    REQUIRE(r.upper_twisted_sharp);
}

TEST_CASE("negative twist check") {
    // two-strand trivial word: companion is the negative full twist
    const auto r = homfly::twist_check_negative(BraidWord(2, {}));
    REQUIRE(r.strands == 2);
    REQUIRE(r.writhe == -2);
    REQUIRE(r.bounds == MfwBounds{-3, -1, 1});
    REQUIRE(r.sign == -1);
    REQUIRE(r.left_col == ZPoly::monomial(-1, 1));
    REQUIRE(r.right_col_twisted == ZPoly::monomial(-1, -1));
    REQUIRE(r.identity_holds);

    // the negative check of b Delta^2 is the positive check of b
    for (const BraidWord& b : homfly::random_corpus(802, 10, 4, 8)) {
        const auto neg = homfly::twist_check_negative(homfly::append_full_twist(b, +1));
        const auto pos = homfly::twist_check_positive(b);
        REQUIRE(neg.strands == pos.strands);
        REQUIRE(neg.writhe == pos.writhe);
        REQUIRE(neg.bounds == pos.bounds);
        REQUIRE(neg.sign == pos.sign);
        REQUIRE(neg.left_col == pos.left_col);
        REQUIRE(neg.right_col_twisted == pos.right_col_twisted);
        REQUIRE(neg.identity_holds == pos.identity_holds);
    }
}

TEST_CASE("twist identity on a random corpus") {
    for (const BraidWord& b : homfly::random_corpus(803, 40, 4, 10)) {
        const auto r = homfly::twist_check_positive(b);
        REQUIRE(r.identity_holds);
        // the identity transports sharpness across the twist
        REQUIRE(r.lower_sharp == r.upper_twisted_sharp);
    }
}

TEST_CASE("framed twist check") {
    // trivial words of every small width: lhs is exactly z^{1-n}
    for (int n = 1; n <= 5; ++n) {
        const auto r = homfly::framed_check(BraidWord(n, {}));
        REQUIRE(r.holds);
        REQUIRE(r.lhs == ZPoly::monomial(1 - n, 1));
    }

    const auto r1 = homfly::framed_check(BraidWord(2, {1}));
    REQUIRE(r1.holds);
    REQUIRE(r1.lhs == ZPoly::monomial(0, 1));

    // the framed columns coincide with the writhe-normalized ones
    const auto rt = homfly::framed_check(homfly::torus_braid(3, 5));
    REQUIRE(rt.holds);
    REQUIRE(rt.lhs == homfly::twist_check_positive(homfly::torus_braid(3, 5)).left_col);

    for (const BraidWord& b : homfly::random_corpus(804, 30, 4, 10))
        REQUIRE(homfly::framed_check(b).holds);
}

TEST_CASE("full twist top column") {
    const auto r1 = homfly::murakami_check(1);
    REQUIRE(r1.holds);
    REQUIRE(r1.max_v == 0);
    REQUIRE(r1.top_column == ZPoly::monomial(0, 1));

    const auto r2 = homfly::murakami_check(2);
    REQUIRE(r2.holds);
    REQUIRE(r2.max_v == 1);
    REQUIRE(r2.top_column == ZPoly::monomial(-1, -1));

    for (int n = 1; n <= 5; ++n) {
        const auto skein = homfly::murakami_check(n, homfly::PolyRoute::skein);
        const auto hecke = homfly::murakami_check(n, homfly::PolyRoute::hecke);
        REQUIRE(skein.holds);
        REQUIRE(hecke.holds);
        REQUIRE(skein.max_v == hecke.max_v);
        REQUIRE(skein.top_column == hecke.top_column);
    }
    REQUIRE(homfly::murakami_check(6, homfly::PolyRoute::hecke).holds);

    REQUIRE_THROWS_AS(homfly::murakami_check(0), std::invalid_argument);
}

TEST_CASE("random corpus generation") {
    const auto a = homfly::random_corpus(42, 20, 4, 10);
    const auto b = homfly::random_corpus(42, 20, 4, 10);
    REQUIRE(a == b);
    REQUIRE(a.size() == 20);
    REQUIRE(homfly::random_corpus(43, 20, 4, 10) != a);
    REQUIRE(homfly::random_corpus(42, 0, 4, 10).empty());

    for (const BraidWord& w : a) {
        REQUIRE(w.strands() >= 2);
        REQUIRE(w.strands() <= 4);
        REQUIRE(w.size() <= 10);
        for (int g : w.letters()) {
            REQUIRE(g != 0);
            REQUIRE(std::abs(g) < w.strands());
        }
    }
    for (const BraidWord& w : homfly::random_corpus(44, 10, 2, 6)) REQUIRE(w.strands() == 2);

    REQUIRE_THROWS_AS(homfly::random_corpus(1, 5, 1, 10), std::invalid_argument);
}
