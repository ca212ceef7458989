#pragma once

// The theorem layer: MFW v-degree bounds, column sharpness, the two
// full-twist column identities (for P and for H), the full-twist
// highest-term check, and seeded corpus generation for the property suites.

#include "braid.hpp"
#include "hecke.hpp"
#include "laurent.hpp"
#include "skein.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace homfly {

// v-degree bounds for P of the closure of a word with writhe w on n
// strands: [w-n+1, w+n-1]; appending a positive full twist moves the upper
// bound to w+n^2-1.
struct MfwBounds {
    int lower = 0;
    int upper = 0;
    int twisted_upper = 0;
    bool operator==(const MfwBounds&) const = default;
};

inline MfwBounds mfw_bounds(const BraidWord& b) {
    const int n = b.strands();
    const int w = exponent_sum(b);
    return MfwBounds{w - n + 1, w + n - 1, w + n * n - 1};
}

// Whether the extreme-bound columns of p = P(closure of b) are nonzero.
inline std::pair<bool, bool> sharpness(const BraidWord& b, const LPoly& p) {
    const MfwBounds bounds = mfw_bounds(b);
    return {!column(p, bounds.lower).is_zero(), !column(p, bounds.upper).is_zero()};
}

// One full record of the twist identity check: the left column of
// P(closure(b)) at the lower bound must equal (-1)^(n-1) times the right
// column of P(closure(b Delta^2)) at the twisted upper bound.
struct TwistReport {
    int strands = 0;
    int writhe = 0;
    MfwBounds bounds{};
    int sign = 1; // (-1)^(n-1)
    ZPoly left_col;
    ZPoly right_col_twisted;
    bool identity_holds = false;
    bool lower_sharp = false;
    bool upper_twisted_sharp = false;
};

inline TwistReport twist_check_positive(const BraidWord& b, SkeinEngine& engine) {
    // one engine for both runs: the twisted tree revisits untwisted states
    const LPoly p = engine.compute_P(b);
    const LPoly p_twisted = engine.compute_P(append_full_twist(b, +1));

    TwistReport r;
    r.strands = b.strands();
    r.writhe = exponent_sum(b);
    r.bounds = mfw_bounds(b);
    r.sign = (r.strands % 2 == 0) ? -1 : 1;
    r.left_col = column(p, r.bounds.lower);
    r.right_col_twisted = column(p_twisted, r.bounds.twisted_upper);
    r.identity_holds =
        r.left_col == (r.sign == 1 ? r.right_col_twisted : -r.right_col_twisted);
    r.lower_sharp = !r.left_col.is_zero();
    r.upper_twisted_sharp = !r.right_col_twisted.is_zero();
    return r;
}

inline TwistReport twist_check_positive(const BraidWord& b, const EngineOptions& opts = {}) {
    SkeinEngine engine(opts);
    return twist_check_positive(b, engine);
}

// Mirror-dual statement: the right column of P(closure(b)) at v^{w+n-1}
// equals (-1)^(n-1) times the left column of P(closure(b Delta^{-2})) at
// v^{w-n(n-1)-n+1}.  That is exactly the positive check of b Delta^{-2}
// (whose twisted companion cancels back to b), so delegate to it; the
// report's writhe and bounds are those of the companion.
inline TwistReport twist_check_negative(const BraidWord& b, SkeinEngine& engine) {
    return twist_check_positive(append_full_twist(b, -1), engine);
}

inline TwistReport twist_check_negative(const BraidWord& b, const EngineOptions& opts = {}) {
    SkeinEngine engine(opts);
    return twist_check_negative(b, engine);
}

// Framed variant: column of H(closure(b)) at v^{-n+1} against
// (-1)^(n-1) times the column of H(closure(b Delta^2)) at v^{n-1}.
struct FramedCheck {
    ZPoly lhs;
    ZPoly rhs;
    bool holds = false;
};

inline FramedCheck framed_check(const BraidWord& b, SkeinEngine& engine) {
    const int n = b.strands();
    const LPoly h = engine.compute_H(b);
    const LPoly h_twisted = engine.compute_H(append_full_twist(b, +1));
    FramedCheck r;
    r.lhs = column(h, -n + 1);
    const ZPoly right = column(h_twisted, n - 1);
    r.rhs = (n % 2 == 0) ? -right : right;
    r.holds = r.lhs == r.rhs;
    return r;
}

inline FramedCheck framed_check(const BraidWord& b, const EngineOptions& opts = {}) {
    SkeinEngine engine(opts);
    return framed_check(b, engine);
}

// Highest-term law for the full twist: H(closure(Delta_n^2)) has maximal
// v-exponent n-1 and the column there is exactly (-1)^(n-1) z^{1-n}.
struct FullTwistTopCheck {
    int max_v = 0;
    ZPoly top_column;
    bool holds = false;
};

enum class PolyRoute { skein, hecke };

namespace detail {

inline FullTwistTopCheck full_twist_top_check(int n, const LPoly& h) {
    FullTwistTopCheck r;
    const auto support = v_support(h);
    if (!support) return r; // cannot happen for a braid closure; fail closed
    r.max_v = support->second;
    r.top_column = column(h, r.max_v);
    const ZPoly expected = ZPoly::monomial(1 - n, (n % 2 == 0) ? -1 : 1);
    r.holds = (r.max_v == n - 1) && (r.top_column == expected);
    return r;
}

} // namespace detail

inline FullTwistTopCheck murakami_check(int n, SkeinEngine& engine) {
    if (n < 1) throw std::invalid_argument("murakami_check: need n >= 1");
    return detail::full_twist_top_check(n, engine.compute_H(full_twist(n)));
}

inline FullTwistTopCheck murakami_check(int n, PolyRoute route = PolyRoute::skein,
                                        const EngineOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("murakami_check: need n >= 1");
    if (route == PolyRoute::hecke) {
        const BraidWord twist = full_twist(n);
        const LPoly h = monomial_shift(compute_P_hecke(twist), -exponent_sum(twist), 0, 1);
        return detail::full_twist_top_check(n, h);
    }
    SkeinEngine engine(opts);
    return murakami_check(n, engine);
}

// Deterministic pseudo-random corpus: n uniform in [2, max_n], length
// uniform in [0, max_len], letters uniform over +-[1, n-1].  Same seed,
// same corpus, on every platform (raw mt19937_64 draws, no distribution
// adapters).
inline std::vector<BraidWord> random_corpus(std::uint64_t seed, std::size_t count, int max_n,
                                            std::size_t max_len) {
    if (max_n < 2) throw std::invalid_argument("random_corpus: need max_n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<BraidWord> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
        const std::size_t len = static_cast<std::size_t>(rng() % (max_len + 1));
        std::vector<int> letters(len);
        for (std::size_t t = 0; t < len; ++t) {
            const int idx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            letters[t] = (rng() & 1) ? -idx : idx;
        }
        corpus.emplace_back(n, std::move(letters));
    }
    return corpus;
}

} // namespace homfly
