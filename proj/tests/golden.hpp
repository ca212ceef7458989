#pragma once

// Values and fixture words shared across the test files.

#include <homfly/braid.hpp>
#include <homfly/laurent.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace golden {

// P of the (3,5) torus closure:
// (z^8+8z^6+21z^4+21z^2+7)v^8 - (z^6+7z^4+14z^2+8)v^10 + (z^2+2)v^12
inline homfly::LPoly torus35() {
    homfly::LPoly p;
    p.add_term(8, 0, 7);
    p.add_term(8, 2, 21);
    p.add_term(8, 4, 21);
    p.add_term(8, 6, 8);
    p.add_term(8, 8, 1);
    p.add_term(10, 0, -8);
    p.add_term(10, 2, -14);
    p.add_term(10, 4, -7);
    p.add_term(10, 6, -1);
    p.add_term(12, 0, 2);
    p.add_term(12, 2, 1);
    return p;
}

// P of the positive Hopf closure (s1^2 on 2 strands): vz + (v-v^3)z^{-1}
inline homfly::LPoly hopf() {
    homfly::LPoly p;
    p.add_term(1, -1, 1);
    p.add_term(1, 1, 1);
    p.add_term(3, -1, -1);
    return p;
}

// The three 4-strand, writhe -1 words whose closures share a left column
// of -z^2-1 and whose full-twisted closures have identical P.
inline const std::vector<std::vector<int>>& nine_crossing_words() {
    static const std::vector<std::vector<int>> words = {
        {-1, -1, 2, -1, 2, 2, -3, 2, -3},
        {-1, -1, 2, 2, -1, 2, -3, 2, -3},
        {-1, 2, -1, 2, 2, -1, -3, 2, -3},
    };
    return words;
}

// Deterministic small polynomial for algebra property tests.
inline homfly::LPoly random_lpoly(std::mt19937_64& rng, int max_terms = 6) {
    homfly::LPoly p;
    const std::size_t terms = rng() % static_cast<std::uint64_t>(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i) {
        const int dv = static_cast<int>(rng() % 13) - 6;
        const int dz = static_cast<int>(rng() % 13) - 6;
        const int c = static_cast<int>(rng() % 19) - 9;
        p.add_term(dv, dz, c);
    }
    return p;
}

} // namespace golden
