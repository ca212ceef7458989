#pragma once

// Independent second route to P of a closed braid: represent the braid in
// the Hecke algebra H_n (basis indexed by permutations, quadratic relation
// T_i^2 = z T_i + 1) and evaluate a Markov trace.  Exponential in n, so the
// strand count is capped; used to cross-validate the skein engine.
//
// Normalization, fixed by forcing P(empty braid on 2) = unlink_value(2)
// and P(s1 on 2) = 1:
//   tr(1 in H_m) picks up a factor (v^{-1}-v)/z per unused top strand,
//   each removed T_{m-1} contributes v^{-1}, and P = v^w tr(T_beta).

#include "braid.hpp"
#include "laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homfly {

// Element of H_n: finite sum of basis elements T_pi with LPoly coefficients.
// Permutations are one-line vectors of 0-based images; zero coefficients
// are never stored.
class HeckeElement {
public:
    using Perm = std::vector<int>;
    using Coords = std::map<Perm, LPoly>;

    explicit HeckeElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("hecke: rank must be at least 1");
    }

    static HeckeElement identity(int n) {
        HeckeElement e(n);
        Perm id(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
        e.coords_.emplace(std::move(id), LPoly::one());
        return e;
    }

    int n() const { return n_; }
    const Coords& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    void add(const Perm& p, const LPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coords_.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coords_.erase(it);
        }
    }

    bool operator==(const HeckeElement&) const = default;

private:
    int n_;
    Coords coords_;
};

// x * T_i (sign +1) or x * T_i^{-1} = x * (T_i - z) (sign -1).
// Basis rule: if length(pi s_i) > length(pi) then T_pi T_i = T_{pi s_i},
// else T_pi T_i = z T_pi + T_{pi s_i}.
inline HeckeElement right_multiply_generator(const HeckeElement& x, int i, int sign) {
    if (i < 1 || i > x.n() - 1)
        throw std::invalid_argument("hecke: generator index " + std::to_string(i) +
                                    " out of range for rank " + std::to_string(x.n()));
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("hecke: sign must be +1 or -1");
    const int k = i - 1; // 0-based value pair (k, k+1)
    HeckeElement out(x.n());
    for (const auto& [pi, c] : x.coords()) {
        std::size_t pa = 0, pb = 0;
        for (std::size_t t = 0; t < pi.size(); ++t) {
            if (pi[t] == k) pa = t;
            if (pi[t] == k + 1) pb = t;
        }
        bool longer = pa < pb; // length(pi s_i) > length(pi)
        HeckeElement::Perm ps = pi;
        ps[pa] = k + 1;
        ps[pb] = k;
        if (sign > 0) {
            if (longer) {
                out.add(ps, c);
            } else {
                out.add(pi, monomial_shift(c, 0, 1, 1));
                out.add(ps, c);
            }
        } else {
            if (longer) {
                out.add(ps, c);
                out.add(pi, monomial_shift(c, 0, 1, -1));
            } else {
                out.add(ps, c);
            }
        }
    }
    return out;
}

namespace detail {

// A reduced word for pi (0-based generator indices, left to right).
inline std::vector<int> reduced_word(HeckeElement::Perm p) {
    std::vector<int> word;
    const int n = static_cast<int>(p.size());
    std::vector<int> pos(p.size());
    for (;;) {
        for (int t = 0; t < n; ++t) pos[static_cast<std::size_t>(p[static_cast<std::size_t>(t)])] = t;
        int k = -1;
        for (int v = 0; v + 1 < n; ++v) {
            if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v + 1)]) {
                k = v;
                break;
            }
        }
        if (k < 0) break;
        // p := p * s_k removes one inversion
        std::swap(p[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])],
                  p[static_cast<std::size_t>(pos[static_cast<std::size_t>(k + 1)])]);
        word.push_back(k);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

} // namespace detail

inline HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) {
    if (x.n() != y.n()) throw std::invalid_argument("hecke: rank mismatch in multiply");
    HeckeElement out(x.n());
    for (const auto& [pi, d] : y.coords()) {
        HeckeElement part = x;
        for (int k : detail::reduced_word(pi)) part = right_multiply_generator(part, k + 1, +1);
        for (const auto& [p, c] : part.coords()) out.add(p, c * d);
    }
    return out;
}

// The Markov trace.  Peels one strand at a time using the coset
// decomposition pi = tau * (s_{m-1} s_{m-2} ... s_j) with j = pi(m-1),
// which is length-additive: a basis element either misses the top strand
// (factor (v^{-1}-v)/z) or contains exactly one T_{m-1} (factor v^{-1},
// leaving tau * T_{m-2}...T_j one rank down).
// tr(identity of H_n) = unlink_value(n).
inline LPoly markov_trace(const HeckeElement& x) {
    const LPoly circle = unlink_value(2);
    HeckeElement cur = x;
    for (int m = x.n(); m >= 2; --m) {
        HeckeElement next(m - 1);
        for (const auto& [pi, c] : cur.coords()) {
            const int j = pi[static_cast<std::size_t>(m - 1)];
            if (j == m - 1) {
                HeckeElement::Perm tau(pi.begin(), pi.end() - 1);
                next.add(tau, c * circle);
            } else {
                HeckeElement::Perm tau(static_cast<std::size_t>(m - 1));
                for (int t = 0; t < m - 1; ++t) {
                    int v = pi[static_cast<std::size_t>(t)];
                    tau[static_cast<std::size_t>(t)] = v < j ? v : v - 1;
                }
                HeckeElement part(m - 1);
                part.add(tau, monomial_shift(c, -1, 0, 1));
                for (int k = m - 3; k >= j; --k) part = right_multiply_generator(part, k + 1, +1);
                for (const auto& [p, cc] : part.coords()) next.add(p, cc);
            }
        }
        cur = std::move(next);
    }
    if (cur.is_zero()) return LPoly();
    return cur.coords().begin()->second;
}

// P of the closure of b via the trace: P = v^w tr(T_beta).  The basis has
// n! elements, so the strand count is capped.
inline LPoly compute_P_hecke(const BraidWord& b, int basis_limit = 7) {
    if (b.strands() > basis_limit)
        throw std::invalid_argument("hecke oracle: " + std::to_string(b.strands()) +
                                    " strands exceeds the basis limit of " +
                                    std::to_string(basis_limit));
    HeckeElement e = HeckeElement::identity(b.strands());
    for (int g : b.letters()) e = right_multiply_generator(e, g > 0 ? g : -g, g > 0 ? 1 : -1);
    return monomial_shift(markov_trace(e), exponent_sum(b), 0, 1);
}

} // namespace homfly
