#pragma once

// The skein computation tree for P of a closed braid.
//
// Strategy: reduce (cancellation, destabilization, split unions) to a
// fixpoint, then test whether the closure diagram is descending under a
// fixed traversal; if not, Conway-split at the first bad crossing.  A
// descending closed braid is an unlink, so terminal nodes evaluate to
// unlink_value(k).
//
// The working word is never re-rotated between splits: the termination
// measure (letter count, bad-crossing count) is monotone only for a fixed
// rotation.  Canonical rotation appears solely in memo keys, where it is
// safe because conjugate braids have equal closures.

#include "braid.hpp"
#include "laurent.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace homfly {

// A tree vertex: a braid word plus the accumulated product of edge labels
// (P-convention).  conway_split returns children with their single edge
// label; the engine folds labels into the recursion instead of storing
// whole root-to-leaf products.
struct SkeinNode {
    BraidWord word;
    LPoly weight;
};

struct EngineStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
    std::size_t max_depth = 0;
};

struct EngineOptions {
    std::uint64_t node_budget = 10'000'000;
    bool memoize = true;
    bool reduce = true;
};

// Raised when the node budget runs out; the engine never returns a partial
// polynomial.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(std::uint64_t budget)
        : std::runtime_error("skein engine: node budget of " + std::to_string(budget) +
                             " exceeded") {}
};

// Walks the closure diagram: components ordered by minimal entry level,
// one base point per component at its minimal level's left end.  A crossing
// is good when its first encounter is on the over-strand.  Returns the
// letter index of the first bad crossing in traversal order, or nullopt if
// the diagram is descending.
inline std::optional<std::size_t> descending_test(const BraidWord& b) {
    const std::vector<int>& w = b.letters();
    const std::size_t L = w.size();
    if (L == 0) return std::nullopt;
    const int n = b.strands();
    std::vector<char> comp_seen(n, 0);
    std::vector<char> crossing_seen(L, 0);
    for (int base = 0; base < n; ++base) {
        if (comp_seen[base]) continue;
        int level = base;
        do {
            comp_seen[level] = 1;
            for (std::size_t t = 0; t < L; ++t) {
                int a = (w[t] > 0 ? w[t] : -w[t]) - 1;
                if (level != a && level != a + 1) continue;
                bool ascending = (level == a);
                bool over = (w[t] > 0) == ascending;
                if (!crossing_seen[t]) {
                    if (!over) return t;
                    crossing_seen[t] = 1;
                }
                level = ascending ? a + 1 : a;
            }
            // right edge reached; the closure arc returns to the left end
            // at the same level
        } while (level != base);
    }
    return std::nullopt;
}

// Conway split at letter pos, edge labels in the P-convention
// (v^{-1}P+ - vP- = zP0):
//   positive letter:  switched x v^2,   smoothed x vz
//   negative letter:  switched x v^-2,  smoothed x -v^-1 z
inline std::pair<SkeinNode, SkeinNode> conway_split(const BraidWord& b, std::size_t pos) {
    if (pos >= b.size())
        throw std::invalid_argument("conway_split: letter position out of range");
    int g = b.letters()[pos];
    std::vector<int> switched = b.letters();
    switched[pos] = -g;
    std::vector<int> smoothed = b.letters();
    smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(pos));
    BraidWord switched_word(b.strands(), std::move(switched));
    BraidWord smoothed_word(b.strands(), std::move(smoothed));
    if (g > 0)
        return {SkeinNode{std::move(switched_word), LPoly::monomial(2, 0, 1)},
                SkeinNode{std::move(smoothed_word), LPoly::monomial(1, 1, 1)}};
    return {SkeinNode{std::move(switched_word), LPoly::monomial(-2, 0, 1)},
            SkeinNode{std::move(smoothed_word), LPoly::monomial(-1, 1, -1)}};
}

// Markov destabilization: while the top generator index n-1 occurs exactly
// once in the cyclic word (either sign), rotate that letter to the end,
// delete it, and drop to n-1 strands.  Preserves the closure's link type.
inline BraidWord destabilize(const BraidWord& b) {
    int n = b.strands();
    std::vector<int> w = b.letters();
    while (n >= 2) {
        const int target = n - 1;
        std::size_t count = 0, at = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            int idx = w[i] > 0 ? w[i] : -w[i];
            if (idx == target) {
                ++count;
                at = i;
            }
        }
        if (count != 1) break;
        std::vector<int> next(w.begin() + static_cast<std::ptrdiff_t>(at) + 1, w.end());
        next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
        w = std::move(next);
        --n;
    }
    return BraidWord(n, std::move(w));
}

// If some generator index never occurs, the closure is a split union of the
// lower and upper sub-braids: P = P(lower) * P(upper) * unlink_value(2).
inline std::optional<std::pair<BraidWord, BraidWord>> split_components(const BraidWord& b) {
    int n = b.strands();
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int g : b.letters()) used[static_cast<std::size_t>(g > 0 ? g : -g)] = 1;
    for (int j = 1; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        std::vector<int> lower, upper;
        for (int g : b.letters()) {
            int idx = g > 0 ? g : -g;
            if (idx < j)
                lower.push_back(g);
            else
                upper.push_back(g > 0 ? g - j : g + j);
        }
        return std::make_pair(BraidWord(j, std::move(lower)),
                              BraidWord(n - j, std::move(upper)));
    }
    return std::nullopt;
}

class SkeinEngine {
public:
    explicit SkeinEngine(EngineOptions opts = {}) : opts_(opts) {}

    // P of the closure of b: an invariant of the oriented link, so equal
    // for all rotations of the word and across Markov moves.
    LPoly compute_P(const BraidWord& b) { return eval(b, 0); }

    // H of the standard closure diagram of b: v^{-w} P.
    LPoly compute_H(const BraidWord& b) {
        return monomial_shift(compute_P(b), -exponent_sum(b), 0, 1);
    }

    const EngineStats& stats() const { return stats_; }
    const EngineOptions& options() const { return opts_; }

private:
    LPoly eval(BraidWord b, std::size_t depth) {
        if (depth > stats_.max_depth) stats_.max_depth = depth;
        if (opts_.reduce) {
            for (;;) {
                BraidWord r = destabilize(free_cyclic_reduce(b));
                if (r == b) break;
                b = std::move(r);
            }
            if (auto parts = split_components(b)) {
                LPoly lower = eval(std::move(parts->first), depth);
                LPoly upper = eval(std::move(parts->second), depth);
                return lower * upper * unlink_value(2);
            }
        }
        std::optional<CanonicalKey> key;
        if (opts_.memoize) {
            key = canonical_key(b);
            if (auto it = memo_.find(*key); it != memo_.end()) {
                ++stats_.memo_hits;
                return it->second;
            }
        }
        if (++stats_.nodes_expanded > opts_.node_budget) throw budget_exceeded(opts_.node_budget);

        LPoly result;
        if (auto bad = descending_test(b)) {
            auto [switched, smoothed] = conway_split(b, *bad);
            result = switched.weight * eval(std::move(switched.word), depth + 1) +
                     smoothed.weight * eval(std::move(smoothed.word), depth + 1);
        } else {
            result = unlink_value(closure_info(b).components);
        }
        if (key) memo_.emplace(std::move(*key), result);
        return result;
    }

    EngineOptions opts_;
    EngineStats stats_;
    std::map<CanonicalKey, LPoly> memo_;
};

} // namespace homfly
