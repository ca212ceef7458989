#pragma once

// Braid words on n strands and the combinatorial moves the skein engine
// needs: free/cyclic cancellation, conjugation by rotation, Garside twists,
// mirroring, closure permutation data, and canonical memo keys.
//
// Letters are nonzero integers: g > 0 is the positive generator on strands
// (g, g+1), g < 0 its inverse.  Strand levels are 0-based internally.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homfly {

class BraidWord {
public:
    // The empty braid on one strand.
    BraidWord() : strands_(1) {}

    BraidWord(int strands, std::vector<int> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1)
            throw std::invalid_argument("braid word: strand count must be at least 1");
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            int g = letters_[i];
            if (g == 0)
                throw std::invalid_argument("braid word: letter 0 at position " + std::to_string(i));
            int idx = g > 0 ? g : -g;
            if (idx > strands_ - 1)
                throw std::invalid_argument("braid word: letter " + std::to_string(g) +
                                            " at position " + std::to_string(i) +
                                            " needs more than " + std::to_string(strands_) + " strands");
        }
    }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    bool operator==(const BraidWord&) const = default;

private:
    int strands_;
    std::vector<int> letters_;
};

struct ClosureInfo {
    int writhe = 0;
    int components = 0;
    bool operator==(const ClosureInfo&) const = default;
};

inline int exponent_sum(const BraidWord& b) {
    int w = 0;
    for (int g : b.letters()) w += (g > 0) ? 1 : -1;
    return w;
}

// perm[i] = level at which the strand entering at level i exits (0-based).
inline std::vector<int> closure_permutation(const BraidWord& b) {
    int n = b.strands();
    std::vector<int> at_level(n); // at_level[l] = entry level of the strand currently at l
    for (int l = 0; l < n; ++l) at_level[l] = l;
    for (int g : b.letters()) {
        int j = (g > 0 ? g : -g) - 1;
        std::swap(at_level[j], at_level[j + 1]);
    }
    std::vector<int> perm(n);
    for (int l = 0; l < n; ++l) perm[at_level[l]] = l;
    return perm;
}

inline ClosureInfo closure_info(const BraidWord& b) {
    std::vector<int> perm = closure_permutation(b);
    int n = b.strands();
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return ClosureInfo{exponent_sum(b), cycles};
}

// Deletes adjacent inverse pairs g,-g, including across the cyclic boundary,
// until none remain.  Closure link type (and P) are unchanged.
inline BraidWord free_cyclic_reduce(const BraidWord& b) {
    std::vector<int> w = b.letters();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> out;
        out.reserve(w.size());
        for (int g : w) {
            if (!out.empty() && out.back() == -g) {
                out.pop_back();
                changed = true;
            } else {
                out.push_back(g);
            }
        }
        std::size_t lo = 0, hi = out.size();
        while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
            ++lo;
            --hi;
            changed = true;
        }
        w.assign(out.begin() + lo, out.begin() + hi);
    }
    return BraidWord(b.strands(), std::move(w));
}

// Cyclic left rotation by r (any integer); conjugation of the braid.
inline BraidWord conjugate_rotate(const BraidWord& b, long long r) {
    if (b.size() == 0) return b;
    long long len = static_cast<long long>(b.size());
    std::size_t k = static_cast<std::size_t>(((r % len) + len) % len);
    std::vector<int> w(b.letters().begin() + k, b.letters().end());
    w.insert(w.end(), b.letters().begin(), b.letters().begin() + k);
    return BraidWord(b.strands(), std::move(w));
}

// The positive half twist Delta_n as the fixed left-greedy word
// (s1)(s2 s1)(s3 s2 s1)...(s_{n-1}...s1); n(n-1)/2 letters, order-reversing.
inline BraidWord garside_half_twist(int n) {
    if (n < 1) throw std::invalid_argument("garside_half_twist: need n >= 1");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int k = 1; k < n; ++k)
        for (int g = k; g >= 1; --g) w.push_back(g);
    return BraidWord(n, std::move(w));
}

// Delta_n^2, the positive full twist (central in the braid group).
inline BraidWord full_twist(int n) {
    BraidWord half = garside_half_twist(n);
    std::vector<int> w = half.letters();
    w.insert(w.end(), half.letters().begin(), half.letters().end());
    return BraidWord(n, std::move(w));
}

// b followed by Delta^2 (sign +1) or by its exact inverse word (sign -1).
inline BraidWord append_full_twist(const BraidWord& b, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("append_full_twist: sign must be +1 or -1");
    std::vector<int> twist = full_twist(b.strands()).letters();
    std::vector<int> w = b.letters();
    if (sign > 0) {
        w.insert(w.end(), twist.begin(), twist.end());
    } else {
        for (auto it = twist.rbegin(); it != twist.rend(); ++it) w.push_back(-*it);
    }
    return BraidWord(b.strands(), std::move(w));
}

inline BraidWord mirror(const BraidWord& b) {
    std::vector<int> w = b.letters();
    for (int& g : w) g = -g;
    return BraidWord(b.strands(), std::move(w));
}

// (s1 s2 ... s_{p-1})^q on p strands; closure is the (p,q) torus link.
inline BraidWord torus_braid(int p, int q) {
    if (p < 2 || q < 1)
        throw std::invalid_argument("torus_braid: need p >= 2, q >= 1");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(p - 1) * q);
    for (int rep = 0; rep < q; ++rep)
        for (int g = 1; g < p; ++g) w.push_back(g);
    return BraidWord(p, std::move(w));
}

namespace detail {

// Booth's algorithm: index of the lexicographically least rotation.
inline std::size_t least_rotation(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    if (n <= 1) return 0;
    std::vector<int> f(2 * n, -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        int sj = s[j % n];
        int i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return static_cast<std::size_t>(k % n);
}

} // namespace detail

// free_cyclic_reduce followed by rotation to the lexicographically least
// word.  Equal canonical forms imply conjugate braids, hence equal closures.
inline BraidWord canonical_form(const BraidWord& b) {
    BraidWord red = free_cyclic_reduce(b);
    return conjugate_rotate(red, static_cast<long long>(detail::least_rotation(red.letters())));
}

// Memo key: strand count plus the canonical letter sequence.
struct CanonicalKey {
    int strands = 1;
    std::vector<int> letters;
    auto operator<=>(const CanonicalKey&) const = default;
};

inline CanonicalKey canonical_key(const BraidWord& b) {
    BraidWord c = canonical_form(b);
    return CanonicalKey{c.strands(), c.letters()};
}

// Word syntax shared by the CLI and corpus files: integers separated by
// whitespace or commas; a token may carry a ^k suffix meaning k repeats
// (negative k also flips the letter sign).
inline std::vector<int> parse_letters(const std::string& text) {
    std::vector<int> letters;
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n') {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);

    auto parse_one = [](const std::string& t) -> long long {
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(t, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token '" + t + "'");
        }
        if (pos != t.size()) throw std::invalid_argument("bad word token '" + t + "'");
        return value;
    };

    for (const std::string& tok : tokens) {
        std::size_t caret = tok.find('^');
        long long base = 0, rep = 1;
        if (caret == std::string::npos) {
            base = parse_one(tok);
        } else {
            base = parse_one(tok.substr(0, caret));
            rep = parse_one(tok.substr(caret + 1));
        }
        if (rep < 0) {
            base = -base;
            rep = -rep;
        }
        if (base < -1000000 || base > 1000000)
            throw std::invalid_argument("bad word token '" + tok + "': letter out of range");
        for (long long i = 0; i < rep; ++i) letters.push_back(static_cast<int>(base));
    }
    return letters;
}

} // namespace homfly
