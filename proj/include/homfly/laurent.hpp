#pragma once

// Exact sparse Laurent polynomials over Z in the two indeterminates v and z,
// plus the univariate restriction in z used for column extraction.
//
// Coefficients are arbitrary-precision integers, so products never overflow.
// Invariants kept by every operation:
//   - no stored coefficient is zero,
//   - each exponent (pair) appears at most once,
//   - term order is (v-degree ascending, z-degree ascending), which makes
//     serialization canonical and equality structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homfly {

using Int = boost::multiprecision::cpp_int;

namespace detail {

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer token");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer token '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer token '" + s + "'");
    return Int(s);
}

inline int parse_small_int(const std::string& s) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent token '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad exponent token '" + s + "'");
    return value;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "v^-3" -> -3 (prefix must match exactly)
inline int parse_power(const std::string& tok, char var) {
    std::string t = trim(tok);
    if (t.size() < 3 || t[0] != var || t[1] != '^')
        throw std::invalid_argument(std::string("expected ") + var + "^<int>, got '" + tok + "'");
    return parse_small_int(t.substr(2));
}

} // namespace detail

// Laurent polynomial in z alone: one column of an LPoly.
class ZPoly {
public:
    using Terms = std::map<int, Int>;

    ZPoly() = default;

    static ZPoly monomial(int dz, Int c = 1) {
        ZPoly p;
        if (c != 0) p.terms_.emplace(dz, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(int dz, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(dz, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ZPoly operator-() const {
        ZPoly r;
        for (const auto& [dz, c] : terms_) r.terms_.emplace(dz, -c);
        return r;
    }

    bool operator==(const ZPoly&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [dz, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c << "*z^" << dz;
        }
        return os.str();
    }

    static ZPoly parse(const std::string& text) {
        ZPoly p;
        std::string body = detail::trim(text);
        if (body == "0") return p;
        for (const std::string& piece : detail::split(body, '+')) {
            std::string term = detail::trim(piece);
            auto fields = detail::split(term, '*');
            if (fields.size() != 2)
                throw std::invalid_argument("bad ZPoly term '" + term + "'");
            Int c = detail::parse_int(detail::trim(fields[0]));
            int dz = detail::parse_power(fields[1], 'z');
            p.add_term(dz, c);
        }
        return p;
    }

private:
    Terms terms_;
};

// Laurent polynomial in v and z.
class LPoly {
public:
    using Key = std::pair<int, int>; // (v-degree, z-degree)
    using Terms = std::map<Key, Int>;

    LPoly() = default;

    static LPoly monomial(int dv, int dz, Int c = 1) {
        LPoly p;
        if (c != 0) p.terms_.emplace(Key{dv, dz}, std::move(c));
        return p;
    }

    static LPoly one() { return monomial(0, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add_term(int dv, int dz, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(Key{dv, dz}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LPoly& operator+=(const LPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }

    friend LPoly operator+(LPoly a, const LPoly& b) {
        a += b;
        return a;
    }

    LPoly operator-() const {
        LPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    LPoly& operator-=(const LPoly& o) { return *this += -o; }

    friend LPoly operator-(LPoly a, const LPoly& b) {
        a -= b;
        return a;
    }

    friend LPoly operator*(const LPoly& a, const LPoly& b) {
        LPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    LPoly& operator*=(const LPoly& o) { return *this = *this * o; }

    bool operator==(const LPoly&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c << "*v^" << k.first << "*z^" << k.second;
        }
        return os.str();
    }

    static LPoly parse(const std::string& text) {
        LPoly p;
        std::string body = detail::trim(text);
        if (body == "0") return p;
        for (const std::string& piece : detail::split(body, '+')) {
            std::string term = detail::trim(piece);
            auto fields = detail::split(term, '*');
            if (fields.size() != 3)
                throw std::invalid_argument("bad LPoly term '" + term + "'");
            Int c = detail::parse_int(detail::trim(fields[0]));
            int dv = detail::parse_power(fields[1], 'v');
            int dz = detail::parse_power(fields[2], 'z');
            p.add_term(dv, dz, c);
        }
        return p;
    }

private:
    Terms terms_;
};

// p * c*v^dv*z^dz; c = 0 is rejected so a shift can never silently kill a value.
inline LPoly monomial_shift(const LPoly& p, int dv, int dz, const Int& c) {
    if (c == 0) throw std::invalid_argument("monomial_shift: zero coefficient");
    LPoly r;
    for (const auto& [k, coeff] : p.terms())
        r.add_term(k.first + dv, k.second + dz, coeff * c);
    return r;
}

// Coefficient of v^dv as a polynomial in z; empty when the column is absent.
inline ZPoly column(const LPoly& p, int dv) {
    ZPoly col;
    for (const auto& [k, c] : p.terms()) {
        if (k.first == dv) col.add_term(k.second, c);
        else if (k.first > dv) break;
    }
    return col;
}

// (min, max) of the v-exponents over nonzero terms; empty for the zero polynomial.
inline std::optional<std::pair<int, int>> v_support(const LPoly& p) {
    if (p.is_zero()) return std::nullopt;
    return std::make_pair(p.terms().begin()->first.first, p.terms().rbegin()->first.first);
}

inline std::optional<std::pair<int, int>> z_support(const LPoly& p) {
    if (p.is_zero()) return std::nullopt;
    int lo = p.terms().begin()->first.second;
    int hi = lo;
    for (const auto& [k, c] : p.terms()) {
        lo = std::min(lo, k.second);
        hi = std::max(hi, k.second);
    }
    return std::make_pair(lo, hi);
}

// The substitution v -> -v^{-1}: c*v^a*z^b becomes (-1)^a*c*v^{-a}*z^b.
// Relates the polynomial of a link to that of its mirror image.
inline LPoly mirror_subst(const LPoly& p) {
    LPoly r;
    for (const auto& [k, c] : p.terms())
        r.add_term(-k.first, k.second, (k.first & 1) ? -c : c);
    return r;
}

// ((v^{-1} - v)/z)^{k-1}, the polynomial of the k-component unlink.
inline LPoly unlink_value(int k) {
    if (k < 1) throw std::invalid_argument("unlink_value: need k >= 1");
    LPoly circle;
    circle.add_term(-1, -1, 1);
    circle.add_term(1, -1, -1);
    LPoly r = LPoly::one();
    for (int i = 1; i < k; ++i) r *= circle;
    return r;
}

} // namespace homfly
