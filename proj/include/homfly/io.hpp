#pragma once

// Rendering and serialization: coefficient tables on the vz-plane, JSON
// forms for polynomials and twist reports, corpus files, and the preset
// words the CLI accepts.

#include "braid.hpp"
#include "laurent.hpp"
#include "twist.hpp"

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace homfly {

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

// Coefficients that fit in 64 bits are emitted as JSON numbers; anything
// wider as a decimal string, because JSON readers round big numerals.
inline nlohmann::ordered_json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return nlohmann::ordered_json(c.convert_to<std::int64_t>());
    return nlohmann::ordered_json(c.str());
}

inline Int coeff_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return detail::parse_int(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

// [{"v":a,"z":b,"c":c}, ...] in canonical term order.
inline nlohmann::ordered_json to_json(const LPoly& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [k, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["v"] = k.first;
        term["z"] = k.second;
        term["c"] = coeff_to_json(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

// [{"z":b,"c":c}, ...] in ascending z order.
inline nlohmann::ordered_json to_json(const ZPoly& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [dz, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["z"] = dz;
        term["c"] = coeff_to_json(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

inline LPoly lpoly_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    LPoly p;
    for (const auto& term : j)
        p.add_term(term.at("v").get<int>(), term.at("z").get<int>(), coeff_from_json(term.at("c")));
    return p;
}

inline ZPoly zpoly_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("column JSON must be an array");
    ZPoly p;
    for (const auto& term : j) p.add_term(term.at("z").get<int>(), coeff_from_json(term.at("c")));
    return p;
}

inline nlohmann::ordered_json to_json(const TwistReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.strands;
    j["w"] = r.writhe;
    j["lower"] = r.bounds.lower;
    j["upper"] = r.bounds.upper;
    j["twisted_upper"] = r.bounds.twisted_upper;
    j["sign"] = r.sign;
    j["left_col"] = to_json(r.left_col);
    j["right_col_twisted"] = to_json(r.right_col_twisted);
    j["identity_holds"] = r.identity_holds;
    j["lower_sharp"] = r.lower_sharp;
    j["upper_twisted_sharp"] = r.upper_twisted_sharp;
    return j;
}

// ---------------------------------------------------------------------------
// Coefficient table on the vz-plane
// ---------------------------------------------------------------------------

// Rows are z-exponents descending, columns v-exponents ascending, blank
// cells for zero coefficients.  Axes step by 2 when every exponent on an
// axis has the same parity (closed-braid polynomials always do), so
// all-zero columns inside the range stay visible without noise rows.
// The header line states the ranges and steps.
//
// An optional v-range widens the column span (used to show bound columns
// that happen to be empty); it never narrows the support.
inline std::string render_table(const LPoly& p,
                                std::optional<std::pair<int, int>> v_range = std::nullopt) {
    if (p.is_zero()) return "0\n";

    auto vs = *v_support(p);
    auto zs = *z_support(p);
    int vmin = vs.first, vmax = vs.second;
    if (v_range) {
        vmin = std::min(vmin, v_range->first);
        vmax = std::max(vmax, v_range->second);
    }

    auto axis_step = [](int lo, int hi, auto&& same_parity_as_lo) {
        if (lo == hi) return 1;
        return same_parity_as_lo() ? 2 : 1;
    };
    int vstep = axis_step(vmin, vmax, [&] {
        if ((vmax - vmin) % 2 != 0) return false;
        for (const auto& [k, c] : p.terms())
            if ((k.first - vmin) % 2 != 0) return false;
        return true;
    });
    int zstep = axis_step(zs.first, zs.second, [&] {
        for (const auto& [k, c] : p.terms())
            if ((k.second - zs.first) % 2 != 0) return false;
        return true;
    });

    std::vector<int> vcols, zrows;
    for (int dv = vmin; dv <= vmax; dv += vstep) vcols.push_back(dv);
    for (int dz = zs.second; dz >= zs.first; dz -= zstep) zrows.push_back(dz);

    auto cell = [&](int dv, int dz) -> std::string {
        auto it = p.terms().find({dv, dz});
        if (it == p.terms().end()) return "";
        return it->second.str();
    };

    const std::string corner = "z\\v";
    std::size_t label_w = corner.size();
    for (int dz : zrows) label_w = std::max(label_w, std::to_string(dz).size());
    std::vector<std::size_t> col_w(vcols.size());
    for (std::size_t j = 0; j < vcols.size(); ++j) {
        col_w[j] = std::to_string(vcols[j]).size();
        for (int dz : zrows) col_w[j] = std::max(col_w[j], cell(vcols[j], dz).size());
    }

    std::ostringstream os;
    os << "# v: " << vmin << ".." << vmax << " step " << vstep << " | z: " << zs.first << ".."
       << zs.second << " step " << zstep << "\n";
    auto pad = [&os](const std::string& s, std::size_t w) {
        for (std::size_t i = s.size(); i < w; ++i) os << ' ';
        os << s;
    };
    pad(corner, label_w);
    for (std::size_t j = 0; j < vcols.size(); ++j) {
        os << "  ";
        pad(std::to_string(vcols[j]), col_w[j]);
    }
    os << "\n";
    for (int dz : zrows) {
        pad(std::to_string(dz), label_w);
        for (std::size_t j = 0; j < vcols.size(); ++j) {
            os << "  ";
            pad(cell(vcols[j], dz), col_w[j]);
        }
        os << "\n";
    }
    // blank cells can leave trailing spaces; strip them per line
    std::string out = os.str();
    std::string cleaned;
    cleaned.reserve(out.size());
    std::string line;
    for (char ch : out) {
        if (ch == '\n') {
            std::size_t end = line.find_last_not_of(' ');
            cleaned.append(line, 0, end == std::string::npos ? 0 : end + 1);
            cleaned += '\n';
            line.clear();
        } else {
            line += ch;
        }
    }
    return cleaned;
}

// ---------------------------------------------------------------------------
// Words, presets, corpus files
// ---------------------------------------------------------------------------

// CLI-boundary strand inference; library calls always pass n explicitly.
inline int infer_strands(const std::vector<int>& letters) {
    int top = 0;
    for (int g : letters) top = std::max(top, g > 0 ? g : -g);
    return top + 1;
}

// "torus:p,q" | "delta:n" | "fulltwist:n"
inline BraidWord parse_preset(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("preset '" + text + "': expected name:args");
    const std::string name = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    if (name == "torus") {
        auto parts = detail::split(args, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("preset torus: expected torus:p,q");
        return torus_braid(detail::parse_small_int(detail::trim(parts[0])),
                           detail::parse_small_int(detail::trim(parts[1])));
    }
    if (name == "delta") return garside_half_twist(detail::parse_small_int(detail::trim(args)));
    if (name == "fulltwist") return full_twist(detail::parse_small_int(detail::trim(args)));
    throw std::invalid_argument("unknown preset '" + name + "'");
}

// One braid per line, "n: g1 g2 ...", '#' comments, blank lines ignored.
inline std::vector<BraidWord> parse_corpus(std::istream& in) {
    std::vector<BraidWord> words;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                        ": expected 'n: letters'");
        try {
            int n = detail::parse_small_int(detail::trim(line.substr(0, colon)));
            words.emplace_back(n, parse_letters(line.substr(colon + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return words;
}

inline std::string corpus_line(const BraidWord& b) {
    std::ostringstream os;
    os << b.strands() << ":";
    for (int g : b.letters()) os << ' ' << g;
    return os.str();
}

} // namespace homfly
