// twistlab: Homfly polynomials of closed braids and the full-twist column
// identities, from the command line.
//
// Exit codes: 0 success, 1 check failure (a law that must hold does not,
// which would mean an engine bug), 2 usage error, 3 node budget exceeded.

#include <CLI11.hpp>

#include <homfly/braid.hpp>
#include <homfly/hecke.hpp>
#include <homfly/io.hpp>
#include <homfly/laurent.hpp>
#include <homfly/skein.hpp>
#include <homfly/twist.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using homfly::BraidWord;
using homfly::EngineOptions;
using homfly::EngineStats;
using homfly::LPoly;
using homfly::SkeinEngine;
using homfly::ZPoly;

constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

std::uint64_t env_node_budget() {
    const char* raw = std::getenv("HOMFLY_NODE_BUDGET");
    if (raw == nullptr || *raw == '\0') return kDefaultNodeBudget;
    std::string s(raw);
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("HOMFLY_NODE_BUDGET: not a count: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("HOMFLY_NODE_BUDGET: not a count: '" + s + "'");
    return value;
}

struct WordOptions {
    std::vector<std::string> tokens;
    std::string preset;
    std::string file;
    int strands = 0; // 0 = infer from letters
};

void add_word_options(CLI::App* cmd, WordOptions& wo) {
    cmd->add_option("letters", wo.tokens,
                    "braid word letters (signed generator indices; put them after --)");
    cmd->add_option("--preset", wo.preset, "preset word: torus:p,q | delta:n | fulltwist:n");
    cmd->add_option("--file", wo.file, "file holding exactly one 'n: letters' line");
    cmd->add_option("--strands,-n", wo.strands, "strand count (default: max |letter| + 1)");
}

BraidWord resolve_word(const WordOptions& wo) {
    const int sources =
        (wo.tokens.empty() ? 0 : 1) + (wo.preset.empty() ? 0 : 1) + (wo.file.empty() ? 0 : 1);
    if (sources > 1)
        throw std::invalid_argument("give one word source: letters, --preset, or --file");
    if (!wo.preset.empty()) {
        BraidWord b = homfly::parse_preset(wo.preset);
        if (wo.strands > 0) return BraidWord(wo.strands, b.letters());
        return b;
    }
    if (!wo.file.empty()) {
        std::ifstream in(wo.file);
        if (!in) throw std::invalid_argument("cannot open '" + wo.file + "'");
        auto words = homfly::parse_corpus(in);
        if (words.size() != 1)
            throw std::invalid_argument("'" + wo.file + "' holds " +
                                        std::to_string(words.size()) +
                                        " words; this command needs exactly one");
        return words.front();
    }
    std::ostringstream joined;
    for (const auto& t : wo.tokens) joined << t << ' ';
    std::vector<int> letters = homfly::parse_letters(joined.str());
    const int n = wo.strands > 0 ? wo.strands : homfly::infer_strands(letters);
    return BraidWord(n, std::move(letters));
}

struct OutputOptions {
    bool json = false;
    bool table = false;
    bool stats = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& oo, bool with_table = true) {
    auto* j = cmd->add_flag("--json", oo.json, "emit JSON");
    if (with_table) {
        auto* t = cmd->add_flag("--table", oo.table, "emit a coefficient table on the vz-plane");
        j->excludes(t);
    }
    cmd->add_flag("--stats", oo.stats, "append an engine statistics line");
}

struct EngineFlag {
    std::uint64_t node_budget = 0; // 0 = env/default
};

void add_engine_options(CLI::App* cmd, EngineFlag& ef) {
    cmd->add_option("--node-budget", ef.node_budget,
                    "node expansion budget (default 10^7, or HOMFLY_NODE_BUDGET)");
}

EngineOptions make_engine_options(const EngineFlag& ef) {
    EngineOptions opts;
    opts.node_budget = ef.node_budget > 0 ? ef.node_budget : env_node_budget();
    return opts;
}

void print_stats(const EngineStats& st) {
    std::cout << "# stats: nodes_expanded=" << st.nodes_expanded << " memo_hits=" << st.memo_hits
              << " max_depth=" << st.max_depth << "\n";
}

int run_poly(const WordOptions& wo, const OutputOptions& oo, const EngineFlag& ef, bool framed) {
    const BraidWord b = resolve_word(wo);
    SkeinEngine engine(make_engine_options(ef));
    const LPoly p = framed ? engine.compute_H(b) : engine.compute_P(b);
    if (oo.json)
        std::cout << homfly::to_json(p).dump() << "\n";
    else if (oo.table)
        std::cout << homfly::render_table(p);
    else
        std::cout << p.str() << "\n";
    if (oo.stats) print_stats(engine.stats());
    return 0;
}

int run_columns(const WordOptions& wo, const OutputOptions& oo, const EngineFlag& ef) {
    const BraidWord b = resolve_word(wo);
    SkeinEngine engine(make_engine_options(ef));
    const LPoly p = engine.compute_P(b);
    const homfly::MfwBounds bounds = homfly::mfw_bounds(b);
    if (oo.table) {
        std::cout << homfly::render_table(p, std::make_pair(bounds.lower, bounds.upper));
    } else if (oo.json) {
        nlohmann::ordered_json j;
        j["n"] = b.strands();
        j["w"] = homfly::exponent_sum(b);
        j["lower"] = bounds.lower;
        j["upper"] = bounds.upper;
        auto cols = nlohmann::ordered_json::array();
        for (int dv = bounds.lower; dv <= bounds.upper; dv += 2) {
            nlohmann::ordered_json col;
            col["v"] = dv;
            col["col"] = homfly::to_json(homfly::column(p, dv));
            cols.push_back(std::move(col));
        }
        j["columns"] = std::move(cols);
        std::cout << j.dump() << "\n";
    } else {
        // closed-braid polynomials live on one v-parity, so step by 2
        for (int dv = bounds.lower; dv <= bounds.upper; dv += 2)
            std::cout << "v^" << dv << ": " << homfly::column(p, dv).str() << "\n";
    }
    if (oo.stats) print_stats(engine.stats());
    return 0;
}

int run_mfw(const WordOptions& wo, const OutputOptions& oo, const EngineFlag& ef) {
    const BraidWord b = resolve_word(wo);
    SkeinEngine engine(make_engine_options(ef));
    const LPoly p = engine.compute_P(b);
    const homfly::MfwBounds bounds = homfly::mfw_bounds(b);
    const auto [lower_sharp, upper_sharp] = homfly::sharpness(b, p);
    if (oo.json) {
        nlohmann::ordered_json j;
        j["n"] = b.strands();
        j["w"] = homfly::exponent_sum(b);
        j["lower"] = bounds.lower;
        j["upper"] = bounds.upper;
        j["twisted_upper"] = bounds.twisted_upper;
        j["lower_sharp"] = lower_sharp;
        j["upper_sharp"] = upper_sharp;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << b.strands() << " w=" << homfly::exponent_sum(b)
                  << " lower=" << bounds.lower << " upper=" << bounds.upper
                  << " twisted_upper=" << bounds.twisted_upper << " lower_sharp="
                  << (lower_sharp ? "true" : "false")
                  << " upper_sharp=" << (upper_sharp ? "true" : "false") << "\n";
    }
    if (oo.stats) print_stats(engine.stats());
    return 0;
}

int run_twist_check(const WordOptions& wo, const OutputOptions& oo, const EngineFlag& ef,
                    bool negative) {
    const BraidWord b = resolve_word(wo);
    SkeinEngine engine(make_engine_options(ef));
    const homfly::TwistReport r = negative ? homfly::twist_check_negative(b, engine)
                                           : homfly::twist_check_positive(b, engine);
    std::cout << homfly::to_json(r).dump() << "\n";
    if (oo.stats) print_stats(engine.stats());
    return r.identity_holds ? 0 : 1;
}

int run_murakami(int n, bool use_hecke, const OutputOptions& oo, const EngineFlag& ef) {
    homfly::FullTwistTopCheck r;
    EngineStats stats;
    if (use_hecke) {
        r = homfly::murakami_check(n, homfly::PolyRoute::hecke);
    } else {
        SkeinEngine engine(make_engine_options(ef));
        r = homfly::murakami_check(n, engine);
        stats = engine.stats();
    }
    if (oo.json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["route"] = use_hecke ? "hecke" : "skein";
        j["max_v"] = r.max_v;
        j["top_column"] = homfly::to_json(r.top_column);
        j["holds"] = r.holds;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << n << " route=" << (use_hecke ? "hecke" : "skein")
                  << " max_v=" << r.max_v << " top_column=" << r.top_column.str()
                  << " holds=" << (r.holds ? "true" : "false") << "\n";
    }
    if (oo.stats && !use_hecke) print_stats(stats);
    return r.holds ? 0 : 1;
}

int run_oracle_compare(const WordOptions& wo, const OutputOptions& oo, const EngineFlag& ef) {
    const BraidWord b = resolve_word(wo);
    SkeinEngine engine(make_engine_options(ef));
    const LPoly via_skein = engine.compute_P(b);
    const LPoly via_hecke = homfly::compute_P_hecke(b);
    const bool equal = via_skein == via_hecke;
    if (oo.json) {
        nlohmann::ordered_json j;
        j["skein"] = homfly::to_json(via_skein);
        j["hecke"] = homfly::to_json(via_hecke);
        j["equal"] = equal;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "skein: " << via_skein.str() << "\n";
        std::cout << "hecke: " << via_hecke.str() << "\n";
        std::cout << "equal: " << (equal ? "true" : "false") << "\n";
    }
    if (oo.stats) print_stats(engine.stats());
    return equal ? 0 : 1;
}

struct BatchOptions {
    std::string check;
    std::string file;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    bool seed_given = false;
    bool count_given = false;
    int max_n = 4;
    std::size_t max_len = 10;
};

int run_batch(const BatchOptions& bo, const OutputOptions& oo, const EngineFlag& ef) {
    std::vector<BraidWord> words;
    if (!bo.file.empty()) {
        if (bo.seed_given || bo.count_given)
            throw std::invalid_argument("batch: give either --file or --seed/--count, not both");
        std::ifstream in(bo.file);
        if (!in) throw std::invalid_argument("cannot open '" + bo.file + "'");
        words = homfly::parse_corpus(in);
    } else {
        if (!bo.seed_given || !bo.count_given)
            throw std::invalid_argument("batch: need --file, or --seed and --count");
        words = homfly::random_corpus(bo.seed, bo.count, bo.max_n, bo.max_len);
    }

    const EngineOptions opts = make_engine_options(ef);
    EngineStats total;
    std::size_t passed = 0;
    std::optional<std::size_t> first_failure;

    for (std::size_t i = 0; i < words.size(); ++i) {
        const BraidWord& b = words[i];
        SkeinEngine engine(opts);
        bool ok = false;
        if (bo.check == "eq6") {
            const homfly::TwistReport r = homfly::twist_check_positive(b, engine);
            ok = r.identity_holds && (r.lower_sharp == r.upper_twisted_sharp);
        } else if (bo.check == "eq7") {
            ok = homfly::framed_check(b, engine).holds;
        } else if (bo.check == "mfw") {
            const LPoly p = engine.compute_P(b);
            const homfly::MfwBounds bounds = homfly::mfw_bounds(b);
            const auto support = homfly::v_support(p);
            ok = !support ||
                 (support->first >= bounds.lower && support->second <= bounds.upper);
        } else if (bo.check == "mirror") {
            const LPoly direct = engine.compute_P(homfly::mirror(b));
            const LPoly substituted = homfly::mirror_subst(engine.compute_P(b));
            ok = direct == substituted;
        } else if (bo.check == "oracle") {
            ok = engine.compute_P(b) == homfly::compute_P_hecke(b);
        } else {
            throw std::invalid_argument("batch: unknown check '" + bo.check +
                                        "' (eq6, eq7, mfw, mirror, oracle)");
        }
        total.nodes_expanded += engine.stats().nodes_expanded;
        total.memo_hits += engine.stats().memo_hits;
        total.max_depth = std::max(total.max_depth, engine.stats().max_depth);
        if (ok)
            ++passed;
        else if (!first_failure)
            first_failure = i;
    }

    std::cout << passed << "/" << words.size() << " pass\n";
    if (first_failure)
        std::cout << "first failure: " << homfly::corpus_line(words[*first_failure]) << "\n";
    if (oo.stats) print_stats(total);
    return first_failure ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homfly polynomials of closed braids and full-twist column identities"};
    app.require_subcommand(1);

    WordOptions wo;
    OutputOptions oo;
    EngineFlag ef;
    BatchOptions bo;
    bool negative = false;
    bool use_hecke = false;
    int murakami_n = 1;

    std::function<int()> task;

    auto* homfly_cmd = app.add_subcommand("homfly", "P of the closure of a braid word");
    add_word_options(homfly_cmd, wo);
    add_output_options(homfly_cmd, oo);
    add_engine_options(homfly_cmd, ef);
    homfly_cmd->callback([&] { task = [&] { return run_poly(wo, oo, ef, false); }; });

    auto* framed_cmd = app.add_subcommand("framed", "H of the standard closure diagram");
    add_word_options(framed_cmd, wo);
    add_output_options(framed_cmd, oo);
    add_engine_options(framed_cmd, ef);
    framed_cmd->callback([&] { task = [&] { return run_poly(wo, oo, ef, true); }; });

    auto* columns_cmd =
        app.add_subcommand("columns", "columns of P across the v-degree bounds");
    add_word_options(columns_cmd, wo);
    add_output_options(columns_cmd, oo);
    add_engine_options(columns_cmd, ef);
    columns_cmd->callback([&] { task = [&] { return run_columns(wo, oo, ef); }; });

    auto* mfw_cmd = app.add_subcommand("mfw", "v-degree bounds and their sharpness");
    add_word_options(mfw_cmd, wo);
    add_output_options(mfw_cmd, oo, /*with_table=*/false);
    add_engine_options(mfw_cmd, ef);
    mfw_cmd->callback([&] { task = [&] { return run_mfw(wo, oo, ef); }; });

    auto* twist_cmd =
        app.add_subcommand("twist-check", "full-twist column identity report (JSON)");
    add_word_options(twist_cmd, wo);
    twist_cmd->add_flag("--negative", negative, "check the negative-twist variant");
    twist_cmd->add_flag("--stats", oo.stats, "append an engine statistics line");
    add_engine_options(twist_cmd, ef);
    twist_cmd->callback([&] { task = [&] { return run_twist_check(wo, oo, ef, negative); }; });

    auto* murakami_cmd =
        app.add_subcommand("murakami", "highest-term law for the full twist on n strands");
    murakami_cmd->add_option("--n", murakami_n, "strand count")->required();
    murakami_cmd->add_flag("--oracle", use_hecke, "evaluate via the Hecke oracle");
    add_output_options(murakami_cmd, oo, /*with_table=*/false);
    add_engine_options(murakami_cmd, ef);
    murakami_cmd->callback(
        [&] { task = [&] { return run_murakami(murakami_n, use_hecke, oo, ef); }; });

    auto* oracle_cmd =
        app.add_subcommand("oracle-compare", "P via the skein engine against the Hecke oracle");
    add_word_options(oracle_cmd, wo);
    add_output_options(oracle_cmd, oo, /*with_table=*/false);
    add_engine_options(oracle_cmd, ef);
    oracle_cmd->callback([&] { task = [&] { return run_oracle_compare(wo, oo, ef); }; });

    auto* batch_cmd = app.add_subcommand("batch", "run a property check over a corpus");
    batch_cmd->add_option("--check", bo.check, "eq6 | eq7 | mfw | mirror | oracle")->required();
    batch_cmd->add_option("--file", bo.file, "corpus file, one 'n: letters' per line");
    auto* seed_opt = batch_cmd->add_option("--seed", bo.seed, "corpus seed");
    auto* count_opt = batch_cmd->add_option("--count", bo.count, "corpus size");
    batch_cmd->add_option("--max-n", bo.max_n, "max strand count (default 4)");
    batch_cmd->add_option("--max-len", bo.max_len, "max word length (default 10)");
    batch_cmd->add_flag("--stats", oo.stats, "append an aggregate statistics line");
    add_engine_options(batch_cmd, ef);
    batch_cmd->callback([&] {
        bo.seed_given = seed_opt->count() > 0;
        bo.count_given = count_opt->count() > 0;
        task = [&] { return run_batch(bo, oo, ef); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return task ? task() : 2;
    } catch (const homfly::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
