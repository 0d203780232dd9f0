// Command-line front end: aggregate / check / fuse / network.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivagg/fg.hpp"
#include "ivagg/fusion.hpp"
#include "ivagg/interval.hpp"
#include "ivagg/measure.hpp"
#include "ivagg/miv.hpp"
#include "ivagg/network.hpp"
#include "ivagg/order.hpp"

using json = nlohmann::json;
using namespace ivagg;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitProperty = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Round-trips through the 12-digit text form so JSON numbers match the
// plain-text output precision.
double fmt_num(double v) { return std::stod(fmt(v)); }

std::string fmt_interval(const Interval& x) {
    return "[" + fmt(x.lower()) + "," + fmt(x.upper()) + "]";
}

// ---- flat key=value config with flag override -------------------------------

std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

struct Settings {
    std::string config_path;
    std::string order = "xy";
    std::string measure = "cardinality";
    std::string f = "meet";
    std::string g = "max";
    std::string preset;
    double alpha = 0.5;
    std::uint64_t seed = 20240901;
    bool json_out = false;

    std::map<std::string, std::string> file;

    // Config value wins over the built-in default; a flag passed on the
    // command line wins over the config.
    void absorb(const CLI::App& cmd) {
        if (!config_path.empty()) file = load_config(config_path);
        auto take = [&](const std::string& key, auto& slot) {
            auto it = file.find(key);
            if (it == file.end()) return;
            const CLI::Option* opt = cmd.get_option_no_throw("--" + key);
            if (opt && opt->count() > 0) return;  // explicit flag overrides
            std::istringstream ss(it->second);
            ss >> slot;
            if (ss.fail()) throw ConfigError("bad config value for " + key);
        };
        take("order", order);
        take("measure", measure);
        take("f", f);
        take("g", g);
        take("preset", preset);
        take("alpha", alpha);
        take("seed", seed);
    }

    std::string config_value(const std::string& key, const std::string& fallback) const {
        auto it = file.find(key);
        return it == file.end() ? fallback : it->second;
    }
};

AdmissibleOrder parse_order(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (head == "xy") return AdmissibleOrder::xu_yager();
        if (head == "lex1") return AdmissibleOrder::lex1();
        if (head == "lex2") return AdmissibleOrder::lex2();
        if (head == "alpha-beta" || head == "ab") {
            auto comma = args.find(',');
            if (comma == std::string::npos)
                throw ConfigError("alpha-beta order needs alpha,beta");
            return AdmissibleOrder::alpha_beta(std::stod(args.substr(0, comma)),
                                               std::stod(args.substr(comma + 1)));
        }
        if (head == "alpha-plus") return AdmissibleOrder::alpha_plus(std::stod(args));
        if (head == "alpha-minus") return AdmissibleOrder::alpha_minus(std::stod(args));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad order spec '") + spec + "': " + e.what());
    }
    throw ConfigError("unknown order '" + spec + "'");
}

IvFuzzyMeasure parse_measure(const std::string& spec, int n) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (head == "cardinality") return IvFuzzyMeasure::cardinality(n);
        if (head == "power") return IvFuzzyMeasure::power(n, std::stod(args));
        if (head == "table") {
            IvFuzzyMeasure m = IvFuzzyMeasure::load_csv(args);
            if (m.n() != n)
                throw ConfigError("table measure arity " + std::to_string(m.n()) +
                                  " does not match input arity " + std::to_string(n));
            return m;
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("bad measure spec '" + spec + "': " + e.what());
    }
    throw ConfigError("unknown measure '" + spec + "'");
}

PresetF parse_f(const std::string& spec, double alpha) {
    if (spec == "meet") return PresetF::meet();
    if (spec == "sugeno1") return PresetF::sugeno1();
    if (spec == "sugeno2") return PresetF::sugeno2();
    if (spec == "sna") return PresetF::sna();
    if (spec.rfind("miv", 0) == 0) {
        std::string which = spec.size() > 4 ? spec.substr(4) : "";
        for (auto& p : miv_preset_catalog(alpha))
            if (p.name == "(" + which + ")" || p.name == which) return PresetF::miv_f(p.spec);
        throw ConfigError("unknown construction preset '" + spec + "' (use miv:i .. miv:v)");
    }
    throw ConfigError("unknown F preset '" + spec + "'");
}

PresetG parse_g(const std::string& spec) {
    if (spec == "max") return PresetG::order_max();
    if (spec == "mean") return PresetG::mean();
    if (spec == "capped-sum") return PresetG::capped_sum();
    if (spec == "proj1") return PresetG::proj1();
    if (spec == "square-max") return PresetG::square_max();
    if (spec == "sqrt-max") return PresetG::sqrt_max();
    throw ConfigError("unknown G preset '" + spec + "'");
}

void apply_preset(Settings& s) {
    if (s.preset.empty()) return;
    if (s.preset == "iv-sugeno1") {
        s.f = "sugeno1";
        s.g = "mean";
    } else if (s.preset == "iv-sugeno2") {
        s.f = "sugeno2";
        s.g = "mean";
    } else if (s.preset == "iv-sugeno3") {
        s.f = "meet";
        s.g = "max";
    } else {
        throw ConfigError("unknown preset '" + s.preset + "'");
    }
}

FGFunctional build_functional(const Settings& s, int n) {
    AdmissibleOrder ord = parse_order(s.order);
    IvFuzzyMeasure m = parse_measure(s.measure, n);
    PresetF f = parse_f(s.f, s.alpha);
    PresetG g = parse_g(s.g);
    try {
        return FGFunctional::make(std::move(m), ord, std::move(f), g);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::vector<Interval> parse_interval_list(const std::string& text) {
    std::vector<Interval> out;
    std::size_t pos = 0;
    while ((pos = text.find('[', pos)) != std::string::npos) {
        auto end = text.find(']', pos);
        if (end == std::string::npos) throw DataError("unterminated interval in input");
        out.push_back(parse_interval(text.substr(pos, end - pos + 1)));
        pos = end + 1;
    }
    if (out.empty()) throw DataError("no intervals found in input");
    return out;
}

// ---- subcommands -------------------------------------------------------------

int cmd_aggregate(Settings& s, const std::string& input_path,
                  const std::vector<std::string>& inline_intervals, bool trace) {
    std::string text;
    if (!inline_intervals.empty()) {
        for (const auto& t : inline_intervals) text += t + " ";
    } else if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) throw DataError("cannot open input file " + input_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    std::vector<Interval> xs;
    try {
        xs = parse_interval_list(text);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
    FGFunctional fg = build_functional(s, static_cast<int>(xs.size()));
    if (!trace) {
        Interval r = fg.evaluate(xs);
        if (s.json_out) {
            json j;
            j["result"] = fmt_interval(r);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << fmt_interval(r) << "\n";
        }
        return 0;
    }
    FGFunctional::Trace t = fg.evaluate_traced(xs);
    if (s.json_out) {
        json j;
        for (std::size_t i = 0; i < t.sigma.size(); ++i) {
            j["sigma"].push_back(t.sigma[i] + 1);
            j["sorted"].push_back(fmt_interval(t.sorted[i]));
            j["measure"].push_back(fmt_interval(t.measure_values[i]));
            j["f_terms"].push_back(fmt_interval(t.f_terms[i]));
        }
        j["result"] = fmt_interval(t.result);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "sigma:";
        for (auto i : t.sigma) std::cout << " " << i + 1;
        std::cout << "\n";
        for (std::size_t i = 0; i < t.sigma.size(); ++i)
            std::cout << "term " << i + 1 << ": x=" << fmt_interval(t.sorted[i])
                      << " m=" << fmt_interval(t.measure_values[i])
                      << " F=" << fmt_interval(t.f_terms[i]) << "\n";
        std::cout << fmt_interval(t.result) << "\n";
    }
    return 0;
}

int cmd_check(Settings& s, int n, int samples, int probes) {
    AdmissibleOrder ord = parse_order(s.order);
    IvFuzzyMeasure m = parse_measure(s.measure, n);
    PresetF f = parse_f(s.f, s.alpha);
    PresetG g = parse_g(s.g);

    WdsResult wds = wds_check(m, f, g, ord, probes, s.seed);
    json j;
    j["wds"]["pass"] = wds.pass;
    j["wds"]["detail"] = wds.describe();
    if (!s.json_out) std::cout << wds.describe() << "\n";
    bool expected_failure = false;
    if (wds.pass) {
        FGFunctional fg = FGFunctional::make(std::move(m), ord, f, g, probes);
        for (const auto& v : property_suite(fg, samples, s.seed)) {
            json row;
            row["property"] = v.property;
            row["expected"] = v.expected;
            row["observed"] = v.observed;
            if (!v.counterexample.empty()) row["counterexample"] = v.counterexample;
            j["properties"].push_back(row);
            if (v.expected && !v.observed) expected_failure = true;
            if (!s.json_out)
                std::cout << v.property << ": expected " << (v.expected ? "pass" : "open")
                          << ", observed " << (v.observed ? "pass" : "fail")
                          << (v.counterexample.empty() ? "" : "  [" + v.counterexample + "]")
                          << "\n";
        }
        if (f.kind == PresetF::Kind::Miv) {
            for (const auto& v : miv_property_suite(*f.miv, samples, s.seed)) {
                json row;
                row["clause"] = v.clause;
                row["applicable"] = v.applicable;
                row["expected"] = v.expected;
                row["observed"] = v.observed;
                if (!v.counterexample.empty()) row["counterexample"] = v.counterexample;
                j["construction"].push_back(row);
                if (v.applicable && v.expected && !v.observed) expected_failure = true;
                if (!s.json_out)
                    std::cout << "construction " << v.clause << ": "
                              << (!v.applicable     ? "n/a"
                                  : v.expected      ? (v.observed ? "pass" : "FAIL")
                                  : v.observed      ? "holds (not guaranteed)"
                                                    : "fails (not guaranteed)")
                              << (v.counterexample.empty() ? ""
                                                           : "  [" + v.counterexample + "]")
                              << "\n";
            }
        }
    }
    if (s.json_out) std::cout << j.dump() << "\n";
    return expected_failure ? kExitProperty : 0;
}

int cmd_fuse(Settings& s, const std::string& scores, const std::string& labels, int k,
             double fraction, int threads, bool rescale, const std::string& decisions_path) {
    ScoreTable table;
    try {
        table = ScoreTable::load_csv(scores, labels);
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }
    if (rescale) table.rescale_per_trial();
    IntervalLogits logits;
    try {
        logits = build_interval_logits(table);
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }
    FGFunctional fg = build_functional(s, static_cast<int>(logits.bands.size()));
    AdmissibleOrder ord = parse_order(s.order);
    Decisions d = fuse_and_decide(logits, fg, ord, threads);
    std::vector<Partition> parts =
        k > 0 ? make_partitions(d.trials, k, fraction, s.seed) : std::vector<Partition>{};
    FusionReport report;
    try {
        report = evaluate(d, table.labels, parts);
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }
    json j;
    j["accuracy"] = fmt_num(report.accuracy);
    j["f1"] = fmt_num(report.f1);
    for (double a : report.partition_accuracy) j["partition_accuracy"].push_back(fmt_num(a));
    for (double f : report.partition_f1) j["partition_f1"].push_back(fmt_num(f));
    std::cout << j.dump() << "\n";
    if (!decisions_path.empty()) {
        std::ofstream out(decisions_path);
        out << "trial_id,decision\n";
        for (const auto& t : d.trials) out << t << "," << d.decided.at(t) << "\n";
    }
    return 0;
}

int cmd_network(Settings& s, const std::string& edges, const std::string& tokens, int window,
                const std::string& affinity) {
    std::optional<WeightedGraph> g;
    try {
        if (!edges.empty())
            g = WeightedGraph::load_edge_csv(edges);
        else if (!tokens.empty())
            g = WeightedGraph::from_tokens(WeightedGraph::load_token_file(tokens), window);
        else
            throw ConfigError("network needs --edges or --tokens");
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }
    AffinityKind kind;
    if (affinity == "bf")
        kind = AffinityKind::BestFriend;
    else if (affinity == "bcf")
        kind = AffinityKind::BestCommonFriend;
    else
        throw ConfigError("affinity must be bf or bcf");
    AdmissibleOrder ord = parse_order(s.order);
    CentralityReport report = centralities(*g, kind, ord);
    if (s.json_out) {
        json j;
        AffinityMatrix f = compute_affinity(*g, kind);
        for (const auto& row : report.rows) {
            json r;
            r["actor"] = row.actor;
            r["asymmetry"] = fmt_num(row.asymmetry);
            r["altruism"] = fmt_num(row.altruism);
            r["egoism"] = fmt_num(row.egoism);
            r["generosity"] = fmt_num(row.generosity);
            j["centralities"].push_back(r);
        }
        for (std::size_t x = 0; x < g->size(); ++x)
            for (std::size_t y = 0; y < g->size(); ++y)
                if (g->weight(x, y) > 0.0) {
                    json e;
                    e["src"] = g->actors()[x];
                    e["dst"] = g->actors()[y];
                    e["weight"] = fmt_num(g->weight(x, y));
                    j["edges"].push_back(e);
                }
        for (std::size_t x = 0; x < g->size(); ++x)
            for (std::size_t y = x + 1; y < g->size(); ++y) {
                Interval iv = iv_affinity(f, x, y);
                if (iv.upper() <= 0.0) continue;
                json e;
                e["pair"] = g->actors()[x] + "|" + g->actors()[y];
                e["affinity"] = fmt_interval(iv);
                j["iv_affinity"].push_back(e);
            }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "actor,asymmetry,altruism,egoism,generosity\n";
        for (const auto& row : report.rows)
            std::cout << row.actor << "," << fmt(row.asymmetry) << "," << fmt(row.altruism)
                      << "," << fmt(row.egoism) << "," << fmt(row.generosity) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-valued Sugeno-like aggregation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_option("--config", s.config_path, "flat key=value config file");
    app.add_option("--order", s.order, "xy | lex1 | lex2 | alpha-beta:A,B | alpha-plus:A | alpha-minus:A");
    app.add_option("--measure", s.measure, "cardinality | power:P | table:FILE");
    app.add_option("--f", s.f, "meet | sugeno1 | sugeno2 | sna | miv:i..miv:v");
    app.add_option("--g", s.g, "max | mean | capped-sum | proj1 | square-max | sqrt-max");
    app.add_option("--preset", s.preset, "iv-sugeno1 | iv-sugeno2 | iv-sugeno3");
    app.add_option("--alpha", s.alpha, "alpha for the miv construction presets");
    app.add_option("--seed", s.seed, "random seed");
    app.add_flag("--json", s.json_out, "machine-readable output");

    auto* agg = app.add_subcommand("aggregate", "evaluate the functional on an interval vector");
    std::string input_path;
    bool trace = false;
    agg->add_option("--input", input_path, "file with intervals like [0.1,0.2] [0.5,0.7]");
    agg->add_flag("--trace", trace, "print sigma, measure values and F terms");
    // Inline intervals arrive as leftover arguments: a vector option would let
    // the flag parser strip the brackets.
    agg->allow_extras();
    app.allow_extras();

    auto* chk = app.add_subcommand("check", "property report: expected vs observed");
    int n = 3, samples = 1000, probes = 2000;
    chk->add_option("--n", n, "arity for the sampled checks");
    chk->add_option("--samples", samples, "samples per property");
    chk->add_option("--probes", probes, "randomized WDS probes");

    auto* fuse = app.add_subcommand("fuse", "ensemble score fusion");
    std::string scores, labels, decisions_path;
    int partitions = 0, threads = 1;
    double fraction = 0.5;
    bool rescale = false;
    fuse->add_option("--scores", scores, "scores CSV")->required();
    fuse->add_option("--labels", labels, "labels CSV")->required();
    fuse->add_option("--partitions", partitions, "number of random splits (0 = whole set)");
    fuse->add_option("--test-fraction", fraction, "test fraction per split");
    fuse->add_option("--threads", threads, "worker threads");
    fuse->add_option("--decisions", decisions_path, "write per-trial decisions CSV here");
    fuse->add_flag("--rescale", rescale, "per-trial min-max rescaling of scores");

    auto* net = app.add_subcommand("network", "affinity and centrality pipeline");
    std::string edges, tokens, affinity = "bf";
    int window = 10;
    net->add_option("--edges", edges, "edge-list CSV src,dst,weight");
    net->add_option("--tokens", tokens, "token file, one per line");
    net->add_option("--window", window, "co-occurrence window");
    net->add_option("--affinity", affinity, "bf | bcf");

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<std::string> leftover = app.remaining(true);
        if (!agg->parsed() && !leftover.empty())
            throw ConfigError("unexpected argument '" + leftover.front() + "'");
        s.absorb(app);
        apply_preset(s);
        if (agg->parsed()) return cmd_aggregate(s, input_path, leftover, trace);
        if (chk->parsed()) return cmd_check(s, n, samples, probes);
        if (fuse->parsed())
            return cmd_fuse(s, scores, labels, partitions, fraction, threads, rescale,
                            decisions_path);
        if (net->parsed()) return cmd_network(s, edges, tokens, window, affinity);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const OutOfRangeError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const InvertedError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
