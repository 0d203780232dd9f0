#include "ivagg/network.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ivagg {

WeightedGraph::WeightedGraph(std::vector<std::string> actors)
    : actors_(std::move(actors)), c_(actors_.size() * actors_.size(), 0.0) {}

void WeightedGraph::set_weight(std::size_t x, std::size_t y, double w) {
    if (w < 0.0) throw std::invalid_argument("negative edge weight");
    c_[x * actors_.size() + y] = w;
}

void WeightedGraph::add_weight(std::size_t x, std::size_t y, double w) {
    if (w < 0.0) throw std::invalid_argument("negative edge weight");
    c_[x * actors_.size() + y] += w;
}

double WeightedGraph::row_sum(std::size_t x) const {
    double s = 0.0;
    for (std::size_t y = 0; y < actors_.size(); ++y) s += weight(x, y);
    return s;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

WeightedGraph WeightedGraph::load_edge_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge file " + path);
    struct Edge {
        std::string src, dst;
        double w;
    };
    std::vector<Edge> edges;
    std::set<std::string> names;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = split_csv(line);
        if (first && !f.empty() && f[0] == "src") {
            first = false;
            continue;
        }
        first = false;
        if (f.size() != 3) throw std::runtime_error("edge row needs src,dst,weight");
        double w;
        try {
            w = std::stod(f[2]);
        } catch (const std::exception&) {
            throw std::runtime_error("unparseable edge weight '" + f[2] + "'");
        }
        edges.push_back({f[0], f[1], w});
        names.insert(f[0]);
        names.insert(f[1]);
    }
    WeightedGraph g(std::vector<std::string>(names.begin(), names.end()));
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < g.actors().size(); ++i) index[g.actors()[i]] = i;
    for (const auto& e : edges) g.add_weight(index[e.src], index[e.dst], e.w);
    return g;
}

WeightedGraph WeightedGraph::from_tokens(const std::vector<std::string>& tokens, int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    std::set<std::string> names(tokens.begin(), tokens.end());
    WeightedGraph g(std::vector<std::string>(names.begin(), names.end()));
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < g.actors().size(); ++i) index[g.actors()[i]] = i;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        for (std::size_t j = i + 1; j < tokens.size() && j - i <= static_cast<std::size_t>(window);
             ++j) {
            if (tokens[i] == tokens[j]) continue;
            std::size_t u = index[tokens[i]], v = index[tokens[j]];
            g.add_weight(u, v, 1.0);
            g.add_weight(v, u, 1.0);
        }
    }
    return g;
}

std::vector<std::string> WeightedGraph::load_token_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open token file " + path);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        auto e = line.find_last_not_of(" \t\r");
        if (b == std::string::npos) continue;
        tokens.push_back(line.substr(b, e - b + 1));
    }
    return tokens;
}

double bf_affinity(const WeightedGraph& g, std::size_t x, std::size_t y) {
    double rs = g.row_sum(x);
    if (rs <= 0.0) return 0.0;
    return g.weight(x, y) / rs;
}

double bcf_affinity(const WeightedGraph& g, std::size_t x, std::size_t y) {
    double rs = g.row_sum(x);
    if (rs <= 0.0) return 0.0;
    double best = 0.0;
    for (std::size_t a = 0; a < g.size(); ++a)
        best = std::max(best, std::min(g.weight(x, a), g.weight(y, a)));
    return best / rs;
}

AffinityMatrix compute_affinity(const WeightedGraph& g, AffinityKind kind) {
    AffinityMatrix m;
    m.n = g.size();
    m.values.assign(m.n * m.n, 0.0);
    std::vector<double> rs(m.n);
    for (std::size_t x = 0; x < m.n; ++x) rs[x] = g.row_sum(x);
    for (std::size_t x = 0; x < m.n; ++x) {
        if (rs[x] <= 0.0) {
            m.isolated.push_back(x);
            continue;
        }
        for (std::size_t y = 0; y < m.n; ++y) {
            if (kind == AffinityKind::BestFriend) {
                m.values[x * m.n + y] = g.weight(x, y) / rs[x];
            } else {
                double best = 0.0;
                for (std::size_t a = 0; a < m.n; ++a)
                    best = std::max(best, std::min(g.weight(x, a), g.weight(y, a)));
                m.values[x * m.n + y] = best / rs[x];
            }
        }
    }
    return m;
}

Interval iv_affinity(const AffinityMatrix& f, std::size_t x, std::size_t y) {
    double a = f.at(x, y), b = f.at(y, x);
    return Interval(std::min(a, b), std::max(a, b));
}

namespace {

/// Width of the aggregate min(1, sum_i X_{sigma(i)} (1 - (n-i+1)/n)) over the
/// given relationship intervals, using the scalar cardinality measure on the
/// order-sorted tail sets. Empty input aggregates to 0.
double aggregate_width(const AdmissibleOrder& ord, std::vector<Interval> xs) {
    if (xs.empty()) return 0.0;
    SortResult s = order_sort(ord, xs);
    const std::size_t n = xs.size();
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // Tail set size n - i, cardinality measure (n - i)/n, factor i/n.
        double factor = static_cast<double>(i) / n;
        lo += s.sorted[i].lower() * factor;
        hi += s.sorted[i].upper() * factor;
    }
    lo = std::min(1.0, lo);
    hi = std::min(1.0, hi);
    return hi - lo;
}

}  // namespace

CentralityReport centralities(const WeightedGraph& g, AffinityKind kind,
                              const AdmissibleOrder& ord) {
    AffinityMatrix f = compute_affinity(g, kind);
    CentralityReport report;
    const std::size_t n = g.size();
    report.rows.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        CentralityReport::Row& row = report.rows[x];
        row.actor = g.actors()[x];
        std::vector<Interval> all, altruism, egoism;
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x) continue;
            double out = f.at(x, y), in = f.at(y, x);
            if (out <= 0.0 && in <= 0.0) continue;  // no relationship
            Interval iv = iv_affinity(f, x, y);
            all.push_back(iv);
            if (in <= out) altruism.push_back(iv);  // x gives at least as much as it receives
            if (out <= in) egoism.push_back(iv);
        }
        row.asymmetry = aggregate_width(ord, all);
        row.altruism = aggregate_width(ord, altruism);
        row.egoism = aggregate_width(ord, egoism);
        row.generosity = row.altruism - row.egoism;
    }
    return report;
}

}  // namespace ivagg
