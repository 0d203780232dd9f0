#ifndef IVAGG_NETWORK_HPP
#define IVAGG_NETWORK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ivagg/interval.hpp"
#include "ivagg/order.hpp"

namespace ivagg {

/// Weighted digraph over string-named actors; dense adjacency.
class WeightedGraph {
public:
    explicit WeightedGraph(std::vector<std::string> actors);

    static WeightedGraph load_edge_csv(const std::string& path);
    /// Undirected co-occurrence counts: one edge per token position pair at
    /// distance <= window, self-pairs excluded.
    static WeightedGraph from_tokens(const std::vector<std::string>& tokens, int window);
    static std::vector<std::string> load_token_file(const std::string& path);

    std::size_t size() const { return actors_.size(); }
    const std::vector<std::string>& actors() const { return actors_; }
    double weight(std::size_t x, std::size_t y) const { return c_[x * actors_.size() + y]; }
    void set_weight(std::size_t x, std::size_t y, double w);
    void add_weight(std::size_t x, std::size_t y, double w);
    double row_sum(std::size_t x) const;

private:
    std::vector<std::string> actors_;
    std::vector<double> c_;
};

enum class AffinityKind { BestFriend, BestCommonFriend };

/// Directed affinity matrix F_C(x,y) in [0,1]. Rows of isolated actors
/// (zero row sum) are defined as 0 and reported.
struct AffinityMatrix {
    std::size_t n = 0;
    std::vector<double> values;  // row-major
    std::vector<std::size_t> isolated;

    double at(std::size_t x, std::size_t y) const { return values[x * n + y]; }
};

AffinityMatrix compute_affinity(const WeightedGraph& g, AffinityKind kind);

double bf_affinity(const WeightedGraph& g, std::size_t x, std::size_t y);
double bcf_affinity(const WeightedGraph& g, std::size_t x, std::size_t y);

/// Symmetric interval [min, max] of the two directed affinities.
Interval iv_affinity(const AffinityMatrix& f, std::size_t x, std::size_t y);

struct CentralityReport {
    struct Row {
        std::string actor;
        double asymmetry = 0.0;
        double altruism = 0.0;
        double egoism = 0.0;
        double generosity = 0.0;  // altruism - egoism
    };
    std::vector<Row> rows;
};

/// Asymmetry/altruism/egoism/generosity per actor, each the width of an
/// IV-Sugeno aggregate with F(X,y) = X(1-y), G = min(1, sum) and the scalar
/// cardinality measure; arity adapts to the aggregated relationship set.
/// An actor whose aggregation set is empty gets value 0.
CentralityReport centralities(const WeightedGraph& g, AffinityKind kind,
                              const AdmissibleOrder& ord);

}  // namespace ivagg

#endif  // IVAGG_NETWORK_HPP
