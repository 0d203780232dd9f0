#ifndef IVAGG_MEASURE_HPP
#define IVAGG_MEASURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivagg/interval.hpp"
#include "ivagg/order.hpp"

namespace ivagg {

using SubsetMask = std::uint32_t;

/// Interval-valued fuzzy measure on subsets of {1..n}, n <= 24 for explicit
/// tables. Subsets are bitmasks: bit i-1 set means element i is present.
class IvFuzzyMeasure {
public:
    enum class Family { Cardinality, PowerP, ExplicitTable };

    static IvFuzzyMeasure cardinality(int n);
    static IvFuzzyMeasure power(int n, double p);
    /// Table must have 2^n entries indexed by mask.
    static IvFuzzyMeasure table(int n, std::vector<Interval> values);
    /// Loads a table from CSV with columns subset (bitstring, leftmost char
    /// is element 1), lower, upper.
    static IvFuzzyMeasure load_csv(const std::string& path);

    int n() const { return n_; }
    Family family() const { return family_; }
    SubsetMask full_mask() const { return (SubsetMask{1} << n_) - 1; }

    Interval at(SubsetMask mask) const;
    /// Scalar value for degenerate-valued measures; midpoint otherwise.
    double scalar_at(SubsetMask mask) const { return at(mask).lower(); }

    bool degenerate_valued() const;

    struct ValidationResult {
        bool ok = true;
        std::string message;                                  // empty when ok
        std::optional<std::pair<SubsetMask, SubsetMask>> witness;  // violating pair
    };

    /// Checks boundary conditions and monotonicity under the order. Only
    /// covering pairs A vs A+{i} are tested; transitivity covers the rest.
    ValidationResult validate(const AdmissibleOrder& ord) const;

    struct SymmetryReport {
        bool symmetric = true;
        std::optional<std::pair<SubsetMask, SubsetMask>> witness;
    };

    SymmetryReport is_symmetric() const;

private:
    IvFuzzyMeasure(Family f, int n, double p, std::vector<Interval> values)
        : family_(f), n_(n), p_(p), values_(std::move(values)) {}

    Family family_;
    int n_;
    double p_ = 1.0;
    std::vector<Interval> values_;  // used by ExplicitTable only
};

}  // namespace ivagg

#endif  // IVAGG_MEASURE_HPP
