#ifndef IVAGG_MIV_HPP
#define IVAGG_MIV_HPP

#include <optional>
#include <string>
#include <vector>

#include "ivagg/interval.hpp"

namespace ivagg {

/// Scalar aggregation tag usable as M1 or M2 in the K_alpha/lambda_alpha
/// construction. Tags (not opaque callables) let the property suite derive
/// expected verdicts structurally.
struct ScalarAgg {
    enum class Kind { Product, HamacherProduct, ConvexCombo, Minimum };

    Kind kind = Kind::Product;
    double param = 0.0;  // gamma for Hamacher, a for ConvexCombo

    static ScalarAgg product() { return {Kind::Product, 0.0}; }
    static ScalarAgg hamacher(double gamma) { return {Kind::HamacherProduct, gamma}; }
    static ScalarAgg convex(double a) { return {Kind::ConvexCombo, a}; }
    static ScalarAgg minimum() { return {Kind::Minimum, 0.0}; }

    double apply(double x, double y) const;
    /// Left-fold extension; valid for associative tags only.
    double apply(const std::vector<double>& xs) const;

    bool associative() const { return kind != Kind::ConvexCombo; }
    bool symmetric() const { return kind != Kind::ConvexCombo || param == 0.5; }
    /// M(0, y) = 0 for all y.
    bool zero_annihilator() const {
        return kind == Kind::Product || kind == Kind::HamacherProduct || kind == Kind::Minimum;
    }
    /// M(c, 1) = c for all c.
    bool one_neutral() const {
        return kind == Kind::Product || kind == Kind::HamacherProduct || kind == Kind::Minimum;
    }
    /// Strictly increasing where the value lies in (0,1).
    bool strictly_increasing_interior() const { return kind != Kind::Minimum; }

    std::string name() const;
};

/// Specification of an M_IV-constructed interval function: apply M1 to the
/// K_alpha keys and M2 to the relative widths, then rebuild the interval.
class MivSpec {
public:
    MivSpec(double alpha, ScalarAgg m1, ScalarAgg m2);

    double alpha() const { return alpha_; }
    const ScalarAgg& m1() const { return m1_; }
    const ScalarAgg& m2() const { return m2_; }

    Interval apply(const Interval& x, const Interval& y) const;
    Interval apply(const std::vector<Interval>& xs) const;

    std::string name() const;

private:
    double alpha_;
    ScalarAgg m1_;
    ScalarAgg m2_;
};

struct MivPreset {
    std::string name;  // "(i)" .. "(v)"
    MivSpec spec;
};

/// The five construction presets, with default parameters alpha = 0.5,
/// a1 = a2 = 0.5, Hamacher gamma = 0.
std::vector<MivPreset> miv_preset_catalog(double alpha = 0.5, double a1 = 0.5,
                                          double a2 = 0.5, double gamma = 0.0);

struct MivPropertyVerdict {
    std::string clause;      // "(i)" .. "(ix)"
    bool applicable = true;  // some clauses are binary-only
    bool expected = false;   // derived structurally from the tags
    bool observed = false;
    std::string counterexample;  // empty when observed
};

/// Sampled verification of the construction's preservation clauses.
std::vector<MivPropertyVerdict> miv_property_suite(const MivSpec& spec, int samples,
                                                   std::uint64_t seed);

}  // namespace ivagg

#endif  // IVAGG_MIV_HPP
