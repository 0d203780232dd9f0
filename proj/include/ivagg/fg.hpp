#ifndef IVAGG_FG_HPP
#define IVAGG_FG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ivagg/interval.hpp"
#include "ivagg/measure.hpp"
#include "ivagg/miv.hpp"
#include "ivagg/order.hpp"

namespace ivagg {

struct EmptyInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LengthMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonSymmetricMeasureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Discrete Sugeno integral: max_i min(x_{sigma(i)}, mu(E_{sigma(i)})).
/// Brute-force oracle for the interval functional on degenerate inputs.
double scalar_sugeno(const std::function<double(SubsetMask)>& mu, const std::vector<double>& x);
double scalar_sugeno(const IvFuzzyMeasure& m, const std::vector<double>& x);

/// Scalar Sugeno-like FG-functional; requires a symmetric measure.
double scalar_fg(const IvFuzzyMeasure& m, const std::function<double(double, double)>& f,
                 const std::function<double(const std::vector<double>&)>& g,
                 const std::vector<double>& x);

/// The binary F of the functional: first argument is the input interval,
/// second the measure value. Scalar-defined presets act on intervals through
/// their monotone natural extension, which is exact on degenerate inputs.
struct PresetF {
    enum class Kind {
        Meet,     // lattice meet under the order
        Sugeno1,  // X^2 Y + X (1 - Y)
        Sugeno2,  // X (1 - Y)
        Sna,      // X (1 - y) with scalar y; requires a degenerate-valued measure
        Miv,      // M_IV-constructed binary function
    };

    Kind kind = Kind::Meet;
    std::optional<MivSpec> miv;

    static PresetF meet() { return {Kind::Meet, std::nullopt}; }
    static PresetF sugeno1() { return {Kind::Sugeno1, std::nullopt}; }
    static PresetF sugeno2() { return {Kind::Sugeno2, std::nullopt}; }
    static PresetF sna() { return {Kind::Sna, std::nullopt}; }
    static PresetF miv_f(MivSpec spec) { return {Kind::Miv, std::move(spec)}; }

    Interval apply(const AdmissibleOrder& ord, const Interval& x, const Interval& y) const;

    // Structural traits feeding the WDS check and the expected verdicts of
    // the property suite. "ord" matters only for the Miv kind, whose
    // monotonicity guarantee is tied to orders with the construction's alpha.
    bool annihilator_zero() const;                        // F(0,Y) = 0 for all Y
    bool f_one_one_is_one() const;                        // F(1,1) = 1
    bool f_one_any_is_one() const;                        // F(1,Y) = 1 for all Y
    bool neutral_one() const;                             // F(X,1) = X
    bool f_zero_one_is_zero() const;                      // F(0,1) = 0
    bool nondecreasing_second(const AdmissibleOrder& ord) const;
    bool nondecreasing_first() const;                     // w.r.t. <=_spo
    bool pos_homogeneous_first() const;                   // F(cX,y) = cF(X,y)
    bool min_homogeneous_first() const;
    bool comonotone_maxitive_first() const;

    std::string name() const;
};

/// The n-ary G of the functional.
struct PresetG {
    enum class Kind {
        OrderMax,   // lattice join fold
        Mean,       // endpoint-wise arithmetic mean
        CappedSum,  // min(1, sum X_i), endpoint-wise
        Proj1,      // first term
        SquareMax,  // (join)^2
        SqrtMax,    // sqrt(join)
    };

    Kind kind = Kind::OrderMax;

    static PresetG order_max() { return {Kind::OrderMax}; }
    static PresetG mean() { return {Kind::Mean}; }
    static PresetG capped_sum() { return {Kind::CappedSum}; }
    static PresetG proj1() { return {Kind::Proj1}; }
    static PresetG square_max() { return {Kind::SquareMax}; }
    static PresetG sqrt_max() { return {Kind::SqrtMax}; }

    Interval apply(const AdmissibleOrder& ord, const std::vector<Interval>& terms) const;

    bool vee_family() const {
        return kind == Kind::OrderMax || kind == Kind::SquareMax || kind == Kind::SqrtMax;
    }
    bool proj_family() const { return kind == Kind::Proj1; }
    bool inner_f_identity() const { return kind == Kind::OrderMax || kind == Kind::Proj1; }
    bool idempotent() const {
        return kind == Kind::OrderMax || kind == Kind::Mean || kind == Kind::Proj1;
    }
    bool boundary_zero() const { return true; }  // all presets map (0..0) to 0
    bool boundary_one() const { return true; }   // and (1..1) to 1
    bool nondecreasing_spo() const { return true; }
    bool pos_homogeneous() const {
        return kind == Kind::OrderMax || kind == Kind::Mean || kind == Kind::Proj1;
    }
    // Endpoint clipping by a scalar does not commute with the join's argument
    // selection, so OrderMax is excluded here.
    bool min_homogeneous() const { return kind == Kind::Proj1; }
    bool comonotone_maxitive() const { return kind == Kind::OrderMax || kind == Kind::Proj1; }

    std::string name() const;
};

struct WdsResult {
    bool pass = true;
    bool structural = false;   // true when a Prop.-shape applied, no sampling needed
    std::string rule;          // which structural shape, or "randomized"
    // Populated on failure:
    std::vector<Interval> witness;
    std::vector<std::size_t> sigma1, sigma2;
    Interval value1, value2;

    std::string describe() const;
};

/// Structural pass for the three well-definedness shapes (symmetric measure;
/// G in the Proj1 family; F nondecreasing in the measure with G in the join
/// family), otherwise a randomized search over tied inputs and all
/// permutations consistent with the order.
WdsResult wds_check(const IvFuzzyMeasure& m, const PresetF& f, const PresetG& g,
                    const AdmissibleOrder& ord, int probes, std::uint64_t seed = 20240901);

/// Randomized tie probing only, skipping the structural shortcut; used to
/// corroborate the structural shapes by sampling.
WdsResult wds_probe_randomized(const IvFuzzyMeasure& m, const PresetF& f, const PresetG& g,
                               const AdmissibleOrder& ord, int probes,
                               std::uint64_t seed = 20240901);

/// An evaluable (measure, F, G, order) bundle.
class FGFunctional {
public:
    /// Validates WDS (structural + the given probe budget) and throws
    /// std::invalid_argument with the witness when it fails.
    static FGFunctional make(IvFuzzyMeasure m, AdmissibleOrder ord, PresetF f, PresetG g,
                             int wds_probes = 2000);
    /// Skips the WDS gate; evaluation uses the canonical stable-sort sigma
    /// and is deterministic but implementation-defined on ties.
    static FGFunctional make_acknowledged_non_wds(IvFuzzyMeasure m, AdmissibleOrder ord,
                                                  PresetF f, PresetG g);

    Interval evaluate(const std::vector<Interval>& xs) const;

    const IvFuzzyMeasure& measure() const { return m_; }
    const AdmissibleOrder& order() const { return ord_; }
    const PresetF& f() const { return f_; }
    const PresetG& g() const { return g_; }
    bool wds_acknowledged() const { return acknowledged_; }

    /// Per-term evaluation trace used by the CLI.
    struct Trace {
        std::vector<std::size_t> sigma;
        std::vector<Interval> sorted;
        std::vector<Interval> measure_values;
        std::vector<Interval> f_terms;
        Interval result;
    };
    Trace evaluate_traced(const std::vector<Interval>& xs) const;

private:
    FGFunctional(IvFuzzyMeasure m, AdmissibleOrder ord, PresetF f, PresetG g, bool ack)
        : m_(std::move(m)), ord_(ord), f_(std::move(f)), g_(g), acknowledged_(ack) {}

    IvFuzzyMeasure m_;
    AdmissibleOrder ord_;
    PresetF f_;
    PresetG g_;
    bool acknowledged_;
};

struct PropertyVerdict {
    std::string property;
    bool expected = false;  // guaranteed by a matched sufficient condition
    bool observed = false;  // sampled verdict
    std::string counterexample;
};

/// Sampled check of boundary conditions, monotonicity, idempotency,
/// internality, positive and min-homogeneity, comonotone maxitivity and the
/// giving-back property, with expected verdicts derived from the preset tags.
std::vector<PropertyVerdict> property_suite(const FGFunctional& fg, int samples,
                                            std::uint64_t seed);

/// Random IV fuzzy measure, monotone w.r.t. the order by construction.
IvFuzzyMeasure random_iv_measure(int n, const AdmissibleOrder& ord, std::uint64_t seed);

}  // namespace ivagg

#endif  // IVAGG_FG_HPP
