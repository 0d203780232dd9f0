#ifndef IVAGG_ORDER_HPP
#define IVAGG_ORDER_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ivagg/interval.hpp"

namespace ivagg {

enum class Ordering { Less, Equal, Greater };

/// Admissible total order on L([0,1]) from the K_alpha/K_beta family.
/// Every named variant is realized by a canonical (alpha, beta) pair:
/// Xu-Yager = (0.5, 1), Lex1 = (0, 1), Lex2 = (1, 0),
/// AlphaPlus(a) = (a, 1), AlphaMinus(a) = (a, 0).
class AdmissibleOrder {
public:
    enum class Kind { XuYager, Lex1, Lex2, AlphaBeta, AlphaPlus, AlphaMinus };

    static AdmissibleOrder xu_yager() { return {Kind::XuYager, 0.5, 1.0}; }
    static AdmissibleOrder lex1() { return {Kind::Lex1, 0.0, 1.0}; }
    static AdmissibleOrder lex2() { return {Kind::Lex2, 1.0, 0.0}; }

    static AdmissibleOrder alpha_beta(double alpha, double beta) {
        check01(alpha, "alpha");
        check01(beta, "beta");
        if (alpha == beta) throw std::invalid_argument("alpha_beta requires alpha != beta");
        return {Kind::AlphaBeta, alpha, beta};
    }

    static AdmissibleOrder alpha_plus(double alpha) {
        check01(alpha, "alpha");
        if (alpha >= 1.0) throw std::invalid_argument("alpha_plus requires alpha < 1");
        return {Kind::AlphaPlus, alpha, 1.0};
    }

    static AdmissibleOrder alpha_minus(double alpha) {
        check01(alpha, "alpha");
        if (alpha <= 0.0) throw std::invalid_argument("alpha_minus requires alpha > 0");
        return {Kind::AlphaMinus, alpha, 0.0};
    }

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    /// Comparison keys are rounded to 12 decimals so sorting is deterministic
    /// across platforms.
    static double round_key(double v) { return std::nearbyint(v * 1e12) / 1e12; }

    Ordering compare(const Interval& x, const Interval& y) const {
        double kx = round_key(k_alpha(alpha_, x));
        double ky = round_key(k_alpha(alpha_, y));
        if (kx < ky) return Ordering::Less;
        if (kx > ky) return Ordering::Greater;
        double bx = round_key(k_alpha(beta_, x));
        double by = round_key(k_alpha(beta_, y));
        if (bx < by) return Ordering::Less;
        if (bx > by) return Ordering::Greater;
        return Ordering::Equal;
    }

    bool leq(const Interval& x, const Interval& y) const {
        return compare(x, y) != Ordering::Greater;
    }
    bool lt(const Interval& x, const Interval& y) const {
        return compare(x, y) == Ordering::Less;
    }

    /// Lattice meet: returns one of the arguments, never mixes endpoints.
    const Interval& min(const Interval& x, const Interval& y) const {
        return leq(x, y) ? x : y;
    }
    /// Lattice join.
    const Interval& max(const Interval& x, const Interval& y) const {
        return lt(x, y) ? y : x;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::XuYager: return "xu-yager";
            case Kind::Lex1: return "lex1";
            case Kind::Lex2: return "lex2";
            case Kind::AlphaBeta:
                return "alpha-beta(" + std::to_string(alpha_) + "," + std::to_string(beta_) + ")";
            case Kind::AlphaPlus: return "alpha-plus(" + std::to_string(alpha_) + ")";
            case Kind::AlphaMinus: return "alpha-minus(" + std::to_string(alpha_) + ")";
        }
        return "?";
    }

private:
    AdmissibleOrder(Kind k, double a, double b) : kind_(k), alpha_(a), beta_(b) {}

    static void check01(double v, const char* what) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument(std::string(what) + " must be in [0,1]");
    }

    Kind kind_;
    double alpha_;
    double beta_;
};

struct SortResult {
    std::vector<Interval> sorted;
    std::vector<std::size_t> sigma;  // sigma[i] = original index of i-th sorted element
};

/// Stable sort under the order; ties keep original index order, which makes
/// sigma canonical.
SortResult order_sort(const AdmissibleOrder& ord, const std::vector<Interval>& xs);

/// Fold of the lattice join over a non-empty vector.
Interval order_max(const AdmissibleOrder& ord, const std::vector<Interval>& xs);

/// Fold of the lattice meet over a non-empty vector.
Interval order_min(const AdmissibleOrder& ord, const std::vector<Interval>& xs);

}  // namespace ivagg

#endif  // IVAGG_ORDER_HPP
