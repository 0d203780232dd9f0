#ifndef IVAGG_INTERVAL_HPP
#define IVAGG_INTERVAL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace ivagg {

// Construction tolerance: bound violations within this are snapped, beyond
// it they are errors.
inline constexpr double kBoundTol = 1e-12;

struct OutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvertedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed subinterval of [0,1]. Immutable value type.
class Interval {
public:
    Interval() = default;

    Interval(double lower, double upper) {
        if (lower < -kBoundTol || upper > 1.0 + kBoundTol)
            throw OutOfRangeError("interval bounds outside [0,1]: [" +
                                  std::to_string(lower) + "," + std::to_string(upper) + "]");
        if (lower > upper) {
            if (lower - upper > kBoundTol)
                throw InvertedError("interval lower > upper: [" + std::to_string(lower) +
                                    "," + std::to_string(upper) + "]");
            upper = lower;  // snap tiny inverted width to degenerate
        }
        lo_ = lower < 0.0 ? 0.0 : lower;
        hi_ = upper > 1.0 ? 1.0 : upper;
        if (lo_ > hi_) lo_ = hi_;
    }

    double lower() const { return lo_; }
    double upper() const { return hi_; }
    double width() const { return hi_ - lo_; }
    bool degenerate() const { return lo_ == hi_; }

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator!=(const Interval& o) const { return !(*this == o); }

    static Interval zero() { return Interval(0.0, 0.0); }
    static Interval one() { return Interval(1.0, 1.0); }
    static Interval point(double x) { return Interval(x, x); }

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline Interval make_interval(double lower, double upper) { return Interval(lower, upper); }

inline double width(const Interval& x) { return x.width(); }

/// Standard partial order (componentwise).
inline bool leq_spo(const Interval& x, const Interval& y) {
    return x.lower() <= y.lower() && x.upper() <= y.upper();
}

/// K_alpha(X) = (1-alpha)*lower + alpha*upper.
inline double k_alpha(double alpha, const Interval& x) {
    return (1.0 - alpha) * x.lower() + alpha * x.upper();
}

/// Maximal width of an interval with K_alpha value c:
/// min(c/alpha, (1-c)/(1-alpha)), with r/0 := 1.
inline double d_alpha(double alpha, double c) {
    double a = alpha == 0.0 ? 1.0 : c / alpha;
    double b = alpha == 1.0 ? 1.0 : (1.0 - c) / (1.0 - alpha);
    return a < b ? a : b;
}

/// Relative width w(X)/d_alpha(K_alpha(X)), with 0/0 := 1. Result in [0,1].
inline double lambda_alpha(double alpha, const Interval& x) {
    double d = d_alpha(alpha, k_alpha(alpha, x));
    if (d <= 0.0) return 1.0;
    double l = x.width() / d;
    return l > 1.0 ? 1.0 : l;
}

/// Inverse of the (K_alpha, lambda_alpha) coordinates: the unique interval Y
/// with K_alpha(Y) = c and w(Y) = lambda * d_alpha(c).
inline Interval from_k_lambda(double alpha, double c, double lambda) {
    double w = lambda * d_alpha(alpha, c);
    return Interval(c - alpha * w, c + (1.0 - alpha) * w);
}

// ---- arithmetic ------------------------------------------------------------
// Endpoint-wise monotone extensions; all operands live in [0,1].

/// Raw endpoint pair that may exceed [0,1]; only addition produces these and
/// cap_one() brings them back.
struct ExtInterval {
    double lower = 0.0;
    double upper = 0.0;
};

inline ExtInterval ext(const Interval& x) { return {x.lower(), x.upper()}; }

inline ExtInterval add(const ExtInterval& x, const ExtInterval& y) {
    return {x.lower + y.lower, x.upper + y.upper};
}

inline ExtInterval add(const Interval& x, const Interval& y) {
    return add(ext(x), ext(y));
}

inline Interval cap_one(const ExtInterval& x) {
    return Interval(x.lower > 1.0 ? 1.0 : x.lower, x.upper > 1.0 ? 1.0 : x.upper);
}

inline Interval mul(const Interval& x, const Interval& y) {
    return Interval(x.lower() * y.lower(), x.upper() * y.upper());
}

inline Interval complement(const Interval& y) {
    return Interval(1.0 - y.upper(), 1.0 - y.lower());
}

inline Interval square(const Interval& x) {
    return Interval(x.lower() * x.lower(), x.upper() * x.upper());
}

inline Interval sqrt(const Interval& x) {
    return Interval(std::sqrt(x.lower()), std::sqrt(x.upper()));
}

inline Interval scalar_mul(double c, const Interval& x) {
    if (c * x.upper() > 1.0 + kBoundTol)
        throw OutOfRangeError("scalar_mul leaves [0,1]: c=" + std::to_string(c));
    return Interval(c * x.lower(), c * x.upper());
}

inline Interval scalar_min(double c, const Interval& x) {
    return Interval(c < x.lower() ? c : x.lower(), c < x.upper() ? c : x.upper());
}

/// Serialization used by every CSV/JSON surface: "[lower,upper]" with up to
/// 12 significant digits.
std::string to_string(const Interval& x);

/// Parses "[lower,upper]"; throws on malformed text or invariant violation.
Interval parse_interval(const std::string& text);

}  // namespace ivagg

#endif  // IVAGG_INTERVAL_HPP
