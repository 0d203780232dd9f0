#include <doctest.h>

#include <cmath>
#include <random>

#include "ivagg/interval.hpp"

using namespace ivagg;

namespace {

Interval rand_iv(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

bool spo_leq(const Interval& x, const Interval& y) {
    return x.lower() <= y.lower() && x.upper() <= y.upper();
}

}  // namespace

TEST_CASE("interval construction") {
    Interval a(0.2, 0.5);
    CHECK(a.lower() == 0.2);
    CHECK(a.upper() == 0.5);
    CHECK(!a.degenerate());

    Interval b(0.3, 0.3);
    CHECK(b.degenerate());
    CHECK(width(b) == 0.0);

    CHECK_THROWS_AS(Interval(0.5, 0.2), InvertedError);
    CHECK_THROWS_AS(Interval(-0.1, 0.5), OutOfRangeError);
    CHECK_THROWS_AS(Interval(0.5, 1.1), OutOfRangeError);

    // Tiny inversions from rounding snap to degenerate; tiny overshoot clamps.
    Interval c(0.3, 0.3 - 1e-13);
    CHECK(c.degenerate());
    CHECK(c.lower() == 0.3);
    Interval d(-1e-13, 0.5);
    CHECK(d.lower() == 0.0);
    Interval e(0.5, 1.0 + 1e-13);
    CHECK(e.upper() == 1.0);
}

TEST_CASE("width") {
    CHECK(width(Interval(0.2, 0.5)) == doctest::Approx(0.3));
    CHECK(width(Interval(0.7, 0.7)) == 0.0);
    CHECK(width(Interval(0.0, 1.0)) == 1.0);
}

TEST_CASE("k_alpha") {
    CHECK(k_alpha(0.5, Interval(0.2, 0.4)) == doctest::Approx(0.3));
    CHECK(k_alpha(0.3, Interval(0.7, 0.7)) == doctest::Approx(0.7));
    CHECK(k_alpha(1.0, Interval(0.2, 0.4)) == 0.4);
    CHECK(k_alpha(0.0, Interval(0.2, 0.4)) == 0.2);
}

TEST_CASE("d_alpha") {
    CHECK(d_alpha(0.5, 0.3) == doctest::Approx(0.6));
    CHECK(d_alpha(0.0, 0.3) == doctest::Approx(0.7));  // r/0 := 1, then min(1, 0.7)
    CHECK(d_alpha(0.5, 1.0) == 0.0);
    CHECK(d_alpha(1.0, 1.0) == 1.0);  // min(1, r/0=1)
    CHECK(d_alpha(0.5, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("lambda_alpha") {
    CHECK(lambda_alpha(0.5, Interval(0.2, 0.4)) == doctest::Approx(1.0 / 3.0));
    CHECK(lambda_alpha(0.5, Interval(1.0, 1.0)) == 1.0);  // 0/0 := 1
    CHECK(lambda_alpha(0.5, Interval(0.0, 1.0)) == doctest::Approx(1.0));
}

TEST_CASE("from_k_lambda") {
    Interval a = from_k_lambda(0.5, 0.3, 1.0 / 3.0);
    CHECK(a.lower() == doctest::Approx(0.2));
    CHECK(a.upper() == doctest::Approx(0.4));

    Interval b = from_k_lambda(0.25, 0.6, 0.0);
    CHECK(b.lower() == 0.6);
    CHECK(b.degenerate());

    Interval c = from_k_lambda(0.5, 0.5, 1.0);
    CHECK(c.lower() == doctest::Approx(0.0));
    CHECK(c.upper() == doctest::Approx(1.0));
}

TEST_CASE("k/lambda round trip") {
    std::mt19937_64 rng(7);
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (int i = 0; i < 10000; ++i) {
            Interval x = rand_iv(rng);
            double c = k_alpha(alpha, x);
            double d = d_alpha(alpha, c);
            if (d <= 0.0) {
                // d = 0 forces a degenerate interval at this key.
                CHECK(x.degenerate());
                continue;
            }
            Interval back = from_k_lambda(alpha, c, lambda_alpha(alpha, x));
            CHECK(back.lower() == doctest::Approx(x.lower()).epsilon(1e-12));
            CHECK(back.upper() == doctest::Approx(x.upper()).epsilon(1e-12));
        }
    }
}

TEST_CASE("arithmetic suite") {
    Interval m = mul(Interval(0.6, 0.8), complement(Interval(0.5, 0.5)));
    CHECK(m.lower() == doctest::Approx(0.3));
    CHECK(m.upper() == doctest::Approx(0.4));

    Interval sq = square(Interval(0.3, 0.5));
    CHECK(sq.lower() == doctest::Approx(0.09));
    CHECK(sq.upper() == doctest::Approx(0.25));

    Interval capped = cap_one(add(Interval(0.7, 0.9), Interval(0.5, 0.6)));
    CHECK(capped.lower() == 1.0);
    CHECK(capped.upper() == 1.0);

    Interval rt = ivagg::sqrt(Interval(0.09, 0.25));
    CHECK(rt.lower() == doctest::Approx(0.3));
    CHECK(rt.upper() == doctest::Approx(0.5));

    Interval sm = scalar_mul(0.5, Interval(0.2, 0.8));
    CHECK(sm.lower() == doctest::Approx(0.1));
    CHECK(sm.upper() == doctest::Approx(0.4));
    CHECK_THROWS_AS(scalar_mul(2.0, Interval(0.6, 0.8)), OutOfRangeError);

    Interval sc = scalar_min(0.3, Interval(0.2, 0.8));
    CHECK(sc.lower() == doctest::Approx(0.2));
    CHECK(sc.upper() == doctest::Approx(0.3));
}

TEST_CASE("arithmetic is spo-monotone (complement antitone)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        Interval x = rand_iv(rng);
        Interval y = rand_iv(rng);
        // Build x2 >= x under spo.
        double lo = x.lower() + u(rng) * (1.0 - x.lower());
        double hi = std::max(lo, x.upper() + u(rng) * (1.0 - x.upper()));
        Interval x2(std::min(lo, hi), hi);
        CHECK(spo_leq(mul(x, y), mul(x2, y)));
        CHECK(spo_leq(square(x), square(x2)));
        CHECK(spo_leq(ivagg::sqrt(x), ivagg::sqrt(x2)));
        CHECK(spo_leq(scalar_min(0.4, x), scalar_min(0.4, x2)));
        CHECK(spo_leq(complement(x2), complement(x)));  // antitone
        ExtInterval a = add(x, y), b = add(x2, y);
        CHECK(a.lower <= b.lower);
        CHECK(a.upper <= b.upper);
    }
}

TEST_CASE("serialization") {
    CHECK(to_string(Interval(0.25, 0.75)) == "[0.25,0.75]");
    Interval p = parse_interval("[0.1,0.2]");
    CHECK(p.lower() == 0.1);
    CHECK(p.upper() == 0.2);
    CHECK_THROWS_AS(parse_interval("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("[0.5,0.2]"), InvertedError);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        Interval x = rand_iv(rng);
        Interval back = parse_interval(to_string(x));
        CHECK(back.lower() == doctest::Approx(x.lower()).epsilon(1e-11));
        CHECK(back.upper() == doctest::Approx(x.upper()).epsilon(1e-11));
    }
}
