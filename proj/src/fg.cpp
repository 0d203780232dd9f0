#include "ivagg/fg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace ivagg {

namespace {

constexpr double kEps = 1e-9;

bool close(const Interval& a, const Interval& b, double eps = kEps) {
    return std::abs(a.lower() - b.lower()) <= eps && std::abs(a.upper() - b.upper()) <= eps;
}

Interval random_interval(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

std::vector<Interval> random_vector(std::mt19937_64& rng, int n) {
    std::vector<Interval> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i) xs.push_back(random_interval(rng));
    return xs;
}

std::string show_vector(const std::vector<Interval>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += to_string(xs[i]);
    }
    return s + ")";
}

SubsetMask tail_mask(const std::vector<std::size_t>& sigma, std::size_t from) {
    SubsetMask mask = 0;
    for (std::size_t j = from; j < sigma.size(); ++j) mask |= SubsetMask{1} << sigma[j];
    return mask;
}

}  // namespace

// ---- scalar oracles --------------------------------------------------------

double scalar_sugeno(const std::function<double(SubsetMask)>& mu, const std::vector<double>& x) {
    if (x.empty()) throw EmptyInputError("scalar_sugeno needs a non-empty vector");
    std::vector<std::size_t> sigma(x.size());
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::stable_sort(sigma.begin(), sigma.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    double best = 0.0;
    SubsetMask mask = 0;
    for (std::size_t j = 0; j < sigma.size(); ++j) mask |= SubsetMask{1} << sigma[j];
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        double term = std::min(x[sigma[i]], mu(mask));
        best = std::max(best, term);
        mask &= ~(SubsetMask{1} << sigma[i]);
    }
    return best;
}

double scalar_sugeno(const IvFuzzyMeasure& m, const std::vector<double>& x) {
    if (x.empty()) throw EmptyInputError("scalar_sugeno on empty input");
    if (static_cast<int>(x.size()) != m.n())
        throw LengthMismatchError("input length does not match measure arity");
    return scalar_sugeno([&](SubsetMask a) { return m.scalar_at(a); }, x);
}

double scalar_fg(const IvFuzzyMeasure& m, const std::function<double(double, double)>& f,
                 const std::function<double(const std::vector<double>&)>& g,
                 const std::vector<double>& x) {
    if (x.empty()) throw EmptyInputError("scalar_fg needs a non-empty vector");
    if (static_cast<int>(x.size()) != m.n())
        throw LengthMismatchError("input length does not match measure arity");
    if (!m.is_symmetric().symmetric)
        throw NonSymmetricMeasureError("scalar_fg requires a symmetric measure");
    std::vector<std::size_t> sigma(x.size());
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::stable_sort(sigma.begin(), sigma.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> terms(x.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        terms[i] = f(x[sigma[i]], m.scalar_at(tail_mask(sigma, i)));
    return g(terms);
}

// ---- F presets ---------------------------------------------------------------

Interval PresetF::apply(const AdmissibleOrder& ord, const Interval& x, const Interval& y) const {
    switch (kind) {
        case Kind::Meet:
            return ord.min(x, y);
        case Kind::Sugeno1: {
            // f(a,b) = a^2 b + a(1-b): nondecreasing in a, nonincreasing in b.
            auto f = [](double a, double b) { return a * a * b + a * (1.0 - b); };
            return Interval(f(x.lower(), y.upper()), f(x.upper(), y.lower()));
        }
        case Kind::Sugeno2:
            return mul(x, complement(y));
        case Kind::Sna:
            if (!y.degenerate())
                throw std::invalid_argument(
                    "the scalar-measure F preset needs a degenerate measure value");
            return scalar_mul(1.0 - y.lower(), x);
        case Kind::Miv:
            return miv->apply(x, y);
    }
    return Interval::zero();
}

bool PresetF::annihilator_zero() const {
    switch (kind) {
        case Kind::Meet:
        case Kind::Sugeno1:
        case Kind::Sugeno2:
        case Kind::Sna:
            return true;
        case Kind::Miv:
            return miv->m1().zero_annihilator();
    }
    return false;
}

bool PresetF::f_one_one_is_one() const {
    switch (kind) {
        case Kind::Meet:
        case Kind::Sugeno1:
        case Kind::Miv:
            return true;
        case Kind::Sugeno2:
        case Kind::Sna:
            return false;
    }
    return false;
}

bool PresetF::f_one_any_is_one() const { return kind == Kind::Sugeno1; }

bool PresetF::neutral_one() const {
    switch (kind) {
        case Kind::Meet:
            return true;
        case Kind::Miv:
            return miv->m1().one_neutral() && miv->m2().one_neutral();
        default:
            return false;
    }
}

bool PresetF::f_zero_one_is_zero() const {
    if (kind == Kind::Miv) return miv->m1().zero_annihilator();
    return true;  // Meet, Sugeno1, Sugeno2, Sna all vanish at (0,1)
}

bool PresetF::nondecreasing_second(const AdmissibleOrder& ord) const {
    switch (kind) {
        case Kind::Meet:
            return true;
        case Kind::Miv:
            // The construction is order-monotone for the alpha+/alpha- orders
            // of its own alpha only.
            return ord.alpha() == miv->alpha();
        default:
            return false;
    }
}

bool PresetF::nondecreasing_first() const { return true; }

bool PresetF::pos_homogeneous_first() const {
    return kind == Kind::Sugeno2 || kind == Kind::Sna;
}

// F(c/\X, y) = c/\F(X, y) fails for every preset: the clipping of the first
// argument never commutes with argument selection or the measure factor.
bool PresetF::min_homogeneous_first() const { return false; }

bool PresetF::comonotone_maxitive_first() const { return kind == Kind::Meet; }

std::string PresetF::name() const {
    switch (kind) {
        case Kind::Meet: return "meet";
        case Kind::Sugeno1: return "sugeno1";
        case Kind::Sugeno2: return "sugeno2";
        case Kind::Sna: return "sna";
        case Kind::Miv: return miv->name();
    }
    return "?";
}

// ---- G presets ---------------------------------------------------------------

Interval PresetG::apply(const AdmissibleOrder& ord, const std::vector<Interval>& terms) const {
    if (terms.empty()) throw EmptyInputError("G applied to an empty term list");
    switch (kind) {
        case Kind::OrderMax:
            return ivagg::order_max(ord, terms);
        case Kind::Mean: {
            double lo = 0.0, hi = 0.0;
            for (const auto& t : terms) {
                lo += t.lower();
                hi += t.upper();
            }
            return Interval(lo / terms.size(), hi / terms.size());
        }
        case Kind::CappedSum: {
            ExtInterval acc{0.0, 0.0};
            for (const auto& t : terms) acc = add(acc, ext(t));
            return cap_one(acc);
        }
        case Kind::Proj1:
            return terms.front();
        case Kind::SquareMax:
            return square(ivagg::order_max(ord, terms));
        case Kind::SqrtMax:
            return ivagg::sqrt(ivagg::order_max(ord, terms));
    }
    return Interval::zero();
}

std::string PresetG::name() const {
    switch (kind) {
        case Kind::OrderMax: return "max";
        case Kind::Mean: return "mean";
        case Kind::CappedSum: return "capped-sum";
        case Kind::Proj1: return "proj1";
        case Kind::SquareMax: return "square-max";
        case Kind::SqrtMax: return "sqrt-max";
    }
    return "?";
}

// ---- WDS ---------------------------------------------------------------------

namespace {

Interval eval_with_sigma(const IvFuzzyMeasure& m, const PresetF& f, const PresetG& g,
                         const AdmissibleOrder& ord, const std::vector<Interval>& xs,
                         const std::vector<std::size_t>& sigma) {
    std::vector<Interval> terms;
    terms.reserve(xs.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        terms.push_back(f.apply(ord, xs[sigma[i]], m.at(tail_mask(sigma, i))));
    return g.apply(ord, terms);
}

/// All permutations consistent with the order: permute within tie blocks of
/// the canonical sort.
std::vector<std::vector<std::size_t>> consistent_sigmas(const AdmissibleOrder& ord,
                                                        const std::vector<Interval>& xs,
                                                        std::size_t cap = 64) {
    SortResult base = order_sort(ord, xs);
    // Tie blocks in the sorted sequence.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= base.sorted.size(); ++i) {
        if (i == base.sorted.size() ||
            ord.compare(base.sorted[i - 1], base.sorted[i]) != Ordering::Equal) {
            blocks.emplace_back(start, i);
            start = i;
        }
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current = base.sigma;
    // Recursive product of within-block permutations.
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (out.size() >= cap) return;
        if (b == blocks.size()) {
            out.push_back(current);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::vector<std::size_t> block(base.sigma.begin() + lo, base.sigma.begin() + hi);
        std::sort(block.begin(), block.end());
        do {
            std::copy(block.begin(), block.end(), current.begin() + lo);
            rec(b + 1);
        } while (std::next_permutation(block.begin(), block.end()) && out.size() < cap);
    };
    rec(0);
    return out;
}

}  // namespace

std::string WdsResult::describe() const {
    if (pass) return "WDS pass (" + rule + ")";
    std::ostringstream os;
    os << "WDS fail: input " << show_vector(witness) << "; sigma (";
    for (std::size_t i = 0; i < sigma1.size(); ++i) os << (i ? "," : "") << sigma1[i] + 1;
    os << ") gives " << to_string(value1) << " but sigma (";
    for (std::size_t i = 0; i < sigma2.size(); ++i) os << (i ? "," : "") << sigma2[i] + 1;
    os << ") gives " << to_string(value2);
    return os.str();
}

WdsResult wds_check(const IvFuzzyMeasure& m, const PresetF& f, const PresetG& g,
                    const AdmissibleOrder& ord, int probes, std::uint64_t seed) {
    WdsResult r;
    if (m.is_symmetric().symmetric) {
        r.structural = true;
        r.rule = "symmetric measure";
        return r;
    }
    if (g.proj_family()) {
        r.structural = true;
        r.rule = "G is a function of the first term";
        return r;
    }
    if (f.nondecreasing_second(ord) && g.vee_family()) {
        r.structural = true;
        r.rule = "F nondecreasing in the measure, G in the join family";
        return r;
    }
    return wds_probe_randomized(m, f, g, ord, probes, seed);
}

WdsResult wds_probe_randomized(const IvFuzzyMeasure& m, const PresetF& f, const PresetG& g,
                               const AdmissibleOrder& ord, int probes, std::uint64_t seed) {
    WdsResult r;
    r.rule = "randomized";
    std::mt19937_64 rng(seed);
    int n = m.n();
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int p = 0; p < probes; ++p) {
        std::vector<Interval> xs = random_vector(rng, n);
        // Force at least one tie.
        if (n >= 2) {
            int a = pick(rng), b = pick(rng);
            while (b == a) b = pick(rng);
            xs[b] = xs[a];
        }
        auto sigmas = consistent_sigmas(ord, xs);
        if (sigmas.size() < 2) continue;
        Interval ref = eval_with_sigma(m, f, g, ord, xs, sigmas[0]);
        for (std::size_t s = 1; s < sigmas.size(); ++s) {
            Interval v = eval_with_sigma(m, f, g, ord, xs, sigmas[s]);
            if (!close(v, ref, 1e-12)) {
                r.pass = false;
                r.witness = xs;
                r.sigma1 = sigmas[0];
                r.sigma2 = sigmas[s];
                r.value1 = ref;
                r.value2 = v;
                return r;
            }
        }
    }
    return r;
}

// ---- FGFunctional ------------------------------------------------------------

FGFunctional FGFunctional::make(IvFuzzyMeasure m, AdmissibleOrder ord, PresetF f, PresetG g,
                                int wds_probes) {
    if (f.kind == PresetF::Kind::Sna && !m.degenerate_valued())
        throw std::invalid_argument(
            "the scalar-measure F preset requires a degenerate-valued measure");
    WdsResult w = wds_check(m, f, g, ord, wds_probes);
    if (!w.pass) throw std::invalid_argument(w.describe());
    return FGFunctional(std::move(m), ord, std::move(f), g, false);
}

FGFunctional FGFunctional::make_acknowledged_non_wds(IvFuzzyMeasure m, AdmissibleOrder ord,
                                                     PresetF f, PresetG g) {
    return FGFunctional(std::move(m), ord, std::move(f), g, true);
}

Interval FGFunctional::evaluate(const std::vector<Interval>& xs) const {
    if (xs.empty()) throw EmptyInputError("the functional needs a non-empty vector");
    if (static_cast<int>(xs.size()) != m_.n())
        throw LengthMismatchError("input length " + std::to_string(xs.size()) +
                                  " does not match measure arity " + std::to_string(m_.n()));
    SortResult s = order_sort(ord_, xs);
    return eval_with_sigma(m_, f_, g_, ord_, xs, s.sigma);
}

FGFunctional::Trace FGFunctional::evaluate_traced(const std::vector<Interval>& xs) const {
    if (xs.empty()) throw EmptyInputError("the functional needs a non-empty vector");
    if (static_cast<int>(xs.size()) != m_.n())
        throw LengthMismatchError("input length does not match measure arity");
    Trace t;
    SortResult s = order_sort(ord_, xs);
    t.sigma = s.sigma;
    t.sorted = s.sorted;
    for (std::size_t i = 0; i < s.sigma.size(); ++i) {
        Interval mv = m_.at(tail_mask(s.sigma, i));
        t.measure_values.push_back(mv);
        t.f_terms.push_back(f_.apply(ord_, xs[s.sigma[i]], mv));
    }
    t.result = g_.apply(ord_, t.f_terms);
    return t;
}

// ---- property suite ------------------------------------------------------------

IvFuzzyMeasure random_iv_measure(int n, const AdmissibleOrder& ord, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t size = std::size_t{1} << n;
    std::vector<Interval> values(size);
    values[0] = Interval::zero();
    values[size - 1] = Interval::one();
    // Popcount-ordered fill keeps monotonicity: each subset dominates the
    // join of its covered subsets.
    std::vector<SubsetMask> masks(size);
    std::iota(masks.begin(), masks.end(), SubsetMask{0});
    std::stable_sort(masks.begin(), masks.end(), [](SubsetMask a, SubsetMask b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (SubsetMask mask : masks) {
        if (mask == 0 || mask == size - 1) continue;
        Interval v = random_interval(rng);
        for (int i = 0; i < n; ++i) {
            SubsetMask sub = mask & ~(SubsetMask{1} << i);
            if (sub != mask) v = ord.max(v, values[sub]);
        }
        values[mask] = v;
    }
    return IvFuzzyMeasure::table(n, std::move(values));
}

std::vector<PropertyVerdict> property_suite(const FGFunctional& fg, int samples,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const AdmissibleOrder& ord = fg.order();
    const PresetF& f = fg.f();
    const PresetG& g = fg.g();
    const int n = fg.measure().n();
    const bool sym = fg.measure().is_symmetric().symmetric;
    const bool g_max = g.kind == PresetG::Kind::OrderMax;
    const bool g_proj = g.kind == PresetG::Kind::Proj1;
    const bool f_nd2 = f.nondecreasing_second(ord);

    std::vector<PropertyVerdict> out;
    auto run = [&](const std::string& name, bool expected, int count, auto&& probe) {
        PropertyVerdict v{name, expected, true, ""};
        for (int s = 0; s < count && v.observed; ++s) {
            auto ce = probe();
            if (ce) {
                v.observed = false;
                v.counterexample = *ce;
            }
        }
        out.push_back(std::move(v));
    };
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    run("boundary-0",
        (g.vee_family() && f.annihilator_zero()) ||
            (g.proj_family() && f.f_zero_one_is_zero()) || (sym && f.annihilator_zero()),
        1, [&]() -> std::optional<std::string> {
            Interval r = fg.evaluate(std::vector<Interval>(n, Interval::zero()));
            if (close(r, Interval::zero(), 1e-12)) return std::nullopt;
            return "S(0,...,0) = " + to_string(r);
        });

    run("boundary-1",
        (g.vee_family() && f.f_one_one_is_one() && f_nd2) ||
            (g.proj_family() && f.f_one_one_is_one()) || (sym && f.f_one_any_is_one()),
        1, [&]() -> std::optional<std::string> {
            Interval r = fg.evaluate(std::vector<Interval>(n, Interval::one()));
            if (close(r, Interval::one(), 1e-12)) return std::nullopt;
            return "S(1,...,1) = " + to_string(r);
        });

    run("monotonicity",
        (g.vee_family() && f_nd2 && f.nondecreasing_first()) ||
            (g.proj_family() && f.nondecreasing_first()) ||
            (sym && g.nondecreasing_spo() && f.nondecreasing_first()),
        samples, [&]() -> std::optional<std::string> {
            std::vector<Interval> xs = random_vector(rng, n);
            std::vector<Interval> ys = xs;
            for (auto& y : ys) {
                double dlo = unit(rng) * (1.0 - y.lower());
                double dhi = unit(rng) * (1.0 - y.upper());
                double lo = y.lower() + dlo;
                double hi = y.upper() + dhi;
                y = Interval(std::min(lo, hi), hi);
            }
            Interval a = fg.evaluate(xs), b = fg.evaluate(ys);
            if (ord.leq(a, b)) return std::nullopt;
            return "S" + show_vector(xs) + " = " + to_string(a) + " > S" + show_vector(ys) +
                   " = " + to_string(b);
        });

    run("idempotency",
        f.neutral_one() && ((g_proj) || (f_nd2 && g_max)), samples,
        [&]() -> std::optional<std::string> {
            Interval x = random_interval(rng);
            Interval r = fg.evaluate(std::vector<Interval>(n, x));
            if (close(r, x)) return std::nullopt;
            return "S(" + to_string(x) + ",..) = " + to_string(r);
        });

    int internality_probe = 0;
    run("internality",
        f.neutral_one() && (g_proj || (f_nd2 && g_max)), samples,
        [&]() -> std::optional<std::string> {
            std::vector<Interval> xs = random_vector(rng, n);
            // Ties are where internality actually breaks; every fourth probe
            // uses a constant vector so order-equal inputs are exercised.
            if (++internality_probe % 4 == 0) xs.assign(xs.size(), xs.front());
            Interval r = fg.evaluate(xs);
            Interval lo = order_min(ord, xs), hi = order_max(ord, xs);
            if (ord.leq(lo, r) && ord.leq(r, hi)) return std::nullopt;
            return "S" + show_vector(xs) + " = " + to_string(r) + " outside [" + to_string(lo) +
                   ", " + to_string(hi) + "]";
        });

    run("positive-homogeneity", g.pos_homogeneous() && f.pos_homogeneous_first(), samples,
        [&]() -> std::optional<std::string> {
            std::vector<Interval> xs = random_vector(rng, n);
            double c = unit(rng);
            std::vector<Interval> cxs;
            for (const auto& x : xs) cxs.push_back(scalar_mul(c, x));
            Interval a = fg.evaluate(cxs);
            Interval b = scalar_mul(c, fg.evaluate(xs));
            if (close(a, b)) return std::nullopt;
            return "c=" + std::to_string(c) + ", S(cX) = " + to_string(a) +
                   " but cS(X) = " + to_string(b) + " at X=" + show_vector(xs);
        });

    run("min-homogeneity", g.min_homogeneous() && f.min_homogeneous_first(), samples,
        [&]() -> std::optional<std::string> {
            std::vector<Interval> xs = random_vector(rng, n);
            double c = unit(rng);
            std::vector<Interval> cxs;
            for (const auto& x : xs) cxs.push_back(scalar_min(c, x));
            Interval a = fg.evaluate(cxs);
            Interval b = scalar_min(c, fg.evaluate(xs));
            if (close(a, b)) return std::nullopt;
            return "c=" + std::to_string(c) + ", S(c/\\X) = " + to_string(a) +
                   " but c/\\S(X) = " + to_string(b) + " at X=" + show_vector(xs);
        });

    run("comonotone-maxitivity",
        g.comonotone_maxitive() && f.comonotone_maxitive_first(), samples,
        [&]() -> std::optional<std::string> {
            // Comonotone pair: two sorted vectors pushed through one shared
            // shuffle.
            std::vector<Interval> xs = order_sort(ord, random_vector(rng, n)).sorted;
            std::vector<Interval> ys = order_sort(ord, random_vector(rng, n)).sorted;
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Interval> px(n), py(n), pz(n);
            for (int i = 0; i < n; ++i) {
                px[perm[i]] = xs[i];
                py[perm[i]] = ys[i];
                pz[perm[i]] = ord.max(xs[i], ys[i]);
            }
            Interval a = fg.evaluate(pz);
            Interval b = ord.max(fg.evaluate(px), fg.evaluate(py));
            if (close(a, b)) return std::nullopt;
            return "S(XvY) = " + to_string(a) + " but S(X)vS(Y) = " + to_string(b) +
                   " at X=" + show_vector(px) + " Y=" + show_vector(py);
        });

    if (n <= 10) {
        run("giving-back", g_max && f.f_zero_one_is_zero() && f_nd2, 1,
            [&]() -> std::optional<std::string> {
                SubsetMask full = fg.measure().full_mask();
                for (SubsetMask e = 0; e <= full; ++e) {
                    std::vector<Interval> ind(n, Interval::zero());
                    for (int i = 0; i < n; ++i)
                        if (e & (SubsetMask{1} << i)) ind[i] = Interval::one();
                    Interval got = fg.evaluate(ind);
                    Interval want = f.apply(ord, Interval::one(), fg.measure().at(e));
                    if (!close(got, want, 1e-12))
                        return "S(1_E) = " + to_string(got) + " but F(1,m(E)) = " +
                               to_string(want) + " for E mask " + std::to_string(e);
                }
                return std::nullopt;
            });
    }

    return out;
}

}  // namespace ivagg
