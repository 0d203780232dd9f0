#include "ivagg/measure.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ivagg {

namespace {

constexpr int kMaxTableN = 24;
constexpr int kExhaustiveN = 12;  // exhaustive check limit for symmetry

void check_n(int n, int limit) {
    if (n < 1) throw std::invalid_argument("measure needs n >= 1");
    if (n > limit) throw std::invalid_argument("measure n too large");
}

}  // namespace

IvFuzzyMeasure IvFuzzyMeasure::cardinality(int n) {
    check_n(n, 63);
    return IvFuzzyMeasure(Family::Cardinality, n, 1.0, {});
}

IvFuzzyMeasure IvFuzzyMeasure::power(int n, double p) {
    check_n(n, 63);
    if (!(p > 0.0)) throw std::invalid_argument("power measure needs p > 0");
    return IvFuzzyMeasure(Family::PowerP, n, p, {});
}

IvFuzzyMeasure IvFuzzyMeasure::table(int n, std::vector<Interval> values) {
    check_n(n, kMaxTableN);
    if (values.size() != (std::size_t{1} << n))
        throw std::invalid_argument("table measure needs 2^n entries");
    return IvFuzzyMeasure(Family::ExplicitTable, n, 1.0, std::move(values));
}

IvFuzzyMeasure IvFuzzyMeasure::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open measure file: " + path);
    std::map<SubsetMask, Interval> entries;
    int n = 0;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string subset, lo, hi;
        if (!std::getline(ss, subset, ',') || !std::getline(ss, lo, ',') ||
            !std::getline(ss, hi))
            throw std::runtime_error("malformed measure row: " + line);
        if (first && subset == "subset") { first = false; continue; }
        first = false;
        SubsetMask mask = 0;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (subset[i] == '1') mask |= SubsetMask{1} << i;
            else if (subset[i] != '0')
                throw std::runtime_error("bad subset bitstring: " + subset);
        }
        n = std::max(n, static_cast<int>(subset.size()));
        entries[mask] = Interval(std::stod(lo), std::stod(hi));
    }
    check_n(n, kMaxTableN);
    std::vector<Interval> values(std::size_t{1} << n);
    if (entries.size() != values.size())
        throw std::runtime_error("measure table is missing subsets");
    for (auto& [mask, v] : entries) values[mask] = v;
    return table(n, std::move(values));
}

Interval IvFuzzyMeasure::at(SubsetMask mask) const {
    mask &= full_mask();
    switch (family_) {
        case Family::Cardinality: {
            double v = static_cast<double>(std::popcount(mask)) / n_;
            return Interval(v, v);
        }
        case Family::PowerP: {
            double v = std::pow(static_cast<double>(std::popcount(mask)) / n_, p_);
            return Interval(v, v);
        }
        case Family::ExplicitTable:
            return values_[mask];
    }
    return Interval::zero();
}

bool IvFuzzyMeasure::degenerate_valued() const {
    if (family_ != Family::ExplicitTable) return true;
    for (const auto& v : values_)
        if (!v.degenerate()) return false;
    return true;
}

IvFuzzyMeasure::ValidationResult IvFuzzyMeasure::validate(const AdmissibleOrder& ord) const {
    ValidationResult r;
    if (family_ != Family::ExplicitTable) return r;  // closed forms hold by construction
    if (at(0) != Interval::zero()) {
        r.ok = false;
        r.message = "boundary violation: m(empty) != [0,0]";
        r.witness = {{SubsetMask{0}, SubsetMask{0}}};
        return r;
    }
    if (at(full_mask()) != Interval::one()) {
        r.ok = false;
        r.message = "boundary violation: m(N) != [1,1]";
        r.witness = {{full_mask(), full_mask()}};
        return r;
    }
    // Covering pairs only; transitivity of the order does the rest.
    for (SubsetMask a = 0; a <= full_mask(); ++a) {
        for (int i = 0; i < n_; ++i) {
            SubsetMask b = a | (SubsetMask{1} << i);
            if (b == a) continue;
            if (ord.compare(at(a), at(b)) == Ordering::Greater) {
                r.ok = false;
                r.message = "monotonicity violation";
                r.witness = {{a, b}};
                return r;
            }
        }
    }
    return r;
}

IvFuzzyMeasure::SymmetryReport IvFuzzyMeasure::is_symmetric() const {
    SymmetryReport rep;
    if (family_ != Family::ExplicitTable) return rep;  // families are symmetric
    if (n_ > kExhaustiveN)
        throw std::invalid_argument("symmetry check is exhaustive only for n <= 12");
    std::vector<std::optional<SubsetMask>> seen(n_ + 1);
    for (SubsetMask a = 0; a <= full_mask(); ++a) {
        int c = std::popcount(a);
        if (!seen[c]) {
            seen[c] = a;
        } else if (at(*seen[c]) != at(a)) {
            rep.symmetric = false;
            rep.witness = {{*seen[c], a}};
            return rep;
        }
    }
    return rep;
}

}  // namespace ivagg
