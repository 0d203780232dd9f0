#include "ivagg/order.hpp"

#include <algorithm>
#include <numeric>

namespace ivagg {

SortResult order_sort(const AdmissibleOrder& ord, const std::vector<Interval>& xs) {
    SortResult r;
    r.sigma.resize(xs.size());
    std::iota(r.sigma.begin(), r.sigma.end(), std::size_t{0});
    std::stable_sort(r.sigma.begin(), r.sigma.end(), [&](std::size_t a, std::size_t b) {
        return ord.compare(xs[a], xs[b]) == Ordering::Less;
    });
    r.sorted.reserve(xs.size());
    for (std::size_t i : r.sigma) r.sorted.push_back(xs[i]);
    return r;
}

Interval order_max(const AdmissibleOrder& ord, const std::vector<Interval>& xs) {
    if (xs.empty()) throw std::invalid_argument("order_max on empty vector");
    Interval best = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) best = ord.max(best, xs[i]);
    return best;
}

Interval order_min(const AdmissibleOrder& ord, const std::vector<Interval>& xs) {
    if (xs.empty()) throw std::invalid_argument("order_min on empty vector");
    Interval best = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) best = ord.min(best, xs[i]);
    return best;
}

}  // namespace ivagg
