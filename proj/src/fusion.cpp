#include "ivagg/fusion.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace ivagg {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        // Trim surrounding whitespace.
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
}

double parse_score(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ScoreOutOfRangeError("unparseable score '" + s + "'");
    }
    if (pos != s.size()) throw ScoreOutOfRangeError("unparseable score '" + s + "'");
    return v;
}

}  // namespace

ScoreTable ScoreTable::load_csv(const std::string& scores_path, const std::string& labels_path) {
    ScoreTable t;
    std::ifstream in(scores_path);
    if (!in) throw std::runtime_error("cannot open scores file " + scores_path);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = split_csv_line(line);
        if (first && !f.empty() && f[0] == "trial_id") {
            first = false;
            continue;
        }
        first = false;
        if (f.size() != 5)
            throw std::runtime_error("scores row needs 5 columns, got " +
                                     std::to_string(f.size()));
        double s = parse_score(f[4]);
        if (s < 0.0 || s > 1.0)
            throw ScoreOutOfRangeError("score " + f[4] + " for trial " + f[0] +
                                       " outside [0,1]");
        t.records.push_back({f[0], f[1], f[2], f[3], s});
    }
    if (!labels_path.empty()) {
        std::ifstream lin(labels_path);
        if (!lin) throw std::runtime_error("cannot open labels file " + labels_path);
        first = true;
        while (std::getline(lin, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto f = split_csv_line(line);
            if (first && !f.empty() && f[0] == "trial_id") {
                first = false;
                continue;
            }
            first = false;
            if (f.size() != 2) throw std::runtime_error("labels row needs 2 columns");
            t.labels[f[0]] = f[1];
        }
    }
    return t;
}

void ScoreTable::rescale_per_trial() {
    std::map<std::string, std::pair<double, double>> range;  // trial -> (min, max)
    for (const auto& r : records) {
        auto it = range.find(r.trial_id);
        if (it == range.end())
            range[r.trial_id] = {r.score, r.score};
        else {
            it->second.first = std::min(it->second.first, r.score);
            it->second.second = std::max(it->second.second, r.score);
        }
    }
    for (auto& r : records) {
        auto [lo, hi] = range[r.trial_id];
        r.score = hi > lo ? (r.score - lo) / (hi - lo) : 0.0;
    }
}

IntervalLogits build_interval_logits(const ScoreTable& table) {
    IntervalLogits out;
    std::set<std::string> bands, classes, trials;
    for (const auto& r : table.records) {
        if (r.score < 0.0 || r.score > 1.0)
            throw ScoreOutOfRangeError("score outside [0,1] for trial " + r.trial_id);
        bands.insert(r.band_id);
        classes.insert(r.class_id);
        trials.insert(r.trial_id);
    }
    out.bands.assign(bands.begin(), bands.end());
    out.classes.assign(classes.begin(), classes.end());
    out.trials.assign(trials.begin(), trials.end());

    // (trial, class, band) -> [min, max] over classifiers.
    std::map<std::tuple<std::string, std::string, std::string>, std::pair<double, double>> agg;
    for (const auto& r : table.records) {
        auto key = std::make_tuple(r.trial_id, r.class_id, r.band_id);
        auto it = agg.find(key);
        if (it == agg.end())
            agg[key] = {r.score, r.score};
        else {
            it->second.first = std::min(it->second.first, r.score);
            it->second.second = std::max(it->second.second, r.score);
        }
    }
    for (const auto& trial : out.trials) {
        for (const auto& cls : out.classes) {
            std::vector<Interval> row;
            row.reserve(out.bands.size());
            for (const auto& band : out.bands) {
                auto it = agg.find(std::make_tuple(trial, cls, band));
                if (it == agg.end())
                    throw MissingCellError("no scores for trial " + trial + ", class " + cls +
                                           ", band " + band);
                row.emplace_back(it->second.first, it->second.second);
            }
            out.cells[{trial, cls}] = std::move(row);
        }
    }
    return out;
}

Decisions fuse_and_decide(const IntervalLogits& logits, const FGFunctional& fg,
                          const AdmissibleOrder& ord, int threads) {
    if (fg.measure().n() != static_cast<int>(logits.bands.size()))
        throw ArityMismatchError("functional arity " + std::to_string(fg.measure().n()) +
                                 " does not match band count " +
                                 std::to_string(logits.bands.size()));
    Decisions d;
    d.trials = logits.trials;
    const std::size_t nt = d.trials.size();
    // Indexed result slots keep the outcome independent of thread scheduling.
    std::vector<std::string> decided(nt);
    std::vector<std::vector<Interval>> aggs(nt);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::string& trial = d.trials[i];
            aggs[i].reserve(logits.classes.size());
            std::size_t best = 0;
            for (std::size_t c = 0; c < logits.classes.size(); ++c) {
                const auto& cell = logits.cells.at({trial, logits.classes[c]});
                aggs[i].push_back(fg.evaluate(cell));
                // Strict improvement only: ties keep the smaller class id.
                if (c > 0 && ord.compare(aggs[i][best], aggs[i][c]) == Ordering::Less) best = c;
            }
            decided[i] = logits.classes[best];
        }
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1 || nt < 2) {
        work(0, nt);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (nt + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t b = std::min(nt, t * chunk), e = std::min(nt, (t + 1) * chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < nt; ++i) {
        d.decided[d.trials[i]] = decided[i];
        for (std::size_t c = 0; c < logits.classes.size(); ++c)
            d.aggregates[{d.trials[i], logits.classes[c]}] = aggs[i][c];
    }
    return d;
}

std::vector<Partition> make_partitions(const std::vector<std::string>& trial_ids, int k,
                                       double test_fraction, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("partition count must be >= 1");
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::invalid_argument("test fraction must lie in (0,1)");
    std::size_t n_test = static_cast<std::size_t>(trial_ids.size() * test_fraction + 0.5);
    if (n_test == 0 || trial_ids.empty())
        throw TooFewTrialsError("cannot split " + std::to_string(trial_ids.size()) +
                                " trials with test fraction " + std::to_string(test_fraction));
    std::mt19937_64 rng(seed);
    std::vector<Partition> out;
    out.reserve(k);
    std::vector<std::string> ids = trial_ids;
    std::sort(ids.begin(), ids.end());
    for (int i = 0; i < k; ++i) {
        std::shuffle(ids.begin(), ids.end(), rng);
        Partition p;
        p.test_ids.assign(ids.begin(), ids.begin() + n_test);
        p.train_ids.assign(ids.begin() + n_test, ids.end());
        std::sort(p.test_ids.begin(), p.test_ids.end());
        std::sort(p.train_ids.begin(), p.train_ids.end());
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

struct Counts {
    double accuracy = 0.0;
    double f1 = 0.0;
};

Counts score_subset(const Decisions& decisions,
                    const std::map<std::string, std::string>& labels,
                    const std::vector<std::string>& ids) {
    if (ids.empty()) throw EmptyPartitionError("empty test set");
    std::set<std::string> classes;
    for (const auto& [trial, cls] : labels) classes.insert(cls);
    int correct = 0;
    for (const auto& id : ids) {
        auto lit = labels.find(id);
        if (lit == labels.end()) throw UnlabeledTrialError("trial " + id + " has no label");
        auto dit = decisions.decided.find(id);
        if (dit == decisions.decided.end())
            throw UnlabeledTrialError("trial " + id + " has no decision");
        if (dit->second == lit->second) ++correct;
    }
    Counts c;
    c.accuracy = static_cast<double>(correct) / ids.size();

    auto f1_for = [&](const std::string& positive) {
        int tp = 0, fp = 0, fn = 0;
        for (const auto& id : ids) {
            bool truth = labels.at(id) == positive;
            bool pred = decisions.decided.at(id) == positive;
            if (pred && truth) ++tp;
            else if (pred && !truth) ++fp;
            else if (!pred && truth) ++fn;
        }
        double denom = 2.0 * tp + fp + fn;
        return denom > 0.0 ? 2.0 * tp / denom : 0.0;
    };

    std::vector<std::string> ordered(classes.begin(), classes.end());
    if (ordered.size() == 2) {
        c.f1 = f1_for(ordered[1]);  // lexicographically second class is positive
    } else {
        double sum = 0.0;
        for (const auto& cls : ordered) sum += f1_for(cls);
        c.f1 = ordered.empty() ? 0.0 : sum / ordered.size();
    }
    return c;
}

}  // namespace

FusionReport evaluate(const Decisions& decisions,
                      const std::map<std::string, std::string>& labels,
                      const std::vector<Partition>& partitions) {
    FusionReport r;
    if (partitions.empty()) {
        Counts c = score_subset(decisions, labels, decisions.trials);
        r.partition_accuracy.push_back(c.accuracy);
        r.partition_f1.push_back(c.f1);
    } else {
        for (const auto& p : partitions) {
            Counts c = score_subset(decisions, labels, p.test_ids);
            r.partition_accuracy.push_back(c.accuracy);
            r.partition_f1.push_back(c.f1);
        }
    }
    for (double a : r.partition_accuracy) r.accuracy += a;
    for (double f : r.partition_f1) r.f1 += f;
    r.accuracy /= r.partition_accuracy.size();
    r.f1 /= r.partition_f1.size();
    return r;
}

}  // namespace ivagg
