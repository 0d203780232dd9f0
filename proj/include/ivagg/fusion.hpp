#ifndef IVAGG_FUSION_HPP
#define IVAGG_FUSION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ivagg/fg.hpp"
#include "ivagg/interval.hpp"

namespace ivagg {

struct MissingCellError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ScoreOutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ArityMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnlabeledTrialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooFewTrialsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyPartitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-trial, per-band, per-classifier class scores in [0,1].
struct ScoreTable {
    struct Record {
        std::string trial_id;
        std::string band_id;
        std::string classifier_id;
        std::string class_id;
        double score = 0.0;
    };

    std::vector<Record> records;
    std::map<std::string, std::string> labels;  // trial_id -> class_id

    static ScoreTable load_csv(const std::string& scores_path, const std::string& labels_path);

    /// Optional preprocessing: per-trial min-max rescaling into [0,1].
    /// Scores are otherwise required to arrive already in range.
    void rescale_per_trial();
};

/// One interval per (trial, class, band): [min, max] over classifier scores.
struct IntervalLogits {
    std::vector<std::string> bands;    // sorted, identical across trials
    std::vector<std::string> classes;  // sorted
    std::vector<std::string> trials;   // sorted
    // intervals[(trial, class)] indexed by band position
    std::map<std::pair<std::string, std::string>, std::vector<Interval>> cells;
};

IntervalLogits build_interval_logits(const ScoreTable& table);

struct Decisions {
    std::vector<std::string> trials;
    std::map<std::string, std::string> decided;                // trial -> class
    std::map<std::pair<std::string, std::string>, Interval> aggregates;
};

/// Aggregates band intervals per class with the functional and picks the
/// maximal class under the order; ties go to the lexicographically smallest
/// class id. threads > 1 parallelizes across trials with identical results.
Decisions fuse_and_decide(const IntervalLogits& logits, const FGFunctional& fg,
                          const AdmissibleOrder& ord, int threads = 1);

struct Partition {
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
};

/// k seeded random splits with the given test fraction; reproducible.
std::vector<Partition> make_partitions(const std::vector<std::string>& trial_ids, int k,
                                       double test_fraction, std::uint64_t seed);

struct FusionReport {
    double accuracy = 0.0;  // averaged over partitions
    double f1 = 0.0;
    std::vector<double> partition_accuracy;
    std::vector<double> partition_f1;
};

/// Accuracy and F1 per partition (test side) and averaged. Binary F1 treats
/// the lexicographically second class as positive; multiclass uses macro-F1.
FusionReport evaluate(const Decisions& decisions,
                      const std::map<std::string, std::string>& labels,
                      const std::vector<Partition>& partitions);

}  // namespace ivagg

#endif  // IVAGG_FUSION_HPP
