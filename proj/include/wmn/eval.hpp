#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmn/model.hpp"

namespace wmn {

// Whether larger metric values mean better assignment performance.
enum class Direction { higher_is_better, lower_is_better };

// Observed metrics: throughput improves as it rises, plr and md as they fall.
Direction direction_for_observed(const std::string& metric);
// Prediction bases: cxls predicts better performance as it rises, tid and
// cdal as they fall.
Direction direction_for_predicted(const std::string& basis);

// Assignment labels ordered by increasing (expected or observed) performance.
struct CaSequence {
    std::vector<std::string> labels;
    std::string basis;
    std::vector<std::string> tied; // labels whose order fell back to the name
};

// Sorts labels so performance increases along the sequence; equal values are
// ordered by label and reported in `tied`. Throws on duplicate labels or
// non-finite values.
CaSequence order_cas(const std::vector<std::pair<std::string, double>>& values,
                     Direction direction, const std::string& basis);
CaSequence order_cas(const std::map<std::string, double>& values, Direction direction,
                     const std::string& basis);

// Number of unordered label pairs whose relative order differs between the
// two sequences (their Kendall tau distance). Both must hold the same labels.
int error_in_sequence(const CaSequence& reference, const CaSequence& predicted);

// (1 - eis / C(n,2)) * 100.
double degree_of_confidence(int eis, int n);

// Smallest eis whose confidence percentage rounds to doc_percent; exact
// inverse of degree_of_confidence up to rounding at two decimals.
int eis_from_confidence(double doc_percent, int n);

using MetricValues = std::map<std::string, double>;

struct EvalReport {
    int n = 0;
    std::vector<std::string> metrics; // observed, sorted
    std::vector<std::string> bases;   // predicted, sorted
    std::map<std::pair<std::string, std::string>, int> eis;    // (basis, metric)
    std::map<std::pair<std::string, std::string>, double> doc; // same keys
    std::map<std::string, CaSequence> observed_sequences;      // keyed by metric
    std::map<std::string, CaSequence> predicted_sequences;     // keyed by basis
};

// Full pairwise comparison of every prediction basis against every observed
// metric. All value maps must share one label set.
EvalReport build_report(const std::map<std::string, MetricValues>& observed,
                        const std::map<std::string, MetricValues>& predicted);

// Scatter rows "ca_label,predicted_value,observed_value" for one basis/metric
// pair, labels sorted, header included.
std::string scatter_csv(const MetricValues& predicted, const MetricValues& observed);

} // namespace wmn
