#include "wmn/eval.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "wmn/errors.hpp"

namespace wmn {

namespace {

long long pairs_of(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

} // namespace

Direction direction_for_observed(const std::string& metric) {
    if (metric == "throughput") return Direction::higher_is_better;
    if (metric == "plr" || metric == "md") return Direction::lower_is_better;
    throw ValidationError("unknown observed metric \"" + metric +
                          "\" (expected throughput, plr or md)");
}

Direction direction_for_predicted(const std::string& basis) {
    if (basis == "cxls") return Direction::higher_is_better;
    if (basis == "tid" || basis == "cdal") return Direction::lower_is_better;
    throw ValidationError("unknown prediction basis \"" + basis +
                          "\" (expected tid, cdal or cxls)");
}

CaSequence order_cas(const std::vector<std::pair<std::string, double>>& values,
                     Direction direction, const std::string& basis) {
    if (values.size() < 2) throw ValidationError("ordering needs at least two assignments");
    std::set<std::string> seen;
    for (const auto& [label, v] : values) {
        if (!seen.insert(label).second) throw ValidationError("duplicate label \"" + label + "\"");
        if (!std::isfinite(v)) {
            throw ValidationError("value for \"" + label + "\" is not finite");
        }
    }

    std::vector<std::pair<std::string, double>> sorted = values;
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) {
            return direction == Direction::higher_is_better ? a.second < b.second
                                                            : a.second > b.second;
        }
        return a.first < b.first;
    });

    CaSequence seq;
    seq.basis = basis;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        seq.labels.push_back(sorted[i].first);
        bool tie = (i > 0 && sorted[i - 1].second == sorted[i].second) ||
                   (i + 1 < sorted.size() && sorted[i + 1].second == sorted[i].second);
        if (tie) seq.tied.push_back(sorted[i].first);
    }
    return seq;
}

CaSequence order_cas(const std::map<std::string, double>& values, Direction direction,
                     const std::string& basis) {
    return order_cas(std::vector<std::pair<std::string, double>>(values.begin(), values.end()),
                     direction, basis);
}

int error_in_sequence(const CaSequence& reference, const CaSequence& predicted) {
    if (reference.labels.size() != predicted.labels.size()) {
        throw ValidationError("sequences rank different numbers of assignments");
    }
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < predicted.labels.size(); ++i) {
        if (!pos.emplace(predicted.labels[i], i).second) {
            throw ValidationError("duplicate label \"" + predicted.labels[i] + "\"");
        }
    }
    std::vector<std::size_t> ranks;
    ranks.reserve(reference.labels.size());
    for (const std::string& l : reference.labels) {
        auto it = pos.find(l);
        if (it == pos.end()) throw ValidationError("label \"" + l + "\" missing from one sequence");
        ranks.push_back(it->second);
    }
    int discordant = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        for (std::size_t j = i + 1; j < ranks.size(); ++j) {
            if (ranks[i] > ranks[j]) ++discordant;
        }
    }
    return discordant;
}

double degree_of_confidence(int eis, int n) {
    if (n < 2) throw ValidationError("confidence needs at least two assignments");
    const long long all = pairs_of(n);
    if (eis < 0 || eis > all) {
        throw ValidationError("sequence error count " + std::to_string(eis) +
                              " outside [0, " + std::to_string(all) + "]");
    }
    return (1.0 - static_cast<double>(eis) / static_cast<double>(all)) * 100.0;
}

int eis_from_confidence(double doc_percent, int n) {
    if (n < 2) throw ValidationError("confidence needs at least two assignments");
    if (doc_percent < 0.0 || doc_percent > 100.0) {
        throw ValidationError("confidence percentage outside [0, 100]");
    }
    const long long all = pairs_of(n);
    return static_cast<int>(std::llround((1.0 - doc_percent / 100.0) * static_cast<double>(all)));
}

EvalReport build_report(const std::map<std::string, MetricValues>& observed,
                        const std::map<std::string, MetricValues>& predicted) {
    if (observed.empty()) throw ValidationError("no observed metrics given");
    if (predicted.empty()) throw ValidationError("no prediction bases given");

    const MetricValues& first = observed.begin()->second;
    std::set<std::string> labels;
    for (const auto& [l, v] : first) labels.insert(l);
    auto check_labels = [&](const MetricValues& vals, const std::string& what) {
        std::set<std::string> got;
        for (const auto& [l, v] : vals) got.insert(l);
        if (got != labels) {
            throw ValidationError("label set for \"" + what +
                                  "\" does not match the other tables");
        }
    };

    EvalReport rep;
    rep.n = static_cast<int>(labels.size());
    if (rep.n < 2) throw ValidationError("need at least two assignments to compare");

    for (const auto& [metric, vals] : observed) {
        check_labels(vals, metric);
        rep.metrics.push_back(metric);
        rep.observed_sequences.emplace(
            metric, order_cas(vals, direction_for_observed(metric), metric));
    }
    for (const auto& [basis, vals] : predicted) {
        check_labels(vals, basis);
        rep.bases.push_back(basis);
        rep.predicted_sequences.emplace(basis,
                                        order_cas(vals, direction_for_predicted(basis), basis));
    }
    for (const auto& [basis, pseq] : rep.predicted_sequences) {
        for (const auto& [metric, oseq] : rep.observed_sequences) {
            int e = error_in_sequence(oseq, pseq);
            rep.eis[{basis, metric}] = e;
            rep.doc[{basis, metric}] = degree_of_confidence(e, rep.n);
        }
    }
    return rep;
}

std::string scatter_csv(const MetricValues& predicted, const MetricValues& observed) {
    std::ostringstream out;
    out << "ca_label,predicted_value,observed_value\n";
    for (const auto& [label, pv] : predicted) {
        auto it = observed.find(label);
        if (it == observed.end()) {
            throw ValidationError("label \"" + label + "\" missing observed value");
        }
        out << label << ',' << pv << ',' << it->second << '\n';
    }
    return out.str();
}

} // namespace wmn
