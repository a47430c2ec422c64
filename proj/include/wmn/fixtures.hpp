#pragma once

#include <map>
#include <string>
#include <vector>

namespace wmn {

// Bundled results of a published comparison study of thirteen channel
// assignments on a 5x5 grid testbed: the two verbatim performance sequences
// it reports, its confidence-percentage table, and the sequence-error counts
// that table implies at n = 13.
struct ReferenceStudy {
    std::vector<std::string> throughput_sequence; // increasing observed throughput
    std::vector<std::string> cxls_sequence;       // increasing predicted performance

    // published_confidence[metric][basis], metrics: throughput/plr/md,
    // bases: tid/cdal/cxls.
    std::map<std::string, std::map<std::string, double>> published_confidence;
    std::map<std::string, std::map<std::string, int>> implied_errors;
};

const ReferenceStudy& reference_study();

struct FixtureCheck {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    bool pass = false;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;
    bool all_pass = false;
};

// Recomputes every derivable number in the fixture with this library's own
// sequence comparison and confidence arithmetic: the sequence-error count of
// the two bundled orderings (must be 4), each confidence percentage from its
// implied error count (within ±0.01 of the published value), and the exact
// error-count round-trip through the confidence formula.
FixtureReport check_reference_study(const ReferenceStudy& study = reference_study());

} // namespace wmn
