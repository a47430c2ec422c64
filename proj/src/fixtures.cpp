#include "wmn/fixtures.hpp"

#include <cmath>

#include "wmn/errors.hpp"
#include "wmn/eval.hpp"

namespace wmn {

namespace {

constexpr double kConfidenceTolerance = 0.01;

ReferenceStudy make_study() {
    ReferenceStudy s;
    s.throughput_sequence = {"CCA_C",   "CLICA_C", "CCA_E",    "CLICA_E", "BFSCA_C",
                             "BFSCA_E", "MISCA_C", "OISCA_C",  "MISCA_E", "EIZMCA_C",
                             "OISCA_E", "EIZMCA_E", "GSCA"};
    s.cxls_sequence = {"CCA_C",   "CCA_E",    "CLICA_C", "BFSCA_C", "CLICA_E",
                       "BFSCA_E", "MISCA_C",  "OISCA_C", "EIZMCA_C", "MISCA_E",
                       "EIZMCA_E", "OISCA_E", "GSCA"};
    s.published_confidence = {
        {"throughput", {{"tid", 75.64}, {"cdal", 89.74}, {"cxls", 94.87}}},
        {"plr", {{"tid", 75.64}, {"cdal", 84.61}, {"cxls", 94.87}}},
        {"md", {{"tid", 76.92}, {"cdal", 88.46}, {"cxls", 91.02}}},
    };
    s.implied_errors = {
        {"throughput", {{"tid", 19}, {"cdal", 8}, {"cxls", 4}}},
        {"plr", {{"tid", 19}, {"cdal", 12}, {"cxls", 4}}},
        {"md", {{"tid", 18}, {"cdal", 9}, {"cxls", 7}}},
    };
    return s;
}

} // namespace

const ReferenceStudy& reference_study() {
    static const ReferenceStudy s = make_study();
    return s;
}

FixtureReport check_reference_study(const ReferenceStudy& study) {
    if (study.throughput_sequence.size() != 13 || study.cxls_sequence.size() != 13) {
        throw ValidationError("reference study must rank 13 assignments");
    }
    const int n = 13;
    FixtureReport rep;
    rep.all_pass = true;
    auto add = [&rep](std::string name, double expected, double actual, bool pass) {
        rep.checks.push_back({std::move(name), expected, actual, pass});
        rep.all_pass = rep.all_pass && pass;
    };

    CaSequence observed{study.throughput_sequence, "throughput", {}};
    CaSequence predicted{study.cxls_sequence, "cxls", {}};
    const int eis = error_in_sequence(observed, predicted);
    add("eis(cxls vs throughput sequences)", 4.0, static_cast<double>(eis), eis == 4);

    for (const auto& [metric, row] : study.published_confidence) {
        for (const auto& [basis, published] : row) {
            auto mit = study.implied_errors.find(metric);
            if (mit == study.implied_errors.end() || !mit->second.count(basis)) {
                throw ValidationError("reference study has no error count for " + metric + "/" +
                                      basis);
            }
            const int e = mit->second.at(basis);
            const double doc = degree_of_confidence(e, n);
            add("doc(" + metric + ", " + basis + ")", published, doc,
                std::abs(doc - published) <= kConfidenceTolerance);
            const int back = eis_from_confidence(doc, n);
            add("eis round-trip(" + metric + ", " + basis + ")", static_cast<double>(e),
                static_cast<double>(back), back == e);
        }
    }

    // The published confidence table itself must invert to the bundled error
    // counts; this ties the fixture's two halves together.
    for (const auto& [metric, row] : study.published_confidence) {
        for (const auto& [basis, published] : row) {
            const int e = study.implied_errors.at(metric).at(basis);
            const int inverted = eis_from_confidence(published, n);
            add("published inversion(" + metric + ", " + basis + ")", static_cast<double>(e),
                static_cast<double>(inverted), inverted == e);
        }
    }
    return rep;
}

} // namespace wmn
