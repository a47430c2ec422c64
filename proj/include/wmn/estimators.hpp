#pragma once

#include <cstdint>
#include <vector>

#include "wmn/model.hpp"

namespace wmn {

// A simple path of exactly x consecutive links. Stored in canonical
// orientation (first node < last node) so each undirected path appears once.
struct XLinkSet {
    std::vector<Link> links;

    std::vector<NodeId> nodes() const;

    friend auto operator<=>(const XLinkSet&, const XLinkSet&) = default;
};

// All simple paths of exactly x edges in g, canonically oriented and sorted.
// For x = 1 this is exactly the link set.
std::vector<XLinkSet> enumerate_xls(const WmnGraph& g, int x);

struct XlsWeight {
    double value = 0.0;
    bool dead = false;    // a member link had no common channel; weight forced to 0
    bool sampled = false; // combination space exceeded the cap; value is a seeded estimate
};

// Full Cartesian products beyond this many combinations are estimated by
// seeded uniform sampling instead of enumerated.
inline constexpr std::uint64_t kDefaultCombinationCap = 1'000'000;

// Mean, over every equally probable combination of per-link channel choices,
// of the number of links whose chosen channel is unique within the set. Lies
// in [0, x]: 0 when all links share one channel, x when all choices are
// pairwise distinct.
XlsWeight xls_weight(const XLinkSet& xls, const LinkChannelMap& lcm,
                     std::uint64_t combination_cap = kDefaultCombinationCap);

struct CxlsResult {
    double total = 0.0;
    std::vector<std::pair<XLinkSet, XlsWeight>> per_set; // canonical order
    int x = 1;
    bool any_dead = false;
    bool any_sampled = false;
};

// Cumulative weight over all x-link sets; higher predicts better assignment
// performance. per_set is summed in canonical enumeration order so results
// are bit-identical across runs.
CxlsResult cxls_wt(const WmnGraph& g, const LinkChannelMap& lcm, int x,
                   std::uint64_t combination_cap = kDefaultCombinationCap);
CxlsResult cxls_wt(const WmnGraph& g, const ChannelAssignment& ca, const ChannelSet& cs, int x,
                   std::uint64_t combination_cap = kDefaultCombinationCap);

// Equitability of channel use across links: each link spreads one unit of
// count equally over its common channels, and the cost is the population
// standard deviation of the per-channel totals (every channel of cs counted,
// used or not). Lower is more equitable. Dead links contribute nothing.
double cdal_cost(const WmnGraph& g, const LinkChannelMap& lcm, const ChannelSet& cs);

} // namespace wmn
