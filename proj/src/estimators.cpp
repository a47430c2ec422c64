#include "wmn/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "wmn/rng.hpp"

namespace wmn {

namespace {

// Unique-channel count for one combination: choice[i] is link i's channel.
int unique_count(const std::vector<ChannelId>& choice) {
    int n = 0;
    for (std::size_t i = 0; i < choice.size(); ++i) {
        bool unique = true;
        for (std::size_t j = 0; j < choice.size(); ++j) {
            if (j != i && choice[j] == choice[i]) {
                unique = false;
                break;
            }
        }
        if (unique) ++n;
    }
    return n;
}

std::uint64_t stable_hash(const std::vector<NodeId>& nodes) {
    std::uint64_t h = 1469598103934665603ull;
    for (NodeId n : nodes) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(n));
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::vector<NodeId> XLinkSet::nodes() const {
    std::vector<NodeId> out;
    if (links.empty()) return out;
    // Reconstruct the node walk: the first node is the endpoint of link 0 not
    // shared with link 1 (for a single link, its smaller endpoint).
    NodeId first;
    if (links.size() == 1) {
        first = links[0].a;
    } else {
        first = links[1].touches(links[0].a) ? links[0].b : links[0].a;
    }
    out.push_back(first);
    NodeId cur = first;
    for (const Link& l : links) {
        cur = (l.a == cur) ? l.b : l.a;
        out.push_back(cur);
    }
    return out;
}

std::vector<XLinkSet> enumerate_xls(const WmnGraph& g, int x) {
    if (x < 1) throw ValidationError("impact factor must be at least 1");
    std::vector<XLinkSet> out;
    std::vector<NodeId> path;
    std::vector<bool> used(static_cast<std::size_t>(g.node_count()), false);

    auto extend = [&](auto&& self, NodeId cur) -> void {
        if (static_cast<int>(path.size()) == x + 1) {
            // Canonical orientation: smaller end node first.
            if (path.front() < path.back()) {
                XLinkSet s;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    s.links.emplace_back(path[i], path[i + 1]);
                }
                out.push_back(std::move(s));
            }
            return;
        }
        for (NodeId nxt : g.adjacency(cur)) {
            if (used[static_cast<std::size_t>(nxt)]) continue;
            used[static_cast<std::size_t>(nxt)] = true;
            path.push_back(nxt);
            self(self, nxt);
            path.pop_back();
            used[static_cast<std::size_t>(nxt)] = false;
        }
    };

    for (NodeId start = 0; start < g.node_count(); ++start) {
        used[static_cast<std::size_t>(start)] = true;
        path.push_back(start);
        extend(extend, start);
        path.pop_back();
        used[static_cast<std::size_t>(start)] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

XlsWeight xls_weight(const XLinkSet& xls, const LinkChannelMap& lcm,
                     std::uint64_t combination_cap) {
    if (xls.links.empty()) throw ValidationError("x-link set must not be empty");
    if (combination_cap == 0) throw ValidationError("combination cap must be positive");

    std::vector<const std::vector<ChannelId>*> sets;
    sets.reserve(xls.links.size());
    for (const Link& l : xls.links) {
        const auto& chs = lcm.common_channels(l);
        if (chs.empty()) return XlsWeight{0.0, true, false};
        sets.push_back(&chs);
    }

    std::uint64_t count = 1;
    bool overflow = false;
    for (const auto* s : sets) {
        if (count > combination_cap / s->size()) {
            overflow = true;
            break;
        }
        count *= s->size();
    }

    std::vector<ChannelId> choice(sets.size());
    if (!overflow) {
        // Exact mean over the full Cartesian product, walked odometer-style.
        std::vector<std::size_t> idx(sets.size(), 0);
        std::uint64_t sum = 0;
        for (std::uint64_t it = 0; it < count; ++it) {
            for (std::size_t i = 0; i < sets.size(); ++i) choice[i] = (*sets[i])[idx[i]];
            sum += static_cast<std::uint64_t>(unique_count(choice));
            for (std::size_t i = sets.size(); i-- > 0;) {
                if (++idx[i] < sets[i]->size()) break;
                idx[i] = 0;
            }
        }
        return XlsWeight{static_cast<double>(sum) / static_cast<double>(count), false, false};
    }

    // Combination space too large: estimate from cap-many seeded draws. The
    // seed depends only on the set's node walk, so reruns agree.
    Rng rng(stable_hash(xls.nodes()));
    std::uint64_t sum = 0;
    for (std::uint64_t it = 0; it < combination_cap; ++it) {
        for (std::size_t i = 0; i < sets.size(); ++i) {
            choice[i] = (*sets[i])[static_cast<std::size_t>(rng.below(sets[i]->size()))];
        }
        sum += static_cast<std::uint64_t>(unique_count(choice));
    }
    return XlsWeight{static_cast<double>(sum) / static_cast<double>(combination_cap), false, true};
}

CxlsResult cxls_wt(const WmnGraph& g, const LinkChannelMap& lcm, int x,
                   std::uint64_t combination_cap) {
    CxlsResult r;
    r.x = x;
    for (XLinkSet& s : enumerate_xls(g, x)) {
        XlsWeight w = xls_weight(s, lcm, combination_cap);
        r.total += w.value;
        r.any_dead = r.any_dead || w.dead;
        r.any_sampled = r.any_sampled || w.sampled;
        r.per_set.emplace_back(std::move(s), w);
    }
    return r;
}

CxlsResult cxls_wt(const WmnGraph& g, const ChannelAssignment& ca, const ChannelSet& cs, int x,
                   std::uint64_t combination_cap) {
    validate_assignment(g, cs, ca);
    return cxls_wt(g, LinkChannelMap::from_assignment(g, ca), x, combination_cap);
}

double cdal_cost(const WmnGraph& g, const LinkChannelMap& lcm, const ChannelSet& cs) {
    if (cs.size() == 0) throw ValidationError("channel set must not be empty");
    if (lcm.links() != g.links()) {
        throw ValidationError("link-channel map does not match the graph's links");
    }

    std::vector<double> counts(cs.size(), 0.0);
    const auto& ids = cs.ids();
    for (std::size_t i = 0; i < lcm.size(); ++i) {
        const auto& chs = lcm.common_channels(i);
        if (chs.empty()) continue;
        double share = 1.0 / static_cast<double>(chs.size());
        for (ChannelId c : chs) {
            auto it = std::lower_bound(ids.begin(), ids.end(), c);
            if (it == ids.end() || *it != c) {
                throw ValidationError("link uses channel " + std::to_string(c) +
                                      " outside the channel set");
            }
            counts[static_cast<std::size_t>(it - ids.begin())] += share;
        }
    }

    // Summation order fixed by sorting so relabeling channels cannot change
    // the floating-point result.
    std::sort(counts.begin(), counts.end());
    double mean = 0.0;
    for (double v : counts) mean += v;
    mean /= static_cast<double>(counts.size());
    double var = 0.0;
    for (double v : counts) var += (v - mean) * (v - mean);
    var /= static_cast<double>(counts.size());
    return std::sqrt(var);
}

} // namespace wmn
