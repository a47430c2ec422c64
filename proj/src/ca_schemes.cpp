#include "wmn/ca_schemes.hpp"

#include <algorithm>
#include <queue>

#include "wmn/conflict.hpp"
#include "wmn/estimators.hpp"
#include "wmn/rng.hpp"

namespace wmn {

namespace {

int effective_count(const WmnGraph& g, const ChannelSet& cs, const CaGenSpec& spec, NodeId i) {
    int k = std::min(g.radios(i), static_cast<int>(cs.size()));
    if (spec.radios_per_node > 0) k = std::min(k, spec.radios_per_node);
    return k;
}

// All size-k subsets of the channel set, in lexicographic order.
std::vector<std::vector<ChannelId>> subsets_of_size(const ChannelSet& cs, int k) {
    const auto& ids = cs.ids();
    if (k <= 0 || static_cast<std::size_t>(k) > ids.size()) {
        throw ValidationError("channel subset size out of range");
    }
    std::vector<std::vector<ChannelId>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        std::vector<ChannelId> s;
        s.reserve(idx.size());
        for (std::size_t i : idx) s.push_back(ids[i]);
        out.push_back(std::move(s));
        // Advance the combination odometer.
        std::size_t pos = idx.size();
        while (pos-- > 0) {
            if (idx[pos] + (idx.size() - pos) < ids.size()) {
                ++idx[pos];
                for (std::size_t q = pos + 1; q < idx.size(); ++q) idx[q] = idx[q - 1] + 1;
                break;
            }
            if (pos == 0) return out;
        }
    }
}

std::vector<NodeId> bfs_order(const WmnGraph& g, NodeId root) {
    std::vector<NodeId> order;
    std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
    auto run = [&](NodeId start) {
        std::queue<NodeId> q;
        q.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            order.push_back(u);
            for (NodeId v : g.adjacency(u)) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    q.push(v);
                }
            }
        }
    };
    run(root);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (!seen[static_cast<std::size_t>(i)]) run(i);
    }
    return order;
}

} // namespace

ChannelAssignment generate_random_ca(const WmnGraph& g, const ChannelSet& cs,
                                     const CaGenSpec& spec) {
    Rng rng(spec.seed);
    std::vector<std::vector<ChannelId>> per_node;
    per_node.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeId i = 0; i < g.node_count(); ++i) {
        int k = std::min(g.radios(i), spec.radios_per_node > 0 ? spec.radios_per_node
                                                               : g.radios(i));
        if (k > static_cast<int>(cs.size())) {
            throw ValidationError("node " + g.name(i) + " requests " + std::to_string(k) +
                                  " distinct channels but only " + std::to_string(cs.size()) +
                                  " exist");
        }
        // Partial Fisher-Yates: the first k slots are a uniform k-subset.
        std::vector<ChannelId> pool = cs.ids();
        for (int s = 0; s < k; ++s) {
            auto j = static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(s))) +
                     static_cast<std::size_t>(s);
            std::swap(pool[static_cast<std::size_t>(s)], pool[j]);
        }
        per_node.emplace_back(pool.begin(), pool.begin() + k);
    }
    return ChannelAssignment(std::move(per_node));
}

ChannelAssignment generate_greedy_ca(const WmnGraph& g, const ChannelSet& cs,
                                     const CaGenSpec& spec) {
    if (spec.impact_factor < 1) throw ValidationError("impact factor must be at least 1");
    const auto root = static_cast<NodeId>(spec.seed % static_cast<std::uint64_t>(g.node_count()));
    const auto order = bfs_order(g, root);

    std::vector<std::vector<ChannelId>> per_node(static_cast<std::size_t>(g.node_count()));
    std::vector<bool> assigned(per_node.size(), false);

    // Realized links so far, with their common channels.
    std::vector<Link> alive_links;
    std::vector<std::vector<ChannelId>> alive_channels;

    auto intersect = [](const std::vector<ChannelId>& a, const std::vector<ChannelId>& b) {
        std::vector<ChannelId> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };

    // Shared channels between two realized links, given both are within
    // conflict reach. Every candidate subset often creates the same number of
    // conflict pairs, so the pair count alone degenerates to the first subset
    // everywhere; the per-channel multiplicity breaks those ties toward
    // assignments that overlap conflicting neighbors on fewer channels.
    auto overlap = [](const std::vector<ChannelId>& a, const std::vector<ChannelId>& b) {
        long n = 0;
        for (ChannelId c : a) {
            if (std::binary_search(b.begin(), b.end(), c)) ++n;
        }
        return n;
    };

    for (NodeId u : order) {
        int k = effective_count(g, cs, spec, u);
        auto candidates = subsets_of_size(cs, k);

        long best_conflicts = -1;
        long best_dead = -1;
        long best_collisions = -1;
        const std::vector<ChannelId>* best = nullptr;
        std::vector<std::pair<Link, std::vector<ChannelId>>> best_new;

        for (const auto& cand : candidates) {
            long conflicts = 0;
            long dead = 0;
            long collisions = 0;
            std::vector<std::pair<Link, std::vector<ChannelId>>> fresh;
            for (NodeId v : g.adjacency(u)) {
                if (!assigned[static_cast<std::size_t>(v)]) continue;
                Link l(u, v);
                auto common = intersect(cand, per_node[static_cast<std::size_t>(v)]);
                if (common.empty()) {
                    ++dead;
                    continue;
                }
                for (std::size_t i = 0; i < alive_links.size(); ++i) {
                    const long shared = overlap(common, alive_channels[i]);
                    if (shared > 0 &&
                        link_distance(g, l, alive_links[i]) <= spec.impact_factor - 1) {
                        ++conflicts;
                        collisions += shared;
                    }
                }
                // Fresh links meeting at u can also conflict with each other.
                for (const auto& [fl, fc] : fresh) {
                    const long shared = overlap(common, fc);
                    if (shared > 0 && link_distance(g, l, fl) <= spec.impact_factor - 1) {
                        ++conflicts;
                        collisions += shared;
                    }
                }
                fresh.emplace_back(l, std::move(common));
            }
            // (conflicts, dead, collisions) lexicographic; candidates arrive
            // in ascending channel order, so strict improvement keeps the
            // smallest subset among full ties.
            const bool better =
                best == nullptr || conflicts < best_conflicts ||
                (conflicts == best_conflicts &&
                 (dead < best_dead || (dead == best_dead && collisions < best_collisions)));
            if (better) {
                best_conflicts = conflicts;
                best_dead = dead;
                best_collisions = collisions;
                best = &cand;
                best_new = std::move(fresh);
            }
        }

        per_node[static_cast<std::size_t>(u)] = *best;
        assigned[static_cast<std::size_t>(u)] = true;
        for (auto& [l, c] : best_new) {
            alive_links.push_back(l);
            alive_channels.push_back(std::move(c));
        }
    }
    return ChannelAssignment(std::move(per_node));
}

ExhaustiveResult generate_exhaustive_ca(const WmnGraph& g, const ChannelSet& cs,
                                        const CaGenSpec& spec) {
    if (spec.impact_factor < 1) throw ValidationError("impact factor must be at least 1");

    std::vector<std::vector<std::vector<ChannelId>>> choices;
    choices.reserve(static_cast<std::size_t>(g.node_count()));
    std::uint64_t total = 1;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        choices.push_back(subsets_of_size(cs, effective_count(g, cs, spec, i)));
        const std::uint64_t n = choices.back().size();
        if (total > spec.candidate_cap / n) {
            throw LimitError("exhaustive search space exceeds the cap of " +
                             std::to_string(spec.candidate_cap) + " candidate assignments");
        }
        total *= n;
    }

    auto evaluate = [&](const ChannelAssignment& ca) {
        auto lcm = LinkChannelMap::from_assignment(g, ca);
        if (spec.objective == CaObjective::min_tid) {
            return total_interference_degree(
                build_conflict_graph(g, lcm, spec.impact_factor, ConflictMode::conventional));
        }
        return cxls_wt(g, lcm, spec.impact_factor).total;
    };

    ExhaustiveResult result;
    result.candidates = total;
    std::vector<std::size_t> idx(choices.size(), 0);
    bool first = true;
    for (std::uint64_t it = 0; it < total; ++it) {
        std::vector<std::vector<ChannelId>> per_node;
        per_node.reserve(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i) per_node.push_back(choices[i][idx[i]]);
        ChannelAssignment ca(std::move(per_node));
        double obj = evaluate(ca);
        // Lexicographic enumeration + strict improvement = deterministic
        // smallest optimum.
        bool better = first || (spec.objective == CaObjective::min_tid ? obj < result.objective
                                                                       : obj > result.objective);
        if (better) {
            result.ca = std::move(ca);
            result.objective = obj;
            first = false;
        }
        for (std::size_t i = choices.size(); i-- > 0;) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
        }
    }
    return result;
}

} // namespace wmn
