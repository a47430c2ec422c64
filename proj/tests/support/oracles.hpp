#pragma once

// Independent brute-force reference implementations for oracle testing. These
// deliberately avoid the library's algorithms: distances use Floyd-Warshall
// instead of BFS, paths are enumerated as raw node tuples, weights walk their
// own odometer, and the exhaustive search evaluates objectives with the
// oracle metrics rather than the library's.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wmn/conflict.hpp"
#include "wmn/estimators.hpp"
#include "wmn/model.hpp"

namespace oracle {

inline constexpr int kUnreachable = 1 << 28;

inline std::vector<std::vector<int>> all_pairs_distances(const wmn::WmnGraph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& l : g.links()) {
        d[static_cast<std::size_t>(l.a)][static_cast<std::size_t>(l.b)] = 1;
        d[static_cast<std::size_t>(l.b)][static_cast<std::size_t>(l.a)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
            }
        }
    }
    return d;
}

inline int link_distance(const wmn::WmnGraph& g, const wmn::Link& a, const wmn::Link& b) {
    auto d = all_pairs_distances(g);
    int best = kUnreachable;
    for (wmn::NodeId u : {a.a, a.b}) {
        for (wmn::NodeId v : {b.a, b.b}) {
            best = std::min(best, d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
        }
    }
    return best;
}

inline bool share_channel(const std::vector<wmn::ChannelId>& a,
                          const std::vector<wmn::ChannelId>& b) {
    for (wmn::ChannelId x : a) {
        for (wmn::ChannelId y : b) {
            if (x == y) return true;
        }
    }
    return false;
}

// All conflicting unordered link-index pairs under the same rules the library
// implements, derived from scratch.
inline std::set<std::pair<std::size_t, std::size_t>> conflict_pairs(
    const wmn::WmnGraph& g, const wmn::LinkChannelMap& lcm, int x, wmn::ConflictMode mode) {
    auto d = all_pairs_distances(g);
    const auto& links = lcm.links();
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < links.size(); ++i) {
        for (std::size_t j = 0; j < links.size(); ++j) {
            if (i >= j) continue;
            bool conflict = false;
            if (share_channel(lcm.common_channels(i), lcm.common_channels(j))) {
                int best = kUnreachable;
                for (wmn::NodeId u : {links[i].a, links[i].b}) {
                    for (wmn::NodeId v : {links[j].a, links[j].b}) {
                        best = std::min(
                            best, d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
                    }
                }
                conflict = best <= x - 1;
            }
            if (mode == wmn::ConflictMode::colocation_aware && links[i].shares_node(links[j])) {
                conflict = true;
            }
            if (conflict) out.emplace(i, j);
        }
    }
    return out;
}

// TID recomputed the long way: per-link degrees, halved.
inline double tid(const wmn::WmnGraph& g, const wmn::LinkChannelMap& lcm, int x,
                  wmn::ConflictMode mode) {
    auto pairs = conflict_pairs(g, lcm, x, mode);
    std::vector<int> degree(lcm.size(), 0);
    for (const auto& [i, j] : pairs) {
        ++degree[i];
        ++degree[j];
    }
    long long sum = 0;
    for (int v : degree) sum += v;
    return static_cast<double>(sum) / 2.0;
}

// Simple x-edge paths as canonical node tuples (first node < last node),
// found by trying every possible node sequence.
inline std::vector<std::vector<wmn::NodeId>> simple_paths(const wmn::WmnGraph& g, int x) {
    std::vector<std::vector<wmn::NodeId>> out;
    const int n = g.node_count();
    std::vector<wmn::NodeId> tuple(static_cast<std::size_t>(x + 1), 0);
    while (true) {
        bool ok = tuple.front() < tuple.back();
        if (ok) {
            std::set<wmn::NodeId> distinct(tuple.begin(), tuple.end());
            ok = distinct.size() == tuple.size();
        }
        if (ok) {
            for (std::size_t i = 0; ok && i + 1 < tuple.size(); ++i) {
                ok = g.has_edge(tuple[i], tuple[i + 1]);
            }
        }
        if (ok) out.push_back(tuple);

        std::size_t pos = tuple.size();
        while (pos-- > 0) {
            if (++tuple[pos] < n) break;
            tuple[pos] = 0;
            if (pos == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
    }
}

// Mean unique-channel count over the full channel-choice product for one
// path, via an index odometer and a counting map.
inline double path_weight(const std::vector<wmn::NodeId>& path, const wmn::LinkChannelMap& lcm) {
    std::vector<std::vector<wmn::ChannelId>> sets;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        sets.push_back(lcm.common_channels(wmn::Link(path[i], path[i + 1])));
        if (sets.back().empty()) return 0.0;
    }
    std::vector<std::size_t> idx(sets.size(), 0);
    unsigned long long count = 0;
    unsigned long long sum = 0;
    while (true) {
        std::map<wmn::ChannelId, int> uses;
        for (std::size_t i = 0; i < sets.size(); ++i) ++uses[sets[i][idx[i]]];
        int uniques = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (uses[sets[i][idx[i]]] == 1) ++uniques;
        }
        sum += static_cast<unsigned long long>(uniques);
        ++count;

        std::size_t pos = idx.size();
        bool done = true;
        while (pos-- > 0) {
            if (++idx[pos] < sets[pos].size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
            if (pos == 0) break;
        }
        if (done) return static_cast<double>(sum) / static_cast<double>(count);
    }
}

struct CxlsOracle {
    double total = 0.0;
    std::map<std::vector<wmn::NodeId>, double> per_path;
};

inline CxlsOracle cxls(const wmn::WmnGraph& g, const wmn::LinkChannelMap& lcm, int x) {
    CxlsOracle r;
    for (const auto& path : simple_paths(g, x)) {
        r.per_path[path] = path_weight(path, lcm);
    }
    // Totals are accumulated in the library's canonical order so the sums are
    // comparable bit for bit; the addends themselves come from this oracle.
    for (const auto& set : wmn::enumerate_xls(g, x)) {
        r.total += r.per_path.at(set.nodes());
    }
    return r;
}

inline double cdal(const wmn::WmnGraph& g, const wmn::LinkChannelMap& lcm,
                   const wmn::ChannelSet& cs) {
    std::map<wmn::ChannelId, double> lambda;
    for (wmn::ChannelId c : cs.ids()) lambda[c] = 0.0;
    for (std::size_t i = 0; i < lcm.size(); ++i) {
        const auto& chs = lcm.common_channels(i);
        for (wmn::ChannelId c : chs) lambda[c] += 1.0 / static_cast<double>(chs.size());
    }
    double mean = 0.0;
    for (const auto& [c, v] : lambda) mean += v;
    mean /= static_cast<double>(lambda.size());
    double var = 0.0;
    for (const auto& [c, v] : lambda) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(lambda.size()));
}

// Discordant pairs by direct position comparison of every label pair.
inline int eis(const std::vector<std::string>& reference,
               const std::vector<std::string>& predicted) {
    std::map<std::string, std::size_t> rp, pp;
    for (std::size_t i = 0; i < reference.size(); ++i) rp[reference[i]] = i;
    for (std::size_t i = 0; i < predicted.size(); ++i) pp[predicted[i]] = i;
    int bad = 0;
    for (const auto& [a, ra] : rp) {
        for (const auto& [b, rb] : rp) {
            if (a >= b) continue;
            const bool ref_before = ra < rb;
            const bool pred_before = pp.at(a) < pp.at(b);
            if (ref_before != pred_before) ++bad;
        }
    }
    return bad;
}

// Every size-k channel subset via bitmask filtering (the library builds them
// with an index odometer instead).
inline std::vector<std::vector<wmn::ChannelId>> subsets(const wmn::ChannelSet& cs, int k) {
    const auto& ids = cs.ids();
    std::vector<std::vector<wmn::ChannelId>> out;
    for (unsigned mask = 0; mask < (1u << ids.size()); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) != k) continue;
        std::vector<wmn::ChannelId> s;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (mask & (1u << i)) s.push_back(ids[i]);
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ExhaustiveOracle {
    std::vector<std::vector<wmn::ChannelId>> per_node;
    double objective = 0.0;
    unsigned long long candidates = 0;
};

// Recursive full search; objectives evaluated with the oracle tid/cxls above.
inline ExhaustiveOracle exhaustive(const wmn::WmnGraph& g, const wmn::ChannelSet& cs,
                                   int channels_per_node, int x, bool maximize_cxls) {
    std::vector<std::vector<std::vector<wmn::ChannelId>>> options;
    for (wmn::NodeId i = 0; i < g.node_count(); ++i) {
        int k = std::min(g.radios(i), static_cast<int>(cs.size()));
        if (channels_per_node > 0) k = std::min(k, channels_per_node);
        options.push_back(subsets(cs, k));
    }
    ExhaustiveOracle best;
    std::vector<std::vector<wmn::ChannelId>> current(options.size());

    auto recurse = [&](auto&& self, std::size_t node) -> void {
        if (node == options.size()) {
            ++best.candidates;
            wmn::ChannelAssignment ca(current);
            auto lcm = wmn::LinkChannelMap::from_assignment(g, ca);
            double obj = maximize_cxls ? cxls(g, lcm, x).total
                                       : tid(g, lcm, x, wmn::ConflictMode::conventional);
            bool better = best.per_node.empty() ||
                          (maximize_cxls ? obj > best.objective : obj < best.objective);
            if (better) {
                best.per_node = current;
                best.objective = obj;
            }
            return;
        }
        for (const auto& opt : options[node]) {
            current[node] = opt;
            self(self, node + 1);
        }
    };
    recurse(recurse, 0);
    return best;
}

} // namespace oracle
