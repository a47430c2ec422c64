#pragma once

#include <cstdint>

#include "wmn/model.hpp"

namespace wmn {

enum class CaKind { random, greedy, exhaustive };
enum class CaObjective { min_tid, max_cxls };

// Generator parameters. radios_per_node limits how many channels a node
// receives; 0 means "as many as the node's radios allow". The effective
// per-node count is min(radios at the node, radios_per_node or channel count).
struct CaGenSpec {
    CaKind kind = CaKind::random;
    std::uint64_t seed = 0;
    int radios_per_node = 0;
    CaObjective objective = CaObjective::min_tid;
    int impact_factor = 2;
    std::uint64_t candidate_cap = 1'000'000; // exhaustive search refusal threshold
};

// Uniform distinct channels per node; identical seeds give identical results.
ChannelAssignment generate_random_ca(const WmnGraph& g, const ChannelSet& cs,
                                     const CaGenSpec& spec);

// Nodes visited in breadth-first order from a seed-chosen root; each receives
// the channel subset minimizing (newly created conflicts, newly dead links,
// per-channel collision multiplicity), ties going to the lexicographically
// smallest subset.
ChannelAssignment generate_greedy_ca(const WmnGraph& g, const ChannelSet& cs,
                                     const CaGenSpec& spec);

struct ExhaustiveResult {
    ChannelAssignment ca;
    double objective = 0.0;
    std::uint64_t candidates = 0;
};

// Full enumeration of per-node channel subsets (size exactly the effective
// per-node count), returning the assignment optimizing spec.objective; ties
// go to the lexicographically smallest assignment. Throws LimitError when the
// candidate count exceeds spec.candidate_cap.
ExhaustiveResult generate_exhaustive_ca(const WmnGraph& g, const ChannelSet& cs,
                                        const CaGenSpec& spec);

} // namespace wmn
