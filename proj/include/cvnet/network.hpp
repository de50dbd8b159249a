#pragma once

#include <utility>
#include <vector>

#include "cvnet/errors.hpp"

namespace cvnet {

enum class Family { Chain, Star, Tree, Cycle, Custom };

/// Depth-2 network: y parties, each source a (p, q) pair of party indices
/// (1-based). The first arm of a source always feeds p, the second q; this
/// ordering decides which marginal applies to which party for asymmetric
/// sources.
struct NetworkTopology {
    int party_count = 0;
    std::vector<std::pair<int, int>> sources;
    Family family = Family::Custom;
    int tree_m = 0;
    int tree_f = 0;
};

NetworkTopology chain(int y);
NetworkTopology star(int y);
NetworkTopology tree(int m, int f);
NetworkTopology cycle(int y);

/// Validates and wraps an arbitrary source list (every party covered,
/// endpoints distinct and in range).
NetworkTopology custom_topology(int party_count,
                                std::vector<std::pair<int, int>> sources);

/// A set K of parties no two of which share a source.
struct IndependentSet {
    std::vector<int> members;  // sorted, 1-based
    int k = 0;
};

/// The analytic maximum independent set for each constructor family:
/// chain odd {1,3,...,y} / even {2,4,...,y}, star {1,...,y-1}, tree by
/// alternating layers, cycle odd {1,3,...,y-2} / even {2,4,...,y}.
/// Falls back to exact_independent_set for custom topologies.
IndependentSet canonical_independent_set(const NetworkTopology& topo);

/// Exhaustive maximum independent set (branch and bound on the party-sharing
/// graph); ties broken toward the lexicographically smallest member list.
/// Capped at 24 parties.
IndependentSet exact_independent_set(const NetworkTopology& topo);

enum class PartyClass { InK, NotInK };

/// Per-party classification against K. Verifies that K is independent and
/// in range; afterwards no source can have two InK endpoints.
std::vector<PartyClass> classify_parties(const NetworkTopology& topo,
                                         const IndependentSet& K);

} // namespace cvnet
