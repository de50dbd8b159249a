#include "cvnet/network.hpp"

#include <algorithm>
#include <string>

namespace cvnet {

namespace {

void check_sources(int y, const std::vector<std::pair<int, int>>& sources) {
    if (sources.empty()) throw StructuralError("topology: needs at least one source");
    std::vector<char> touched(y + 1, 0);
    for (const auto& [p, q] : sources) {
        if (p < 1 || p > y || q < 1 || q > y)
            throw StructuralError("topology: source endpoint out of range");
        if (p == q) throw StructuralError("topology: source endpoints must differ");
        touched[p] = touched[q] = 1;
    }
    for (int j = 1; j <= y; ++j)
        if (!touched[j])
            throw StructuralError("topology: party " + std::to_string(j)
                                  + " attached to no source");
}

} // namespace

NetworkTopology chain(int y) {
    if (y < 3) throw DomainError("chain: y must be >= 3");
    NetworkTopology t;
    t.party_count = y;
    t.family = Family::Chain;
    for (int i = 1; i < y; ++i) t.sources.emplace_back(i, i + 1);
    return t;
}

NetworkTopology star(int y) {
    if (y < 3) throw DomainError("star: y must be >= 3");
    NetworkTopology t;
    t.party_count = y;
    t.family = Family::Star;
    for (int j = 1; j < y; ++j) t.sources.emplace_back(j, y);
    return t;
}

NetworkTopology tree(int m, int f) {
    if (m < 2 || f < 2) throw DomainError("tree: requires m >= 2 and f >= 2");
    NetworkTopology t;
    t.family = Family::Tree;
    t.tree_m = m;
    t.tree_f = f;
    // party count (1 - f^m)/(1 - f), sources (f - f^m)/(1 - f); source i
    // connects party ceil(i/f) to party i+1 (level-order labels).
    long parties = 0, pw = 1;
    for (int level = 0; level < m; ++level) {
        parties += pw;
        pw *= f;
    }
    if (parties > 64) throw ResourceError("tree: more than 64 parties");
    t.party_count = static_cast<int>(parties);
    for (int i = 1; i < parties; ++i)
        t.sources.emplace_back((i + f - 1) / f, i + 1);
    return t;
}

NetworkTopology cycle(int y) {
    if (y < 3) throw DomainError("cycle: y must be >= 3");
    NetworkTopology t;
    t.party_count = y;
    t.family = Family::Cycle;
    for (int i = 1; i < y; ++i) t.sources.emplace_back(i, i + 1);
    t.sources.emplace_back(y, 1);
    return t;
}

NetworkTopology custom_topology(int party_count,
                                std::vector<std::pair<int, int>> sources) {
    if (party_count < 2) throw DomainError("topology: needs at least two parties");
    check_sources(party_count, sources);
    NetworkTopology t;
    t.party_count = party_count;
    t.sources = std::move(sources);
    t.family = Family::Custom;
    return t;
}

IndependentSet canonical_independent_set(const NetworkTopology& topo) {
    const int y = topo.party_count;
    IndependentSet K;
    switch (topo.family) {
        case Family::Chain:
            for (int j = (y % 2 == 1) ? 1 : 2; j <= y; j += 2) K.members.push_back(j);
            break;
        case Family::Star:
            for (int j = 1; j < y; ++j) K.members.push_back(j);
            break;
        case Family::Tree: {
            // Alternating layers: {1} plus layers 3,5,... for odd depth,
            // layers 2,4,... for even depth. Layer t holds f^{t-1} parties
            // starting right after the first (f^{t-1}-1)/(f-1) of them.
            const int m = topo.tree_m, f = topo.tree_f;
            int start = 1, width = 1;
            for (int t = 1; t <= m; ++t) {
                const bool take = (m % 2 == 1) ? (t % 2 == 1) : (t % 2 == 0);
                if (take)
                    for (int j = start; j < start + width; ++j) K.members.push_back(j);
                start += width;
                width *= f;
            }
            break;
        }
        case Family::Cycle:
            if (y % 2 == 1)
                for (int j = 1; j <= y - 2; j += 2) K.members.push_back(j);
            else
                for (int j = 2; j <= y; j += 2) K.members.push_back(j);
            break;
        case Family::Custom:
            return exact_independent_set(topo);
    }
    K.k = static_cast<int>(K.members.size());
    return K;
}

namespace {

struct MisSearch {
    const std::vector<std::uint32_t>& adj;
    int n;
    std::vector<int> best;

    // Plain branch and bound; candidates visited in increasing order so the
    // first maximum found is the lexicographically smallest.
    void run(int next, std::uint32_t blocked, std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) + (n - next) <= static_cast<int>(best.size()))
            return;
        if (next == n) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (!(blocked >> next & 1u)) {
            cur.push_back(next);
            run(next + 1, blocked | adj[next] | (1u << next), cur);
            cur.pop_back();
        }
        run(next + 1, blocked, cur);
    }
};

} // namespace

IndependentSet exact_independent_set(const NetworkTopology& topo) {
    const int n = topo.party_count;
    if (n > 24)
        throw ResourceError("exact_independent_set: capped at 24 parties; "
                            "use canonical_independent_set for the named families");
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [p, q] : topo.sources) {
        adj[p - 1] |= 1u << (q - 1);
        adj[q - 1] |= 1u << (p - 1);
    }
    MisSearch search{adj, n, {}};
    std::vector<int> cur;
    search.run(0, 0, cur);
    IndependentSet K;
    for (int j : search.best) K.members.push_back(j + 1);
    K.k = static_cast<int>(K.members.size());
    return K;
}

std::vector<PartyClass> classify_parties(const NetworkTopology& topo,
                                         const IndependentSet& K) {
    if (K.k < 1 || K.members.empty())
        throw StructuralError("classify_parties: empty independent set");
    std::vector<PartyClass> classes(topo.party_count + 1, PartyClass::NotInK);
    for (int j : K.members) {
        if (j < 1 || j > topo.party_count)
            throw StructuralError("classify_parties: member out of range");
        classes[j] = PartyClass::InK;
    }
    for (const auto& [p, q] : topo.sources)
        if (classes[p] == PartyClass::InK && classes[q] == PartyClass::InK)
            throw StructuralError("classify_parties: set is not independent, parties "
                                  + std::to_string(p) + " and " + std::to_string(q)
                                  + " share a source");
    return classes;
}

} // namespace cvnet
