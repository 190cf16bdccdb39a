#include "levelcomb/graph_checks.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace levelcomb {

namespace {

struct UnionFind {
    std::unordered_map<nat, nat> parent;

    nat find(nat x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        nat r = x;
        while (parent[r] != r)
            r = parent[r];
        while (parent[x] != r) {
            nat nx = parent[x];
            parent[x] = r;
            x = nx;
        }
        return r;
    }

    bool unite(nat a, nat b) {
        nat ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        parent[ra] = rb;
        return true;
    }
};

std::set<std::pair<nat, nat>> undirected_simple_edges(const FiniteGraphInstance& g) {
    std::set<std::pair<nat, nat>> e;
    for (const auto& [a, b] : g.edges) {
        if (a == b)
            continue;
        e.emplace(std::min(a, b), std::max(a, b));
    }
    return e;
}

std::unordered_map<nat, std::vector<nat>> adjacency(const std::set<std::pair<nat, nat>>& edges) {
    std::unordered_map<nat, std::vector<nat>> adj;
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<nat> bfs_path(const std::unordered_map<nat, std::vector<nat>>& adj, nat s, nat t,
                          const std::pair<nat, nat>* skip) {
    if (s == t)
        return {s};
    std::unordered_map<nat, nat> prev;
    std::queue<nat> q;
    q.push(s);
    prev[s] = s;
    while (!q.empty()) {
        nat x = q.front();
        q.pop();
        auto it = adj.find(x);
        if (it == adj.end())
            continue;
        for (nat y : it->second) {
            if (skip) {
                nat lo = std::min(x, y), hi = std::max(x, y);
                if (lo == skip->first && hi == skip->second)
                    continue;
            }
            if (prev.count(y))
                continue;
            prev[y] = x;
            if (y == t) {
                std::vector<nat> path{t};
                nat c = t;
                while (c != s) {
                    c = prev[c];
                    path.push_back(c);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(y);
        }
    }
    return {};
}

} // namespace

AcyclicityReport is_acyclic(const FiniteGraphInstance& g) {
    AcyclicityReport rep;
    auto edges = undirected_simple_edges(g);
    UnionFind uf;
    for (const auto& e : edges) {
        if (!uf.unite(e.first, e.second)) {
            // The forest already connects the endpoints; the detour plus the
            // offending edge is the injective cycle witness.
            auto adj = adjacency(edges);
            rep.acyclic = false;
            rep.cycle = bfs_path(adj, e.first, e.second, &e);
            return rep;
        }
    }
    return rep;
}

AcyclicityReport is_acyclic(const LevelRelation& r) {
    return is_acyclic(as_graph(r));
}

bool is_connected(const FiniteGraphInstance& g) {
    if (g.vertices.empty())
        return true;
    UnionFind uf;
    for (const auto& [a, b] : g.edges)
        uf.unite(a, b);
    nat root = uf.find(*g.vertices.begin());
    for (nat v : g.vertices)
        if (uf.find(v) != root)
            return false;
    return true;
}

bool is_connected(const LevelRelation& r) {
    return is_connected(as_graph(r));
}

std::vector<nat> injective_path(const FiniteGraphInstance& g, nat s, nat t) {
    if (!g.vertices.count(s) || !g.vertices.count(t))
        throw Error("unreachable vertex: endpoint is not a vertex of the graph");
    if (!is_acyclic(g).acyclic)
        throw PreconditionError("injective_path requires an acyclic graph");
    if (!is_connected(g))
        throw PreconditionError("injective_path requires a connected graph");
    auto adj = adjacency(undirected_simple_edges(g));
    auto p = bfs_path(adj, s, t, nullptr);
    if (p.empty())
        throw Error("unreachable vertex: no path between the endpoints");
    return p;
}

std::vector<Word> injective_path(const LevelRelation& r, const Word& s, const Word& t) {
    auto p = injective_path(as_graph(r), word_to_vertex(s), word_to_vertex(t));
    std::vector<Word> out;
    out.reserve(p.size());
    for (nat v : p)
        out.push_back(vertex_to_word(v, r.level));
    return out;
}

ReflectionReport check_reflects_onto_range(const FiniteGraphInstance& G,
                                           const FiniteGraphInstance& H,
                                           const std::unordered_map<nat, nat>& h) {
    if (!is_acyclic(G).acyclic)
        throw PreconditionError("domain graph must be acyclic");
    if (!is_connected(G))
        throw PreconditionError("domain graph must be connected");
    if (!is_acyclic(H).acyclic)
        throw PreconditionError("target graph must be acyclic");
    std::unordered_map<nat, nat> seen;
    for (nat v : G.vertices) {
        auto it = h.find(v);
        if (it == h.end())
            throw PreconditionError("map is not total on the domain vertices: " + std::to_string(v));
        auto [pit, fresh] = seen.emplace(it->second, v);
        if (!fresh)
            throw PreconditionError("map is not injective: vertices " + std::to_string(pit->second) +
                                    " and " + std::to_string(v) + " collide");
    }
    auto Hs = symmetrize(H);
    auto Gs = symmetrize(G);
    for (const auto& [a, b] : Gs.edges)
        if (!Hs.edges.count({h.at(a), h.at(b)}))
            throw PreconditionError("map is not a homomorphism at edge (" + std::to_string(a) +
                                    ", " + std::to_string(b) + ")");
    ReflectionReport rep;
    for (nat x : G.vertices)
        for (nat y : G.vertices) {
            if (x == y)
                continue;
            if (Hs.edges.count({h.at(x), h.at(y)}) && !Gs.edges.count({x, y})) {
                rep.ok = false;
                rep.violation = "edge reflected nowhere: (" + std::to_string(x) + ", " +
                                std::to_string(y) + ")";
                return rep;
            }
        }
    return rep;
}

bool check_lift_acyclicity(const FiniteGraphInstance& A, LiftDirection dir,
                           const std::set<nat>* side0, const std::set<nat>* side1) {
    if (dir == LiftDirection::LiftStaysAcyclic) {
        auto p = [&] {
            bool irreflexive = true, antisymmetric = true;
            for (const auto& [a, b] : A.edges) {
                if (a == b)
                    irreflexive = false;
                else if (A.edges.count({b, a}))
                    antisymmetric = false;
            }
            return irreflexive || antisymmetric;
        }();
        if (!p)
            throw PreconditionError("relation must be irreflexive or antisymmetric");
        if (!is_acyclic(A).acyclic)
            throw PreconditionError("relation symmetrization must be acyclic");
        return is_acyclic(g_lift(A)).acyclic;
    }
    if (!side0 || !side1)
        throw PreconditionError("bipartition sides required");
    for (nat v : *side0)
        if (side1->count(v))
            throw PreconditionError("bipartition sides must be disjoint");
    for (const auto& [a, b] : A.edges)
        if (!side0->count(a) || !side1->count(b))
            throw PreconditionError("edge leaves the bipartition: (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")");
    if (!is_acyclic(g_lift(A)).acyclic)
        throw PreconditionError("lifted graph symmetrization must be acyclic");
    return is_acyclic(A).acyclic;
}

} // namespace levelcomb
