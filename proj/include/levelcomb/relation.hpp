#ifndef LEVELCOMB_RELATION_HPP
#define LEVELCOMB_RELATION_HPP

#include <set>
#include <vector>

#include "levelcomb/words.hpp"

namespace levelcomb {

/// Finite set of ordered pairs of equal-length words at one level.
struct LevelRelation {
    nat level = 0;
    std::set<WordPair> pairs;

    LevelRelation() = default;
    explicit LevelRelation(nat l) : level(l) {}

    void insert(Word a, Word b);
    bool contains(const Word& a, const Word& b) const;
    nat size() const { return pairs.size(); }
};

/// Abstract finite digraph over opaque integer labels.
struct FiniteGraphInstance {
    std::set<nat> vertices;
    std::set<std::pair<nat, nat>> edges;

    void add_edge(nat a, nat b);
};

/// A ∪ A⁻¹; idempotent.
LevelRelation symmetrize(const LevelRelation& r);
FiniteGraphInstance symmetrize(const FiniteGraphInstance& g);

enum class Decoration { Equal, Box, Left, Right };

/// Adds the level-l diagonal pairs selected by e: none (=), all (□),
/// words starting with 0 (⊏), words starting with 1 (⊐).
LevelRelation decorate(const LevelRelation& r, Decoration e);

struct RelationPredicates {
    bool symmetric = false;
    bool antisymmetric = false;
    bool irreflexive = false;
    bool oriented_graph = false; // irreflexive and antisymmetric
    bool graph = false;          // irreflexive and symmetric
};

RelationPredicates relation_predicates(const LevelRelation& r);

/// Tagged vertex (eps, z) encoded as 2z + eps.
nat tagged_vertex(int eps, nat z);

/// Bipartite lift: edges (0,z) -> (1,z') exactly for (z,z') in the relation.
/// Vertices are both tagged copies of the whole level cube.
FiniteGraphInstance g_lift(const LevelRelation& r);
FiniteGraphInstance g_lift(const FiniteGraphInstance& g);

/// View of a level relation as a graph on vertex labels 0..2^l - 1.
FiniteGraphInstance as_graph(const LevelRelation& r);

nat word_to_vertex(const Word& w);
Word vertex_to_word(nat v, nat level);

} // namespace levelcomb

#endif
