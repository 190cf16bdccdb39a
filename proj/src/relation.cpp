#include "levelcomb/relation.hpp"

namespace levelcomb {

void LevelRelation::insert(Word a, Word b) {
    if (a.size() != level || b.size() != level)
        throw PreconditionError("level relation pair has wrong length at level " +
                                std::to_string(level) + ": (" + a.str() + ", " + b.str() + ")");
    pairs.emplace(std::move(a), std::move(b));
}

bool LevelRelation::contains(const Word& a, const Word& b) const {
    return pairs.count({a, b}) > 0;
}

void FiniteGraphInstance::add_edge(nat a, nat b) {
    vertices.insert(a);
    vertices.insert(b);
    edges.emplace(a, b);
}

LevelRelation symmetrize(const LevelRelation& r) {
    LevelRelation s(r.level);
    for (const auto& [a, b] : r.pairs) {
        s.pairs.emplace(a, b);
        s.pairs.emplace(b, a);
    }
    return s;
}

FiniteGraphInstance symmetrize(const FiniteGraphInstance& g) {
    FiniteGraphInstance s = g;
    for (const auto& [a, b] : g.edges)
        s.edges.emplace(b, a);
    return s;
}

LevelRelation decorate(const LevelRelation& r, Decoration e) {
    if ((e == Decoration::Left || e == Decoration::Right) && r.level == 0)
        throw PreconditionError("decorations on a half cube need level >= 1");
    LevelRelation d = r;
    if (e == Decoration::Equal)
        return d;
    nat count = r.level == 0 ? 1 : (nat{1} << r.level);
    for (nat v = 0; v < count; ++v) {
        Word w = vertex_to_word(v, r.level);
        if (e == Decoration::Left && (w.empty() || w.bit(0) != 0))
            continue;
        if (e == Decoration::Right && (w.empty() || w.bit(0) != 1))
            continue;
        d.pairs.emplace(w, w);
    }
    return d;
}

RelationPredicates relation_predicates(const LevelRelation& r) {
    RelationPredicates p;
    p.symmetric = true;
    p.antisymmetric = true;
    p.irreflexive = true;
    for (const auto& [a, b] : r.pairs) {
        if (a == b) {
            p.irreflexive = false;
            continue;
        }
        if (!r.contains(b, a))
            p.symmetric = false;
        else
            p.antisymmetric = false;
    }
    p.oriented_graph = p.irreflexive && p.antisymmetric;
    p.graph = p.irreflexive && p.symmetric;
    return p;
}

nat tagged_vertex(int eps, nat z) {
    return 2 * z + static_cast<nat>(eps);
}

FiniteGraphInstance g_lift(const LevelRelation& r) {
    FiniteGraphInstance g;
    nat count = r.level == 0 ? 1 : (nat{1} << r.level);
    for (nat v = 0; v < count; ++v) {
        g.vertices.insert(tagged_vertex(0, v));
        g.vertices.insert(tagged_vertex(1, v));
    }
    for (const auto& [a, b] : r.pairs)
        g.edges.emplace(tagged_vertex(0, word_to_vertex(a)), tagged_vertex(1, word_to_vertex(b)));
    return g;
}

FiniteGraphInstance g_lift(const FiniteGraphInstance& src) {
    FiniteGraphInstance g;
    for (nat v : src.vertices) {
        g.vertices.insert(tagged_vertex(0, v));
        g.vertices.insert(tagged_vertex(1, v));
    }
    for (const auto& [a, b] : src.edges)
        g.edges.emplace(tagged_vertex(0, a), tagged_vertex(1, b));
    return g;
}

FiniteGraphInstance as_graph(const LevelRelation& r) {
    FiniteGraphInstance g;
    nat count = r.level == 0 ? 1 : (nat{1} << r.level);
    for (nat v = 0; v < count; ++v)
        g.vertices.insert(v);
    for (const auto& [a, b] : r.pairs)
        g.edges.emplace(word_to_vertex(a), word_to_vertex(b));
    return g;
}

nat word_to_vertex(const Word& w) {
    if (w.size() > 62)
        throw OverflowError("word too long for a vertex label");
    nat v = 0;
    for (nat i = 0; i < w.size(); ++i)
        v = (v << 1) | static_cast<nat>(w.bit(i));
    return v;
}

Word vertex_to_word(nat v, nat level) {
    Word w = Word::zeros(level);
    for (nat i = 0; i < level; ++i)
        if ((v >> (level - 1 - i)) & 1u)
            w.set_bit(i, 1);
    return w;
}

} // namespace levelcomb
