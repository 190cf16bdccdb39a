#ifndef LEVELCOMB_GRAPH_CHECKS_HPP
#define LEVELCOMB_GRAPH_CHECKS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "levelcomb/relation.hpp"

namespace levelcomb {

/// Result of a cycle search on the symmetrization: absent when acyclic,
/// otherwise an injective vertex sequence x_0..x_n (n >= 2) whose closing
/// pair (x_n, x_0) is also an edge.
struct AcyclicityReport {
    bool acyclic = true;
    std::vector<nat> cycle;
};

/// Acyclicity in the injective-path sense, decided on the symmetrization.
/// Diagonal pairs and doubled edges are not cycles.
AcyclicityReport is_acyclic(const FiniteGraphInstance& g);
AcyclicityReport is_acyclic(const LevelRelation& r);

bool is_connected(const FiniteGraphInstance& g);
bool is_connected(const LevelRelation& r);

/// The unique injective path between two vertices of a connected acyclic
/// graph (checked preconditions). The path for s = t is the singleton [s].
std::vector<nat> injective_path(const FiniteGraphInstance& g, nat s, nat t);
std::vector<Word> injective_path(const LevelRelation& r, const Word& s, const Word& t);

/// Edge-reflection checker: h must be an injective homomorphism from a
/// connected acyclic graph G into an acyclic graph H (all checked); verifies
/// that h reflects edges onto its range, i.e. is an isomorphism onto h[G].
struct ReflectionReport {
    bool ok = true;
    std::string violation; // empty when ok
};
ReflectionReport check_reflects_onto_range(const FiniteGraphInstance& G,
                                           const FiniteGraphInstance& H,
                                           const std::unordered_map<nat, nat>& h);

/// Bipartite-lift acyclicity transfer: direction A checks that an
/// irreflexive-or-antisymmetric relation with acyclic symmetrization has an
/// acyclic lift; direction B checks the converse for relations between two
/// disjoint vertex sets. Precondition violations are reported as errors.
enum class LiftDirection { LiftStaysAcyclic, UnliftStaysAcyclic };
bool check_lift_acyclicity(const FiniteGraphInstance& A, LiftDirection dir,
                           const std::set<nat>* side0 = nullptr,
                           const std::set<nat>* side1 = nullptr);

} // namespace levelcomb

#endif
