#ifndef LEVELCOMB_LEVELS_HPP
#define LEVELCOMB_LEVELS_HPP

#include "levelcomb/relation.hpp"

namespace levelcomb {

/// Level l of the tent relation: {(s_n 0 w, s_n 1 w) : n + 1 + |w| = l}.
LevelRelation t_level(nat l);

/// Membership test for t_level without materializing the set.
bool t_member(const Word& a, const Word& b);

/// Level l of the closure levels from the b-recursion:
/// B_1 = {(0,1),(1,0)}, then append equal bits and add the split pair
/// (0 s_{l-1} 0, 1 s_{l-1} 1) both ways.
LevelRelation b_level(nat l);

/// Membership test via the box predicate on the closed symmetrized lift.
bool b_member(const Word& a, const Word& b);

enum class LiftKind { B0, T0, U0, GsG0, H0 };
LiftKind lift_kind_from_string(const std::string& s);

/// Level-l prefix pairs of the named lifted relation, built from t_level(l-1).
LevelRelation lift_level(LiftKind kind, nat l);

class Frame; // frame.hpp

/// Level l of the tag-stripped symmetrized tree body, diagonal removed.
LevelRelation d_level(const Frame& frame, nat l);

} // namespace levelcomb

#endif
