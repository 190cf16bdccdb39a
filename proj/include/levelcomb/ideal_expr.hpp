#ifndef LEVELCOMB_IDEAL_EXPR_HPP
#define LEVELCOMB_IDEAL_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levelcomb/ep.hpp"

namespace levelcomb {

/// Expression tree over {FIN, I3, M(children...), A(children...)}. Children
/// are a listed prefix plus either repeat-last or a lazily expanded named
/// affine family (the hierarchy builders need child n to depend on n).
class IdealExpr {
  public:
    enum class Op { Fin, I3, M, A };

    struct FamilyTail {
        char letter; // 'I' or 'J'
        nat a = 0;   // child n expands named(letter, a + b*n)
        nat b = 0;
        bool omega = false; // indices count past the first limit stage
    };

    using Ptr = std::shared_ptr<const IdealExpr>;

    static Ptr fin();
    static Ptr i3();
    static Ptr m_node(std::vector<Ptr> children, std::optional<FamilyTail> tail = {});
    static Ptr a_node(std::vector<Ptr> children, std::optional<FamilyTail> tail = {});

    /// Named hierarchy: index k >= 3 at the finite stages.
    static Ptr named_I(nat k);
    static Ptr named_I_omega_plus(nat j);
    static Ptr named_J_omega_plus(nat j);

    Op op() const { return op_; }
    bool leaf() const { return op_ == Op::Fin || op_ == Op::I3; }
    Ptr child(nat n) const;

    std::string to_json() const;
    static Ptr from_json(const std::string& text);

  private:
    Op op_;
    std::vector<Ptr> children_;
    std::optional<FamilyTail> tail_;

    friend struct IdealExprAccess;
};

/// Three-valued membership with only sound certificates:
///  - finitely supported points lie in every expressible ideal (all free),
///  - cofinitely supported points lie in none,
///  - FIN / I3 are exact on any eventually periodic point,
///  - other composites report Unknown carrying the bound.
Membership ideal_member(const IdealExpr::Ptr& e, const EpPoint& x, nat bound);

} // namespace levelcomb

#endif
