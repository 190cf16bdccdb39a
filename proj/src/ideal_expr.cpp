#include "levelcomb/ideal_expr.hpp"

#include "json.hpp"

namespace levelcomb {

struct IdealExprAccess {
    static IdealExpr::Ptr make(IdealExpr::Op op, std::vector<IdealExpr::Ptr> children,
                               std::optional<IdealExpr::FamilyTail> tail) {
        auto e = std::make_shared<IdealExpr>();
        e->op_ = op;
        e->children_ = std::move(children);
        e->tail_ = std::move(tail);
        if (!e->leaf() && e->children_.empty() && !e->tail_)
            throw PreconditionError("combinator node needs children");
        return e;
    }
    static const std::vector<IdealExpr::Ptr>& children(const IdealExpr& e) { return e.children_; }
    static const std::optional<IdealExpr::FamilyTail>& tail(const IdealExpr& e) { return e.tail_; }
};

namespace {

IdealExpr::Ptr expand_family(const IdealExpr::FamilyTail& t, nat n) {
    nat idx = checked_add(t.a, checked_mul(t.b, n));
    if (t.letter == 'I')
        return t.omega ? IdealExpr::named_I_omega_plus(idx) : IdealExpr::named_I(idx);
    return IdealExpr::named_J_omega_plus(idx);
}

} // namespace

IdealExpr::Ptr IdealExpr::fin() {
    return IdealExprAccess::make(Op::Fin, {}, {});
}

IdealExpr::Ptr IdealExpr::i3() {
    return IdealExprAccess::make(Op::I3, {}, {});
}

IdealExpr::Ptr IdealExpr::m_node(std::vector<Ptr> children, std::optional<FamilyTail> tail) {
    return IdealExprAccess::make(Op::M, std::move(children), std::move(tail));
}

IdealExpr::Ptr IdealExpr::a_node(std::vector<Ptr> children, std::optional<FamilyTail> tail) {
    return IdealExprAccess::make(Op::A, std::move(children), std::move(tail));
}

IdealExpr::Ptr IdealExpr::named_I(nat k) {
    if (k < 3)
        throw PreconditionError("named ideal index starts at 3");
    if (k == 3)
        return i3();
    if (k % 2 == 0)
        return a_node({named_I(k - 1)});
    return m_node({named_I(k - 1)});
}

IdealExpr::Ptr IdealExpr::named_I_omega_plus(nat j) {
    if (j == 0)
        return a_node({}, FamilyTail{'I', 3, 2, false});
    if (j % 2 == 1)
        return m_node({named_I_omega_plus(j - 1)});
    return a_node({named_I_omega_plus(j - 1)});
}

IdealExpr::Ptr IdealExpr::named_J_omega_plus(nat j) {
    if (j == 0)
        return m_node({fin()}, FamilyTail{'I', 2, 2, false});
    if (j % 2 == 1)
        return a_node({named_J_omega_plus(j - 1)});
    return m_node({named_J_omega_plus(j - 1)});
}

IdealExpr::Ptr IdealExpr::child(nat n) const {
    if (leaf())
        throw PreconditionError("leaf has no children");
    if (n < children_.size())
        return children_[n];
    if (tail_)
        return expand_family(*tail_, n);
    return children_.back();
}

namespace {

using nlohmann::json;

json expr_to_json(const IdealExpr& e) {
    json j;
    switch (e.op()) {
        case IdealExpr::Op::Fin:
            j["op"] = "FIN";
            return j;
        case IdealExpr::Op::I3:
            j["op"] = "I3";
            return j;
        case IdealExpr::Op::M:
            j["op"] = "M";
            break;
        case IdealExpr::Op::A:
            j["op"] = "A";
            break;
    }
    j["children"] = json::array();
    for (const auto& c : IdealExprAccess::children(e))
        j["children"].push_back(expr_to_json(*c));
    if (const auto& t = IdealExprAccess::tail(e)) {
        j["tail"] = {{"family", std::string(1, t->letter)},
                     {"a", t->a},
                     {"b", t->b},
                     {"omega", t->omega}};
    }
    return j;
}

IdealExpr::Ptr expr_from_json(const json& j) {
    std::string op = j.at("op").get<std::string>();
    if (op == "FIN")
        return IdealExpr::fin();
    if (op == "I3")
        return IdealExpr::i3();
    if (op == "I") {
        if (j.contains("omega_plus"))
            return IdealExpr::named_I_omega_plus(j.at("omega_plus").get<nat>());
        return IdealExpr::named_I(j.at("k").get<nat>());
    }
    if (op == "J")
        return IdealExpr::named_J_omega_plus(j.value("omega_plus", nat{0}));
    if (op != "M" && op != "A")
        throw PreconditionError("unknown ideal expression op: " + op);
    std::vector<IdealExpr::Ptr> children;
    if (j.contains("children"))
        for (const auto& c : j.at("children"))
            children.push_back(expr_from_json(c));
    std::optional<IdealExpr::FamilyTail> tail;
    if (j.contains("tail")) {
        const auto& t = j.at("tail");
        std::string fam = t.at("family").get<std::string>();
        if (fam != "I" && fam != "J")
            throw PreconditionError("unknown tail family: " + fam);
        tail = IdealExpr::FamilyTail{fam[0], t.value("a", nat{0}), t.value("b", nat{0}),
                                     t.value("omega", false)};
    }
    return op == "M" ? IdealExpr::m_node(std::move(children), std::move(tail))
                     : IdealExpr::a_node(std::move(children), std::move(tail));
}

} // namespace

std::string IdealExpr::to_json() const {
    return expr_to_json(*this).dump();
}

IdealExpr::Ptr IdealExpr::from_json(const std::string& text) {
    return expr_from_json(json::parse(text));
}

Membership ideal_member(const IdealExpr::Ptr& e, const EpPoint& x, nat bound) {
    // Every expressible ideal is free, so finitely supported points are
    // members; dually, a cofinitely supported point has cofinite sections
    // through every column, so it is a member of none of them.
    if (x.finitely_supported())
        return {Verdict::In, 0, "finitely supported"};
    if (x.period().size() == 1 && x.period().bit(0) == 1)
        return {Verdict::Out, 0, "cofinitely supported"};
    switch (e->op()) {
        case IdealExpr::Op::Fin:
            return fin_member(x);
        case IdealExpr::Op::I3:
            return i3_member(x);
        default:
            break;
    }
    // Sections of a genuinely periodic point are not eventually periodic
    // (the phi image mixes residues), so no finite certificate is available.
    return {Verdict::Unknown, bound, "no finite certificate for composite node"};
}

} // namespace levelcomb
