#include "levelcomb/transfer.hpp"

#include <set>

namespace levelcomb {

void require_column_preserving_injection(const PartialInjection& i) {
    std::set<nat> images;
    for (const auto& [m, im] : i) {
        if (!images.insert(im).second)
            throw PreconditionError("injection collides at image " + std::to_string(im));
        if (unpair(im).first != unpair(m).first)
            throw PreconditionError("injection moves " + std::to_string(m) +
                                    " out of its column");
    }
}

PartialInjection transfer_injection(const PartialInjection& i, nat n) {
    require_column_preserving_injection(i);
    PartialInjection I;
    for (const auto& [m, im] : i) {
        auto [m0, m1] = unpair(m);
        auto [m00, m01] = unpair(m0);
        if (m00 != n)
            continue; // m is not in the n-th phi column
        nat p = pair_code(m01, m1);
        I[p] = pair_code(unpair(p).first, unpair(im).second);
    }
    return I;
}

InvarianceReport vertical_invariance_check(BasicIdeal ideal, const PartialInjection& i,
                                           const std::vector<EpPoint>& xs) {
    require_column_preserving_injection(i);
    auto member = [&](const EpPoint& x) {
        return ideal == BasicIdeal::Fin ? fin_member(x) : i3_member(x);
    };
    InvarianceReport rep;
    for (const auto& x : xs) {
        auto supp = x.support();
        nat max_pos = 0;
        for (nat m : supp) {
            auto it = i.find(m);
            if (it == i.end())
                throw PreconditionError("support position " + std::to_string(m) +
                                        " is outside the injection domain");
            max_pos = std::max(max_pos, it->second);
        }
        Word moved = Word::zeros(supp.empty() ? 0 : max_pos + 1);
        for (nat m : supp)
            moved.set_bit(i.at(m), 1);
        EpPoint y(std::move(moved), Word::from_string("0"));
        if (member(x).verdict != member(y).verdict)
            rep.asymmetries.push_back("membership changed under the injection for prefix " +
                                      x.prefix().str());
    }
    rep.ok = rep.asymmetries.empty();
    return rep;
}

Word assemble_section_reduction(const std::vector<SectionMap>& sections, const Word& x,
                                nat out_length) {
    std::vector<Word> values(sections.size());
    std::vector<bool> ready(sections.size(), false);
    Word out = Word::zeros(out_length);
    for (nat q = 0; q < out_length; ++q) {
        auto [q0, q1] = unpair(q);
        auto [n, q01] = unpair(q0);
        if (n >= sections.size())
            throw PreconditionError("no section for column " + std::to_string(n) +
                                    " demanded at position " + std::to_string(q));
        if (!ready[n]) {
            values[n] = sections[n](x);
            ready[n] = true;
        }
        nat inner = pair_code(q01, q1);
        if (inner >= values[n].size())
            throw PreconditionError("section " + std::to_string(n) +
                                    " too short for position " + std::to_string(inner));
        if (values[n].bit(inner))
            out.set_bit(q, 1);
    }
    return out;
}

} // namespace levelcomb
