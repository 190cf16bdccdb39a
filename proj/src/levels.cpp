#include "levelcomb/levels.hpp"

#include "levelcomb/frame.hpp"

namespace levelcomb {

LevelRelation t_level(nat l) {
    LevelRelation r(l);
    for (nat n = 0; n < l; ++n) {
        Word base = sn(n);
        nat wlen = l - n - 1;
        nat count = wlen >= 63 ? 0 : (nat{1} << wlen);
        if (wlen >= 63)
            throw OverflowError("t_level too deep to enumerate");
        for (nat w = 0; w < count; ++w) {
            Word tail = vertex_to_word(w, wlen);
            Word a = base, b = base;
            a.push_back(0);
            b.push_back(1);
            a.append(tail);
            b.append(tail);
            r.insert(std::move(a), std::move(b));
        }
    }
    return r;
}

bool t_member(const Word& a, const Word& b) {
    if (a.size() != b.size() || a == b)
        return false;
    for (nat n = 0; n < a.size(); ++n) {
        // split position must carry (0,1) and equal words elsewhere
        if (a.bit(n) != 0 || b.bit(n) != 1)
            continue;
        Word base = sn(n);
        if (!base.is_prefix_of(a) || !base.is_prefix_of(b))
            continue;
        bool tail_equal = true;
        for (nat i = n + 1; i < a.size(); ++i)
            if (a.bit(i) != b.bit(i)) {
                tail_equal = false;
                break;
            }
        if (tail_equal)
            return true;
    }
    return false;
}

LevelRelation b_level(nat l) {
    if (l == 0)
        throw PreconditionError("b_level needs l >= 1");
    LevelRelation r(1);
    r.insert(Word::from_string("0"), Word::from_string("1"));
    r.insert(Word::from_string("1"), Word::from_string("0"));
    for (nat k = 1; k < l; ++k) {
        LevelRelation next(k + 1);
        for (const auto& [s, t] : r.pairs)
            for (int eps = 0; eps < 2; ++eps) {
                Word a = s, b = t;
                a.push_back(eps);
                b.push_back(eps);
                next.insert(std::move(a), std::move(b));
            }
        Word u = Word::from_string("0"), v = Word::from_string("1");
        u.append(sn(k - 1));
        v.append(sn(k - 1));
        u.push_back(0);
        v.push_back(1);
        next.insert(u, v);
        next.insert(v, u);
        r = std::move(next);
    }
    return r;
}

bool b_member(const Word& a, const Word& b) {
    nat l = a.size();
    if (l == 0 || b.size() != l)
        return false;
    const Word* x = &a;
    const Word* y = &b;
    if (a.bit(0) == b.bit(0))
        return false;
    if (a.bit(0) == 1)
        std::swap(x, y); // orient as (0-side, 1-side)
    Word xt = x->suffix_from(1), yt = y->suffix_from(1);
    return xt == yt || t_member(xt, yt);
}

LiftKind lift_kind_from_string(const std::string& s) {
    if (s == "b0")
        return LiftKind::B0;
    if (s == "t0")
        return LiftKind::T0;
    if (s == "u0")
        return LiftKind::U0;
    if (s == "gsg0")
        return LiftKind::GsG0;
    if (s == "h0")
        return LiftKind::H0;
    throw PreconditionError("unknown lift kind: " + s);
}

LevelRelation lift_level(LiftKind kind, nat l) {
    if (l == 0)
        throw PreconditionError("lift_level needs l >= 1");
    LevelRelation r(l);
    auto add_tagged = [&](int eps, const Word& s, const Word& t) {
        Word a, b;
        a.push_back(eps);
        b.push_back(1 - eps);
        a.append(s);
        b.append(t);
        r.insert(std::move(a), std::move(b));
    };
    if (kind == LiftKind::H0) {
        nat count = l - 1 >= 63 ? 0 : (nat{1} << (l - 1));
        for (nat w = 0; w < count; ++w) {
            Word tail = vertex_to_word(w, l - 1);
            add_tagged(0, tail, tail);
            add_tagged(1, tail, tail);
        }
        return r;
    }
    LevelRelation base = t_level(l - 1);
    for (const auto& [s, t] : base.pairs) {
        switch (kind) {
            case LiftKind::B0:
                add_tagged(0, s, t);
                break;
            case LiftKind::T0:
                add_tagged(0, s, t);
                add_tagged(1, s, t);
                break;
            case LiftKind::GsG0:
                add_tagged(0, s, t);
                add_tagged(0, t, s);
                break;
            case LiftKind::U0:
                add_tagged(0, s, t);
                add_tagged(0, t, s);
                add_tagged(1, s, t);
                break;
            case LiftKind::H0:
                break;
        }
    }
    return r;
}

LevelRelation d_level(const Frame& frame, nat l) {
    LevelRelation r(l);
    if (l == 0)
        return r;
    LevelRelation body = tree_level(frame, l + 1);
    for (const auto& [u, v] : body.pairs) {
        if (u.bit(0) != 0 || v.bit(0) != 1)
            continue;
        Word s = u.suffix_from(1), t = v.suffix_from(1);
        if (s == t)
            continue;
        r.pairs.emplace(s, t);
        r.pairs.emplace(t, s);
    }
    return r;
}

} // namespace levelcomb
