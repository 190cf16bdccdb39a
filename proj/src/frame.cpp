#include "levelcomb/frame.hpp"

#include <optional>

#include "levelcomb/graph_checks.hpp"

namespace levelcomb {

WordPair Frame::compute_entry(const Frame& f, nat l) {
    if (l == 0)
        return {Word(), Word()};
    nat prev = l - 1;
    auto [p0, p1] = unpair(prev);
    (void)p0;
    auto [q, n] = unpair(p1);
    Word mid = psi(n);
    if (checked_add(q, mid.size()) > prev)
        throw Error("frame recursion would need negative padding at index " + std::to_string(l));
    nat pad = prev - q - mid.size();
    WordPair base = f.entry_at(q);
    Word u = base.first, v = base.second;
    u.push_back(0);
    v.push_back(1);
    u.append(mid);
    v.append(mid);
    u.append_zeros(pad);
    v.append_zeros(pad);
    return {std::move(u), std::move(v)};
}

Frame Frame::build(nat depth, nat extension_cap) {
    Frame f;
    f.extendable_ = true;
    f.cap_ = extension_cap;
    f.entries_.reserve(depth + 1);
    for (nat l = 0; l <= depth; ++l)
        f.entries_.push_back(compute_entry(f, l));
    return f;
}

Frame Frame::from_entries(std::vector<WordPair> entries) {
    Frame f;
    f.entries_ = std::move(entries);
    f.extendable_ = false;
    f.cap_ = 0;
    return f;
}

const WordPair& Frame::entry(nat l) const {
    if (l >= entries_.size())
        throw DepthError("frame entry " + std::to_string(l) + " beyond explicit depth " +
                             std::to_string(depth()),
                         l);
    return entries_[l];
}

WordPair Frame::entry_at(nat l) const {
    if (l < entries_.size())
        return entries_[l];
    if (!extendable_)
        throw DepthError("frame of depth " + std::to_string(depth()) +
                             " cannot reach entry " + std::to_string(l),
                         l);
    if (l > cap_)
        throw DepthError("frame entry " + std::to_string(l) + " exceeds the extension cap " +
                             std::to_string(cap_),
                         l);
    auto it = memo_.find(l);
    if (it != memo_.end())
        return it->second;
    WordPair e = compute_entry(*this, l);
    // Cache only short chain entries; scan candidates are materialized once.
    if (l <= entries_.size() + 4096 || memo_.size() < 4096)
        memo_.emplace(l, e);
    return e;
}

Frame Frame::ensure_extendable(nat extension_cap) const {
    if (extendable_ && cap_ >= extension_cap)
        return *this;
    Frame b = build(depth(), std::max(extension_cap, cap_));
    if (!extendable_)
        for (nat l = 0; l <= depth(); ++l)
            if (!(entries_[l] == b.entries_[l]))
                throw PreconditionError("loaded frame deviates from the construction at length " +
                                        std::to_string(l) +
                                        "; only the canonical frame is supported");
    return b;
}

Frame build_frame(nat depth, nat extension_cap) {
    return Frame::build(depth, extension_cap);
}

FrameReport verify_frame(const Frame& f) {
    FrameReport rep;
    const auto& es = f.entries();
    std::map<nat, nat> per_length;
    for (const auto& [u, v] : es) {
        if (u.size() != v.size()) {
            rep.violations.push_back("entry (" + u.str() + ", " + v.str() +
                                     ") has mismatched coordinate lengths");
            continue;
        }
        ++per_length[u.size()];
    }
    nat depth = es.empty() ? 0 : es.size() - 1;
    for (nat l = 0; l <= depth && !es.empty(); ++l) {
        nat c = per_length.count(l) ? per_length[l] : 0;
        if (c != 1)
            rep.violations.push_back("condition (1): " + std::to_string(c) +
                                     " entries of length " + std::to_string(l));
    }
    // generation condition on each entry of positive length
    for (const auto& [u, v] : es) {
        nat l = u.size();
        if (l == 0 || u.size() != v.size())
            continue;
        bool generated = false;
        for (const auto& [uq, vq] : es) {
            nat q = uq.size();
            if (q >= l || vq.size() != q)
                continue;
            if (!uq.is_prefix_of(u) || !vq.is_prefix_of(v))
                continue;
            if (u.bit(q) != 0 || v.bit(q) != 1)
                continue;
            bool tails_equal = true;
            for (nat i = q + 1; i < l; ++i)
                if (u.bit(i) != v.bit(i)) {
                    tails_equal = false;
                    break;
                }
            if (tails_equal) {
                generated = true;
                break;
            }
        }
        if (!generated)
            rep.violations.push_back("condition (3): entry (" + u.str() + ", " + v.str() +
                                     ") is not generated by any shorter entry");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

namespace {

bool entry_matches(const Frame& f, nat length, nat q, const Word& w, nat N, WordPair* out) {
    WordPair target = f.entry_at(q);
    target.first.push_back(0);
    target.second.push_back(1);
    target.first.append(w);
    target.second.append(w);
    target.first.append_zeros(N);
    target.second.append_zeros(N);
    WordPair entry = f.entry_at(length);
    bool ok = entry == target;
    if (ok && out)
        *out = std::move(entry);
    return ok;
}

} // namespace

DensityWitness density_witness(const Frame& f, nat p, nat q, const Word& w) {
    std::optional<Frame> own;
    if (!f.extendable())
        own = f.ensure_extendable();
    const Frame& frame = own ? *own : f;
    nat n = psi_inv(w);
    nat l = pair_code(checked_add(p, 1), pair_code(q, n));
    nat base = checked_add(q, w.size());
    if (l < base)
        throw Error("density arithmetic broke: index below the seed length");
    nat N = l - base;
    nat length = l + 1;
    if (unpair(length).first != p)
        throw Error("density arithmetic broke: coordinate of " + std::to_string(length) +
                    " is not " + std::to_string(p));
    if (!entry_matches(frame, length, q, w, N, nullptr))
        throw Error("density witness rejected by the frame at length " + std::to_string(length));
    return {N, length};
}

std::vector<nat> density_scan(const Frame& f, nat p, nat q, const Word& w, nat max_len) {
    std::optional<Frame> own;
    if (!f.extendable() || f.extension_cap() < max_len)
        own = f.ensure_extendable(std::max<nat>(max_len, Frame::kDefaultExtensionCap));
    const Frame& frame = own ? *own : f;
    std::vector<nat> valid;
    for (nat length = checked_add(q, w.size()) + 1; length <= max_len; ++length) {
        if (unpair(length).first != p)
            continue;
        nat N = length - q - w.size() - 1;
        if (entry_matches(frame, length, q, w, N, nullptr))
            valid.push_back(N);
    }
    return valid;
}

LevelRelation tree_level(const Frame& f, nat l) {
    LevelRelation r(l);
    if (l == 0) {
        r.insert(Word(), Word());
        return r;
    }
    for (nat q = 0; q < l; ++q) {
        WordPair base = f.entry_at(q);
        nat wlen = l - q - 1;
        if (wlen >= 63)
            throw OverflowError("tree level too deep to enumerate");
        for (nat w = 0; w < (nat{1} << wlen); ++w) {
            Word tail = vertex_to_word(w, wlen);
            Word u = base.first, v = base.second;
            u.push_back(0);
            v.push_back(1);
            u.append(tail);
            v.append(tail);
            r.insert(std::move(u), std::move(v));
        }
    }
    return r;
}

bool tree_member(const Frame& f, const Word& u, const Word& v) {
    if (u.size() != v.size())
        return false;
    if (u.empty())
        return true;
    for (nat q = 0; q < u.size(); ++q) {
        if (u.bit(q) != 0 || v.bit(q) != 1)
            continue;
        WordPair base = f.entry_at(q);
        if (!base.first.is_prefix_of(u) || !base.second.is_prefix_of(v))
            continue;
        bool tails_equal = true;
        for (nat i = q + 1; i < u.size(); ++i)
            if (u.bit(i) != v.bit(i)) {
                tails_equal = false;
                break;
            }
        if (tails_equal)
            return true;
    }
    return false;
}

TreeAcyclicityReport verify_tree_acyclicity(const Frame& f, nat l_max) {
    TreeAcyclicityReport rep;
    for (nat l = 1; l <= l_max; ++l) {
        LevelRelation t = tree_level(f, l);
        for (const auto& [u, v] : t.pairs)
            if (u.bit(0) != 0 || v.bit(0) != 1) {
                rep.failures.push_back("level " + std::to_string(l) + ": pair (" + u.str() +
                                       ", " + v.str() + ") leaves the half cubes");
                break;
            }
        LevelRelation s = symmetrize(t);
        if (!is_acyclic(s).acyclic)
            rep.failures.push_back("level " + std::to_string(l) + ": symmetrization has a cycle");
        if (!is_connected(s))
            rep.failures.push_back("level " + std::to_string(l) + ": symmetrization disconnected");
        if (!is_acyclic(g_lift(t)).acyclic)
            rep.failures.push_back("level " + std::to_string(l) + ": bipartite lift has a cycle");
    }
    rep.ok = rep.failures.empty();
    return rep;
}

} // namespace levelcomb
