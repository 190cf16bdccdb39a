#include "levelcomb/embed.hpp"

#include <optional>

#include "json.hpp"
#include "levelcomb/graph_checks.hpp"
#include "levelcomb/levels.hpp"

namespace levelcomb {

EngineKind engine_kind_from_string(const std::string& s) {
    if (s == "thm26")
        return EngineKind::Thm26;
    if (s == "thm410")
        return EngineKind::Thm410;
    if (s == "thm411")
        return EngineKind::Thm411;
    if (s == "lemma37")
        return EngineKind::Lemma37;
    throw PreconditionError("unknown engine kind: " + s);
}

std::string engine_kind_to_string(EngineKind k) {
    switch (k) {
        case EngineKind::Thm26: return "thm26";
        case EngineKind::Thm410: return "thm410";
        case EngineKind::Thm411: return "thm411";
        case EngineKind::Lemma37: return "lemma37";
    }
    return "?";
}

void EmbedReport::add(std::string id, bool pass, std::string witness) {
    if (!pass)
        ok = false;
    conditions.push_back({std::move(id), pass, std::move(witness)});
}

namespace {

std::vector<Word> level_words(nat l) {
    std::vector<Word> out;
    out.reserve(nat{1} << l);
    for (nat v = 0; v < (nat{1} << l); ++v)
        out.push_back(vertex_to_word(v, l));
    return out;
}

/// Minimal index >= lower whose padded enumeration word extends w.
nat find_covering_index(const Word& w, nat lower, nat cap) {
    for (nat n = std::max(lower, w.size()); n <= cap; ++n)
        if (w.is_prefix_of(sn(n)))
            return n;
    throw OracleError("no enumeration word extends " + w.str() + " below " + std::to_string(cap));
}

constexpr nat kIndexScanCap = nat{1} << 20;

void throw_failed(const EmbedReport& rep) {
    for (const auto& c : rep.conditions)
        if (!c.pass)
            throw Error("embedding verification failed at " + c.id +
                        (c.witness.empty() ? "" : ": " + c.witness));
}

bool tent_bad_pair(const Word& s, const Word& t) {
    return !(s == t) && !t_member(s, t) && !t_member(t, s);
}

} // namespace

// ---------------------------------------------------------------------------
// thm26: word tables over the dense-template graph

PartialEmbedding build_thm26(const BoxOracle& oracle, nat depth) {
    PartialEmbedding e;
    e.kind = EngineKind::Thm26;
    e.depth = depth;
    e.psi[Word()] = Word();
    e.k = {0};
    for (nat l = 0; l < depth; ++l) {
        nat lower = l == 0 ? 0 : e.delta.back() + 1;
        nat dl = find_covering_index(e.psi.at(sn(l)), lower, kIndexScanCap);
        Word fill = sn(dl).suffix_from(e.k[l]);
        // tentative children tables: shared fill, then the branch bit
        std::map<Word, Word> tentative;
        for (const Word& u : level_words(l))
            for (int eps = 0; eps < 2; ++eps) {
                Word key = u;
                key.push_back(eps);
                Word img = e.psi.at(u);
                img.append(fill);
                img.push_back(eps);
                tentative[key] = std::move(img);
            }
        nat m = 0;
        for (const Word& s : level_words(l + 1))
            for (const Word& t : level_words(l + 1))
                if (tent_bad_pair(s, t))
                    m = std::max(m, oracle.query(tentative.at(s), tentative.at(t), l + 1));
        for (auto& [key, img] : tentative) {
            img.append_zeros(m);
            e.psi[key] = std::move(img);
        }
        e.delta.push_back(dl);
        e.k.push_back(dl + 1 + m);
    }
    EmbedReport rep = verify_embedding(e, &oracle, nullptr, nullptr);
    throw_failed(rep);
    return e;
}

// ---------------------------------------------------------------------------
// thm410: interleaving map over the frame tree body

Word thm410_apply(const PartialEmbedding& e, const Word& input) {
    Word out;
    for (nat i = 0; i < input.size(); ++i) {
        out.push_back(input.bit(i));
        out.append_zeros(e.delta.at(i));
    }
    return out;
}

PartialEmbedding build_thm410(const Frame& frame0, const BoxOracle& oracle, nat depth) {
    Frame frame = frame0.ensure_extendable();
    PartialEmbedding e;
    e.kind = EngineKind::Thm410;
    e.depth = depth;
    e.k = {0};
    auto f_level = [&](const Word& s) { return thm410_apply(e, s); }; // uses delta so far
    for (nat m = 0; m < depth; ++m) {
        nat M = 0;
        for (const Word& u : level_words(m + 1))
            for (const Word& v : level_words(m + 1)) {
                if (tree_member(frame, u, v))
                    continue;
                Word a = f_level(u.prefix(m));
                a.push_back(u.bit(m));
                Word b = f_level(v.prefix(m));
                b.push_back(v.bit(m));
                M = std::max(M, oracle.query(a, b, m + 1));
            }
        // canonical generation base of the next frame entry
        auto [q, n_idx] = unpair(unpair(m).second);
        (void)n_idx;
        WordPair next = frame.entry_at(m + 1);
        Word w = next.first.suffix_from(q + 1);
        Word mid; // the image of w through the already fixed gaps, then M zeros
        mid.append_zeros(e.delta.empty() || q >= e.delta.size() ? 0 : e.delta[q]);
        for (nat i = 0; i < w.size(); ++i) {
            mid.push_back(w.bit(i));
            if (i + 1 < w.size())
                mid.append_zeros(e.delta.at(q + 1 + i));
        }
        mid.append_zeros(M);
        WordPair base = frame.entry_at(q);
        Word head_u = f_level(base.first), head_v = f_level(base.second);
        head_u.push_back(0);
        head_v.push_back(1);
        head_u.append(mid);
        head_v.append(mid);
        std::optional<nat> found;
        for (nat N = 0;; ++N) {
            nat L = checked_add(head_u.size(), N);
            if (L > frame.extension_cap())
                throw DepthError("no frame index for step " + std::to_string(m) +
                                     " within the extension cap",
                                 L);
            if (unpair(L).first != unpair(m + 1).first)
                continue;
            Word cu = head_u, cv = head_v;
            cu.append_zeros(N);
            cv.append_zeros(N);
            if (frame.entry_at(L) == WordPair{cu, cv}) {
                found = N;
                break;
            }
        }
        e.delta.push_back(M + *found);
        e.k.push_back(e.k[m] + 1 + e.delta[m]);
    }
    for (nat l = 0; l <= depth; ++l)
        for (const Word& s : level_words(l))
            e.psi[s] = thm410_apply(e, s);
    EmbedReport rep = verify_embedding(e, &oracle, nullptr, &frame);
    throw_failed(rep);
    return e;
}

// ---------------------------------------------------------------------------
// thm411: word tables over the bipartite closure

PartialEmbedding build_thm411(const BoxOracle& oracle, nat depth) {
    PartialEmbedding e;
    e.kind = EngineKind::Thm411;
    e.depth = depth;
    e.psi[Word()] = Word();
    e.k = {0};
    if (depth >= 1) {
        nat N = oracle.query(Word::from_string("1"), Word::from_string("0"), 1);
        for (int eps = 0; eps < 2; ++eps) {
            Word key, img;
            key.push_back(eps);
            img.push_back(eps);
            img.append_zeros(N);
            e.psi[key] = img;
        }
        e.delta.push_back(0);
        e.k.push_back(1 + N);
    }
    for (nat l = 1; l < depth; ++l) {
        nat lower = l == 1 ? 1 : e.delta.back() + 1;
        Word head;
        head.push_back(0);
        head.append(sn(l - 1));
        Word target = e.psi.at(head).suffix_from(1);
        nat dl;
        for (dl = lower;; ++dl) {
            if (dl - 1 > kIndexScanCap)
                throw OracleError("no enumeration index matches the half-table head");
            if (target.is_prefix_of(sn(dl - 1)))
                break;
        }
        Word fill = sn(dl - 1).suffix_from(e.k[l] - 1);
        std::map<Word, Word> tentative;
        for (const Word& u : level_words(l))
            for (int eps = 0; eps < 2; ++eps) {
                Word key = u;
                key.push_back(eps);
                Word img = e.psi.at(u);
                img.append(fill);
                img.push_back(eps);
                tentative[key] = std::move(img);
            }
        nat M = 0;
        for (const Word& s : level_words(l + 1))
            for (const Word& t : level_words(l + 1))
                if (!b0_closure_meets(s, t))
                    M = std::max(M, oracle.query(tentative.at(s), tentative.at(t), l + 1));
        for (auto& [key, img] : tentative) {
            img.append_zeros(M);
            e.psi[key] = std::move(img);
        }
        e.delta.push_back(dl);
        e.k.push_back(dl + 1 + M);
    }
    EmbedReport rep = verify_embedding(e, &oracle, nullptr, nullptr);
    throw_failed(rep);
    return e;
}

// ---------------------------------------------------------------------------
// lemma37: label engine

namespace {

struct LabelScan {
    nat label;
    Word z;
};

/// Minimal frame index whose entry extends the heads by zeros and whose
/// length sits on the required pairing fiber.
LabelScan label_scan(const Frame& frame, const Word& head_u, const Word& head_v, nat fiber,
                     const Word& z_head) {
    for (nat L = head_u.size();; ++L) {
        if (L > frame.extension_cap())
            throw DepthError("label scan exceeded the frame extension cap", L);
        if (unpair(L).first != fiber)
            continue;
        Word cu = head_u, cv = head_v;
        cu.append_zeros(L - head_u.size());
        cv.append_zeros(L - head_v.size());
        if (frame.entry_at(L) == WordPair{cu, cv}) {
            Word z = z_head;
            z.append_zeros(L - head_u.size());
            return {L, std::move(z)};
        }
    }
}

} // namespace

PartialEmbedding build_lemma37(const Frame& frame0, const Word& u, const Word& v,
                               const OneDimOpenOracle& oracle, nat depth) {
    Frame frame = frame0.ensure_extendable(std::max(frame0.extension_cap(),
                                                    Frame::kDefaultExtensionCap));
    if (u.empty() != v.empty())
        throw PreconditionError("seed pair must be the root or a proper tree entry");
    if (!tree_member(frame, u, v))
        throw PreconditionError("seed pair (" + u.str() + ", " + v.str() +
                                ") is not in the generated tree");
    PartialEmbedding e;
    e.kind = EngineKind::Lemma37;
    e.depth = depth;
    if (u.empty()) {
        e.seed_u = Word::from_string("0");
        e.seed_v = Word::from_string("1");
    } else {
        e.seed_u = u;
        e.seed_v = v;
    }
    // root label: zero-pad the seed onto the fiber with first coordinate 0
    LabelScan root = label_scan(frame, e.seed_u, e.seed_v, 0, Word());
    e.labels[Word()] = root.label;
    e.transfer_from = u.empty() ? 1 : root.label;

    if (depth >= 32)
        throw PreconditionError("label engine depth is limited to 31 branch levels");
    Word ones = Word::zeros(depth);
    for (nat i = 0; i < depth; ++i)
        ones.set_bit(i, 1);
    nat top = psi_inv(ones);
    for (nat r = 0; r < top; ++r) {
        Word key = psi(r + 1);
        Word s = key.prefix(key.size() - 1);
        int eps = key.bit(key.size() - 1);
        nat ls = e.labels.at(s);
        WordPair at_s = frame.entry_at(ls);
        Word zh; // z head: detour + the two open-set extensions
        if (r == 0) {
            Word probe_u = at_s.first;
            probe_u.push_back(0);
            Word x = oracle.query(probe_u, 1);
            Word probe_v = at_s.second;
            probe_v.push_back(0);
            probe_v.append(x);
            Word y = oracle.query(probe_v, 1);
            zh = x;
            zh.append(y);
        } else {
            nat lprev = e.labels.at(psi(r));
            Word t = frame.entry_at(lprev).first.suffix_from(ls + 1);
            t.push_back(0);
            Word probe_u = at_s.first;
            probe_u.push_back(0);
            probe_u.append(t);
            Word x = oracle.query(probe_u, s.size() + 1);
            Word probe_v = at_s.second;
            probe_v.push_back(eps);
            probe_v.append(t);
            probe_v.append(x);
            Word y = oracle.query(probe_v, s.size() + 1);
            zh = t;
            zh.append(x);
            zh.append(y);
        }
        Word head_u = at_s.first, head_v = at_s.second;
        head_u.push_back(0);
        head_v.push_back(eps);
        head_u.append(zh);
        head_v.append(zh);
        LabelScan step = label_scan(frame, head_u, head_v, unpair(key.size()).first, zh);
        e.labels[key] = step.label;
        e.z[key] = std::move(step.z);
    }
    e.alpha = frame.entry_at(e.labels.at(psi(top))).first;
    EmbedReport rep = verify_embedding(e, nullptr, &oracle, &frame);
    throw_failed(rep);
    return e;
}

Word lemma37_branch_prefix(const PartialEmbedding& e, const Frame& frame, const Word& beta) {
    return frame.entry_at(e.labels.at(beta)).second;
}

// ---------------------------------------------------------------------------
// verification

namespace {

void verify_thm26(const PartialEmbedding& e, const BoxOracle* oracle, EmbedReport& rep) {
    bool c1 = true, c2 = true, c3 = true, inj = true, hom = true, refl = true;
    std::string w1, w2, w3, wi, wh, wr;
    for (nat l = 0; l <= e.depth; ++l) {
        std::set<Word> images;
        for (const Word& s : level_words(l)) {
            const Word& img = e.psi.at(s);
            if (img.size() != e.k.at(l) && c2) {
                c2 = false;
                w2 = "length of image of " + s.str();
            }
            if (!images.insert(img).second && inj) {
                inj = false;
                wi = "level " + std::to_string(l) + " image " + img.str();
            }
            if (l < e.depth)
                for (int eps = 0; eps < 2; ++eps) {
                    Word key = s;
                    key.push_back(eps);
                    const Word& child = e.psi.at(key);
                    if ((!(e.psi.at(s).is_prefix_of(child)) || child.size() <= e.psi.at(s).size()) &&
                        c1) {
                        c1 = false;
                        w1 = "child of " + s.str();
                    }
                }
        }
    }
    rep.add("C1.strict-prefix", c1, w1);
    rep.add("C2.level-uniform", c2, w2);
    // C3: template pairs map onto the shifted template
    for (nat n = 0; n < e.depth && c3; ++n) {
        nat dn = e.delta.at(n);
        Word base = sn(n);
        for (nat vl = 0; n + 1 + vl <= e.depth && c3; ++vl)
            for (const Word& v : level_words(vl)) {
                Word a = base, b = base;
                a.push_back(0);
                b.push_back(1);
                a.append(v);
                b.append(v);
                const Word& ia = e.psi.at(a);
                const Word& ib = e.psi.at(b);
                Word target = sn(dn);
                if (!target.is_prefix_of(ia) || !target.is_prefix_of(ib) || ia.bit(dn) != 0 ||
                    ib.bit(dn) != 1 || !(ia.suffix_from(dn + 1) == ib.suffix_from(dn + 1))) {
                    c3 = false;
                    w3 = "template (" + a.str() + ", " + b.str() + ")";
                    break;
                }
            }
    }
    rep.add("C3.template-form", c3, w3);
    bool c4 = true;
    std::string w4;
    if (oracle) {
        for (nat l = 1; l <= e.depth && c4; ++l)
            for (const Word& s : level_words(l)) {
                for (const Word& t : level_words(l))
                    if (tent_bad_pair(s, t) && oracle->box_meets(l, e.psi.at(s), e.psi.at(t))) {
                        c4 = false;
                        w4 = "box of (" + s.str() + ", " + t.str() + ") meets the closed set";
                        break;
                    }
                if (!c4)
                    break;
            }
        rep.add("C4.box-avoidance", c4, w4);
    }
    for (nat l = 1; l <= e.depth && (hom || refl); ++l)
        for (const Word& s : level_words(l)) {
            for (const Word& t : level_words(l)) {
                bool edge = t_member(s, t);
                if (edge && !t_member(e.psi.at(s), e.psi.at(t)) && hom) {
                    hom = false;
                    wh = "edge (" + s.str() + ", " + t.str() + ") not preserved";
                }
                if (tent_bad_pair(s, t)) {
                    const Word& a = e.psi.at(s);
                    const Word& b = e.psi.at(t);
                    if ((t_member(a, b) || t_member(b, a) || a == b) && refl) {
                        refl = false;
                        wr = "non-edge (" + s.str() + ", " + t.str() + ") gains an edge";
                    }
                }
            }
        }
    rep.add("level-injective", inj, wi);
    rep.add("level-homomorphism", hom, wh);
    rep.add("level-reflection", refl, wr);
}

void verify_thm410(const PartialEmbedding& e, const BoxOracle* oracle, const Frame* frame,
                   EmbedReport& rep) {
    bool t0 = true, d1 = true, d2 = true, d3 = true, xo = true, inj = true;
    std::string wt, w1, w2, w3, wx, wi;
    for (nat l = 0; l <= e.depth && t0; ++l)
        for (const Word& s : level_words(l))
            if (!(e.psi.at(s) == thm410_apply(e, s))) {
                t0 = false;
                wt = "table of " + s.str() + " deviates from the gap sequence";
            }
    rep.add("D0.interleave-consistent", t0, wt);
    if (frame) {
        for (nat m = 0; m <= e.depth && d1; ++m) {
            WordPair entry = frame->entry_at(m);
            WordPair img{thm410_apply(e, entry.first), thm410_apply(e, entry.second)};
            if (!(frame->entry_at(e.k.at(m)) == img)) {
                d1 = false;
                w1 = "image of the length-" + std::to_string(m) + " entry";
            }
        }
        rep.add("D1.entry-to-entry", d1, w1);
    }
    for (nat m = 0; m <= e.depth && d2; ++m)
        if (unpair(e.k.at(m)).first != unpair(m).first) {
            d2 = false;
            w2 = "fiber of k(" + std::to_string(m) + ")";
        }
    rep.add("D2.index-fiber", d2, w2);
    if (oracle && frame) {
        for (nat m = 1; m <= e.depth && d3; ++m)
            for (const Word& u : level_words(m)) {
                for (const Word& v : level_words(m)) {
                    if (tree_member(*frame, u, v))
                        continue;
                    if (oracle->box_meets(m, e.psi.at(u), e.psi.at(v))) {
                        d3 = false;
                        w3 = "box of (" + u.str() + ", " + v.str() + ") meets the closed set";
                        break;
                    }
                }
                if (!d3)
                    break;
            }
        rep.add("D3.box-avoidance", d3, w3);
    }
    for (const Word& a : level_words(e.depth)) {
        for (const Word& b : level_words(e.depth)) {
            Word x;
            for (nat i = 0; i < e.depth; ++i)
                x.push_back(a.bit(i) != b.bit(i) ? 1 : 0);
            Word lhs = thm410_apply(e, x);
            const Word& fa = e.psi.at(a);
            const Word& fb = e.psi.at(b);
            Word rhs = Word::zeros(fa.size());
            for (nat i = 0; i < fa.size(); ++i)
                if (fa.bit(i) != fb.bit(i))
                    rhs.set_bit(i, 1);
            if (!(lhs == rhs)) {
                xo = false;
                wx = "(" + a.str() + ", " + b.str() + ")";
                break;
            }
        }
        if (!xo)
            break;
    }
    rep.add("D4.xor-identity", xo, wx);
    std::set<nat> kset(e.k.begin(), e.k.end());
    if (kset.size() != e.k.size()) {
        inj = false;
        wi = "output lengths repeat";
    }
    for (nat l = 0; l <= e.depth && inj; ++l) {
        std::set<Word> images;
        for (const Word& s : level_words(l))
            if (!images.insert(e.psi.at(s)).second) {
                inj = false;
                wi = "level " + std::to_string(l);
            }
    }
    rep.add("level-injective", inj, wi);
}

void verify_thm411(const PartialEmbedding& e, const BoxOracle* oracle, EmbedReport& rep) {
    bool c1 = true, c2 = true, c3 = true, c4 = true, iso = true, inj = true;
    std::string w1, w2, w3, w4, wiso, wi;
    for (nat l = 0; l <= e.depth; ++l) {
        std::set<Word> images;
        for (const Word& s : level_words(l)) {
            const Word& img = e.psi.at(s);
            if (img.size() != e.k.at(l) && c2) {
                c2 = false;
                w2 = "length of image of " + s.str();
            }
            if (!images.insert(img).second && inj) {
                inj = false;
                wi = "level " + std::to_string(l);
            }
            if (l < e.depth)
                for (int eps = 0; eps < 2; ++eps) {
                    Word key = s;
                    key.push_back(eps);
                    const Word& child = e.psi.at(key);
                    if ((!e.psi.at(s).is_prefix_of(child) || child.size() <= e.psi.at(s).size()) &&
                        c1) {
                        c1 = false;
                        w1 = "child of " + s.str();
                    }
                }
        }
    }
    rep.add("E1.strict-prefix", c1, w1);
    rep.add("E2.level-uniform", c2, w2);
    if (!e.delta.empty() && e.delta[0] != 0) {
        c3 = false;
        w3 = "first gap nonzero";
    }
    for (nat vl = 0; vl + 1 <= e.depth && c3; ++vl)
        for (const Word& v : level_words(vl)) {
            Word a, b;
            a.push_back(0);
            b.push_back(1);
            a.append(v);
            b.append(v);
            const Word& ia = e.psi.at(a);
            const Word& ib = e.psi.at(b);
            if (ia.bit(0) != 0 || ib.bit(0) != 1 ||
                !(ia.suffix_from(1) == ib.suffix_from(1))) {
                c3 = false;
                w3 = "half pair at tail " + v.str();
                break;
            }
        }
    rep.add("E3.half-pairing", c3, w3);
    for (nat n = 0; n + 2 <= e.depth && c4; ++n) {
        nat dn1 = e.delta.at(n + 1);
        Word base = sn(n);
        for (nat vl = 0; n + 2 + vl <= e.depth && c4; ++vl)
            for (const Word& v : level_words(vl)) {
                Word a, b;
                a.push_back(0);
                b.push_back(1);
                a.append(base);
                b.append(base);
                a.push_back(0);
                b.push_back(1);
                a.append(v);
                b.append(v);
                const Word& ia = e.psi.at(a);
                const Word& ib = e.psi.at(b);
                Word head_a = Word::from_string("0"), head_b = Word::from_string("1");
                head_a.append(sn(dn1 - 1));
                head_b.append(sn(dn1 - 1));
                head_a.push_back(0);
                head_b.push_back(1);
                if (!head_a.is_prefix_of(ia) || !head_b.is_prefix_of(ib) ||
                    !(ia.suffix_from(head_a.size()) == ib.suffix_from(head_b.size()))) {
                    c4 = false;
                    w4 = "template (" + a.str() + ", " + b.str() + ")";
                    break;
                }
            }
    }
    rep.add("E4.template-form", c4, w4);
    bool c5 = true;
    std::string w5;
    if (oracle) {
        for (nat l = 1; l <= e.depth && c5; ++l)
            for (const Word& s : level_words(l)) {
                for (const Word& t : level_words(l)) {
                    if (b0_closure_meets(s, t))
                        continue;
                    if (oracle->box_meets(l, e.psi.at(s), e.psi.at(t))) {
                        c5 = false;
                        w5 = "box of (" + s.str() + ", " + t.str() + ") meets the closed set";
                        break;
                    }
                }
                if (!c5)
                    break;
            }
        rep.add("E5.box-avoidance", c5, w5);
    }
    for (nat l = 1; l <= e.depth && iso; ++l)
        for (const Word& s : level_words(l)) {
            for (const Word& t : level_words(l)) {
                bool edge = b_member(s, t);
                bool image_edge = b_member(e.psi.at(s), e.psi.at(t));
                if (edge != image_edge) {
                    iso = false;
                    wiso = "pair (" + s.str() + ", " + t.str() + ")";
                    break;
                }
            }
            if (!iso)
                break;
        }
    rep.add("level-iso-onto-range", iso, wiso);
    rep.add("level-injective", inj, wi);
}

void verify_lemma37(const PartialEmbedding& e, const OneDimOpenOracle* oracle, const Frame* frame,
                    EmbedReport& rep) {
    if (!frame) {
        rep.add("L0.context", false, "frame required");
        return;
    }
    bool l1 = true;
    std::string wl1;
    {
        nat l0 = e.labels.at(Word());
        WordPair entry = frame->entry_at(l0);
        Word su = e.seed_u, sv = e.seed_v;
        su.append_zeros(l0 - e.seed_u.size());
        sv.append_zeros(l0 - e.seed_v.size());
        if (!(entry == WordPair{su, sv}) || unpair(l0).first != 0) {
            l1 = false;
            wl1 = "root label " + std::to_string(l0);
        }
    }
    rep.add("L1.root-label", l1, wl1);
    bool l2 = true, l3 = true, l4 = true, l5 = true;
    std::string wl2, wl3, wl4, wl5;
    for (const auto& [w, lw] : e.labels) {
        if (!w.empty() && oracle) {
            WordPair entry = frame->entry_at(lw);
            if (!oracle->covers(entry.first, w.size()) || !oracle->covers(entry.second, w.size())) {
                if (l2) {
                    l2 = false;
                    wl2 = "label of " + w.str();
                }
            }
        }
        if (unpair(lw).first != unpair(w.size()).first && l5) {
            l5 = false;
            wl5 = "fiber of l(" + w.str() + ")";
        }
        if (w.size() < e.depth)
            for (int eps = 0; eps < 2; ++eps) {
                Word key = w;
                key.push_back(eps);
                WordPair parent = frame->entry_at(lw);
                WordPair child = frame->entry_at(e.labels.at(key));
                Word eu = parent.first, ev = parent.second;
                eu.push_back(0);
                ev.push_back(eps);
                eu.append(e.z.at(key));
                ev.append(e.z.at(key));
                if (!(child == WordPair{eu, ev}) && l3) {
                    l3 = false;
                    wl3 = "branch " + key.str();
                }
            }
    }
    if (oracle)
        rep.add("L2.open-set-coverage", l2, wl2);
    rep.add("L3.branch-form", l3, wl3);
    nat top = psi_inv([&] {
        Word ones = Word::zeros(e.depth);
        for (nat i = 0; i < e.depth; ++i)
            ones.set_bit(i, 1);
        return ones;
    }());
    for (nat r = 0; r < top && l4; ++r) {
        Word a = frame->entry_at(e.labels.at(psi(r))).first;
        a.push_back(0);
        if (!a.is_prefix_of(frame->entry_at(e.labels.at(psi(r + 1))).first)) {
            l4 = false;
            wl4 = "chain at rank " + std::to_string(r);
        }
    }
    rep.add("L4.diagonal-chain", l4, wl4);
    rep.add("L5.label-fiber", l5, wl5);
    bool tr = true;
    std::string wtr;
    for (const Word& beta : level_words(e.depth)) {
        nat lb = e.labels.at(beta);
        Word fb = frame->entry_at(lb).second;
        std::set<nat> expected;
        for (nat m = 0; m < e.depth; ++m)
            if (beta.bit(m)) {
                expected.insert(e.labels.at(beta.prefix(m)));
                if (unpair(e.labels.at(beta.prefix(m))).first != unpair(m).first) {
                    tr = false;
                    wtr = "marker fiber at " + beta.str();
                }
            }
        std::set<nat> actual;
        for (nat i = e.transfer_from; i < lb; ++i)
            if (e.alpha.bit(i) != fb.bit(i))
                actual.insert(i);
        if (actual != expected && tr) {
            tr = false;
            wtr = "difference window at " + beta.str();
        }
        if (!tr)
            break;
    }
    rep.add("L6.transfer-window", tr, wtr);
}

} // namespace

EmbedReport verify_embedding(const PartialEmbedding& e, const BoxOracle* box_oracle,
                             const OneDimOpenOracle* onedim_oracle, const Frame* frame) {
    EmbedReport rep;
    std::optional<Frame> extended;
    const Frame* fr = frame;
    if (frame && !frame->extendable() && e.kind != EngineKind::Thm26) {
        extended = frame->ensure_extendable();
        fr = &*extended;
    }
    switch (e.kind) {
        case EngineKind::Thm26:
            verify_thm26(e, box_oracle, rep);
            break;
        case EngineKind::Thm410:
            verify_thm410(e, box_oracle, fr, rep);
            break;
        case EngineKind::Thm411:
            verify_thm411(e, box_oracle, rep);
            break;
        case EngineKind::Lemma37:
            verify_lemma37(e, onedim_oracle, fr, rep);
            break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// serialization

namespace {
using nlohmann::json;
}

std::string PartialEmbedding::to_json() const {
    json j;
    j["kind"] = engine_kind_to_string(kind);
    j["depth"] = depth;
    if (!psi.empty()) {
        json t = json::object();
        for (const auto& [s, img] : psi)
            t[s.str()] = img.str();
        j["psi"] = std::move(t);
    }
    j["delta"] = delta;
    j["k"] = k;
    if (kind == EngineKind::Lemma37) {
        json lw = json::object(), zw = json::object();
        for (const auto& [w, l] : labels)
            lw[w.str()] = l;
        for (const auto& [w, zz] : z)
            zw[w.str()] = zz.str();
        j["l"] = std::move(lw);
        j["z"] = std::move(zw);
        j["alpha"] = alpha.str();
        j["n"] = transfer_from;
        j["seed_u"] = seed_u.str();
        j["seed_v"] = seed_v.str();
    }
    return j.dump(2);
}

PartialEmbedding PartialEmbedding::from_json(const std::string& text) {
    json j = json::parse(text);
    PartialEmbedding e;
    e.kind = engine_kind_from_string(j.at("kind").get<std::string>());
    e.depth = j.at("depth").get<nat>();
    if (j.contains("psi"))
        for (const auto& [s, img] : j.at("psi").items())
            e.psi[Word::from_string(s)] = Word::from_string(img.get<std::string>());
    e.delta = j.value("delta", std::vector<nat>{});
    e.k = j.value("k", std::vector<nat>{});
    if (j.contains("l"))
        for (const auto& [w, l] : j.at("l").items())
            e.labels[Word::from_string(w)] = l.get<nat>();
    if (j.contains("z"))
        for (const auto& [w, zz] : j.at("z").items())
            e.z[Word::from_string(w)] = Word::from_string(zz.get<std::string>());
    if (j.contains("alpha"))
        e.alpha = Word::from_string(j.at("alpha").get<std::string>());
    e.transfer_from = j.value("n", nat{0});
    if (j.contains("seed_u"))
        e.seed_u = Word::from_string(j.at("seed_u").get<std::string>());
    if (j.contains("seed_v"))
        e.seed_v = Word::from_string(j.at("seed_v").get<std::string>());
    return e;
}

} // namespace levelcomb
