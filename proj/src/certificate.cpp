#include "levelcomb/certificate.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "json.hpp"
#include "levelcomb/embed.hpp"
#include "levelcomb/graph_checks.hpp"
#include "levelcomb/ideal_expr.hpp"
#include "levelcomb/levels.hpp"
#include "levelcomb/transfer.hpp"

namespace levelcomb {

namespace {

using Rng = std::mt19937_64;

struct CheckOutcome {
    bool pass;
    std::string details;
};

struct CheckDef {
    std::string id;
    std::string params;
    std::function<CheckOutcome(nat depth, Rng& rng)> fn;
};

nat rnd(Rng& rng, nat lo, nat hi) {
    return lo + rng() % (hi - lo + 1);
}

Word random_word(Rng& rng, nat len) {
    Word w = Word::zeros(len);
    for (nat i = 0; i < len; ++i)
        if (rng() & 1)
            w.set_bit(i, 1);
    return w;
}

EpPoint random_ep(Rng& rng, nat max_prefix, nat max_period) {
    return EpPoint(random_word(rng, rnd(rng, 0, max_prefix)),
                   random_word(rng, rnd(rng, 1, max_period)));
}

EpPoint random_supported(Rng& rng, nat max_prefix) {
    return EpPoint(random_word(rng, rnd(rng, 0, max_prefix)), Word::from_string("0"));
}

/// Independent scan: a column recurs exactly when its tail window carries a
/// one; sound for short-period inputs.
bool i3_truncation_oracle_in(const EpPoint& x, nat nmax, nat pmax) {
    nat window = 8 * x.period().size() + 16;
    for (nat n = 0; n <= nmax; ++n)
        for (nat p = pmax > window ? pmax - window : 0; p < pmax; ++p)
            if (x.at(pair_code(n, p)))
                return false;
    return true;
}

PartialInjection random_admissible_injection(Rng& rng, nat universe, nat size) {
    PartialInjection i;
    std::map<nat, nat> column_offset;
    for (nat k = 0; k < size; ++k) {
        nat m = rnd(rng, 0, universe);
        auto [c, p] = unpair(m);
        if (!column_offset.count(c))
            column_offset[c] = rnd(rng, 0, 20);
        i[m] = pair_code(c, p + column_offset[c]);
    }
    return i;
}

FiniteGraphInstance random_tree(Rng& rng, nat n) {
    FiniteGraphInstance g;
    g.vertices.insert(0);
    for (nat v = 1; v < n; ++v)
        g.add_edge(rnd(rng, 0, v - 1), v);
    return g;
}

CheckOutcome pass_if(bool ok, const std::string& fail_details) {
    return {ok, ok ? "" : fail_details};
}

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;
    auto add = [&](std::string id, std::string params,
                   std::function<CheckOutcome(nat, Rng&)> fn) {
        defs.push_back({std::move(id), std::move(params), std::move(fn)});
    };

    add("words.enumeration-length", "n<20000", [](nat, Rng&) {
        for (nat n = 0; n < 20000; ++n)
            if (psi(n).size() > n || sn(n).size() != n)
                return pass_if(false, "length bound broken at " + std::to_string(n));
        return pass_if(true, "");
    });
    add("words.density", "|s|<=12", [](nat, Rng&) {
        for (nat n = 0; n < (nat{1} << 13) - 1; ++n) {
            Word s = psi(n);
            if (!s.is_prefix_of(sn(psi_inv(s))))
                return pass_if(false, "witness fails at " + s.str());
        }
        return pass_if(true, "");
    });
    add("words.pair-roundtrip", "grid 200, line 100000", [](nat, Rng&) {
        for (nat n = 0; n <= 200; ++n)
            for (nat p = 0; p <= 200; ++p)
                if (unpair(pair_code(n, p)) != std::pair<nat, nat>{n, p})
                    return pass_if(false, "grid failure");
        for (nat q = 0; q < 100000; ++q) {
            auto [a, b] = unpair(q);
            if (pair_code(a, b) != q)
                return pass_if(false, "line failure at " + std::to_string(q));
        }
        return pass_if(true, "");
    });
    add("words.phi-roundtrip", "grid 200, line 100000", [](nat, Rng&) {
        for (nat n = 0; n <= 200; ++n)
            for (nat p = 0; p <= 200; ++p)
                if (phi_inv(phi(n, p)) != std::pair<nat, nat>{n, p})
                    return pass_if(false, "grid failure");
        for (nat q = 0; q < 100000; ++q) {
            auto [a, b] = phi_inv(q);
            if (phi(a, b) != q)
                return pass_if(false, "line failure at " + std::to_string(q));
        }
        return pass_if(true, "");
    });
    add("words.m-identity", "l<100000", [](nat, Rng&) {
        for (nat l = 0; l < 100000; ++l) {
            auto [a, b] = unpair(l);
            if (m_of(l) != a + b)
                return pass_if(false, "at " + std::to_string(l));
        }
        return pass_if(true, "");
    });
    add("words.pair-successor", "p,m<200", [](nat, Rng&) {
        for (nat p = 0; p < 200; ++p)
            for (nat m = 0; m < 200; ++m)
                if (pair_code(p + 1, m) + 1 != pair_code(p, m + 1))
                    return pass_if(false, "identity fails");
        return pass_if(true, "");
    });
    add("levels.t-closed-form", "l<=8", [](nat depth, Rng&) {
        nat lmax = std::min<nat>(8, depth);
        for (nat l = 0; l <= lmax; ++l) {
            LevelRelation t = t_level(l);
            nat count = 0;
            for (nat a = 0; a < (nat{1} << l); ++a)
                for (nat b = 0; b < (nat{1} << l); ++b) {
                    Word wa = vertex_to_word(a, l), wb = vertex_to_word(b, l);
                    bool pred = t_member(wa, wb);
                    if (pred != t.contains(wa, wb))
                        return pass_if(false, "disagreement at level " + std::to_string(l));
                    if (pred)
                        ++count;
                }
            if (count != t.size())
                return pass_if(false, "cardinality mismatch");
        }
        return pass_if(true, "");
    });
    add("levels.t-acyclic-connected", "l<=12", [](nat depth, Rng&) {
        nat lmax = std::min<nat>(12, depth + 2);
        for (nat l = 1; l <= lmax; ++l) {
            LevelRelation s = symmetrize(t_level(l));
            if (!is_acyclic(s).acyclic)
                return pass_if(false, "cycle at level " + std::to_string(l));
            if (!is_connected(s))
                return pass_if(false, "disconnected at level " + std::to_string(l));
        }
        return pass_if(true, "");
    });
    add("levels.b-tree", "l<=12", [](nat depth, Rng&) {
        nat lmax = std::min<nat>(12, depth + 2);
        for (nat l = 1; l <= lmax; ++l) {
            LevelRelation b = b_level(l);
            auto preds = relation_predicates(b);
            if (!preds.symmetric || !preds.irreflexive)
                return pass_if(false, "shape wrong at level " + std::to_string(l));
            if (b.size() != 2 * ((nat{1} << l) - 1))
                return pass_if(false, "edge count wrong at level " + std::to_string(l));
            if (!is_acyclic(b).acyclic || !is_connected(b))
                return pass_if(false, "not a spanning tree at level " + std::to_string(l));
            for (const auto& [s, t] : b.pairs)
                if (!b_member(s, t))
                    return pass_if(false, "predicate rejects a recursion pair");
        }
        return pass_if(true, "");
    });
    add("levels.lift-symmetrization", "l<=10", [](nat depth, Rng&) {
        nat lmax = std::min<nat>(10, depth);
        for (nat l = 1; l <= lmax; ++l) {
            auto st = symmetrize(lift_level(LiftKind::T0, l));
            auto su = symmetrize(lift_level(LiftKind::U0, l));
            auto sg = symmetrize(lift_level(LiftKind::GsG0, l));
            if (!(st.pairs == su.pairs) || !(su.pairs == sg.pairs))
                return pass_if(false, "symmetrizations differ at level " + std::to_string(l));
        }
        return pass_if(true, "");
    });
    add("levels.lift-acyclic", "l<=10", [](nat depth, Rng&) {
        nat lmax = std::min<nat>(10, depth);
        for (nat l = 1; l <= lmax; ++l) {
            if (!is_acyclic(lift_level(LiftKind::T0, l)).acyclic)
                return pass_if(false, "two-sided lift cycle at level " + std::to_string(l));
            if (!is_acyclic(symmetrize(lift_level(LiftKind::U0, l))).acyclic)
                return pass_if(false, "union lift cycle at level " + std::to_string(l));
        }
        return pass_if(true, "");
    });
    add("levels.decorate-flags", "l=3", [](nat, Rng&) {
        LevelRelation t = t_level(3);
        auto boxed = decorate(t, Decoration::Box);
        if (relation_predicates(boxed).irreflexive)
            return pass_if(false, "full diagonal not reflexive");
        if (!relation_predicates(decorate(t, Decoration::Left)).antisymmetric)
            return pass_if(false, "antisymmetry lost");
        auto a = symmetrize(decorate(t, Decoration::Box));
        auto b = decorate(symmetrize(t), Decoration::Box);
        return pass_if(a.pairs == b.pairs, "diagonal does not commute with symmetrization");
    });
    add("levels.d-acyclic", "l<=10", [](nat depth, Rng&) {
        nat lmax = std::min<nat>(10, depth);
        Frame f = build_frame(lmax + 1);
        for (nat l = 0; l <= lmax; ++l)
            if (!is_acyclic(d_level(f, l)).acyclic)
                return pass_if(false, "cycle at level " + std::to_string(l));
        return pass_if(true, "");
    });
    add("graph.reflect-random", "triples<=10 vertices", [](nat depth, Rng& rng) {
        nat trials = 100 * std::max<nat>(depth, 1);
        for (nat t = 0; t < trials; ++t) {
            nat n = rnd(rng, 1, 10);
            FiniteGraphInstance G = random_tree(rng, n);
            nat extra = rnd(rng, 0, 5);
            FiniteGraphInstance H = G;
            for (nat e = 0; e < extra; ++e)
                H.add_edge(rnd(rng, 0, n - 1), n + e);
            std::unordered_map<nat, nat> h;
            for (nat v : G.vertices)
                h[v] = v;
            auto rep = check_reflects_onto_range(G, H, h);
            if (!rep.ok)
                return pass_if(false, rep.violation);
        }
        return pass_if(true, "");
    });
    add("graph.lift-acyclic-exhaustive", "<=3 points", [](nat, Rng&) {
        std::vector<std::pair<nat, nat>> cells;
        for (nat a = 0; a < 3; ++a)
            for (nat b = 0; b < 3; ++b)
                cells.emplace_back(a, b);
        for (nat mask = 0; mask < (nat{1} << 9); ++mask) {
            FiniteGraphInstance A;
            A.vertices = {0, 1, 2};
            for (nat c = 0; c < 9; ++c)
                if (mask & (nat{1} << c))
                    A.edges.insert(cells[c]);
            bool irreflexive = true, antisymmetric = true;
            for (const auto& [a, b] : A.edges) {
                if (a == b)
                    irreflexive = false;
                else if (A.edges.count({b, a}))
                    antisymmetric = false;
            }
            if ((irreflexive || antisymmetric) && is_acyclic(A).acyclic)
                if (!check_lift_acyclicity(A, LiftDirection::LiftStaysAcyclic))
                    return pass_if(false, "lift direction fails at mask " + std::to_string(mask));
        }
        std::set<nat> s0{0}, s1{1, 2};
        for (nat mask = 0; mask < 4; ++mask) {
            FiniteGraphInstance A;
            A.vertices = {0, 1, 2};
            if (mask & 1)
                A.edges.insert({0, 1});
            if (mask & 2)
                A.edges.insert({0, 2});
            if (is_acyclic(g_lift(A)).acyclic)
                if (!check_lift_acyclicity(A, LiftDirection::UnliftStaysAcyclic, &s0, &s1))
                    return pass_if(false, "unlift direction fails at mask " + std::to_string(mask));
        }
        return pass_if(true, "");
    });
    add("graph.negative-control-cycle", "diagonal lift", [](nat, Rng&) {
        LevelRelation bad = decorate(symmetrize(t_level(1)), Decoration::Box);
        auto rep = is_acyclic(g_lift(bad));
        if (rep.acyclic)
            return pass_if(false, "expected a cycle");
        return pass_if(rep.cycle.size() == 4, "expected a 4-cycle witness, got " +
                                                  std::to_string(rep.cycle.size()));
    });
    add("graph.unique-path", "l<=5", [](nat, Rng&) {
        for (nat l = 1; l <= 5; ++l) {
            LevelRelation s = symmetrize(t_level(l));
            FiniteGraphInstance g = as_graph(s);
            for (nat a = 0; a < (nat{1} << l); ++a)
                for (nat b = 0; b < (nat{1} << l); ++b) {
                    auto p = injective_path(g, a, b);
                    if (p.front() != a || p.back() != b)
                        return pass_if(false, "endpoints wrong");
                    std::set<nat> uniq(p.begin(), p.end());
                    if (uniq.size() != p.size())
                        return pass_if(false, "path not injective");
                    for (nat i = 0; i + 1 < p.size(); ++i)
                        if (!s.contains(vertex_to_word(p[i], l), vertex_to_word(p[i + 1], l)))
                            return pass_if(false, "path leaves the relation");
                }
        }
        return pass_if(true, "");
    });
    add("frame.build-verify", "depth 64", [](nat, Rng&) {
        Frame f = build_frame(64);
        auto rep = verify_frame(f);
        return pass_if(rep.ok, rep.violations.empty() ? "" : rep.violations.front());
    });
    add("frame.density-witness", "p,q<=3,|w|<=3", [](nat, Rng&) {
        Frame f = build_frame(16);
        for (nat p = 0; p <= 3; ++p)
            for (nat q = 0; q <= 3; ++q)
                for (nat wi = 0; wi < 15; ++wi) {
                    Word w = psi(wi);
                    if (w.size() > 3)
                        break;
                    auto d = density_witness(f, p, q, w);
                    if (unpair(d.entry_length).first != p)
                        return pass_if(false, "fiber wrong");
                }
        return pass_if(true, "");
    });
    add("frame.tree-acyclic", "l<=12", [](nat depth, Rng&) {
        nat lmax = std::min<nat>(12, depth + 2);
        Frame f = build_frame(lmax);
        auto rep = verify_tree_acyclicity(f, lmax);
        return pass_if(rep.ok, rep.failures.empty() ? "" : rep.failures.front());
    });
    add("ep.xor-algebra", "200 samples", [](nat, Rng& rng) {
        for (nat t = 0; t < 200; ++t) {
            EpPoint x = random_ep(rng, 6, 5), y = random_ep(rng, 6, 5), z = random_ep(rng, 6, 5);
            if (!(ep_xor(ep_xor(x, y), y) == x))
                return pass_if(false, "involution fails");
            if (!(ep_xor(x, y) == ep_xor(y, x)))
                return pass_if(false, "commutativity fails");
            if (!(ep_xor(ep_xor(x, y), z) == ep_xor(x, ep_xor(y, z))))
                return pass_if(false, "associativity fails");
        }
        return pass_if(true, "");
    });
    add("ep.canonical-form", "200 samples", [](nat, Rng& rng) {
        for (nat t = 0; t < 200; ++t) {
            Word prefix = random_word(rng, rnd(rng, 0, 6));
            Word period = random_word(rng, rnd(rng, 1, 6));
            EpPoint x(prefix, period);
            for (nat q = 0; q < 64; ++q) {
                int raw = q < prefix.size()
                              ? prefix.bit(q)
                              : period.bit((q - prefix.size()) % period.size());
                if (x.at(q) != raw)
                    return pass_if(false, "canonical form changes the point");
            }
        }
        return pass_if(true, "");
    });
    add("ideals.fin-exact", "examples", [](nat, Rng&) {
        bool ok = fin_member(EpPoint::from_strings("101", "0")).in() &&
                  fin_member(EpPoint::from_strings("", "1")).out() &&
                  fin_member(EpPoint::from_strings("0001", "01")).out();
        return pass_if(ok, "verdict wrong");
    });
    add("ideals.i3-oracle", "200 samples", [](nat, Rng& rng) {
        for (nat t = 0; t < 200; ++t) {
            EpPoint x = random_ep(rng, 8, 6);
            bool fast = i3_member(x).in();
            bool slow = i3_truncation_oracle_in(x, 50, 10000);
            if (fast != slow)
                return pass_if(false, "disagreement on prefix " + x.prefix().str() +
                                          " period " + x.period().str());
        }
        return pass_if(true, "");
    });
    add("ideals.prop310-monotone", "100 samples", [](nat, Rng& rng) {
        for (nat t = 0; t < 100; ++t) {
            EpPoint x = random_ep(rng, 6, 5);
            EpPoint y = ep_max({x, random_ep(rng, 6, 5)});
            if (!ep_le(x, y))
                return pass_if(false, "max is not an upper bound");
            for (nat n = 0; n <= 8; ++n) {
                Word sx = select_vertical(x, n, 64), sy = select_vertical(y, n, 64);
                Word px = select_phi(x, n, 64), py = select_phi(y, n, 64);
                for (nat i = 0; i < 64; ++i)
                    if (sx.bit(i) > sy.bit(i) || px.bit(i) > py.bit(i))
                        return pass_if(false, "sections not monotone");
            }
        }
        return pass_if(true, "");
    });
    add("ideals.prop310-max", "100 samples", [](nat, Rng& rng) {
        for (nat t = 0; t < 100; ++t) {
            std::vector<EpPoint> xs{random_ep(rng, 5, 4), random_ep(rng, 5, 4),
                                    random_ep(rng, 5, 4)};
            EpPoint m = ep_max(xs);
            for (nat n = 0; n <= 6; ++n) {
                Word lhs = select_vertical(m, n, 48);
                Word rhs = Word::zeros(48);
                for (const auto& x : xs) {
                    Word s = select_vertical(x, n, 48);
                    for (nat i = 0; i < 48; ++i)
                        if (s.bit(i))
                            rhs.set_bit(i, 1);
                }
                if (!(lhs == rhs))
                    return pass_if(false, "vertical max mismatch");
            }
        }
        return pass_if(true, "");
    });
    add("ideals.prop310-fin-supported", "100 samples", [](nat, Rng& rng) {
        for (nat t = 0; t < 100; ++t) {
            EpPoint x = random_supported(rng, 10);
            auto supp = x.support();
            for (nat n = 0; n <= 6; ++n) {
                std::set<nat> expect;
                for (nat m : supp) {
                    auto [c, p] = unpair(m);
                    if (c == n)
                        expect.insert(p);
                }
                Word s = select_vertical(x, n, 128);
                std::set<nat> got;
                for (nat i = 0; i < 128; ++i)
                    if (s.bit(i))
                        got.insert(i);
                for (nat p : got)
                    if (!expect.count(p))
                        return pass_if(false, "unexpected support");
            }
        }
        return pass_if(true, "");
    });
    add("ideals.transfer-identity", "40 injections", [](nat, Rng& rng) {
        for (nat t = 0; t < 40; ++t) {
            PartialInjection i = random_admissible_injection(rng, 300, 60);
            for (nat n = 0; n <= 5; ++n) {
                PartialInjection I = transfer_injection(i, n);
                require_column_preserving_injection(I);
                for (const auto& [p, Ip] : I)
                    if (phi(n, Ip) != i.at(phi(n, p)))
                        return pass_if(false, "transfer identity fails");
            }
        }
        return pass_if(true, "");
    });
    add("ideals.assembly-sections", "n<=4, length 64", [](nat, Rng& rng) {
        nat salt = rng();
        std::vector<SectionMap> sections;
        for (nat n = 0; n < 8; ++n)
            sections.push_back([n, salt](const Word& x) {
                Rng local(salt ^ (n * 1315423911ull) ^ x.hash());
                Word w = Word::zeros(2048);
                for (nat i = 0; i < 2048; ++i)
                    if (local() & 1)
                        w.set_bit(i, 1);
                return w;
            });
        Word x = random_word(rng, 32);
        Word out = assemble_section_reduction(sections, x, 4096);
        for (nat n = 0; n <= 4; ++n) {
            Word lhs = word_select_phi(out, n, 64);
            Word rhs = sections[n](x).prefix(64);
            if (!(lhs == rhs))
                return pass_if(false, "section identity fails at column " + std::to_string(n));
        }
        return pass_if(true, "");
    });
    add("ideals.vertical-invariance", "30 injections", [](nat, Rng& rng) {
        for (nat t = 0; t < 30; ++t) {
            PartialInjection i;
            for (nat m = 0; m <= 300; ++m) {
                auto [c, p] = unpair(m);
                i[m] = pair_code(c, p + (c % 3));
            }
            std::vector<EpPoint> xs;
            for (nat s = 0; s < 5; ++s)
                xs.push_back(random_supported(rng, 8));
            auto rep = vertical_invariance_check(t % 2 ? BasicIdeal::Fin : BasicIdeal::I3, i, xs);
            if (!rep.ok)
                return pass_if(false, rep.asymmetries.front());
        }
        return pass_if(true, "");
    });
    add("ideals.member-certificates", "spec cases", [](nat, Rng&) {
        auto tree = IdealExpr::m_node({IdealExpr::fin()});
        if (!ideal_member(tree, EpPoint::from_strings("1101", "0"), 16).in())
            return pass_if(false, "supported point not accepted");
        if (!ideal_member(tree, EpPoint::ones(), 16).out())
            return pass_if(false, "cofinite point not rejected");
        auto deep = IdealExpr::a_node({IdealExpr::i3()});
        if (ideal_member(deep, EpPoint::from_strings("", "10"), 32).verdict != Verdict::Unknown)
            return pass_if(false, "expected an unknown verdict");
        return pass_if(true, "");
    });
    add("embed.thm26-conditions", "depth 6", [](nat, Rng&) {
        TentSymOracle oracle(default_oracle_bound());
        PartialEmbedding e = build_thm26(oracle, 6);
        auto rep = verify_embedding(e, &oracle, nullptr, nullptr);
        return pass_if(rep.ok, "conditions fail");
    });
    add("embed.thm26-perturbed", "depth 5, extra point", [](nat, Rng&) {
        TentSymOracle oracle(default_oracle_bound());
        oracle.add_extra_point(EpPoint::from_strings("", "01"), EpPoint::from_strings("", "10"));
        PartialEmbedding e = build_thm26(oracle, 5);
        auto rep = verify_embedding(e, &oracle, nullptr, nullptr);
        return pass_if(rep.ok, "conditions fail");
    });
    add("embed.thm410-conditions", "depth 6", [](nat, Rng&) {
        Frame f = build_frame(8);
        TreeBodyOracle oracle(f, default_oracle_bound());
        PartialEmbedding e = build_thm410(f, oracle, 6);
        auto rep = verify_embedding(e, &oracle, nullptr, &f);
        return pass_if(rep.ok, "conditions fail");
    });
    add("embed.thm411-conditions", "depth 6", [](nat, Rng&) {
        BipartiteClosureOracle oracle(default_oracle_bound());
        PartialEmbedding e = build_thm411(oracle, 6);
        auto rep = verify_embedding(e, &oracle, nullptr, nullptr);
        return pass_if(rep.ok, "conditions fail");
    });
    add("embed.lemma37-depth2", "full space", [](nat, Rng&) {
        Frame f = build_frame(8, nat{1} << 16);
        FullSpaceOracle oracle(default_oracle_bound());
        PartialEmbedding e = build_lemma37(f, Word(), Word(), oracle, 2);
        auto rep = verify_embedding(e, nullptr, &oracle, &f);
        return pass_if(rep.ok, "conditions fail");
    });
    add("embed.mutation-detected", "depth 4", [](nat, Rng& rng) {
        TentSymOracle oracle(default_oracle_bound());
        PartialEmbedding e = build_thm26(oracle, 4);
        std::vector<Word> keys;
        for (const auto& [s, img] : e.psi)
            if (!img.empty())
                keys.push_back(s);
        Word victim = keys[rnd(rng, 0, keys.size() - 1)];
        PartialEmbedding bad = e;
        Word img = bad.psi.at(victim);
        nat pos = rnd(rng, 0, img.size() - 1);
        img.set_bit(pos, 1 - img.bit(pos));
        bad.psi[victim] = img;
        auto rep = verify_embedding(bad, &oracle, nullptr, nullptr);
        return pass_if(!rep.ok, "mutation slipped through");
    });
    add("embed.determinism", "depth 5", [](nat, Rng&) {
        TentSymOracle a(default_oracle_bound()), b(default_oracle_bound());
        PartialEmbedding x = build_thm26(a, 5), y = build_thm26(b, 5);
        return pass_if(x.to_json() == y.to_json(), "reruns differ");
    });
    add("oracle.g0-queries", "level<=8", [](nat, Rng&) {
        TentSymOracle oracle(default_oracle_bound());
        // every non-adjacent box escapes immediately; adjacent boxes never do
        for (nat l = 1; l <= 8; ++l)
            for (nat a = 0; a < (nat{1} << l); ++a)
                for (nat b = 0; b < (nat{1} << l); ++b) {
                    Word wa = vertex_to_word(a, l), wb = vertex_to_word(b, l);
                    if (wa == wb)
                        continue;
                    bool adjacent = t_member(wa, wb) || t_member(wb, wa);
                    if (adjacent && !oracle.box_meets(l, wa, wb))
                        return pass_if(false, "edge box escaped the closed set");
                    if (!adjacent && oracle.query(wa, wb, l) != 0)
                        return pass_if(false, "non-edge box did not escape at once");
                }
        return pass_if(true, "");
    });
    add("oracle.full-space-error", "negative control", [](nat, Rng&) {
        std::map<nat, std::vector<WordPair>> everything;
        everything[0].emplace_back(Word(), Word());
        BoxListOracle oracle(std::move(everything), 64);
        try {
            oracle.query(Word::from_string("0"), Word::from_string("1"), 0);
            return pass_if(false, "expected a bound error");
        } catch (const OracleError&) {
            return pass_if(true, "");
        }
    });
    return defs;
}

} // namespace

std::vector<std::string> certificate_check_ids() {
    std::vector<std::string> ids;
    for (const auto& d : build_registry())
        ids.push_back(d.id);
    return ids;
}

Certificate run_certificate(const std::string& scope, nat depth, nat seed) {
    if (depth == 0)
        throw PreconditionError("verification depth must be at least 1");
    Certificate cert;
    cert.scope = scope;
    cert.depth = depth;
    cert.seed = seed;
    bool all_pass = true;
    for (const auto& def : build_registry()) {
        if (scope != "all" && def.id.rfind(scope, 0) != 0)
            continue;
        CertificateItem item;
        item.id = def.id;
        item.params = def.params;
        Rng rng(seed ^ std::hash<std::string>{}(def.id));
        auto start = std::chrono::steady_clock::now();
        try {
            auto outcome = def.fn(depth, rng);
            item.status = outcome.pass ? "pass" : "fail";
            item.details = outcome.details;
        } catch (const std::exception& ex) {
            item.status = "error";
            item.details = ex.what();
        }
        auto end = std::chrono::steady_clock::now();
        item.duration_ms = static_cast<nat>(
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
        if (item.status != "pass")
            all_pass = false;
        cert.checks.push_back(std::move(item));
    }
    cert.pass = all_pass;
    return cert;
}

namespace {
using nlohmann::json;
}

std::string Certificate::to_json() const {
    json j;
    j["version"] = version;
    j["scope"] = scope;
    j["depth"] = depth;
    j["seed"] = seed;
    j["overall"] = pass ? "pass" : "fail";
    j["checks"] = json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"id", c.id},
                               {"params", c.params},
                               {"status", c.status},
                               {"details", c.details},
                               {"duration_ms", c.duration_ms}});
    return j.dump(2);
}

Certificate Certificate::from_json(const std::string& text) {
    json j = json::parse(text);
    Certificate cert;
    cert.version = j.at("version").get<std::string>();
    cert.scope = j.at("scope").get<std::string>();
    cert.depth = j.at("depth").get<nat>();
    cert.seed = j.at("seed").get<nat>();
    cert.pass = j.at("overall").get<std::string>() == "pass";
    for (const auto& c : j.at("checks")) {
        CertificateItem item;
        item.id = c.at("id").get<std::string>();
        item.params = c.at("params").get<std::string>();
        item.status = c.at("status").get<std::string>();
        item.details = c.at("details").get<std::string>();
        item.duration_ms = c.at("duration_ms").get<nat>();
        cert.checks.push_back(std::move(item));
    }
    return cert;
}

} // namespace levelcomb
