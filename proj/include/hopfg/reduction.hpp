#ifndef HOPFG_REDUCTION_HPP
#define HOPFG_REDUCTION_HPP

// The object-removal machinery: the relabeling functor Re along an arrow
// x : i0 -> k0 (which eliminates the object k0), correction-morphism
// builders (zeta/xi families and the comparison transformation nu),
// stabilization (adding a cancelling integral/counit pair over a fresh
// object) and reduction (removing an object from a closed complete term),
// plus the L-decomposition of closed complete terms.

#include <optional>

#include "hopfg/macro.hpp"
#include "hopfg/match.hpp"

namespace hopfg {

struct DecompositionError : std::runtime_error {
    explicit DecompositionError(const std::string& w)
        : std::runtime_error(w) {}
};

// ---- correction builders ------------------------------------------------

inline void require_common_target(Arrow x, Arrow y) {
    if (x.tgt != y.tgt)
        throw TypeError("zeta/xi require arrows with a common target");
}

inline Term build_zeta(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    require_common_target(x, y);
    return zeta(O, x, y, A);
}
inline Term build_xi(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    require_common_target(x, y);
    return xi(O, x, y, A);
}
inline Term build_xi_inv(const Objs& O, Arrow x, Arrow y,
                         const ObjectWord& A) {
    require_common_target(x, y);
    return xi_inv(O, x, y, A);
}
inline Term build_xi_bar(const Objs& O, Arrow x, Arrow y,
                         const ObjectWord& A) {
    require_common_target(x, y);
    return xi_bar(O, x, y, A);
}
inline Term build_xi_bar_inv(const Objs& O, Arrow x, Arrow y,
                             const ObjectWord& A) {
    require_common_target(x, y);
    return xi_bar_inv(O, x, y, A);
}

// ---- peephole cleanup ---------------------------------------------------

namespace reduction_detail {

// The windowed rule matcher can only see a redex whose boxes fit in a
// contiguous wire interval.  Canonical (ASAP) layering routinely breaks
// that for the absorption laws: scalar-source boxes hoist far above their
// consumers, and sibling boxes consuming parallel legs are forced into the
// same window.  The passes below perform those absorptions directly on the
// wiring.  Each is a fusion of catalog rewrites (noted per case), strictly
// decreases the box count, and is applied on the canonical form.

struct WireEnd {
    bool reaches_boundary = false;  // wire exits at the target boundary
    size_t layer = 0, box = 0, slot = 0;    // first non-identity consumer
    std::vector<std::pair<size_t, size_t>> path;  // identity boxes crossed
};

struct LayerIndex {
    std::vector<size_t> in_start, out_start;
};

inline LayerIndex index_layer(const Layer& L) {
    LayerIndex ix;
    size_t i = 0, o = 0;
    for (const Gen& g : L) {
        ix.in_start.push_back(i);
        ix.out_start.push_back(o);
        i += gen_in(g).size();
        o += gen_out(g).size();
    }
    return ix;
}

// Follow the output wire at position p of layer k through identity boxes
// to its first real consumer.
inline WireEnd trace_wire(const Term& t,
                          const std::vector<LayerIndex>& ix,
                          size_t k, size_t p) {
    WireEnd e;
    for (size_t j = k + 1; j < t.layers.size(); ++j) {
        const Layer& L = t.layers[j];
        size_t b = 0;
        while (b + 1 < L.size() && ix[j].in_start[b + 1] <= p) ++b;
        if (L[b].tag == GenTag::Id) {
            e.path.emplace_back(j, b);
            p = ix[j].out_start[b];
            continue;
        }
        e.layer = j;
        e.box = b;
        e.slot = p - ix[j].in_start[b];
        return e;
    }
    e.reaches_boundary = true;
    return e;
}

// Apply one absorption: modify/delete producer and consumer boxes and drop
// the identity boxes along the deleted wires.  `edits` maps (layer, box)
// to a replacement box list (empty list = delete).
inline void splice(Term& t,
                   const std::map<std::pair<size_t, size_t>,
                                  std::vector<Gen>>& edits) {
    for (size_t k = 0; k < t.layers.size(); ++k) {
        Layer nl;
        for (size_t b = 0; b < t.layers[k].size(); ++b) {
            auto it = edits.find({k, b});
            if (it == edits.end()) {
                nl.push_back(t.layers[k][b]);
            } else {
                nl.insert(nl.end(), it->second.begin(), it->second.end());
            }
        }
        t.layers[k] = std::move(nl);
    }
    t = normalize_exchange(t);
}

inline void erase_path(std::map<std::pair<size_t, size_t>,
                                std::vector<Gen>>& edits,
                       const WireEnd& e) {
    for (auto [l, b] : e.path) edits[{l, b}] = {};
}

// One absorption step; true if a rewrite happened.
inline bool collapse_step(Term& t) {
    std::vector<LayerIndex> ix;
    ix.reserve(t.layers.size());
    for (const Layer& L : t.layers) ix.push_back(index_layer(L));
    using Edits = std::map<std::pair<size_t, size_t>, std::vector<Gen>>;
    for (size_t k = 0; k < t.layers.size(); ++k) {
        const Layer& L = t.layers[k];
        for (size_t b = 0; b < L.size(); ++b) {
            const Gen& g = L[b];
            size_t p = ix[k].out_start[b];
            switch (g.tag) {
                case GenTag::Copair: {
                    // a counital leg trivializes the copairing (r9/r9p);
                    // the surviving leg becomes a unit of the other object
                    WireEnd a = trace_wire(t, ix, k, p);
                    WireEnd c = trace_wire(t, ix, k, p + 1);
                    Edits e;
                    if (!a.reaches_boundary &&
                        t.layers[a.layer][a.box].tag == GenTag::Counit) {
                        e[{k, b}] = {g_unit(g.b.src)};
                        e[{a.layer, a.box}] = {};
                        erase_path(e, a);
                    } else if (!c.reaches_boundary &&
                               t.layers[c.layer][c.box].tag ==
                                   GenTag::Counit) {
                        e[{k, b}] = {g_unit(g.a.src)};
                        e[{c.layer, c.box}] = {};
                        erase_path(e, c);
                    } else {
                        break;
                    }
                    splice(t, e);
                    return true;
                }
                case GenTag::Braid:
                case GenTag::BraidInv: {
                    // a scalar-target box slides up through the crossing,
                    // removing it (counit/cointegral naturality)
                    WireEnd a = trace_wire(t, ix, k, p);      // b-output
                    WireEnd c = trace_wire(t, ix, k, p + 1);  // a-output
                    auto scalarize = [&](GenTag tag,
                                         Arrow w) -> std::optional<Gen> {
                        if (tag == GenTag::Counit) return g_counit(w);
                        if (tag == GenTag::Cointegral && w.is_identity())
                            return g_cointegral(w.src);
                        return std::nullopt;
                    };
                    Edits e;
                    std::optional<Gen> rep;
                    if (!a.reaches_boundary &&
                        (rep = scalarize(t.layers[a.layer][a.box].tag,
                                         g.b))) {
                        e[{k, b}] = {g_id(g.a), *rep};
                        e[{a.layer, a.box}] = {};
                        erase_path(e, a);
                    } else if (!c.reaches_boundary &&
                               (rep = scalarize(
                                    t.layers[c.layer][c.box].tag, g.a))) {
                        e[{k, b}] = {*rep, g_id(g.b)};
                        e[{c.layer, c.box}] = {};
                        erase_path(e, c);
                    } else {
                        break;
                    }
                    splice(t, e);
                    return true;
                }
                case GenTag::Integral: {
                    WireEnd a = trace_wire(t, ix, k, p);
                    if (a.reaches_boundary) break;
                    const Gen& ca = t.layers[a.layer][a.box];
                    Edits e;
                    if (ca.tag == GenTag::Mul) {
                        // the integral absorbs a multiplication, leaving a
                        // counit on the other argument (i2/i2p)
                        e[{k, b}] = {};
                        Arrow other = a.slot == 0 ? ca.b : ca.a;
                        e[{a.layer, a.box}] = {g_counit(other),
                                               g_integral(gen_out(ca)[0])};
                    } else if (ca.tag == GenTag::Braid ||
                               ca.tag == GenTag::BraidInv) {
                        // the integral slides down through the crossing,
                        // removing it (integral naturality)
                        e[{k, b}] = {};
                        e[{a.layer, a.box}] =
                            a.slot == 0
                                ? Layer{g_id(ca.b), g_integral(ca.a)}
                                : Layer{g_integral(ca.b), g_id(ca.a)};
                    } else {
                        break;
                    }
                    erase_path(e, a);
                    splice(t, e);
                    return true;
                }
                case GenTag::Mul: {
                    // the counit is multiplicative: ε after m splits into
                    // a counit on each argument
                    WireEnd a = trace_wire(t, ix, k, p);
                    if (a.reaches_boundary ||
                        t.layers[a.layer][a.box].tag != GenTag::Counit)
                        break;
                    Edits e;
                    e[{k, b}] = {g_counit(g.a), g_counit(g.b)};
                    e[{a.layer, a.box}] = {};
                    erase_path(e, a);
                    splice(t, e);
                    return true;
                }
                case GenTag::Antipode:
                case GenTag::AntipodeInv:
                case GenTag::Ribbon:
                case GenTag::RibbonInv: {
                    // counit absorbs the (inverse) antipode (s6 + s2p)
                    // and the (inverse) ribbon (r2 + r1)
                    WireEnd a = trace_wire(t, ix, k, p);
                    if (a.reaches_boundary ||
                        t.layers[a.layer][a.box].tag != GenTag::Counit)
                        break;
                    Edits e;
                    e[{k, b}] = {g_counit(g.a)};
                    e[{a.layer, a.box}] = {};
                    erase_path(e, a);
                    splice(t, e);
                    return true;
                }
                case GenTag::Unit: {
                    WireEnd a = trace_wire(t, ix, k, p);
                    if (a.reaches_boundary) break;
                    const Gen& ca = t.layers[a.layer][a.box];
                    Edits e;
                    if (ca.tag == GenTag::Mul) {
                        // unit law (a4/a4p)
                        e[{k, b}] = {};
                        e[{a.layer, a.box}] = {
                            g_id(a.slot == 0 ? ca.b : ca.a)};
                    } else if (ca.tag == GenTag::Counit) {
                        // unit then counit (a8)
                        e[{k, b}] = {};
                        e[{a.layer, a.box}] = {};
                    } else if (ca.tag == GenTag::Braid ||
                               ca.tag == GenTag::BraidInv) {
                        // the unit slides down through the crossing,
                        // removing it (unit naturality)
                        e[{k, b}] = {};
                        e[{a.layer, a.box}] =
                            a.slot == 0
                                ? Layer{g_id(ca.b), g_unit(ca.a.src)}
                                : Layer{g_unit(ca.b.src), g_id(ca.a)};
                    } else {
                        break;
                    }
                    erase_path(e, a);
                    splice(t, e);
                    return true;
                }
                case GenTag::Comul: {
                    // counit law (a2/a2p)
                    WireEnd a = trace_wire(t, ix, k, p);
                    WireEnd c = trace_wire(t, ix, k, p + 1);
                    Edits e;
                    if (!a.reaches_boundary &&
                        t.layers[a.layer][a.box].tag == GenTag::Counit) {
                        e[{k, b}] = {g_id(g.a)};
                        e[{a.layer, a.box}] = {};
                        erase_path(e, a);
                    } else if (!c.reaches_boundary &&
                               t.layers[c.layer][c.box].tag ==
                                   GenTag::Counit) {
                        e[{k, b}] = {g_id(g.a)};
                        e[{c.layer, c.box}] = {};
                        erase_path(e, c);
                    } else {
                        break;
                    }
                    splice(t, e);
                    return true;
                }
                default:
                    break;
            }
        }
    }
    return false;
}

}  // namespace reduction_detail

// Deterministic exhaustive application of strictly size-reducing rewrites
// (inverse pairs, unit/counit laws, copairing absorptions, counit slides
// through crossings).  Terminates: every step reduces the triple
// (#copairings, #multiplications, #boxes) lexicographically.
inline Term peephole_simplify(const Term& t) {
    static const std::vector<std::pair<const char*, int>> steps = {
        {"b2", +1},           {"b2p", +1},
        {"s2", +1},           {"s2p", +1},
        {"r1", +1},           {"r1p", +1},
        {"r7", +1},           {"r9", +1},
        {"r9p", +1},          {"s5", +1},
        {"s6", +1},           {"i5", +1},
        {"a2", +1},           {"a2p", +1},
        {"a4", +1},           {"a4p", +1},
        {"a8", +1},           {"i3", +1},
        {"nat-g-counit-l", -1},  {"nat-g-counit-r", -1},
        {"nat-gi-counit-l", -1}, {"nat-gi-counit-r", -1},
        {"p2", +1},           {"p2p", +1},
    };
    Term cur = normalize_exchange(t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [id, dir] : steps) {
            std::vector<Match> ms = find_matches(cur, id, dir);
            if (!ms.empty()) {
                cur = apply(cur, ms.front());
                changed = true;
                break;
            }
        }
        if (!changed && reduction_detail::collapse_step(cur)) changed = true;
    }
    return cur;
}

// ---- the relabeling functor ---------------------------------------------

namespace reduction_detail {

inline Objs objects_without(const Objs& O, int k0) {
    Objs out;
    for (int o : O)
        if (o != k0) out.push_back(o);
    return out;
}

}  // namespace reduction_detail

// The functor along x : i0 -> k0.  For i0 == k0 it is the formal relabeling
// (the identity).  For i0 != k0 every label is pushed away from k0, with
// correction morphisms on comultiplications and crossings of edges that
// touch k0 (and, by the conjugation bookkeeping, also on crossings of edges
// that avoid it), antipode/ribbon adjustments on (i0,k0)-labeled antipodes,
// and trivialization of the (i0,k0) copairing.  The image never mentions
// k0.  The functor is layerwise, hence strictly compositional.
inline Term Re(Arrow x, const Term& t) {
    const int i0 = x.src, k0 = x.tgt;
    if (i0 == k0) return t;
    Objs O2 = reduction_detail::objects_without(t.objects, k0);
    if (std::find(O2.begin(), O2.end(), i0) == O2.end())
        throw TypeError("Re: source object of x not in the groupoid");
    LabelMap mx{x};
    auto rl = [&](Arrow g) { return mx.apply(g); };
    const Arrow w = identity_arrow(i0);
    auto idw = [&](ObjectWord ww) { return identity_term(O2, std::move(ww)); };
    auto one = [&](Gen g) { return term_of(O2, g); };

    auto box_image = [&](const Gen& b) -> Term {
        Arrow g = b.a, h = b.b;
        Arrow gp = rl(g), hp = rl(h);
        switch (b.tag) {
            case GenTag::Id: return idw({gp});
            case GenTag::Counit: return one(g_counit(gp));
            case GenTag::Mul: return one(g_mul(gp, hp));
            case GenTag::Unit: return one(g_unit(gp.src));
            case GenTag::Cointegral: return one(g_cointegral(gp.src));
            case GenTag::Integral: return one(g_integral(gp));
            case GenTag::Ribbon: return one(g_ribbon(gp));
            case GenTag::RibbonInv: return one(g_ribboninv(gp));
            case GenTag::Comul: {
                Term d = one(g_comul(gp));
                if (g.src == i0 && g.tgt == k0)
                    d = compose(d, mu_inv(O2, gp, gp));
                return d;
            }
            case GenTag::Antipode:
                if (g.src == i0 && g.tgt == k0)
                    return compose(compose(one(g_ribbon(gp)),
                                           one(g_ribbon(gp))),
                                   one(g_antipodeinv(gp)));
                return one(g_antipode(gp));
            case GenTag::AntipodeInv:
                if (g.src == k0 && g.tgt == i0)
                    return compose(compose(one(g_ribboninv(gp)),
                                           one(g_ribboninv(gp))),
                                   one(g_antipode(gp)));
                return one(g_antipodeinv(gp));
            case GenTag::Copair: {
                int i = g.src, j = h.src;
                if ((i == i0 && j == k0) || (i == k0 && j == i0))
                    return tensor(one(g_unit(i0)), one(g_unit(i0)));
                return one(g_copair(mx.apply_object(i), mx.apply_object(j)));
            }
            case GenTag::Braid: {
                // Corrections keyed on the over-passing label g.
                Term cross = one(g_braid(gp, hp));
                bool at_src = g.src == k0, at_tgt = g.tgt == k0;
                if (at_src && at_tgt) return cross;
                Term pre = idw({gp, hp});
                Term post = idw({hp, gp});
                if (at_src || (!at_src && !at_tgt)) {
                    pre = compose(
                        compose(tensor(rho_r(O2, gp, i0), idw({hp})),
                                tensor(idw({gp}),
                                       tensor(one(g_antipode(w)),
                                              idw({hp})))),
                        tensor(idw({gp}), zeta(O2, x, x, {h})));
                }
                if (at_tgt || (!at_src && !at_tgt)) {
                    post = compose(
                        tensor(idw({hp}), rho_l(O2, gp, i0)),
                        tensor(zeta_bar(O2, x, x, {h}), idw({gp})));
                }
                return compose(compose(pre, cross), post);
            }
            case GenTag::BraidInv: {
                // Corrections keyed on the over-passing label h.
                Term cross = one(g_braidinv(gp, hp));
                bool at_src = h.src == k0, at_tgt = h.tgt == k0;
                if (at_src && at_tgt) return cross;
                Term pre = idw({gp, hp});
                Term post = idw({hp, gp});
                if (at_tgt || (!at_src && !at_tgt)) {
                    pre = compose(
                        compose(tensor(idw({gp}), rho_l(O2, hp, i0)),
                                tensor(idw({gp}),
                                       tensor(one(g_antipodeinv(w)),
                                              idw({hp})))),
                        tensor(zeta_bar(O2, x, x, {g}), idw({hp})));
                }
                if (at_src || (!at_src && !at_tgt)) {
                    post = compose(
                        tensor(rho_r(O2, hp, i0), idw({gp})),
                        tensor(idw({hp}), zeta(O2, x, x, {g})));
                }
                return compose(compose(pre, cross), post);
            }
        }
        throw TypeError("Re: unknown generator");
    };

    Term out = identity_term(O2, word_relabel(t.src, mx));
    for (const Layer& L : t.layers) {
        Term lt = identity_term(O2, {});
        for (const Gen& b : L) lt = tensor(lt, box_image(b));
        out = compose(out, lt);
    }
    return normalize_exchange(out);
}

// Re followed by the peephole cleanup (the literal table leaves removable
// copairing debris on crossings of edges that avoid k0).
inline Term Re_simplified(Arrow x, const Term& t) {
    return peephole_simplify(Re(x, t));
}

// ---- stabilization ------------------------------------------------------

// Tensor with a cancelling integral/counit pair over the fresh object
// k0 = target of x.
inline Term stabilize(const Term& t, Arrow x) {
    if (!is_closed(t)) throw TypeError("stabilize: term must be closed");
    const int i0 = x.src, k0 = x.tgt;
    if (i0 == k0) throw TypeError("stabilize: x must not be an object");
    if (std::find(t.objects.begin(), t.objects.end(), i0) == t.objects.end())
        throw TypeError("stabilize: source object missing");
    if (std::find(t.objects.begin(), t.objects.end(), k0) != t.objects.end())
        throw TypeError("stabilize: target object must be fresh");
    Objs O2 = merge_objects(t.objects, {k0});
    Term tt = term_of_layers(O2, t.src, t.layers);
    Term lx = compose(term_of(O2, g_integral(x)), term_of(O2, g_counit(x)));
    return normalize_exchange(tensor(tt, lx));
}

// ---- L-decomposition ----------------------------------------------------

// Write a closed complete term as F' composed after an integral of label g:
// the first integral box labeled g (in layer order of the canonical form)
// is removed and its output wire threaded down to the source.  If no such
// integral exists but one labeled with the inverse arrow does, it is first
// converted through the antipode invariance of the integral.
inline Term decompose_L(const Term& t, Arrow g) {
    Term s = normalize_exchange(t);
    if (!is_closed(s)) throw TypeError("decompose_L: term must be closed");
    auto locate = [&]() -> std::optional<std::pair<size_t, size_t>> {
        for (size_t k = 0; k < s.layers.size(); ++k)
            for (size_t j = 0; j < s.layers[k].size(); ++j)
                if (s.layers[k][j].tag == GenTag::Integral &&
                    s.layers[k][j].a == g)
                    return std::make_pair(k, j);
        return std::nullopt;
    };
    auto pos = locate();
    if (!pos) {
        // Create a g-labeled integral from one labeled with the inverse.
        for (const Match& m : find_matches(s, "i4", -1)) {
            if (Arrow{m.assign[0], m.assign[1]} == g) {
                s = apply(s, m);
                break;
            }
        }
        pos = locate();
        if (!pos)
            throw DecompositionError("no integral labeled " + to_string(g) +
                                     " or its inverse");
    }
    auto [k, j] = *pos;
    std::vector<Layer> L = s.layers;
    size_t c = 0;  // input column of the threaded wire
    for (size_t b = 0; b < j; ++b) c += gen_in(L[k][b]).size();
    L[k][j] = g_id(g);
    for (size_t l = k; l-- > 0;) {
        // Insert an identity wire into layer l whose output column is c.
        size_t acc = 0, cin = 0;
        std::optional<size_t> ins;
        for (size_t b = 0; b <= L[l].size(); ++b) {
            if (acc == c) {
                ins = b;
                break;
            }
            if (b == L[l].size() || acc > c) break;
            acc += gen_out(L[l][b]).size();
            cin += gen_in(L[l][b]).size();
        }
        if (!ins)
            throw DecompositionError(
                "cannot thread the integral wire to the source");
        L[l].insert(L[l].begin() + static_cast<long>(*ins), g_id(g));
        c = cin;
    }
    if (c != 0)
        throw DecompositionError("threaded wire does not reach the source");
    Term F = normalize_exchange(term_of_layers(s.objects, {g}, L));
    Term back =
        normalize_exchange(compose(term_of(s.objects, g_integral(g)), F));
    if (back != s)
        throw DecompositionError("decomposition does not recompose");
    return F;
}

// ---- reduction ----------------------------------------------------------

// Remove the object k0 from a closed complete term: decompose off an
// integral labeled x : i0 -> k0, push the rest through Re, feed the freed
// wire with a unit, and clean up.
inline Term reduce(const Term& t, int k0, Arrow x) {
    if (x.tgt != k0 || x.src == k0)
        throw TypeError("reduce: need x with target k0 and distinct source");
    Term F = decompose_L(t, x);
    Term R = Re(x, F);
    Term eta = term_of(R.objects, g_unit(x.src));
    return peephole_simplify(compose(eta, R));
}

// ---- comparison transformation ------------------------------------------

// The natural comparison between removing k0-then-l0 and l0-then-k0, for
// x : i0 -> k0 and y : j0 -> l0.  Only the generic label configuration
// (i0, j0, k0, l0 pairwise giving well-typed corrections: i0 != k0,
// k0 != l0, l0 != j0, i0 != l0 and j0 != k0) is exposed.
inline Term build_nu(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    const int i0 = x.src, k0 = x.tgt, j0 = y.src, l0 = y.tgt;
    if (i0 == k0 || k0 == l0 || l0 == j0 || i0 == l0 || j0 == k0)
        throw TypeError("build_nu: label constraints violated");
    LabelMap mx{x}, my{y};
    const Arrow ek = identity_arrow(k0), el = identity_arrow(l0);
    ObjectWord Ax = word_relabel(A, mx);
    ObjectWord Ap = word_relabel(Ax, my);  // = (A^x)^y = (A^y)^x
    ObjectWord Ay = word_relabel(A, my);
    ObjectWord HyA{y};
    HyA.insert(HyA.end(), A.begin(), A.end());
    ObjectWord HxA{x};
    HxA.insert(HxA.end(), A.begin(), A.end());
    auto idw = [&](ObjectWord ww) { return identity_term(O, std::move(ww)); };

    // Xi : H_x (x) H_y (x) A -> H_x (x) H_y (x) A'.
    Term Xi = xi(O, ek, x, HyA);
    Xi = compose(Xi, tensor(idw({x}), xi(O, el, y, Ax)));
    Xi = compose(Xi, tensor(xi_inv(O, ek, x, {y}), idw(Ap)));
    // Xi^{-1}: invert each factor in reverse order.
    Term XiInv = tensor(xi(O, ek, x, {y}), idw(Ap));
    XiInv = compose(XiInv, tensor(idw({x}), xi_inv(O, el, y, Ax)));
    XiInv = compose(XiInv, xi_inv(O, ek, x, HyA));
    // Theta : H_x (x) H_y (x) A -> H_x (x) H_y (x) A'.
    Term Theta = tensor(term_of(O, g_braidinv(x, y)), idw(A));
    Theta = compose(Theta, xi(O, el, y, HxA));
    Theta = compose(Theta, tensor(idw({y}), xi(O, ek, x, Ay)));
    Term top = compose(xi_inv(O, el, y, {x}), term_of(O, g_braid(y, x)));
    Theta = compose(Theta, tensor(top, idw(Ap)));

    Term mid = Re(y, Re(x, compose(XiInv, Theta)));
    const Objs& O2 = mid.objects;
    Term nu = tensor(tensor(term_of(O2, g_unit(i0)), term_of(O2, g_unit(j0))),
                     identity_term(O2, Ap));
    nu = compose(nu, mid);
    nu = compose(nu,
                 tensor(tensor(term_of(O2, g_counit(identity_arrow(i0))),
                               term_of(O2, g_counit(identity_arrow(j0)))),
                        identity_term(O2, Ap)));
    return normalize_exchange(nu);
}

}  // namespace hopfg

#endif  // HOPFG_REDUCTION_HPP
