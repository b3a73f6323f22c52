#ifndef HOPFG_MACRO_HPP
#define HOPFG_MACRO_HPP

// Derived morphisms, each expanded into an elementary-generator Term:
// form/coform (the selfduality pairing), word braidings, twists, the T-arc,
// mu/rho (copairing corrections), cusps, rotation and reversal of morphisms,
// and the zeta/xi family used by label reduction.

#include "hopfg/term.hpp"

namespace hopfg {

using Objs = std::vector<int>;

// ---- pairing ------------------------------------------------------------

// coform(g) = comul(g) after integral(g) : 1 -> H_g (x) H_g.
inline Term coform(const Objs& O, Arrow g) {
    return compose(term_of(O, g_integral(g)), term_of(O, g_comul(g)));
}

// form(g) = cointegral after mul(g, g^-1) after (id (x) antipode) :
// H_g (x) H_g -> 1.
inline Term form(const Objs& O, Arrow g) {
    Term t = tensor(identity_term(O, {g}), term_of(O, g_antipode(g)));
    t = compose(t, term_of(O, g_mul(g, g.inv())));
    return compose(t, term_of(O, g_cointegral(g.src)));
}

// ---- word braidings -----------------------------------------------------

// braid_word(A, B, +1) : A ++ B -> B ++ A built from elementary braids
// (positive crossings); sign -1 uses the inverse braiding.
inline Term braid_word(const Objs& O, const ObjectWord& A, const ObjectWord& B,
                       int sign = +1) {
    Term t = identity_term(O, [&] {
        ObjectWord w = A;
        w.insert(w.end(), B.begin(), B.end());
        return w;
    }());
    if (A.empty() || B.empty()) return t;
    // Slide the last wire of A rightwards past all of B, then recurse.
    // Positions are tracked in the evolving word.
    ObjectWord cur = t.src;
    for (size_t ai = A.size(); ai-- > 0;) {
        // The wire that started at position ai is currently at position ai
        // (wires A[0..ai-1] untouched, A[ai] not yet moved).
        for (size_t step = 0; step < B.size(); ++step) {
            size_t pos = ai + step;
            Layer L;
            for (size_t i = 0; i < pos; ++i) L.push_back(g_id(cur[i]));
            Gen box = sign > 0 ? g_braid(cur[pos], cur[pos + 1])
                               : g_braidinv(cur[pos], cur[pos + 1]);
            L.push_back(box);
            for (size_t i = pos + 2; i < cur.size(); ++i)
                L.push_back(g_id(cur[i]));
            t.layers.push_back(L);
            cur = layer_out(t.layers.back());
        }
    }
    return t;
}

// ---- twists -------------------------------------------------------------

// twist(A) : A -> A, the double-antipode twist; on one wire it is
// antipode then antipode-of-the-inverse; on words it is conjugated by the
// word braiding.
inline Term twist(const Objs& O, const ObjectWord& A) {
    if (A.empty()) return identity_term(O, {});
    if (A.size() == 1) {
        Arrow g = A[0];
        return compose(term_of(O, g_antipode(g)),
                       term_of(O, g_antipode(g.inv())));
    }
    ObjectWord head(A.begin(), A.end() - 1);
    ObjectWord last{A.back()};
    Term t = braid_word(O, head, last);
    t = compose(t, tensor(twist(O, last), twist(O, head)));
    return compose(t, braid_word(O, last, head));
}

// ---- T-arc --------------------------------------------------------------

// T(g) = antipode after ribbon_inv : H_g -> H_{g^-1}; defined only for
// non-scalar labels (src != tgt).
inline Term T_arc(const Objs& O, Arrow g) {
    if (g.is_identity())
        throw TypeError("T(g) requires source(g) != target(g)");
    return compose(term_of(O, g_ribboninv(g)), term_of(O, g_antipode(g)));
}

// T_inv(g) : H_{g^-1} -> H_g, the two-sided inverse of T(g); equals the
// T-arc of the inverse label.
inline Term T_arc_inv(const Objs& O, Arrow g) { return T_arc(O, g.inv()); }

// ---- copairing corrections ---------------------------------------------

// mu(g,h) : H_g (x) H_h -> H_g (x) H_h =
//   (mul(g,1_i) (x) mul(1_j,h)) after (id (x) copair(i,j) (x) id),
// with i = target(g), j = source(h).
inline Term mu(const Objs& O, Arrow g, Arrow h) {
    int i = g.tgt, j = h.src;
    Term t = tensor(tensor(identity_term(O, {g}), term_of(O, g_copair(i, j))),
                    identity_term(O, {h}));
    return compose(t, tensor(term_of(O, g_mul(g, identity_arrow(i))),
                             term_of(O, g_mul(identity_arrow(j), h))));
}

// mu_inv(g,h): same shape with an antipode on the second copairing leg.
inline Term mu_inv(const Objs& O, Arrow g, Arrow h) {
    int i = g.tgt, j = h.src;
    Term sigmaS = compose(
        term_of(O, g_copair(i, j)),
        tensor(identity_term(O, {identity_arrow(i)}),
               term_of(O, g_antipode(identity_arrow(j)))));
    Term t = tensor(tensor(identity_term(O, {g}), sigmaS),
                    identity_term(O, {h}));
    return compose(t, tensor(term_of(O, g_mul(g, identity_arrow(i))),
                             term_of(O, g_mul(identity_arrow(j), h))));
}

// rho_r(g,j) : H_g -> H_g (x) H_{1_j} =
//   (mul(g,1_i) (x) id) after (id (x) copair(i,j)), i = target(g).
inline Term rho_r(const Objs& O, Arrow g, int j) {
    int i = g.tgt;
    Term t = tensor(identity_term(O, {g}), term_of(O, g_copair(i, j)));
    return compose(t, tensor(term_of(O, g_mul(g, identity_arrow(i))),
                             identity_term(O, {identity_arrow(j)})));
}

// rho_l(h,i) : H_h -> H_{1_i} (x) H_h =
//   (id (x) mul(1_j,h)) after (copair(i,j) (x) id), j = source(h).
inline Term rho_l(const Objs& O, Arrow h, int i) {
    int j = h.src;
    Term t = tensor(term_of(O, g_copair(i, j)), identity_term(O, {h}));
    return compose(t, tensor(identity_term(O, {identity_arrow(i)}),
                             term_of(O, g_mul(identity_arrow(j), h))));
}

// ---- cusps --------------------------------------------------------------

// cusp_plus(g,h) : H_g (x) H_h -> H_h for g:(i,j), h:(j,i):
//   mul(h,gh) after (id (x) mul(g,h)) after (braid(g,h) (x) id)
//   after (id (x) comul(h)).
inline Term cusp_plus(const Objs& O, Arrow g, Arrow h) {
    if (g.src != h.tgt || g.tgt != h.src)
        throw TypeError("cusp requires opposite labels");
    Arrow gh{g.src, h.tgt};  // = 1_i
    Term t = tensor(identity_term(O, {g}), term_of(O, g_comul(h)));
    t = compose(t, tensor(term_of(O, g_braid(g, h)), identity_term(O, {h})));
    t = compose(t, tensor(identity_term(O, {h}), term_of(O, g_mul(g, h))));
    return compose(t, term_of(O, g_mul(h, gh)));
}

// cusp_minus(g,h) = cusp_plus after (id (x) ribbon(h)).
inline Term cusp_minus(const Objs& O, Arrow g, Arrow h) {
    Term t = tensor(identity_term(O, {g}), term_of(O, g_ribbon(h)));
    return compose(t, cusp_plus(O, g, h));
}

// ---- rotation and reversal ---------------------------------------------

// rot(F) for F : [g] ++ A' -> B' ++ [h]  gives  A' ++ [h] -> [g] ++ B':
//   (id_{[g] ++ B'} (x) form(h)) after (id_g (x) F (x) id_h)
//   after (coform(g) (x) id_{A' ++ [h]}).
inline Term rot(const Term& F) {
    ObjectWord src = F.src, tgt = target_of(F);
    if (src.empty() || tgt.empty())
        throw TypeError("rot needs nonempty source and target");
    Arrow g = src.front(), h = tgt.back();
    ObjectWord Ap(src.begin() + 1, src.end());
    ObjectWord Bp(tgt.begin(), tgt.end() - 1);
    const Objs& O = F.objects;
    ObjectWord in = Ap;
    in.push_back(h);
    Term t = tensor(coform(O, g), identity_term(O, in));
    t = compose(t, tensor(tensor(identity_term(O, {g}), F),
                          identity_term(O, {h})));
    ObjectWord keep{g};
    keep.insert(keep.end(), Bp.begin(), Bp.end());
    return compose(t, tensor(identity_term(O, keep), form(O, h)));
}

// V(A) : A -> reverse(A), the ribbon reversal word:
//   V(1) = id, V(H_g) = ribbon(g), V(A ++ B) = (V(B) (x) V(A)) after braid.
inline Term V_word(const Objs& O, const ObjectWord& A) {
    if (A.empty()) return identity_term(O, {});
    if (A.size() == 1) return term_of(O, g_ribbon(A[0]));
    ObjectWord head{A.front()};
    ObjectWord tail(A.begin() + 1, A.end());
    Term t = braid_word(O, head, tail);
    return compose(t, tensor(V_word(O, tail), V_word(O, head)));
}

// Inverse of V(A) : reverse(A) -> A.
inline Term V_word_inv(const Objs& O, const ObjectWord& A) {
    if (A.empty()) return identity_term(O, {});
    if (A.size() == 1) return term_of(O, g_ribboninv(A[0]));
    ObjectWord head{A.front()};
    ObjectWord tail(A.begin() + 1, A.end());
    Term t = tensor(V_word_inv(O, tail), V_word_inv(O, head));
    return compose(t, braid_word(O, tail, head, -1));
}

// rev(F) for F : A -> B gives reverse(A) -> reverse(B):
//   V(B) after F after V_inv(A).
inline Term rev(const Term& F) {
    ObjectWord src = F.src, tgt = target_of(F);
    const Objs& O = F.objects;
    return compose(compose(V_word_inv(O, src), F), V_word(O, tgt));
}

// ---- zeta / xi (label-reduction corrections) ----------------------------
//
// Throughout: x : i0 -> k0 and y : j0 -> k0 share their target; the
// correction wire carries y x^-1 : j0 -> i0.  A^x denotes the word A with
// both endpoints relabeled along x.

inline Arrow y_xbar(Arrow x, Arrow y) {
    if (x.tgt != y.tgt) throw TypeError("zeta: labels must share target");
    return Arrow{y.src, x.src};
}

inline ObjectWord word_relabel(const ObjectWord& A, const LabelMap& m) {
    ObjectWord out;
    out.reserve(A.size());
    for (const Arrow& a : A) out.push_back(m.apply(a));
    return out;
}

// zeta on a single wire: H_{yx^-1} (x) H_{g^x} -> H_{g^y}, by cases on
// which endpoints of g touch k0.
inline Term zeta_one(const Objs& O, Arrow x, Arrow y, Arrow g) {
    Arrow w = y_xbar(x, y);           // j0 -> i0
    Arrow wbar = w.inv();             // i0 -> j0
    int k0 = x.tgt;
    Arrow gx = LabelMap{x}.apply(g);
    const bool s = (g.src == k0), t = (g.tgt == k0);
    if (!s && !t)
        return tensor(term_of(O, g_counit(w)), identity_term(O, {gx}));
    if (s && !t) return term_of(O, g_mul(w, gx));
    if (!s && t) {
        Term r = term_of(O, g_braid(w, gx));
        r = compose(r, tensor(identity_term(O, {gx}),
                              term_of(O, g_antipode(w))));
        return compose(r, term_of(O, g_mul(gx, wbar)));
    }
    // both endpoints at k0
    Term r = tensor(term_of(O, g_comul(w)), identity_term(O, {gx}));
    r = compose(r, tensor(identity_term(O, {w}),
                          term_of(O, g_braid(w, gx))));
    r = compose(r, tensor(identity_term(O, {w, gx}),
                          term_of(O, g_antipode(w))));
    r = compose(r, tensor(identity_term(O, {w}),
                          term_of(O, g_mul(gx, wbar))));
    Arrow gxw{gx.src, wbar.tgt};
    return compose(r, term_of(O, g_mul(w, gxw)));
}

// zeta on a word: H_{yx^-1} (x) A^x -> A^y, inductively splitting off the
// last wire.
inline Term zeta(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    Arrow w = y_xbar(x, y);
    if (A.empty()) return term_of(O, g_counit(w));
    if (A.size() == 1) return zeta_one(O, x, y, A[0]);
    ObjectWord head(A.begin(), A.end() - 1);
    Arrow g = A.back();
    LabelMap mx{x};
    ObjectWord headx = word_relabel(head, mx);
    Arrow gx = mx.apply(g);
    // comul the correction wire, braid one copy past head^x, then apply the
    // two zetas side by side.
    ObjectWord rest = headx;
    rest.push_back(gx);
    Term r = tensor(term_of(O, g_comul(w)), identity_term(O, rest));
    r = compose(r, tensor(tensor(identity_term(O, {w}),
                                 braid_word(O, {w}, headx)),
                          identity_term(O, {gx})));
    return compose(r, tensor(zeta(O, x, y, head), zeta_one(O, x, y, g)));
}

// zeta_bar: A^x (x) H_{yx^-1} -> A^y, the correction wire entering from the
// right through an inverse braiding.
inline Term zeta_bar(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    Arrow w = y_xbar(x, y);
    ObjectWord Ax = word_relabel(A, LabelMap{x});
    Term r = braid_word(O, Ax, {w}, -1);
    return compose(r, zeta(O, x, y, A));
}

// xi : H_{yx^-1} (x) A^x -> H_{yx^-1} (x) A^y =
//   (id (x) zeta) after (comul (x) id).
inline Term xi(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    Arrow w = y_xbar(x, y);
    ObjectWord Ax = word_relabel(A, LabelMap{x});
    Term r = tensor(term_of(O, g_comul(w)), identity_term(O, Ax));
    return compose(r, tensor(identity_term(O, {w}), zeta(O, x, y, A)));
}

// xi_inv : H_{yx^-1} (x) A^y -> H_{yx^-1} (x) A^x =
//   (id (x) zeta^{y,x}) after (((id (x) antipode) after comul) (x) id).
inline Term xi_inv(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    Arrow w = y_xbar(x, y);
    ObjectWord Ay = word_relabel(A, LabelMap{y});
    Term half = compose(term_of(O, g_comul(w)),
                        tensor(identity_term(O, {w}),
                               term_of(O, g_antipode(w))));
    Term r = tensor(half, identity_term(O, Ay));
    return compose(r, tensor(identity_term(O, {w}), zeta(O, y, x, A)));
}

// xi_bar : A^x (x) H_{yx^-1} -> A^y (x) H_{yx^-1} =
//   (zeta_bar (x) id) after (id (x) comul).
inline Term xi_bar(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    Arrow w = y_xbar(x, y);
    ObjectWord Ax = word_relabel(A, LabelMap{x});
    Term r = tensor(identity_term(O, Ax), term_of(O, g_comul(w)));
    return compose(r, tensor(zeta_bar(O, x, y, A),
                             identity_term(O, {w})));
}

// xi_bar_inv : A^y (x) H_{yx^-1} -> A^x (x) H_{yx^-1} =
//   (zeta_bar^{y,x} (x) id) after (id (x) ((antipode_inv (x) id) after comul)).
inline Term xi_bar_inv(const Objs& O, Arrow x, Arrow y, const ObjectWord& A) {
    Arrow w = y_xbar(x, y);
    ObjectWord Ay = word_relabel(A, LabelMap{y});
    Term half = compose(term_of(O, g_comul(w)),
                        tensor(term_of(O, g_antipodeinv(w)),
                               identity_term(O, {w})));
    Term r = tensor(identity_term(O, Ay), half);
    return compose(r, tensor(zeta_bar(O, y, x, A),
                             identity_term(O, {w})));
}

}  // namespace hopfg

#endif  // HOPFG_MACRO_HPP
