#ifndef HOPFG_RULES_HPP
#define HOPFG_RULES_HPP

// The rewrite-rule catalog.  Each rule is an undirected relation between two
// term schemas whose arrows are built over object metavariables 0..nvars-1;
// instantiation substitutes concrete objects (collapsing is allowed unless a
// distinctness side condition forbids it).  Tiers:
//   core    — bialgebra/antipode/integral axioms and braid naturality
//   ribbon  — ribbon element and copairing axioms
//   derived — provable relations, shipped for search and certified
//             numerically exactly like the axioms
//   dstar/d — quotient relations (boundary moves), valid only in models of
//             the corresponding tier
// Also houses model certification (check_model) and the per-rule numeric
// soundness fuzz (check_rule_soundness).

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hopfg/eval.hpp"
#include "hopfg/macro.hpp"
#include "hopfg/term.hpp"

namespace hopfg {

enum class Tier { core, ribbon, derived, dstar, dquot };

inline const char* tier_name(Tier t) {
    switch (t) {
        case Tier::core: return "core";
        case Tier::ribbon: return "ribbon";
        case Tier::derived: return "derived";
        case Tier::dstar: return "dstar";
        case Tier::dquot: return "d";
    }
    return "?";
}

struct Rule {
    std::string id;
    Tier tier = Tier::core;
    int nvars = 0;
    std::vector<std::pair<int, int>> distinct;  // pairs of vars that must map
                                                // to different objects
    Term lhs, rhs;  // schemas over objects {0..nvars-1}
};

// Substitute objects for metavariables.  `assign[v]` is the object replacing
// variable v; the target groupoid is named by `objects`.
inline Term instantiate(const Term& schema, const std::vector<int>& assign,
                        const std::vector<int>& objects) {
    return map_objects(
        schema, objects, [&](int v) { return assign.at(static_cast<size_t>(v)); },
        /*allow_collapse=*/true);
}

inline bool assignment_admissible(const Rule& r,
                                  const std::vector<int>& assign) {
    for (auto [a, b] : r.distinct)
        if (assign.at(static_cast<size_t>(a)) ==
            assign.at(static_cast<size_t>(b)))
            return false;
    return true;
}

namespace rules_detail {

inline std::vector<int> vars(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

// Naturality of the braiding: any generator slides past an unrelated wire
// through a positive or negative crossing, from either side.
inline void add_naturality(std::vector<Rule>& db) {
    struct Base {
        const char* name;
        int extra_vars;  // vars used by the generator itself
        std::function<Gen(void)> make;
    };
    const Arrow g{0, 1}, h{1, 2};
    std::vector<Base> bases = {
        {"comul", 2, [=] { return g_comul(g); }},
        {"counit", 2, [=] { return g_counit(g); }},
        {"mul", 3, [=] { return g_mul(g, h); }},
        {"antipode", 2, [=] { return g_antipode(g); }},
        {"antipodeinv", 2, [=] { return g_antipodeinv(g); }},
        {"ribbon", 2, [=] { return g_ribbon(g); }},
        {"ribboninv", 2, [=] { return g_ribboninv(g); }},
        {"unit", 1, [] { return g_unit(0); }},
        {"cointegral", 1, [] { return g_cointegral(0); }},
        {"integral", 2, [=] { return g_integral(g); }},
        {"copair", 2, [] { return g_copair(0, 1); }},
    };
    for (const Base& b : bases) {
        Gen box = b.make();
        int nv = b.extra_vars + 2;
        Arrow c{b.extra_vars, b.extra_vars + 1};
        Objs O = vars(nv);
        ObjectWord in = gen_in(box), out = gen_out(box);
        Term F = term_of(O, box);
        Term idc = identity_term(O, {c});
        for (int sign : {+1, -1}) {
            const char* sn = sign > 0 ? "g" : "gi";
            // F on the left of c: slide F's output past c.
            Rule rl;
            rl.id = std::string("nat-") + sn + "-" + b.name + "-l";
            rl.tier = Tier::core;
            rl.nvars = nv;
            rl.lhs = compose(tensor(F, idc), braid_word(O, out, {c}, sign));
            rl.rhs = compose(braid_word(O, in, {c}, sign), tensor(idc, F));
            db.push_back(rl);
            // F on the right of c.
            Rule rr;
            rr.id = std::string("nat-") + sn + "-" + b.name + "-r";
            rr.tier = Tier::core;
            rr.nvars = nv;
            rr.lhs = compose(tensor(idc, F), braid_word(O, {c}, out, sign));
            rr.rhs = compose(braid_word(O, {c}, in, sign), tensor(F, idc));
            db.push_back(rr);
        }
    }
}

}  // namespace rules_detail

inline const std::vector<Rule>& rule_db() {
    static const std::vector<Rule> db = [] {
        using namespace rules_detail;
        std::vector<Rule> R;
        auto add = [&](std::string id, Tier tier, int nv,
                       std::vector<std::pair<int, int>> dist, Term lhs,
                       Term rhs) {
            R.push_back(Rule{std::move(id), tier, nv, std::move(dist),
                             std::move(lhs), std::move(rhs)});
        };
        const Arrow g{0, 1}, h{1, 2}, k{2, 3};
        const Arrow gb = g.inv(), hb = h.inv();
        const Arrow gh{0, 2}, hk{1, 3}, ghk{0, 3};
        auto O = [&](int n) { return vars(n); };
        auto one = [&](int n, Gen x) { return term_of(vars(n), x); };
        auto idw = [&](int n, ObjectWord w) {
            return identity_term(vars(n), std::move(w));
        };

        // ---- braid axioms -------------------------------------------------
        add("b2", Tier::core, 4, {},
            compose(one(4, g_braid(g, k)), one(4, g_braidinv(k, g))),
            idw(4, {g, k}));
        add("b2p", Tier::core, 4, {},
            compose(one(4, g_braidinv(g, k)), one(4, g_braid(k, g))),
            idw(4, {g, k}));
        add_naturality(R);

        // ---- bialgebra ----------------------------------------------------
        add("a1", Tier::core, 2, {},
            compose(one(2, g_comul(g)),
                    tensor(one(2, g_comul(g)), idw(2, {g}))),
            compose(one(2, g_comul(g)),
                    tensor(idw(2, {g}), one(2, g_comul(g)))));
        add("a2", Tier::core, 2, {},
            compose(one(2, g_comul(g)),
                    tensor(one(2, g_counit(g)), idw(2, {g}))),
            idw(2, {g}));
        add("a2p", Tier::core, 2, {},
            compose(one(2, g_comul(g)),
                    tensor(idw(2, {g}), one(2, g_counit(g)))),
            idw(2, {g}));
        add("a3", Tier::core, 4, {},
            compose(tensor(one(4, g_mul(g, h)), idw(4, {k})),
                    one(4, g_mul(gh, k))),
            compose(tensor(idw(4, {g}), one(4, g_mul(h, k))),
                    one(4, g_mul(g, hk))));
        add("a4", Tier::core, 2, {},
            compose(tensor(one(2, g_unit(0)), idw(2, {g})),
                    one(2, g_mul(identity_arrow(0), g))),
            idw(2, {g}));
        add("a4p", Tier::core, 2, {},
            compose(tensor(idw(2, {g}), one(2, g_unit(1))),
                    one(2, g_mul(g, identity_arrow(1)))),
            idw(2, {g}));
        add("a5", Tier::core, 3, {},
            compose(one(3, g_mul(g, h)), one(3, g_comul(gh))),
            compose(compose(tensor(one(3, g_comul(g)), one(3, g_comul(h))),
                            tensor(tensor(idw(3, {g}), one(3, g_braid(g, h))),
                                   idw(3, {h}))),
                    tensor(one(3, g_mul(g, h)), one(3, g_mul(g, h)))));
        add("a6", Tier::core, 3, {},
            compose(one(3, g_mul(g, h)), one(3, g_counit(gh))),
            tensor(one(3, g_counit(g)), one(3, g_counit(h))));
        add("a7", Tier::core, 1, {},
            compose(one(1, g_unit(0)), one(1, g_comul(identity_arrow(0)))),
            tensor(one(1, g_unit(0)), one(1, g_unit(0))));
        add("a8", Tier::core, 1, {},
            compose(one(1, g_unit(0)), one(1, g_counit(identity_arrow(0)))),
            idw(1, {}));

        // ---- antipode -----------------------------------------------------
        add("s1", Tier::core, 2, {},
            compose(compose(one(2, g_comul(g)),
                            tensor(one(2, g_antipode(g)), idw(2, {g}))),
                    one(2, g_mul(gb, g))),
            compose(one(2, g_counit(g)), one(2, g_unit(1))));
        add("s1p", Tier::core, 2, {},
            compose(compose(one(2, g_comul(g)),
                            tensor(idw(2, {g}), one(2, g_antipode(g)))),
                    one(2, g_mul(g, gb))),
            compose(one(2, g_counit(g)), one(2, g_unit(0))));
        add("s2", Tier::core, 2, {},
            compose(one(2, g_antipode(g)), one(2, g_antipodeinv(gb))),
            idw(2, {g}));
        add("s2p", Tier::core, 2, {},
            compose(one(2, g_antipodeinv(g)), one(2, g_antipode(gb))),
            idw(2, {g}));

        // ---- integrals ----------------------------------------------------
        const Arrow e0 = identity_arrow(0);
        add("i1", Tier::core, 1, {},
            compose(one(1, g_comul(e0)),
                    tensor(idw(1, {e0}), one(1, g_cointegral(0)))),
            compose(one(1, g_cointegral(0)), one(1, g_unit(0))));
        add("i2", Tier::core, 3, {},
            compose(tensor(one(3, g_integral(g)), idw(3, {h})),
                    one(3, g_mul(g, h))),
            compose(one(3, g_counit(h)), one(3, g_integral(gh))));
        add("i3", Tier::core, 1, {},
            compose(one(1, g_integral(e0)), one(1, g_cointegral(0))),
            idw(1, {}));
        add("i3p", Tier::core, 1, {},
            compose(compose(one(1, g_integral(e0)), one(1, g_antipode(e0))),
                    one(1, g_cointegral(0))),
            idw(1, {}));
        add("i4", Tier::core, 2, {},
            compose(one(2, g_integral(g)), one(2, g_antipode(g))),
            one(2, g_integral(gb)));
        add("i5", Tier::core, 1, {},
            compose(one(1, g_antipode(e0)), one(1, g_cointegral(0))),
            one(1, g_cointegral(0)));

        // ---- ribbon element ----------------------------------------------
        add("r1", Tier::ribbon, 2, {},
            compose(one(2, g_ribbon(g)), one(2, g_ribboninv(g))),
            idw(2, {g}));
        add("r1p", Tier::ribbon, 2, {},
            compose(one(2, g_ribboninv(g)), one(2, g_ribbon(g))),
            idw(2, {g}));
        add("r2", Tier::ribbon, 2, {},
            compose(one(2, g_ribbon(g)), one(2, g_counit(g))),
            one(2, g_counit(g)));
        add("r3", Tier::ribbon, 2, {},
            compose(one(2, g_integral(g)), one(2, g_ribbon(g))),
            one(2, g_integral(g)));
        add("r4", Tier::ribbon, 2, {},
            compose(one(2, g_ribbon(g)), one(2, g_antipode(g))),
            compose(one(2, g_antipode(g)), one(2, g_ribbon(gb))));
        add("r5", Tier::ribbon, 3, {},
            compose(tensor(one(3, g_ribbon(g)), idw(3, {h})),
                    one(3, g_mul(g, h))),
            compose(one(3, g_mul(g, h)), one(3, g_ribbon(gh))));
        add("r5p", Tier::ribbon, 3, {},
            compose(tensor(idw(3, {g}), one(3, g_ribbon(h))),
                    one(3, g_mul(g, h))),
            compose(one(3, g_mul(g, h)), one(3, g_ribbon(gh))));
        add("b3", Tier::ribbon, 4, {},
            compose(tensor(idw(4, {g}), one(4, g_ribbon(k))),
                    one(4, g_braid(g, k))),
            compose(one(4, g_braid(g, k)),
                    tensor(one(4, g_ribbon(k)), idw(4, {g}))));
        add("b4", Tier::ribbon, 4, {},
            compose(tensor(idw(4, {g}), one(4, g_ribbon(k))),
                    one(4, g_braidinv(g, k))),
            compose(one(4, g_braidinv(g, k)),
                    tensor(one(4, g_ribbon(k)), idw(4, {g}))));

        // ---- copairing ----------------------------------------------------
        {
            // r6: the scalar copairing expands through the ribbon element.
            Term rhs = compose(one(1, g_unit(0)), one(1, g_ribbon(e0)));
            rhs = compose(rhs, one(1, g_comul(e0)));
            Term leg2 = compose(one(1, g_antipode(e0)),
                                one(1, g_ribboninv(e0)));
            rhs = compose(rhs, tensor(one(1, g_ribboninv(e0)), leg2));
            add("r6", Tier::ribbon, 1, {}, one(1, g_copair(0, 0)), rhs);
        }
        add("r7", Tier::ribbon, 2, {{0, 1}}, one(2, g_copair(0, 1)),
            tensor(one(2, g_unit(0)), one(2, g_unit(1))));
        {
            const Arrow e1 = identity_arrow(1);
            Term sig = one(2, g_copair(0, 1));
            add("r8", Tier::ribbon, 2, {},
                compose(sig, tensor(one(2, g_comul(e0)), idw(2, {e1}))),
                compose(compose(sig, tensor(idw(2, {e0}),
                                            tensor(sig, idw(2, {e1})))),
                        tensor(idw(2, {e0, e0}), one(2, g_mul(e1, e1)))));
            add("r8p", Tier::ribbon, 2, {},
                compose(sig, tensor(idw(2, {e0}), one(2, g_comul(e1)))),
                compose(compose(sig, tensor(tensor(idw(2, {e0}), sig),
                                            idw(2, {e1}))),
                        tensor(one(2, g_mul(e0, e0)), idw(2, {e1, e1}))));
            add("r9", Tier::ribbon, 2, {},
                compose(sig, tensor(one(2, g_counit(e0)), idw(2, {e1}))),
                one(2, g_unit(1)));
            add("r9p", Tier::ribbon, 2, {},
                compose(sig, tensor(idw(2, {e0}), one(2, g_counit(e1)))),
                one(2, g_unit(0)));
        }
        add("r10", Tier::ribbon, 2, {},
            compose(one(2, g_ribboninv(g)), one(2, g_comul(g))),
            compose(compose(compose(one(2, g_comul(g)),
                                    one(2, g_braidinv(g, g))),
                            tensor(one(2, g_ribboninv(g)),
                                   one(2, g_ribboninv(g)))),
                    mu(O(2), g, g)));
        {
            // r11: the braiding expands through copairing corrections.
            // g:(0,1), h:(2,3); correction objects i = tgt(g), j = src(h).
            Objs V = O(4);
            const Arrow e1 = identity_arrow(1), e2 = identity_arrow(2);
            Term mid = compose(compose(mu(V, g, k), one(4, g_braidinv(g, k))),
                               mu(V, k, g));
            Term lhs = tensor(rho_l(V, g, 2), rho_r(V, k, 1));
            lhs = compose(
                lhs, tensor(tensor(one(4, g_antipode(e2)), mid),
                            one(4, g_antipode(e1))));
            lhs = compose(lhs, tensor(one(4, g_mul(e2, k)),
                                      one(4, g_mul(g, e1))));
            add("r11", Tier::ribbon, 4, {}, lhs, one(4, g_braid(g, k)));
        }

        // ---- derived: antipode properties ---------------------------------
        add("s3", Tier::derived, 2, {},
            compose(one(2, g_antipode(g)), one(2, g_comul(gb))),
            compose(compose(one(2, g_comul(g)), one(2, g_braid(g, g))),
                    tensor(one(2, g_antipode(g)), one(2, g_antipode(g)))));
        add("s3b", Tier::derived, 2, {},
            compose(one(2, g_antipodeinv(g)), one(2, g_comul(gb))),
            compose(compose(one(2, g_comul(g)), one(2, g_braid(g, g))),
                    tensor(one(2, g_antipodeinv(g)),
                           one(2, g_antipodeinv(g)))));
        add("s4", Tier::derived, 3, {},
            compose(one(3, g_mul(g, h)), one(3, g_antipode(gh))),
            compose(compose(one(3, g_braid(g, h)),
                            tensor(one(3, g_antipode(h)),
                                   one(3, g_antipode(g)))),
                    one(3, g_mul(hb, gb))));
        add("s4b", Tier::derived, 3, {},
            compose(one(3, g_mul(g, h)), one(3, g_antipodeinv(gh))),
            compose(compose(one(3, g_braid(g, h)),
                            tensor(one(3, g_antipodeinv(h)),
                                   one(3, g_antipodeinv(g)))),
                    one(3, g_mul(hb, gb))));
        add("s5", Tier::derived, 1, {},
            compose(one(1, g_unit(0)), one(1, g_antipode(e0))),
            one(1, g_unit(0)));
        add("s6", Tier::derived, 2, {},
            compose(one(2, g_antipode(g)), one(2, g_counit(gb))),
            one(2, g_counit(g)));
        add("i1p", Tier::derived, 1, {},
            compose(compose(one(1, g_comul(e0)),
                            tensor(one(1, g_antipode(e0)), idw(1, {e0}))),
                    tensor(one(1, g_cointegral(0)), idw(1, {e0}))),
            compose(compose(one(1, g_antipode(e0)), one(1, g_cointegral(0))),
                    one(1, g_unit(0))));
        add("i2p", Tier::derived, 3, {},
            compose(tensor(idw(3, {g}), one(3, g_integral(h))),
                    one(3, g_mul(g, h))),
            compose(one(3, g_counit(g)), one(3, g_integral(gh))));

        // ---- derived: pairing ---------------------------------------------
        add("f1", Tier::derived, 1, {},
            compose(compose(one(1, g_integral(e0)), one(1, g_comul(e0))),
                    tensor(idw(1, {e0}), one(1, g_cointegral(0)))),
            one(1, g_unit(0)));
        add("f2", Tier::derived, 1, {},
            compose(tensor(one(1, g_unit(0)), idw(1, {e0})), form(O(1), e0)),
            one(1, g_cointegral(0)));
        add("f3", Tier::derived, 2, {},
            compose(tensor(idw(2, {g}), coform(O(2), g)),
                    tensor(form(O(2), g), idw(2, {g}))),
            idw(2, {g}));
        add("f3p", Tier::derived, 2, {},
            compose(tensor(coform(O(2), g), idw(2, {g})),
                    tensor(idw(2, {g}), form(O(2), g))),
            idw(2, {g}));
        add("f4", Tier::derived, 2, {}, rot(one(2, g_comul(g))),
            one(2, g_comul(g)));
        add("f5", Tier::derived, 3, {}, rot(one(3, g_mul(g, h))),
            compose(compose(tensor(idw(3, {h}), one(3, g_antipode(gh))),
                            one(3, g_mul(h, gh.inv()))),
                    one(3, g_antipodeinv(gb))));
        {
            Term theta = compose(one(2, g_antipode(g)),
                                 one(2, g_antipodeinv(gb)));
            add("f6", Tier::derived, 2, {},
                compose(compose(tensor(coform(O(2), g), idw(2, {g})),
                                tensor(idw(2, {g}), one(2, g_braid(g, g)))),
                        tensor(form(O(2), g), idw(2, {g}))),
                theta);
        }
        {
            // f6p: the twist is monoidal up to braid conjugation.
            Objs V = O(4);
            Term lhs = twist(V, {g, k});
            Term rhs = tensor(twist(V, {g}), twist(V, {k}));
            rhs = compose(rhs, one(4, g_braid(g, k)));
            rhs = compose(rhs, one(4, g_braid(k, g)));
            add("f6p", Tier::derived, 4, {}, lhs, rhs);
        }
        add("f7", Tier::derived, 2, {},
            compose(coform(O(2), gb),
                    tensor(idw(2, {gb}), one(2, g_antipode(gb)))),
            compose(coform(O(2), g),
                    tensor(one(2, g_antipode(g)), idw(2, {g}))));
        add("f8", Tier::derived, 2, {},
            compose(tensor(one(2, g_antipode(gb)), idw(2, {g})),
                    form(O(2), g)),
            compose(tensor(idw(2, {gb}), one(2, g_antipode(g))),
                    form(O(2), gb)));

        // ---- derived: copairing slides ------------------------------------
        {
            const Arrow e1 = identity_arrow(1);
            add("p1", Tier::derived, 2, {},
                compose(one(2, g_copair(0, 1)),
                        tensor(one(2, g_antipode(e0)), idw(2, {e1}))),
                compose(one(2, g_copair(0, 1)),
                        tensor(idw(2, {e0}), one(2, g_antipode(e1)))));
            Term S2i = compose(one(2, g_antipode(e0)),
                               one(2, g_antipode(e0)));
            Term S2j = compose(one(2, g_antipode(e1)),
                               one(2, g_antipode(e1)));
            add("p4", Tier::derived, 2, {},
                compose(one(2, g_copair(0, 1)), tensor(S2i, idw(2, {e1}))),
                compose(one(2, g_copair(0, 1)), tensor(idw(2, {e0}), S2j)));
        }
        add("p2", Tier::derived, 3, {},
            compose(mu(O(3), g, h), mu_inv(O(3), g, h)), idw(3, {g, h}));
        add("p2p", Tier::derived, 3, {},
            compose(mu_inv(O(3), g, h), mu(O(3), g, h)), idw(3, {g, h}));
        {
            Term theta = compose(one(2, g_antipode(g)),
                                 one(2, g_antipodeinv(gb)));
            Term thetabar = compose(one(2, g_antipodeinv(g)),
                                    one(2, g_antipode(gb)));
            add("p3", Tier::derived, 2, {},
                compose(coform(O(2), g), tensor(theta, idw(2, {g}))),
                compose(coform(O(2), g), tensor(idw(2, {g}), theta)));
            add("p3p", Tier::derived, 2, {},
                compose(tensor(theta, idw(2, {g})), form(O(2), g)),
                compose(tensor(idw(2, {g}), theta), form(O(2), g)));
            add("p5", Tier::derived, 2, {},
                compose(coform(O(2), g), one(2, g_braid(g, g))),
                compose(coform(O(2), g), tensor(theta, idw(2, {g}))));
            add("p5p", Tier::derived, 2, {},
                compose(one(2, g_braid(g, g)), form(O(2), g)),
                compose(tensor(theta, idw(2, {g})), form(O(2), g)));
            add("p6", Tier::derived, 2, {},
                compose(coform(O(2), g), one(2, g_braidinv(g, g))),
                compose(coform(O(2), g), tensor(thetabar, idw(2, {g}))));
            add("p7", Tier::derived, 2, {},
                compose(one(2, g_braidinv(g, g)), form(O(2), g)),
                compose(tensor(thetabar, idw(2, {g})), form(O(2), g)));
        }
        add("p8", Tier::derived, 2, {{0, 1}}, one(2, g_antipode(g)),
            compose(compose(one(2, g_ribbon(g)), one(2, g_ribbon(g))),
                    one(2, g_antipodeinv(g))));
        add("p9", Tier::derived, 2, {},
            compose(coform(O(2), g), tensor(one(2, g_ribbon(g)), idw(2, {g}))),
            compose(coform(O(2), g),
                    tensor(idw(2, {g}), one(2, g_ribbon(g)))));
        add("p10", Tier::derived, 2, {},
            compose(tensor(one(2, g_ribbon(g)), idw(2, {g})), form(O(2), g)),
            compose(tensor(idw(2, {g}), one(2, g_ribbon(g))), form(O(2), g)));
        add("p11", Tier::derived, 2, {},
            compose(compose(coform(O(2), g), one(2, g_braid(g, g))),
                    tensor(one(2, g_antipode(g)), one(2, g_antipode(g)))),
            coform(O(2), gb));
        add("p12", Tier::derived, 2, {},
            compose(compose(one(2, g_braid(g, g)),
                            tensor(one(2, g_antipode(g)),
                                   one(2, g_antipode(g)))),
                    form(O(2), gb)),
            form(O(2), g));

        // ---- derived: T-arc -----------------------------------------------
        add("t1", Tier::derived, 2, {{0, 1}},
            compose(one(2, g_ribboninv(g)), one(2, g_antipode(g))),
            compose(one(2, g_ribbon(g)), one(2, g_antipodeinv(g))));
        add("t2", Tier::derived, 2, {{0, 1}},
            compose(one(2, g_antipode(g)), one(2, g_ribboninv(gb))),
            compose(one(2, g_antipodeinv(g)), one(2, g_ribbon(gb))));
        add("t3", Tier::derived, 2, {{0, 1}},
            compose(T_arc(O(2), g), T_arc(O(2), gb)), idw(2, {g}));
        add("t4", Tier::derived, 2, {{0, 1}},
            compose(compose(T_arc(O(2), g), one(2, g_comul(gb))),
                    tensor(T_arc(O(2), gb), T_arc(O(2), gb))),
            one(2, g_comul(g)));
        add("t5", Tier::derived, 2, {}, rev(one(2, g_comul(g))),
            one(2, g_comul(g)));
        add("t6", Tier::derived, 3, {{0, 1}, {1, 2}, {0, 2}},
            rot(one(3, g_mul(g, h))),
            compose(compose(tensor(idw(3, {h}), T_arc(O(3), gh)),
                            one(3, g_mul(h, gh.inv()))),
                    T_arc(O(3), gb)));
        add("t7", Tier::derived, 3, {{0, 1}, {1, 2}, {0, 2}},
            rev(one(3, g_mul(g, h))),
            compose(compose(tensor(T_arc(O(3), h), T_arc(O(3), g)),
                            one(3, g_mul(hb, gb))),
                    T_arc(O(3), gh.inv())));
        add("t8", Tier::derived, 2, {{0, 1}},
            compose(tensor(idw(2, {g}), one(2, g_ribbon(gb))),
                    cusp_plus(O(2), g, gb)),
            cusp_minus(O(2), g, gb));
        add("t9", Tier::derived, 2, {{0, 1}}, cusp_plus(O(2), g, gb),
            compose(compose(tensor(T_arc(O(2), g), T_arc(O(2), gb)),
                            cusp_plus(O(2), gb, g)),
                    T_arc(O(2), g)));

        // ---- derived: reduction corrections --------------------------------
        {
            // q4 cases: with x = y the zeta correction absorbs a unit.
            // x : 0 -> 1 (i0 = 0, k0 = 1).
            const Arrow x{0, 1};
            auto q4rule = [&](const char* id, int nv, Arrow garrow,
                              std::vector<std::pair<int, int>> dist) {
                Objs V = vars(nv);
                Arrow gx = LabelMap{x}.apply(garrow);
                Term z = zeta_one(V, x, x, garrow);
                Term lhs = compose(
                    tensor(term_of(V, g_unit(0)), identity_term(V, {gx})), z);
                add(id, Tier::derived, nv, std::move(dist), lhs,
                    identity_term(V, {gx}));
            };
            q4rule("q4a", 4, Arrow{2, 3}, {{0, 1}, {2, 1}, {3, 1}});
            q4rule("q4b", 3, Arrow{1, 2}, {{0, 1}, {2, 1}});
            q4rule("q4c", 3, Arrow{2, 1}, {{0, 1}, {2, 1}});
            q4rule("q4d", 2, Arrow{1, 1}, {{0, 1}});
            // q5 coherence: for a word of away-labels the correction is a
            // plain counit.
            {
                Objs V = vars(4);
                const Arrow a{2, 3}, b{3, 2};
                Term lhs = zeta(V, x, x, {a, b});
                Term rhs = tensor(term_of(V, g_counit(identity_arrow(0))),
                                  identity_term(V, {a, b}));
                add("q5", Tier::derived, 4, {{0, 1}, {2, 1}, {3, 1}}, lhs,
                    rhs);
            }
            // q6 module law, away and at-k0 instances:
            // zeta^{y,z} after (id (x) zeta^{x,y}) = zeta^{x,z} after (m (x) id)
            // with all of x,y,z sharing target k0; instance x=y=z.
            auto q6rule = [&](const char* id, int nv, Arrow garrow,
                              std::vector<std::pair<int, int>> dist) {
                Objs V = vars(nv);
                Arrow gx = LabelMap{x}.apply(garrow);
                const Arrow w = identity_arrow(0);
                Term lhs = compose(
                    tensor(identity_term(V, {w}), zeta_one(V, x, x, garrow)),
                    zeta_one(V, x, x, garrow));
                Term rhs = compose(
                    tensor(term_of(V, g_mul(w, w)), identity_term(V, {gx})),
                    zeta_one(V, x, x, garrow));
                add(id, Tier::derived, nv, std::move(dist), lhs, rhs);
            };
            q6rule("q6a", 4, Arrow{2, 3}, {{0, 1}, {2, 1}, {3, 1}});
            q6rule("q6b", 2, Arrow{1, 1}, {{0, 1}});
        }
        add("r10p", Tier::derived, 2, {},
            compose(compose(compose(compose(one(2, g_ribboninv(g)),
                                            one(2, g_comul(g))),
                                    mu_inv(O(2), g, g)),
                            tensor(one(2, g_ribbon(g)), one(2, g_ribbon(g)))),
                    one(2, g_braid(g, g))),
            one(2, g_comul(g)));
        add("r12", Tier::derived, 2, {{0, 1}},
            compose(one(2, g_comul(g)), mu_inv(O(2), g, g)),
            compose(compose(T_arc(O(2), g), one(2, g_comul(gb))),
                    tensor(T_arc(O(2), gb), T_arc(O(2), gb))));
        add("cc", Tier::derived, 4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}},
            one(4, g_braid(g, k)), one(4, g_braidinv(g, k)));
        add("u1", Tier::derived, 2, {},
            compose(tensor(one(2, g_integral(g)), idw(2, {g})),
                    form(O(2), g)),
            one(2, g_counit(g)));

        // ---- quotient -----------------------------------------------------
        add("d1", Tier::dstar, 1, {},
            compose(one(1, g_copair(0, 0)),
                    tensor(one(1, g_cointegral(0)), idw(1, {e0}))),
            one(1, g_integral(e0)));
        add("d1p", Tier::dstar, 1, {},
            compose(one(1, g_copair(0, 0)),
                    tensor(idw(1, {e0}), one(1, g_cointegral(0)))),
            one(1, g_integral(e0)));
        add("d2", Tier::dquot, 1, {},
            compose(compose(one(1, g_unit(0)), one(1, g_ribbon(e0))),
                    one(1, g_cointegral(0))),
            idw(1, {}));
        add("d2p", Tier::dquot, 1, {},
            compose(compose(one(1, g_unit(0)), one(1, g_ribboninv(e0))),
                    one(1, g_cointegral(0))),
            idw(1, {}));
        add("d3", Tier::dstar, 1, {},
            compose(one(1, g_copair(0, 0)),
                    tensor(one(1, g_cointegral(0)), one(1, g_cointegral(0)))),
            idw(1, {}));
        add("d4", Tier::dstar, 1, {},
            compose(one(1, g_copair(0, 0)), form(O(1), e0)), idw(1, {}));
        add("d5", Tier::dstar, 1, {},
            compose(tensor(one(1, g_copair(0, 0)), idw(1, {e0})),
                    tensor(idw(1, {e0}), form(O(1), e0))),
            idw(1, {e0}));

        // Normalize all schemas to canonical circuit form.
        for (Rule& r : R) {
            r.lhs = normalize_exchange(r.lhs);
            r.rhs = normalize_exchange(r.rhs);
        }
        return R;
    }();
    return db;
}

inline const Rule& rule_by_id(const std::string& id) {
    for (const Rule& r : rule_db())
        if (r.id == id) return r;
    throw std::invalid_argument("unknown rule id: " + id);
}

// ---- certification ------------------------------------------------------

struct CheckEntry {
    std::string id;
    bool pass = false;
    std::string witness;  // on failure: input/output index tuple
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

namespace rules_detail {

// Full matrix under label-oblivious evaluation (all metavariables collapsed
// to the single object 1, matching the one-object evaluation semantics).
inline std::map<std::pair<long long, long long>, Frac> schema_matrix(
    const Term& schema, int nvars, const HopfModel& M) {
    std::vector<int> assign(static_cast<size_t>(nvars), 1);
    Term t = instantiate(schema, assign, {1});
    std::map<std::pair<long long, long long>, Frac> out;
    long long din = 1;
    for (size_t i = 0; i < t.src.size(); ++i) din *= M.d;
    std::vector<int> in(t.src.size());
    for (long long a = 0; a < din; ++a) {
        long long r = a;
        for (size_t i = 0; i < in.size(); ++i) {
            in[in.size() - 1 - i] = static_cast<int>(r % M.d);
            r /= M.d;
        }
        for (const auto& [k, v] : eval_state(t, M, in)) out[{a, k}] = v;
    }
    return out;
}

}  // namespace rules_detail

// Evaluate every axiom of the requested tier (cumulatively: ribbon includes
// core, dstar adds the selfduality relations, d adds the sphere relations)
// as an exact tensor identity over the one-object groupoid.
inline CheckReport check_model(const HopfModel& M, Tier tier) {
    CheckReport rep;
    auto included = [&](Tier t) {
        switch (tier) {
            case Tier::core: return t == Tier::core;
            case Tier::ribbon:
            case Tier::derived:
                return t == Tier::core || t == Tier::ribbon;
            case Tier::dstar:
                return t == Tier::core || t == Tier::ribbon ||
                       t == Tier::dstar;
            case Tier::dquot: return t != Tier::derived;
        }
        return false;
    };
    for (const Rule& r : rule_db()) {
        if (!included(r.tier)) continue;
        CheckEntry e;
        e.id = r.id;
        auto L = rules_detail::schema_matrix(r.lhs, r.nvars, M);
        auto R = rules_detail::schema_matrix(r.rhs, r.nvars, M);
        e.pass = (L == R);
        if (!e.pass) {
            // Report the first differing entry.
            for (const auto& [k, v] : L) {
                auto it = R.find(k);
                if (it == R.end() || !(it->second == v)) {
                    e.witness = "entry (" + std::to_string(k.first) + "," +
                                std::to_string(k.second) + ")";
                    break;
                }
            }
            if (e.witness.empty())
                for (const auto& [k, v] : R)
                    if (!L.count(k)) {
                        e.witness = "entry (" + std::to_string(k.first) +
                                    "," + std::to_string(k.second) + ")";
                        break;
                    }
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// Numeric soundness fuzz for one rule: instantiate over the one-object
// groupoid and compare both sides on random basis inputs embedded in random
// identity-wire contexts.
inline CheckEntry check_rule_soundness(const Rule& r, const HopfModel& M,
                                       int samples, unsigned seed = 12345) {
    CheckEntry e;
    e.id = r.id;
    std::vector<int> assign(static_cast<size_t>(r.nvars), 1);
    Term lhs = instantiate(r.lhs, assign, {1});
    Term rhs = instantiate(r.rhs, assign, {1});
    std::mt19937 rng(seed);
    const Arrow g11{1, 1};
    for (int s = 0; s < samples; ++s) {
        // Random context: pad both sides with the same number of extra
        // identity wires on each flank, then feed one random basis vector.
        size_t padl = rng() % 2, padr = rng() % 2;
        Term L = lhs, R = rhs;
        if (padl) {
            L = tensor(identity_term({1}, {g11}), L);
            R = tensor(identity_term({1}, {g11}), R);
        }
        if (padr) {
            L = tensor(L, identity_term({1}, {g11}));
            R = tensor(R, identity_term({1}, {g11}));
        }
        std::vector<int> in(L.src.size());
        for (int& i : in) i = static_cast<int>(rng() % M.d);
        State sl = eval_state(L, M, in);
        State sr = eval_state(R, M, in);
        auto norm = [](State st) {
            std::map<long long, Frac> m;
            for (auto& [k, v] : st)
                if (!v.is_zero()) m[k] = v;
            return m;
        };
        if (norm(sl) != norm(sr)) {
            e.pass = false;
            std::string w = "input";
            for (int i : in) w += " " + std::to_string(i);
            e.witness = w;
            return e;
        }
    }
    e.pass = true;
    return e;
}

}  // namespace hopfg

#endif  // HOPFG_RULES_HPP
