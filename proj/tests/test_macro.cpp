// Macro expansions: every builder produces a well-typed term with the
// documented boundary, and the expected identities hold numerically in the
// group model (whose structure constants are label-independent, so open
// multi-label terms can be compared entrywise).

#include <catch2/catch_amalgamated.hpp>

#include "hopfg/eval.hpp"
#include "hopfg/macro.hpp"

using namespace hopfg;

namespace {

const std::vector<int> O4 = {1, 2, 3, 4};

// Full matrix of a term under label-oblivious evaluation.
std::map<std::pair<long long, long long>, Frac> matrix_of(const Term& t,
                                                          const HopfModel& M) {
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

void require_same_map(const Term& a, const Term& b, const HopfModel& M) {
    REQUIRE(a.src.size() == b.src.size());
    REQUIRE(target_of(a).size() == target_of(b).size());
    REQUIRE(matrix_of(a, M) == matrix_of(b, M));
}

}  // namespace

TEST_CASE("macro boundaries over all labels") {
    GroupoidSpec G(O4);
    for (const Arrow& g : G.arrows()) {
        REQUIRE(typecheck(form(O4, g)) ==
                std::make_pair(ObjectWord{g, g}, ObjectWord{}));
        REQUIRE(typecheck(coform(O4, g)) ==
                std::make_pair(ObjectWord{}, ObjectWord{g, g}));
        ObjectWord A{g, g.inv(), Arrow{g.tgt, g.tgt}};
        REQUIRE(typecheck(twist(O4, A)) == std::make_pair(A, A));
        if (!g.is_identity())
            REQUIRE(typecheck(T_arc(O4, g)) ==
                    std::make_pair(ObjectWord{g}, ObjectWord{g.inv()}));
        for (const Arrow& h : G.arrows()) {
            ObjectWord AB{g, h};
            ObjectWord BA{h, g};
            REQUIRE(typecheck(braid_word(O4, {g}, {h})) ==
                    std::make_pair(AB, BA));
            REQUIRE(typecheck(mu(O4, g, h)) == std::make_pair(AB, AB));
            REQUIRE(typecheck(mu_inv(O4, g, h)) == std::make_pair(AB, AB));
            if (g.src == h.tgt && g.tgt == h.src)
                REQUIRE(typecheck(cusp_plus(O4, g, h)) ==
                        std::make_pair(AB, ObjectWord{h}));
        }
        for (int j : O4) {
            REQUIRE(typecheck(rho_r(O4, g, j)) ==
                    std::make_pair(ObjectWord{g},
                                   ObjectWord{g, identity_arrow(j)}));
            REQUIRE(typecheck(rho_l(O4, g, j)) ==
                    std::make_pair(ObjectWord{g},
                                   ObjectWord{identity_arrow(j), g}));
        }
    }
}

TEST_CASE("rot boundary and double application") {
    Arrow g{1, 2}, h{2, 3};
    Term m = term_of(O4, g_mul(g, h));
    Term r = rot(m);
    REQUIRE(typecheck(r) ==
            std::make_pair(ObjectWord{h, Arrow{1, 3}}, ObjectWord{g}));
}

TEST_CASE("zeta and xi boundaries for all endpoint cases") {
    // x : 1 -> 3, y : 2 -> 3; correction wire (2,1).
    Arrow x{1, 3}, y{2, 3};
    Arrow w{2, 1};
    LabelMap mx{x}, my{y};
    GroupoidSpec G(O4);
    for (const Arrow& g : G.arrows()) {
        ObjectWord A{g};
        ObjectWord Ax{mx.apply(g)}, Ay{my.apply(g)};
        ObjectWord zin{w};
        zin.insert(zin.end(), Ax.begin(), Ax.end());
        REQUIRE(typecheck(zeta(O4, x, y, A)) == std::make_pair(zin, Ay));
        ObjectWord xin{w};
        xin.insert(xin.end(), Ax.begin(), Ax.end());
        ObjectWord xout{w};
        xout.insert(xout.end(), Ay.begin(), Ay.end());
        REQUIRE(typecheck(xi(O4, x, y, A)) == std::make_pair(xin, xout));
        REQUIRE(typecheck(xi_inv(O4, x, y, A)) == std::make_pair(xout, xin));
        ObjectWord bin = Ax;
        bin.push_back(w);
        ObjectWord bout = Ay;
        bout.push_back(w);
        REQUIRE(typecheck(xi_bar(O4, x, y, A)) == std::make_pair(bin, bout));
        REQUIRE(typecheck(xi_bar_inv(O4, x, y, A)) ==
                std::make_pair(bout, bin));
    }
    // A longer word mixing the cases.
    ObjectWord A{Arrow{3, 3}, Arrow{1, 3}, Arrow{3, 2}, Arrow{2, 2}};
    REQUIRE_NOTHROW(typecheck(zeta(O4, x, y, A)));
    REQUIRE_NOTHROW(typecheck(xi(O4, x, y, A)));
    REQUIRE_NOTHROW(typecheck(xi_inv(O4, x, y, A)));
}

TEST_CASE("numeric identities in the group model") {
    HopfModel M = builtin_group_model(3);
    Arrow g{1, 2}, h{2, 3};

    SECTION("mu and mu_inv are mutually inverse") {
        Term a = compose(mu(O4, g, h), mu_inv(O4, g, h));
        Term b = compose(mu_inv(O4, g, h), mu(O4, g, h));
        Term idw = identity_term(O4, {g, h});
        require_same_map(a, idw, M);
        require_same_map(b, idw, M);
    }

    SECTION("T composed with its inverse is the identity") {
        Term a = compose(T_arc(O4, g), T_arc_inv(O4, g));
        require_same_map(a, identity_term(O4, {g}), M);
        Term b = compose(T_arc_inv(O4, g), T_arc(O4, g));
        require_same_map(b, identity_term(O4, {g.inv()}), M);
    }

    SECTION("rotation fixes comul") {
        Term d = term_of(O4, g_comul(g));
        require_same_map(rot(d), d, M);
    }

    SECTION("reversal fixes comul") {
        Term d = term_of(O4, g_comul(g));
        require_same_map(rev(d), d, M);
    }

    SECTION("twist is trivial in the symmetric group model") {
        ObjectWord A{g, h};
        require_same_map(twist(O4, A), identity_term(O4, A), M);
    }

    SECTION("V word and its inverse cancel") {
        ObjectWord A{g, h, Arrow{3, 1}};
        ObjectWord R{Arrow{3, 1}, h, g};
        Term a = compose(V_word(O4, A), V_word_inv(O4, A));
        require_same_map(a, identity_term(O4, A), M);
        Term b = compose(V_word_inv(O4, A), V_word(O4, A));
        require_same_map(b, identity_term(O4, R), M);
    }

    SECTION("xi composed with xi_inv is the identity") {
        Arrow x{1, 3}, y{2, 3};
        for (const ObjectWord& A :
             {ObjectWord{Arrow{3, 3}}, ObjectWord{Arrow{1, 3}},
              ObjectWord{Arrow{3, 2}}, ObjectWord{Arrow{2, 1}},
              ObjectWord{Arrow{3, 3}, Arrow{1, 3}},
              ObjectWord{Arrow{2, 3}, Arrow{3, 1}}}) {
            Term fwd = xi(O4, x, y, A);
            Term bwd = xi_inv(O4, x, y, A);
            require_same_map(compose(fwd, bwd),
                             identity_term(O4, fwd.src), M);
            require_same_map(compose(bwd, fwd),
                             identity_term(O4, bwd.src), M);
        }
    }

    SECTION("xi_bar composed with xi_bar_inv is the identity") {
        Arrow x{1, 3}, y{2, 3};
        ObjectWord A{Arrow{3, 3}, Arrow{3, 2}};
        Term fwd = xi_bar(O4, x, y, A);
        Term bwd = xi_bar_inv(O4, x, y, A);
        require_same_map(compose(fwd, bwd), identity_term(O4, fwd.src), M);
        require_same_map(compose(bwd, fwd), identity_term(O4, bwd.src), M);
    }

    SECTION("cusps differ by a ribbon insertion") {
        Arrow a{1, 2}, b{2, 1};
        Term lhs = cusp_minus(O4, a, b);
        Term rhs = compose(
            tensor(identity_term(O4, {a}), term_of(O4, g_ribbon(b))),
            cusp_plus(O4, a, b));
        require_same_map(lhs, rhs, M);
    }
}
