// Frozen scalar values for the reference (brute-force) evaluator against the
// built-in group models.  These values are pinned by hand computation and
// certify every later evaluator and the invariant pipeline against drift.

#include <catch2/catch_amalgamated.hpp>

#include "hopfg/oracle.hpp"

using namespace hopfg;

namespace {

const std::vector<int> G1 = {1};
const Arrow g11{1, 1};

Term t_of(const Gen& g) { return term_of(G1, g); }

// coevaluation 1 -> H (x) H : comul after integral
Term coform() { return compose(t_of(g_integral(g11)), t_of(g_comul(g11))); }

// evaluation H (x) H -> 1 : cointegral after mul after (id (x) antipode)
Term form() {
    Term step1 = tensor(identity_term(G1, {g11}), t_of(g_antipode(g11)));
    return compose(compose(step1, t_of(g_mul(g11, g11))),
                   t_of(g_cointegral(1)));
}

}  // namespace

TEST_CASE("counit of integral is the group order") {
    for (int n = 1; n <= 5; ++n) {
        HopfModel M = builtin_group_model(n);
        Term t = compose(t_of(g_integral(g11)), t_of(g_counit(g11)));
        REQUIRE(oracle_scalar(t, M) == Frac(n));
    }
}

TEST_CASE("cointegral of unit is one") {
    for (int n = 1; n <= 5; ++n) {
        HopfModel M = builtin_group_model(n);
        Term t = compose(t_of(g_unit(1)), t_of(g_cointegral(1)));
        REQUIRE(oracle_scalar(t, M) == Frac(1));
    }
}

TEST_CASE("counit of unit is one") {
    HopfModel M = builtin_group_model(4);
    Term t = compose(t_of(g_unit(1)), t_of(g_counit(g11)));
    REQUIRE(oracle_scalar(t, M) == Frac(1));
}

TEST_CASE("pairing of copairing is the group order") {
    // This is the scalar of the 0-framed unknot.
    for (int n = 1; n <= 5; ++n) {
        HopfModel M = builtin_group_model(n);
        Term t = compose(coform(), form());
        REQUIRE(oracle_scalar(t, M) == Frac(n));
    }
}

TEST_CASE("zig-zag laws of the pairing hold in the group model") {
    HopfModel M = builtin_group_model(3);
    Term idw = identity_term(G1, {g11});
    Term zig = compose(tensor(idw, coform()), tensor(form(), idw));
    Term zag = compose(tensor(coform(), idw), tensor(idw, form()));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            Frac expect = x == y ? M.one() : M.zero();
            REQUIRE(oracle_entry(zig, M, {x}, {y}) == expect);
            REQUIRE(oracle_entry(zag, M, {x}, {y}) == expect);
        }
}

TEST_CASE("matrix entries of basic boxes") {
    HopfModel M = builtin_group_model(3);
    // mul is the group law.
    Term mul = t_of(g_mul(g11, g11));
    REQUIRE(oracle_entry(mul, M, {1, 2}, {0}) == Frac(1));
    REQUIRE(oracle_entry(mul, M, {1, 2}, {1}) == Frac(0));
    // antipode is inversion.
    Term S = t_of(g_antipode(g11));
    REQUIRE(oracle_entry(S, M, {1}, {2}) == Frac(1));
    REQUIRE(oracle_entry(S, M, {1}, {1}) == Frac(0));
    // braid is the flip.
    Term c = t_of(g_braid(g11, g11));
    REQUIRE(oracle_entry(c, M, {1, 2}, {2, 1}) == Frac(1));
    REQUIRE(oracle_entry(c, M, {1, 2}, {1, 2}) == Frac(0));
}

TEST_CASE("copairing is unit tensor unit in the group model") {
    HopfModel M = builtin_group_model(2);
    Term s = t_of(g_copair(1, 1));
    REQUIRE(oracle_entry(s, M, {}, {0, 0}) == Frac(1));
    REQUIRE(oracle_entry(s, M, {}, {0, 1}) == Frac(0));
    REQUIRE(oracle_entry(s, M, {}, {1, 0}) == Frac(0));
    REQUIRE(oracle_entry(s, M, {}, {1, 1}) == Frac(0));
}

TEST_CASE("mod-p mode agrees with rationals on small scalars") {
    HopfModel Mq = builtin_group_model(3);
    HopfModel Mp = builtin_group_model(3, 101);
    Term t = compose(coform(), form());
    REQUIRE(oracle_scalar(t, Mq) == Frac(3));
    REQUIRE(oracle_scalar(t, Mp) == Frac::modp(3, 101));
}

TEST_CASE("oracle refuses oversized enumerations") {
    HopfModel M = builtin_group_model(5);
    // Chain enough comul/mul pairs to exceed the interior-slot cap.
    Term t = t_of(g_comul(g11));
    for (int k = 0; k < 12; ++k)
        t = compose(t, tensor(t_of(g_comul(g11)),
                              identity_term(G1, ObjectWord(
                                  target_of(t).size() - 1, g11))));
    REQUIRE_THROWS_AS(oracle_entry(t, M, {0},
                                   std::vector<int>(target_of(t).size(), 0)),
                      OracleLimit);
}
