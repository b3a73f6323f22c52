// Matching modulo layer exchange, rule application, traces, and the bounded
// equivalence search.

#include <catch2/catch_amalgamated.hpp>

#include "hopfg/eval.hpp"
#include "hopfg/match.hpp"
#include "hopfg/randgen.hpp"

using namespace hopfg;

namespace {
const std::vector<int> O2 = {1, 2};
const Arrow g12{1, 2};
}  // namespace

TEST_CASE("counit law matches and rewrites to the identity wire") {
    Term t = compose(term_of(O2, g_comul(g12)),
                     tensor(term_of(O2, g_counit(g12)),
                            identity_term(O2, {g12})));
    std::vector<Match> ms = find_matches(t, "a2");
    REQUIRE(ms.size() == 1);
    REQUIRE(ms[0].assign == std::vector<int>{1, 2});
    Term r = apply(t, ms[0]);
    REQUIRE(r == normalize_exchange(identity_term(O2, {g12})));
}

TEST_CASE("no match on a shape mismatch") {
    Arrow g11{1, 1};
    Term t = compose(term_of({1}, g_comul(g11)), term_of({1}, g_mul(g11, g11)));
    REQUIRE(find_matches(t, "a2").empty());
}

TEST_CASE("copairing with distinct objects expands to two units") {
    Term t = term_of(O2, g_copair(1, 2));
    std::vector<Match> ms = find_matches(t, "r7");
    REQUIRE(ms.size() == 1);
    Term r = apply(t, ms[0]);
    Term expect = tensor(term_of(O2, g_unit(1)), term_of(O2, g_unit(2)));
    REQUIRE(r == normalize_exchange(expect));
    // The side condition blocks the diagonal copairing.
    Term diag = term_of({1}, g_copair(1, 1));
    REQUIRE(find_matches(diag, "r7").empty());
}

TEST_CASE("matching sees through interleaved unrelated boxes") {
    // The a2 redex is split across layers with an antipode on a distant wire
    // in between.
    Term redex = compose(term_of(O2, g_comul(g12)),
                         tensor(term_of(O2, g_counit(g12)),
                                identity_term(O2, {g12})));
    Term spread = tensor(redex, term_of(O2, g_antipode(g12)));
    REQUIRE(find_matches(spread, "a2").size() == 1);
    Term r = apply(spread, find_matches(spread, "a2")[0]);
    Term expect = tensor(identity_term(O2, {g12}),
                         term_of(O2, g_antipode(g12)));
    REQUIRE(r == normalize_exchange(expect));
}

TEST_CASE("apply preserves boundaries and evaluation") {
    GroupoidSpec G = make_Gn(1);
    const Arrow g11{1, 1};
    HopfModel M = builtin_group_model(3);
    std::mt19937 rng(424242);
    int applied = 0;
    for (int trial = 0; trial < 40 && applied < 25; ++trial) {
        Term t = random_open_term(G, {g11, g11}, 5, rng, 4);
        for (const Rule& r : rule_db()) {
            if (r.tier == Tier::dstar || r.tier == Tier::dquot) continue;
            std::vector<Match> ms = find_matches(t, r, +1);
            if (ms.empty()) continue;
            const Match& m = ms[rng() % ms.size()];
            Term u = apply(t, m);
            REQUIRE(typecheck(u) == typecheck(t));
            REQUIRE(eval_term(u, M) == eval_term(t, M));
            ++applied;
            if (applied >= 25) break;
        }
    }
    REQUIRE(applied >= 25);
}

TEST_CASE("reverse application inserts a redex") {
    // id --(a2 reverse)--> comul then counit on the left copy.
    Term t = identity_term(O2, {g12});
    std::vector<Match> ms = find_matches(t, "a2", -1);
    REQUIRE(ms.size() == 1);
    Term u = apply(t, ms[0]);
    REQUIRE(find_matches(u, "a2", +1).size() == 1);
    REQUIRE(normalize_exchange(apply(u, find_matches(u, "a2", +1)[0])) ==
            normalize_exchange(t));
}

TEST_CASE("trace serialization round-trips and replays") {
    Term t = compose(term_of(O2, g_comul(g12)),
                     tensor(term_of(O2, g_counit(g12)),
                            identity_term(O2, {g12})));
    Trace tr = {find_matches(t, "a2")[0]};
    std::string text = trace_to_text(tr);
    Trace back = trace_from_text(text);
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].rule == "a2");
    REQUIRE(back[0].dir == +1);
    REQUIRE(back[0].assign == tr[0].assign);
    REQUIRE(replay(t, back) == normalize_exchange(identity_term(O2, {g12})));
    // Empty trace: unchanged.
    REQUIRE(replay(t, {}) == normalize_exchange(t));
    // Stale step: fails with the step index.
    Trace stale = back;
    stale.push_back(back[0]);
    try {
        replay(t, stale);
        FAIL("expected ReplayError");
    } catch (const ReplayError& e) {
        REQUIRE(e.index == 1);
    }
}

TEST_CASE("isotopy normal form straightens zig-zags and is idempotent") {
    Term zig = compose(tensor(identity_term(O2, {g12}), coform(O2, g12)),
                       tensor(form(O2, g12), identity_term(O2, {g12})));
    Term n = normalize_isotopy(zig);
    REQUIRE(n == normalize_exchange(identity_term(O2, {g12})));
    REQUIRE(normalize_isotopy(n) == n);
}

TEST_CASE("bounded_equiv finds one-step and few-step proofs") {
    Budget small{3, 25, 1500};
    SECTION("counit law") {
        Term a = compose(term_of(O2, g_comul(g12)),
                         tensor(term_of(O2, g_counit(g12)),
                                identity_term(O2, {g12})));
        Term b = identity_term(O2, {g12});
        EquivResult res = bounded_equiv(a, b, small);
        REQUIRE(res.equivalent);
        REQUIRE(replay(a, res.trace) == normalize_exchange(b));
        // Symmetry.
        REQUIRE(bounded_equiv(b, a, small).equivalent);
    }
    SECTION("antipode is a coalgebra antihomomorphism") {
        Term a = compose(term_of(O2, g_antipode(g12)),
                         term_of(O2, g_comul(g12.inv())));
        Term b = compose(compose(term_of(O2, g_comul(g12)),
                                 term_of(O2, g_braid(g12, g12))),
                         tensor(term_of(O2, g_antipode(g12)),
                                term_of(O2, g_antipode(g12))));
        EquivResult res = bounded_equiv(a, b, small);
        REQUIRE(res.equivalent);
        REQUIRE(replay(a, res.trace) == normalize_exchange(b));
    }
    SECTION("mu inverse") {
        Arrow h23{2, 3};
        std::vector<int> O3 = {1, 2, 3};
        Term a = compose(mu(O3, g12, h23), mu_inv(O3, g12, h23));
        Term b = identity_term(O3, {g12, h23});
        REQUIRE(bounded_equiv(a, b, small).equivalent);
    }
    SECTION("distinct morphisms stay Unknown") {
        Term a = term_of(O2, g_ribbon(g12));
        Term b = identity_term(O2, {g12});
        REQUIRE_FALSE(bounded_equiv(a, b, Budget{2, 10, 300}).equivalent);
    }
    SECTION("boundary mismatch is rejected") {
        Term a = term_of(O2, g_counit(g12));
        Term b = identity_term(O2, {g12});
        REQUIRE_THROWS_AS(bounded_equiv(a, b, small), TypeError);
    }
}

TEST_CASE("bounded_equiv needing a genuinely multi-step path") {
    // ribbon then ribboninv then comul ~ comul: needs r1 then nothing else,
    // but start from the two-sided form to force two steps.
    Term a = compose(compose(term_of(O2, g_ribbon(g12)),
                             term_of(O2, g_ribboninv(g12))),
                     term_of(O2, g_comul(g12)));
    Term mid = term_of(O2, g_comul(g12));
    Term b = compose(mid, tensor(compose(term_of(O2, g_ribbon(g12)),
                                         term_of(O2, g_ribboninv(g12))),
                                 identity_term(O2, {g12})));
    EquivResult res = bounded_equiv(a, b, Budget{3, 20, 2000});
    REQUIRE(res.equivalent);
    REQUIRE(replay(a, res.trace) == normalize_exchange(b));
}
