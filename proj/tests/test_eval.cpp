// The production evaluator must agree exactly with the brute-force oracle,
// be compositional, and reproduce the frozen scalar values.

#include <catch2/catch_amalgamated.hpp>

#include "hopfg/eval.hpp"
#include "hopfg/oracle.hpp"
#include "hopfg/randgen.hpp"

using namespace hopfg;

namespace {
const std::vector<int> G1 = {1};
const Arrow g11{1, 1};
Term t_of(const Gen& g) { return term_of(G1, g); }
}  // namespace

TEST_CASE("frozen scalars reproduced by the fast evaluator") {
    for (int n = 1; n <= 5; ++n) {
        HopfModel M = builtin_group_model(n);
        Term eps_eta = compose(t_of(g_unit(1)), t_of(g_counit(g11)));
        REQUIRE(eval_scalar(eps_eta, M) == Frac(1));
        Term l_L = compose(t_of(g_integral(g11)), t_of(g_cointegral(1)));
        REQUIRE(eval_scalar(l_L, M) == Frac(1));
        Term coform = compose(t_of(g_integral(g11)), t_of(g_comul(g11)));
        Term form = compose(
            compose(tensor(identity_term(G1, {g11}), t_of(g_antipode(g11))),
                    t_of(g_mul(g11, g11))),
            t_of(g_cointegral(1)));
        REQUIRE(eval_scalar(compose(coform, form), M) == Frac(n));
    }
}

TEST_CASE("agreement with the oracle on random closed terms") {
    GroupoidSpec G = make_Gn(1);
    std::mt19937 rng(20260826);
    for (int d : {2, 3}) {
        HopfModel M = builtin_group_model(d);
        int compared = 0;
        for (int trial = 0; trial < 60; ++trial) {
            int w0 = static_cast<int>(rng() % 3);
            int nboxes = d == 2 ? 5 : 3;
            Term t = close_outputs(random_open_term(
                G, ObjectWord(static_cast<size_t>(w0), g11), nboxes, rng, 4));
            INFO(print_term(t));
            std::vector<int> in(t.src.size());
            for (int& i : in) i = static_cast<int>(rng() % d);
            Frac slow;
            try {
                slow = oracle_entry(t, M, in, {});
            } catch (const OracleLimit&) {
                continue;  // term too wide for the reference evaluator
            }
            State st = eval_state(t, M, in);
            Frac fast = st.count(0) ? st.at(0) : M.zero();
            REQUIRE(fast == slow);
            ++compared;
        }
        REQUIRE(compared >= 30);
    }
}

TEST_CASE("agreement with the oracle on random open terms, all entries") {
    GroupoidSpec G = make_Gn(1);
    std::mt19937 rng(7);
    HopfModel M = builtin_group_model(2);
    for (int trial = 0; trial < 25; ++trial) {
        Term t = random_open_term(G, {g11, g11}, 5, rng, 4);
        Tensor T = eval_term(t, M);
        long long din = 1, dout = 1;
        for (size_t i = 0; i < T.nin; ++i) din *= M.d;
        for (size_t i = 0; i < T.nout; ++i) dout *= M.d;
        for (long long a = 0; a < din; ++a) {
            std::vector<int> in(T.nin);
            long long r = a;
            for (size_t i = 0; i < T.nin; ++i) {
                in[T.nin - 1 - i] = static_cast<int>(r % M.d);
                r /= M.d;
            }
            for (long long b = 0; b < dout; ++b) {
                std::vector<int> out(T.nout);
                long long s = b;
                for (size_t i = 0; i < T.nout; ++i) {
                    out[T.nout - 1 - i] = static_cast<int>(s % M.d);
                    s /= M.d;
                }
                REQUIRE(T.at(a, b, M) == oracle_entry(t, M, in, out));
            }
        }
    }
}

TEST_CASE("evaluation is compositional") {
    GroupoidSpec G = make_Gn(1);
    std::mt19937 rng(99);
    HopfModel M = builtin_group_model(3);
    for (int trial = 0; trial < 10; ++trial) {
        Term f = random_open_term(G, {g11}, 4, rng, 4);
        Term g = random_open_term(G, target_of(f), 4, rng, 4);
        Tensor fg = eval_term(compose(f, g), M);
        // Contract by hand: (fg)[a,c] = sum_b f[a,b] g[b,c].
        Tensor Tf = eval_term(f, M), Tg = eval_term(g, M);
        std::map<std::pair<long long, long long>, Frac> prod;
        for (const auto& [fk, fv] : Tf.entries)
            for (const auto& [gk, gv] : Tg.entries)
                if (fk.second == gk.first) {
                    Frac& slot = prod.try_emplace({fk.first, gk.second},
                                                  M.zero()).first->second;
                    slot += fv * gv;
                }
        for (auto it = prod.begin(); it != prod.end();)
            it = it->second.is_zero() ? prod.erase(it) : std::next(it);
        REQUIRE(fg.entries == prod);
    }
}

TEST_CASE("evaluation is monoidal") {
    GroupoidSpec G = make_Gn(1);
    std::mt19937 rng(5);
    HopfModel M = builtin_group_model(2);
    Term f = random_open_term(G, {g11}, 3, rng, 3);
    Term g = random_open_term(G, {g11}, 3, rng, 3);
    Tensor T = eval_term(tensor(f, g), M);
    Tensor Tf = eval_term(f, M), Tg = eval_term(g, M);
    long long din_g = 1, dout_g = 1;
    for (size_t i = 0; i < Tg.nin; ++i) din_g *= M.d;
    for (size_t i = 0; i < Tg.nout; ++i) dout_g *= M.d;
    std::map<std::pair<long long, long long>, Frac> outer;
    for (const auto& [fk, fv] : Tf.entries)
        for (const auto& [gk, gv] : Tg.entries) {
            Frac c = fv * gv;
            if (!c.is_zero())
                outer[{fk.first * din_g + gk.first,
                       fk.second * dout_g + gk.second}] = c;
        }
    REQUIRE(T.entries == outer);
}

TEST_CASE("braid composed with its inverse is the identity matrix") {
    HopfModel M = builtin_group_model(4);
    Term t = compose(t_of(g_braid(g11, g11)), t_of(g_braidinv(g11, g11)));
    Tensor T = eval_term(t, M);
    for (long long a = 0; a < 16; ++a)
        for (long long b = 0; b < 16; ++b)
            REQUIRE(T.at(a, b, M) == (a == b ? M.one() : M.zero()));
}

TEST_CASE("exchange normalization preserves evaluation") {
    GroupoidSpec G = make_Gn(1);
    std::mt19937 rng(123);
    HopfModel M = builtin_group_model(3);
    for (int trial = 0; trial < 20; ++trial) {
        Term t = random_open_term(G, {g11, g11}, 6, rng, 5);
        REQUIRE(eval_term(t, M) == eval_term(normalize_exchange(t), M));
    }
}

TEST_CASE("eval_term rejects multi-object terms") {
    Term t = term_of({1, 2}, g_comul(Arrow{1, 2}));
    HopfModel M = builtin_group_model(2);
    REQUIRE_THROWS(eval_term(t, M));
}
