// Unit tests for the groupoid layer: composition, inverses, subgroupoids,
// relabeling along a base arrow, and the generation (connectivity) test.

#include <catch2/catch_amalgamated.hpp>

#include "hopfg/groupoid.hpp"

using namespace hopfg;

TEST_CASE("pair groupoid basics") {
    GroupoidSpec G = make_Gn(3);
    REQUIRE(G.objects == std::vector<int>{1, 2, 3});
    REQUIRE(G.arrows().size() == 9);
    REQUIRE(G.has_arrow(Arrow{1, 3}));
    REQUIRE_FALSE(G.has_arrow(Arrow{1, 4}));
    REQUIRE(G.identity(2) == Arrow{2, 2});
    REQUIRE(G.inverse(Arrow{1, 3}) == Arrow{3, 1});
}

TEST_CASE("composition is partial") {
    GroupoidSpec G = make_Gn(3);
    auto gh = G.compose(Arrow{1, 2}, Arrow{2, 3});
    REQUIRE(gh.has_value());
    REQUIRE(*gh == Arrow{1, 3});
    REQUIRE_FALSE(G.compose(Arrow{1, 2}, Arrow{3, 1}).has_value());
    // Identities are units.
    REQUIRE(*G.compose(G.identity(1), Arrow{1, 2}) == Arrow{1, 2});
    REQUIRE(*G.compose(Arrow{1, 2}, G.identity(2)) == Arrow{1, 2});
    // Inverses compose to identities.
    REQUIRE(*G.compose(Arrow{1, 2}, Arrow{2, 1}) == G.identity(1));
}

TEST_CASE("associativity on all composable triples") {
    GroupoidSpec G = make_Gn(4);
    for (const Arrow& g : G.arrows())
        for (const Arrow& h : G.arrows())
            for (const Arrow& k : G.arrows()) {
                auto gh = G.compose(g, h);
                auto hk = G.compose(h, k);
                if (!gh || !hk) continue;
                auto l = G.compose(*gh, k);
                auto r = G.compose(g, *hk);
                REQUIRE(l.has_value());
                REQUIRE(r.has_value());
                REQUIRE(*l == *r);
            }
}

TEST_CASE("full subgroupoid by object removal") {
    GroupoidSpec G = make_Gn(3);
    GroupoidSpec H = G.without_object(3);
    REQUIRE(H.objects == std::vector<int>{1, 2});
    REQUIRE(H.arrows().size() == 4);
    REQUIRE_FALSE(H.has_arrow(Arrow{1, 3}));
}

TEST_CASE("relabeling along a base arrow") {
    // x : 1 -> 3 collapses object 3 onto object 1.
    LabelMap m = relabel(Arrow{1, 3});
    REQUIRE(m.apply_object(3) == 1);
    REQUIRE(m.apply_object(2) == 2);

    SECTION("the four arrow cases agree with the object map") {
        GroupoidSpec G = make_Gn(3);
        for (const Arrow& g : G.arrows()) {
            Arrow image = m.apply(g);
            switch (m.case_of(g)) {
                case LabelMap::Case::ConjugateByX: {
                    // x g x^-1, with g : 3 -> 3.
                    auto xg = G.compose(m.x, g);
                    auto r = G.compose(*xg, m.x.inv());
                    REQUIRE(image == *r);
                    break;
                }
                case LabelMap::Case::LeftMultiplyX: {
                    REQUIRE(image == *G.compose(m.x, g));
                    break;
                }
                case LabelMap::Case::RightMultiplyXInv: {
                    REQUIRE(image == *G.compose(g, m.x.inv()));
                    break;
                }
                case LabelMap::Case::Fixed:
                    REQUIRE(image == g);
                    break;
            }
        }
    }

    SECTION("relabeling is functorial") {
        GroupoidSpec G = make_Gn(3);
        for (const Arrow& g : G.arrows())
            for (const Arrow& h : G.arrows()) {
                auto gh = G.compose(g, h);
                if (!gh) continue;
                GroupoidSpec H = G.without_object(3);
                auto img = H.compose(m.apply(g), m.apply(h));
                REQUIRE(img.has_value());
                REQUIRE(*img == m.apply(*gh));
            }
    }
}

TEST_CASE("generation is connectivity") {
    GroupoidSpec G = make_Gn(3);
    REQUIRE(generates({Arrow{1, 2}, Arrow{2, 3}}, G));
    REQUIRE(generates({Arrow{1, 3}, Arrow{3, 2}}, G));
    REQUIRE_FALSE(generates({Arrow{1, 2}}, G));
    REQUIRE_FALSE(generates({Arrow{1, 2}, Arrow{1, 1}, Arrow{3, 3}}, G));
    REQUIRE(generates({}, make_Gn(1)));
    REQUIRE_FALSE(generates({}, make_Gn(2)));
}
