#ifndef HOPFG_RANDGEN_HPP
#define HOPFG_RANDGEN_HPP

// Random well-typed term generation, used by property tests and fuzzing.
// Deterministic given the seed.

#include <random>
#include <vector>

#include "hopfg/term.hpp"

namespace hopfg {

// Append `nboxes` random generator boxes to an identity term on `src`,
// each in its own layer at a random admissible wire offset.
inline Term random_open_term(const GroupoidSpec& G, ObjectWord src,
                             int nboxes, std::mt19937& rng,
                             size_t max_width = 8) {
    Term t = identity_term(G.objects, std::move(src));
    ObjectWord cur = t.src;
    for (int step = 0; step < nboxes; ++step) {
        // Collect candidate boxes: for every wire position, the unary/binary
        // boxes applicable there; plus scalar-source boxes when width allows.
        struct Cand {
            Gen g;
            size_t off;
        };
        std::vector<Cand> cands;
        for (size_t off = 0; off < cur.size(); ++off) {
            Arrow a = cur[off];
            cands.push_back({g_comul(a), off});
            cands.push_back({g_counit(a), off});
            cands.push_back({g_antipode(a), off});
            cands.push_back({g_antipodeinv(a), off});
            cands.push_back({g_ribbon(a), off});
            cands.push_back({g_ribboninv(a), off});
            if (a.is_identity()) cands.push_back({g_cointegral(a.src), off});
            if (off + 1 < cur.size()) {
                Arrow b = cur[off + 1];
                cands.push_back({g_braid(a, b), off});
                cands.push_back({g_braidinv(a, b), off});
                if (a.tgt == b.src) cands.push_back({g_mul(a, b), off});
            }
        }
        if (cur.size() < max_width) {
            for (const Arrow& a : G.arrows()) {
                cands.push_back({g_integral(a), cur.size()});
                if (a.is_identity()) {
                    cands.push_back({g_unit(a.src), cur.size()});
                    for (const Arrow& b : G.arrows())
                        if (b.is_identity())
                            cands.push_back({g_copair(a.src, b.src),
                                             cur.size()});
                }
            }
        }
        if (cands.empty()) break;
        const Cand& c = cands[std::uniform_int_distribution<size_t>(
            0, cands.size() - 1)(rng)];
        size_t nin = gen_in(c.g).size();
        Layer L;
        for (size_t i = 0; i < c.off; ++i) L.push_back(g_id(cur[i]));
        L.push_back(c.g);
        for (size_t i = c.off + nin; i < cur.size(); ++i)
            L.push_back(g_id(cur[i]));
        t.layers.push_back(L);
        cur = layer_out(t.layers.back());
        if (cur.size() > max_width) {
            // Trim by capping future growth only; nothing to undo.
        }
    }
    return t;
}

// Close off an open term: counit every remaining output wire.
inline Term close_outputs(const Term& t) {
    ObjectWord out = target_of(t);
    if (out.empty()) return t;
    Term r = t;
    Layer L;
    for (const Arrow& a : out) L.push_back(g_counit(a));
    r.layers.push_back(L);
    return r;
}

}  // namespace hopfg

#endif  // HOPFG_RANDGEN_HPP
