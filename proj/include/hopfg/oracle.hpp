#ifndef HOPFG_ORACLE_HPP
#define HOPFG_ORACLE_HPP

// Brute-force reference evaluator: sums over all basis labelings of every
// interior wire segment, multiplying structure constants box by box.  It is
// deliberately independent of the production evaluator (different algorithm,
// no shared contraction code) and is only usable at small sizes; its job is
// to certify the fast evaluator and to freeze expected scalar values.

#include <vector>

#include "hopfg/model.hpp"
#include "hopfg/term.hpp"

namespace hopfg {

struct OracleLimit : std::runtime_error {
    OracleLimit() : std::runtime_error("oracle enumeration too large") {}
};

// Evaluate the single matrix entry of `t` at fixed boundary basis indices.
// `in_idx` indexes the source word, `out_idx` the target word.
inline Frac oracle_entry(const Term& t, const HopfModel& M,
                         const std::vector<int>& in_idx,
                         const std::vector<int>& out_idx) {
    typecheck(t);
    // Words between layers: w[0]=src, w[k]=target of layer k-1.
    std::vector<ObjectWord> w;
    w.push_back(t.src);
    for (const Layer& L : t.layers) w.push_back(layer_out(L));
    const size_t nlay = t.layers.size();
    if (in_idx.size() != w.front().size() ||
        out_idx.size() != w.back().size())
        throw std::invalid_argument("oracle: boundary index arity mismatch");

    // Interior segments to enumerate.
    size_t slots = 0;
    for (size_t k = 1; k + 1 < w.size(); ++k) slots += w[k].size();
    double total = 1;
    for (size_t i = 0; i < slots; ++i) {
        total *= M.d;
        if (total > 5e7) throw OracleLimit();
    }

    std::vector<int> interior(slots, 0);
    // Assemble per-layer views into the flat interior vector.
    auto segment = [&](size_t k) -> std::vector<int> {
        if (k == 0) return in_idx;
        if (k == nlay) return out_idx;
        size_t off = 0;
        for (size_t j = 1; j < k; ++j) off += w[j].size();
        return std::vector<int>(interior.begin() + static_cast<long>(off),
                                interior.begin() +
                                    static_cast<long>(off + w[k].size()));
    };

    Frac acc = M.zero();
    while (true) {
        Frac prod = M.one();
        for (size_t k = 0; k < nlay && !prod.is_zero(); ++k) {
            std::vector<int> lo = segment(k), hi = segment(k + 1);
            size_t li = 0, hj = 0;
            for (const Gen& g : t.layers[k]) {
                size_t nin = gen_in(g).size(), nout = gen_out(g).size();
                std::vector<int> gi(lo.begin() + static_cast<long>(li),
                                    lo.begin() + static_cast<long>(li + nin));
                std::vector<int> go(hi.begin() + static_cast<long>(hj),
                                    hi.begin() + static_cast<long>(hj + nout));
                prod *= M.coeff(g, gi, go);
                li += nin;
                hj += nout;
            }
        }
        acc += prod;
        // Advance the mixed-radix counter.
        size_t i = 0;
        for (; i < slots; ++i) {
            if (++interior[i] < M.d) break;
            interior[i] = 0;
        }
        if (i == slots) break;
    }
    return acc;
}

inline Frac oracle_scalar(const Term& t, const HopfModel& M) {
    if (!is_closed(t)) throw std::invalid_argument("oracle: term not closed");
    return oracle_entry(t, M, {}, {});
}

}  // namespace hopfg

#endif  // HOPFG_ORACLE_HPP
