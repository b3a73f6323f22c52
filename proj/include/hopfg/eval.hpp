#ifndef HOPFG_EVAL_HPP
#define HOPFG_EVAL_HPP

// Production evaluator: functorial layer-by-layer contraction of a term
// against a model, propagating a sparse state vector over the current wire
// word.  Certified against the independent brute-force oracle.

#include <unordered_map>
#include <vector>

#include "hopfg/model.hpp"
#include "hopfg/term.hpp"

namespace hopfg {

namespace detail {

// Sparse expansion of one box: rows[in multi-index] = list of
// (out multi-index, coeff).  Multi-indices are mixed-radix base d.
struct BoxTable {
    size_t nin = 0, nout = 0;
    std::vector<std::vector<std::pair<long long, Frac>>> rows;
};

inline BoxTable box_table(const Gen& g, const HopfModel& M) {
    BoxTable T;
    T.nin = gen_in(g).size();
    T.nout = gen_out(g).size();
    long long din = 1, dout = 1;
    for (size_t i = 0; i < T.nin; ++i) din *= M.d;
    for (size_t i = 0; i < T.nout; ++i) dout *= M.d;
    T.rows.resize(static_cast<size_t>(din));
    std::vector<int> in(T.nin), out(T.nout);
    for (long long a = 0; a < din; ++a) {
        long long r = a;
        for (size_t i = 0; i < T.nin; ++i) {
            in[T.nin - 1 - i] = static_cast<int>(r % M.d);
            r /= M.d;
        }
        for (long long b = 0; b < dout; ++b) {
            long long s = b;
            for (size_t i = 0; i < T.nout; ++i) {
                out[T.nout - 1 - i] = static_cast<int>(s % M.d);
                s /= M.d;
            }
            Frac c = M.coeff(g, in, out);
            if (!c.is_zero()) T.rows[static_cast<size_t>(a)].emplace_back(b, c);
        }
    }
    return T;
}

}  // namespace detail

// Sparse vector over basis multi-indices of a wire word.
using State = std::unordered_map<long long, Frac>;

inline long long pack(const std::vector<int>& idx, int d) {
    long long k = 0;
    for (int i : idx) k = k * d + i;
    return k;
}

// Apply all layers of `t` to the basis state `in_idx`; labels are ignored
// (the model assigns the same module to every label).  Returns the sparse
// output state over the target word.
inline State eval_state(const Term& t, const HopfModel& M,
                        const std::vector<int>& in_idx) {
    typecheck(t);
    if (in_idx.size() != t.src.size())
        throw std::invalid_argument("eval: input arity mismatch");
    State st;
    st[pack(in_idx, M.d)] = M.one();
    size_t width = t.src.size();
    for (const Layer& L : t.layers) {
        // Process the whole layer at once: decode, transform per box, encode.
        size_t out_width = layer_out(L).size();
        State next;
        for (const auto& [key, val] : st) {
            // Decode the input word.
            std::vector<int> wv(width);
            long long r = key;
            for (size_t i = 0; i < width; ++i) {
                wv[width - 1 - i] = static_cast<int>(r % M.d);
                r /= M.d;
            }
            // Expand box by box; keep a list of (partial out word, coeff).
            std::vector<std::pair<std::vector<int>, Frac>> partial;
            partial.emplace_back(std::vector<int>{}, val);
            size_t off = 0;
            for (const Gen& g : L) {
                size_t nin = gen_in(g).size();
                std::vector<int> gi(wv.begin() + static_cast<long>(off),
                                    wv.begin() + static_cast<long>(off + nin));
                off += nin;
                size_t nout = gen_out(g).size();
                std::vector<std::pair<std::vector<int>, Frac>> grown;
                // Enumerate outputs with nonzero structure constant.
                std::vector<int> go(nout);
                long long dout = 1;
                for (size_t i = 0; i < nout; ++i) dout *= M.d;
                for (long long b = 0; b < dout; ++b) {
                    long long s = b;
                    for (size_t i = 0; i < nout; ++i) {
                        go[nout - 1 - i] = static_cast<int>(s % M.d);
                        s /= M.d;
                    }
                    Frac c = M.coeff(g, gi, go);
                    if (c.is_zero()) continue;
                    for (const auto& [w, cv] : partial) {
                        std::vector<int> nw = w;
                        nw.insert(nw.end(), go.begin(), go.end());
                        grown.emplace_back(std::move(nw), cv * c);
                    }
                }
                partial = std::move(grown);
                if (partial.empty()) break;
            }
            for (const auto& [w, cv] : partial) {
                Frac& slot = next.try_emplace(pack(w, M.d), M.zero()).first->second;
                slot += cv;
            }
        }
        // Drop exact zeros to keep the state sparse.
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        st = std::move(next);
        width = out_width;
    }
    return st;
}

// Full tensor of a term: entries[(in index, out index)], zero entries absent.
struct Tensor {
    int d = 1;
    size_t nin = 0, nout = 0;
    std::map<std::pair<long long, long long>, Frac> entries;

    Frac at(long long i, long long o, const HopfModel& M) const {
        auto it = entries.find({i, o});
        return it == entries.end() ? M.zero() : it->second;
    }
    friend bool operator==(const Tensor&, const Tensor&) = default;
};

// Public evaluator: terms over the one-object groupoid only.
inline Tensor eval_term(const Term& t, const HopfModel& M) {
    if (groupoid_of(t).objects.size() != 1)
        throw std::invalid_argument(
            "eval_term: only one-object-groupoid terms are evaluable; "
            "reduce first");
    Tensor T;
    T.d = M.d;
    T.nin = t.src.size();
    T.nout = target_of(t).size();
    long long din = 1;
    for (size_t i = 0; i < T.nin; ++i) din *= M.d;
    std::vector<int> in(T.nin);
    for (long long a = 0; a < din; ++a) {
        long long r = a;
        for (size_t i = 0; i < T.nin; ++i) {
            in[T.nin - 1 - i] = static_cast<int>(r % M.d);
            r /= M.d;
        }
        for (const auto& [key, val] : eval_state(t, M, in))
            T.entries[{a, key}] = val;
    }
    return T;
}

inline Frac eval_scalar(const Term& t, const HopfModel& M) {
    if (!is_closed(t)) throw std::invalid_argument("eval: term not closed");
    State st = eval_state(t, M, {});
    auto it = st.find(0);
    return it == st.end() ? M.zero() : it->second;
}

}  // namespace hopfg

#endif  // HOPFG_EVAL_HPP
