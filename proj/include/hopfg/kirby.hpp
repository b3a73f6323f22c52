// Generalized Kirby tangles as slice words of elementary pieces, the
// 2-deformation move set, 0-handle reduction, the diagram functor from
// algebra terms, and the inverse translation for ordinary closed diagrams.
//
// A tangle over labels {1..n} is a sequence of horizontal slices; each
// slice is a left-to-right list of pieces acting on consecutive strands:
//
//   Strand(a)      1 -> 1   a vertical arc labeled a
//   Over(a,b)      2 -> 2   crossing, left strand passes over; out (b,a)
//   Under(a,b)     2 -> 2   crossing, left strand passes under
//   Cup(a)         0 -> 2   local minimum (both legs labeled a)
//   Cap(a)         2 -> 0   local maximum
//   CurlP(a)       1 -> 1   positive framing curl (+1 to the writhe)
//   CurlM(a)       1 -> 1   negative framing curl
//   Gate(a,b,dirs) w -> w   dotted component (1-handle) with side labels
//                           a,b; the w strands run through it and switch
//                           label sides (dirs[i]==0: enters a, exits b).
//
// Framing is blackboard: the framing of a component is its self-writhe
// plus its curl sum; no separate framing integer is stored.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfg/macro.hpp"
#include "hopfg/term.hpp"

namespace hopfg {

struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class KTag { Strand, Over, Under, Cup, Cap, CurlP, CurlM, Gate };

struct KPiece {
    KTag tag = KTag::Strand;
    int a = 0;
    int b = 0;
    std::vector<std::uint8_t> dirs;  // Gate only; size == strand count

    bool operator==(const KPiece&) const = default;
};

inline KPiece k_strand(int a) { return {KTag::Strand, a, 0, {}}; }
inline KPiece k_over(int a, int b) { return {KTag::Over, a, b, {}}; }
inline KPiece k_under(int a, int b) { return {KTag::Under, a, b, {}}; }
inline KPiece k_cup(int a) { return {KTag::Cup, a, 0, {}}; }
inline KPiece k_cap(int a) { return {KTag::Cap, a, 0, {}}; }
inline KPiece k_curlp(int a) { return {KTag::CurlP, a, 0, {}}; }
inline KPiece k_curlm(int a) { return {KTag::CurlM, a, 0, {}}; }
inline KPiece k_gate(int a, int b, std::vector<std::uint8_t> dirs = {}) {
    return {KTag::Gate, a, b, std::move(dirs)};
}

inline std::vector<int> kin_labels(const KPiece& p) {
    switch (p.tag) {
        case KTag::Strand:
        case KTag::CurlP:
        case KTag::CurlM: return {p.a};
        case KTag::Over:
        case KTag::Under: return {p.a, p.b};
        case KTag::Cup: return {};
        case KTag::Cap: return {p.a, p.a};
        case KTag::Gate: {
            std::vector<int> w;
            for (std::uint8_t d : p.dirs) w.push_back(d ? p.b : p.a);
            return w;
        }
    }
    return {};
}

inline std::vector<int> kout_labels(const KPiece& p) {
    switch (p.tag) {
        case KTag::Strand:
        case KTag::CurlP:
        case KTag::CurlM: return {p.a};
        case KTag::Over:
        case KTag::Under: return {p.b, p.a};
        case KTag::Cup: return {p.a, p.a};
        case KTag::Cap: return {};
        case KTag::Gate: {
            std::vector<int> w;
            for (std::uint8_t d : p.dirs) w.push_back(d ? p.a : p.b);
            return w;
        }
    }
    return {};
}

using KSlice = std::vector<KPiece>;

struct KirbyTangle {
    int n = 1;
    std::vector<int> src;  // top boundary label word
    std::vector<KSlice> slices;

    bool operator==(const KirbyTangle&) const = default;
};

// ---------------------------------------------------------------------------
// Typing and validation.

inline std::vector<int> slice_out(const std::vector<int>& in, const KSlice& s,
                                  int slice_index) {
    std::vector<int> out;
    std::size_t pos = 0;
    for (const KPiece& p : s) {
        std::vector<int> need = kin_labels(p);
        if (pos + need.size() > in.size())
            throw AdmissibilityError("slice " + std::to_string(slice_index) +
                                     " consumes more strands than available");
        for (std::size_t i = 0; i < need.size(); ++i)
            if (in[pos + i] != need[i])
                throw AdmissibilityError(
                    "label clash in slice " + std::to_string(slice_index) +
                    ": strand labeled " + std::to_string(in[pos + i]) +
                    " meets a piece expecting " + std::to_string(need[i]));
        pos += need.size();
        for (int o : kout_labels(p)) out.push_back(o);
    }
    if (pos != in.size())
        throw AdmissibilityError("slice " + std::to_string(slice_index) +
                                 " leaves strands unconsumed");
    return out;
}

inline std::vector<int> typecheck_kirby(const KirbyTangle& k) {
    std::vector<int> w = k.src;
    for (std::size_t s = 0; s < k.slices.size(); ++s)
        w = slice_out(w, k.slices[s], static_cast<int>(s));
    return w;
}

inline void validate(const KirbyTangle& k) {
    auto check_label = [&](int a) {
        if (a < 1 || a > k.n)
            throw AdmissibilityError("label " + std::to_string(a) +
                                     " out of range 1.." + std::to_string(k.n));
    };
    for (int a : k.src) check_label(a);
    for (const KSlice& s : k.slices)
        for (const KPiece& p : s) {
            check_label(p.a);
            if (p.tag == KTag::Over || p.tag == KTag::Under ||
                p.tag == KTag::Gate)
                check_label(p.b);
            if (p.tag != KTag::Gate && !p.dirs.empty())
                throw AdmissibilityError("strand directions on a non-gate");
        }
    typecheck_kirby(k);
}

inline bool is_closed(const KirbyTangle& k) {
    return k.src.empty() && typecheck_kirby(k).empty();
}

// Connectivity of the handlebody: labels are vertices, dotted components
// are edges; the diagram is complete when that graph is connected.
inline bool is_complete(const KirbyTangle& k) {
    std::vector<int> parent(k.n + 1);
    for (int i = 0; i <= k.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const KSlice& s : k.slices)
        for (const KPiece& p : s)
            if (p.tag == KTag::Gate) parent[find(p.a)] = find(p.b);
    int root = find(1);
    for (int i = 2; i <= k.n; ++i)
        if (find(i) != root) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Composition helpers.

inline KirbyTangle k_identity(int n, std::vector<int> word) {
    KirbyTangle k;
    k.n = n;
    k.src = std::move(word);
    return k;
}

inline KirbyTangle kcompose(const KirbyTangle& f, const KirbyTangle& g) {
    if (typecheck_kirby(f) != g.src)
        throw AdmissibilityError("kcompose boundary mismatch");
    KirbyTangle r = f;
    r.n = std::max(f.n, g.n);
    for (const KSlice& s : g.slices) r.slices.push_back(s);
    return r;
}

inline KirbyTangle ktensor(const KirbyTangle& f, const KirbyTangle& g) {
    KirbyTangle r;
    r.n = std::max(f.n, g.n);
    r.src = f.src;
    for (int a : g.src) r.src.push_back(a);
    std::vector<int> fw = f.src;
    for (const KSlice& s : f.slices) {
        KSlice row = s;
        for (int a : g.src) row.push_back(k_strand(a));
        r.slices.push_back(std::move(row));
        fw = slice_out(fw, s, 0);
    }
    for (const KSlice& s : g.slices) {
        KSlice row;
        for (int a : fw) row.push_back(k_strand(a));
        for (const KPiece& p : s) row.push_back(p);
        r.slices.push_back(std::move(row));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Wire tracing: endpoints, components, framing.

namespace kirby_detail {

// Endpoint of a piece: (slice, piece index, port, side).  Ports count the
// piece's inputs (side 0) or outputs (side 1) from the left.
struct KEnd {
    int s = 0, p = 0, port = 0, side = 0;
    auto operator<=>(const KEnd&) const = default;
};

struct SliceLayout {
    // For each input position of the slice: (piece index, port).
    std::vector<std::pair<int, int>> in_at;
    std::vector<std::pair<int, int>> out_at;
};

inline SliceLayout layout(const KSlice& s) {
    SliceLayout L;
    for (std::size_t p = 0; p < s.size(); ++p) {
        int ni = static_cast<int>(kin_labels(s[p]).size());
        int no = static_cast<int>(kout_labels(s[p]).size());
        for (int i = 0; i < ni; ++i) L.in_at.push_back({(int)p, i});
        for (int o = 0; o < no; ++o) L.out_at.push_back({(int)p, o});
    }
    return L;
}

struct KWiring {
    std::vector<SliceLayout> lay;       // per slice
    std::vector<std::vector<int>> word; // label word at each boundary level
};

inline KWiring wiring(const KirbyTangle& k) {
    KWiring w;
    w.word.push_back(k.src);
    std::vector<int> cur = k.src;
    for (std::size_t s = 0; s < k.slices.size(); ++s) {
        w.lay.push_back(layout(k.slices[s]));
        cur = slice_out(cur, k.slices[s], static_cast<int>(s));
        w.word.push_back(cur);
    }
    return w;
}

// Pairs of endpoints joined inside one piece (same strand of the curve).
inline std::vector<std::pair<int, int>> internal_pairs(const KPiece& p) {
    switch (p.tag) {
        case KTag::Strand:
        case KTag::CurlP:
        case KTag::CurlM: return {{0, 0}};   // in0 -- out0
        case KTag::Over:
        case KTag::Under: return {{0, 1}, {1, 0}};  // in0--out1, in1--out0
        case KTag::Cup: return {};           // out0 -- out1, handled below
        case KTag::Cap: return {};           // in0 -- in1, handled below
        case KTag::Gate: {
            std::vector<std::pair<int, int>> r;
            for (std::size_t i = 0; i < p.dirs.size(); ++i)
                r.push_back({(int)i, (int)i});
            return r;
        }
    }
    return {};
}

struct CompInfo {
    bool closed = true;
    int curls = 0;               // signed curl sum
    int self_writhe = 0;         // signed self-crossings
    int crossing_ends = 0;       // total crossing endpoints on the component
    std::vector<KEnd> gate_passages;  // gate endpoints (side 0) on the comp
    std::vector<KEnd> pieces;    // every piece endpoint, for surgery
};

struct Components {
    std::map<KEnd, int> comp_of;  // endpoint -> component id
    std::vector<CompInfo> info;
};

inline Components components(const KirbyTangle& k) {
    KWiring w = wiring(k);
    std::map<KEnd, int> id;
    std::vector<KEnd> ends;
    auto node = [&](const KEnd& e) {
        auto it = id.find(e);
        if (it != id.end()) return it->second;
        int v = static_cast<int>(ends.size());
        id[e] = v;
        ends.push_back(e);
        return v;
    };
    std::vector<int> parent;
    auto ensure = [&](int x) {
        while ((int)parent.size() <= x) parent.push_back((int)parent.size());
        return x;
    };
    auto find = [&](int x) {
        ensure(x);
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[x] = y;
    };
    // Intra-piece continuations.
    for (std::size_t s = 0; s < k.slices.size(); ++s)
        for (std::size_t p = 0; p < k.slices[s].size(); ++p) {
            const KPiece& pc = k.slices[s][p];
            for (auto [i, o] : internal_pairs(pc))
                unite(node({(int)s, (int)p, i, 0}), node({(int)s, (int)p, o, 1}));
            if (pc.tag == KTag::Cup)
                unite(node({(int)s, (int)p, 0, 1}), node({(int)s, (int)p, 1, 1}));
            if (pc.tag == KTag::Cap)
                unite(node({(int)s, (int)p, 0, 0}), node({(int)s, (int)p, 1, 0}));
        }
    // Inter-slice wires: output q of slice s meets input q of slice s+1.
    std::map<KEnd, bool> open_end;
    for (std::size_t lvl = 0; lvl + 1 <= k.slices.size(); ++lvl) {
        // wires at boundary level lvl feed slice lvl; produced by slice lvl-1.
        for (std::size_t q = 0; q < w.word[lvl].size(); ++q) {
            auto [pi, pp] = w.lay[lvl].in_at[q];
            KEnd below{(int)lvl, pi, pp, 0};
            if (lvl == 0) {
                open_end[below] = true;
                node(below);
                ensure(id[below]);
            } else {
                auto [qo, qp] = w.lay[lvl - 1].out_at[q];
                unite(node({(int)lvl - 1, qo, qp, 1}), node(below));
            }
        }
    }
    // Bottom boundary.
    if (!k.slices.empty()) {
        std::size_t last = k.slices.size() - 1;
        for (std::size_t q = 0; q < w.word[last + 1].size(); ++q) {
            auto [qo, qp] = w.lay[last].out_at[q];
            KEnd e{(int)last, qo, qp, 1};
            open_end[e] = true;
            node(e);
            ensure(id[e]);
        }
    }
    for (std::size_t i = 0; i < ends.size(); ++i) ensure((int)i);

    Components C;
    std::map<int, int> root_to_comp;
    auto comp = [&](int v) {
        int r = find(v);
        auto it = root_to_comp.find(r);
        if (it != root_to_comp.end()) return it->second;
        int c = static_cast<int>(C.info.size());
        root_to_comp[r] = c;
        C.info.push_back({});
        return c;
    };
    for (std::size_t i = 0; i < ends.size(); ++i) {
        int c = comp((int)i);
        C.comp_of[ends[i]] = c;
        C.info[c].pieces.push_back(ends[i]);
        if (open_end.count(ends[i])) C.info[c].closed = false;
    }
    for (std::size_t s = 0; s < k.slices.size(); ++s)
        for (std::size_t p = 0; p < k.slices[s].size(); ++p) {
            const KPiece& pc = k.slices[s][p];
            KEnd in0{(int)s, (int)p, 0, 0};
            switch (pc.tag) {
                case KTag::CurlP: C.info[C.comp_of[in0]].curls += 1; break;
                case KTag::CurlM: C.info[C.comp_of[in0]].curls -= 1; break;
                case KTag::Over:
                case KTag::Under: {
                    KEnd in1{(int)s, (int)p, 1, 0};
                    int c0 = C.comp_of[in0], c1 = C.comp_of[in1];
                    C.info[c0].crossing_ends += 1;
                    C.info[c1].crossing_ends += 1;
                    if (c0 == c1)
                        C.info[c0].self_writhe +=
                            pc.tag == KTag::Over ? 1 : -1;
                    break;
                }
                case KTag::Gate:
                    for (std::size_t i = 0; i < pc.dirs.size(); ++i) {
                        KEnd e{(int)s, (int)p, (int)i, 0};
                        C.info[C.comp_of[e]].gate_passages.push_back(e);
                    }
                    break;
                default: break;
            }
        }
    return C;
}

}  // namespace kirby_detail

// Blackboard framing of the component containing the given piece endpoint.
inline int component_framing(const kirby_detail::CompInfo& c) {
    return c.curls + c.self_writhe;
}

// ---------------------------------------------------------------------------
// Normalization: canonical scheduling plus local simplification.
//
// The local steps are all sound diagram isotopies: second Reidemeister
// cancellation, curl-pair cancellation, snake (zigzag) straightening,
// first-Reidemeister kink-to-curl conversion, and extraction of closed
// crossing-free gate-free components into canonical circles appended on
// the right.  Each step strictly decreases (#crossings, #cups, #pieces)
// lexicographically or moves the diagram toward the scheduling normal
// form, so the loop terminates.

namespace kirby_detail {

inline bool all_strands(const KSlice& s) {
    for (const KPiece& p : s)
        if (p.tag != KTag::Strand) return false;
    return true;
}

// Earliest-slice scheduling: hoist a piece whose inputs all come from
// plain strands of the previous slice.
inline bool hoist_once(KirbyTangle& k) {
    for (std::size_t s = 1; s < k.slices.size(); ++s) {
        SliceLayout up = layout(k.slices[s - 1]);
        std::size_t pos = 0;
        for (std::size_t p = 0; p < k.slices[s].size(); ++p) {
            const KPiece& pc = k.slices[s][p];
            std::size_t ni = kin_labels(pc).size();
            bool movable = pc.tag != KTag::Strand;
            // The producing pieces must be consecutive plain strands (so
            // that the piece's inputs stay contiguous one slice up).
            int q0 = -1;
            for (std::size_t i = 0; i < ni && movable; ++i) {
                auto [q, qp] = up.out_at[pos + i];
                if (k.slices[s - 1][q].tag != KTag::Strand ||
                    (i == 0 ? (q0 = q, false) : q != q0 + (int)i))
                    movable = false;
            }
            std::size_t insert_at = 0;
            if (movable && ni == 0) {
                // A cup hoists only onto a boundary position that falls
                // exactly between two pieces of the slice above.
                std::size_t upos = 0, q = 0;
                for (; q < k.slices[s - 1].size() && upos < pos; ++q)
                    upos += kout_labels(k.slices[s - 1][q]).size();
                if (upos != pos)
                    movable = false;
                else
                    insert_at = q;
            }
            if (movable) {
                std::vector<int> outs = kout_labels(pc);
                KSlice na;
                for (std::size_t q = 0; q < k.slices[s - 1].size(); ++q) {
                    bool consumed =
                        ni > 0 && (int)q >= q0 && q < (std::size_t)q0 + ni;
                    if (ni == 0 && q == insert_at) na.push_back(pc);
                    if (consumed) {
                        if ((int)q == q0) na.push_back(pc);
                    } else {
                        na.push_back(k.slices[s - 1][q]);
                    }
                }
                if (ni == 0 && insert_at == k.slices[s - 1].size())
                    na.push_back(pc);
                KSlice ns;
                for (std::size_t q = 0; q < k.slices[s].size(); ++q) {
                    if (q == p)
                        for (int o : outs) ns.push_back(k_strand(o));
                    else
                        ns.push_back(k.slices[s][q]);
                }
                k.slices[s - 1] = std::move(na);
                k.slices[s] = std::move(ns);
                return true;
            }
            pos += ni;
        }
    }
    return false;
}

// Replace piece (s,p) by the given list (same strand span), in place.
inline void replace_piece(KirbyTangle& k, int s, int p,
                          const std::vector<KPiece>& with) {
    KSlice ns;
    for (std::size_t q = 0; q < k.slices[s].size(); ++q) {
        if ((int)q == p)
            for (const KPiece& w : with) ns.push_back(w);
        else
            ns.push_back(k.slices[s][q]);
    }
    k.slices[s] = std::move(ns);
}

inline bool adjacent_cancel(KirbyTangle& k) {
    for (std::size_t s = 0; s + 1 < k.slices.size(); ++s) {
        SliceLayout lo = layout(k.slices[s]);
        SliceLayout hi = layout(k.slices[s + 1]);
        std::size_t pos = 0;
        for (std::size_t p = 0; p < k.slices[s].size(); ++p) {
            const KPiece& a = k.slices[s][p];
            std::size_t no = kout_labels(a).size();
            // Which piece consumes output 0 of a (if any)?
            if (no >= 1 && pos < hi.in_at.size()) {
                auto [q, qp] = hi.in_at[pos];
                const KPiece& b = k.slices[s + 1][q];
                bool aligned = qp == 0 && kin_labels(b).size() == no;
                if (aligned) {
                    bool rr = (a.tag == KTag::Over && b.tag == KTag::Under) ||
                              (a.tag == KTag::Under && b.tag == KTag::Over);
                    bool cc = (a.tag == KTag::CurlP && b.tag == KTag::CurlM) ||
                              (a.tag == KTag::CurlM && b.tag == KTag::CurlP);
                    if (rr || cc) {
                        std::vector<KPiece> ids;
                        for (int o : kin_labels(a)) ids.push_back(k_strand(o));
                        std::vector<KPiece> idb;
                        for (int o : kout_labels(b)) idb.push_back(k_strand(o));
                        replace_piece(k, (int)s + 1, (int)q, idb);
                        replace_piece(k, (int)s, (int)p, ids);
                        return true;
                    }
                }
            }
            // Snake: Cup with exactly one leg consumed by a Cap whose other
            // input is a neighboring wire.
            if (a.tag == KTag::Cup) {
                // legs at positions pos, pos+1 of the next boundary.
                for (int leg = 0; leg < 2; ++leg) {
                    std::size_t lw = pos + leg;
                    if (lw >= hi.in_at.size()) continue;
                    auto [q, qp] = hi.in_at[lw];
                    const KPiece& b = k.slices[s + 1][q];
                    if (b.tag != KTag::Cap) continue;
                    // the cap's other input must not be the other leg
                    std::size_t other = qp == 0 ? lw + 1 : lw - 1;
                    std::size_t otherleg = pos + (1 - leg);
                    if (other == otherleg) continue;  // closed circle
                    // Delete both pieces.
                    KirbyTangle t = k;
                    replace_piece(t, (int)s + 1, (int)q, {});
                    replace_piece(t, (int)s, (int)p, {});
                    try {
                        typecheck_kirby(t);
                    } catch (const AdmissibilityError&) {
                        continue;  // pattern not actually straightenable
                    }
                    k = std::move(t);
                    return true;
                }
            }
            pos += no;
        }
    }
    return false;
}

// Walk along the curve from a crossing endpoint through simple pieces
// only (strands, curls, cups, caps).  Returns the endpoint where the walk
// stops (a crossing, a gate, or an open boundary end).
inline std::optional<KEnd> walk_simple(const KirbyTangle& k, const KWiring& w,
                                       KEnd e) {
    // e is an endpoint of a crossing; step across the adjoining wire first.
    int guard = 0;
    while (++guard < 100000) {
        // Cross the wire at this endpoint.
        KEnd nxt;
        if (e.side == 1) {
            // output of slice e.s: find its position, connect to slice e.s+1.
            const SliceLayout& L = w.lay[e.s];
            std::size_t q = 0;
            for (; q < L.out_at.size(); ++q)
                if (L.out_at[q] == std::make_pair(e.p, e.port)) break;
            if (e.s + 1 >= (int)k.slices.size()) return std::nullopt;  // open
            nxt = {e.s + 1, w.lay[e.s + 1].in_at[q].first,
                   w.lay[e.s + 1].in_at[q].second, 0};
        } else {
            const SliceLayout& L = w.lay[e.s];
            std::size_t q = 0;
            for (; q < L.in_at.size(); ++q)
                if (L.in_at[q] == std::make_pair(e.p, e.port)) break;
            if (e.s == 0) return std::nullopt;  // open at the top
            nxt = {e.s - 1, w.lay[e.s - 1].out_at[q].first,
                   w.lay[e.s - 1].out_at[q].second, 1};
        }
        const KPiece& pc = k.slices[nxt.s][nxt.p];
        if (pc.tag == KTag::Over || pc.tag == KTag::Under ||
            pc.tag == KTag::Gate)
            return nxt;
        // Continue through the simple piece.
        switch (pc.tag) {
            case KTag::Strand:
            case KTag::CurlP:
            case KTag::CurlM:
                e = {nxt.s, nxt.p, 0, nxt.side == 0 ? 1 : 0};
                break;
            case KTag::Cup:
                e = {nxt.s, nxt.p, nxt.port == 0 ? 1 : 0, 1};
                break;
            case KTag::Cap:
                e = {nxt.s, nxt.p, nxt.port == 0 ? 1 : 0, 0};
                break;
            default: return std::nullopt;
        }
    }
    return std::nullopt;
}

// First Reidemeister move: a crossing two of whose endpoints are joined by
// a simple arc is a kink; replace it by a curl on the through strand.
inline bool remove_kink(KirbyTangle& k) {
    KWiring w = wiring(k);
    for (std::size_t s = 0; s < k.slices.size(); ++s)
        for (std::size_t p = 0; p < k.slices[s].size(); ++p) {
            const KPiece& pc = k.slices[s][p];
            if (pc.tag != KTag::Over && pc.tag != KTag::Under) continue;
            if (pc.a != pc.b) continue;  // a kink's arc keeps one label
            for (int port = 0; port < 2; ++port)
                for (int side = 0; side < 2; ++side) {
                    std::optional<KEnd> r =
                        walk_simple(k, w, {(int)s, (int)p, port, side});
                    if (!r || r->s != (int)s || r->p != (int)p) continue;
                    if (r->port == port && r->side == side) continue;
                    // Same-side pairs (in0,in1), (out0,out1) and the two
                    // side pairs (in0,out0), (in1,out1) all mark a kink.
                    bool kink =
                        (r->side == side && r->port != port) ||
                        (r->side != side && r->port == port);
                    if (!kink) continue;
                    int lab = pc.a;
                    KPiece curl =
                        pc.tag == KTag::Over ? k_curlp(lab) : k_curlm(lab);
                    replace_piece(k, (int)s, (int)p, {curl, k_strand(lab)});
                    return true;
                }
        }
    return false;
}

// Delete every piece of the given component (which must contain no
// crossings and no gate passages), by piece identity.
inline void delete_component(KirbyTangle& k, const std::set<std::pair<int, int>>& owned) {
    std::vector<KSlice> ns;
    for (std::size_t s = 0; s < k.slices.size(); ++s) {
        KSlice row;
        for (std::size_t p = 0; p < k.slices[s].size(); ++p)
            if (!owned.count({(int)s, (int)p})) row.push_back(k.slices[s][p]);
        ns.push_back(std::move(row));
    }
    k.slices = std::move(ns);
}

inline KirbyTangle canonical_circle(int n, int label, int curls) {
    KirbyTangle c;
    c.n = n;
    c.slices.push_back({k_cup(label)});
    for (int i = 0; i < std::abs(curls); ++i)
        c.slices.push_back(
            {curls > 0 ? k_curlp(label) : k_curlm(label), k_strand(label)});
    c.slices.push_back({k_cap(label)});
    return c;
}

// Extract closed, crossing-free, gate-free components and re-append them
// as canonical circles, sorted for determinism.
inline bool extract_circles(KirbyTangle& k,
                            std::vector<std::pair<int, int>>& found) {
    Components C = components(k);
    bool any = false;
    std::vector<std::set<std::pair<int, int>>> owned(C.info.size());
    std::vector<int> label_of(C.info.size(), 0);
    for (const auto& [e, c] : C.comp_of) {
        owned[c].insert({e.s, e.p});
        const KPiece& pc = k.slices[e.s][e.p];
        label_of[c] = pc.a;
    }
    for (std::size_t c = 0; c < C.info.size(); ++c) {
        const CompInfo& ci = C.info[c];
        if (!ci.closed || ci.crossing_ends || !ci.gate_passages.empty())
            continue;
        if (owned[c].empty()) continue;
        found.push_back({label_of[c], ci.curls});
        delete_component(k, owned[c]);
        any = true;
        break;  // wiring changed; caller loops
    }
    return any;
}

}  // namespace kirby_detail

inline KirbyTangle normalize(const KirbyTangle& k) {
    using namespace kirby_detail;
    KirbyTangle cur = k;
    std::vector<std::pair<int, int>> circles;
    bool changed = true;
    while (changed) {
        changed = false;
        while (hoist_once(cur)) changed = true;
        std::vector<KSlice> kept;
        for (KSlice& s : cur.slices)
            if (!all_strands(s)) kept.push_back(std::move(s));
        if (kept.size() != cur.slices.size()) changed = true;
        cur.slices = std::move(kept);
        if (adjacent_cancel(cur)) {
            changed = true;
            continue;
        }
        if (remove_kink(cur)) {
            changed = true;
            continue;
        }
        if (extract_circles(cur, circles)) {
            changed = true;
            continue;
        }
    }
    std::sort(circles.begin(), circles.end());
    for (auto [lab, curls] : circles)
        cur = ktensor(cur, canonical_circle(cur.n, lab, curls));
    while (kirby_detail::hoist_once(cur)) {
    }
    std::vector<KSlice> kept;
    for (KSlice& s : cur.slices)
        if (!kirby_detail::all_strands(s)) kept.push_back(std::move(s));
    cur.slices = std::move(kept);
    return cur;
}

}  // namespace hopfg
