#ifndef HOPFG_TERM_HPP
#define HOPFG_TERM_HPP

// The typed term language: object words, elementary generator boxes, and
// terms in circuit form (a list of layers, each layer a tensor word of boxes
// and identity wires).  Includes type checking, composition, tensor product,
// closedness/completeness tests, relabeling along groupoid functors, and a
// canonical form under exchange of boxes acting on disjoint wires.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfg/groupoid.hpp"

namespace hopfg {

using ObjectWord = std::vector<Arrow>;  // entry g denotes the object H_g

inline std::string to_string(const ObjectWord& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += to_string(w[i]);
    }
    return s + "]";
}

enum class GenTag : uint8_t {
    Id,          // H_g -> H_g
    Braid,       // H_g x H_h -> H_h x H_g           (positive crossing)
    BraidInv,    // H_g x H_h -> H_h x H_g           (negative crossing)
    Comul,       // H_g -> H_g x H_g
    Counit,      // H_g -> 1
    Mul,         // H_g x H_h -> H_gh   (tgt g = src h)
    Unit,        // 1 -> H_{1_i}
    Antipode,    // H_g -> H_{g^-1}
    AntipodeInv, // H_g -> H_{g^-1}
    Cointegral,  // H_{1_i} -> 1
    Integral,    // 1 -> H_g
    Ribbon,      // H_g -> H_g
    RibbonInv,   // H_g -> H_g
    Copair,      // 1 -> H_{1_i} x H_{1_j}
};

inline const char* tag_name(GenTag t) {
    switch (t) {
        case GenTag::Id: return "id";
        case GenTag::Braid: return "braid";
        case GenTag::BraidInv: return "braidinv";
        case GenTag::Comul: return "comul";
        case GenTag::Counit: return "counit";
        case GenTag::Mul: return "mul";
        case GenTag::Unit: return "unit";
        case GenTag::Antipode: return "antipode";
        case GenTag::AntipodeInv: return "antipodeinv";
        case GenTag::Cointegral: return "cointegral";
        case GenTag::Integral: return "integral";
        case GenTag::Ribbon: return "ribbon";
        case GenTag::RibbonInv: return "ribboninv";
        case GenTag::Copair: return "copair";
    }
    return "?";
}

struct TypeError : std::runtime_error {
    explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

// One elementary box.  `a` is the principal arrow argument; `b` is used by
// the two-argument tags (Braid, BraidInv, Mul, Copair).  Unit(i),
// Cointegral(i) and Copair(i,j) store their object arguments as identity
// arrows.
struct Gen {
    GenTag tag = GenTag::Id;
    Arrow a{0, 0};
    Arrow b{0, 0};

    friend bool operator==(const Gen&, const Gen&) = default;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

inline Gen g_id(Arrow g) { return Gen{GenTag::Id, g, {}}; }
inline Gen g_braid(Arrow g, Arrow h) { return Gen{GenTag::Braid, g, h}; }
inline Gen g_braidinv(Arrow g, Arrow h) { return Gen{GenTag::BraidInv, g, h}; }
inline Gen g_comul(Arrow g) { return Gen{GenTag::Comul, g, {}}; }
inline Gen g_counit(Arrow g) { return Gen{GenTag::Counit, g, {}}; }
inline Gen g_mul(Arrow g, Arrow h) { return Gen{GenTag::Mul, g, h}; }
inline Gen g_unit(int i) { return Gen{GenTag::Unit, identity_arrow(i), {}}; }
inline Gen g_antipode(Arrow g) { return Gen{GenTag::Antipode, g, {}}; }
inline Gen g_antipodeinv(Arrow g) { return Gen{GenTag::AntipodeInv, g, {}}; }
inline Gen g_cointegral(int i) {
    return Gen{GenTag::Cointegral, identity_arrow(i), {}};
}
inline Gen g_integral(Arrow g) { return Gen{GenTag::Integral, g, {}}; }
inline Gen g_ribbon(Arrow g) { return Gen{GenTag::Ribbon, g, {}}; }
inline Gen g_ribboninv(Arrow g) { return Gen{GenTag::RibbonInv, g, {}}; }
inline Gen g_copair(int i, int j) {
    return Gen{GenTag::Copair, identity_arrow(i), identity_arrow(j)};
}

// Whether the `b` field of a box carries an argument (it is a placeholder
// for the other tags and must stay {0,0} so that box equality is exact).
inline bool gen_uses_b(GenTag t) {
    return t == GenTag::Braid || t == GenTag::BraidInv || t == GenTag::Mul ||
           t == GenTag::Copair;
}

// Typing rules.  Throws TypeError on malformed boxes (non-composable Mul,
// non-identity arguments where objects are required).
inline ObjectWord gen_in(const Gen& g) {
    switch (g.tag) {
        case GenTag::Id: return {g.a};
        case GenTag::Braid:
        case GenTag::BraidInv: return {g.a, g.b};
        case GenTag::Comul: return {g.a};
        case GenTag::Counit: return {g.a};
        case GenTag::Mul: return {g.a, g.b};
        case GenTag::Unit: return {};
        case GenTag::Antipode:
        case GenTag::AntipodeInv: return {g.a};
        case GenTag::Cointegral: return {g.a};
        case GenTag::Integral: return {};
        case GenTag::Ribbon:
        case GenTag::RibbonInv: return {g.a};
        case GenTag::Copair: return {};
    }
    return {};
}

inline ObjectWord gen_out(const Gen& g) {
    switch (g.tag) {
        case GenTag::Id: return {g.a};
        case GenTag::Braid:
        case GenTag::BraidInv: return {g.b, g.a};
        case GenTag::Comul: return {g.a, g.a};
        case GenTag::Counit: return {};
        case GenTag::Mul:
            if (g.a.tgt != g.b.src)
                throw TypeError("mul of non-composable arrows " +
                                to_string(g.a) + ", " + to_string(g.b));
            return {Arrow{g.a.src, g.b.tgt}};
        case GenTag::Unit:
            if (!g.a.is_identity()) throw TypeError("unit needs an object");
            return {g.a};
        case GenTag::Antipode:
        case GenTag::AntipodeInv: return {g.a.inv()};
        case GenTag::Cointegral:
            if (!g.a.is_identity())
                throw TypeError("cointegral needs an object");
            return {};
        case GenTag::Integral: return {g.a};
        case GenTag::Ribbon:
        case GenTag::RibbonInv: return {g.a};
        case GenTag::Copair:
            if (!g.a.is_identity() || !g.b.is_identity())
                throw TypeError("copair needs two objects");
            return {g.a, g.b};
    }
    return {};
}

inline std::string to_string(const Gen& g) {
    std::string s = tag_name(g.tag);
    ObjectWord in = gen_in(g);
    switch (g.tag) {
        case GenTag::Unit:
        case GenTag::Cointegral:
            s += "(" + std::to_string(g.a.src) + ")";
            break;
        case GenTag::Copair:
            s += "(" + std::to_string(g.a.src) + "," +
                 std::to_string(g.b.src) + ")";
            break;
        case GenTag::Braid:
        case GenTag::BraidInv:
        case GenTag::Mul:
            s += to_string(g.a) + to_string(g.b);
            break;
        default:
            s += to_string(g.a);
            break;
    }
    (void)in;
    return s;
}

using Layer = std::vector<Gen>;  // tensor word of boxes, left to right

inline ObjectWord layer_in(const Layer& L) {
    ObjectWord w;
    for (const Gen& g : L) {
        ObjectWord gi = gen_in(g);
        w.insert(w.end(), gi.begin(), gi.end());
    }
    return w;
}
inline ObjectWord layer_out(const Layer& L) {
    ObjectWord w;
    for (const Gen& g : L) {
        ObjectWord go = gen_out(g);
        w.insert(w.end(), go.begin(), go.end());
    }
    return w;
}

// A term: source word plus a stack of layers.  The `objects` field names the
// ambient groupoid (a full subgroupoid of some pair groupoid); every arrow in
// the term must live there.
struct Term {
    std::vector<int> objects;  // sorted object set of the ambient groupoid
    ObjectWord src;
    std::vector<Layer> layers;

    friend bool operator==(const Term&, const Term&) = default;
};

inline GroupoidSpec groupoid_of(const Term& t) {
    return GroupoidSpec(t.objects);
}

// Full type check: every arrow valid, every layer boundary coherent.
// Returns (source, target).
inline std::pair<ObjectWord, ObjectWord> typecheck(const Term& t) {
    GroupoidSpec G = groupoid_of(t);
    auto check_word = [&](const ObjectWord& w) {
        for (const Arrow& a : w) G.require_arrow(a);
    };
    check_word(t.src);
    ObjectWord cur = t.src;
    for (size_t k = 0; k < t.layers.size(); ++k) {
        const Layer& L = t.layers[k];
        for (const Gen& g : L) {
            check_word(gen_in(g));
            check_word(gen_out(g));
        }
        ObjectWord in = layer_in(L);
        if (in != cur)
            throw TypeError("layer " + std::to_string(k) + " expects " +
                            to_string(in) + " but gets " + to_string(cur));
        cur = layer_out(L);
    }
    return {t.src, cur};
}

inline ObjectWord target_of(const Term& t) {
    ObjectWord cur = t.src;
    for (const Layer& L : t.layers) cur = layer_out(L);
    return cur;
}

// ---- Constructors -------------------------------------------------------

inline Term identity_term(std::vector<int> objects, ObjectWord w) {
    Term t;
    t.objects = std::move(objects);
    t.src = std::move(w);
    return t;
}

inline Term term_of(std::vector<int> objects, const Gen& g) {
    Term t;
    t.objects = std::move(objects);
    t.src = gen_in(g);
    t.layers.push_back({g});
    return t;
}

inline Term term_of_layers(std::vector<int> objects, ObjectWord src,
                           std::vector<Layer> layers) {
    Term t;
    t.objects = std::move(objects);
    t.src = std::move(src);
    t.layers = std::move(layers);
    return t;
}

inline std::vector<int> merge_objects(const std::vector<int>& a,
                                      const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Diagrammatic composition: f first, then g.  Requires target(f)==source(g).
inline Term compose(const Term& f, const Term& g) {
    ObjectWord mid = target_of(f);
    if (mid != g.src)
        throw TypeError("compose: boundary mismatch " + to_string(mid) +
                        " vs " + to_string(g.src));
    Term t;
    t.objects = merge_objects(f.objects, g.objects);
    t.src = f.src;
    t.layers = f.layers;
    t.layers.insert(t.layers.end(), g.layers.begin(), g.layers.end());
    return t;
}

inline Layer id_layer(const ObjectWord& w) {
    Layer L;
    for (const Arrow& a : w) L.push_back(g_id(a));
    return L;
}

// Tensor product: side-by-side juxtaposition.  Layers are padded with
// identity wires so both factors have the same height.
inline Term tensor(const Term& f, const Term& g) {
    Term t;
    t.objects = merge_objects(f.objects, g.objects);
    t.src = f.src;
    t.src.insert(t.src.end(), g.src.begin(), g.src.end());
    size_t h = std::max(f.layers.size(), g.layers.size());
    ObjectWord fw = f.src, gw = g.src;
    for (size_t k = 0; k < h; ++k) {
        Layer L;
        if (k < f.layers.size()) {
            const Layer& fl = f.layers[k];
            L.insert(L.end(), fl.begin(), fl.end());
            fw = layer_out(fl);
        } else {
            Layer idl = id_layer(fw);
            L.insert(L.end(), idl.begin(), idl.end());
        }
        if (k < g.layers.size()) {
            const Layer& gl = g.layers[k];
            L.insert(L.end(), gl.begin(), gl.end());
            gw = layer_out(gl);
        } else {
            Layer idl = id_layer(gw);
            L.insert(L.end(), idl.begin(), idl.end());
        }
        t.layers.push_back(std::move(L));
    }
    return t;
}

inline bool is_closed(const Term& t) {
    return t.src.empty() && target_of(t).empty();
}

inline std::vector<Arrow> arrow_labels(const Term& t) {
    std::set<Arrow> labels;
    auto add_word = [&](const ObjectWord& w) {
        for (const Arrow& a : w) labels.insert(a);
    };
    add_word(t.src);
    for (const Layer& L : t.layers)
        for (const Gen& g : L) {
            add_word(gen_in(g));
            add_word(gen_out(g));
        }
    return std::vector<Arrow>(labels.begin(), labels.end());
}

inline bool is_complete(const Term& t, const GroupoidSpec& G) {
    return generates(arrow_labels(t), G);
}

// Relabel a term along an object map (a groupoid functor of pair groupoids
// is determined by its object map).  The map must be injective on the
// objects actually used unless `allow_collapse` is set (the relabeling
// functor of a reduction step does collapse k0 onto i0 by design).
template <class ObjMap>
Term map_objects(const Term& t, std::vector<int> new_objects, ObjMap f,
                 bool allow_collapse = false) {
    if (!allow_collapse) {
        std::map<int, int> seen;
        for (int o : t.objects) {
            auto [it, fresh] = seen.emplace(f(o), o);
            if (!fresh && it->second != o)
                throw TypeError("object map not injective");
        }
    }
    auto fa = [&](Arrow a) { return Arrow{f(a.src), f(a.tgt)}; };
    Term out;
    out.objects = std::move(new_objects);
    out.src.reserve(t.src.size());
    for (const Arrow& a : t.src) out.src.push_back(fa(a));
    out.layers.reserve(t.layers.size());
    for (const Layer& L : t.layers) {
        Layer M;
        M.reserve(L.size());
        for (const Gen& g : L)
            M.push_back(Gen{g.tag, fa(g.a),
                            gen_uses_b(g.tag) ? fa(g.b) : Arrow{0, 0}});
        out.layers.push_back(std::move(M));
    }
    return out;
}

// push_functor: relabel along a functor injective on objects, given as an
// object map into a target groupoid.
inline Term push_functor(const Term& t, const GroupoidSpec& target,
                         const std::map<int, int>& obj_map) {
    auto f = [&](int o) {
        auto it = obj_map.find(o);
        if (it == obj_map.end())
            throw TypeError("push_functor: object " + std::to_string(o) +
                            " unmapped");
        target.require_object(it->second);
        return it->second;
    };
    return map_objects(t, target.objects, f, /*allow_collapse=*/false);
}

// ---- Canonical form -----------------------------------------------------
//
// Two circuits that differ only by exchanging boxes acting on disjoint wire
// intervals denote the same morphism.  The canonical form schedules every
// box as early as possible ("ASAP"): each box sits at its dependency depth,
// and within a layer boxes are ordered by wire position.  The procedure is
// idempotent and stable.

namespace detail {

// Try to move box `bi` of layer k+1 into layer k.  Possible iff every wire
// the box consumes is produced by an Id box in layer k.  Returns true if a
// move happened.
inline bool hoist_one(std::vector<Layer>& layers, size_t k) {
    Layer& lo = layers[k];
    Layer& hi = layers[k + 1];
    // Compute for each box of `hi` the interval of `lo`-boxes feeding it.
    // lo outputs are consumed in order by hi inputs.
    std::vector<size_t> out_owner;  // for each output wire of lo: box index
    for (size_t b = 0; b < lo.size(); ++b) {
        size_t n = gen_out(lo[b]).size();
        for (size_t i = 0; i < n; ++i) out_owner.push_back(b);
    }
    size_t wire = 0;
    for (size_t bi = 0; bi < hi.size(); ++bi) {
        const Gen& box = hi[bi];
        size_t nin = gen_in(box).size();
        if (box.tag != GenTag::Id) {
            bool movable = true;
            for (size_t i = 0; i < nin; ++i) {
                if (lo[out_owner[wire + i]].tag != GenTag::Id) movable = false;
                // The feeding Id boxes must be contiguous in lo: a
                // zero-output box between them blocks the exchange (the
                // consumed wires are not adjacent at lo's input boundary).
                if (i > 0 && out_owner[wire + i] != out_owner[wire] + i)
                    movable = false;
            }
            // A no-input box can only slide up if it sits on a boundary
            // between output groups of lo (not between two outputs of one
            // multi-output box).
            if (nin == 0 && wire > 0 && wire < out_owner.size() &&
                out_owner[wire - 1] == out_owner[wire])
                movable = false;
            // A box with no inputs attaches to a position between wires; it
            // can always be hoisted (placed relative to the wire to its
            // left).  For nin==0 find the insertion point in lo.
            if (movable) {
                // Build new lo: replace the consumed Id boxes by `box`;
                // build new hi: replace `box` by Id wires on its outputs.
                Layer nlo, nhi;
                if (nin > 0) {
                    size_t first_box = out_owner[wire];
                    for (size_t b = 0; b < lo.size(); ++b) {
                        if (b == first_box) nlo.push_back(box);
                        if (b >= first_box && b < first_box + nin) continue;
                        nlo.push_back(lo[b]);
                    }
                } else {
                    // Insertion point: after the lo box producing wire-1,
                    // i.e. before the lo box producing `wire` (or at end).
                    size_t pos = wire < out_owner.size()
                                     ? out_owner[wire]
                                     : lo.size();
                    for (size_t b = 0; b <= lo.size(); ++b) {
                        if (b == pos) nlo.push_back(box);
                        if (b < lo.size()) nlo.push_back(lo[b]);
                    }
                }
                for (size_t bj = 0; bj < hi.size(); ++bj) {
                    if (bj == bi) {
                        for (const Arrow& a : gen_out(box))
                            nhi.push_back(g_id(a));
                    } else {
                        nhi.push_back(hi[bj]);
                    }
                }
                lo = std::move(nlo);
                hi = std::move(nhi);
                return true;
            }
        }
        wire += nin;
    }
    return false;
}

}  // namespace detail

// Canonical form under exchange of boxes on disjoint wires: hoist every box
// as early as possible, drop layers consisting only of identity wires.
inline Term normalize_exchange(const Term& t) {
    Term out = t;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < out.layers.size(); ++k)
            while (detail::hoist_one(out.layers, k)) changed = true;
        std::vector<Layer> kept;
        for (const Layer& L : out.layers) {
            bool all_id = true;
            for (const Gen& g : L)
                if (g.tag != GenTag::Id) all_id = false;
            if (!all_id) kept.push_back(L);
        }
        if (kept.size() != out.layers.size()) {
            out.layers = std::move(kept);
            changed = true;
        }
    }
    return out;
}

// Stable text serialization of the canonical form (used for hashing and
// golden files).
inline std::string print_term(const Term& t) {
    std::ostringstream os;
    os << "objects";
    for (int o : t.objects) os << " " << o;
    os << "\nsrc " << to_string(t.src) << "\n";
    for (const Layer& L : t.layers) {
        os << "| ";
        for (size_t i = 0; i < L.size(); ++i) {
            if (i) os << " ";
            os << to_string(L[i]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace hopfg

#endif  // HOPFG_TERM_HPP
