#ifndef HOPFG_GROUPOID_HPP
#define HOPFG_GROUPOID_HPP

// Finite groupoids with one arrow between every ordered pair of objects,
// full subgroupoids thereof, arrow relabeling along a chosen arrow, and
// the generation test used to define completeness of labeled diagrams.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfg {

// An arrow src -> tgt.  In the groupoids used here (the pair groupoid on a
// finite object set and its full subgroupoids) an arrow is determined by its
// endpoints, so this pair is the whole datum.
struct Arrow {
    int src = 0;
    int tgt = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;

    bool is_identity() const { return src == tgt; }
    Arrow inv() const { return Arrow{tgt, src}; }
};

inline Arrow identity_arrow(int obj) { return Arrow{obj, obj}; }

inline std::string to_string(const Arrow& a) {
    return "(" + std::to_string(a.src) + "," + std::to_string(a.tgt) + ")";
}

// A pair groupoid on an explicit finite object set: one arrow (i,j) for each
// ordered pair of objects, composition (i,j)(j,k) = (i,k), inverse by swap.
// Full subgroupoids are represented by restricting the object set.
struct GroupoidSpec {
    std::vector<int> objects;  // sorted, unique

    GroupoidSpec() = default;
    explicit GroupoidSpec(std::vector<int> objs) : objects(std::move(objs)) {
        std::sort(objects.begin(), objects.end());
        objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
        if (objects.empty())
            throw std::invalid_argument("groupoid needs at least one object");
    }

    bool has_object(int o) const {
        return std::binary_search(objects.begin(), objects.end(), o);
    }
    bool has_arrow(const Arrow& a) const {
        return has_object(a.src) && has_object(a.tgt);
    }

    std::vector<Arrow> arrows() const {
        std::vector<Arrow> out;
        out.reserve(objects.size() * objects.size());
        for (int i : objects)
            for (int j : objects) out.push_back(Arrow{i, j});
        return out;
    }

    Arrow identity(int obj) const {
        require_object(obj);
        return identity_arrow(obj);
    }

    Arrow inverse(const Arrow& a) const {
        require_arrow(a);
        return a.inv();
    }

    // compose(g,h) is defined iff tgt(g) == src(h); then (i,j)(j,k) = (i,k).
    std::optional<Arrow> compose(const Arrow& g, const Arrow& h) const {
        require_arrow(g);
        require_arrow(h);
        if (g.tgt != h.src) return std::nullopt;
        return Arrow{g.src, h.tgt};
    }

    // Full subgroupoid on all objects except `removed`.
    GroupoidSpec without_object(int removed) const {
        std::vector<int> objs;
        for (int o : objects)
            if (o != removed) objs.push_back(o);
        return GroupoidSpec(objs);
    }

    friend bool operator==(const GroupoidSpec&, const GroupoidSpec&) = default;

    void require_object(int o) const {
        if (!has_object(o))
            throw std::invalid_argument("object " + std::to_string(o) +
                                        " not in groupoid");
    }
    void require_arrow(const Arrow& a) const {
        if (!has_arrow(a))
            throw std::invalid_argument("arrow " + to_string(a) +
                                        " not in groupoid");
    }
};

// The canonical family: objects {1..n}.
inline GroupoidSpec make_Gn(int n) {
    if (n < 1) throw std::invalid_argument("make_Gn requires n >= 1");
    std::vector<int> objs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) objs[static_cast<size_t>(i)] = i + 1;
    return GroupoidSpec(std::move(objs));
}

// Relabeling along a base arrow x: i0 -> k0.  On objects: k0 |-> i0, other
// objects fixed.  On arrows:
//   g in G(k0,k0)        |-> x g x^-1
//   g in G(k0,l), l!=k0  |-> x g
//   g in G(j,k0), j!=k0  |-> g x^-1
//   otherwise            |-> g
// In a pair groupoid all four cases amount to applying the object map to both
// endpoints, which is how `apply` computes them; the case split is kept in
// `case_of` for tests and documentation.
struct LabelMap {
    Arrow x;  // base arrow i0 -> k0

    int i0() const { return x.src; }
    int k0() const { return x.tgt; }

    int apply_object(int o) const { return o == k0() ? i0() : o; }

    Arrow apply(const Arrow& g) const {
        return Arrow{apply_object(g.src), apply_object(g.tgt)};
    }

    enum class Case { ConjugateByX, LeftMultiplyX, RightMultiplyXInv, Fixed };
    Case case_of(const Arrow& g) const {
        const bool s = (g.src == k0()), t = (g.tgt == k0());
        if (s && t) return Case::ConjugateByX;
        if (s) return Case::LeftMultiplyX;
        if (t) return Case::RightMultiplyXInv;
        return Case::Fixed;
    }
};

inline LabelMap relabel(const Arrow& x) { return LabelMap{x}; }

// True iff the closure of `labels` together with all identities under
// composition and inverse is the whole of G.  For a pair groupoid this is
// connectivity of the graph on objects whose edges are the labels.
inline bool generates(const std::vector<Arrow>& labels, const GroupoidSpec& G) {
    for (const Arrow& a : labels) G.require_arrow(a);
    if (G.objects.size() <= 1) return true;
    // Union-find over objects.
    std::vector<int> parent(G.objects.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto index_of = [&](int o) {
        auto it = std::lower_bound(G.objects.begin(), G.objects.end(), o);
        return static_cast<int>(it - G.objects.begin());
    };
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    for (const Arrow& a : labels) {
        int ra = find(index_of(a.src)), rb = find(index_of(a.tgt));
        if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
    }
    int root = find(0);
    for (size_t i = 1; i < G.objects.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

}  // namespace hopfg

#endif  // HOPFG_GROUPOID_HPP
