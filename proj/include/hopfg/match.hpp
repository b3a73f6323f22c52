#ifndef HOPFG_MATCH_HPP
#define HOPFG_MATCH_HPP

// Pattern matching modulo layer exchange, rule application, traces, and
// bounded bidirectional equivalence search.
//
// A match anchors a rule schema at a wire interval of the canonical form of
// the subject term: starting at a layer boundary and an entry offset, the
// window of following layers is walked, classifying each box as left of the
// interval, inside it, or right of it; straddling boxes kill the candidate.
// The boxes classified inside, extracted and canonicalized, must reproduce
// the schema under a consistent assignment of its object metavariables.
// Application replaces the inside boxes by the instantiated other side of
// the rule, keeping the outside boxes in place.  All addresses (layer,
// offset) refer to the canonical form produced by normalize_exchange.

#include <deque>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfg/rules.hpp"
#include "hopfg/term.hpp"

namespace hopfg {

struct Match {
    std::string rule;
    int dir = +1;    // +1: lhs -> rhs, -1: rhs -> lhs
    int layer = 0;   // anchor layer boundary in the canonical form
    int offset = 0;  // entry wire offset at that boundary
    std::vector<int> assign;  // metavariable -> object
    // Reconstruction data (not serialized): window length in layers and the
    // per-layer classification of each box (0 left, 1 inside, 2 right).
    int window = 0;
    std::vector<std::vector<int>> cls;

    friend bool operator==(const Match&, const Match&) = default;
};

struct StaleMatch : std::runtime_error {
    explicit StaleMatch(const std::string& w) : std::runtime_error(w) {}
};

namespace match_detail {

inline int box_count(const Term& t) {
    int n = 0;
    for (const Layer& L : t.layers)
        for (const Gen& g : L)
            if (g.tag != GenTag::Id) ++n;
    return n;
}

inline std::vector<ObjectWord> boundary_words(const Term& s) {
    std::vector<ObjectWord> w;
    w.push_back(s.src);
    ObjectWord cur = s.src;
    for (const Layer& L : s.layers) {
        cur = layer_out(L);
        w.push_back(cur);
    }
    return w;
}

struct WalkOut {
    int window = 0;
    std::vector<std::vector<int>> cls;
    Term extracted;
};

// Enumerate all ways to carve a convex sub-circuit with `boxes_needed`
// non-identity boxes out of `s`, entering at layer boundary `a` on the wire
// interval [lo0, lo0+w0).  Scalar boxes sitting exactly on an interval edge
// are ambiguous and branch.
inline void walk(const Term& s, size_t a, size_t lo0, size_t w0,
                 int boxes_needed, const ObjectWord& entry,
                 std::vector<WalkOut>& out) {
    std::vector<std::vector<int>> cls;
    std::vector<Layer> exlayers;
    std::function<void(size_t, size_t, size_t, int)> layer_rec =
        [&](size_t layer, size_t lo, size_t hi, int have) {
            if (have == boxes_needed) {
                out.push_back(
                    WalkOut{static_cast<int>(layer - a), cls,
                            term_of_layers(s.objects, entry, exlayers)});
                return;  // stop at the earliest completion
            }
            if (layer >= s.layers.size()) return;
            const Layer& L = s.layers[layer];
            std::vector<int> c(L.size(), -1);
            std::function<void(size_t, size_t, int)> box_rec =
                [&](size_t bi, size_t wire, int cnt) {
                    if (bi == L.size()) {
                        size_t nlo = 0, wi = 0;
                        Layer ex;
                        for (size_t j = 0; j < L.size(); ++j) {
                            size_t ow = gen_out(L[j]).size();
                            if (c[j] == 0) {
                                nlo += ow;
                            } else if (c[j] == 1) {
                                wi += ow;
                                ex.push_back(L[j]);
                            }
                        }
                        cls.push_back(c);
                        exlayers.push_back(std::move(ex));
                        layer_rec(layer + 1, nlo, nlo + wi, cnt);
                        exlayers.pop_back();
                        cls.pop_back();
                        return;
                    }
                    const Gen& box = L[bi];
                    size_t nin = gen_in(box).size();
                    auto with = [&](int k, int dc) {
                        c[bi] = k;
                        box_rec(bi + 1, wire + nin, cnt + dc);
                        c[bi] = -1;
                    };
                    if (nin == 0) {
                        // A source box attaches between wires at `wire`.
                        if (wire < lo) {
                            with(0, 0);
                        } else if (wire > hi) {
                            with(2, 0);
                        } else if (wire > lo && wire < hi) {
                            if (cnt < boxes_needed) with(1, 1);
                        } else if (lo == hi) {
                            with(0, 0);
                            if (cnt < boxes_needed) with(1, 1);
                            with(2, 0);
                        } else if (wire == lo) {
                            with(0, 0);
                            if (cnt < boxes_needed) with(1, 1);
                        } else {  // wire == hi
                            if (cnt < boxes_needed) with(1, 1);
                            with(2, 0);
                        }
                    } else {
                        if (wire + nin <= lo) {
                            with(0, 0);
                        } else if (wire >= hi) {
                            with(2, 0);
                        } else if (wire >= lo && wire + nin <= hi) {
                            if (box.tag == GenTag::Id)
                                with(1, 0);
                            else if (cnt < boxes_needed)
                                with(1, 1);
                        }
                        // else: straddles the interval edge — dead end
                    }
                };
            box_rec(0, 0, have);
        };
    layer_rec(a, lo0, lo0 + w0, 0);
}

struct Unifier {
    std::vector<int> assign;  // -1 = unbound
    explicit Unifier(int nvars)
        : assign(static_cast<size_t>(nvars), -1) {}
    bool bind(int var, int val) {
        int& slot = assign.at(static_cast<size_t>(var));
        if (slot == -1) {
            slot = val;
            return true;
        }
        return slot == val;
    }
    bool arrow(Arrow pat, Arrow sub) {
        return bind(pat.src, sub.src) && bind(pat.tgt, sub.tgt);
    }
};

// Unify the canonical extracted sub-circuit against the canonical schema.
inline bool unify_terms(const Term& pat, const Term& sub, Unifier& u) {
    if (pat.src.size() != sub.src.size()) return false;
    for (size_t i = 0; i < pat.src.size(); ++i)
        if (!u.arrow(pat.src[i], sub.src[i])) return false;
    if (pat.layers.size() != sub.layers.size()) return false;
    for (size_t k = 0; k < pat.layers.size(); ++k) {
        const Layer& P = pat.layers[k];
        const Layer& S = sub.layers[k];
        if (P.size() != S.size()) return false;
        for (size_t j = 0; j < P.size(); ++j) {
            if (P[j].tag != S[j].tag) return false;
            if (!u.arrow(P[j].a, S[j].a)) return false;
            if (gen_uses_b(P[j].tag) && !u.arrow(P[j].b, S[j].b))
                return false;
        }
    }
    return true;
}

// Quick reject: the multiset of non-identity tags of the pattern must be
// contained in that of the subject.
inline bool tags_feasible(const Term& pat, const Term& sub) {
    std::map<GenTag, int> need, have;
    for (const Layer& L : pat.layers)
        for (const Gen& g : L)
            if (g.tag != GenTag::Id) ++need[g.tag];
    if (need.empty()) return true;
    for (const Layer& L : sub.layers)
        for (const Gen& g : L)
            if (g.tag != GenTag::Id) ++have[g.tag];
    for (const auto& [tag, n] : need)
        if (have[tag] < n) return false;
    return true;
}

}  // namespace match_detail

// All matches of one direction of a rule in (the canonical form of) `t`,
// in a deterministic order.
namespace match_detail {
inline Term do_apply(const Term& s, const Rule& r, const Match& m);
}  // namespace match_detail

inline std::vector<Match> find_matches(const Term& t, const Rule& r,
                                       int dir = +1) {
    using namespace match_detail;
    Term s = normalize_exchange(t);
    const Term& P = dir > 0 ? r.lhs : r.rhs;
    std::vector<Match> out;
    if (!tags_feasible(P, s)) return out;
    int B = box_count(P);
    size_t w0 = P.src.size();
    std::vector<ObjectWord> bw = boundary_words(s);
    for (size_t a = 0; a <= s.layers.size(); ++a) {
        const ObjectWord& W = bw[a];
        if (W.size() < w0) continue;
        for (size_t p = 0; p + w0 <= W.size(); ++p) {
            ObjectWord entry(W.begin() + static_cast<long>(p),
                             W.begin() + static_cast<long>(p + w0));
            std::vector<WalkOut> walks;
            walk(s, a, p, w0, B, entry, walks);
            for (const WalkOut& w : walks) {
                Term E = normalize_exchange(w.extracted);
                Unifier u(r.nvars);
                if (!unify_terms(P, E, u)) continue;
                // Enumerate objects for metavariables the pattern leaves
                // free (they occur only on the replacement side).
                std::vector<size_t> free_vars;
                for (size_t v = 0; v < u.assign.size(); ++v)
                    if (u.assign[v] == -1) free_vars.push_back(v);
                std::vector<size_t> choice(free_vars.size(), 0);
                while (true) {
                    std::vector<int> assign = u.assign;
                    for (size_t i = 0; i < free_vars.size(); ++i)
                        assign[free_vars[i]] =
                            s.objects[choice[i]];
                    if (assignment_admissible(r, assign)) {
                        bool ok = true;
                        try {
                            const Term& R = dir > 0 ? r.rhs : r.lhs;
                            (void)typecheck(
                                instantiate(R, assign, s.objects));
                        } catch (const TypeError&) {
                            ok = false;
                        }
                        if (ok) {
                            Match m;
                            m.rule = r.id;
                            m.dir = dir;
                            m.layer = static_cast<int>(a);
                            m.offset = static_cast<int>(p);
                            m.assign = std::move(assign);
                            m.window = w.window;
                            m.cls = w.cls;
                            // Zero-width branching can classify scalar
                            // boxes onto a side that breaks the wire order
                            // of the rebuild; keep only matches whose
                            // application typechecks.
                            try {
                                (void)do_apply(s, r, m);
                            } catch (const TypeError&) {
                                ok = false;
                            }
                            if (ok &&
                                std::find(out.begin(), out.end(), m) ==
                                    out.end())
                                out.push_back(std::move(m));
                        }
                    }
                    // next choice vector
                    size_t i = 0;
                    for (; i < choice.size(); ++i) {
                        if (++choice[i] < s.objects.size()) break;
                        choice[i] = 0;
                    }
                    if (choice.empty() || i == choice.size()) break;
                }
            }
        }
    }
    return out;
}

inline std::vector<Match> find_matches(const Term& t, const std::string& rule,
                                       int dir = +1) {
    return find_matches(t, rule_by_id(rule), dir);
}

namespace match_detail {

inline Term do_apply(const Term& s /* canonical */, const Rule& r,
                     const Match& m) {
    const Term& R = m.dir > 0 ? r.rhs : r.lhs;
    Term Rinst = normalize_exchange(instantiate(R, m.assign, s.objects));
    std::vector<ObjectWord> bw = boundary_words(s);
    const ObjectWord& W = bw[static_cast<size_t>(m.layer)];
    size_t lo = static_cast<size_t>(m.offset);
    const Term& P = m.dir > 0 ? r.lhs : r.rhs;
    size_t w0 = P.src.size();
    ObjectWord entry(W.begin() + static_cast<long>(lo),
                     W.begin() + static_cast<long>(lo + w0));
    Term out;
    out.objects = s.objects;
    out.src = s.src;
    for (int k = 0; k < m.layer; ++k)
        out.layers.push_back(s.layers[static_cast<size_t>(k)]);
    ObjectWord leftw(W.begin(), W.begin() + static_cast<long>(lo));
    ObjectWord rightw(W.begin() + static_cast<long>(lo + w0), W.end());
    for (int k = 0; k < m.window; ++k) {
        const Layer& L = s.layers[static_cast<size_t>(m.layer + k)];
        Layer left, right;
        for (size_t j = 0; j < L.size(); ++j) {
            if (m.cls[static_cast<size_t>(k)][j] == 0)
                left.push_back(L[j]);
            else if (m.cls[static_cast<size_t>(k)][j] == 2)
                right.push_back(L[j]);
        }
        Layer nl = left;
        Layer ide = id_layer(entry);
        nl.insert(nl.end(), ide.begin(), ide.end());
        nl.insert(nl.end(), right.begin(), right.end());
        leftw = layer_out(left);
        rightw = layer_out(right);
        out.layers.push_back(std::move(nl));
    }
    for (const Layer& RL : Rinst.layers) {
        Layer nl = id_layer(leftw);
        nl.insert(nl.end(), RL.begin(), RL.end());
        Layer idr = id_layer(rightw);
        nl.insert(nl.end(), idr.begin(), idr.end());
        out.layers.push_back(std::move(nl));
    }
    for (size_t k = static_cast<size_t>(m.layer + m.window);
         k < s.layers.size(); ++k)
        out.layers.push_back(s.layers[k]);
    out = normalize_exchange(out);
    typecheck(out);
    return out;
}

}  // namespace match_detail

// Apply a match.  The match is re-located in the canonical form of `t` by
// its (rule, direction, layer, offset, assignment) coordinates, so matches
// survive serialization; a match that no longer exists raises StaleMatch.
inline Term apply(const Term& t, const Match& m) {
    const Rule& r = rule_by_id(m.rule);
    Term s = normalize_exchange(t);
    for (const Match& c : find_matches(s, r, m.dir))
        if (c.layer == m.layer && c.offset == m.offset &&
            c.assign == m.assign)
            return match_detail::do_apply(s, r, c);
    throw StaleMatch("no match for " + m.rule + " at layer " +
                     std::to_string(m.layer) + " offset " +
                     std::to_string(m.offset));
}

// ---- traces -------------------------------------------------------------

using Trace = std::vector<Match>;

struct ReplayError : std::runtime_error {
    int index;
    ReplayError(int i, const std::string& w)
        : std::runtime_error("trace step " + std::to_string(i) + ": " + w),
          index(i) {}
};

inline Term replay(const Term& t, const Trace& trace) {
    Term cur = normalize_exchange(t);
    for (size_t i = 0; i < trace.size(); ++i) {
        try {
            cur = apply(cur, trace[i]);
        } catch (const StaleMatch& e) {
            throw ReplayError(static_cast<int>(i), e.what());
        }
    }
    return cur;
}

inline std::string trace_to_text(const Trace& trace) {
    std::ostringstream os;
    for (const Match& m : trace) {
        os << m.rule << " " << (m.dir > 0 ? "fwd" : "rev") << " " << m.layer
           << " " << m.offset;
        for (int v : m.assign) os << " " << v;
        os << "\n";
    }
    return os.str();
}

inline Trace trace_from_text(const std::string& text) {
    Trace out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Match m;
        std::string dir;
        ls >> m.rule >> dir >> m.layer >> m.offset;
        if (!ls || (dir != "fwd" && dir != "rev"))
            throw std::invalid_argument("bad trace line: " + line);
        m.dir = dir == "fwd" ? +1 : -1;
        int v;
        while (ls >> v) m.assign.push_back(v);
        out.push_back(std::move(m));
    }
    return out;
}

// ---- isotopy normal form ------------------------------------------------

// Exchange-canonical form plus straightening of zig-zags (a coform followed
// by a form on one strand).  Idempotent, evaluation-preserving.
inline Term normalize_isotopy(const Term& t) {
    Term cur = normalize_exchange(t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const char* id : {"f3", "f3p"}) {
            std::vector<Match> ms = find_matches(cur, id, +1);
            if (!ms.empty()) {
                cur = apply(cur, ms.front());
                changed = true;
                break;
            }
        }
    }
    return cur;
}

// ---- bounded equivalence search -----------------------------------------

struct Budget {
    int depth = 5;       // max rewrite steps from either end
    int max_boxes = 40;  // discard intermediate terms larger than this
    int max_nodes = 4000;
};

struct EquivResult {
    bool equivalent = false;
    Trace trace;  // rewrites the first argument into the second
};

using RuleFilter = std::function<bool(const Rule&)>;

inline bool default_rule_filter(const Rule& r) {
    return r.tier != Tier::dstar && r.tier != Tier::dquot;
}

// Bidirectional breadth-first search over rule applications.  Equivalent is
// returned only with a trace that has been replayed successfully.
inline EquivResult bounded_equiv(const Term& a, const Term& b, Budget budget,
                                 RuleFilter use_rule = default_rule_filter) {
    using namespace match_detail;
    if (typecheck(a) != typecheck(b))
        throw TypeError("bounded_equiv: boundary mismatch");
    Term a0 = normalize_exchange(a), b0 = normalize_exchange(b);
    struct Node {
        Term t;
        std::string parent;  // key; empty at the root
        Match step;          // step applied at the parent to reach this node
        int depth = 0;
    };
    std::unordered_map<std::string, Node> side[2];
    std::deque<std::string> frontier[2];
    std::string ka = print_term(a0), kb = print_term(b0);
    side[0][ka] = Node{a0, "", {}, 0};
    side[1][kb] = Node{b0, "", {}, 0};
    frontier[0].push_back(ka);
    frontier[1].push_back(kb);

    auto path_from_root = [&](int sd, std::string key) {
        std::vector<std::pair<std::string, Match>> steps;  // (parent, step)
        while (!side[sd][key].parent.empty()) {
            Node& n = side[sd][key];
            steps.push_back({n.parent, n.step});
            key = n.parent;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    };

    auto build_trace = [&](const std::string& meet) -> std::optional<Trace> {
        Trace trace;
        for (auto& [parent, step] : path_from_root(0, meet))
            trace.push_back(step);
        // Invert the b-side path: each stored step took X to Y walking away
        // from b0; the combined trace needs Y back to X.
        auto bsteps = path_from_root(1, meet);
        for (auto it = bsteps.rbegin(); it != bsteps.rend(); ++it) {
            const Term& X = side[1][it->first].t;
            std::string kx = it->first;
            // Y is the child the step produced.
            Term Y = do_apply(side[1][kx].t, rule_by_id(it->second.rule),
                              it->second);
            const Rule& r = rule_by_id(it->second.rule);
            bool found = false;
            for (const Match& m : find_matches(Y, r, -it->second.dir)) {
                if (print_term(do_apply(normalize_exchange(Y), r, m)) == kx) {
                    trace.push_back(m);
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
        // Validate end to end.
        try {
            if (print_term(replay(a0, trace)) != kb) return std::nullopt;
        } catch (const ReplayError&) {
            return std::nullopt;
        }
        return trace;
    };

    if (ka == kb) return EquivResult{true, {}};

    int nodes = 2;
    while ((!frontier[0].empty() || !frontier[1].empty()) &&
           nodes < budget.max_nodes) {
        int sd;
        if (frontier[0].empty())
            sd = 1;
        else if (frontier[1].empty())
            sd = 0;
        else
            sd = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        std::string key = frontier[sd].front();
        frontier[sd].pop_front();
        Node cur = side[sd][key];
        if (cur.depth >= budget.depth) continue;
        for (const Rule& r : rule_db()) {
            if (!use_rule(r)) continue;
            for (int dir : {+1, -1}) {
                for (const Match& m : find_matches(cur.t, r, dir)) {
                    Term child;
                    try {
                        child = do_apply(cur.t, r, m);
                    } catch (const TypeError&) {
                        continue;
                    }
                    if (box_count(child) > budget.max_boxes) continue;
                    std::string ck = print_term(child);
                    if (side[sd].count(ck)) continue;
                    side[sd][ck] =
                        Node{child, key, m, cur.depth + 1};
                    frontier[sd].push_back(ck);
                    ++nodes;
                    if (side[1 - sd].count(ck)) {
                        if (auto tr = build_trace(ck))
                            return EquivResult{true, *tr};
                    }
                    if (nodes >= budget.max_nodes) break;
                }
                if (nodes >= budget.max_nodes) break;
            }
            if (nodes >= budget.max_nodes) break;
        }
    }
    return EquivResult{false, {}};
}

}  // namespace hopfg

#endif  // HOPFG_MATCH_HPP
