#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/graph.hpp"
#include "symcay/group.hpp"

namespace symcay {

/// True when p maps every edge to an edge (for a bijection on a finite
/// simple graph this makes p an automorphism).
inline bool preserves_edges(const SimpleGraph& g, const Permutation& p) {
    if (p.degree() != g.vertex_count()) throw DegreeMismatch(p.degree(), g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int w : g.neighbors(u))
            if (!g.adjacent(p(u), p(w))) return false;
    return true;
}

namespace detail_aut {

using Partition = std::vector<std::vector<int>>;  // ordered cells, each sorted

/// Equitable refinement: split every cell by the neighbour count of its
/// vertices inside each cell, repeating until stable.  Splits are driven by
/// cell position and fragments are ordered by ascending count, so the
/// refinement commutes with graph relabeling.
inline Partition refine_equitable(const SimpleGraph& g, Partition part) {
    const int n = g.vertex_count();
    std::vector<int> counts(static_cast<std::size_t>(n));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t splitter = 0; splitter < part.size() && !changed; ++splitter) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int v : part[splitter])
                for (int w : g.neighbors(v)) ++counts[static_cast<std::size_t>(w)];
            Partition next;
            next.reserve(part.size() + 2);
            for (auto& cell : part) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<int, std::vector<int>> buckets;
                for (int v : cell) buckets[counts[static_cast<std::size_t>(v)]].push_back(v);
                if (buckets.size() == 1) {
                    next.push_back(cell);
                } else {
                    changed = true;
                    for (auto& [count, fragment] : buckets) next.push_back(std::move(fragment));
                }
            }
            if (changed) part = std::move(next);
        }
    }
    return part;
}

inline Partition individualize(const Partition& part, std::size_t target, int v) {
    Partition child;
    child.reserve(part.size() + 1);
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (i != target) {
            child.push_back(part[i]);
            continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        rest.reserve(part[i].size() - 1);
        for (int w : part[i])
            if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
    }
    return child;
}

/// Backtracking search over the individualization-refinement tree.  The
/// first (leftmost) leaf is the reference labeling; every other leaf yields
/// a candidate bijection that is kept only if it preserves edges.  Siblings
/// on the leftmost path are pruned by the orbits of the generators already
/// found (those generators fix the individualized prefix); subtrees off the
/// leftmost path are abandoned as soon as they contribute one automorphism.
class AutSearch {
public:
    explicit AutSearch(const SimpleGraph& g) : g_(&g), n_(g.vertex_count()) {}

    std::vector<Permutation> run() {
        if (n_ == 0) return {};
        std::vector<int> everything(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) everything[static_cast<std::size_t>(v)] = v;
        explore(Partition{everything}, true, 0, {});
        return gens_;
    }

private:
    static std::vector<std::size_t> cell_sizes(const Partition& part) {
        std::vector<std::size_t> sizes;
        sizes.reserve(part.size());
        for (const auto& cell : part) sizes.push_back(cell.size());
        return sizes;
    }

    // Orbit of the explored set under the found generators fixing the
    // prefix pointwise; forward closure reaches the full group orbit since
    // every generator has finite order.
    bool in_explored_orbit(int v, const std::vector<int>& explored,
                           const std::vector<int>& prefix) const {
        std::vector<const Permutation*> useful;
        for (const Permutation& g : gens_) {
            bool fixes = true;
            for (int p : prefix)
                if (g(p) != p) {
                    fixes = false;
                    break;
                }
            if (fixes) useful.push_back(&g);
        }
        if (useful.empty()) return false;
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        std::vector<int> queue;
        for (int e : explored) {
            in[static_cast<std::size_t>(e)] = 1;
            queue.push_back(e);
        }
        for (std::size_t k = 0; k < queue.size(); ++k) {
            if (in[static_cast<std::size_t>(v)]) return true;
            for (const Permutation* g : useful) {
                int image = (*g)(queue[k]);
                if (!in[static_cast<std::size_t>(image)]) {
                    in[static_cast<std::size_t>(image)] = 1;
                    queue.push_back(image);
                }
            }
        }
        return in[static_cast<std::size_t>(v)] != 0;
    }

    // Returns true when a non-leftmost subtree produced an automorphism
    // (the caller abandons its remaining children).
    bool explore(Partition part, bool leftmost, std::size_t depth, std::vector<int> prefix) {
        part = refine_equitable(*g_, part);
        auto sizes = cell_sizes(part);
        if (leftmost) {
            path_sizes_.push_back(sizes);
        } else if (depth >= path_sizes_.size() || sizes != path_sizes_[depth]) {
            // No automorphism can map the reference configuration at this
            // depth onto one with a different cell-size profile.
            return false;
        }

        std::size_t target = part.size();
        std::size_t best = 0;
        for (std::size_t i = 0; i < part.size(); ++i)
            if (part[i].size() >= 2 && (target == part.size() || part[i].size() < best)) {
                target = i;
                best = part[i].size();
            }

        if (target == part.size()) {  // discrete partition: a leaf
            std::vector<int> leaf;
            leaf.reserve(part.size());
            for (const auto& cell : part) leaf.push_back(cell[0]);
            if (leftmost) {
                zeta_ = std::move(leaf);
                return false;
            }
            std::vector<int> images(static_cast<std::size_t>(n_));
            for (std::size_t j = 0; j < leaf.size(); ++j)
                images[static_cast<std::size_t>(zeta_[j])] = leaf[j];
            Permutation cand = Permutation::from_images(std::move(images));
            if (!cand.is_identity() && preserves_edges(*g_, cand)) {
                gens_.push_back(std::move(cand));
                return true;
            }
            return false;
        }

        if (leftmost) {
            std::vector<int> children = part[target];
            std::vector<int> explored;
            for (std::size_t idx = 0; idx < children.size(); ++idx) {
                int v = children[idx];
                if (idx > 0 && in_explored_orbit(v, explored, prefix)) continue;
                std::vector<int> child_prefix = prefix;
                child_prefix.push_back(v);
                explore(individualize(part, target, v), idx == 0, depth + 1,
                        std::move(child_prefix));
                explored.push_back(v);
            }
            return false;
        }
        for (int v : part[target])
            if (explore(individualize(part, target, v), false, depth + 1, {})) return true;
        return false;
    }

    const SimpleGraph* g_;
    int n_;
    std::vector<Permutation> gens_;
    std::vector<int> zeta_;
    std::vector<std::vector<std::size_t>> path_sizes_;
};

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail_aut

/// Full automorphism group of the graph.  Guarded by a vertex cap because
/// the search is exponential in the worst case.
inline GeneratedGroup automorphism_group(const SimpleGraph& g, int vertex_cap = 512) {
    if (g.vertex_count() > vertex_cap)
        throw CapExceeded("automorphism search limited to " + std::to_string(vertex_cap) +
                          " vertices, graph has " + std::to_string(g.vertex_count()));
    detail_aut::AutSearch search(g);
    return GeneratedGroup(g.vertex_count(), search.run());
}

/// Orbit census of a supplied automorphism group on the s-arcs of a graph.
/// An s-arc is a walk of s+1 vertices along edges that never immediately
/// reverses; s = 0 counts vertex orbits, s = 1 arc orbits.
struct ArcOrbitReport {
    int s = 0;
    long long tuple_count = 0;
    long long orbit_count = 0;
    bool transitive = false;  // tuple_count > 0 and a single orbit
};

inline ArcOrbitReport arc_orbit_report(const SimpleGraph& g, const GeneratedGroup& X, int s,
                                       long long tuple_cap = 10000000) {
    if (X.degree() != g.vertex_count()) throw DegreeMismatch(X.degree(), g.vertex_count());
    if (s < 0) throw InvalidParameter("negative arc length");
    for (const Permutation& gen : X.generators())
        if (!preserves_edges(g, gen))
            throw NonAutomorphism("supplied group does not act on the graph");

    std::vector<std::vector<int>> tuples;
    if (s == 0) {
        for (int v = 0; v < g.vertex_count(); ++v) tuples.push_back({v});
    } else {
        std::vector<int> walk;
        auto extend = [&](auto&& self) -> void {
            if (static_cast<int>(walk.size()) == s + 1) {
                tuples.push_back(walk);
                if (static_cast<long long>(tuples.size()) > tuple_cap)
                    throw CapExceeded("more than " + std::to_string(tuple_cap) + " arcs");
                return;
            }
            int tail = walk.back();
            int previous = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
            for (int w : g.neighbors(tail)) {
                if (w == previous) continue;
                walk.push_back(w);
                self(self);
                walk.pop_back();
            }
        };
        for (int v = 0; v < g.vertex_count(); ++v) {
            walk.assign(1, v);
            extend(extend);
        }
    }

    std::unordered_map<std::vector<int>, int, detail_aut::IntVecHash> id_of;
    id_of.reserve(tuples.size());
    for (std::size_t k = 0; k < tuples.size(); ++k)
        id_of.emplace(tuples[k], static_cast<int>(k));

    std::vector<int> parent(tuples.size());
    for (std::size_t k = 0; k < tuples.size(); ++k) parent[k] = static_cast<int>(k);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };

    std::vector<int> image;
    for (const Permutation& gen : X.generators())
        for (std::size_t k = 0; k < tuples.size(); ++k) {
            image.clear();
            for (int v : tuples[k]) image.push_back(gen(v));
            int a = find(static_cast<int>(k));
            int b = find(id_of.at(image));  // automorphisms map s-arcs to s-arcs
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }

    ArcOrbitReport report;
    report.s = s;
    report.tuple_count = static_cast<long long>(tuples.size());
    for (std::size_t k = 0; k < tuples.size(); ++k)
        if (find(static_cast<int>(k)) == static_cast<int>(k)) ++report.orbit_count;
    report.transitive = report.tuple_count > 0 && report.orbit_count == 1;
    return report;
}

}  // namespace symcay
