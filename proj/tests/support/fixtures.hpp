#pragma once

// Named graphs and small builders shared by the test binaries.

#include <utility>
#include <vector>

#include "symcay/graph.hpp"
#include "symcay/group.hpp"
#include "symcay/perm.hpp"

namespace fixtures {

inline symcay::SimpleGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return symcay::SimpleGraph(n, edges);
}

inline symcay::SimpleGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return symcay::SimpleGraph(n, edges);
}

inline symcay::SimpleGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return symcay::SimpleGraph(a + b, edges);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline symcay::SimpleGraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return symcay::SimpleGraph(10, edges);
}

// Vertices are 3-bit words, edges join words at Hamming distance one.
inline symcay::SimpleGraph cube() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int b : {1, 2, 4})
            if (v < (v ^ b)) edges.emplace_back(v, v ^ b);
    return symcay::SimpleGraph(8, edges);
}

// Tensor with K_2: vertices (v,0) and (v,1), with (u,0) ~ (w,1) iff u ~ w.
inline symcay::SimpleGraph bipartite_double(const symcay::SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u))
            if (u < w) {
                edges.emplace_back(u, w + n);
                edges.emplace_back(w, u + n);
            }
    return symcay::SimpleGraph(2 * n, edges);
}

// Lifts an automorphism of the base graph to its bipartite double, acting
// the same way on both layers.
inline symcay::Permutation double_lift(const symcay::Permutation& a) {
    int n = a.degree();
    std::vector<int> images(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
        images[static_cast<std::size_t>(v)] = a(v);
        images[static_cast<std::size_t>(v + n)] = a(v) + n;
    }
    return symcay::Permutation::from_images(std::move(images));
}

// The layer swap (v,0) <-> (v,1) of a bipartite double on 2n vertices.
inline symcay::Permutation layer_flip(int n) {
    std::vector<int> images(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
        images[static_cast<std::size_t>(v)] = v + n;
        images[static_cast<std::size_t>(v + n)] = v;
    }
    return symcay::Permutation::from_images(std::move(images));
}

}  // namespace fixtures
