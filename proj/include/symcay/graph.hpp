#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"

namespace symcay {

/// Finite simple undirected graph: no loops, no multi-edges.  Vertices are
/// 0-based; adjacency lists are kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;

    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges)
        : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw InvalidParameter("negative vertex count");
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidParameter("edge endpoint outside the vertex range");
            if (u == v) throw InvalidParameter("loops are not allowed");
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    long long edge_count() const {
        long long total = 0;
        for (const auto& list : adj_) total += static_cast<long long>(list.size());
        return total / 2;
    }

    const std::vector<int>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int u, int v) const {
        const auto& list = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(list.begin(), list.end(), v);
    }

    bool connected() const {
        if (vertex_count() == 0) return true;
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == vertex_count();
    }

    /// Common vertex degree of a regular graph, nullopt when degrees vary
    /// (or the graph has no vertices).
    std::optional<int> valency() const {
        if (vertex_count() == 0) return std::nullopt;
        int d = degree(0);
        for (int v = 1; v < vertex_count(); ++v)
            if (degree(v) != d) return std::nullopt;
        return d;
    }

    /// Length of a shortest cycle, nullopt for forests.  Breadth-first
    /// search from every vertex; the minimum over all roots is exact.
    std::optional<int> girth() const {
        int best = -1;
        std::vector<int> dist(adj_.size()), parent(adj_.size());
        for (int root = 0; root < vertex_count(); ++root) {
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(parent.begin(), parent.end(), -1);
            std::queue<int> q;
            q.push(root);
            dist[static_cast<std::size_t>(root)] = 0;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : adj_[static_cast<std::size_t>(v)]) {
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                        parent[static_cast<std::size_t>(w)] = v;
                        q.push(w);
                    } else if (w != parent[static_cast<std::size_t>(v)]) {
                        int cycle =
                            dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
                        if (best < 0 || cycle < best) best = cycle;
                    }
                }
            }
        }
        if (best < 0) return std::nullopt;
        return best;
    }

    bool operator==(const SimpleGraph& o) const { return adj_ == o.adj_; }
    bool operator!=(const SimpleGraph& o) const { return adj_ != o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
};

}  // namespace symcay
