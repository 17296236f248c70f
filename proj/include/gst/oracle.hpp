#pragma once

// Brute-force geodesic distances and counts on explicit graphs, used to
// validate the transfer-matrix algorithm and the Farey machinery. Counting
// is layered dynamic programming over BFS levels, never path enumeration.

#include "gst/common.hpp"
#include "gst/corridor.hpp"
#include "gst/counting.hpp"

#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gst {

/// Undirected graph without loops or duplicate edges.
class SimpleGraph {
public:
    explicit SimpleGraph(int n) : adjacency_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(adjacency_.size()); }

    bool add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw std::out_of_range("edge endpoint out of range");
        const auto [it, fresh] = edges_.emplace(std::min(u, v), std::max(u, v));
        if (fresh) {
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        return fresh;
    }

    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

private:
    std::vector<std::vector<int>> adjacency_;
    std::set<std::pair<int, int>> edges_;
};

/// BFS layering from a source: dist is -1 for unreachable vertices, count is
/// the number of geodesics from the source (0 when unreachable).
struct GeodesicLayers {
    std::vector<int> dist;
    std::vector<BigInt> count;
};

inline GeodesicLayers bfs_geodesics(const SimpleGraph& g, int src) {
    GeodesicLayers layers{std::vector<int>(static_cast<std::size_t>(g.size()), -1),
                          std::vector<BigInt>(static_cast<std::size_t>(g.size()), BigInt(0))};
    layers.dist[static_cast<std::size_t>(src)] = 0;
    layers.count[static_cast<std::size_t>(src)] = 1;
    std::queue<int> frontier;
    frontier.push(src);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (const int v : g.neighbors(u)) {
            if (layers.dist[static_cast<std::size_t>(v)] < 0) {
                layers.dist[static_cast<std::size_t>(v)] = layers.dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(v);
            }
            if (layers.dist[static_cast<std::size_t>(v)] == layers.dist[static_cast<std::size_t>(u)] + 1) {
                layers.count[static_cast<std::size_t>(v)] += layers.count[static_cast<std::size_t>(u)];
            }
        }
    }
    return layers;
}

inline std::pair<int, BigInt> geodesic_count(const SimpleGraph& g, int src, int dst) {
    const GeodesicLayers layers = bfs_geodesics(g, src);
    if (layers.dist[static_cast<std::size_t>(dst)] < 0) throw std::invalid_argument("destination unreachable");
    return {layers.dist[static_cast<std::size_t>(dst)], layers.count[static_cast<std::size_t>(dst)]};
}

/// Graph id of a corridor vertex with mu0 removed: pi0 keeps id 0 and w_i
/// becomes id i.
inline int corridor_graph_id(int corridor_id) {
    return corridor_id == Corridor::kPi0 ? 0 : corridor_id - 1;
}

/// 1-skeleton of the corridor restricted to tunnel vertices (mu0 excluded).
inline SimpleGraph corridor_graph(const Corridor& c) {
    SimpleGraph g(static_cast<int>(c.vertices.size()) - 1);
    for (const auto& [u, v] : c.edges(/*include_mu0=*/false)) {
        g.add_edge(corridor_graph_id(u), corridor_graph_id(v));
    }
    return g;
}

struct EquivalenceReport {
    BinaryInvariants binary;
    int depth_algorithm = 0;
    int depth_oracle = 0;
    BigInt count_algorithm{0};
    BigInt count_oracle{0};
    bool profile_agree = true;
    std::string detail;  // first mismatch, empty when everything agrees

    bool agree() const {
        return depth_algorithm == depth_oracle && count_algorithm == count_oracle && profile_agree;
    }
};

/// Runs the matrix algorithm and the corridor-BFS oracle on the same binary
/// invariants and reports agreement of (depth, count) and of the lambda/rho
/// profile against per-nabla-endpoint geodesic counts. Disagreements are
/// reported, never thrown.
inline EquivalenceReport check_equivalence(const BinaryInvariants& b) {
    EquivalenceReport rep;
    rep.binary = b;

    const StepSequence s = binary_to_steps(b);
    const CountResult algo = count_minimal_sequences(s);
    const Corridor c = build_corridor(s);
    const SimpleGraph g = corridor_graph(c);
    const GeodesicLayers layers = bfs_geodesics(g, corridor_graph_id(Corridor::kPi0));

    rep.depth_algorithm = algo.depth;
    rep.count_algorithm = algo.count;
    const int tau = corridor_graph_id(c.tau);
    rep.depth_oracle = layers.dist[static_cast<std::size_t>(tau)];
    rep.count_oracle = layers.count[static_cast<std::size_t>(tau)];

    if (rep.depth_algorithm != rep.depth_oracle || rep.count_algorithm != rep.count_oracle) {
        rep.detail = "depth/count mismatch on " + b.str() + ": algorithm (" +
                     std::to_string(rep.depth_algorithm) + ", " + rep.count_algorithm.str() +
                     ") vs oracle (" + std::to_string(rep.depth_oracle) + ", " +
                     rep.count_oracle.str() + ")";
    }

    if (c.nablas.size() != algo.profile.size()) {
        rep.profile_agree = false;
        if (rep.detail.empty())
            rep.detail = "profile length mismatch on " + b.str() + ": " +
                         std::to_string(c.nablas.size()) + " nabla-edges vs k = " +
                         std::to_string(algo.profile.size());
    } else {
        for (std::size_t i = 0; i < c.nablas.size(); ++i) {
            const NablaEdge& e = c.nablas[i];
            const int l = corridor_graph_id(e.left);
            const int r = corridor_graph_id(e.right);
            const auto& [lambda, rho] = algo.profile[i];
            const bool ok = e.depth == static_cast<int>(i) + 1 &&
                            layers.dist[static_cast<std::size_t>(l)] == e.depth &&
                            layers.dist[static_cast<std::size_t>(r)] == e.depth &&
                            layers.count[static_cast<std::size_t>(l)] == lambda &&
                            layers.count[static_cast<std::size_t>(r)] == rho;
            if (!ok) {
                rep.profile_agree = false;
                if (rep.detail.empty())
                    rep.detail = "lambda/rho mismatch on " + b.str() + " at nabla(" +
                                 std::to_string(e.depth) + "): algorithm (" + lambda.str() + ", " +
                                 rho.str() + ") vs oracle (" +
                                 layers.count[static_cast<std::size_t>(l)].str() + ", " +
                                 layers.count[static_cast<std::size_t>(r)].str() + ")";
                break;
            }
        }
    }
    return rep;
}

}  // namespace gst
