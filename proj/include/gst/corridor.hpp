#pragma once

// Explicit triangulated model of the corridor C(tau): the strip of
// 2-simplices whose barycenters lie on the principal path. Vertices are
// pi0 (id 0), mu0 (id 1) and then w_1, w_2, ... in creation order; each
// triangle glues to the current cross-edge and introduces one new vertex.
//
// Chirality convention (fixed once, validated against the published
// lambda/rho matrices): the top cross-edge is (left = mu0, right = pi0);
// turn t_i sets the side of the vertex created by triangle i-1. A left turn
// keeps the right endpoint as pivot and the new vertex continues the left
// boundary chain; a right turn mirrors this. The final vertex tau takes its
// side from the last step letter, or spans below the last nabla-edge when
// that letter is 'D'. Depths are breadth-first distances from pi0 inside the
// corridor with mu0 and its edges excluded.

#include "gst/common.hpp"
#include "gst/invariants.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gst {

struct CorridorVertex {
    int id = 0;
    std::optional<int> depth;   // nullopt for mu0 only
    std::optional<Side> side;   // nullopt for tau when it spans below
};

/// Triangle as (left, right, apex): (left, right) is the cross-edge the
/// triangle was glued onto and apex is the vertex it introduced.
struct Triangle {
    int left = 0, right = 0, apex = 0;

    bool operator==(const Triangle&) const = default;
};

struct NablaEdge {
    int depth = 0;
    int left = 0, right = 0;

    bool operator==(const NablaEdge&) const = default;
};

struct Corridor {
    static constexpr int kPi0 = 0;
    static constexpr int kMu0 = 1;

    std::vector<CorridorVertex> vertices;
    std::vector<Triangle> triangles;
    std::vector<std::pair<int, int>> cross_edges;  // (left, right); first is (mu0, pi0)
    std::vector<NablaEdge> nablas;                 // increasing depth
    int tau = 0;
    Disposition disposition = Disposition::RightEndpoint;
    StepSequence steps;

    std::string vertex_name(int id) const {
        if (id == kPi0) return "pi0";
        if (id == kMu0) return "mu0";
        return "w" + std::to_string(id - 1);
    }

    /// All distinct undirected edges of the strip, sorted; optionally
    /// dropping mu0 and the edges incident to it.
    std::vector<std::pair<int, int>> edges(bool include_mu0) const {
        std::set<std::pair<int, int>> out;
        for (const Triangle& t : triangles) {
            const int v[3] = {t.left, t.right, t.apex};
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    if (!include_mu0 && (v[i] == kMu0 || v[j] == kMu0)) continue;
                    out.emplace(std::min(v[i], v[j]), std::max(v[i], v[j]));
                }
            }
        }
        return {out.begin(), out.end()};
    }

    /// Vertices of one side in creation order (mu0 and pi0 head their chains).
    std::vector<int> side_chain(Side s) const {
        std::vector<int> chain;
        for (const CorridorVertex& v : vertices) {
            if (v.side == s) chain.push_back(v.id);
        }
        return chain;
    }
};

namespace detail {

inline void assign_depths(Corridor& c) {
    std::vector<std::vector<int>> adj(c.vertices.size());
    for (const auto& [u, v] : c.edges(/*include_mu0=*/false)) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::queue<int> frontier;
    c.vertices[Corridor::kPi0].depth = 0;
    frontier.push(Corridor::kPi0);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        const int du = *c.vertices[static_cast<std::size_t>(u)].depth;
        for (const int v : adj[static_cast<std::size_t>(u)]) {
            auto& dv = c.vertices[static_cast<std::size_t>(v)].depth;
            if (!dv) {
                dv = du + 1;
                frontier.push(v);
            }
        }
    }
}

inline void find_nabla_edges(Corridor& c) {
    const std::vector<int> left_chain = c.side_chain(Side::Left);
    const std::vector<int> right_chain = c.side_chain(Side::Right);
    std::vector<int> chain_pos(c.vertices.size(), -1);
    for (std::size_t i = 0; i < left_chain.size(); ++i) chain_pos[static_cast<std::size_t>(left_chain[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < right_chain.size(); ++i) chain_pos[static_cast<std::size_t>(right_chain[i])] = static_cast<int>(i);

    auto all_below_deeper = [&](const std::vector<int>& chain, int id, int depth) {
        for (std::size_t i = static_cast<std::size_t>(chain_pos[static_cast<std::size_t>(id)]) + 1; i < chain.size(); ++i) {
            const auto d = c.vertices[static_cast<std::size_t>(chain[i])].depth;
            if (!d || *d <= depth) return false;
        }
        return true;
    };

    std::map<int, NablaEdge> by_depth;
    for (const auto& [u, v] : c.edges(/*include_mu0=*/false)) {
        const CorridorVertex& a = c.vertices[static_cast<std::size_t>(u)];
        const CorridorVertex& b = c.vertices[static_cast<std::size_t>(v)];
        if (!a.side || !b.side || *a.side == *b.side) continue;
        if (!a.depth || !b.depth || *a.depth != *b.depth || *a.depth < 1) continue;
        const int d = *a.depth;
        const int left_id = *a.side == Side::Left ? u : v;
        const int right_id = *a.side == Side::Left ? v : u;
        if (!all_below_deeper(left_chain, left_id, d)) continue;
        if (!all_below_deeper(right_chain, right_id, d)) continue;
        if (by_depth.count(d)) throw std::logic_error("duplicate nabla edge at depth " + std::to_string(d));
        by_depth[d] = NablaEdge{d, left_id, right_id};
    }
    c.nablas.clear();
    for (const auto& [d, e] : by_depth) c.nablas.push_back(e);
}

}  // namespace detail

inline Corridor build_corridor(const StepSequence& s) {
    if (s.is_simple()) throw SimpleTunnelError();
    const std::string& letters = s.letters;
    const std::string turns = binary_to_turns(steps_to_binary(s)).turns;  // size() - 1 turns

    Corridor c;
    c.steps = s;
    c.vertices.push_back(CorridorVertex{Corridor::kPi0, 0, Side::Right});
    c.vertices.push_back(CorridorVertex{Corridor::kMu0, std::nullopt, Side::Left});

    int left = Corridor::kMu0;
    int right = Corridor::kPi0;
    c.cross_edges.emplace_back(left, right);

    const int triangle_count = static_cast<int>(letters.size());
    for (int i = 0; i < triangle_count; ++i) {
        const int v = static_cast<int>(c.vertices.size());
        c.vertices.push_back(CorridorVertex{v, std::nullopt, std::nullopt});
        c.triangles.push_back(Triangle{left, right, v});
        if (i + 1 < triangle_count) {
            // Turn t_{i+1} places the vertex just created by triangle i.
            if (turns[static_cast<std::size_t>(i)] == 'L') {
                c.vertices[static_cast<std::size_t>(v)].side = Side::Left;
                left = v;
            } else {
                c.vertices[static_cast<std::size_t>(v)].side = Side::Right;
                right = v;
            }
            c.cross_edges.emplace_back(left, right);
        } else {
            c.tau = v;
            const char last = letters.back();
            if (last == 'D') {
                c.disposition = Disposition::SpansBelow;
            } else if (last == 'L') {
                c.disposition = Disposition::LeftEndpoint;
                c.vertices[static_cast<std::size_t>(v)].side = Side::Left;
            } else {
                c.disposition = Disposition::RightEndpoint;
                c.vertices[static_cast<std::size_t>(v)].side = Side::Right;
            }
        }
    }

    detail::assign_depths(c);
    detail::find_nabla_edges(c);
    return c;
}

/// The nabla-edges in increasing depth order, one per depth 1..k.
inline std::vector<NablaEdge> nabla_edges(const Corridor& c) { return c.nablas; }

/// Deterministic two-column drawing of the strip: one line per cross-edge
/// (diagonals '-', nabla-edges '='), the bottom edge last, tau tagged.
inline std::string render_ascii(const Corridor& c) {
    auto label = [&](int id) {
        std::string out = c.vertex_name(id);
        const auto& d = c.vertices[static_cast<std::size_t>(id)].depth;
        if (d) out += "(" + std::to_string(*d) + ")";
        return out;
    };

    std::set<std::pair<int, int>> nabla_set;
    std::map<std::pair<int, int>, int> nabla_depth;
    for (const NablaEdge& e : c.nablas) {
        const auto key = std::minmax(e.left, e.right);
        nabla_set.insert(key);
        nabla_depth[key] = e.depth;
    }

    std::vector<std::pair<int, int>> lines = c.cross_edges;  // (left, right)
    const bool endpoint = c.disposition != Disposition::SpansBelow;
    if (endpoint) {
        // Bottom edge joins the two boundary chain ends; tau is one of them.
        const auto& last_cross = c.cross_edges.back();
        lines.emplace_back(c.disposition == Disposition::LeftEndpoint ? c.tau : last_cross.first,
                           c.disposition == Disposition::RightEndpoint ? c.tau : last_cross.second);
    }

    std::size_t width = 0;
    for (const auto& [l, r] : lines) width = std::max(width, label(l).size());

    std::ostringstream out;
    out << "corridor of " << c.steps.letters << ": " << c.vertices.size() << " vertices, "
        << c.triangles.size() << " triangles, " << to_string(c.disposition) << "\n";
    for (const auto& [l, r] : lines) {
        const auto key = std::minmax(l, r);
        const bool is_nabla = nabla_set.count(key) > 0;
        const std::string ll = label(l);
        out << std::string(width - ll.size(), ' ') << ll << ' '
            << std::string(7, is_nabla ? '=' : '-') << ' ' << label(r);
        if (is_nabla) out << "   nabla(" << nabla_depth[key] << ")";
        if (l == c.tau || r == c.tau) out << "   tau = " << c.vertex_name(c.tau);
        out << "\n";
    }
    if (!endpoint) {
        out << std::string(width + 2, ' ') << "\\ " << label(c.tau) << " /"
            << "   tau = " << c.vertex_name(c.tau) << " spans below nabla("
            << (c.nablas.empty() ? 0 : c.nablas.back().depth) << ")\n";
    }
    return out.str();
}

}  // namespace gst
