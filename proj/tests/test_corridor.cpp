#include "gst/corridor.hpp"

#include "gst/counting.hpp"
#include "gst/document.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>

using namespace gst;

namespace {

BinaryInvariants bits_of(std::uint64_t mask, int length) {
    BinaryInvariants b;
    b.bits.resize(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) b.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return b;
}

}  // namespace

TEST_CASE("the two-triangle base case DR") {
    const Corridor c = build_corridor(parse_steps("DR"));
    REQUIRE(c.vertices.size() == 4);
    REQUIRE(c.triangles.size() == 2);
    CHECK(c.vertices[0].depth == 0);       // pi0
    CHECK_FALSE(c.vertices[1].depth);      // mu0 carries no depth
    CHECK(c.vertices[2].depth == 1);       // w1
    CHECK(c.vertices[3].depth == 1);       // w2
    REQUIRE(c.nablas.size() == 1);
    CHECK(c.nablas[0] == NablaEdge{1, 2, 3});  // nabla(1) = (w1, w2)
    CHECK(c.tau == 3);
    CHECK(c.disposition == Disposition::RightEndpoint);
}

TEST_CASE("DRDRD: two nabla edges and tau spanning below") {
    const Corridor c = build_corridor(parse_steps("DRDRD"));
    REQUIRE(c.vertices.size() == 7);
    REQUIRE(c.triangles.size() == 5);
    REQUIRE(c.nablas.size() == 2);
    CHECK(c.nablas[0] == NablaEdge{1, 2, 3});  // (w1, w2)
    CHECK(c.nablas[1] == NablaEdge{2, 4, 5});  // (w3, w4)
    CHECK(c.tau == 6);
    CHECK(c.vertices[6].depth == 3);
    CHECK_FALSE(c.vertices[6].side);
    CHECK(c.disposition == Disposition::SpansBelow);
}

TEST_CASE("DRDR: tau is the right endpoint of nabla(2)") {
    const Corridor c = build_corridor(parse_steps("DRDR"));
    REQUIRE(c.nablas.size() == 2);
    CHECK(c.nablas[0].depth == 1);
    CHECK(c.nablas[1].depth == 2);
    CHECK(c.nablas[1].right == c.tau);
    CHECK(c.disposition == Disposition::RightEndpoint);
}

TEST_CASE("the published example corridor") {
    const Corridor c = build_corridor(parse_steps("DRRRDRDLLLDLDRR"));
    CHECK(c.vertices.size() == 17);
    CHECK(c.triangles.size() == 15);
    REQUIRE(c.nablas.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(c.nablas[static_cast<std::size_t>(i)].depth == i + 1);
    CHECK(*c.vertices[static_cast<std::size_t>(c.tau)].depth == 5);
    CHECK(c.vertices[static_cast<std::size_t>(c.tau)].side == Side::Right);
    CHECK(nabla_edges(c).size() == 5);
}

TEST_CASE("simple tunnel has no corridor") {
    CHECK_THROWS_AS(build_corridor(parse_steps("D")), SimpleTunnelError);
}

TEST_CASE("structural invariants, exhaustive to 12") {
    for (int length = 0; length <= 12; ++length) {
        const std::uint64_t total = std::uint64_t{1} << length;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const BinaryInvariants b = bits_of(mask, length);
            const StepSequence s = binary_to_steps(b);
            const Corridor c = build_corridor(s);
            const RunDecomposition rd = run_decomposition(s);
            const int k = static_cast<int>(rd.runs.size());

            if (c.vertices.size() != s.size() + 2) FAIL("vertex count law on " << b.str());
            if (c.triangles.size() != s.size()) FAIL("triangle count law on " << b.str());

            // exactly one nabla-edge per depth 1..k, endpoints on opposite sides
            if (static_cast<int>(c.nablas.size()) != k) {
                FAIL("nabla count " << c.nablas.size() << " != runs " << k << " on " << b.str());
            }
            for (int i = 0; i < k; ++i) {
                const NablaEdge& e = c.nablas[static_cast<std::size_t>(i)];
                if (e.depth != i + 1) FAIL("nabla depths not 1..k on " << b.str());
                if (c.vertices[static_cast<std::size_t>(e.left)].side != Side::Left ||
                    c.vertices[static_cast<std::size_t>(e.right)].side != Side::Right) {
                    FAIL("nabla sides wrong on " << b.str());
                }
            }

            // edge endpoint depths differ by at most one
            for (const auto& [u, v] : c.edges(/*include_mu0=*/false)) {
                const int du = *c.vertices[static_cast<std::size_t>(u)].depth;
                const int dv = *c.vertices[static_cast<std::size_t>(v)].depth;
                if (du - dv > 1 || dv - du > 1) FAIL("edge depth gap on " << b.str());
            }

            // depth(tau) is k for endpoint dispositions, k + 1 below
            const int tau_depth = *c.vertices[static_cast<std::size_t>(c.tau)].depth;
            const int expected = c.disposition == Disposition::SpansBelow ? k + 1 : k;
            if (tau_depth != expected) FAIL("tau depth law on " << b.str());

            // the fan above nabla(1): vertices of the first run are adjacent
            // to pi0 at depth 1
            std::set<std::pair<int, int>> edge_set;
            for (const auto& e : c.edges(true)) edge_set.insert(e);
            const auto has_edge = [&](int x, int y) {
                return edge_set.count({std::min(x, y), std::max(x, y)}) > 0;
            };
            const int first_run = rd.runs[0].length;
            for (int j = 0; j < first_run; ++j) {
                const int id = 3 + j;  // w2 onward: vertices of run 1
                if (!has_edge(Corridor::kPi0, id)) FAIL("fan edge missing on " << b.str());
                if (*c.vertices[static_cast<std::size_t>(id)].depth != 1) FAIL("fan depth on " << b.str());
            }

            // consecutive triangles share exactly the recorded cross-edge;
            // no edge lies in more than two triangles
            std::map<std::pair<int, int>, int> edge_uses;
            for (std::size_t t = 0; t < c.triangles.size(); ++t) {
                const Triangle& tri = c.triangles[t];
                const int vs[3] = {tri.left, tri.right, tri.apex};
                for (int i = 0; i < 3; ++i) {
                    for (int j = i + 1; j < 3; ++j) {
                        ++edge_uses[{std::min(vs[i], vs[j]), std::max(vs[i], vs[j])}];
                    }
                }
                if (t + 1 < c.triangles.size()) {
                    const Triangle& next = c.triangles[t + 1];
                    std::set<int> shared;
                    for (const int a : {tri.left, tri.right, tri.apex}) {
                        for (const int b2 : {next.left, next.right, next.apex}) {
                            if (a == b2) shared.insert(a);
                        }
                    }
                    if (shared.size() != 2) FAIL("triangle sharing on " << b.str());
                    const auto& cross = c.cross_edges[t + 1];
                    if (!shared.count(cross.first) || !shared.count(cross.second)) {
                        FAIL("cross edge mismatch on " << b.str());
                    }
                }
            }
            for (const auto& [e, uses] : edge_uses) {
                if (uses > 2) FAIL("edge in more than two triangles on " << b.str());
            }

            // side chains are monotone: consecutive same-side vertices adjacent
            for (const Side side : {Side::Left, Side::Right}) {
                const auto chain = c.side_chain(side);
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                    if (!has_edge(chain[i], chain[i + 1])) FAIL("side chain broken on " << b.str());
                }
            }
        }
    }
}

TEST_CASE("render_ascii is deterministic and labeled") {
    const Corridor small = build_corridor(parse_steps("DR"));
    const std::string r1 = render_ascii(small);
    CHECK(r1 == render_ascii(small));
    CHECK(r1.find("mu0") != std::string::npos);
    CHECK(r1.find("pi0(0)") != std::string::npos);
    CHECK(r1.find("w1(1)") != std::string::npos);
    CHECK(r1.find("w2(1)") != std::string::npos);
    CHECK(r1.find("nabla(1)") != std::string::npos);

    const std::string r2 = render_ascii(build_corridor(parse_steps("DRDRD")));
    CHECK(r2.find("nabla(1)") != std::string::npos);
    CHECK(r2.find("nabla(2)") != std::string::npos);
    CHECK(r2.find("tau = w5") != std::string::npos);
}

TEST_CASE("corridor documents round-trip") {
    for (const std::string text : {"DR", "DRDRD", "DRRRDRDLLLDLDRR"}) {
        const Corridor c = build_corridor(parse_steps(text));
        const nlohmann::json doc = corridor_to_document(c);
        const Corridor back = corridor_from_document(doc);
        CHECK(back.steps == c.steps);
        CHECK(back.tau == c.tau);
        CHECK(back.disposition == c.disposition);
        CHECK(back.triangles == c.triangles);
        CHECK(back.cross_edges == c.cross_edges);
        CHECK(back.nablas == c.nablas);
        REQUIRE(back.vertices.size() == c.vertices.size());
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            CHECK(back.vertices[i].id == c.vertices[i].id);
            CHECK(back.vertices[i].depth == c.vertices[i].depth);
            CHECK(back.vertices[i].side == c.vertices[i].side);
        }
        CHECK(corridor_to_document(back) == doc);
    }
    const Corridor c = build_corridor(parse_steps("DR"));
    CHECK(corridor_to_document(c).at("vertices").size() == 4);
    const Corridor big = build_corridor(parse_steps("DRRRDRDLLLDLDRR"));
    CHECK(corridor_to_document(big).at("vertices").size() == 17);
    CHECK(corridor_to_document(big).at("triangles").size() == 15);
}
