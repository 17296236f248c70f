#pragma once

// Geodesic distance and counting in the Farey graph: vertices are reduced
// rationals plus infinity = 1/0, with an edge between p/q and r/s exactly
// when |ps - qr| = 1. A query (u, v) is normalized by a unimodular map
// sending u to infinity; the image t of v then determines a triangle strip
// of the Farey tessellation (mediant descent inside (floor(t), floor(t)+1))
// on which geodesics are counted by layered BFS. The strip-confinement of
// geodesics is validated against the farey_ball oracle rather than assumed.

#include "gst/common.hpp"
#include "gst/oracle.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gst {

/// Reduced rational p/q with q >= 0; (1, 0) is the point at infinity.
struct Fraction {
    BigInt p{0};
    BigInt q{1};

    static Fraction make(BigInt p, BigInt q) {
        if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a Farey vertex");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        BigInt g = boost::multiprecision::gcd(abs(p), q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
        if (q == 0) p = 1;  // canonical infinity
        return Fraction{std::move(p), std::move(q)};
    }

    static Fraction infinity() { return Fraction{1, 0}; }

    bool is_infinity() const { return q == 0; }
    bool is_integer() const { return q == 1; }

    std::string str() const { return p.str() + "/" + q.str(); }

    bool operator==(const Fraction&) const = default;
};

/// Container ordering only (canonical forms make it an identity order);
/// use numeric_less for magnitude comparisons of finite fractions.
struct FractionOrder {
    bool operator()(const Fraction& a, const Fraction& b) const {
        return a.p < b.p || (a.p == b.p && a.q < b.q);
    }
};

inline bool numeric_less(const Fraction& a, const Fraction& b) {
    if (a.is_infinity() || b.is_infinity()) throw std::domain_error("numeric order needs finite fractions");
    return a.p * b.q < b.p * a.q;
}

inline BigInt floor_of(const Fraction& a) {
    if (a.is_infinity()) throw std::domain_error("floor of infinity");
    BigInt f = a.p / a.q;
    if (a.p % a.q != 0 && a.p < 0) --f;
    return f;
}

inline Fraction mediant(const Fraction& a, const Fraction& b) {
    return Fraction::make(a.p + b.p, a.q + b.q);
}

/// Strict parser for "p/q" (also bare integers "n"); the input must already
/// be in lowest terms with a nonnegative denominator, and infinity must be
/// written exactly "1/0".
inline Fraction parse_fraction(std::string_view text) {
    const auto bad = [&](const std::string& why, std::size_t pos) {
        return ParseError("invalid fraction '" + std::string(text) + "': " + why, pos);
    };
    if (text.empty()) throw bad("empty", 1);
    const std::size_t slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    const auto parse_int = [&](std::string_view s, bool allow_sign, std::size_t offset) {
        if (s.empty()) throw bad("missing digits", offset + 1);
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-')) i = 1;
        if (i == s.size()) throw bad("missing digits", offset + i + 1);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw bad("unexpected character", offset + i + 1);
        }
        return BigInt(std::string(s));
    };
    const BigInt p = parse_int(num, true, 0);
    const BigInt q = parse_int(den, false, slash == std::string_view::npos ? 0 : slash + 1);
    if (p == 0 && q == 0) throw bad("0/0 is not a Farey vertex", 1);
    if (q == 0 && p != 1) throw bad("infinity is written 1/0", 1);
    if (boost::multiprecision::gcd(abs(p), q) > 1) throw bad("not in lowest terms", 1);
    return Fraction{p, q};
}

/// Farey adjacency: |p_u q_v - q_u p_v| = 1.
inline bool is_edge(const Fraction& u, const Fraction& v) {
    if (u == v) throw std::invalid_argument("is_edge needs distinct vertices");
    return abs(u.p * v.q - u.q * v.p) == 1;
}

/// Canonical continued fraction [a_0; a_1, ..., a_m] with a_i >= 1 for
/// i >= 1 and a_m >= 2 when m >= 1 (the Euclidean expansion).
inline std::vector<BigInt> continued_fraction(const Fraction& t) {
    if (t.is_infinity()) throw std::domain_error("continued fraction of infinity");
    std::vector<BigInt> out;
    BigInt p = t.p, q = t.q;
    while (true) {
        BigInt a = p / q;
        if (p % q != 0 && p < 0) --a;
        out.push_back(a);
        const BigInt r = p - a * q;
        if (r == 0) break;
        p = q;
        q = r;
    }
    return out;
}

/// Mediant-descent word from 1/1 in the Stern-Brocot tree of positive
/// rationals; 'L' descends toward the smaller subinterval.
inline std::string stern_brocot_word(const Fraction& t) {
    if (t.is_infinity()) throw std::domain_error("no Stern-Brocot word for infinity");
    if (t.p < 1 || t.q < 1) throw std::domain_error("Stern-Brocot word needs p >= 1 and q >= 1");
    Fraction lo{0, 1}, hi = Fraction::infinity();
    Fraction med{1, 1};
    std::string word;
    while (!(med == t)) {
        if (t.p * med.q < med.p * t.q) {  // t < med
            word.push_back('L');
            hi = med;
        } else {
            word.push_back('R');
            lo = med;
        }
        med = mediant(lo, hi);
    }
    return word;
}

/// Triangle strip of the Farey tessellation from the edge
/// (floor(t), floor(t)+1) with apex infinity down to t. vertices[0] is
/// infinity and the last vertex is t; triangles index into vertices.
struct FareyStrip {
    std::vector<Fraction> vertices;
    std::vector<std::array<int, 3>> triangles;
};

inline FareyStrip farey_corridor(const Fraction& t) {
    if (t.is_infinity()) throw std::domain_error("no strip for infinity");
    if (t.is_integer()) throw std::domain_error("integers are Farey-adjacent to infinity; no strip");
    FareyStrip strip;
    std::map<Fraction, int, FractionOrder> index;
    const auto id = [&](const Fraction& f) {
        const auto [it, fresh] = index.emplace(f, static_cast<int>(strip.vertices.size()));
        if (fresh) strip.vertices.push_back(f);
        return it->second;
    };
    const BigInt n = floor_of(t);
    Fraction lo = Fraction::make(n, 1);
    Fraction hi = Fraction::make(n + 1, 1);
    strip.triangles.push_back({id(Fraction::infinity()), id(lo), id(hi)});
    while (true) {
        const Fraction med = mediant(lo, hi);
        strip.triangles.push_back({id(lo), id(hi), id(med)});
        if (med == t) break;
        (numeric_less(t, med) ? hi : lo) = med;
    }
    return strip;
}

/// Moebius map x -> (ax + b)/(cx + d) with ad - bc = +-1 acting on
/// fractions; preserves Farey adjacency.
struct UnimodularMap {
    BigInt a{1}, b{0}, c{0}, d{1};

    UnimodularMap() = default;
    UnimodularMap(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        const BigInt det = a * d - b * c;
        if (det != 1 && det != -1) throw std::invalid_argument("determinant must be +-1");
    }

    Fraction apply(const Fraction& x) const { return Fraction::make(a * x.p + b * x.q, c * x.p + d * x.q); }

    friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
        return UnimodularMap{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                             f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
    }

    /// Bezout-derived map carrying u to infinity (identity when u already is).
    static UnimodularMap send_to_infinity(const Fraction& u) {
        if (u.is_infinity()) return UnimodularMap{};
        // extended gcd: x * p + y * q == 1 (gcd is 1 for reduced fractions)
        BigInt old_r = u.p, r = u.q;
        BigInt old_x = 1, x = 0;
        BigInt old_y = 0, y = 1;
        while (r != 0) {
            const BigInt quot = old_r / r;  // truncated is fine: invariant holds over Z
            BigInt tmp = old_r - quot * r;
            old_r = r;
            r = std::move(tmp);
            tmp = old_x - quot * x;
            old_x = x;
            x = std::move(tmp);
            tmp = old_y - quot * y;
            old_y = y;
            y = std::move(tmp);
        }
        if (old_r == -1) {
            old_x = -old_x;
            old_y = -old_y;
        }
        return UnimodularMap{old_x, old_y, u.q, -u.p};
    }
};

struct FareyGeodesics {
    int distance = 0;
    BigInt count{0};
};

inline FareyGeodesics farey_geodesics(const Fraction& u, const Fraction& v) {
    if (u == v) throw std::invalid_argument("farey_geodesics needs distinct vertices");
    if (is_edge(u, v)) return FareyGeodesics{1, 1};
    const UnimodularMap g = UnimodularMap::send_to_infinity(u);
    const Fraction t = g.apply(v);
    if (t.is_infinity() || t.is_integer())
        throw std::logic_error("normalization broke adjacency invariance");
    const FareyStrip strip = farey_corridor(t);
    SimpleGraph sg(static_cast<int>(strip.vertices.size()));
    for (const auto& tri : strip.triangles) {
        sg.add_edge(tri[0], tri[1]);
        sg.add_edge(tri[0], tri[2]);
        sg.add_edge(tri[1], tri[2]);
    }
    const GeodesicLayers layers = bfs_geodesics(sg, 0);  // vertex 0 = infinity
    const int target = static_cast<int>(strip.vertices.size()) - 1;
    return FareyGeodesics{layers.dist[static_cast<std::size_t>(target)],
                          layers.count[static_cast<std::size_t>(target)]};
}

/// Finite chunk of the Farey graph used only as an oracle universe.
struct FareyBall {
    std::vector<Fraction> labels;  // graph id -> fraction
    SimpleGraph graph{0};
    std::map<Fraction, int, FractionOrder> index;

    bool contains(const Fraction& f) const { return index.count(f) > 0; }
    int id(const Fraction& f) const { return index.at(f); }
};

/// Seed: the canonical descent chain of triangles for `center` (a single
/// base triangle for integers and infinity). Each generation adds, for every
/// edge of every triangle so far, both tessellation triangles flanking it.
inline FareyBall farey_ball(const Fraction& center, int generations, int cap = 8) {
    if (generations < 0) throw std::invalid_argument("generations must be nonnegative");
    if (generations > cap) throw std::invalid_argument("generations cap exceeded");

    FareyBall ball;
    std::vector<Fraction> labels;
    std::map<Fraction, int, FractionOrder> index;
    const auto id = [&](const Fraction& f) {
        const auto [it, fresh] = index.emplace(f, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(f);
        return it->second;
    };
    std::set<std::array<int, 3>> triangles;
    const auto add_triangle = [&](const Fraction& x, const Fraction& y, const Fraction& z) {
        std::array<int, 3> key{id(x), id(y), id(z)};
        std::sort(key.begin(), key.end());
        triangles.insert(key);
    };

    if (center.is_infinity()) {
        add_triangle(Fraction::infinity(), Fraction{0, 1}, Fraction{1, 1});
    } else if (center.is_integer()) {
        add_triangle(Fraction::infinity(), Fraction::make(center.p - 1, 1), center);
    } else {
        const FareyStrip strip = farey_corridor(center);
        for (const auto& tri : strip.triangles)
            add_triangle(strip.vertices[static_cast<std::size_t>(tri[0])],
                         strip.vertices[static_cast<std::size_t>(tri[1])],
                         strip.vertices[static_cast<std::size_t>(tri[2])]);
    }

    for (int round = 0; round < generations; ++round) {
        const std::vector<std::array<int, 3>> snapshot(triangles.begin(), triangles.end());
        for (const auto& tri : snapshot) {
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    // copies: add_triangle may grow labels and invalidate references
                    const Fraction x = labels[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])];
                    const Fraction y = labels[static_cast<std::size_t>(tri[static_cast<std::size_t>(j)])];
                    // the two triangles flanking edge (x, y)
                    add_triangle(x, y, mediant(x, y));
                    add_triangle(x, y, Fraction::make(x.p - y.p, x.q - y.q));
                }
            }
        }
    }

    ball.labels = labels;
    ball.index = std::move(index);
    ball.graph = SimpleGraph(static_cast<int>(labels.size()));
    for (const auto& tri : triangles) {
        ball.graph.add_edge(tri[0], tri[1]);
        ball.graph.add_edge(tri[0], tri[2]);
        ball.graph.add_edge(tri[1], tri[2]);
    }
    return ball;
}

}  // namespace gst
