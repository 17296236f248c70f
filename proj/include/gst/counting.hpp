#pragma once

// The block-configuration / transfer-matrix algorithm: classify the corridor
// portions between consecutive nabla-edges as L1, R1, L2 or R2, fold the
// corresponding 2x2 matrices over the profile (lambda_1, rho_1) = (1, 1), and
// read off the number of minimal giant-step constructions and the depth.

#include "gst/common.hpp"
#include "gst/invariants.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gst {

/// Shape of the corridor between two consecutive nabla-edges: the letter is
/// the run letter of the steps below the upper nabla simplex, the subscript
/// is 1 when that run has a single step and 2 when it has two or more.
enum class Config { L1, R1, L2, R2 };

inline const char* to_string(Config c) {
    switch (c) {
        case Config::L1: return "L1";
        case Config::R1: return "R1";
        case Config::L2: return "L2";
        default: return "R2";
    }
}

/// 2x2 matrix with arbitrary-precision entries, row-major [[a,b],[c,d]].
struct Matrix2 {
    BigInt a{0}, b{0}, c{0}, d{0};

    static Matrix2 identity() { return Matrix2{1, 0, 0, 1}; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return Matrix2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                       x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    std::string str() const {
        return "[ [ " + a.str() + ", " + b.str() + " ], [ " + c.str() + ", " + d.str() + " ] ]";
    }

    bool operator==(const Matrix2&) const = default;
};

/// Transfer matrix of a configuration, acting on column vectors
/// (lambda, rho).
inline Matrix2 config_matrix(Config c) {
    switch (c) {
        case Config::L1: return Matrix2{1, 0, 1, 1};
        case Config::R1: return Matrix2{1, 1, 0, 1};
        case Config::L2: return Matrix2{1, 0, 1, 0};
        default: return Matrix2{0, 1, 0, 1};  // R2
    }
}

struct ConfigSequence {
    std::vector<Config> configs;  // C_2 ... C_k, one per run after the first
    Disposition disposition = Disposition::RightEndpoint;
};

inline ConfigSequence config_sequence(const StepSequence& s) {
    if (s.is_simple()) throw SimpleTunnelError();
    const RunDecomposition rd = run_decomposition(s);
    ConfigSequence out;
    out.configs.reserve(rd.runs.size() > 0 ? rd.runs.size() - 1 : 0);
    for (std::size_t i = 1; i < rd.runs.size(); ++i) {
        const Run& r = rd.runs[i];
        const bool single = r.length == 1;
        out.configs.push_back(r.letter == 'L' ? (single ? Config::L1 : Config::L2)
                                              : (single ? Config::R1 : Config::R2));
    }
    out.disposition = rd.trailing_d ? Disposition::SpansBelow
                      : s.letters.back() == 'L' ? Disposition::LeftEndpoint
                                                : Disposition::RightEndpoint;
    return out;
}

/// Disposition refined for reporting: depth-1 tunnels that are not simple
/// ("DR...R", a single run) are singled out, as is the simple tunnel "D".
enum class CountDisposition { LeftEndpoint, RightEndpoint, SpansBelow, Depth1Special, SimpleTunnel };

inline const char* to_string(CountDisposition d) {
    switch (d) {
        case CountDisposition::LeftEndpoint: return "left_endpoint";
        case CountDisposition::RightEndpoint: return "right_endpoint";
        case CountDisposition::SpansBelow: return "spans_below";
        case CountDisposition::Depth1Special: return "depth_1";
        default: return "simple_tunnel";
    }
}

struct CountResult {
    BinaryInvariants binary;  // empty for the simple tunnel
    StepSequence steps;
    std::vector<Config> configs;                     // C_2 ... C_k
    std::vector<Matrix2> matrices;                   // M_2 ... M_k
    Matrix2 product = Matrix2::identity();           // M_k * ... * M_2
    std::vector<std::pair<BigInt, BigInt>> profile;  // (lambda_i, rho_i), i = 1..k
    CountDisposition disposition = CountDisposition::SimpleTunnel;
    int depth = 0;
    BigInt count{0};
};

inline CountResult count_minimal_sequences(const StepSequence& s) {
    CountResult r;
    r.steps = s;
    if (s.is_simple()) {
        r.disposition = CountDisposition::SimpleTunnel;
        r.depth = 1;
        r.count = 1;
        return r;
    }
    r.binary = steps_to_binary(s);
    const ConfigSequence cs = config_sequence(s);
    r.configs = cs.configs;

    BigInt lambda = 1, rho = 1;
    r.profile.emplace_back(lambda, rho);
    for (const Config c : r.configs) {
        const Matrix2 m = config_matrix(c);
        r.matrices.push_back(m);
        BigInt next_lambda = m.a * lambda + m.b * rho;
        BigInt next_rho = m.c * lambda + m.d * rho;
        lambda = std::move(next_lambda);
        rho = std::move(next_rho);
        r.profile.emplace_back(lambda, rho);
        r.product = m * r.product;
    }

    const int k = static_cast<int>(r.profile.size());
    switch (cs.disposition) {
        case Disposition::SpansBelow:
            r.disposition = CountDisposition::SpansBelow;
            r.depth = k + 1;
            r.count = lambda + rho;
            break;
        case Disposition::LeftEndpoint:
            r.disposition = k == 1 ? CountDisposition::Depth1Special : CountDisposition::LeftEndpoint;
            r.depth = k;
            r.count = lambda;
            break;
        case Disposition::RightEndpoint:
            r.disposition = k == 1 ? CountDisposition::Depth1Special : CountDisposition::RightEndpoint;
            r.depth = k;
            r.count = rho;
            break;
    }
    return r;
}

/// Length of a minimal giant-step construction; equals the BFS distance from
/// pi0 to tau in the corridor graph.
inline int depth(const StepSequence& s) { return count_minimal_sequences(s).depth; }

inline std::string verbose_report(const CountResult& r) {
    std::ostringstream out;
    out << "Step sequence: " << r.steps.letters << "\n";
    if (r.disposition == CountDisposition::SimpleTunnel) {
        out << "Simple tunnel: the principal path has only Step 0.\n";
    } else {
        out << "Binary invariants: " << (r.binary.size() ? r.binary.str() : "(empty)") << "\n";
        out << "Block configurations: ";
        if (r.configs.empty()) {
            out << "(none: single run)";
        } else {
            for (std::size_t i = 0; i < r.configs.size(); ++i) {
                if (i) out << ", ";
                out << to_string(r.configs[i]);
            }
        }
        out << "\n";
        if (!r.matrices.empty()) {
            out << "Transformation matrices M_2, ..., M_k:\n";
            for (const Matrix2& m : r.matrices) out << "   " << m.str() << "\n";
            out << "M_k * ... * M_2 is " << r.product.str() << ".\n";
        }
        out << "Lambda/rho profile:";
        for (const auto& [lambda, rho] : r.profile) {
            out << " (" << lambda.str() << ", " << rho.str() << ")";
        }
        out << "\n";
        const std::size_t k = r.profile.size();
        out << "Disposition: ";
        switch (r.disposition) {
            case CountDisposition::Depth1Special:
                out << "tau is an endpoint of nabla(1) (depth 1, not simple)";
                break;
            case CountDisposition::LeftEndpoint:
                out << "tau is the left endpoint of nabla(" << k << ")";
                break;
            case CountDisposition::RightEndpoint:
                out << "tau is the right endpoint of nabla(" << k << ")";
                break;
            default:
                out << "tau spans a 2-simplex below nabla(" << k << ")";
                break;
        }
        out << "\n";
    }
    out << "Depth: " << r.depth << "\n";
    out << "This tunnel has " << r.count.str() << " minimal giant step construction"
        << (r.count == 1 ? "" : "s") << ".\n";
    return out.str();
}

}  // namespace gst
