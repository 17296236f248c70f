#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gst {

/// Path counts grow like Fibonacci numbers in the input length, so every
/// count (and the lambda/rho profile) is an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Boundary chain of the corridor strip a vertex belongs to.
enum class Side { Left, Right };

/// Position of the final vertex tau relative to the last nabla-edge.
enum class Disposition { LeftEndpoint, RightEndpoint, SpansBelow };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

inline const char* to_string(Disposition d) {
    switch (d) {
        case Disposition::LeftEndpoint: return "left_endpoint";
        case Disposition::RightEndpoint: return "right_endpoint";
        default: return "spans_below";
    }
}

/// Rejected input. `position` is 1-based and also spelled out in what().
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Signal that the simple tunnel "D" reached an operation that needs binary
/// invariants or a corridor; the simple tunnel has neither.
class SimpleTunnelError : public std::domain_error {
public:
    SimpleTunnelError()
        : std::domain_error("simple tunnel: no binary invariants beyond the primitive triangle") {}
};

}  // namespace gst
