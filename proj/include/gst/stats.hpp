#pragma once

// Exhaustive enumeration over binary invariants of a fixed length:
// count/depth distributions, the fraction of tunnels with a unique minimal
// construction, and how often the L1,R1,L1,R1 block occurs.

#include "gst/common.hpp"
#include "gst/counting.hpp"
#include "gst/invariants.hpp"

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace gst {

inline constexpr int kDefaultEnumerationCap = 20;

struct LengthSummary {
    int length = 0;
    std::map<BigInt, std::uint64_t> histogram;  // count value -> frequency
    std::map<int, std::uint64_t> depth_histogram;
    BigInt unique_numerator{0};  // unique_fraction = unique_numerator / 2^length, reduced
    BigInt unique_denominator{1};
};

namespace detail {

inline void reduce_fraction(BigInt& num, BigInt& den) {
    const BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

inline BinaryInvariants bits_from_mask(std::uint64_t mask, int length) {
    BinaryInvariants b;
    b.bits.resize(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) b.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return b;
}

}  // namespace detail

/// Streams all 2^length binary sequences through the matrix algorithm.
inline LengthSummary enumerate_counts(int length, int cap = kDefaultEnumerationCap) {
    if (length < 0) throw std::invalid_argument("length must be nonnegative");
    if (length > cap) throw std::invalid_argument("enumeration cap exceeded");
    LengthSummary s;
    s.length = length;
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const CountResult r =
            count_minimal_sequences(binary_to_steps(detail::bits_from_mask(mask, length)));
        ++s.histogram[r.count];
        ++s.depth_histogram[r.depth];
    }
    const auto it = s.histogram.find(BigInt(1));
    s.unique_numerator = it == s.histogram.end() ? 0 : BigInt(it->second);
    s.unique_denominator = BigInt(total);
    detail::reduce_fraction(s.unique_numerator, s.unique_denominator);
    return s;
}

/// True iff the consecutive block L1, R1, L1, R1 occurs.
inline bool block_occurrence(const std::vector<Config>& configs) {
    static constexpr Config block[4] = {Config::L1, Config::R1, Config::L1, Config::R1};
    if (configs.size() < 4) return false;
    for (std::size_t i = 0; i + 4 <= configs.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < 4; ++j) {
            if (configs[i + j] != block[j]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

struct GenericityRow {
    int length = 0;
    std::uint64_t total = 0;
    std::uint64_t block_count = 0;   // inputs whose config sequence contains L1R1L1R1
    std::uint64_t unique_count = 0;  // inputs with count == 1
};

inline std::vector<GenericityRow> genericity_report(int min_length, int max_length,
                                                    int cap = kDefaultEnumerationCap) {
    if (min_length < 0 || max_length < min_length) throw std::invalid_argument("bad length range");
    if (max_length > cap) throw std::invalid_argument("enumeration cap exceeded");
    std::vector<GenericityRow> rows;
    for (int length = min_length; length <= max_length; ++length) {
        GenericityRow row;
        row.length = length;
        row.total = std::uint64_t{1} << length;
        for (std::uint64_t mask = 0; mask < row.total; ++mask) {
            const CountResult r =
                count_minimal_sequences(binary_to_steps(detail::bits_from_mask(mask, length)));
            if (block_occurrence(r.configs)) ++row.block_count;
            if (r.count == 1) ++row.unique_count;
        }
        rows.push_back(row);
    }
    return rows;
}

inline std::string format_fraction(BigInt num, BigInt den) {
    detail::reduce_fraction(num, den);
    return num.str() + "/" + den.str();
}

inline std::string format_genericity_table(const std::vector<GenericityRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "length" << std::setw(12) << "total" << std::setw(18)
        << "block_fraction" << std::setw(18) << "unique_fraction" << "\n";
    for (const GenericityRow& row : rows) {
        out << std::left << std::setw(8) << row.length << std::setw(12) << row.total
            << std::setw(18) << format_fraction(BigInt(row.block_count), BigInt(row.total))
            << std::setw(18) << format_fraction(BigInt(row.unique_count), BigInt(row.total))
            << "\n";
    }
    return out.str();
}

}  // namespace gst
