#include "gst/invariants.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
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

TEST_CASE("parse_binary accepts bit strings and reports bad positions") {
    CHECK(parse_binary("0011100011100").size() == 13);
    CHECK(parse_binary("0011100011100").str() == "0011100011100");
    CHECK(parse_binary("").size() == 0);

    try {
        parse_binary("0a1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("parse_steps validates the step grammar with positions") {
    CHECK(parse_steps("DRRRDRDLLLDLDRR").size() == 15);
    CHECK(parse_steps("D").is_simple());
    CHECK(parse_steps("DR").letters == "DR");

    const auto expect_error_at = [](const std::string& text, std::size_t pos) {
        try {
            parse_steps(text);
            FAIL("expected ParseError for " << text);
        } catch (const ParseError& e) {
            INFO(text << ": " << e.what());
            CHECK(e.position() == pos);
        }
    };
    expect_error_at("", 1);
    expect_error_at("RRD", 1);       // must start with D
    expect_error_at("DL", 2);        // second step must be R
    expect_error_at("DD", 2);
    expect_error_at("DRLD", 3);      // L cannot follow R
    expect_error_at("DRDD", 4);      // D cannot follow D
    expect_error_at("DRRLD", 4);     // L cannot follow R
    expect_error_at("DRxD", 3);      // bad alphabet
}

TEST_CASE("binary_to_steps reproduces the published example") {
    CHECK(binary_to_steps(parse_binary("0011100011100")).letters == "DRRRDRDLLLDLDRR");
    CHECK(binary_to_steps(parse_binary("")).letters == "DR");
    CHECK(binary_to_steps(parse_binary("111")).letters == "DRDRD");
}

TEST_CASE("steps_to_binary inverts binary_to_steps") {
    CHECK(steps_to_binary(parse_steps("DRRRDRDLLLDLDRR")).str() == "0011100011100");
    CHECK(steps_to_binary(parse_steps("DR")).size() == 0);
    CHECK(steps_to_binary(parse_steps("DRDRD")).str() == "111");
    CHECK_THROWS_AS(steps_to_binary(parse_steps("D")), SimpleTunnelError);
}

TEST_CASE("binary_to_turns starts left and flips on ones") {
    CHECK(binary_to_turns(parse_binary("")).turns == "L");
    CHECK(binary_to_turns(parse_binary("0011100011100")).turns == "LLLRLRRRRLRLLL");
    CHECK(binary_to_turns(parse_binary("111")).turns == "LRLR");
}

TEST_CASE("run_decomposition factors the step sequence") {
    const RunDecomposition rd = run_decomposition(parse_steps("DRRRDRDLLLDLDRR"));
    REQUIRE(rd.runs.size() == 5);
    CHECK(rd.runs[0] == Run{'R', 3});
    CHECK(rd.runs[1] == Run{'R', 1});
    CHECK(rd.runs[2] == Run{'L', 3});
    CHECK(rd.runs[3] == Run{'L', 1});
    CHECK(rd.runs[4] == Run{'R', 2});
    CHECK_FALSE(rd.trailing_d);

    const RunDecomposition rd2 = run_decomposition(parse_steps("DRDRD"));
    REQUIRE(rd2.runs.size() == 2);
    CHECK(rd2.runs[0] == Run{'R', 1});
    CHECK(rd2.runs[1] == Run{'R', 1});
    CHECK(rd2.trailing_d);

    const RunDecomposition rd3 = run_decomposition(parse_steps("DR"));
    REQUIRE(rd3.runs.size() == 1);
    CHECK(rd3.runs[0] == Run{'R', 1});
    CHECK_FALSE(rd3.trailing_d);

    CHECK_THROWS_AS(run_decomposition(parse_steps("D")), SimpleTunnelError);
}

TEST_CASE("round trips, grammar soundness and length laws, exhaustive to 16") {
    for (int length = 0; length <= 16; ++length) {
        const std::uint64_t total = std::uint64_t{1} << length;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const BinaryInvariants b = bits_of(mask, length);
            const StepSequence s = binary_to_steps(b);
            if (!(steps_to_binary(s) == b)) {
                FAIL("round trip failed for " << b.str());
            }
            if (!(binary_to_steps(steps_to_binary(s)) == s)) {
                FAIL("steps round trip failed for " << s.letters);
            }
            if (length <= 12) {
                // grammar soundness: the generated sequence re-parses
                CHECK_NOTHROW(parse_steps(s.letters));
            }
            if (s.size() != b.size() + 2) FAIL("length law broke for " << b.str());
        }
        // turn-sequence length law spot check per length
        const BinaryInvariants b = bits_of(0, length);
        CHECK(binary_to_turns(b).turns.size() == b.size() + 1);
    }
}

TEST_CASE("turn/step coherence: D letters match odd-run accounting, exhaustive to 14") {
    // Two derivations of the number of 'D' letters. From the steps: count
    // them. From the bits alone: a 'D' is emitted exactly for the 1-bits at
    // positions whose previous letter is L or R, which are the odd-indexed
    // members of each maximal 1-run; so #D = 1 + sum of ceil(run/2).
    for (int length = 0; length <= 14; ++length) {
        const std::uint64_t total = std::uint64_t{1} << length;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const BinaryInvariants b = bits_of(mask, length);
            const StepSequence s = binary_to_steps(b);
            const auto d_letters =
                static_cast<int>(std::count(s.letters.begin(), s.letters.end(), 'D'));

            int predicted = 1;
            int run = 0;
            for (std::size_t i = 0; i <= b.bits.size(); ++i) {
                if (i < b.bits.size() && b.bits[i]) {
                    ++run;
                } else {
                    predicted += (run + 1) / 2;
                    run = 0;
                }
            }
            if (d_letters != predicted) {
                FAIL("D census mismatch for " << b.str() << ": " << d_letters << " vs "
                                              << predicted);
            }

            // and directly: 1-bits whose previous letter is L or R
            int direct = 1;
            for (std::size_t i = 0; i < b.bits.size(); ++i) {
                if (b.bits[i] && s.letters[i + 1] != 'D') ++direct;
            }
            if (d_letters != direct) FAIL("direct D census mismatch for " << b.str());
        }
    }
}
