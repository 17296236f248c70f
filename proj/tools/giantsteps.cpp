// Command-line front end: gst, convert, corridor, verify, stats and farey
// subcommands over the library. Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error.

#include "gst/document.hpp"
#include "gst/farey.hpp"
#include "gst/oracle.hpp"
#include "gst/stats.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

// Detect whether an input is binary invariants or a step sequence; --steps
// forces step parsing so that diagnostics land on the right grammar.
gst::StepSequence parse_input(const std::string& input, bool force_steps) {
    if (force_steps) return gst::parse_steps(input);
    const bool looks_binary = input.find_first_not_of("01") == std::string::npos;
    if (looks_binary) return gst::binary_to_steps(gst::parse_binary(input));
    return gst::parse_steps(input);
}

int enumeration_cap() {
    if (const char* env = std::getenv("GIANTSTEPS_MAX_ENUM")) {
        const int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return gst::kDefaultEnumerationCap;
}

int run_gst(const std::string& input, bool force_steps, bool verbose, bool json) {
    const gst::StepSequence s = parse_input(input, force_steps);
    const gst::CountResult r = gst::count_minimal_sequences(s);
    if (json) {
        if (s.is_simple()) {
            std::cout << gst::count_result_document(r, input).dump(2) << "\n";
        } else {
            const gst::Corridor c = gst::build_corridor(s);
            std::cout << gst::count_result_document(r, input, &c).dump(2) << "\n";
        }
    } else if (verbose) {
        std::cout << gst::verbose_report(r);
    } else {
        std::cout << r.count.str() << "\n";
    }
    return 0;
}

int run_convert(const std::string& input, bool force_steps, const std::string& to) {
    const gst::StepSequence s = parse_input(input, force_steps);
    if (to == "steps") {
        std::cout << s.letters << "\n";
    } else if (to == "binary") {
        std::cout << gst::steps_to_binary(s).str() << "\n";
    } else {  // turns
        std::cout << gst::binary_to_turns(gst::steps_to_binary(s)).turns << "\n";
    }
    return 0;
}

int run_corridor(const std::string& input, bool force_steps, const std::string& render) {
    const gst::StepSequence s = parse_input(input, force_steps);
    const gst::Corridor c = gst::build_corridor(s);
    if (render == "json") {
        std::cout << gst::corridor_command_document(c, input).dump(2) << "\n";
    } else {
        std::cout << gst::render_ascii(c);
    }
    return 0;
}

int run_verify(int max_length, bool inject_fault) {
    bool all_agree = true;
    std::string first_failure;
    for (int length = 0; length <= max_length; ++length) {
        const std::uint64_t total = std::uint64_t{1} << length;
        std::uint64_t agreed = 0;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            gst::BinaryInvariants b;
            b.bits.resize(static_cast<std::size_t>(length));
            for (int i = 0; i < length; ++i) b.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            gst::EquivalenceReport rep = gst::check_equivalence(b);
            if (inject_fault && length == max_length && mask == 0) {
                rep.count_oracle += 1;
                rep.detail = "injected fault on " + b.str();
            }
            if (rep.agree()) {
                ++agreed;
            } else if (first_failure.empty()) {
                first_failure = rep.detail.empty() ? rep.binary.str() : rep.detail;
            }
        }
        std::cout << "length " << length << ": " << agreed << "/" << total << " agree\n";
        if (agreed != total) all_agree = false;
    }
    if (!all_agree) {
        std::cerr << "verification failed: " << first_failure << "\n";
        return 1;
    }
    return 0;
}

int run_stats(const std::optional<int>& length, const std::vector<int>& range, bool json) {
    int lo = 0, hi = 0;
    if (length) {
        lo = hi = *length;
    } else if (range.size() == 2) {
        lo = range[0];
        hi = range[1];
    } else {
        std::cerr << "stats: pass --length n or --range a b\n";
        return 2;
    }
    const int cap = enumeration_cap();
    std::vector<gst::LengthSummary> summaries;
    for (int n = lo; n <= hi; ++n) summaries.push_back(gst::enumerate_counts(n, cap));
    const std::vector<gst::GenericityRow> rows = gst::genericity_report(lo, hi, cap);
    if (json) {
        std::cout << gst::stats_document(summaries, rows).dump(2) << "\n";
        return 0;
    }
    std::cout << gst::format_genericity_table(rows);
    for (const gst::LengthSummary& s : summaries) {
        std::cout << "length " << s.length << " histogram:";
        for (const auto& [count, freq] : s.histogram) std::cout << " " << count.str() << ":" << freq;
        std::cout << " depths:";
        for (const auto& [d, freq] : s.depth_histogram) std::cout << " " << d << ":" << freq;
        std::cout << " unique " << s.unique_numerator.str() << "/" << s.unique_denominator.str()
                  << "\n";
    }
    return 0;
}

int run_farey(const std::string& u_text, const std::string& v_text, bool json) {
    const gst::Fraction u = gst::parse_fraction(u_text);
    const gst::Fraction v = gst::parse_fraction(v_text);
    if (u == v) {
        std::cerr << "error: vertices must be distinct\n";
        return 2;
    }
    const gst::FareyGeodesics g = gst::farey_geodesics(u, v);
    if (json) {
        std::cout << gst::farey_document(u, v, g).dump(2) << "\n";
    } else {
        std::cout << "distance: " << g.distance << "\n";
        std::cout << "count: " << g.count.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal giant-step constructions of knot tunnels"};
    app.require_subcommand(1);

    std::string input;
    bool force_steps = false, verbose = false, json = false;

    CLI::App* gst_cmd = app.add_subcommand("gst", "count minimal giant-step constructions");
    gst_cmd->add_option("input", input, "binary invariants or step sequence")->required();
    gst_cmd->add_flag("--steps", force_steps, "force step-sequence parsing");
    gst_cmd->add_flag("--verbose", verbose, "full report: configurations, matrices, product");
    gst_cmd->add_flag("--json", json, "emit the JSON output document");

    std::string to;
    CLI::App* convert_cmd = app.add_subcommand("convert", "translate between descriptions");
    convert_cmd->add_option("input", input, "binary invariants or step sequence")->required();
    convert_cmd->add_option("--to", to, "target description")
        ->required()
        ->check(CLI::IsMember({"steps", "binary", "turns"}));
    convert_cmd->add_flag("--steps", force_steps, "force step-sequence parsing");

    std::string render = "ascii";
    CLI::App* corridor_cmd = app.add_subcommand("corridor", "build and render the corridor");
    corridor_cmd->add_option("input", input, "binary invariants or step sequence")->required();
    corridor_cmd->add_option("--render", render, "output form")
        ->check(CLI::IsMember({"ascii", "json"}));
    corridor_cmd->add_flag("--steps", force_steps, "force step-sequence parsing");

    int max_length = 10;
    bool inject_fault = false;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "exhaustively compare the algorithm with the BFS oracle");
    verify_cmd->add_option("--max-length", max_length, "largest binary length to sweep")
        ->check(CLI::Range(0, 24));
    verify_cmd->add_flag("--inject-fault", inject_fault)->group("");  // testing aid, hidden

    std::optional<int> stats_length;
    std::vector<int> stats_range;
    CLI::App* stats_cmd = app.add_subcommand("stats", "count/depth distributions per length");
    auto* len_opt = stats_cmd->add_option("--length", stats_length, "single length");
    stats_cmd->add_option("--range", stats_range, "length range a b")
        ->expected(2)
        ->excludes(len_opt);
    stats_cmd->add_flag("--json", json, "emit the JSON output document");

    std::string u_text, v_text;
    CLI::App* farey_cmd = app.add_subcommand("farey", "Farey-graph geodesic distance and count");
    farey_cmd->add_option("u", u_text, "first vertex, e.g. 1/0")->required();
    farey_cmd->add_option("v", v_text, "second vertex, e.g. 5/3")->required();
    farey_cmd->add_flag("--json", json, "emit the JSON output document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gst_cmd) return run_gst(input, force_steps, verbose, json);
        if (*convert_cmd) return run_convert(input, force_steps, to);
        if (*corridor_cmd) return run_corridor(input, force_steps, render);
        if (*verify_cmd) return run_verify(max_length, inject_fault);
        if (*stats_cmd) return run_stats(stats_length, stats_range, json);
        if (*farey_cmd) return run_farey(u_text, v_text, json);
    } catch (const gst::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gst::SimpleTunnelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
