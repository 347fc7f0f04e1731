#pragma once

#include "hdts/budget.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hdts::cli
{

// Exit statuses: the verdict of the command, or an error.
inline constexpr int exit_affirmative = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

struct command
{
    std::string verb;
    std::vector< std::string > inputs;
    std::string model = "cts";
    int depth = 0;
    std::optional< int > dim_bound;
    std::optional< std::size_t > budget_nodes;
    std::string out;
    bool timings = false;

    // cube
    std::string kind = "cube";
    std::vector< std::string > letters;
    // lambda
    std::string generators = "I";
    std::string with_s;
    std::vector< std::string > labels;
};

inline const std::vector< std::string > verbs = { "validate", "info",        "cube",     "realize", "nerve", "cubify",
                                                  "coreflect", "csa1",       "bls",      "sh",      "check-hda",
                                                  "equiv",    "homotopic",   "cellularize", "lambda", "dot" };

// Runs a parsed command. The report (JSON, or DOT for the dot verb) goes to
// cmd.out when set, otherwise to `out`; diagnostics go to `err`.
int run( const command& cmd, std::ostream& out, std::ostream& err );

// Parses the arguments and runs the command.
int main_entry( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace hdts::cli
