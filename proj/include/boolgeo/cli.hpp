#pragma once

// Command-line front end: parser -> orthogonal form -> solver / geometry / stats.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boolgeo/ortho.hpp"

namespace boolgeo::cli {

enum class Command { orthogonalize, solve, decompose, classify, iso, stats };
enum class OutputFormat { text, json, csv };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 1;
inline constexpr int limit_exceeded = 2;
inline constexpr int inconsistent = 3;
inline constexpr int bad_arguments = 4;
}  // namespace exit_code

// Overrides the default --max-vars when set.
inline constexpr const char* max_vars_env = "BOOLGEO_MAX_VARS";

struct StatsQuery {
    std::vector<std::uint64_t> avg_irr_m;
    unsigned avg_irr_rank = 0;
    std::vector<std::uint64_t> avg_ir_m;
    std::vector<std::uint64_t> iso_m;
    bool exhaustive = false;
    std::uint64_t samples = 0;
};

struct RunConfig {
    Command command = Command::orthogonalize;
    // Inline system texts (-e) and files (-f); stdin is read when both are empty.
    std::vector<std::string> inline_systems;
    std::vector<std::string> input_files;
    unsigned rank = 1;
    Limits limits;
    std::optional<std::uint64_t> solution_limit;
    bool count_only = false;
    bool z_points = false;
    // Unset means the command's natural format (JSON for orthogonalize, text otherwise).
    std::optional<OutputFormat> format;
    std::uint64_t seed = 0;
    StatsQuery stats;
};

// Executes one command. Results go to out, diagnostics to err.
int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

// Builds a RunConfig from argv. Returns an exit code instead when the arguments are
// invalid or only help was requested.
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err);

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace boolgeo::cli
