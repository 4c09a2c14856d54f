#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherelab/lrmodel/report.hpp"
#include "spherelab/sphere7.hpp"

namespace spherelab::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kOutputDirVariable = "SPHERELAB_OUT_DIR";

/// Bad flags, bad config values or unusable paths; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; the message is the usage text (exit status 0).
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    /// Parses "start:stop:count".
    static Grid parse(const std::string& text);
    /// Evenly spaced values including both ends; a single value is `start`.
    std::vector<double> values() const;
};

struct Tolerances {
    double algebraic = 1e-12;
    double solver = 1e-10;
    double prediction = 1e-8;
    double sigmas = 5.0;
};

struct RunConfig {
    std::string command;
    std::string state;
    std::string unit;  // "deg" or "rad"; required whenever angles are given

    /// Flat (polar, azimuth) pairs, one pair per site, in `unit`.
    std::vector<double> angles;
    std::string angles_file;
    std::optional<double> theta;
    std::optional<double> alpha;
    std::optional<double> delta;
    std::optional<Grid> theta_grid;
    std::optional<Grid> alpha_grid;
    std::optional<Grid> delta_grid;

    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    double weight_plus = 0.5;

    std::string table = "cyclic";
    std::string table_file;
    std::string ghz_mode = "postulated_z";
    double z_e7 = 0.0;
    bool strict_table = false;
    std::string b_minus = "printed";
    std::string plane = "xz";
    int grid_count = 8;

    Tolerances tolerances;

    std::string output;
    std::string format = "json";
};

/// Parses flags (and a JSON file given by --config; flags override it).
/// Throws UsageError on invalid input.
RunConfig parse_arguments(int argc, const char* const* argv);

/// Executes a parsed command, writing artifacts and a short summary to `out`.
/// Returns the process exit status.
int run_command(const RunConfig& config, std::ostream& out);

/// parse_arguments + run_command with errors mapped to exit status 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Seeded invariant suite of the Cl(3,0) and 7D kernels.
lrmodel::ComparisonReport identity_suite(std::uint64_t seed, std::uint64_t samples, const sphere7::CrossTable& table,
                                         double tolerance = 1e-12);

/// Writes `content` to `path` through a temporary file and a rename.
/// Throws UsageError when the path cannot be written.
void write_atomic(const std::string& path, const std::string& content);

/// `explicit_path` if non-empty, else <$SPHERELAB_OUT_DIR or .>/spherelab-<stem>.<format>.
std::string resolve_output_path(const std::string& explicit_path, const std::string& stem, const std::string& format);

}  // namespace spherelab::cli
