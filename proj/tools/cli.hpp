#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equidist::cli {

enum class Subcommand { verify, bound, certify, construct, search, sweep };
enum class OutputFormat { text, json, csv };

enum ExitCode : int {
    kSuccess = 0,
    kClaimViolated = 1,
    kUsageError = 2,
    kResourceExhausted = 3,
};

struct Limits {
    std::uint64_t max_vertices = 4096;
    std::optional<std::uint64_t> node_budget;
    std::optional<double> time_limit_seconds;
    unsigned threads = 1;
};

/// Everything a run depends on besides the contents of the input file.
struct RunConfig {
    Subcommand subcommand = Subcommand::verify;
    std::optional<std::string> input_path;  // "-" is standard input
    OutputFormat output_format = OutputFormat::text;
    std::optional<std::uint64_t> seed;
    Limits limits;

    int n = 0;
    int q = 2;
    int lambda = 0;
    std::size_t order = 0;
    bool as_family = false;
    int max_n = 0;
    std::optional<std::string> resume_dir;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kThreadsEnv = "EQUIDIST_THREADS";

/// Parses arguments (without the program name). `default_threads` is the
/// value of kThreadsEnv, if set. Throws UsageError; returns nullopt after
/// printing help to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, const char* default_threads,
                                    std::ostream& out);

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args + run with every error mapped onto the exit-code contract.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace equidist::cli
