#ifndef WKTAU_TOOLS_CLI_HPP
#define WKTAU_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace wktau::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_verification = 3,
    exit_resource = 4,
};

enum class Format { json, csv, text };

struct RunConfig {
    std::string command;
    int degree = 12;
    Format format = Format::text;
    std::string output;  // empty: stdout
    bool approx = false;
    std::size_t max_terms = 2'000'000;

    int max_m = 5;
    int max_n = 5;
    std::string basis = "p";
    std::vector<int> indices;
    std::vector<std::string> suites;
    int max_weight = 30;
};

/// Each command writes its result to out and diagnostics to err and returns
/// an exit code; exceptions from the library are mapped by run().
int cmd_amatrix(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_intersect(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wktau::cli

#endif  // WKTAU_TOOLS_CLI_HPP
