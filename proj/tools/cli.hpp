#ifndef F4REP_CLI_HPP
#define F4REP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace f4rep::cli
{

enum ExitCode : int
{
    kPass = 0,
    kFail = 1,
    kUsage = 2,
};

struct RunConfig
{
    std::string command;    // verify, singular, identity, dim, branch, harmonic, errata, export
    std::string target;     // suite for verify, what for export
    int degree = 0;
    int order = 30;
    unsigned long k = 0;
    unsigned long l = 0;
    bool table = false;
    std::optional<std::string> json_path;
    std::uint64_t seed = 0;
};

/// Parses argv (without the program name). Returns nullopt after printing
/// usage to err.
std::optional<RunConfig> parse(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                               int &exit_code);

/// Runs a parsed configuration; text report to out, JSON to config.json_path.
int execute(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse + execute.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace f4rep::cli

#endif
