#ifndef EVACSIM_CLI_APP_HPP
#define EVACSIM_CLI_APP_HPP

#include <string>
#include <vector>

namespace evacsim::cli {

// Exit statuses shared by the subcommands.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kStepLimit = 2;

/// Dispatches `simulate`, `experiment`, `plot` and `list-presets`.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without argv[0]

/// Paths matching a glob pattern (`*` and `?` in the filename part; the
/// directory part is taken literally). Results are sorted.
std::vector<std::string> expand_glob(const std::string& pattern);

}  // namespace evacsim::cli

#endif  // EVACSIM_CLI_APP_HPP
