#pragma once

namespace xxnet {
namespace cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Parses argv and runs the requested subcommand. Returns the process exit
/// status: 0 on success, nonzero with a machine-readable JSON error object
/// on stderr otherwise. Files are the only side effects besides stdio.
int run(int argc, const char* const* argv);

}  // namespace cli
}  // namespace xxnet
