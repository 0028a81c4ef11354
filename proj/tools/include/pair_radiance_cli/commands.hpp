#pragma once

#include <iosfwd>
#include <string>

#include "pair_radiance/errors.hpp"
#include "pair_radiance_cli/config.hpp"
#include "pair_radiance_cli/output.hpp"

namespace pair_radiance::cli {

/// Builds the artifact for one subcommand. threads only changes speed.
Table run_command(const std::string& command, const RunConfig& cfg, int threads);

/// Exit status for an error kind: 2 config or input, 3 numerical, 4 io.
int exit_code(ErrorKind kind);

/// Full command line entry point. Returns the process exit status.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pair_radiance::cli
