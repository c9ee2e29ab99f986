#ifndef BGAP_CLI_COMMANDS_HPP
#define BGAP_CLI_COMMANDS_HPP

#include "cli/pipeline.hpp"

#include <functional>
#include <iosfwd>

namespace bgap::cli {

enum ExitCode : int { exit_ok = 0, exit_property_violation = 1, exit_input_error = 2 };

/// Informational lines go to `log`, problems to `err`.
struct Streams {
    std::ostream& log;
    std::ostream& err;
};

int cmd_ingest(const RunConfig& rc, Streams io);
int cmd_fit(const RunConfig& rc, Streams io);
int cmd_gap(const RunConfig& rc, Streams io);
int cmd_sensitivity(const RunConfig& rc, Streams io);
int cmd_simulate(const RunConfig& rc, Streams io);
int cmd_report(const RunConfig& rc, Streams io);

/// Runs `body` and maps exceptions onto the exit-code contract.
int guarded(const std::function<int()>& body, std::ostream& err);

/// Round-trip tolerance (relative) for the simulate command.
inline constexpr double round_trip_tolerance = 1e-3;

} // namespace bgap::cli

#endif
