#pragma once

namespace lanekit {

/// Entry point behind the lanecli binary. Subcommands: detect, stages,
/// run, simulate. Returns 0 on success, 1 on I/O or decode failure, 2 on
/// bad flags or configuration.
int cli_main(int argc, const char* const* argv);

}  // namespace lanekit
