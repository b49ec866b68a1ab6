#pragma once

namespace mtsem {

// Entry point behind the mtsem binary. Subcommands: run, vectors, stats,
// retrofit, synth. Returns 0 on success, 2 on usage errors, 1 otherwise.
int cli_main(int argc, const char* const* argv);

}  // namespace mtsem
