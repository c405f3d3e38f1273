#pragma once

namespace monty {

// Parses argv and runs one subcommand. Exit codes: 0 success, 1 invalid
// input or flags, 2 an internal verification failed (which can only mean
// a bug, never bad input).
int run_cli(int argc, const char* const* argv);

}  // namespace monty
