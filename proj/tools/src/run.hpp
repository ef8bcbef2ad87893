#pragma once

// Parses argv and executes one subcommand. Exit codes: 0 success or verified,
// 1 verification fail, 2 usage error, 3 budget exceeded.
int run(int argc, const char* const* argv);
