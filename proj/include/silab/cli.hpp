#pragma once

namespace silab {

/// Entry point for the silab tool. Subcommands:
///   classify | oracle | reduce | trace-norm | corpus | crosscheck
/// Exit codes: 0 success, 1 runtime error, 2 parse error,
/// 3 exact classifier/oracle disagreement (or reducer/evaluator mismatch).
int run_cli(int argc, const char* const* argv);

}  // namespace silab
