#include <benchmark/benchmark.h>

// The distro's benchmark_main archive is LTO bytecode tied to one compiler
// release, so the entry point lives here instead.
BENCHMARK_MAIN();
