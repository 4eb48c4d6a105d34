#include <benchmark/benchmark.h>

// Own main: the packaged benchmark_main archive carries LTO bytecode from a
// different compiler build and does not link.
BENCHMARK_MAIN();
