#pragma once

#include <cstddef>
#include <string>

#include "larag/bench.hpp"

namespace larag {

// Materializes the bundled synthetic documentation corpus (a fictional data
// platform, ~20 Sphinx-style pages with planted prerequisite links, one
// deliberately broken link and a handful of external ones) under `dir`.
// Returns the number of pages written.
std::size_t write_seed_corpus(const std::string& dir);

// The twenty-query benchmark suite matching the seed corpus.
std::vector<BenchmarkCase> seed_benchmark_cases();
void write_seed_suite(const std::string& path);

// Base-URL prefix the seed corpus is meant to be mounted at.
inline constexpr const char* kSeedBaseUrl = "https://docs.meridian.example/";

}  // namespace larag
