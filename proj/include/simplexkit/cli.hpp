#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simplexkit/corpus.hpp"

namespace simplexkit::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kDegenerate = 3;
inline constexpr int kCapExceeded = 4;
inline constexpr int kMaxIterations = 5;
inline constexpr int kNoSignCriterion = 6;
inline constexpr int kUnknownFunction = 7;
}  // namespace exit_code

struct CommandResult {
    int exit_code = exit_code::kOk;
    std::string out;  // one JSON document per line
    std::string err;
};

struct AnalyzeOptions {
    std::vector<std::string> paths;
};

struct EncloseOptions {
    std::string path;
    std::optional<std::size_t> n;  // defaults to the coordinate dimension
    bool variant_jung = false;
    bool bw_check = false;
};

struct SolveOptions {
    std::string function;
    std::string path;
    double tol = 1e-6;
    std::size_t max_iter = 100;
    std::optional<std::string> trace_path;  // JSON lines, one per step
};

struct RegularOptions {
    std::size_t m = 2;
    std::size_t n = 2;
    double diam = 1.0;
};

/// Files are processed concurrently; output keeps the order of `paths`.
/// The exit code is that of the first failing file.
CommandResult run_analyze(const AnalyzeOptions& options);
CommandResult run_enclose(const EncloseOptions& options);
CommandResult run_solve(const SolveOptions& options);
CommandResult run_regular(const RegularOptions& options);
/// `seed_override` is the raw value of SIMPLEX_SEED, if set.
CommandResult run_corpus(CorpusOptions options, const std::optional<std::string>& seed_override);

}  // namespace simplexkit::cli
