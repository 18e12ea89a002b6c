#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace qhh {

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::uint32_t s = 3;
  std::uint64_t characteristic = 0;
  std::optional<std::uint32_t> max_degree;  // default 3s + 2
  OutputFormat format = OutputFormat::text;
};

/* exit_code 0: everything checked out; 1: a verification failed.
 * Invalid configurations throw (the CLI maps that to exit code 2).
 * `output` is the complete payload, newline terminated, so equal
 * configurations produce byte-identical output. */
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

std::uint32_t effective_max_degree(const RunConfig& cfg);

CommandResult run_dims(const RunConfig& cfg);
CommandResult run_verify_resolution(const RunConfig& cfg);
CommandResult run_verify_bases(const RunConfig& cfg);
CommandResult run_yoneda(const RunConfig& cfg);
CommandResult run_ring_check(const RunConfig& cfg);

}  // namespace qhh
