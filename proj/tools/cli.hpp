#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "h2/verify.hpp"

namespace h2::cli {

enum class Command { Classify, Verify, Sweep };

struct RunConfig {
  Command command = Command::Classify;
  std::string map;    // "a,b,c,d"; for sweep: random | hermitian | unitary
  std::string conj;   // "jmu:<mu>" | "jw:<p>"; for sweep the parameter is optional and ignored
  bool weighted = false;
  std::string beta = "1";
  int grid_n = 12;
  std::vector<long> truncations{32, 64, 128};
  long samples = 1000;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
  bool format_given = false;
};

enum ExitCode : int { kOk = 0, kInconsistent = 1, kBadInput = 2, kIllConditioned = 3 };

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes the report; when CNORMAL_DUMP_DIR is set, also dumps T and C at the largest N as CSV.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const PredicateFn& override_predicate = nullptr);

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err,
              const PredicateFn& override_predicate = nullptr);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace h2::cli
