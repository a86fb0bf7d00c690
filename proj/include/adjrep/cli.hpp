#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "adjrep/json_io.hpp"

namespace adjrep::cli {

struct JobSpec {
  /// adjoint, residual, detrep2d, nice3d, verify-detrep, singularity, sweep,
  /// fixture, assoc-adjoint, assoc-verify-av, assoc-obstruct
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::optional<std::string> fixture;
  std::optional<std::string> matrix;  // path, or "builtin" for the fixture's printed matrix
  std::optional<unsigned> degree;
  std::optional<unsigned> n;
  unsigned count = 20;
  std::uint64_t seed = 1;
  bool approx = false;
};

enum ExitCode : int { kOk = 0, kCertificateFailure = 1, kInputError = 2 };

struct JobResult {
  int exit_code = kOk;
  Json report;
};

/// Runs one job; never throws for bad input (errors become a structured report).
JobResult run(const JobSpec& spec);

/// Runs the job and writes the report to spec.output or stdout.
int run_and_write(const JobSpec& spec);

}  // namespace adjrep::cli
