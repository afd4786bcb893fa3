#pragma once

namespace kplex::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kConstraint = 3,
};

/// Entry point of the `kplex` tool; returns the process exit code.
int main(int argc, char** argv);

}  // namespace kplex::cli
