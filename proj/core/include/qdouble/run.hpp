#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "qdouble/cochain.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"
#include "qdouble/io.hpp"

namespace qdouble::run {

/// One command invocation.  Identical configs produce byte-identical
/// reports; the seed fully determines every randomized step.
struct RunConfig {
  std::string command;  // check-cocycle, transgress, double, irreps, count,
                        // characters, induce
  std::string group;    // file path or registry spec; may be implied by the cocycle
  std::string cocycle;  // file path or registry spec; empty = trivial 3-cocycle
  int times = 1;        // transgress: number of loop transgressions (1..3)
  int at = -1;          // induce: group element index
  std::string rep;      // induce: representation file for the centralizer
  std::uint64_t seed = 0;
  std::string out;      // output path; empty or "-" writes to stdout
};

/// The resolved inputs of a run: the group, its one-object groupoid, and
/// the cochain living on it.
struct Problem {
  FiniteGroup group;
  std::unique_ptr<Groupoid> delooping;
  Cochain cochain;
};
Problem load_problem(const RunConfig& config);

/// Computes the report for the configured command.  Throws (std::logic_error
/// / std::invalid_argument) when any internal cross-route assertion fails.
io::json run_command(const RunConfig& config);

/// Runs the command, writes the report to config.out (stdout by default),
/// and maps exceptions to a nonzero exit code with the message on stderr.
int run_cli(const RunConfig& config);

}  // namespace qdouble::run
