#pragma once

// Registry of every exact identity in the library, run over a size range and
// an alpha grid, producing one row per (identity, n, alpha[, class]) with a
// counterexample string on failure.  Backs the `verify` subcommand.

#include <string>
#include <vector>

#include "kerov/rational.hpp"

namespace kerov {

struct VerifyOptions {
  int max_n = 6;
  std::vector<Rational> alphas{Rational(1)};
};

struct VerifyRow {
  std::string identity;
  int n = 0;
  Rational alpha{1};
  std::string mu;  // conjugacy class or eta label when the check has one
  bool ok = true;
  std::string counterexample;  // empty when ok
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyRow> rows;
  bool complete = true;     // false when a resource bound stopped the run
  std::string stop_reason;  // set when !complete
  long failures = 0;

  long checks() const { return static_cast<long>(rows.size()); }
  bool all_ok() const { return complete && failures == 0; }
};

// Runs the whole registry for n = 1..max_n.  Alpha-dependent identities run
// once per grid point; character-table cross-checks and other alpha = 1
// statements run once per n.  A resource_error from a table bound ends the
// run early with the rows collected so far and complete = false; anything
// else (bad alpha, negative max_n) is an invalid_argument.
VerifyReport run_verify_suite(const VerifyOptions& opt);

}  // namespace kerov
