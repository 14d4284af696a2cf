#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "esc/cnf.hpp"
#include "esc/orientation.hpp"

namespace esc {

enum class ViolationKind {
  none,
  unassigned,
  encoding_gap, // a 4-set with one of the two alternating sign vectors
  selector,
  cc5,
  hull,
  exclusion,
  clause,
};

std::string_view to_string(ViolationKind k);

struct Verdict {
  bool pass = true;
  ViolationKind kind = ViolationKind::none;
  std::string detail;
  std::vector<int> labels; // points involved in the first violation

  static Verdict ok() { return {}; }
};

/// Reads a solver model: "v" lines (or bare integers), optionally an
/// "s SATISFIABLE" line; the terminating 0 is optional. Literals beyond
/// num_vars are rejected.
Assignment read_model(std::istream &in, std::size_t num_vars);

/// Semantic check of a model against the instance: every variable assigned,
/// every 4-set's sign vector realizable with exactly its matching selector
/// true, every CC5 clause and hull/wedge unit satisfied, and every k-set
/// containing a non-convex 4-subset. Reports the first violation.
Verdict decode_and_verify(const Assignment &model, const InstanceSpec &spec);

/// Streams a DIMACS file and checks every clause against the model.
Verdict check_clauses(std::istream &cnf, const Assignment &model);

} // namespace esc
