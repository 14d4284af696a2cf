#include "esc/verify.hpp"

#include <istream>
#include <sstream>

#include "esc/combinatorics.hpp"
#include "esc/dimacs.hpp"
#include "esc/error.hpp"
#include "esc/fourset.hpp"

namespace esc {

namespace {

std::string set_str(std::span<const int> labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i)
    s += (i ? "," : "") + std::to_string(labels[i]);
  return s + "}";
}

Verdict violation(ViolationKind kind, std::string detail, std::span<const int> labels = {}) {
  return {false, kind, std::move(detail), {labels.begin(), labels.end()}};
}

Verdict check_units(const std::vector<Lit> &units, const Assignment &model, int n,
                    const char *what) {
  for (Lit u : units) {
    if (!model.satisfies(u)) {
      const Triple t = triple_at(u.var(), n);
      const std::array<int, 3> labels{t.i, t.j, t.k};
      return violation(ViolationKind::hull,
                       std::string(what) + " unit " + to_string(u) + " on triple " +
                           set_str(labels) + " is falsified",
                       labels);
    }
  }
  return Verdict::ok();
}

} // namespace

std::string_view to_string(ViolationKind k) {
  switch (k) {
  case ViolationKind::none: return "none";
  case ViolationKind::unassigned: return "unassigned";
  case ViolationKind::encoding_gap: return "encoding-gap";
  case ViolationKind::selector: return "selector";
  case ViolationKind::cc5: return "cc5";
  case ViolationKind::hull: return "hull";
  case ViolationKind::exclusion: return "exclusion";
  case ViolationKind::clause: return "clause";
  }
  return "unknown";
}

Assignment read_model(std::istream &in, std::size_t num_vars) {
  Assignment a(num_vars);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok))
      continue;
    if (tok == "s" || tok == "c")
      continue;
    if (tok != "v") {
      ls.clear();
      ls.str(line);
    }
    long long v = 0;
    while (ls >> v) {
      if (v == 0)
        continue;
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > num_vars)
        throw parse_error("model literal " + std::to_string(v) + " exceeds " +
                          std::to_string(num_vars) + " variables");
      a.set(static_cast<Var>(var), v > 0);
    }
    if (!ls.eof())
      throw parse_error("malformed model line: " + line);
  }
  return a;
}

Verdict decode_and_verify(const Assignment &model, const InstanceSpec &spec) {
  spec.validate();
  const int n = spec.params.n;
  const int k = spec.params.k;
  const VariableLayout layout = assign_variables(spec.params);
  for (Var v = 1; v <= layout.total; ++v)
    if (!model.assigned(v))
      return violation(ViolationKind::unassigned, "variable " + std::to_string(v) + " unassigned");

  const auto orient = OrientationAssignment::from_model(model, n);

  const std::uint64_t foursets = binomial(n, 4);
  std::vector<std::int8_t> convex(foursets);
  Verdict result = Verdict::ok();
  std::uint64_t rank = 0;
  for_each_combination(n, 4, [&](std::span<const int> c) {
    if (!result.pass)
      return;
    const FourSet q{{c[0], c[1], c[2], c[3]}, rank};
    const int idx = pattern_index(cyclic_signs(q, orient));
    if (idx < 0) {
      result = violation(ViolationKind::encoding_gap,
                         "4-set " + set_str(c) + " has an unrealizable cyclic pattern", c);
      return;
    }
    for (int p = 0; p < pattern_count; ++p) {
      const bool value = model.value(selector_var(rank, p, n));
      if (value != (p == idx)) {
        result = violation(ViolationKind::selector,
                           "4-set " + set_str(c) + ": selector " + std::to_string(p + 1) +
                               " is " + (value ? "true" : "false") + " but the orientations" +
                               " give pattern " + realizable_patterns()[idx].str(),
                           c);
        return;
      }
    }
    convex[rank] = realizable_patterns()[idx].convex;
    ++rank;
  });
  if (!result.pass)
    return result;

  for_each_cc5_clause(spec.params, spec.cc5, [&](std::span<const Lit> clause) {
    if (result.pass && !model.satisfies(clause)) {
      std::string lits;
      for (Lit l : clause)
        lits += to_string(l) + " ";
      result = violation(ViolationKind::cc5, "cc5 clause falsified: " + lits);
    }
  });
  if (!result.pass)
    return result;

  if (spec.layers) {
    if (auto v = check_units(layer_units(*spec.layers, n), model, n, "layer"); !v.pass)
      return v;
    if (spec.subcube)
      if (auto v = check_units(wedge_units(*spec.layers, *spec.subcube, n), model, n, "wedge");
          !v.pass)
        return v;
  }

  std::vector<std::array<int, 4>> sub;
  for_each_combination(k, 4, [&](std::span<const int> q) { sub.push_back({q[0], q[1], q[2], q[3]}); });
  for_each_combination(n, k, [&](std::span<const int> kset) {
    if (!result.pass)
      return;
    for (const auto &q : sub) {
      const std::array<int, 4> labels{kset[q[0]], kset[q[1]], kset[q[2]], kset[q[3]]};
      if (!convex[combination_rank(labels, n)])
        return;
    }
    result = violation(ViolationKind::exclusion,
                       "k-set " + set_str(kset) + " is in convex position by the 4-set criterion",
                       kset);
  });
  return result;
}

Verdict check_clauses(std::istream &cnf, const Assignment &model) {
  struct Checker : DimacsHandler {
    const Assignment &model;
    Verdict verdict;
    std::uint64_t index = 0;
    explicit Checker(const Assignment &m) : model(m) {}
    void clause(std::span<const Lit> lits) override {
      ++index;
      if (verdict.pass && !model.satisfies(lits))
        verdict = violation(ViolationKind::clause,
                            "clause " + std::to_string(index) + " of the CNF is falsified");
    }
  } checker(model);
  parse_dimacs(cnf, checker);
  return checker.verdict;
}

} // namespace esc
