#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

namespace esc {

/// Point count n and forbidden convex polygon size k.
struct EncodingParams {
  int n = 0;
  int k = 0;

  /// Validates and returns the parameters; rejects k < 5, n < k and point
  /// counts whose variable ids would not fit a DIMACS literal.
  static EncodingParams make(int n, int k);

  friend bool operator==(const EncodingParams &, const EncodingParams &) = default;
};

using Var = std::uint32_t;

/// A signed occurrence of a variable, stored in DIMACS form (+v / -v).
class Lit {
public:
  constexpr Lit() = default;
  constexpr Lit(Var var, bool positive)
      : value_(positive ? static_cast<std::int32_t>(var)
                        : -static_cast<std::int32_t>(var)) {}

  static constexpr Lit from_dimacs(std::int32_t v) {
    Lit l;
    l.value_ = v;
    return l;
  }

  constexpr Var var() const { return static_cast<Var>(value_ < 0 ? -value_ : value_); }
  constexpr bool positive() const { return value_ > 0; }
  constexpr std::int32_t dimacs() const { return value_; }
  constexpr Lit operator~() const { return from_dimacs(-value_); }

  friend constexpr bool operator==(Lit, Lit) = default;

  /// Orders by (variable, sign) with the negative literal first.
  friend constexpr std::strong_ordering operator<=>(Lit a, Lit b) {
    if (auto c = a.var() <=> b.var(); c != 0)
      return c;
    return a.positive() <=> b.positive();
  }

private:
  std::int32_t value_ = 0;
};

std::string to_string(Lit l);

struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;
  friend bool operator==(const Triple &, const Triple &) = default;
};

/// Id in 1..C(n,3) of a sorted triple, increasing in lexicographic order.
Var triple_index(Triple t, int n);

/// Inverse of triple_index().
Triple triple_at(Var id, int n);

/// Number of triple variables, C(n,3).
std::uint64_t triple_count(int n);

/// +x_{ijk} if (a,b,c) is an even permutation of its sorted form, -x_{ijk}
/// if odd.
Lit literal_of_ordered(int a, int b, int c, int n);

/// Truth values for variables 1..size(); 0 means unassigned.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::size_t num_vars) : values_(num_vars + 1, 0) {}

  std::size_t num_vars() const { return values_.empty() ? 0 : values_.size() - 1; }
  bool assigned(Var v) const { return v < values_.size() && values_[v] != 0; }
  bool value(Var v) const { return values_.at(v) > 0; }
  void set(Var v, bool b) { values_.at(v) = b ? 1 : -1; }
  void set(Lit l) { set(l.var(), l.positive()); }

  /// True iff the literal's variable is assigned and matches its sign.
  bool satisfies(Lit l) const {
    const Var v = l.var();
    return v < values_.size() && values_[v] == (l.positive() ? 1 : -1);
  }
  bool satisfies(std::span<const Lit> clause) const {
    for (Lit l : clause)
      if (satisfies(l))
        return true;
    return false;
  }

private:
  std::vector<std::int8_t> values_;
};

/// Orientation signs over the C(n,3) sorted triples, with chi() of any
/// ordered triple derived through permutation parity.
class OrientationAssignment {
public:
  OrientationAssignment() = default;
  explicit OrientationAssignment(int n);

  /// Reads the orientation variables of a full model.
  static OrientationAssignment from_model(const Assignment &model, int n);

  int n() const { return n_; }
  bool complete() const;

  void set(Triple t, bool ccw);
  bool defined(int a, int b, int c) const;

  /// Orientation of the ordered triple; true means counterclockwise.
  bool chi(int a, int b, int c) const;

private:
  int n_ = 0;
  std::vector<std::int8_t> signs_;
};

} // namespace esc
