#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esc/orientation.hpp"

namespace esc {

/// Receives the pieces of a DIMACS CNF stream.
class DimacsHandler {
public:
  virtual ~DimacsHandler() = default;
  virtual void comment(std::string_view) {}
  virtual void header(std::uint64_t /*vars*/, std::uint64_t /*clauses*/) {}
  virtual void clause(std::span<const Lit>) {}
};

/// Incremental DIMACS parser; bytes may be fed in arbitrary chunks.
class DimacsParser {
public:
  explicit DimacsParser(DimacsHandler &handler) : handler_(handler) {}

  void feed(std::string_view bytes);
  /// Throws parse_error if the stream ends inside a clause or line.
  void finish();

private:
  void end_line();
  void flush_number();

  DimacsHandler &handler_;
  enum class State { line_start, comment, header, clauses } state_ = State::line_start;
  std::string line_;
  std::vector<Lit> clause_;
  bool have_header_ = false;
  bool in_number_ = false;
  bool negative_ = false;
  std::int64_t number_ = 0;
  std::uint64_t line_no_ = 1;
};

/// Counts collected by a full re-parse.
struct DimacsStats {
  std::uint64_t header_vars = 0;
  std::uint64_t header_clauses = 0;
  std::uint64_t clauses = 0;
  std::uint64_t literals = 0;
  std::uint64_t max_var = 0;
  std::vector<std::string> comments;
};

class DimacsStatsHandler : public DimacsHandler {
public:
  void comment(std::string_view c) override { stats.comments.emplace_back(c); }
  void header(std::uint64_t v, std::uint64_t c) override {
    stats.header_vars = v;
    stats.header_clauses = c;
  }
  void clause(std::span<const Lit> lits) override;

  DimacsStats stats;
};

void parse_dimacs(std::istream &in, DimacsHandler &handler);
DimacsStats dimacs_stats(std::istream &in);

} // namespace esc
