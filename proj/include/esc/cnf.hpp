#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "esc/cc5.hpp"
#include "esc/digest.hpp"
#include "esc/hull.hpp"
#include "esc/orientation.hpp"

namespace esc {

/// Variable ranges: triples 1..C(n,3), then 14 selectors per 4-set ordered
/// by (4-set rank, pattern index).
struct VariableLayout {
  std::uint64_t triples = 0;
  std::uint64_t selectors = 0;
  std::uint64_t total = 0;

  Var first_selector() const { return static_cast<Var>(triples + 1); }
  friend bool operator==(const VariableLayout &, const VariableLayout &) = default;
};

VariableLayout assign_variables(const EncodingParams &params);

/// Everything that determines one CNF instance.
struct InstanceSpec {
  EncodingParams params;
  Cc5Mode cc5 = Cc5Mode::reduced;
  std::optional<HullTemplate> layers;
  std::optional<SubCube> subcube;

  /// Throws on an invalid template/sub-cube or a sub-cube without template.
  void validate() const;
  /// The "c esc-cnf ..." comment line carrying the parameters.
  std::string comment_line() const;
  static InstanceSpec from_comment_line(std::string_view line);

  friend bool operator==(const InstanceSpec &, const InstanceSpec &) = default;
};

struct BlockCounts {
  std::uint64_t cc5 = 0;
  std::uint64_t fourset = 0;
  std::uint64_t exclusion = 0;
  std::uint64_t layer_units = 0;
  std::uint64_t wedge_units = 0;

  std::uint64_t total() const { return cc5 + fourset + exclusion + layer_units + wedge_units; }
  friend bool operator==(const BlockCounts &, const BlockCounts &) = default;
};

/// Closed-form clause counts per block.
BlockCounts precount(const InstanceSpec &spec);

struct Manifest {
  InstanceSpec spec;
  VariableLayout variables;
  BlockCounts clauses;
  std::uint64_t literals = 0;
  std::uint64_t exclusion_clause_length = 0;
  std::uint64_t bytes = 0;
  std::string sha256;

  nlohmann::json to_json() const;
  static Manifest from_json(const nlohmann::json &j);
};

class ByteSink {
public:
  virtual ~ByteSink() = default;
  virtual void write(std::string_view bytes) = 0;
};

/// Discards its input.
class NullSink : public ByteSink {
public:
  void write(std::string_view) override {}
};

class StringSink : public ByteSink {
public:
  void write(std::string_view bytes) override { data.append(bytes); }
  std::string data;
};

/// Buffered DIMACS text emission; hashes and counts every byte written.
class DimacsWriter {
public:
  explicit DimacsWriter(ByteSink &sink, std::size_t buffer_bytes = 1 << 20);

  void comment(std::string_view text);
  void header(std::uint64_t vars, std::uint64_t clauses);
  void clause(std::span<const Lit> lits);
  void flush();

  std::uint64_t clauses_written() const { return clauses_; }
  std::uint64_t literals_written() const { return literals_; }
  std::uint64_t bytes_written() const { return bytes_; }
  /// Flushes and returns the SHA-256 of everything written.
  std::string finish();

private:
  void reserve(std::size_t n);

  ByteSink &sink_;
  std::vector<char> buf_;
  std::size_t used_ = 0;
  Sha256 hash_;
  std::uint64_t clauses_ = 0;
  std::uint64_t literals_ = 0;
  std::uint64_t bytes_ = 0;
};

/// Streams the instance as DIMACS: parameter comments, the precounted
/// header, then the cc5, fourset, exclusion, layer-unit and wedge-unit
/// blocks. Emitted counts are checked against the precount.
Manifest emit(const InstanceSpec &spec, ByteSink &sink);

/// Writes `out` via `out.partial` (left behind if emission fails) and the
/// manifest next to it as `out.manifest.json`.
Manifest emit_file(const InstanceSpec &spec, const std::filesystem::path &out);

std::filesystem::path manifest_path(const std::filesystem::path &cnf);

} // namespace esc
