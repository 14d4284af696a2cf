#include "esc/cnf.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#include "esc/combinatorics.hpp"
#include "esc/error.hpp"
#include "esc/exclusion.hpp"
#include "esc/fourset.hpp"

namespace esc {

VariableLayout assign_variables(const EncodingParams &params) {
  VariableLayout v;
  v.triples = checked_binomial(params.n, 3);
  v.selectors = pattern_count * checked_binomial(params.n, 4);
  v.total = v.triples + v.selectors;
  if (v.total > 0x7fffffffULL)
    throw capacity_error("variable count " + std::to_string(v.total) +
                         " exceeds the DIMACS literal range");
  return v;
}

void InstanceSpec::validate() const {
  EncodingParams::make(params.n, params.k);
  if (layers)
    layers->validate(params.n);
  if (subcube) {
    if (!layers)
      throw subcube_error("a sub-cube vector requires a hull template");
    subcube->validate(*layers);
  }
}

std::string InstanceSpec::comment_line() const {
  std::string s = "esc-cnf n=" + std::to_string(params.n) + " k=" + std::to_string(params.k) +
                  " cc5=" + std::string(to_string(cc5));
  if (layers)
    s += " layers=" + layers->str();
  if (subcube)
    s += " w=" + subcube->str();
  return s;
}

InstanceSpec InstanceSpec::from_comment_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tag;
  if (!(in >> tag) || tag != "esc-cnf")
    throw parse_error("not an esc-cnf parameter line");
  InstanceSpec spec;
  int n = -1, k = -1;
  std::string field;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos)
      throw parse_error("bad parameter field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "n")
      n = std::stoi(value);
    else if (key == "k")
      k = std::stoi(value);
    else if (key == "cc5")
      spec.cc5 = parse_cc5_mode(value);
    else if (key == "layers")
      spec.layers = HullTemplate{parse_int_list(value)};
    else if (key == "w")
      spec.subcube = SubCube{parse_int_list(value)};
    else
      throw parse_error("unknown parameter '" + key + "'");
  }
  spec.params = EncodingParams::make(n, k);
  spec.validate();
  return spec;
}

BlockCounts precount(const InstanceSpec &spec) {
  spec.validate();
  const int n = spec.params.n;
  BlockCounts c;
  c.cc5 = cc5_clause_count(spec.params, spec.cc5);
  c.fourset = fourset_clause_count * checked_binomial(n, 4);
  c.exclusion = checked_binomial(n, spec.params.k);
  if (spec.layers)
    c.layer_units = layer_unit_count(*spec.layers, n);
  if (spec.layers && spec.subcube)
    c.wedge_units = wedge_unit_count(*spec.layers, *spec.subcube, n);
  return c;
}

nlohmann::json Manifest::to_json() const {
  nlohmann::json params{{"n", spec.params.n},
                        {"k", spec.params.k},
                        {"cc5", std::string(esc::to_string(spec.cc5))},
                        {"layers", nullptr},
                        {"w", nullptr}};
  if (spec.layers)
    params["layers"] = spec.layers->layers;
  if (spec.subcube)
    params["w"] = spec.subcube->offsets;
  return {
      {"format", "esc-manifest/1"},
      {"params", params},
      {"variables",
       {{"triples", variables.triples},
        {"selectors", variables.selectors},
        {"total", variables.total}}},
      {"clauses",
       {{"cc5", clauses.cc5},
        {"fourset", clauses.fourset},
        {"exclusion", clauses.exclusion},
        {"layer_units", clauses.layer_units},
        {"wedge_units", clauses.wedge_units},
        {"total", clauses.total()}}},
      {"literals", literals},
      {"exclusion_clause_length", exclusion_clause_length},
      {"cnf", {{"bytes", bytes}, {"sha256", sha256}}},
  };
}

Manifest Manifest::from_json(const nlohmann::json &j) {
  try {
    if (j.at("format") != "esc-manifest/1")
      throw parse_error("unsupported manifest format");
    Manifest m;
    const auto &p = j.at("params");
    m.spec.params = EncodingParams::make(p.at("n").get<int>(), p.at("k").get<int>());
    m.spec.cc5 = parse_cc5_mode(p.at("cc5").get<std::string>());
    if (!p.at("layers").is_null())
      m.spec.layers = HullTemplate{p.at("layers").get<std::vector<int>>()};
    if (!p.at("w").is_null())
      m.spec.subcube = SubCube{p.at("w").get<std::vector<int>>()};
    const auto &v = j.at("variables");
    m.variables = {v.at("triples"), v.at("selectors"), v.at("total")};
    const auto &c = j.at("clauses");
    m.clauses = {c.at("cc5"), c.at("fourset"), c.at("exclusion"), c.at("layer_units"),
                 c.at("wedge_units")};
    if (c.at("total").get<std::uint64_t>() != m.clauses.total())
      throw parse_error("manifest clause total does not match its blocks");
    m.literals = j.at("literals");
    m.exclusion_clause_length = j.at("exclusion_clause_length");
    m.bytes = j.at("cnf").at("bytes");
    m.sha256 = j.at("cnf").at("sha256");
    return m;
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("malformed manifest: ") + e.what());
  }
}

DimacsWriter::DimacsWriter(ByteSink &sink, std::size_t buffer_bytes)
    : sink_(sink), buf_(std::max<std::size_t>(buffer_bytes, 4096)) {}

void DimacsWriter::reserve(std::size_t n) {
  if (used_ + n > buf_.size()) {
    flush();
    if (n > buf_.size())
      buf_.resize(n);
  }
}

void DimacsWriter::flush() {
  if (used_ == 0)
    return;
  const std::string_view chunk(buf_.data(), used_);
  hash_.update(chunk);
  sink_.write(chunk);
  bytes_ += used_;
  used_ = 0;
}

void DimacsWriter::comment(std::string_view text) {
  reserve(text.size() + 3);
  buf_[used_++] = 'c';
  buf_[used_++] = ' ';
  std::memcpy(buf_.data() + used_, text.data(), text.size());
  used_ += text.size();
  buf_[used_++] = '\n';
}

void DimacsWriter::header(std::uint64_t vars, std::uint64_t clauses) {
  const std::string h = "p cnf " + std::to_string(vars) + " " + std::to_string(clauses) + "\n";
  reserve(h.size());
  std::memcpy(buf_.data() + used_, h.data(), h.size());
  used_ += h.size();
}

void DimacsWriter::clause(std::span<const Lit> lits) {
  // 11 characters covers "-2147483647" plus the separating space.
  reserve(lits.size() * 12 + 2);
  char *p = buf_.data() + used_;
  char *const end = buf_.data() + buf_.size();
  for (Lit l : lits) {
    p = std::to_chars(p, end, l.dimacs()).ptr;
    *p++ = ' ';
  }
  *p++ = '0';
  *p++ = '\n';
  used_ = static_cast<std::size_t>(p - buf_.data());
  ++clauses_;
  literals_ += lits.size();
}

std::string DimacsWriter::finish() {
  flush();
  return hash_.hex();
}

Manifest emit(const InstanceSpec &spec, ByteSink &sink) {
  const BlockCounts expected = precount(spec);
  Manifest m;
  m.spec = spec;
  m.variables = assign_variables(spec.params);
  m.exclusion_clause_length = exclusion_clause_length(spec.params.k);

  DimacsWriter w(sink);
  w.comment(spec.comment_line());
  w.comment("blocks cc5=" + std::to_string(expected.cc5) +
            " fourset=" + std::to_string(expected.fourset) +
            " exclusion=" + std::to_string(expected.exclusion) +
            " layer_units=" + std::to_string(expected.layer_units) +
            " wedge_units=" + std::to_string(expected.wedge_units));
  w.header(m.variables.total, expected.total());

  const auto emit_clause = [&](std::span<const Lit> c) { w.clause(c); };
  std::uint64_t mark = 0;
  const auto block_done = [&](std::uint64_t &count) {
    count = w.clauses_written() - mark;
    mark = w.clauses_written();
  };

  const int n = spec.params.n;
  for_each_cc5_clause(spec.params, spec.cc5, emit_clause);
  block_done(m.clauses.cc5);
  for_each_fourset_block_clause(n, 0, binomial(n, 4), emit_clause);
  block_done(m.clauses.fourset);
  for_each_exclusion_clause(spec.params, emit_clause);
  block_done(m.clauses.exclusion);
  if (spec.layers) {
    for (Lit u : layer_units(*spec.layers, n))
      w.clause(std::span<const Lit>(&u, 1));
  }
  block_done(m.clauses.layer_units);
  if (spec.layers && spec.subcube) {
    for (Lit u : wedge_units(*spec.layers, *spec.subcube, n))
      w.clause(std::span<const Lit>(&u, 1));
  }
  block_done(m.clauses.wedge_units);

  m.sha256 = w.finish();
  m.bytes = w.bytes_written();
  m.literals = w.literals_written();
  if (!(m.clauses == expected))
    throw error("emitted clause counts differ from the analytic precount");
  return m;
}

namespace {

class FileSink : public ByteSink {
public:
  explicit FileSink(const std::filesystem::path &p) : out_(p, std::ios::binary | std::ios::trunc) {
    if (!out_)
      throw emission_error("cannot open " + p.string() + " for writing");
  }
  void write(std::string_view bytes) override {
    out_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out_)
      throw emission_error("write failed");
  }
  void close() {
    out_.close();
    if (!out_)
      throw emission_error("close failed");
  }

private:
  std::ofstream out_;
};

} // namespace

std::filesystem::path manifest_path(const std::filesystem::path &cnf) {
  return std::filesystem::path(cnf.string() + ".manifest.json");
}

Manifest emit_file(const InstanceSpec &spec, const std::filesystem::path &out) {
  spec.validate();
  const std::filesystem::path partial(out.string() + ".partial");
  Manifest m;
  try {
    FileSink sink(partial);
    m = emit(spec, sink);
    sink.close();
  } catch (const emission_error &e) {
    throw emission_error(std::string(e.what()) + "; partial output left at " + partial.string());
  }
  std::error_code ec;
  std::filesystem::rename(partial, out, ec);
  if (ec)
    throw emission_error("cannot rename " + partial.string() + ": " + ec.message());
  std::ofstream mf(manifest_path(out));
  mf << m.to_json().dump(2) << '\n';
  if (!mf)
    throw emission_error("cannot write manifest for " + out.string());
  return m;
}

} // namespace esc
