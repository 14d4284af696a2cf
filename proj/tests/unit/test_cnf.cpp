#include <doctest.h>

#include <csignal>
#include <fstream>
#include <sstream>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include "esc/cnf.hpp"
#include "esc/digest.hpp"
#include "esc/dimacs.hpp"
#include "esc/error.hpp"
#include "support.hpp"

using namespace esc;
namespace fs = std::filesystem;

namespace {

InstanceSpec base(int n, int k, Cc5Mode mode = Cc5Mode::reduced) {
  return InstanceSpec{EncodingParams::make(n, k), mode, std::nullopt, std::nullopt};
}

class FailingSink : public ByteSink {
public:
  explicit FailingSink(std::size_t limit) : limit_(limit) {}
  void write(std::string_view bytes) override {
    seen_ += bytes.size();
    if (seen_ > limit_)
      throw emission_error("sink full");
  }

private:
  std::size_t limit_;
  std::size_t seen_ = 0;
};

} // namespace

TEST_CASE("variable layout") {
  const auto l33 = assign_variables(EncodingParams::make(33, 7));
  CHECK(l33.triples == 5456);
  CHECK(l33.selectors == 572880);
  CHECK(l33.total == 578336);
  CHECK(l33.first_selector() == 5457);
  const auto l9 = assign_variables(EncodingParams::make(9, 5));
  CHECK(l9.triples == 84);
  CHECK(l9.selectors == 1764);
  CHECK(l9.total == 1848);
}

TEST_CASE("precount at (33,7)") {
  const BlockCounts c = precount(base(33, 7));
  CHECK(c.cc5 == 9493440);
  CHECK(c.fourset == 2905320);
  CHECK(c.exclusion == 4272048);
  CHECK(c.layer_units == 0);
  CHECK(c.wedge_units == 0);
  CHECK(c.total() == 16670808);
}

TEST_CASE("emitted (9,5) full instance re-parses to its counts") {
  const InstanceSpec spec = base(9, 5, Cc5Mode::full);
  StringSink sink;
  const Manifest m = emit(spec, sink);
  const auto parsed = esc_test::parse_all(sink.data);
  // Independent recount of clause lines and literals.
  std::uint64_t literals = 0;
  std::uint64_t max_var = 0;
  for (const auto &c : parsed.clauses) {
    literals += c.size();
    for (Lit l : c)
      max_var = std::max<std::uint64_t>(max_var, l.var());
  }
  CHECK(parsed.vars == 1848);
  CHECK(parsed.declared == parsed.clauses.size());
  CHECK(m.clauses.total() == parsed.clauses.size());
  CHECK(m.literals == literals);
  CHECK(max_var <= parsed.vars);
  CHECK(m.bytes == sink.data.size());
  CHECK(m.sha256 == sha256_hex(sink.data));
  CHECK(m.clauses.cc5 == 40 * binomial(9, 5));
  CHECK(m.clauses.fourset == 71 * binomial(9, 4));
  CHECK(m.clauses.exclusion == binomial(9, 5));
  REQUIRE_FALSE(parsed.comments.empty());
  CHECK(InstanceSpec::from_comment_line(parsed.comments.front()) == spec);

  const auto stats = [&] {
    std::istringstream in(sink.data);
    return dimacs_stats(in);
  }();
  CHECK(stats.clauses == parsed.clauses.size());
  CHECK(stats.literals == literals);
  CHECK(stats.max_var == max_var);
}

TEST_CASE("block order and templates") {
  InstanceSpec spec = base(12, 5);
  spec.layers = HullTemplate{{5, 4}};
  spec.subcube = SubCube{{0, 2}};
  StringSink sink;
  const Manifest m = emit(spec, sink);
  const auto parsed = esc_test::parse_all(sink.data);
  REQUIRE(parsed.clauses.size() == m.clauses.total());
  const auto layer = layer_units(*spec.layers, 12);
  const auto wedge = wedge_units(*spec.layers, *spec.subcube, 12);
  CHECK(m.clauses.layer_units == layer.size());
  CHECK(m.clauses.wedge_units == wedge.size());
  const std::size_t units_start = parsed.clauses.size() - layer.size() - wedge.size();
  for (std::size_t i = 0; i < layer.size(); ++i)
    CHECK(parsed.clauses[units_start + i] == std::vector<Lit>{layer[i]});
  for (std::size_t i = 0; i < wedge.size(); ++i)
    CHECK(parsed.clauses[units_start + layer.size() + i] == std::vector<Lit>{wedge[i]});
  CHECK(parsed.clauses.front().size() == 6);
  CHECK(parsed.clauses[m.clauses.cc5].size() == 2);
  CHECK(parsed.clauses[m.clauses.cc5 + m.clauses.fourset].size() == 40);
  CHECK(InstanceSpec::from_comment_line(parsed.comments.front()) == spec);
}

TEST_CASE("emission is deterministic") {
  InstanceSpec spec = base(10, 6);
  StringSink a;
  StringSink b;
  CHECK(emit(spec, a).sha256 == emit(spec, b).sha256);
  CHECK(a.data == b.data);
  spec.cc5 = Cc5Mode::full;
  StringSink c;
  emit(spec, c);
  CHECK(c.data != a.data); // the mode is recorded in the comment line
}

TEST_CASE("digest") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  Sha256 h;
  h.update("a");
  h.update("bc");
  CHECK(h.hex() == sha256_hex("abc"));
}

TEST_CASE("manifest json round trip") {
  InstanceSpec spec = base(12, 5);
  spec.layers = HullTemplate{{5, 4}};
  spec.subcube = SubCube{{0, 2}};
  NullSink sink;
  const Manifest m = emit(spec, sink);
  const Manifest back = Manifest::from_json(m.to_json());
  CHECK(back.spec == m.spec);
  CHECK(back.variables == m.variables);
  CHECK(back.clauses == m.clauses);
  CHECK(back.literals == m.literals);
  CHECK(back.sha256 == m.sha256);
  CHECK(m.to_json().at("clauses").at("total") == m.clauses.total());
}

TEST_CASE("spec validation") {
  InstanceSpec spec = base(12, 5);
  spec.subcube = SubCube{{0, 1}};
  CHECK_THROWS_AS((spec.validate()), subcube_error);
  spec.layers = HullTemplate{{5, 8}};
  CHECK_THROWS_AS((spec.validate()), template_error);
  CHECK_THROWS(InstanceSpec::from_comment_line("c something else"));
}

TEST_CASE("emit_file writes the CNF and manifest") {
  const fs::path dir = esc_test::scratch_dir("emit");
  const fs::path out = dir / "x.cnf";
  const Manifest m = emit_file(base(8, 5), out);
  CHECK(fs::exists(out));
  CHECK_FALSE(fs::exists(out.string() + ".partial"));
  CHECK(sha256_file(out.string()) == m.sha256);
  std::ifstream mf(manifest_path(out));
  const Manifest back = Manifest::from_json(nlohmann::json::parse(mf));
  CHECK(back.sha256 == m.sha256);
  fs::remove_all(dir);
}

TEST_CASE("failed emission reports the error and leaves a partial marker") {
  FailingSink sink(1000);
  CHECK_THROWS_AS((emit(base(9, 5), sink)), emission_error);

  const fs::path dir = esc_test::scratch_dir("partial");
  const fs::path out = dir / "y.cnf";
  const pid_t pid = ::fork();
  REQUIRE(pid >= 0);
  if (pid == 0) {
    // Child: cap the file size so the write fails part-way.
    std::signal(SIGXFSZ, SIG_IGN);
    rlimit lim{4096, 4096};
    ::setrlimit(RLIMIT_FSIZE, &lim);
    int code = 1;
    try {
      emit_file(base(9, 5), out);
    } catch (const emission_error &e) {
      code = std::string(e.what()).find(".partial") != std::string::npos ? 0 : 2;
    } catch (...) {
      code = 3;
    }
    ::_exit(code);
  }
  int status = 0;
  ::waitpid(pid, &status, 0);
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(fs::exists(out.string() + ".partial"));
  CHECK_FALSE(fs::exists(out));
  CHECK_FALSE(fs::exists(manifest_path(out)));
  fs::remove_all(dir);
}

TEST_CASE("dimacs parser edge cases") {
  const auto c = esc_test::parse_all("c hello\np cnf 3 2\n1 -2\n 3 0 -1 0\n");
  CHECK(c.vars == 3);
  CHECK(c.clauses.size() == 2);
  CHECK(c.clauses[0] == std::vector<Lit>{Lit(1, true), Lit(2, false), Lit(3, true)});

  // Arbitrary chunking gives the same result.
  const std::string text = "p cnf 4 2\n1 2 -3 0\n-4 1 0\n";
  esc_test::ClauseCollector chunked;
  DimacsParser p(chunked);
  for (char ch : text)
    p.feed(std::string_view(&ch, 1));
  p.finish();
  CHECK(chunked.clauses == esc_test::parse_all(text).clauses);

  CHECK_THROWS_AS((esc_test::parse_all("1 2 0\n")), parse_error);
  CHECK_THROWS_AS((esc_test::parse_all("p cnf 2 1\n1 2\n")), parse_error);
  CHECK_THROWS_AS((esc_test::parse_all("p cnf 2 1\n1 x 0\n")), parse_error);
}
