#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "esc/campaign.hpp"
#include "esc/cnf.hpp"
#include "esc/dimacs.hpp"
#include "esc/error.hpp"
#include "esc/exclusion.hpp"
#include "esc/geometry.hpp"
#include "esc/verify.hpp"
#include "esc/witness.hpp"

namespace fs = std::filesystem;

namespace {

class OstreamSink : public esc::ByteSink {
public:
  explicit OstreamSink(std::ostream &out) : out_(out) {}
  void write(std::string_view bytes) override {
    out_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out_)
      throw esc::emission_error("write to standard output failed");
  }

private:
  std::ostream &out_;
};

esc::InstanceSpec make_spec(int n, int k, const std::string &cc5, const std::string &layers,
                            const std::string &w) {
  esc::InstanceSpec spec;
  spec.params = esc::EncodingParams::make(n, k);
  spec.cc5 = esc::parse_cc5_mode(cc5);
  if (!layers.empty())
    spec.layers = esc::HullTemplate{esc::parse_int_list(layers)};
  if (!w.empty())
    spec.subcube = esc::SubCube{esc::parse_int_list(w)};
  spec.validate();
  return spec;
}

std::string join(const std::vector<int> &v, const char *sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

int cmd_gen(int n, int k, const std::string &layers, const std::string &w,
            const std::string &cc5, const std::string &out) {
  const auto spec = make_spec(n, k, cc5, layers, w);
  esc::Manifest m;
  if (out == "-") {
    OstreamSink sink(std::cout);
    m = esc::emit(spec, sink);
    std::cout.flush();
    std::cerr << m.to_json().dump(2) << '\n';
  } else {
    m = esc::emit_file(spec, out);
    std::cout << "wrote " << out << " (" << m.variables.total << " variables, "
              << m.clauses.total() << " clauses, sha256 " << m.sha256 << ")\n"
              << "manifest " << esc::manifest_path(out).string() << '\n';
  }
  return 0;
}

int cmd_check_points(const std::string &file, int k) {
  std::ifstream in(file);
  if (!in)
    throw esc::error("cannot read " + file);
  const auto ps = esc::PointSet::read(in);
  const auto verdict = esc::convex_position_iff_4subsets(ps.points());
  std::cout << "points: " << ps.size() << "\n"
            << "general-position: yes\n"
            << "convex-position: hull=" << (verdict.by_hull ? "yes" : "no")
            << " foursets=" << (verdict.by_foursets ? "yes" : "no") << '\n'
            << "convex-layers: " << join(esc::convex_layer_sizes(ps.points()), ",") << '\n';
  const auto witness = esc::find_convex_subset(ps, k);
  std::cout << "convex-" << k << "-subset: ";
  if (witness)
    std::cout << "yes " << join(*witness) << '\n';
  else
    std::cout << "no\n";
  return verdict.by_hull == verdict.by_foursets ? 0 : 2;
}

int cmd_construct(int n, const std::string &layers, const std::string &w, bool concentric,
                  std::uint64_t seed, const std::string &out) {
  const esc::HullTemplate t{esc::parse_int_list(layers)};
  std::optional<esc::SubCube> s;
  if (!w.empty())
    s = esc::SubCube{esc::parse_int_list(w)};
  const auto ps = concentric ? esc::concentric_configuration(n, t, seed)
                             : esc::anchored_configuration(n, t, s, seed);
  if (out == "-") {
    ps.write(std::cout);
  } else {
    std::ofstream f(out);
    ps.write(f);
    if (!f)
      throw esc::error("cannot write " + out);
  }
  return 0;
}

esc::InstanceSpec spec_from_cnf(const std::string &cnf) {
  struct Finder : esc::DimacsHandler {
    std::optional<esc::InstanceSpec> spec;
    void comment(std::string_view c) override {
      if (!spec && c.rfind("esc-cnf ", 0) == 0)
        spec = esc::InstanceSpec::from_comment_line(c);
    }
  };
  // Comments precede the header, so only the preamble needs reading.
  std::ifstream in(cnf);
  if (!in)
    throw esc::error("cannot read " + cnf);
  Finder f;
  esc::DimacsParser parser(f);
  std::string line;
  while (std::getline(in, line) && !line.empty() && line[0] == 'c') {
    line += '\n';
    parser.feed(line);
  }
  if (!f.spec)
    throw esc::parse_error(cnf + " carries no \"c esc-cnf\" parameter line");
  return *f.spec;
}

int cmd_verify(const std::string &cnf, const std::string &model_file) {
  const auto spec = spec_from_cnf(cnf);
  const auto layout = esc::assign_variables(spec.params);
  std::ifstream min(model_file);
  if (!min)
    throw esc::error("cannot read " + model_file);
  const auto model = esc::read_model(min, layout.total);
  auto verdict = esc::decode_and_verify(model, spec);
  if (verdict.pass) {
    std::ifstream cin(cnf, std::ios::binary);
    verdict = esc::check_clauses(cin, model);
  }
  if (verdict.pass) {
    std::cout << "PASS " << spec.comment_line() << '\n';
    return 0;
  }
  std::cout << "FAIL " << to_string(verdict.kind) << ": " << verdict.detail << '\n';
  return 1;
}

int cmd_campaign_run(const std::string &config) {
  const auto cfg = esc::CampaignConfig::load(config);
  const auto report = esc::run_campaign(cfg);
  std::cout << "jobs: " << report.total << " skipped: " << report.skipped
            << " ran: " << report.ran << '\n';
  return 0;
}

int cmd_campaign_status(const std::string &ledger) {
  if (!fs::exists(ledger))
    std::cerr << "warning: " << ledger << " does not exist\n";
  std::cout << esc::render_status(esc::summarize(esc::Ledger::load(ledger)));
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Erdos-Szekeres CNF generator, geometry oracle and campaign runner"};
  app.require_subcommand(1);

  int n = 0, k = 0;
  std::string layers, w, cc5 = "reduced", out;
  auto *gen = app.add_subcommand("gen", "emit a DIMACS instance and its manifest");
  gen->add_option("--n", n, "point count")->required();
  gen->add_option("--k", k, "forbidden convex polygon size")->required();
  gen->add_option("--layers", layers, "hull template sizes, e.g. 5,5,5,5,5,5");
  gen->add_option("--w", w, "sub-cube offsets, e.g. 0,4,4,4,4,4");
  gen->add_option("--cc5", cc5, "full|reduced")->check(CLI::IsMember({"full", "reduced"}));
  gen->add_option("--out", out, "output CNF path, or - for stdout")->required();

  auto *oracle = app.add_subcommand("oracle", "exact-geometry checks");
  oracle->require_subcommand(1);
  std::string points_file;
  int ok = 0;
  auto *check = oracle->add_subcommand("check-points", "convexity report for a point file");
  check->add_option("file", points_file, "one \"x y\" per line")->required();
  check->add_option("--k", ok, "convex subset size to search for")->required();
  int cn = 0;
  std::string clayers, cw, cout_path = "-";
  bool concentric = false;
  std::uint64_t seed = 1;
  auto *construct = oracle->add_subcommand("construct", "build a point set for a hull template");
  construct->add_option("--n", cn, "point count")->required();
  construct->add_option("--layers", clayers, "hull template sizes")->required();
  construct->add_option("--w", cw, "sub-cube offsets");
  construct->add_flag("--concentric", concentric, "concentric regular polygons (no wedges)");
  construct->add_option("--seed", seed, "random seed");
  construct->add_option("--out", cout_path, "output path, or - for stdout");

  std::string vcnf, vmodel;
  auto *verify = app.add_subcommand("verify-model", "check a solver model against its instance");
  verify->add_option("--cnf", vcnf, "CNF emitted by gen")->required();
  verify->add_option("--model", vmodel, "solver output with v lines")->required();

  auto *campaign = app.add_subcommand("campaign", "run or inspect solver campaigns");
  campaign->require_subcommand(1);
  std::string config, ledger;
  auto *run = campaign->add_subcommand("run", "run all jobs without a terminal ledger entry");
  run->add_option("config", config, "campaign config (JSON)")->required();
  auto *status = campaign->add_subcommand("status", "summarize a ledger");
  status->add_option("ledger", ledger, "ledger file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen)
      return cmd_gen(n, k, layers, w, cc5, out);
    if (*check)
      return cmd_check_points(points_file, ok);
    if (*construct)
      return cmd_construct(cn, clayers, cw, concentric, seed, cout_path);
    if (*verify)
      return cmd_verify(vcnf, vmodel);
    if (*run)
      return cmd_campaign_run(config);
    if (*status)
      return cmd_campaign_status(ledger);
  } catch (const std::exception &e) {
    std::cerr << "esc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
