#include "esc/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fcntl.h>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "esc/digest.hpp"
#include "esc/error.hpp"
#include "esc/subprocess.hpp"
#include "esc/verify.hpp"

namespace esc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(JobState s) {
  switch (s) {
  case JobState::pending: return "pending";
  case JobState::running: return "running";
  case JobState::sat: return "sat";
  case JobState::unsat: return "unsat";
  case JobState::timeout: return "timeout";
  case JobState::error: return "error";
  }
  return "?";
}

JobState parse_job_state(std::string_view s) {
  for (JobState st : {JobState::pending, JobState::running, JobState::sat, JobState::unsat,
                      JobState::timeout, JobState::error})
    if (to_string(st) == s)
      return st;
  throw parse_error("unknown job state '" + std::string(s) + "'");
}

bool is_terminal(JobState s) {
  return s == JobState::sat || s == JobState::unsat || s == JobState::timeout ||
         s == JobState::error;
}

std::string job_id(const InstanceSpec &spec) {
  return sha256_hex("esc-job/1 " + spec.comment_line()).substr(0, 16);
}

void Job::advance(JobState next) {
  const bool ok = (state == JobState::pending && next == JobState::running) ||
                  (state == JobState::running && is_terminal(next));
  if (!ok)
    throw error("illegal job transition " + std::string(to_string(state)) + " -> " +
                std::string(to_string(next)));
  state = next;
}

namespace {

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json optional_list(const auto &opt, auto get) {
  if (!opt)
    return nullptr;
  return get(*opt);
}

} // namespace

json LedgerEntry::to_json() const {
  json j{{"job", job},
         {"state", std::string(esc::to_string(state))},
         {"n", spec.params.n},
         {"k", spec.params.k},
         {"cc5", std::string(esc::to_string(spec.cc5))},
         {"layers", optional_list(spec.layers, [](const HullTemplate &t) { return t.layers; })},
         {"w", optional_list(spec.subcube, [](const SubCube &s) { return s.offsets; })},
         {"seconds", seconds ? json(*seconds) : json(nullptr)},
         {"solver", solver},
         {"solver_version", solver_version},
         {"cnf_sha256", cnf_sha256},
         {"timestamp", timestamp},
         {"proof", proof ? json(*proof) : json(nullptr)},
         {"verified", verified ? json(*verified) : json(nullptr)},
         {"exit_code", exit_code ? json(*exit_code) : json(nullptr)},
         {"detail", detail}};
  return j;
}

LedgerEntry LedgerEntry::from_json(const json &j) {
  try {
    LedgerEntry e;
    e.job = j.at("job").get<std::string>();
    e.state = parse_job_state(j.at("state").get<std::string>());
    e.spec.params = EncodingParams::make(j.at("n").get<int>(), j.at("k").get<int>());
    e.spec.cc5 = parse_cc5_mode(j.at("cc5").get<std::string>());
    if (!j.at("layers").is_null())
      e.spec.layers = HullTemplate{j.at("layers").get<std::vector<int>>()};
    if (!j.at("w").is_null())
      e.spec.subcube = SubCube{j.at("w").get<std::vector<int>>()};
    if (!j.at("seconds").is_null())
      e.seconds = j.at("seconds").get<double>();
    e.solver = j.value("solver", "");
    e.solver_version = j.value("solver_version", "");
    e.cnf_sha256 = j.value("cnf_sha256", "");
    e.timestamp = j.value("timestamp", "");
    if (j.contains("proof") && !j.at("proof").is_null())
      e.proof = j.at("proof").get<std::string>();
    if (j.contains("verified") && !j.at("verified").is_null())
      e.verified = j.at("verified").get<bool>();
    if (j.contains("exit_code") && !j.at("exit_code").is_null())
      e.exit_code = j.at("exit_code").get<int>();
    e.detail = j.value("detail", "");
    if (is_terminal(e.state) && !e.seconds)
      throw parse_error("terminal entry without seconds");
    return e;
  } catch (const json::exception &ex) {
    throw parse_error(std::string("malformed ledger entry: ") + ex.what());
  }
}

Ledger::Ledger(fs::path path) : path_(std::move(path)) {
  if (path_.has_parent_path())
    fs::create_directories(path_.parent_path());
  // Terminate a torn final line so the next entry starts on its own line.
  std::ifstream in(path_, std::ios::binary | std::ios::ate);
  if (in && in.tellg() > 0) {
    in.seekg(-1, std::ios::end);
    char last = 0;
    in.get(last);
    if (last != '\n') {
      std::ofstream out(path_, std::ios::app | std::ios::binary);
      out << '\n';
    }
  }
}

void Ledger::append(const LedgerEntry &e) {
  const std::string line = e.to_json().dump() + "\n";
  std::lock_guard lock(mutex_);
  const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
  if (fd < 0)
    throw error("cannot open ledger " + path_.string());
  const ssize_t written = ::write(fd, line.data(), line.size());
  const bool synced = ::fsync(fd) == 0;
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size()) || !synced)
    throw error("ledger append failed for " + path_.string());
}

LedgerContents Ledger::load(const fs::path &path) {
  LedgerContents out;
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return out;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos < data.size()) {
    ++lineno;
    const std::size_t nl = data.find('\n', pos);
    if (nl == std::string::npos) {
      out.warnings.push_back("line " + std::to_string(lineno) + ": unterminated entry skipped");
      break;
    }
    const std::string_view line(data.data() + pos, nl - pos);
    pos = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos)
      continue;
    try {
      out.entries.push_back(LedgerEntry::from_json(json::parse(line)));
    } catch (const std::exception &ex) {
      out.warnings.push_back("line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return out;
}

std::vector<SubCube> enumerate_subcubes(const HullTemplate &t, const OffsetRanges &ranges) {
  if (ranges.size() != t.layers.size())
    throw config_error("offset ranges given for " + std::to_string(ranges.size()) +
                       " layers, template has " + std::to_string(t.layers.size()));
  std::vector<std::vector<int>> allowed(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    std::set<int> values;
    if (ranges[i].empty()) {
      for (int v = 0; v < t.layers[i]; ++v)
        values.insert(v);
    } else {
      for (int v : ranges[i]) {
        if (v < 0 || v >= t.layers[i])
          throw config_error("offset " + std::to_string(v) + " outside [0, " +
                             std::to_string(t.layers[i]) + ") at layer " + std::to_string(i));
        values.insert(v);
      }
    }
    if (i == 0)
      values = values.contains(0) ? std::set<int>{0} : std::set<int>{};
    allowed[i].assign(values.begin(), values.end());
  }
  std::vector<SubCube> out;
  for (const auto &a : allowed)
    if (a.empty())
      throw config_error("sub-cube enumeration for layers " + t.str() + " is empty");
  std::vector<std::size_t> idx(allowed.size(), 0);
  for (;;) {
    SubCube s;
    for (std::size_t i = 0; i < allowed.size(); ++i)
      s.offsets.push_back(allowed[i][idx[i]]);
    out.push_back(std::move(s));
    std::size_t i = allowed.size();
    for (;;) {
      if (i == 0)
        return out;
      --i;
      if (++idx[i] < allowed[i].size())
        break;
      idx[i] = 0;
    }
  }
}

namespace {

std::vector<int> int_list(const json &j, const char *what) {
  if (!j.is_array())
    throw config_error(std::string(what) + " must be a list of integers");
  return j.get<std::vector<int>>();
}

} // namespace

CampaignConfig CampaignConfig::from_json(const json &j, const fs::path &base) {
  try {
    CampaignConfig c;
    c.params = EncodingParams::make(j.at("n").get<int>(), j.at("k").get<int>());
    c.cc5 = parse_cc5_mode(j.value("cc5", std::string("reduced")));
    c.solver = j.at("solver").get<std::vector<std::string>>();
    if (c.solver.empty())
      throw config_error("solver command is empty");
    c.solver_version = j.value("solver_version", std::string("unknown"));
    if (j.contains("time_limit") && !j.at("time_limit").is_null()) {
      const double t = j.at("time_limit").get<double>();
      if (t > 0)
        c.time_limit = t;
    }
    c.workers = j.value("workers", 1);
    if (c.workers < 1)
      throw config_error("workers must be at least 1");
    const auto resolve = [&](const std::string &p) {
      const fs::path path(p);
      return path.is_absolute() ? path : base / path;
    };
    c.ledger = resolve(j.value("ledger", std::string("ledger.jsonl")));
    c.workdir = resolve(j.value("workdir", std::string("work")));
    c.keep_cnf = j.value("keep_cnf", false);
    for (const auto &fj : j.at("families")) {
      Family f;
      if (fj.contains("layers") && !fj.at("layers").is_null())
        f.layers = HullTemplate{int_list(fj.at("layers"), "layers")};
      if (fj.contains("w") && !fj.at("w").is_null())
        f.w = SubCube{int_list(fj.at("w"), "w")};
      if (fj.contains("w_ranges") && !fj.at("w_ranges").is_null()) {
        OffsetRanges r;
        for (const auto &layer : fj.at("w_ranges")) {
          if (layer.is_string() && layer.get<std::string>() == "all")
            r.emplace_back();
          else
            r.push_back(int_list(layer, "w_ranges entry"));
        }
        f.w_ranges = std::move(r);
      }
      if ((f.w || f.w_ranges) && !f.layers)
        throw config_error("a family with w or w_ranges needs layers");
      if (f.w && f.w_ranges)
        throw config_error("give either w or w_ranges, not both");
      c.families.push_back(std::move(f));
    }
    if (c.families.empty())
      throw config_error("campaign has no families");
    return c;
  } catch (const json::exception &ex) {
    throw config_error(std::string("malformed campaign config: ") + ex.what());
  }
}

CampaignConfig CampaignConfig::load(const fs::path &path) {
  std::ifstream in(path);
  if (!in)
    throw config_error("cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &ex) {
    throw config_error(path.string() + ": " + ex.what());
  }
  return from_json(j, fs::absolute(path).parent_path());
}

std::vector<Job> CampaignConfig::jobs() const {
  std::vector<Job> out;
  std::set<std::string> seen;
  const auto add = [&](InstanceSpec spec) {
    spec.validate();
    Job job{std::move(spec), solver, time_limit, JobState::pending};
    if (seen.insert(job.id()).second)
      out.push_back(std::move(job));
  };
  for (const auto &f : families) {
    InstanceSpec base{params, cc5, f.layers, std::nullopt};
    if (f.w_ranges) {
      for (auto &s : enumerate_subcubes(*f.layers, *f.w_ranges)) {
        InstanceSpec spec = base;
        spec.subcube = std::move(s);
        add(std::move(spec));
      }
    } else {
      base.subcube = f.w;
      add(std::move(base));
    }
  }
  return out;
}

namespace {

std::optional<std::string> status_line(const fs::path &stdout_path) {
  std::ifstream in(stdout_path);
  std::string line;
  std::optional<std::string> s;
  while (std::getline(in, line))
    if (line.rfind("s ", 0) == 0)
      s = line.substr(2);
  return s;
}

std::string tail(const fs::path &p, std::size_t max_bytes = 400) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  if (s.size() > max_bytes)
    s = s.substr(s.size() - max_bytes);
  for (char &ch : s)
    if (ch == '\n' || ch == '\r')
      ch = ' ';
  return s;
}

} // namespace

LedgerEntry run_job(Job &job, const JobContext &ctx, Ledger *ledger) {
  fs::create_directories(ctx.workdir);
  const std::string id = job.id();
  LedgerEntry e;
  e.job = id;
  e.spec = job.spec;
  e.solver = fs::path(job.solver.front()).filename().string();
  e.solver_version = ctx.solver_version;

  job.advance(JobState::running);
  e.state = JobState::running;
  e.timestamp = utc_now();
  if (ledger)
    ledger->append(e);

  const fs::path cnf = ctx.workdir / (id + ".cnf");
  const fs::path proof = ctx.workdir / (id + ".drat");
  const fs::path out = ctx.workdir / (id + ".out");
  const fs::path err = ctx.workdir / (id + ".err");

  const auto finish = [&](JobState state, double seconds, std::string detail) {
    job.advance(state);
    e.state = state;
    e.seconds = seconds;
    e.detail = std::move(detail);
    e.timestamp = utc_now();
    if (!ctx.keep_cnf) {
      std::error_code ec;
      fs::remove(cnf, ec);
      fs::remove(manifest_path(cnf), ec);
    }
    if (ledger)
      ledger->append(e);
    return e;
  };

  Manifest manifest;
  try {
    manifest = emit_file(job.spec, cnf);
  } catch (const std::exception &ex) {
    return finish(JobState::error, 0, std::string("generation failed: ") + ex.what());
  }
  e.cnf_sha256 = manifest.sha256;

  bool wants_proof = false;
  std::vector<std::string> argv;
  for (std::string a : job.solver) {
    for (const auto &[key, value] : {std::pair<std::string, std::string>{"{cnf}", cnf.string()},
                                     {"{proof}", proof.string()}}) {
      for (auto pos = a.find(key); pos != std::string::npos; pos = a.find(key)) {
        a.replace(pos, key.size(), value);
        wants_proof |= key == "{proof}";
      }
    }
    argv.push_back(std::move(a));
  }

  ProcessResult r;
  try {
    r = run_process(argv, out, err, job.time_limit);
  } catch (const std::exception &ex) {
    return finish(JobState::error, 0, ex.what());
  }
  if (r.timed_out)
    return finish(JobState::timeout, r.seconds, "time limit reached");
  if (r.signaled)
    return finish(JobState::error, r.seconds,
                  "solver killed by signal " + std::to_string(r.signal) + ": " + tail(err));
  e.exit_code = r.exit_code;

  const auto s = status_line(out);
  if (r.exit_code == 20) {
    if (s && *s != "UNSATISFIABLE")
      return finish(JobState::error, r.seconds, "exit code 20 but status line 's " + *s + "'");
    if (wants_proof && fs::exists(proof))
      e.proof = proof.string();
    return finish(JobState::unsat, r.seconds, "");
  }
  if (r.exit_code == 10) {
    if (s && *s != "SATISFIABLE")
      return finish(JobState::error, r.seconds, "exit code 10 but status line 's " + *s + "'");
    std::string detail;
    try {
      std::ifstream model_in(out);
      const Assignment model = read_model(model_in, manifest.variables.total);
      const Verdict v = decode_and_verify(model, job.spec);
      e.verified = v.pass;
      detail = v.pass ? "witness verified" : std::string(to_string(v.kind)) + ": " + v.detail;
    } catch (const std::exception &ex) {
      e.verified = false;
      detail = std::string("model unreadable: ") + ex.what();
    }
    return finish(JobState::sat, r.seconds, detail);
  }
  return finish(JobState::error, r.seconds,
                "nonstandard exit code " + std::to_string(r.exit_code) + ": " + tail(out) +
                    tail(err));
}

CampaignReport run_campaign(const CampaignConfig &config) {
  auto jobs = config.jobs();
  CampaignReport report;
  report.total = jobs.size();

  const LedgerContents existing = Ledger::load(config.ledger);
  for (const auto &w : existing.warnings)
    std::cerr << "warning: " << config.ledger.string() << ": " << w << '\n';
  std::set<std::string> done;
  for (const auto &e : existing.entries)
    if (is_terminal(e.state))
      done.insert(e.job);

  std::vector<Job *> todo;
  for (auto &j : jobs) {
    if (done.contains(j.id()))
      ++report.skipped;
    else
      todo.push_back(&j);
  }

  Ledger ledger(config.ledger);
  const JobContext ctx{config.workdir, config.solver_version, config.keep_cnf};
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> ran{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      run_job(*todo[i], ctx, &ledger);
      ++ran;
    }
  };
  const int n_workers = std::max(1, std::min<int>(config.workers, static_cast<int>(todo.size())));
  std::vector<std::jthread> pool;
  for (int i = 0; i < n_workers; ++i)
    pool.emplace_back(worker);
  pool.clear();
  report.ran = ran;
  return report;
}

StatusSummary summarize(const LedgerContents &ledger) {
  StatusSummary s;
  s.warnings = ledger.warnings;
  std::map<std::string, const LedgerEntry *> latest;
  std::map<std::string, std::size_t> terminal_count;
  std::vector<std::string> order;
  for (const auto &e : ledger.entries) {
    auto [it, inserted] = latest.try_emplace(e.job, &e);
    if (inserted)
      order.push_back(e.job);
    if (is_terminal(e.state)) {
      if (++terminal_count[e.job] > 1)
        ++s.duplicate_terminal;
      it->second = &e;
    } else if (!is_terminal(it->second->state)) {
      it->second = &e;
    }
  }
  std::vector<double> times;
  std::map<std::string, std::vector<double>> solved_by_family;
  std::vector<std::string> family_order;
  for (const auto &id : order) {
    const LedgerEntry &e = *latest[id];
    StatusRow row{id, e.spec.layers ? e.spec.layers->str() : "-",
                  e.spec.subcube ? e.spec.subcube->str() : "-", e.state, e.seconds};
    ++s.counts[e.state];
    if (is_terminal(e.state) && e.seconds) {
      times.push_back(*e.seconds);
      if (e.state == JobState::sat || e.state == JobState::unsat) {
        if (!solved_by_family.contains(row.layers))
          family_order.push_back(row.layers);
        solved_by_family[row.layers].push_back(*e.seconds);
      }
    }
    s.rows.push_back(std::move(row));
  }
  s.timed = times.size();
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    s.min_seconds = times.front();
    s.max_seconds = times.back();
    const std::size_t m = times.size() / 2;
    s.median_seconds = times.size() % 2 ? times[m] : 0.5 * (times[m - 1] + times[m]);
  }
  for (const auto &name : family_order) {
    const auto &v = solved_by_family[name];
    FamilySpread f;
    f.layers = name;
    f.solved = v.size();
    f.min_seconds = *std::min_element(v.begin(), v.end());
    f.max_seconds = *std::max_element(v.begin(), v.end());
    f.ratio = f.min_seconds > 0 ? f.max_seconds / f.min_seconds : 0;
    f.heavy_tail = f.solved >= 2 && f.ratio >= heavy_tail_ratio;
    s.families.push_back(std::move(f));
  }
  return s;
}

std::string render_status(const StatusSummary &s) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-24s %-24s %-8s %12s\n", "layers", "w", "outcome", "seconds");
  out << buf;
  for (const auto &r : s.rows) {
    std::string secs = "-";
    if (r.seconds) {
      std::snprintf(buf, sizeof buf, "%.2e", *r.seconds);
      secs = buf;
    }
    std::snprintf(buf, sizeof buf, "%-24s %-24s %-8s %12s\n", r.layers.c_str(), r.w.c_str(),
                  std::string(to_string(r.state)).c_str(), secs.c_str());
    out << buf;
  }
  out << "\nstates:";
  for (JobState st : {JobState::running, JobState::sat, JobState::unsat, JobState::timeout,
                      JobState::error}) {
    const auto it = s.counts.find(st);
    out << ' ' << to_string(st) << '=' << (it == s.counts.end() ? 0 : it->second);
  }
  out << '\n';
  std::snprintf(buf, sizeof buf, "seconds: n=%zu min=%.2e median=%.2e max=%.2e\n", s.timed,
                s.min_seconds, s.median_seconds, s.max_seconds);
  out << buf;
  for (const auto &f : s.families) {
    std::snprintf(buf, sizeof buf, "family %s: solved=%zu min=%.2e max=%.2e max/min=%.1f%s\n",
                  f.layers.c_str(), f.solved, f.min_seconds, f.max_seconds, f.ratio,
                  f.heavy_tail ? "  [heavy tail]" : "");
    out << buf;
  }
  if (s.duplicate_terminal > 0)
    out << "duplicate terminal entries: " << s.duplicate_terminal << '\n';
  for (const auto &w : s.warnings)
    out << "warning: " << w << '\n';
  return out.str();
}

} // namespace esc
