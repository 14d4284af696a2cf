#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "esc/cnf.hpp"

namespace esc {

enum class JobState { pending, running, sat, unsat, timeout, error };

std::string_view to_string(JobState s);
JobState parse_job_state(std::string_view s);
bool is_terminal(JobState s);

/// Stable identity of an instance: a digest of n, k, cc5 mode, h and w.
std::string job_id(const InstanceSpec &spec);

struct Job {
  InstanceSpec spec;
  std::vector<std::string> solver; // argv with {cnf} / {proof} placeholders
  std::optional<double> time_limit;
  JobState state = JobState::pending;

  std::string id() const { return job_id(spec); }
  /// Moves along pending -> running -> terminal; throws on anything else.
  void advance(JobState next);
};

struct LedgerEntry {
  std::string job;
  JobState state = JobState::pending;
  InstanceSpec spec;
  std::optional<double> seconds;
  std::string solver;
  std::string solver_version;
  std::string cnf_sha256;
  std::string timestamp;
  std::optional<std::string> proof;
  std::optional<bool> verified;
  std::optional<int> exit_code;
  std::string detail;

  nlohmann::json to_json() const;
  static LedgerEntry from_json(const nlohmann::json &j);
};

struct LedgerContents {
  std::vector<LedgerEntry> entries;
  std::vector<std::string> warnings; // skipped corrupt lines
};

/// Append-only JSON-lines ledger. Each entry is written with one write(2)
/// and fsync'd; an unterminated trailing line is treated as corrupt.
class Ledger {
public:
  explicit Ledger(std::filesystem::path path);

  void append(const LedgerEntry &e);
  const std::filesystem::path &path() const { return path_; }

  static LedgerContents load(const std::filesystem::path &path);

private:
  std::filesystem::path path_;
  std::mutex mutex_;
};

/// Allowed offsets per layer; an empty list admits every offset 0..h_i-1.
using OffsetRanges = std::vector<std::vector<int>>;

/// Cartesian product of the allowed offsets with w_0 forced to 0, in
/// lexicographic order without duplicates. Throws config_error when empty.
std::vector<SubCube> enumerate_subcubes(const HullTemplate &t, const OffsetRanges &ranges);

struct Family {
  std::optional<HullTemplate> layers;
  std::optional<SubCube> w;
  std::optional<OffsetRanges> w_ranges;
};

struct CampaignConfig {
  EncodingParams params;
  Cc5Mode cc5 = Cc5Mode::reduced;
  std::vector<std::string> solver;
  std::string solver_version = "unknown";
  std::optional<double> time_limit;
  int workers = 1;
  std::filesystem::path ledger;
  std::filesystem::path workdir;
  bool keep_cnf = false;
  std::vector<Family> families;

  /// Relative paths are resolved against `base`.
  static CampaignConfig from_json(const nlohmann::json &j, const std::filesystem::path &base);
  static CampaignConfig load(const std::filesystem::path &path);

  /// Jobs of all families in order, duplicates removed.
  std::vector<Job> jobs() const;
};

struct JobContext {
  std::filesystem::path workdir;
  std::string solver_version = "unknown";
  bool keep_cnf = false;
};

/// Generates the CNF, runs the solver, interprets its exit code (10 SAT,
/// 20 UNSAT), verifies SAT models, and appends running/terminal entries to
/// the ledger when one is given.
LedgerEntry run_job(Job &job, const JobContext &ctx, Ledger *ledger = nullptr);

struct CampaignReport {
  std::size_t total = 0;
  std::size_t skipped = 0; // already terminal in the ledger
  std::size_t ran = 0;
};

/// Runs every job without a terminal ledger entry on `workers` threads.
CampaignReport run_campaign(const CampaignConfig &config);

struct StatusRow {
  std::string job;
  std::string layers;
  std::string w;
  JobState state = JobState::pending;
  std::optional<double> seconds;
};

struct FamilySpread {
  std::string layers;
  std::size_t solved = 0;
  double min_seconds = 0;
  double max_seconds = 0;
  double ratio = 0;
  bool heavy_tail = false;
};

// Max/min solve-time ratio at which a family is flagged.
inline constexpr double heavy_tail_ratio = 100.0;

struct StatusSummary {
  std::vector<StatusRow> rows;
  std::map<JobState, std::size_t> counts;
  std::size_t timed = 0;
  double min_seconds = 0;
  double median_seconds = 0;
  double max_seconds = 0;
  std::vector<FamilySpread> families;
  std::size_t duplicate_terminal = 0;
  std::vector<std::string> warnings;
};

StatusSummary summarize(const LedgerContents &ledger);
std::string render_status(const StatusSummary &s);

} // namespace esc
