#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <sys/types.h>
#include <vector>

namespace esc {

struct ProcessResult {
  int exit_code = -1; // valid when neither signaled nor timed out
  bool signaled = false;
  int signal = 0;
  bool timed_out = false;
  double seconds = 0;
};

/// A child process in its own process group with stdout/stderr redirected to
/// files.
class Process {
public:
  Process(const std::vector<std::string> &argv, const std::filesystem::path &stdout_path,
          const std::filesystem::path &stderr_path);
  Process(const Process &) = delete;
  Process &operator=(const Process &) = delete;
  ~Process();

  pid_t pid() const { return pid_; }
  /// Sends `sig` to the whole process group.
  void kill(int sig);
  /// Waits for exit, killing the group once `time_limit` seconds have passed.
  ProcessResult wait(std::optional<double> time_limit = std::nullopt);

private:
  pid_t pid_ = -1;
  bool reaped_ = false;
};

ProcessResult run_process(const std::vector<std::string> &argv,
                          const std::filesystem::path &stdout_path,
                          const std::filesystem::path &stderr_path,
                          std::optional<double> time_limit = std::nullopt);

} // namespace esc
