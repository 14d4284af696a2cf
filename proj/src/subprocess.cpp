#include "esc/subprocess.hpp"

#include <chrono>
#include <csignal>
#include <cerrno>
#include <cstring>
#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>
#include <thread>

#include "esc/error.hpp"

extern char **environ;

namespace esc {

Process::Process(const std::vector<std::string> &argv, const std::filesystem::path &stdout_path,
                 const std::filesystem::path &stderr_path) {
  if (argv.empty())
    throw error("empty command line");
  posix_spawn_file_actions_t actions;
  posix_spawnattr_t attr;
  posix_spawn_file_actions_init(&actions);
  posix_spawnattr_init(&attr);
  posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, stdout_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, stderr_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  std::vector<char *> args;
  for (const auto &a : argv)
    args.push_back(const_cast<char *>(a.c_str()));
  args.push_back(nullptr);
  const int rc = posix_spawnp(&pid_, args[0], &actions, &attr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0)
    throw error("cannot start '" + argv[0] + "': " + std::strerror(rc));
}

Process::~Process() {
  if (!reaped_ && pid_ > 0) {
    ::kill(-pid_, SIGKILL);
    ::waitpid(pid_, nullptr, 0);
  }
}

void Process::kill(int sig) {
  if (!reaped_)
    ::kill(-pid_, sig);
}

ProcessResult Process::wait(std::optional<double> time_limit) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  ProcessResult r;
  auto pause = std::chrono::milliseconds(1);
  for (;;) {
    siginfo_t info{};
    // Detect the exit without reaping so the group id stays reserved.
    const int rc = ::waitid(P_PID, static_cast<id_t>(pid_), &info, WEXITED | WNOHANG | WNOWAIT);
    if (rc == 0 && info.si_pid == pid_)
      break;
    if (rc < 0 && errno != EINTR)
      throw error(std::string("waitid failed: ") + std::strerror(errno));
    const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    if (time_limit && elapsed >= *time_limit && !r.timed_out) {
      r.timed_out = true;
      ::kill(-pid_, SIGKILL);
    }
    std::this_thread::sleep_for(pause);
    pause = std::min(pause * 2, std::chrono::milliseconds(50));
  }
  r.seconds = std::chrono::duration<double>(clock::now() - start).count();
  // Grandchildren may outlive the leader.
  ::kill(-pid_, SIGKILL);
  int status = 0;
  while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
  }
  reaped_ = true;
  if (WIFEXITED(status)) {
    r.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    r.signaled = true;
    r.signal = WTERMSIG(status);
  }
  return r;
}

ProcessResult run_process(const std::vector<std::string> &argv,
                          const std::filesystem::path &stdout_path,
                          const std::filesystem::path &stderr_path,
                          std::optional<double> time_limit) {
  Process p(argv, stdout_path, stderr_path);
  return p.wait(time_limit);
}

} // namespace esc
