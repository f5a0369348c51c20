// Copyright 2026 The Smokegen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "src/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "src/error.h"

namespace smokegen {
namespace {

using Clock = std::chrono::steady_clock;

void CloseFd(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

// Async-signal-safe write of an errno value from the forked child.
[[noreturn]] void ChildFail(int report_fd) {
  const int err = errno;
  [[maybe_unused]] ssize_t n = ::write(report_fd, &err, sizeof(err));
  ::_exit(127);
}

}  // namespace

std::unique_ptr<LineProcess> LineProcess::Spawn(
    const std::vector<std::string>& argv,
    const std::filesystem::path& stderr_path) {
  if (argv.empty()) throw CampaignError("empty adapter command");

  // Writes to a dead adapter must surface as EPIPE, not kill the runner.
  ::signal(SIGPIPE, SIG_IGN);

  std::vector<char*> cargv;
  cargv.reserve(argv.size() + 1);
  for (const std::string& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);
  const std::string err_path =
      stderr_path.empty() ? std::string("/dev/null") : stderr_path.string();

  int in_pipe[2];
  int out_pipe[2];
  int report_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) {
    throw CampaignError(std::string("pipe: ") + std::strerror(errno));
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw CampaignError(std::string("pipe: ") + std::strerror(errno));
  }
  if (::pipe2(report_pipe, O_CLOEXEC) != 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) {
      ::close(fd);
    }
    throw CampaignError(std::string("pipe: ") + std::strerror(errno));
  }

  const pid_t pid = ::fork();
  if (pid < 0) {
    const int err = errno;
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1],
                   report_pipe[0], report_pipe[1]}) {
      ::close(fd);
    }
    throw CampaignError(std::string("fork: ") + std::strerror(err));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::signal(SIGPIPE, SIG_DFL);
    if (::dup2(in_pipe[0], STDIN_FILENO) < 0) ChildFail(report_pipe[1]);
    if (::dup2(out_pipe[1], STDOUT_FILENO) < 0) ChildFail(report_pipe[1]);
    const int err_fd =
        ::open(err_path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (err_fd < 0 || ::dup2(err_fd, STDERR_FILENO) < 0) {
      ChildFail(report_pipe[1]);
    }
    ::execvp(cargv[0], cargv.data());
    ChildFail(report_pipe[1]);
  }

  ::setpgid(pid, pid);  // races with the child's own call; either wins
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::close(report_pipe[1]);

  auto proc = std::unique_ptr<LineProcess>(new LineProcess());
  proc->pid_ = pid;
  proc->stdin_fd_ = in_pipe[1];
  proc->stdout_fd_ = out_pipe[0];

  int child_errno = 0;
  ssize_t n;
  do {
    n = ::read(report_pipe[0], &child_errno, sizeof(child_errno));
  } while (n < 0 && errno == EINTR);
  ::close(report_pipe[0]);
  if (n > 0) {
    proc->Kill();
    throw CampaignError("cannot start adapter '" + argv[0] +
                        "': " + std::strerror(child_errno));
  }
  return proc;
}

LineProcess::~LineProcess() { Kill(); }

bool LineProcess::WriteLine(std::string_view line) {
  std::string data(line);
  data += '\n';
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(stdin_fd_, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    off += static_cast<std::size_t>(n);
  }
  return true;
}

LineProcess::ReadStatus LineProcess::ReadLine(std::chrono::milliseconds timeout,
                                              std::string* line) {
  const auto deadline = Clock::now() + timeout;
  while (true) {
    if (const std::size_t nl = buffer_.find('\n'); nl != std::string::npos) {
      line->assign(buffer_, 0, nl);
      if (!line->empty() && line->back() == '\r') line->pop_back();
      buffer_.erase(0, nl + 1);
      return ReadStatus::kLine;
    }
    if (stdout_fd_ < 0) return ReadStatus::kClosed;

    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    if (remaining.count() <= 0) return ReadStatus::kTimeout;
    pollfd pfd{stdout_fd_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, static_cast<int>(remaining.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      return ReadStatus::kClosed;
    }
    if (rc == 0) return ReadStatus::kTimeout;

    char chunk[4096];
    const ssize_t n = ::read(stdout_fd_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      CloseFd(stdout_fd_);
      return ReadStatus::kClosed;
    }
    if (n == 0) {
      CloseFd(stdout_fd_);
      return ReadStatus::kClosed;
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void LineProcess::Kill() {
  CloseFd(stdin_fd_);
  CloseFd(stdout_fd_);
  if (pid_ > 0 && !reaped_) {
    ::kill(-pid_, SIGKILL);
    ::kill(pid_, SIGKILL);
    while (::waitpid(pid_, &wait_status_, 0) < 0 && errno == EINTR) {
    }
    reaped_ = true;
  }
}

std::string LineProcess::DescribeExit(std::chrono::milliseconds wait) {
  const auto deadline = Clock::now() + wait;
  while (!reaped_) {
    const pid_t r = ::waitpid(pid_, &wait_status_, WNOHANG);
    if (r == pid_) {
      reaped_ = true;
      break;
    }
    if (r < 0 && errno != EINTR) return "unknown";
    if (Clock::now() >= deadline) return {};
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  if (WIFEXITED(wait_status_)) {
    return "exit " + std::to_string(WEXITSTATUS(wait_status_));
  }
  if (WIFSIGNALED(wait_status_)) {
    return "signal " + std::to_string(WTERMSIG(wait_status_));
  }
  return "unknown";
}

std::filesystem::path SelfExecutable() {
  std::error_code ec;
  auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
  return ec ? std::filesystem::path() : p;
}

}  // namespace smokegen
