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

#ifndef SMOKEGEN_SRC_SUBPROCESS_H_
#define SMOKEGEN_SRC_SUBPROCESS_H_

#include <sys/types.h>

#include <chrono>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace smokegen {

// A child process talking line-oriented text over its stdin/stdout. The child
// runs in its own process group; Kill() takes down the whole group so
// grandchildren cannot outlive a hung adapter.
class LineProcess {
 public:
  // Throws CampaignError if the executable cannot be started. Child stderr
  // goes to `stderr_path` (appended) or /dev/null when empty.
  static std::unique_ptr<LineProcess> Spawn(
      const std::vector<std::string>& argv,
      const std::filesystem::path& stderr_path = {});

  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;
  ~LineProcess();

  // Writes `line` plus '\n'. False if the child closed its stdin.
  bool WriteLine(std::string_view line);

  enum class ReadStatus { kLine, kTimeout, kClosed };
  // Reads up to the next '\n' (stripped). kClosed when the child closed its
  // stdout (usually because it exited).
  ReadStatus ReadLine(std::chrono::milliseconds timeout, std::string* line);

  void Kill();
  pid_t pid() const { return pid_; }

  // Waits briefly for the child and describes how it ended, e.g. "exit 3" or
  // "signal 9". Empty if it is still running.
  std::string DescribeExit(std::chrono::milliseconds wait);

 private:
  LineProcess() = default;

  pid_t pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
  bool reaped_ = false;
  int wait_status_ = 0;
  std::string buffer_;
};

// Absolute path of the running executable.
std::filesystem::path SelfExecutable();

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_SUBPROCESS_H_
