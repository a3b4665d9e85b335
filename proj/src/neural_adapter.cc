// Copyright 2026 The mcnli Authors.
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

#include "mcnli/neural_adapter.h"

#include <fcntl.h>
#include <openssl/evp.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/file.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "mcnli/errors.h"
#include "mcnli/text.h"

extern char** environ;

namespace mcnli {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] {
    struct sigaction current {};
    if (sigaction(SIGPIPE, nullptr, &current) == 0 && current.sa_handler == SIG_DFL) {
      signal(SIGPIPE, SIG_IGN);
    }
  });
}

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { Close(); }
  int get() const { return fd_; }
  void Close() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_;
};

struct BackendRun {
  std::vector<std::string> lines;
  int wait_status = 0;
};

std::string Errno(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

// Runs `command`, feeding `input` on stdin and collecting stdout lines.
BackendRun RunBackend(const std::string& command, const std::string& input,
                      std::chrono::milliseconds timeout) {
  IgnoreSigpipe();
  int in_pipe[2];
  int out_pipe[2];
  if (pipe2(in_pipe, O_CLOEXEC) != 0) throw BackendError(Errno("pipe"));
  Fd in_read(in_pipe[0]), in_write(in_pipe[1]);
  if (pipe2(out_pipe, O_CLOEXEC) != 0) throw BackendError(Errno("pipe"));
  Fd out_read(out_pipe[0]), out_write(out_pipe[1]);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_read.get(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_write.get(), STDOUT_FILENO);
  const char* argv[] = {"sh", "-c", command.c_str(), nullptr};
  // Own process group so a timeout also takes down anything the shell forked.
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);
  pid_t pid = 0;
  int rc = posix_spawn(&pid, "/bin/sh", &actions, &attr, const_cast<char* const*>(argv),
                       environ);
  posix_spawnattr_destroy(&attr);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) {
    throw BackendError("failed to start backend '" + command + "': " + std::strerror(rc));
  }
  in_read.Close();
  out_write.Close();
  fcntl(in_write.get(), F_SETFL, O_NONBLOCK);
  fcntl(out_read.get(), F_SETFL, O_NONBLOCK);

  const auto deadline = Clock::now() + timeout;
  size_t written = 0;
  if (input.empty()) in_write.Close();
  std::string received;
  bool eof = false;
  char buf[65536];
  while (!eof) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) {
      kill(-pid, SIGKILL);
      waitpid(pid, nullptr, 0);
      throw BackendError("backend timed out after " + std::to_string(timeout.count()) + " ms");
    }
    pollfd fds[2];
    nfds_t n = 0;
    fds[n++] = {out_read.get(), POLLIN, 0};
    if (in_write.get() >= 0) fds[n++] = {in_write.get(), POLLOUT, 0};
    int ready = poll(fds, n, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      kill(-pid, SIGKILL);
      waitpid(pid, nullptr, 0);
      throw BackendError(Errno("poll"));
    }
    if (n == 2 && fds[1].revents != 0) {
      if (fds[1].revents & (POLLERR | POLLHUP)) {
        in_write.Close();
      } else {
        ssize_t k = ::write(in_write.get(), input.data() + written, input.size() - written);
        if (k > 0) {
          written += static_cast<size_t>(k);
          if (written == input.size()) in_write.Close();
        } else if (k < 0 && errno != EAGAIN && errno != EINTR) {
          // The backend stopped reading; collect what it said and let the
          // exit status / missing ids speak.
          in_write.Close();
        }
      }
    }
    if (fds[0].revents != 0) {
      ssize_t k = ::read(out_read.get(), buf, sizeof(buf));
      if (k > 0) {
        received.append(buf, static_cast<size_t>(k));
      } else if (k == 0) {
        eof = true;
      } else if (errno != EAGAIN && errno != EINTR) {
        eof = true;
      }
    }
  }
  in_write.Close();

  BackendRun run;
  for (;;) {
    pid_t r = waitpid(pid, &run.wait_status, WNOHANG);
    if (r == pid) break;
    if (r < 0 && errno != EINTR) throw BackendError(Errno("waitpid"));
    if (Clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, nullptr, 0);
      throw BackendError("backend timed out after " + std::to_string(timeout.count()) + " ms");
    }
    usleep(1000);
  }
  size_t start = 0;
  while (start < received.size()) {
    size_t end = received.find('\n', start);
    if (end == std::string::npos) end = received.size();
    run.lines.push_back(received.substr(start, end - start));
    start = end + 1;
  }
  return run;
}

std::string DescribeStatus(int status) {
  if (WIFEXITED(status)) return "exit status " + std::to_string(WEXITSTATUS(status));
  if (WIFSIGNALED(status)) return "signal " + std::to_string(WTERMSIG(status));
  return "status " + std::to_string(status);
}

std::string Abbreviate(std::string_view s) {
  constexpr size_t kMax = 120;
  if (s.size() <= kMax) return std::string(s);
  return std::string(s.substr(0, kMax)) + "...";
}

std::optional<std::pair<std::string, ConversionOutcome>> ParseRecord(const std::string& line,
                                                                     const char* key_field) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  auto id = j.find(key_field);
  if (id == j.end() || !id->is_string()) return std::nullopt;
  auto hyp = j.find("hypothesis");
  auto err = j.find("error");
  const bool has_hyp = hyp != j.end() && !hyp->is_null();
  const bool has_err = err != j.end() && !err->is_null();
  if (has_hyp == has_err) return std::nullopt;
  if (has_hyp) {
    if (!hyp->is_string()) return std::nullopt;
    std::string text(text::Trim(hyp->get<std::string>()));
    if (text.empty()) {
      return std::make_pair(id->get<std::string>(),
                            ConversionOutcome::Failure(FailureReason::kBackendError,
                                                       "empty hypothesis"));
    }
    return std::make_pair(id->get<std::string>(), ConversionOutcome::Success(std::move(text)));
  }
  std::string message = err->is_string() ? err->get<std::string>() : err->dump();
  return std::make_pair(id->get<std::string>(),
                        ConversionOutcome::Failure(FailureReason::kBackendError, message));
}

}  // namespace

std::string CacheKey(std::string_view question, std::string_view answer) {
  std::string payload;
  payload.reserve(question.size() + answer.size() + 1);
  payload.append(question);
  payload.push_back('\x1f');
  payload.append(answer);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

NeuralCache::NeuralCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    // A torn final line from an interrupted writer is skipped.
    auto rec = ParseRecord(line, "key");
    if (rec) entries_[rec->first] = std::move(rec->second);
  }
}

const ConversionOutcome* NeuralCache::Find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void NeuralCache::Append(const std::vector<std::pair<std::string, ConversionOutcome>>& entries) {
  std::string blob;
  for (const auto& [key, outcome] : entries) {
    ordered_json j;
    j["key"] = key;
    if (outcome.ok()) {
      j["hypothesis"] = *outcome.hypothesis;
    } else {
      j["error"] = outcome.detail;
    }
    blob += Dump(j);
    blob += '\n';
    entries_[key] = outcome;
  }
  if (path_.empty() || blob.empty()) return;
  Fd fd(::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644));
  if (fd.get() < 0) throw DataError(Errno(("cannot open cache " + path_.string()).c_str()));
  if (flock(fd.get(), LOCK_EX) != 0) throw DataError(Errno("flock"));
  size_t done = 0;
  while (done < blob.size()) {
    ssize_t k = ::write(fd.get(), blob.data() + done, blob.size() - done);
    if (k < 0) {
      if (errno == EINTR) continue;
      throw DataError(Errno(("cannot write cache " + path_.string()).c_str()));
    }
    done += static_cast<size_t>(k);
  }
  flock(fd.get(), LOCK_UN);
}

std::vector<ConversionOutcome> ConvertBatch(const NeuralConfig& config,
                                            std::span<const ConversionRequest> requests) {
  std::unordered_set<std::string> ids;
  for (const ConversionRequest& r : requests) {
    if (!ids.insert(r.id).second) throw DataError("duplicate request id " + r.id);
  }
  NeuralCache cache = config.cache.empty() ? NeuralCache() : NeuralCache(config.cache);

  std::vector<std::string> keys;
  keys.reserve(requests.size());
  // wire id -> key, in send order
  std::vector<std::pair<std::string, std::string>> pending;
  std::unordered_set<std::string> pending_keys;
  std::string input;
  for (const ConversionRequest& r : requests) {
    keys.push_back(CacheKey(r.question, r.answer));
    const std::string& key = keys.back();
    if (cache.Find(key) || pending_keys.count(key)) continue;
    pending_keys.insert(key);
    pending.emplace_back(r.id, key);
    ordered_json j;
    j["id"] = r.id;
    j["question"] = r.question;
    j["answer"] = r.answer;
    input += Dump(j);
    input += '\n';
  }

  if (!pending.empty()) {
    if (text::Trim(config.command).empty()) {
      throw BackendError(std::to_string(pending.size()) +
                         " requests missing from the cache and no backend command given");
    }
    BackendRun run = RunBackend(config.command, input, config.timeout);
    std::unordered_map<std::string, std::string> key_of(pending.begin(), pending.end());
    std::unordered_map<std::string, ConversionOutcome> answered;
    for (size_t i = 0; i < run.lines.size(); ++i) {
      const std::string& line = run.lines[i];
      if (text::Trim(line).empty()) continue;
      auto rec = ParseRecord(line, "id");
      if (!rec) {
        throw BackendError("backend output line " + std::to_string(i + 1) +
                           " is malformed: " + Abbreviate(line));
      }
      if (!key_of.count(rec->first)) {
        throw BackendError("backend output line " + std::to_string(i + 1) +
                           " has unexpected id " + rec->first);
      }
      answered[rec->first] = std::move(rec->second);
    }
    std::vector<std::string> missing;
    for (const auto& [id, key] : pending) {
      if (!answered.count(id)) missing.push_back(id);
    }
    const bool clean_exit = WIFEXITED(run.wait_status) && WEXITSTATUS(run.wait_status) == 0;
    if (!clean_exit && WIFEXITED(run.wait_status) && WEXITSTATUS(run.wait_status) == 127 &&
        answered.empty()) {
      throw BackendError("failed to start backend '" + config.command + "' (exit status 127)");
    }
    if (!missing.empty()) {
      std::string list;
      for (size_t i = 0; i < missing.size() && i < 20; ++i) list += (i ? ", " : "") + missing[i];
      if (missing.size() > 20) list += ", ...";
      throw BackendError("backend " + DescribeStatus(run.wait_status) + " without answering " +
                         std::to_string(missing.size()) + " ids: " + list);
    }
    if (!clean_exit) {
      throw BackendError("backend ended with " + DescribeStatus(run.wait_status));
    }
    std::vector<std::pair<std::string, ConversionOutcome>> fresh;
    fresh.reserve(pending.size());
    for (const auto& [id, key] : pending) fresh.emplace_back(key, answered[id]);
    cache.Append(fresh);
  }

  std::vector<ConversionOutcome> out;
  out.reserve(requests.size());
  for (const std::string& key : keys) out.push_back(*cache.Find(key));
  return out;
}

}  // namespace mcnli
