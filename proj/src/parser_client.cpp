// Copyright 2026 The dtatg Authors
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

#include "dtatg/parser_client.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>

#include "dtatg/errors.hpp"
#include "dtatg/text.hpp"

namespace dtatg {

namespace {

ParserConfig with_env_override(ParserConfig config) {
  if (const char* dir = std::getenv("DTATG_FIXTURE_DIR")) {
    if (*dir) config.fixture_dir = dir;
  }
  return config;
}

[[noreturn]] void fail_errno(const std::string& what) {
  fail(ErrorKind::kParser, what + ": " + std::strerror(errno));
}

}  // namespace

ParserClient::ParserClient(ParserConfig config)
    : config_(with_env_override(std::move(config))),
      slots_(std::max(1, config_.pool_size)) {}

std::string ParserClient::fixture_key(const std::string& sentence_text) {
  return sha256_hex(normalize_whitespace(sentence_text));
}

std::string ParserClient::fixture_path(const std::string& dir,
                                       const std::string& sentence_text) {
  return dir + "/" + fixture_key(sentence_text) + ".conllu";
}

DependencyTree ParserClient::parse(const std::string& sentence_text) const {
  if (config_.mode == ParserMode::kFixture) {
    return parse_fixture(sentence_text);
  }
  return parse_command(sentence_text);
}

DependencyTree ParserClient::parse_fixture(
    const std::string& sentence_text) const {
  if (config_.fixture_dir.empty()) {
    fail(ErrorKind::kConfig, "fixture mode needs a fixture directory");
  }
  const std::string key = fixture_key(sentence_text);
  const std::string path = config_.fixture_dir + "/" + key + ".conllu";
  if (!std::filesystem::exists(path)) {
    fail(ErrorKind::kNotFound,
         "no cached parse " + key + ".conllu for sentence: " +
             normalize_whitespace(sentence_text));
  }
  std::vector<DependencyTree> trees = parse_conllu(read_file(path));
  if (trees.empty()) {
    fail(ErrorKind::kFormat, "fixture " + path + " holds no sentence");
  }
  return std::move(trees.front());
}

DependencyTree ParserClient::parse_command(
    const std::string& sentence_text) const {
  if (config_.command.empty()) {
    fail(ErrorKind::kConfig, "command mode needs a parser command");
  }
  slots_.acquire();
  std::string output;
  try {
    output = run_parser_command(config_.command, sentence_text + "\n",
                                config_.timeout_seconds);
  } catch (...) {
    slots_.release();
    throw;
  }
  slots_.release();

  std::vector<DependencyTree> trees = parse_conllu(output);
  if (trees.empty()) {
    fail(ErrorKind::kParser,
         "parser produced no parse for: " + normalize_whitespace(sentence_text));
  }
  return std::move(trees.front());
}

std::string run_parser_command(const std::string& command,
                               const std::string& input,
                               double timeout_seconds) {
  int in_pipe[2];
  int out_pipe[2];
  if (pipe(in_pipe) != 0) fail_errno("pipe");
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    fail_errno("pipe");
  }

  pid_t pid = fork();
  if (pid < 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    fail_errno("fork");
  }
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(in_pipe[0]);
  close(out_pipe[1]);

  // The sentence fits comfortably in the pipe buffer, so writing it all
  // before reading cannot deadlock.
  signal(SIGPIPE, SIG_IGN);
  size_t written = 0;
  while (written < input.size()) {
    ssize_t n = write(in_pipe[1], input.data() + written, input.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;  // a dead child surfaces via its exit status below
    }
    written += static_cast<size_t>(n);
  }
  close(in_pipe[1]);

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(
                            static_cast<long>(timeout_seconds * 1000.0));
  std::string output;
  char buffer[4096];
  bool timed_out = false;
  while (true) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    struct pollfd pfd = {out_pipe[0], POLLIN, 0};
    int ready = poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (ready == 0) {
      timed_out = true;
      break;
    }
    ssize_t n = read(out_pipe[0], buffer, sizeof(buffer));
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 0) break;  // EOF
    output.append(buffer, static_cast<size_t>(n));
  }
  close(out_pipe[0]);

  if (timed_out) {
    kill(pid, SIGKILL);
    waitpid(pid, nullptr, 0);
    fail(ErrorKind::kParser,
         "parser command timed out after " + std::to_string(timeout_seconds) +
             " s");
  }

  int status = 0;
  waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    fail(ErrorKind::kParser,
         "parser command failed (exit status " + std::to_string(code) + ")");
  }
  return output;
}

}  // namespace dtatg
