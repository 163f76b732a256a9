#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace metramsey::testgen {

struct RunResult {
  int exit_code = -1;
  std::string out;  // standard output only
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs the CLI with `args`, stderr discarded.
inline RunResult run_cli(const std::vector<std::string>& args, const std::string& stdin_file = "") {
  std::string cmd = shell_quote(METRAMSEY_CLI);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  if (!stdin_file.empty()) cmd += " < " + shell_quote(stdin_file);
  cmd += " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string sample(const std::string& name) {
  return std::string(METRAMSEY_SAMPLES) + "/" + name;
}

} // namespace metramsey::testgen
