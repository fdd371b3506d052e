// cli_check <expected-exit> [--json] -- <command...>
// Runs the command, compares its exit status and, with --json, checks that
// stdout parses and re-emits byte-identically.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: cli_check <expected-exit> [--json] -- <command...>\n";
    return 2;
  }
  const int expected = std::stoi(argv[1]);
  bool json = false;
  int i = 2;
  for (; i < argc && std::string(argv[i]) != "--"; ++i)
    if (std::string(argv[i]) == "--json") json = true;
  std::string cmd;
  for (++i; i < argc; ++i) cmd += quote(argv[i]) + " ";
  cmd += "2>/dev/null";

  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return 2;
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  bool ok = code == expected;
  std::cout << "exit " << code << " (expected " << expected << ")\n";
  if (json) {
    try {
      const auto j = nlohmann::json::parse(out);
      const std::string again = j.dump(2) + "\n";
      const bool same = again == out;
      const bool recorded = j.contains("exit_status") && j["exit_status"] == code;
      std::cout << "json round trip: " << (same ? "identical" : "differs") << ", exit_status field "
                << (recorded ? "matches" : "mismatch") << "\n";
      ok = ok && same && recorded;
    } catch (const std::exception& e) {
      std::cout << "json parse failed: " << e.what() << "\n" << out;
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
