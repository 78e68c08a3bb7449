#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fa/io.hpp"

namespace fa::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Structured result of one command. `text` holds the human-readable form.
struct Report {
  std::string command;
  std::string input_digest;
  Json results = Json::object();
  Json certificates = Json::array();
  int exit_status = kOk;
  std::vector<std::string> text;

  Json to_json() const;
};

/// SHA-256 of `bytes` as lowercase hex.
std::string sha256_hex(const std::string& bytes);

/// Runs `fa <args...>` and writes the report (text or --json) to `out`;
/// diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fa::cli
