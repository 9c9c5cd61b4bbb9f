#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nervekit/error.hpp"
#include "nervekit/json_io.hpp"

namespace nervekit {

struct RunReport {
  std::string command;
  std::string digest;  // sha256 over the bytes of every input file, in reading order
  std::vector<std::string> outputs;
  std::vector<Verdict> verdicts;
  std::string error;  // "Kind: witness" for input errors

  /// 0 when every verdict passes, 1 on a failed verdict, 2 on an input error.
  int exit_code() const;
  std::string to_text() const;
  Json to_json() const;
};

std::string sha256_hex(const std::string& bytes);

/// Runs one command line without the program name. The report goes to
/// `out`, usage and help text to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nervekit
