#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace metramsey::cli {

/// An input read once, so that parsing and digesting see the same bytes.
struct Input {
  std::string name;  // path as given, "-" for standard input
  std::string text;
};

/// Reads a file, or standard input for "-". Throws ParseError when unreadable.
Input read_input(const std::string& path);

/// "sha256:<hex>" over the inputs in order, each framed by its length.
std::string inputs_digest(const std::vector<Input>& inputs);

/// "path,value" rows for every leaf of `j`, depth first, keys in order.
std::string to_csv(const nlohmann::json& j);

} // namespace metramsey::cli
