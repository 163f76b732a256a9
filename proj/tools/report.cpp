#include "report.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "metramsey/errors.hpp"

namespace metramsey::cli {

Input read_input(const std::string& path) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return Input{path, std::move(text)};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return Input{path, std::move(text)};
}

std::string inputs_digest(const std::vector<Input>& inputs) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  for (const auto& in : inputs) {
    const std::string frame = std::to_string(in.text.size()) + ":";
    EVP_DigestUpdate(ctx.get(), frame.data(), frame.size());
    EVP_DigestUpdate(ctx.get(), in.text.data(), in.text.size());
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const nlohmann::json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    if (j.empty()) out << csv_field(path) << ",{}\n";
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    if (j.empty()) out << csv_field(path) << ",[]\n";
    return;
  }
  out << csv_field(path) << "," << csv_field(j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

} // namespace

std::string to_csv(const nlohmann::json& j) {
  std::ostringstream out;
  out << "key,value\n";
  flatten(j, "", out);
  return out.str();
}

} // namespace metramsey::cli
