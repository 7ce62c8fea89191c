#include "mftk/run_config.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "mftk/error.h"
#include "parse_util.h"

namespace mftk {
namespace {

bool IsKeyChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
}

bool HasFlag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

}  // namespace

std::vector<ConfigEntry> ParseConfig(std::istream& in) {
  internal::LineReader reader(in);
  std::vector<ConfigEntry> out;
  std::string line;
  while (reader.Next(line)) {
    const auto trimmed = internal::Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine, "expected 'key = value'", reader.line_no());
    }
    std::string key(internal::Trim(trimmed.substr(0, eq)));
    if (key.empty() || !std::all_of(key.begin(), key.end(), IsKeyChar)) {
      throw Error(ErrorCode::kMalformedLine, "bad key '" + key + "'", reader.line_no());
    }
    std::replace(key.begin(), key.end(), '_', '-');
    auto value = internal::Trim(trimmed.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out.push_back(ConfigEntry{std::move(key), std::string(value), reader.line_no()});
  }
  return out;
}

std::vector<std::string> MergeConfigIntoArgs(std::vector<std::string> args,
                                             const std::vector<ConfigEntry>& entries,
                                             const std::vector<std::string>& switches) {
  const std::vector<std::string> given = args;
  for (const auto& e : entries) {
    const std::string flag = "--" + e.key;
    if (HasFlag(given, flag)) continue;
    if (std::find(switches.begin(), switches.end(), e.key) != switches.end()) {
      const std::string v = internal::AsciiLower(e.value);
      if (v == "true" || v == "1" || v == "yes") args.push_back(flag);
      continue;
    }
    args.push_back(flag);
    args.push_back(e.value);
  }
  return args;
}

void RunConfig::Set(std::string key, std::string value) {
  settings.emplace_back(std::move(key), std::move(value));
}

void RunConfig::AddInput(const std::string& path) { input_files.push_back(path); }

void RunConfig::CheckInputsExist() const {
  for (const auto& path : input_files) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
      throw Error(ErrorCode::kFileNotFound, "'" + path + "' does not exist");
    }
  }
}

std::string RunConfig::Canonical() const {
  auto sorted = settings;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = "command=" + command + "\n";
  for (const auto& [k, v] : sorted) out += k + "=" + v + "\n";
  return out;
}

std::string RunConfig::Hash() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(Canonical())));
  return buf;
}

std::uint64_t Fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mftk
