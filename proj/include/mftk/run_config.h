#ifndef MFTK_RUN_CONFIG_H_
#define MFTK_RUN_CONFIG_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mftk {

// One `key = value` entry of a config file.
struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

// Grammar, one entry per line:
//   line    := blank | comment | entry
//   comment := '#' anything
//   entry   := key ws* '=' ws* value
//   key     := [a-z0-9_-]+          ('_' is read as '-')
//   value   := anything, trimmed; one pair of surrounding double quotes is
//              removed
// A key may repeat (for repeatable flags). Throws kMalformedLine.
std::vector<ConfigEntry> ParseConfig(std::istream& in);

// Appends `--key value` for every entry whose flag is absent from `args`, so
// flags given on the command line win. Keys in `switches` are boolean flags:
// "true"/"1"/"yes" appends `--key`, anything else appends nothing.
std::vector<std::string> MergeConfigIntoArgs(std::vector<std::string> args,
                                             const std::vector<ConfigEntry>& entries,
                                             const std::vector<std::string>& switches);

// The resolved settings of one command invocation.
struct RunConfig {
  std::string command;
  std::vector<std::pair<std::string, std::string>> settings;  // flag, value
  std::vector<std::string> input_files;
  std::optional<std::uint64_t> seed;

  void Set(std::string key, std::string value);
  void AddInput(const std::string& path);

  // Throws kFileNotFound for the first input that does not exist.
  void CheckInputsExist() const;

  // Canonical text: command, then settings sorted by key.
  std::string Canonical() const;
  // 16 hex digits of the FNV-1a 64 hash of Canonical().
  std::string Hash() const;
};

std::uint64_t Fnv1a64(std::string_view data);

}  // namespace mftk

#endif  // MFTK_RUN_CONFIG_H_
