#ifndef MFTK_TESTS_TEST_UTIL_H_
#define MFTK_TESTS_TEST_UTIL_H_

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mftk/error.h"
#include "mftk/random.h"

namespace mftk::testing {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    Rng rng(reinterpret_cast<std::uintptr_t>(this) ^ static_cast<std::uint64_t>(++counter));
    path_ = std::filesystem::temp_directory_path() /
            ("mftk-test-" + std::to_string(rng.Next() % 1000000000ULL));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string File(const std::string& name) const { return (path_ / name).string(); }
  std::string Write(const std::string& name, const std::string& content) const {
    const std::string p = File(name);
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs `fn` and returns the ErrorCode it raised; fails the test otherwise.
template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected mftk::Error");
  return ErrorCode::kInvalidArgument;
}

inline std::string RandomWord(Rng& rng, std::size_t min_len, std::size_t max_len,
                              std::string_view alphabet = "abcdefghijklmnopqrstuvwxyz") {
  const std::size_t len = min_len + rng.UniformIndex(max_len - min_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.UniformIndex(alphabet.size())];
  return w;
}

}  // namespace mftk::testing

#endif  // MFTK_TESTS_TEST_UTIL_H_
