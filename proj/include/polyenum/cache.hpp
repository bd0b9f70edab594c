#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace polyenum {

// Bumped whenever an enumeration stream could change.
constexpr int kCacheCodeVersion = 1;

std::uint64_t fnv1a64(std::string_view data);

// Enumeration streams stored on disk, one file per (kind, bound, version).
// A file starts with the header line
//   #polyenum-cache kind=<kind> bound=<bound> version=<v> fnv1a=<16 hex digits>
// followed by the payload exactly as stored.
class EnumerationCache {
 public:
  enum class Outcome { Hit, Miss, Regenerated };

  explicit EnumerationCache(std::filesystem::path dir, int version = kCacheCodeVersion);

  std::filesystem::path pathFor(const std::string& kind, int bound) const;
  // nullopt when there is no file for the key. Throws CorruptCache when the
  // header does not match the key or the checksum does not match the payload.
  std::optional<std::string> load(const std::string& kind, int bound) const;
  // Writes atomically through a temporary file. Throws InvalidArgument when
  // the directory cannot be created or written.
  void store(const std::string& kind, int bound, const std::string& payload) const;
  // Loads, or generates and stores on a miss or a corrupt file.
  std::string loadOrGenerate(const std::string& kind, int bound, const std::function<std::string()>& generate,
                             Outcome* outcome = nullptr) const;

  const std::filesystem::path& dir() const { return dir_; }
  int version() const { return version_; }

 private:
  std::filesystem::path dir_;
  int version_;
};

}  // namespace polyenum
