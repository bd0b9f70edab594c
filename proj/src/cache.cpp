#include "polyenum/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyenum/error.hpp"

namespace polyenum {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void requireKind(const std::string& kind) {
  if (kind.empty()) throw Error(Errc::InvalidArgument, "empty cache kind");
  for (char c : kind) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) throw Error(Errc::InvalidArgument, "cache kind must match [a-z0-9-]+: " + kind);
  }
}

std::string header(const std::string& kind, int bound, int version, std::uint64_t sum) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(sum));
  return "#polyenum-cache kind=" + kind + " bound=" + std::to_string(bound) + " version=" +
         std::to_string(version) + " fnv1a=" + hex + "\n";
}

}  // namespace

EnumerationCache::EnumerationCache(fs::path dir, int version) : dir_(std::move(dir)), version_(version) {}

fs::path EnumerationCache::pathFor(const std::string& kind, int bound) const {
  requireKind(kind);
  return dir_ / (kind + "-" + std::to_string(bound) + "-v" + std::to_string(version_) + ".jsonl");
}

std::optional<std::string> EnumerationCache::load(const std::string& kind, int bound) const {
  const fs::path path = pathFor(kind, bound);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  const std::size_t nl = data.find('\n');
  if (nl == std::string::npos) throw Error(Errc::CorruptCache, path.string() + ": missing header");
  std::string payload = data.substr(nl + 1);
  if (data.substr(0, nl + 1) != header(kind, bound, version_, fnv1a64(payload)))
    throw Error(Errc::CorruptCache, path.string() + ": header or checksum mismatch");
  return payload;
}

void EnumerationCache::store(const std::string& kind, int bound, const std::string& payload) const {
  const fs::path path = pathFor(kind, bound);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(Errc::InvalidArgument, "cannot create cache directory " + dir_.string());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << header(kind, bound, version_, fnv1a64(payload)) << payload;
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
}

std::string EnumerationCache::loadOrGenerate(const std::string& kind, int bound,
                                             const std::function<std::string()>& generate,
                                             Outcome* outcome) const {
  Outcome result = Outcome::Miss;
  try {
    if (auto hit = load(kind, bound)) {
      if (outcome) *outcome = Outcome::Hit;
      return *hit;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::CorruptCache) throw;
    result = Outcome::Regenerated;
  }
  std::string payload = generate();
  store(kind, bound, payload);
  if (outcome) *outcome = result;
  return payload;
}

}  // namespace polyenum
