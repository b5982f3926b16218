#include "rw/config.hpp"

#include <cstdlib>

namespace rw {

const char* version() { return "0.1.0"; }

std::uint64_t enum_cap() {
  if (const char* env = std::getenv("RW_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000ULL;
}

std::string cache_dir() {
  if (const char* env = std::getenv("RW_CACHE_DIR")) {
    if (*env != '\0') return env;
  }
  return "./.rw-cache";
}

} // namespace rw
