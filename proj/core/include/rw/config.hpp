#pragma once

#include <cstdint>
#include <string>

namespace rw {

/// Library version string.
const char* version();

/// Hard cap on explicit element enumeration of a permutation group.
/// Default 1'000'000; override with the RW_ENUM_CAP environment variable.
std::uint64_t enum_cap();

/// Directory used for the witness cache. Default "./.rw-cache";
/// override with the RW_CACHE_DIR environment variable.
std::string cache_dir();

} // namespace rw
