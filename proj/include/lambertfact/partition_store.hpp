#pragma once

// Optional on-disk copy of the partition table. The file is a flat
// little-endian list: a u64 entry count, then for each p(n) a u64 byte
// length followed by that many magnitude bytes, least significant first.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "lambertfact/types.hpp"

namespace lambertfact {

inline constexpr const char* kCacheDirEnv = "LAMBERTFACT_CACHE_DIR";

/// Directory named by LAMBERTFACT_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_directory();

void save_partition_table(const std::filesystem::path& file, const std::vector<BigInt>& values);
/// Throws std::runtime_error on a truncated or malformed file.
std::vector<BigInt> load_partition_table(const std::filesystem::path& file);

/// Loads the cached table into PartitionCache::global() when the cache
/// directory holds one. Returns the number of entries adopted.
std::size_t warm_partition_cache();
/// Writes PartitionCache::global() to the cache directory. False when no
/// directory is configured.
bool persist_partition_cache();

}  // namespace lambertfact
