#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "rwg/query.hpp"

namespace rwg {

/// Binary index format: magic "RWGIDX01", u32 version, u8 kind, then tagged
/// length-prefixed sections, all integers little-endian fixed width, and a
/// trailing FNV-1a 64 checksum of everything before it.
inline constexpr std::uint32_t kIndexFormatVersion = 1;

std::string serialize_index(const AnyIndex& index);
/// Throws DataError on a bad magic, version, checksum or section.
AnyIndex deserialize_index(std::string_view bytes);

void save_index(const AnyIndex& index, const std::filesystem::path& path);
AnyIndex load_index(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace rwg
