#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace rwg {

enum class IndexKind : std::uint8_t { ebwt = 0, bcr = 1, paths = 2, relaxed = 3 };

constexpr std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::ebwt: return "ebwt";
    case IndexKind::bcr: return "bcr";
    case IndexKind::paths: return "paths";
    case IndexKind::relaxed: return "relaxed";
  }
  return "unknown";
}

constexpr std::optional<IndexKind> parse_index_kind(std::string_view s) {
  if (s == "ebwt") return IndexKind::ebwt;
  if (s == "bcr") return IndexKind::bcr;
  if (s == "paths") return IndexKind::paths;
  if (s == "relaxed") return IndexKind::relaxed;
  return std::nullopt;
}

constexpr bool is_cycle_kind(IndexKind kind) { return kind == IndexKind::ebwt || kind == IndexKind::bcr; }

}  // namespace rwg
