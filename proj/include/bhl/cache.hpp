#pragma once

// On-disk cache of filled r-tables, one JSON file per Cartan type.

#include <filesystem>
#include <memory>
#include <string>

#include "bhl/coxeter.hpp"
#include "bhl/rpoly.hpp"

namespace bhl {

inline constexpr const char* kCacheHeader = "BHLCACHE v1";

std::filesystem::path cache_path(const std::filesystem::path& dir, const CartanType& type);

/// Returns a filled table, or nullptr when the file is missing, unreadable,
/// or its header or group fingerprint does not match.
std::unique_ptr<RTable> load_rtable(const CoxeterGroup& group, const std::filesystem::path& file);

/// Writes a filled table; the file is replaced atomically.
void save_rtable(const RTable& table, const std::filesystem::path& file);

}  // namespace bhl
