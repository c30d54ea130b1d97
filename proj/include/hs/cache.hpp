#pragma once

#include "hs/json_io.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace hs {

/// Bumped whenever a computation changes its output, so stale entries from
/// older builds are never served.
inline constexpr const char* cache_version = "hs-1";

/// On-disk JSON result cache. Entries live in <dir>/<sha256(version|key)>.json
/// and carry the key and a checksum of the payload; an entry that fails to
/// parse or validate is treated as a miss. Writes go to a temporary file that
/// is renamed into place.
class ResultCache {
public:
    ResultCache() = default;  // disabled
    explicit ResultCache(std::filesystem::path dir);
    /// Enabled when HURWITZ_CACHE_DIR is set and non-empty.
    static ResultCache from_env();

    bool enabled() const noexcept { return dir_.has_value(); }
    std::optional<Json> get(const std::string& key) const;
    void put(const std::string& key, const Json& payload) const;
    std::filesystem::path path_for(const std::string& key) const;

private:
    std::optional<std::filesystem::path> dir_;
};

/// Hex SHA-256 of a string.
std::string sha256_hex(const std::string& data);

}  // namespace hs
