#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "liechar/json_io.hpp"

namespace liechar {

std::string sha256_hex(const std::string& data);

/// On-disk store of canonical JSON payloads. A key is a JSON object holding
/// the schema version, algebra, operation and parameters; its SHA-256 names
/// the entry file.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    /// $LIECHAR_CACHE, or .liechar-cache in the working directory.
    static std::filesystem::path default_dir();

    static json make_key(const std::string& algebra, const std::string& op, const json& params);

    /// Missing, corrupt or mismatched entries are misses.
    std::optional<std::string> load(const json& key) const;
    void store(const json& key, const std::string& payload) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path entry_path(const json& key) const;

    std::filesystem::path dir_;
};

} // namespace liechar
