#include "liechar/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <unistd.h>

namespace liechar {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir() {
    if (const char* env = std::getenv("LIECHAR_CACHE"); env && *env) return env;
    return ".liechar-cache";
}

json ResultCache::make_key(const std::string& algebra, const std::string& op, const json& params) {
    return {{"schema_version", kSchemaVersion}, {"algebra", algebra}, {"op", op}, {"params", params}};
}

std::filesystem::path ResultCache::entry_path(const json& key) const {
    return dir_ / (sha256_hex(key.dump()) + ".json");
}

std::optional<std::string> ResultCache::load(const json& key) const {
    std::ifstream in(entry_path(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const json entry = json::parse(buf.str());
        if (entry.at("key") != key) return std::nullopt;
        std::string payload = entry.at("payload").get<std::string>();
        if (entry.at("checksum").get<std::string>() != sha256_hex(payload)) return std::nullopt;
        return payload;
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const json& key, const std::string& payload) const {
    std::filesystem::create_directories(dir_);
    const json entry = {{"key", key}, {"payload", payload}, {"checksum", sha256_hex(payload)}};
    const auto final_path = entry_path(key);
    static std::atomic<unsigned> counter{0};
    auto tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache entry " + tmp.string());
        out << entry.dump();
        if (!out) throw Error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
}

} // namespace liechar
