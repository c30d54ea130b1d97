#include "hs/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hs {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_env() {
    const char* dir = std::getenv("HURWITZ_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return ResultCache(dir);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return *dir_ / (sha256_hex(std::string(cache_version) + "|" + key) + ".json");
}

std::optional<Json> ResultCache::get(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
        const Json entry = Json::parse(in);
        if (entry.at("version") != cache_version || entry.at("key") != key) return std::nullopt;
        const Json& payload = entry.at("payload");
        if (entry.at("checksum") != sha256_hex(payload.dump())) return std::nullopt;
        return payload;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

void ResultCache::put(const std::string& key, const Json& payload) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    const Json entry{{"version", cache_version}, {"key", key}, {"checksum", sha256_hex(payload.dump())}, {"payload", payload}};
    const auto target = path_for(key);
    std::random_device rd;
    const auto tmp = target.string() + ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp);
        if (!out) return;  // an unwritable cache only costs recomputation
        out << entry.dump();
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace hs
