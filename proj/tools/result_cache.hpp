#pragma once

#include "borelz/chromatic.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

namespace borelz::cli {

inline constexpr const char* kEngineVersion = "0.1.0";

struct ResultCacheEntry {
    std::string key; // "<gens>/<colors>"
    bool decision = false;
    std::int64_t timestamp = 0;
    std::string engine_version;
};

// Append-only key=value file of BPC decisions. Entries written by another
// engine version are ignored on load.
class FileDecisionCache : public DecisionCache {
public:
    explicit FileDecisionCache(std::filesystem::path path);

    std::optional<bool> lookup(const GeneratorSet& gens, std::uint32_t colors) override;
    void store(const GeneratorSet& gens, std::uint32_t colors, bool answer) override;

    std::size_t size() const;
    const std::filesystem::path& path() const noexcept { return path_; }

    static std::string key(const GeneratorSet& gens, std::uint32_t colors);

private:
    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<std::string, ResultCacheEntry> entries_;
};

} // namespace borelz::cli
