#include "result_cache.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace borelz::cli {

FileDecisionCache::FileDecisionCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string field;
        ResultCacheEntry e;
        bool have_decision = false;
        while (ss >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) continue;
            auto k = field.substr(0, eq);
            auto v = field.substr(eq + 1);
            if (k == "key") e.key = v;
            else if (k == "decision") {
                e.decision = v == "yes";
                have_decision = v == "yes" || v == "no";
            } else if (k == "timestamp") e.timestamp = std::atoll(v.c_str());
            else if (k == "version") e.engine_version = v;
        }
        if (!e.key.empty() && have_decision && e.engine_version == kEngineVersion) {
            entries_[e.key] = e;
        }
    }
}

std::string FileDecisionCache::key(const GeneratorSet& gens, std::uint32_t colors) {
    return gens.to_string() + "/" + std::to_string(colors);
}

std::optional<bool> FileDecisionCache::lookup(const GeneratorSet& gens, std::uint32_t colors) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key(gens, colors));
    if (it == entries_.end()) return std::nullopt;
    return it->second.decision;
}

void FileDecisionCache::store(const GeneratorSet& gens, std::uint32_t colors, bool answer) {
    ResultCacheEntry e;
    e.key = key(gens, colors);
    e.decision = answer;
    e.timestamp = std::chrono::duration_cast<std::chrono::seconds>(
                      std::chrono::system_clock::now().time_since_epoch())
                      .count();
    e.engine_version = kEngineVersion;

    std::lock_guard lock(mutex_);
    if (entries_.count(e.key)) return;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    out << "key=" << e.key << " decision=" << (answer ? "yes" : "no") << " timestamp=" << e.timestamp
        << " version=" << e.engine_version << '\n';
    entries_[e.key] = e;
}

std::size_t FileDecisionCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

} // namespace borelz::cli
