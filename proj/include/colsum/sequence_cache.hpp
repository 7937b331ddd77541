#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "colsum/sequences.hpp"

namespace colsum {

inline constexpr const char* kCacheDirEnv = "COLSUM_CACHE_DIR";

// JSON form shared by the cache and the CLI:
// {"family": "A", "params": {"r": 1}, "method": "direct", "quantity": "total", "values": ["1", "1", "2", ...]}
std::string report_to_json(const SequenceReport& rep, int indent = -1);
SequenceReport report_from_json(const std::string& text);

// One JSON file per (family, r, method, quantity, N).
class SequenceCache {
public:
    explicit SequenceCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(Family family, int r, Method method, const std::string& quantity, int max_n) const;
    std::optional<SequenceReport> load(Family family, int r, Method method, const std::string& quantity,
                                       int max_n) const;
    void store(const SequenceReport& rep) const;

private:
    std::filesystem::path dir_;
};

SequenceReport cached_table_sum(const SequenceCache* cache, Family family, int r, int max_n, Method method);
SequenceReport cached_involutions(const SequenceCache* cache, Family family, int r, int max_n);
SequenceReport cached_g(const SequenceCache* cache, Family family, int max_n);

}  // namespace colsum
