#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hforge/correlator.hpp"
#include "hforge/profile.hpp"

namespace hforge {

struct PlanRecord {
    long genus;
    std::size_t n;
    std::vector<std::vector<long>> probes;
};

struct HoldoutRecord {
    long genus;
    std::size_t n;
    std::vector<std::vector<long>> probes;
    bool passed;
};

// Text cache: first line "HFORGE 1", then PLAN/HOLDOUT provenance lines and
// TAU/HODGE records in canonical sorted order. Writing is atomic
// (temp file + rename), so a reader never sees a partial file.
struct CacheFile {
    std::vector<PlanRecord> plans;
    std::vector<HoldoutRecord> holdouts;
    CorrelatorTable table;

    std::string serialize() const;
    static CacheFile parse(const std::string& text);

    void save(const std::filesystem::path& path) const;
    static CacheFile load(const std::filesystem::path& path);
};

// CLI cache location: --cache-dir flag, else HFORGE_CACHE env var, else cwd.
std::filesystem::path cache_path(const std::string& cache_dir_flag);

}  // namespace hforge
