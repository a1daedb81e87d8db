#include "hforge/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hforge {

namespace {

std::string join_parts(const std::vector<long>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

std::vector<long> split_parts(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string probes_field(const std::vector<std::vector<long>>& probes) {
    std::string s;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        if (i) s += ";";
        s += join_parts(probes[i]);
    }
    return s;
}

std::vector<std::vector<long>> parse_probes(const std::string& s) {
    std::vector<std::vector<long>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(split_parts(item));
    return out;
}

}  // namespace

std::string CacheFile::serialize() const {
    std::ostringstream out;
    out << "HFORGE 1\n";
    auto plans_sorted = plans;
    std::sort(plans_sorted.begin(), plans_sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.genus, a.n, a.probes) < std::tie(b.genus, b.n, b.probes);
    });
    for (const auto& p : plans_sorted)
        out << "PLAN " << p.genus << " " << p.n << " " << probes_field(p.probes) << "\n";
    auto holdouts_sorted = holdouts;
    std::sort(holdouts_sorted.begin(), holdouts_sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.genus, a.n, a.probes) < std::tie(b.genus, b.n, b.probes);
    });
    for (const auto& h : holdouts_sorted)
        out << "HOLDOUT " << h.genus << " " << h.n << " " << probes_field(h.probes) << " "
            << (h.passed ? "pass" : "fail") << "\n";
    // table.entries() is already sorted by key; TAU records first.
    for (const auto& [key, entry] : table.entries())
        if (key.lambda_index == 0)
            out << "TAU " << key.genus << " " << join_parts(key.exponents) << " "
                << to_string(entry.value) << "\n";
    for (const auto& [key, entry] : table.entries())
        if (key.lambda_index != 0)
            out << "HODGE " << key.genus << " " << key.lambda_index << " "
                << join_parts(key.exponents) << " " << to_string(entry.value) << "\n";
    return out.str();
}

CacheFile CacheFile::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "HFORGE 1")
        throw std::invalid_argument("bad cache header: expected 'HFORGE 1'");
    CacheFile cache;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "PLAN" || tag == "HOLDOUT") {
            long g;
            std::size_t n;
            std::string probes;
            ls >> g >> n >> probes;
            if (!ls) throw std::invalid_argument("bad record: " + line);
            if (tag == "PLAN") {
                cache.plans.push_back({g, n, parse_probes(probes)});
            } else {
                std::string status;
                ls >> status;
                if (status != "pass" && status != "fail")
                    throw std::invalid_argument("bad record: " + line);
                cache.holdouts.push_back({g, n, parse_probes(probes), status == "pass"});
            }
        } else if (tag == "TAU" || tag == "HODGE") {
            long g, i = 0;
            std::string mlist, value;
            ls >> g;
            if (tag == "HODGE") ls >> i;
            ls >> mlist >> value;
            if (!ls) throw std::invalid_argument("bad record: " + line);
            CorrelatorKey key(g, split_parts(mlist), i);
            if (!key.dimension_ok())
                throw std::invalid_argument("record violates the dimension gate: " + line);
            cache.table.insert(key, parse_rational(value), Provenance::Extracted);
        } else {
            throw std::invalid_argument("unknown record tag: " + tag);
        }
    }
    return cache;
}

void CacheFile::save(const std::filesystem::path& path) const {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << serialize();
    }
    std::filesystem::rename(tmp, path);
}

CacheFile CacheFile::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::filesystem::path cache_path(const std::string& cache_dir_flag) {
    std::filesystem::path dir;
    if (!cache_dir_flag.empty()) {
        dir = cache_dir_flag;
    } else if (const char* env = std::getenv("HFORGE_CACHE")) {
        dir = env;
    } else {
        dir = ".";
    }
    return dir / "hforge-cache.txt";
}

}  // namespace hforge
