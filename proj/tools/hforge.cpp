#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>

#include "hforge/cache.hpp"
#include "hforge/elsv.hpp"
#include "hforge/errors.hpp"
#include "hforge/extractor.hpp"
#include "hforge/oracle.hpp"
#include "hforge/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSearchTooLarge = 3;

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

struct GlobalFlags {
    std::string cache_dir;
    std::uint64_t node_budget = 1'000'000'000;
    unsigned threads = 1;

    hforge::OracleOptions oracle_options() const { return {node_budget, threads}; }
};

int run_hurwitz(long genus, const std::string& profile_str, const std::string& method,
                bool force_dfs, const GlobalFlags& flags) {
    using namespace hforge;
    Profile profile(parse_long_list(profile_str));
    IntersectionEngine engine;
    CorrelatorTable extracted;
    if (genus >= 2) {
        auto path = cache_path(flags.cache_dir);
        if (std::filesystem::exists(path)) extracted = CacheFile::load(path).table;
    }

    auto compute = [&](const std::string& how) -> Rational {
        if (how == "oracle")
            return hurwitz_oracle(genus, profile,
                                  force_dfs ? OracleMethod::Dfs : OracleMethod::Auto,
                                  flags.oracle_options());
        if (how == "elsv") return hurwitz_elsv(genus, profile, engine, extracted);
        if (how == "closed") {
            if (genus == 0) return hurwitz_genus0_closed(profile);
            if (genus == 1) return hurwitz_genus1_closed(profile);
            throw std::invalid_argument("no closed formula for genus >= 2");
        }
        throw std::invalid_argument("unknown method " + how);
    };

    if (method != "all") {
        std::cout << "h = " << to_string(compute(method)) << "\n";
        return kExitOk;
    }
    std::vector<std::string> methods = {"oracle", "elsv"};
    if (genus <= 1) methods.push_back("closed");
    std::vector<Rational> values;
    for (const auto& how : methods) {
        values.push_back(compute(how));
        std::cout << how << ": h = " << to_string(values.back()) << "\n";
    }
    bool agree = std::all_of(values.begin(), values.end(),
                             [&](const Rational& v) { return v == values.front(); });
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? kExitOk : kExitDisagree;
}

int run_tau(long genus, const std::string& m_str) {
    using namespace hforge;
    std::vector<long> m = parse_long_list(m_str);
    for (long e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (!stable(genus, m.size())) {
        std::cout << "0 [vanishes: unstable]\n";
        return kExitOk;
    }
    long total = std::accumulate(m.begin(), m.end(), 0L);
    if (total != 3 * genus - 3 + static_cast<long>(m.size())) {
        std::cout << "0 [vanishes: dimension]\n";
        return kExitOk;
    }
    IntersectionEngine engine;
    std::cout << to_string(engine.psi_intersection(genus, m)) << "\n";
    return kExitOk;
}

void print_slice(long genus, std::size_t n, const hforge::CorrelatorTable& table) {
    using namespace hforge;
    for (const auto& key : (ExtractionPlan{genus, n, {}}).unknowns()) {
        const TableEntry* entry = table.find(key);
        if (!entry) continue;
        std::string mlist;
        for (std::size_t j = 0; j < key.exponents.size(); ++j)
            mlist += (j ? "," : "") + std::to_string(key.exponents[j]);
        if (key.lambda_index == 0)
            std::cout << "TAU " << genus << " " << mlist << " " << to_string(entry->value)
                      << "\n";
        else
            std::cout << "HODGE " << genus << " " << key.lambda_index << " " << mlist << " "
                      << to_string(entry->value) << "\n";
    }
}

int run_hodge(long genus, std::size_t n, bool rebuild, const GlobalFlags& flags) {
    using namespace hforge;
    auto path = cache_path(flags.cache_dir);
    CacheFile cache;
    if (std::filesystem::exists(path)) cache = CacheFile::load(path);

    ExtractionPlan plan{genus, n, {}};
    auto unknowns = plan.unknowns();
    bool complete = std::all_of(unknowns.begin(), unknowns.end(), [&](const CorrelatorKey& k) {
        return cache.table.contains(k);
    });

    if (rebuild || !complete) {
        if (!rebuild) {
            std::cerr << "table for (g=" << genus << ", n=" << n
                      << ") not in cache; run with --rebuild\n";
            return kExitDisagree;
        }
        plan.probes = default_probes(n, unknowns.size());
        CorrelatorTable fragment = extract(plan, OracleMethod::Auto, flags.oracle_options());
        auto holdout = default_probes(n, 1, plan.probes.size());
        HoldoutReport report =
            holdout_validate(plan, fragment, holdout, OracleMethod::Auto,
                             flags.oracle_options());
        if (!report.all_equal()) {
            std::cerr << "holdout validation failed; table not published\n";
            for (const auto& r : report.results)
                std::cerr << "  " << to_string(r.probe) << ": oracle "
                          << to_string(r.oracle_value) << " vs elsv " << to_string(r.elsv_value)
                          << "\n";
            return kExitDisagree;
        }
        cache.table.merge(fragment);
        std::vector<std::vector<long>> probe_parts, holdout_parts;
        for (const auto& p : plan.probes) probe_parts.push_back(p.parts());
        for (const auto& p : holdout) holdout_parts.push_back(p.parts());
        cache.plans.push_back({genus, n, probe_parts});
        cache.holdouts.push_back({genus, n, holdout_parts, true});
        cache.save(path);
    }
    print_slice(genus, n, cache.table);
    return kExitOk;
}

int run_series(long k, long order, const GlobalFlags& flags) {
    using namespace hforge;
    if (k < 1 || order < 0 || order % 2 != 0)
        throw std::invalid_argument("need k >= 1 and an even order");
    CorrelatorTable extracted;
    auto path = cache_path(flags.cache_dir);
    if (std::filesystem::exists(path)) extracted = CacheFile::load(path).table;

    IntersectionEngine engine;
    TruncatedSeries lhs = [&] {
        try {
            return one_point_series_lhs(k, order / 2, engine, extracted);
        } catch (const MissingTableEntryError& e) {
            std::cerr << e.what() << "; run `hforge hodge --rebuild` for the missing slice\n";
            std::exit(kExitDisagree);
        }
    }();
    TruncatedSeries sin_kernel = series_sin_kernel(k + 1, order);
    TruncatedSeries sinh_kernel = series_sinh_kernel(k + 1, order);

    std::cout << "t^2g  linear-Hodge-LHS  sin-kernel  sinh-kernel\n";
    bool sin_all = true, sinh_all = true;
    for (long e = 0; e <= order; e += 2) {
        bool sin_match = lhs.coeff(e) == sin_kernel.coeff(e);
        bool sinh_match = lhs.coeff(e) == sinh_kernel.coeff(e);
        sin_all &= sin_match;
        sinh_all &= sinh_match;
        std::cout << "t^" << e << "  " << to_string(lhs.coeff(e)) << "  "
                  << to_string(sin_kernel.coeff(e)) << (sin_match ? " [match]" : " [MISMATCH]")
                  << "  " << to_string(sinh_kernel.coeff(e))
                  << (sinh_match ? " [match]" : " [MISMATCH]") << "\n";
    }
    std::cout << "sin kernel: " << (sin_all ? "matches" : "MISMATCH") << "\n";
    std::cout << "sinh kernel: " << (sinh_all ? "matches" : "MISMATCH") << "\n";
    return sin_all ? kExitOk : kExitDisagree;
}

int run_verify(const std::string& suite, const GlobalFlags& flags) {
    using namespace hforge;
    auto results = run_verify_suite(suite, cache_path(flags.cache_dir).string());
    for (const auto& r : results)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    return all_passed(results) ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hurwitz numbers, psi-class intersection numbers and Hodge integrals"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--cache-dir", flags.cache_dir, "directory holding hforge-cache.txt");
    app.add_option("--node-budget", flags.node_budget, "DFS node budget");
    app.add_option("--threads", flags.threads, "worker threads for the DFS oracle");

    long genus = 0;
    std::string profile_str, method = "all", m_str, suite = "all";
    std::size_t npoints = 1;
    bool rebuild = false;
    long k = 1, order = 4;

    auto* hurwitz = app.add_subcommand("hurwitz", "compute a Hurwitz number");
    hurwitz->add_option("--genus", genus)->required();
    hurwitz->add_option("--profile", profile_str, "pole orders, e.g. 1,1,2")->required();
    bool force_dfs = false;
    hurwitz->add_option("--method", method)
        ->check(CLI::IsMember({"oracle", "elsv", "closed", "all"}));
    hurwitz->add_flag("--dfs", force_dfs, "force the depth-first oracle");

    auto* tau = app.add_subcommand("tau", "pure psi-class intersection number");
    tau->add_option("--genus", genus)->required();
    tau->add_option("--m", m_str, "psi exponents, e.g. 1,1,0")->required();

    auto* hodge = app.add_subcommand("hodge", "extracted Hodge-integral table slice");
    hodge->add_option("--genus", genus)->required();
    hodge->add_option("--n", npoints)->required();
    hodge->add_flag("--rebuild", rebuild, "run extraction and holdout validation");

    auto* series = app.add_subcommand("series", "one-point generating series vs kernels");
    series->add_option("--k", k)->required();
    series->add_option("--order", order);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"genus0", "genus1", "genus2", "series", "tables", "all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (hurwitz->parsed()) return run_hurwitz(genus, profile_str, method, force_dfs, flags);
        if (tau->parsed()) return run_tau(genus, m_str);
        if (hodge->parsed()) return run_hodge(genus, npoints, rebuild, flags);
        if (series->parsed()) return run_series(k, order, flags);
        if (verify->parsed()) return run_verify(suite, flags);
    } catch (const hforge::SearchTooLargeError& e) {
        std::cerr << "error: " << e.what() << " (raise --node-budget)\n";
        return kExitSearchTooLarge;
    } catch (const hforge::MissingTableEntryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    }
    return kExitUsage;
}
