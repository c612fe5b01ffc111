#include "monoword/cli/crosscheck.hpp"

#include "monoword/cli/grid.hpp"
#include "monoword/combinatorics.hpp"
#include "monoword/laguerre.hpp"
#include "monoword/painleve.hpp"
#include "monoword/parallel.hpp"
#include "monoword/rng.hpp"
#include "monoword/series.hpp"
#include "monoword/toeplitz.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace monoword::cli {

namespace {

constexpr double kFaultFactor = 1.0 + 1e-3;

struct SweepPoint {
    int n;
    int k;
    double t;
};

std::vector<SweepPoint> sweep_points(std::uint64_t seed, int count)
{
    CounterRng rng(seed, 0);
    std::vector<SweepPoint> pts;
    for (int i = 0; i < count; ++i) {
        SweepPoint p;
        p.n = 1 + static_cast<int>(rng.uniform() * 8.0);
        p.k = 1 + static_cast<int>(rng.uniform() * 5.0);
        p.t = 0.05 + 4.95 * rng.uniform();
        pts.push_back(p);
    }
    return pts;
}

void add(CrosscheckReport& r, std::string name, double residual, double tol)
{
    CheckResult c{std::move(name), residual, tol, residual <= tol};
    r.pass = r.pass && c.pass;
    r.checks.push_back(std::move(c));
}

double theorem1_mismatches(bool fault)
{
    struct Case {
        int k;
        int N;
        Statistic which;
    };
    std::vector<Case> cases;
    for (int k = 1; k <= 3; ++k)
        for (int N = 0; N <= 6; ++N)
            for (Statistic w : {Statistic::WeaklyIncreasing, Statistic::StrictlyDecreasing})
                cases.push_back({k, N, w});
    const auto counts = parallel_map<int>(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        const auto brute = exact_distribution_enumeration(c.k, c.N, c.which);
        const auto series = distribution_table_via_series(c.k, c.N, c.which);
        int bad = 0;
        for (int n = 1; n <= 3; ++n) {
            Rational s = series.at(n);
            if (fault)
                s += Rational(1, 1000000);
            bad += s == brute.at(n) ? 0 : 1;
        }
        return bad;
    });
    int total = 0;
    for (int c : counts)
        total += c;
    return total;
}

}  // namespace

CrosscheckReport run_crosscheck(const CrosscheckConfig& config)
{
    if (config.points < 1)
        throw UsageError("--points must be positive");
    for (double tol : {config.tol_identity, config.tol_difference, config.tol_theorem2, config.tol_theorem3})
        if (!(tol > 0.0))
            throw UsageError("tolerances must be positive");
    if (!config.inject_fault.empty() && config.inject_fault != "determinant" && config.inject_fault != "series")
        throw UsageError("unknown fault '" + config.inject_fault + "' (expected determinant or series)");
    const bool det_fault = config.inject_fault == "determinant";

    CrosscheckReport report;
    report.config = config;

    add(report, "theorem1/series_vs_enumeration", theorem1_mismatches(config.inject_fault == "series"), 0.0);

    // Identity residuals: keep the max per identity, in a stable order.
    const auto pts = sweep_points(config.seed, config.points);
    const auto maps = parallel_map<std::map<std::string, double>>(pts.size(), [&](std::size_t i) {
        const auto& p = pts[i];
        std::map<std::string, double> m;
        for (SymbolKind kind : {SymbolKind::I, SymbolKind::D})
            for (const auto& [key, v] : universal_identity_residuals(p.n, p.k, p.t, kind))
                m[key] = std::max(m[key], v);
        for (const auto& [key, v] : nonuniversal_identity_residuals(p.n, p.k, p.t))
            m[key] = std::max(m[key], v);
        for (const auto& [key, v] : differentiation_residuals(p.n, p.k, p.t, default_difference_step(p.t)))
            m["diff/" + key] = std::max(m["diff/" + key], v);
        return m;
    });
    std::map<std::string, double> worst;
    for (const auto& m : maps)
        for (const auto& [key, v] : m)
            worst[key] = std::max(worst[key], v);
    for (const auto& [key, v] : worst) {
        const bool diff = key.rfind("diff/", 0) == 0;
        add(report, "identity/" + (diff ? key.substr(5) : key), v, diff ? config.tol_difference : config.tol_identity);
    }

    // Painleve route against the Toeplitz determinant.
    struct Pair {
        int n;
        int k;
        Statistic which;
    };
    std::vector<Pair> pairs;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (Statistic w : {Statistic::WeaklyIncreasing, Statistic::StrictlyDecreasing})
                pairs.push_back({n, k, w});
    const std::vector<double> times{0.5, 1.0, 2.0};
    const auto t2 = parallel_map<double>(pairs.size(), [&](std::size_t i) {
        const auto& p = pairs[i];
        SigmaOptions opt;
        opt.sample_times = times;
        const auto tr = integrate_sigma(p.n, p.k, times.back(), opt, p.which);
        const SymbolKind kind = p.which == Statistic::WeaklyIncreasing ? SymbolKind::I : SymbolKind::D;
        double worst_err = 0.0;
        for (double t : times) {
            double ref = std::exp(-p.k * t) * toeplitz_det(p.n, p.k, t, kind);
            if (det_fault)
                ref *= kFaultFactor;
            worst_err = std::max(worst_err, std::abs(determinant_from_sigma(tr, t) - ref));
        }
        return worst_err;
    });
    add(report, "theorem2/painleve_vs_toeplitz", *std::max_element(t2.begin(), t2.end()), config.tol_theorem2);

    // Fredholm route against the Toeplitz determinant; k != n included.
    std::vector<std::pair<int, int>> kn;
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n)
            kn.emplace_back(k, n);
    const auto t3 = parallel_map<double>(kn.size(), [&](std::size_t i) {
        const auto [k, n] = kn[i];
        double worst_err = 0.0;
        for (double t : {0.1, 1.0, 2.0}) {
            double ref = std::exp(-k * t) * toeplitz_det(n, k, t, SymbolKind::I);
            if (det_fault)
                ref *= kFaultFactor;
            worst_err = std::max(worst_err, std::abs(smallest_eigenvalue_prob_fredholm(k, n, t) - ref));
        }
        return worst_err;
    });
    add(report, "theorem3/fredholm_vs_toeplitz", *std::max_element(t3.begin(), t3.end()), config.tol_theorem3);
    return report;
}

std::string report_json(const CrosscheckReport& report)
{
    nlohmann::ordered_json j;
    const auto& c = report.config;
    j["seed"] = c.seed;
    j["points"] = c.points;
    j["inject_fault"] = c.inject_fault.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.inject_fault);
    j["tolerances"] = {{"identity", c.tol_identity},
                       {"difference", c.tol_difference},
                       {"theorem2", c.tol_theorem2},
                       {"theorem3", c.tol_theorem3}};
    auto checks = nlohmann::ordered_json::array();
    for (const auto& r : report.checks) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["max_residual"] = r.max_residual;
        row["tolerance"] = r.tolerance;
        row["pass"] = r.pass;
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

}  // namespace monoword::cli
