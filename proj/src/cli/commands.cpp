#include "monoword/cli/commands.hpp"

#include "monoword/cli/crosscheck.hpp"
#include "monoword/cli/grid.hpp"
#include "monoword/cli/records.hpp"
#include "monoword/combinatorics.hpp"
#include "monoword/laguerre.hpp"
#include "monoword/limits.hpp"
#include "monoword/painleve.hpp"
#include "monoword/parallel.hpp"
#include "monoword/series.hpp"
#include "monoword/toeplitz.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

namespace monoword::cli {

namespace {

struct Common {
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", c.output, "write to this file instead of stdout");
}

void emit(const Common& c, std::vector<Record> records, std::ostream& out)
{
    const Format f = c.format == "json" ? Format::Json : Format::Csv;
    if (c.output.empty()) {
        write_records(out, std::move(records), f);
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file '" + c.output + "'");
    write_records(file, std::move(records), f);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file '" + path + "'");
    file << text;
}

std::string which_tag(Statistic w) { return std::string(1, statistic_tag(w)); }

// ---- dist

struct DistArgs {
    Common common;
    std::string which = "I";
    int k = 0;
    std::string N;
    std::optional<int> n_max;
    std::string route = "tableaux";
};

std::vector<Record> cmd_dist(const DistArgs& a)
{
    if (a.k < 1)
        throw UsageError("--k must be at least 1");
    const Statistic which = parse_statistic(a.which);
    const auto Ns = parse_int_grid(a.N);
    for (int N : Ns)
        if (N < 0)
            throw UsageError("--N must be nonnegative");
    const int n_max = a.n_max.value_or(*std::max_element(Ns.begin(), Ns.end()));
    if (n_max < 0)
        throw UsageError("--n-max must be nonnegative");
    std::vector<Record> rows;
    for (int N : Ns) {
        std::optional<DistributionTable> table;
        if (a.route == "enum")
            table = exact_distribution_enumeration(a.k, N, which);
        else if (a.route == "tableaux")
            table = distribution_table_via_tableaux(a.k, N, which);
        else
            table = distribution_table_via_series(a.k, N, which);
        for (int n = 0; n <= n_max; ++n) {
            Record r;
            r.route = a.route;
            r.which = which_tag(which);
            r.n = n;
            r.k = a.k;
            r.param = N;
            r.value = table->at(n);
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

// ---- painleve

struct PainleveArgs {
    Common common;
    std::string which = "I";
    int n = 1;
    int k = 1;
    std::string t = "0.5,1,2,4";
    double tol = 1e-10;
    double t_start = 0.0;
    std::string seed = "series";
    bool compare = false;
};

std::vector<Record> cmd_painleve(const PainleveArgs& a)
{
    if (a.n < 1 || a.k < 1)
        throw UsageError("--n and --k must be at least 1");
    if (!(a.tol > 0.0))
        throw UsageError("--tol must be positive");
    const Statistic which = parse_statistic(a.which);
    const auto ts = parse_real_grid(a.t);
    if (!(ts.front() > 0.0))
        throw UsageError("--t values must be positive");
    SigmaOptions opt;
    opt.tol = a.tol;
    opt.t_start = a.t_start;
    opt.seed = a.seed == "leading" ? SeedMode::LeadingTerm : SeedMode::ExactSeries;
    opt.sample_times = ts;
    const auto tr = integrate_sigma(a.n, a.k, ts.back(), opt, which);
    std::vector<Record> rows;
    const SymbolKind kind = which == Statistic::WeaklyIncreasing ? SymbolKind::I : SymbolKind::D;
    for (double t : ts) {
        Record det;
        det.route = "painleve";
        det.which = which_tag(which);
        det.n = a.n;
        det.k = a.k;
        det.param = t;
        det.value = determinant_from_sigma(tr, t);
        rows.push_back(det);
        Record sig = det;
        sig.route = "painleve-sigma";
        sig.value = tr.state_at(t).sigma;
        rows.push_back(sig);
        if (a.compare) {
            Record ref = det;
            ref.route = "toeplitz";
            ref.value = std::exp(-a.k * t) * toeplitz_det(a.n, a.k, t, kind);
            rows.push_back(ref);
        }
    }
    return rows;
}

// ---- laguerre

struct LaguerreArgs {
    Common common;
    int k = 1;
    int n = 0;
    std::string t = "0.5,1,2";
    std::string route = "fredholm";
    int nodes = kDefaultNystromNodes;
};

std::vector<Record> cmd_laguerre(const LaguerreArgs& a)
{
    if (a.k < 1 || a.n < 0)
        throw UsageError("--k must be at least 1 and --n nonnegative");
    const auto ts = parse_real_grid(a.t);
    if (ts.front() < 0.0)
        throw UsageError("--t values must be nonnegative");
    const auto values = parallel_map<double>(ts.size(), [&](std::size_t i) {
        return a.route == "quadrature" ? smallest_eigenvalue_prob_quadrature(a.k, a.n, ts[i])
                                       : smallest_eigenvalue_prob_fredholm(a.k, a.n, ts[i], a.nodes);
    });
    std::vector<Record> rows;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Record r;
        r.route = a.route;
        r.n = a.n;
        r.k = a.k;
        r.param = ts[i];
        r.value = values[i];
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---- limits

struct LimitsArgs {
    Common common;
    std::string k = "2";
    std::string s = "-2:2:0.5";
    std::string N = "50,100,200,400";
    std::string method = "quadrature";
    std::string route = "convolution";
    std::uint64_t seed = 20240521;
    std::uint64_t samples = 400000;
    double tol = 1e-12;
    double s_min = -3.0;
    double s_max = 3.0;
};

int single_k(const std::string& text)
{
    const auto ks = parse_int_grid(text);
    if (ks.size() != 1)
        throw UsageError("--k takes a single value here");
    return ks.front();
}

std::vector<Record> cmd_limits(const std::string& which, const LimitsArgs& a)
{
    std::vector<Record> rows;
    MonteCarloOptions mc;
    mc.seed = a.seed;
    mc.samples = a.samples;
    if (which == "f0" || which == "gue") {
        const int k = single_k(a.k);
        if (k < 2)
            throw UsageError("--k must be at least 2");
        const auto ss = parse_real_grid(a.s);
        const bool mc_route = which == "f0" && a.method == "montecarlo";
        const auto est = parallel_map<Estimate>(ss.size(), [&](std::size_t i) {
            if (which == "gue")
                return Estimate{gue_F(ss[i], k, a.route == "direct" ? GueRoute::Direct : GueRoute::Convolution), 0.0};
            return f0(ss[i], k, mc_route ? F0Method::MonteCarlo : F0Method::Quadrature, mc);
        });
        for (std::size_t i = 0; i < ss.size(); ++i) {
            Record r;
            r.route = which == "gue" ? "gue-" + a.route : "f0-" + a.method;
            r.k = k;
            r.param = ss[i];
            r.value = est[i].value;
            r.err_bar = est[i].error;
            rows.push_back(std::move(r));
        }
    } else if (which == "f2") {
        F2Options opt;
        opt.tol = a.tol;
        for (const auto& p : f2(parse_real_grid(a.s), opt)) {
            Record r;
            r.route = "f2";
            r.param = p.s;
            r.value = p.F2;
            rows.push_back(std::move(r));
        }
    } else if (which == "thm4") {
        const int k = single_k(a.k);
        const auto report = theorem4_convergence(k, parse_int_grid(a.N), a.s_min, a.s_max);
        for (const auto& row : report.rows) {
            Record r;
            r.route = "thm4-sup-error";
            r.which = "I";
            r.k = k;
            r.param = row.N;
            r.value = row.sup_error;
            rows.push_back(std::move(r));
        }
    } else {
        const auto report = fklim_check(parse_int_grid(a.k), parse_real_grid(a.s), mc);
        for (const auto& row : report.rows) {
            Record r;
            r.route = "fklim-error";
            r.k = row.k;
            r.param = row.s;
            r.value = row.error;
            r.err_bar = row.f0_error;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monotone subsequences of random words: exact distributions, Toeplitz, Painleve and limit laws",
                 "monoword"};
    app.require_subcommand(1);

    DistArgs dist;
    auto* c_dist = app.add_subcommand("dist", "exact distribution F(n; k, N) of the monotone statistic");
    c_dist->add_option("--which", dist.which, "I (weakly increasing) or D (strictly decreasing)")
        ->check(CLI::IsMember({"I", "D"}));
    c_dist->add_option("--k", dist.k, "alphabet size")->required();
    c_dist->add_option("--N", dist.N, "word length, list a,b or range a:b:step")->required();
    c_dist->add_option("--n-max", dist.n_max, "largest n to report (default max N)");
    c_dist->add_option("--route", dist.route, "enum, tableaux or series")
        ->check(CLI::IsMember({"enum", "tableaux", "series"}));
    add_common(c_dist, dist.common);

    CrosscheckConfig cc;
    std::string cc_output;
    auto* c_cross = app.add_subcommand("crosscheck", "cross-route validation report (JSON)");
    c_cross->add_option("--seed", cc.seed, "seed for the random identity sweep");
    c_cross->add_option("--points", cc.points, "number of random sweep points");
    c_cross->add_option("--tol-identity", cc.tol_identity, "tolerance for algebraic identities");
    c_cross->add_option("--tol-difference", cc.tol_difference, "tolerance for finite-difference identities");
    c_cross->add_option("--tol-theorem2", cc.tol_theorem2, "tolerance for the Painleve route");
    c_cross->add_option("--tol-theorem3", cc.tol_theorem3, "tolerance for the Fredholm route");
    c_cross->add_option("--inject-fault", cc.inject_fault, "test hook: determinant or series");
    c_cross->add_option("-o,--output", cc_output, "report path (default stdout)");

    PainleveArgs pv;
    auto* c_pv = app.add_subcommand("painleve", "sigma-form integration and e^{-kt} D_n(t)");
    c_pv->add_option("--which", pv.which, "I or D")->check(CLI::IsMember({"I", "D"}));
    c_pv->add_option("--n", pv.n, "Toeplitz size")->required();
    c_pv->add_option("--k", pv.k, "alphabet size")->required();
    c_pv->add_option("--t", pv.t, "t grid");
    c_pv->add_option("--tol", pv.tol, "integration tolerance");
    c_pv->add_option("--t-start", pv.t_start, "start of integration (0 = automatic)");
    c_pv->add_option("--seed-mode", pv.seed, "series or leading")->check(CLI::IsMember({"series", "leading"}));
    c_pv->add_flag("--compare", pv.compare, "also emit the Toeplitz determinant");
    add_common(c_pv, pv.common);

    LaguerreArgs lg;
    auto* c_lg = app.add_subcommand("laguerre", "smallest-eigenvalue law of the k x k Laguerre ensemble");
    c_lg->add_option("--k", lg.k, "matrix size")->required();
    c_lg->add_option("--n", lg.n, "weight exponent")->required();
    c_lg->add_option("--t", lg.t, "t grid");
    c_lg->add_option("--route", lg.route, "fredholm or quadrature")->check(CLI::IsMember({"fredholm", "quadrature"}));
    c_lg->add_option("--nodes", lg.nodes, "Nystrom nodes");
    add_common(c_lg, lg.common);

    LimitsArgs lm;
    auto* c_lm = app.add_subcommand("limits", "limit laws: f0, gue, f2, thm4, fklim");
    c_lm->require_subcommand(1);
    std::string limits_which;
    const std::pair<const char*, const char*> limit_commands[] = {
        {"f0", "largest eigenvalue of traceless GUE"},
        {"gue", "largest eigenvalue of GUE"},
        {"f2", "edge law F2 from Painleve II"},
        {"thm4", "sup error of scaled word distributions against F0"},
        {"fklim", "F0 at the edge scaling against F2"},
    };
    for (const auto& [name, help] : limit_commands) {
        auto* sub = c_lm->add_subcommand(name, help);
        sub->add_option("--k", lm.k, "k (a list for fklim)");
        sub->add_option("--s", lm.s, "s grid");
        sub->add_option("--N", lm.N, "N list (thm4)");
        sub->add_option("--method", lm.method, "quadrature or montecarlo (f0)")
            ->check(CLI::IsMember({"quadrature", "montecarlo"}));
        sub->add_option("--route", lm.route, "convolution or direct (gue)")
            ->check(CLI::IsMember({"convolution", "direct"}));
        sub->add_option("--seed", lm.seed, "Monte Carlo seed");
        sub->add_option("--samples", lm.samples, "Monte Carlo samples");
        sub->add_option("--tol", lm.tol, "integration tolerance (f2)");
        sub->add_option("--s-min", lm.s_min, "window start (thm4)");
        sub->add_option("--s-max", lm.s_max, "window end (thm4)");
        add_common(sub, lm.common);
        sub->callback([&limits_which, name] { limits_which = name; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (c_dist->parsed()) {
            emit(dist.common, cmd_dist(dist), out);
        } else if (c_cross->parsed()) {
            const auto report = run_crosscheck(cc);
            write_text(cc_output, report_json(report), out);
            if (!report.pass) {
                for (const auto& c : report.checks)
                    if (!c.pass)
                        err << "FAIL " << c.name << ": " << c.max_residual << " > " << c.tolerance << "\n";
                return kExitValidation;
            }
        } else if (c_pv->parsed()) {
            emit(pv.common, cmd_painleve(pv), out);
        } else if (c_lg->parsed()) {
            emit(lg.common, cmd_laguerre(lg), out);
        } else {
            emit(lm.common, cmd_limits(limits_which, lm), out);
        }
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace monoword::cli
