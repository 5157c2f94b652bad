#include "logpot/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "logpot/config_io.hpp"
#include "logpot/conjecture.hpp"
#include "logpot/dbs_relations.hpp"
#include "logpot/error.hpp"
#include "logpot/geometry.hpp"
#include "logpot/hausdorff.hpp"
#include "logpot/infinite.hpp"
#include "logpot/majorization.hpp"
#include "logpot/potential.hpp"

namespace logpot {

namespace {

inline constexpr std::size_t kMaxHierarchyPoints = 12;

/// Named report files, written in insertion order.
class Report {
public:
    std::ostringstream& file(const std::string& name)
    {
        for (auto& [n, s] : files_)
            if (n == name) return *s;
        files_.emplace_back(name, std::make_unique<std::ostringstream>());
        return *files_.back().second;
    }

    void kv(const std::string& key, const std::string& value) { file("summary.txt") << key << '=' << value << '\n'; }
    void kv(const std::string& key, double value) { kv(key, format_real(value)); }
    void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }

    void write(const std::string& dir, std::ostream& out) const
    {
        if (dir.empty()) {
            for (const auto& [name, s] : files_) out << "# " << name << '\n' << s->str();
            return;
        }
        std::filesystem::create_directories(dir);
        for (const auto& [name, s] : files_) {
            std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
            if (!f) throw InputError("cannot write " + (std::filesystem::path(dir) / name).string());
            f << s->str();
        }
    }

private:
    std::vector<std::pair<std::string, std::unique_ptr<std::ostringstream>>> files_;
};

ParsedConfig load(const RunSpec& spec)
{
    if (spec.input_path.empty()) throw InputError("no input file given");
    std::ifstream f(spec.input_path, std::ios::binary);
    if (!f) throw InputError("cannot open input file '" + spec.input_path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), spec.merge_coincident ? CoincidentPolicy::Merge : CoincidentPolicy::Reject);
}

ChargeConfiguration finite_of(const ParsedConfig& p)
{
    if (p.kind == ParsedConfig::Kind::Finite) return normalize(*p.finite);
    if (p.kind == ParsedConfig::Kind::Family) {
        if (!p.family_n) throw InputError("family input needs n=<count> for this subcommand");
        return truncate(*p.family, *p.family_n, true);
    }
    throw InputError("this subcommand needs a 'finite' or 'family' configuration");
}

std::string csv_complex(cplx z) { return format_real(z.real()) + ',' + format_real(z.imag()); }

std::vector<std::size_t> select_levels(const std::string& k, std::size_t n)
{
    std::vector<std::size_t> out;
    if (k == "all") {
        for (std::size_t i = 1; i < n; ++i) out.push_back(i);
        return out;
    }
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(k.data(), k.data() + k.size(), v);
    if (ec != std::errc() || p != k.data() + k.size() || v < 1 || v + 1 > n)
        throw InputError("--k must be 'all' or an integer in 1.." + std::to_string(n - 1));
    out.push_back(v);
    return out;
}

void diagnostics(const ParsedConfig& p, Report& rep)
{
    for (const auto& d : p.diagnostics) rep.kv("note", d);
}

int cmd_solve(const RunSpec& spec, const ParsedConfig& p, Report& rep)
{
    const auto cfg = finite_of(p);
    const auto eq = solve_equilibria(cfg, SolveOptions{spec.tol});
    auto& csv = rep.file("equilibria.csv");
    csv << "re,im,residual\n";
    for (std::size_t j = 0; j < eq.points.size(); ++j)
        csv << csv_complex(eq.points[j]) << ',' << format_real(eq.residuals[j]) << '\n';
    const cplx zeta = barycenter(cfg);
    rep.kv("n", cfg.size());
    rep.kv("equilibria", eq.points.size());
    rep.kv("barycenter_re", zeta.real());
    rep.kv("barycenter_im", zeta.imag());
    rep.kv("sigma", weighted_std(cfg));
    rep.kv("max_residual", eq.max_residual());
    diagnostics(p, rep);
    return kExitOk;
}

int cmd_majorize(const RunSpec& spec, const ParsedConfig& p, Report& rep)
{
    std::optional<WeightedTuple> x, y;
    bool expect_dominated = false;
    if (p.kind == ParsedConfig::Kind::Tuples) {
        x = p.x;
        y = p.y;
    } else {
        const auto cfg = finite_of(p);
        if (cfg.size() < 2) throw InputError("majorize needs at least two charges");
        const auto sv = symmetric_vectors(cfg, solve_equilibria(cfg, SolveOptions{spec.tol}).points, 1, 1);
        x = sv.w_tuple();
        y = sv.z_tuple();
        expect_dominated = !spec.swap;
    }
    if (spec.swap) std::swap(x, y);
    if (x->dim() != 2 || y->dim() != 2) throw InputError("majorize needs planar tuples");

    MajorizationOptions opts;
    opts.certification_tol = spec.tol;
    const auto res = choquet_compare(*x, *y, opts);
    rep.kv("m", x->size());
    rep.kv("n", y->size());
    rep.kv("swapped", spec.swap);
    rep.kv("lp_iterations", res.lp.lp_iterations);
    rep.kv("lp_infeasibility", res.lp.lp_infeasibility);
    diagnostics(p, rep);
    if (res.verdict == ChoquetVerdict::Dominated) {
        const auto& c = *res.lp.certificate;
        rep.kv("verdict", std::string("Dominated"));
        rep.kv("row_residual", c.residuals.row);
        rep.kv("mix_residual", c.residuals.mix);
        rep.kv("weight_residual", c.residuals.weight);
        rep.kv("min_entry", c.residuals.min_entry);
        auto& csv = rep.file("certificate.csv");
        csv << "i,j,r\n";
        for (std::size_t i = 0; i < c.r.rows(); ++i)
            for (std::size_t j = 0; j < c.r.cols(); ++j)
                csv << i << ',' << j << ',' << format_real(c.r(i, j)) << '\n';
        if (!c.residuals.certifies(spec.tol)) return expect_dominated ? kExitCheckFailed : kExitNumerical;
        return kExitOk;
    }
    const auto& w = *res.lp.witness;
    rep.kv("verdict", std::string("NotDominated"));
    rep.kv("witness_lhs", w.lhs);
    rep.kv("witness_rhs", w.rhs);
    rep.kv("violation", w.violation);
    rep.kv("witness_verified", w.verified);
    if (res.battery) {
        rep.kv("battery_worst_margin", res.battery->worst_margin);
        rep.kv("battery_worst_function", res.battery->worst_function.describe());
    }
    auto& csv = rep.file("witness.csv");
    csv << "piece,offset,slope_re,slope_im\n";
    for (std::size_t i = 0; i < w.phi.offsets.size(); ++i)
        csv << i << ',' << format_real(w.phi.offsets[i]) << ',' << format_real(w.phi.slopes[i][0]) << ','
            << format_real(w.phi.slopes[i][1]) << '\n';
    if (!w.verified) return kExitNumerical;
    return expect_dominated ? kExitCheckFailed : kExitOk;
}

int cmd_hierarchy(const RunSpec& spec, const ParsedConfig& p, Report& rep)
{
    const auto cfg = finite_of(p);
    const std::size_t n = cfg.size();
    if (n < 2) throw InputError("hierarchy needs at least two charges");
    if (n > kMaxHierarchyPoints)
        throw InputError("hierarchy is capped at " + std::to_string(kMaxHierarchyPoints) + " charges");
    double zmax = 1.0;
    for (cplx z : cfg.points()) zmax = std::max(zmax, std::abs(z));

    auto& csv = rep.file("hierarchy.csv");
    csv << "k,m,rows,cols,row_residual,mix_residual,weight_residual,transform_residual,newton_residual,moment_margin\n";
    bool ok = true;
    double worst_res = 0.0, worst_margin = INFINITY, worst_newton = 0.0;
    std::string skipped;
    for (std::size_t k : select_levels(spec.k, n)) {
        if (binomial(n, k) > kMaxCompoundDim) {
            skipped += (skipped.empty() ? "" : ",") + std::to_string(k);
            continue;
        }
        const auto cert = construct_hierarchy(cfg, k);
        const auto newton = check_newton_identities(cfg, cert.equilibria, k);
        const double kscale = std::pow(zmax, static_cast<double>(k));
        ok = ok && newton.residual <= spec.tol * kscale && cert.transform_residual <= spec.tol;
        worst_newton = std::max(worst_newton, newton.residual / kscale);
        std::vector<std::size_t> orders;
        if (spec.m) {
            if (*spec.m < 1 || *spec.m > k) throw InputError("--m must lie in 1..k");
            orders.push_back(*spec.m);
        } else {
            for (std::size_t m = 1; m <= k; ++m) orders.push_back(m);
        }
        for (std::size_t m : orders) {
            const auto sv = symmetric_vectors(cfg, cert.equilibria, k, m);
            const auto res = verify_certificate(cert.r, sv.w_tuple(), sv.z_tuple());
            const auto mom = moment_inequalities(cfg, cert.equilibria, k, m, spec.alpha);
            const double mscale = std::pow(zmax, static_cast<double>(m));
            ok = ok && res.max() <= spec.tol * mscale && res.min_entry >= -1e-12 &&
                 mom.margin >= -1e-9 * std::max(1.0, mom.rhs);
            worst_res = std::max(worst_res, res.max() / mscale);
            worst_margin = std::min(worst_margin, mom.margin);
            csv << k << ',' << m << ',' << cert.r.rows() << ',' << cert.r.cols() << ',' << format_real(res.row) << ','
                << format_real(res.mix) << ',' << format_real(res.weight) << ',' << format_real(cert.transform_residual)
                << ',' << format_real(newton.residual) << ',' << format_real(mom.margin) << '\n';
        }
    }
    rep.kv("n", n);
    rep.kv("alpha", spec.alpha);
    rep.kv("skipped_levels", skipped.empty() ? std::string("none") : skipped);
    rep.kv("max_certificate_residual", worst_res);
    rep.kv("max_newton_residual", worst_newton);
    if (std::isfinite(worst_margin)) rep.kv("min_moment_margin", worst_margin);
    rep.kv("status", std::string(ok ? "ok" : "failed"));
    diagnostics(p, rep);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_hausdorff(const RunSpec& spec, const ParsedConfig& p, Report& rep)
{
    const auto cfg = finite_of(p);
    const auto eq = solve_equilibria(cfg, SolveOptions{spec.tol});
    const auto ext = check_extended_bound(cfg, eq.points);
    bool ok = ext.margin >= -1e-9 && ext.h_w_z <= ext.h_we_z + 1e-12;
    rep.kv("n", cfg.size());
    rep.kv("sigma", ext.sigma);
    rep.kv("h_w_z", ext.h_w_z);
    rep.kv("h_we_z", ext.h_we_z);
    rep.kv("extended_margin", ext.margin);
    const bool collinear = is_collinear(cfg.points(), 1e-10);
    rep.kv("collinear", collinear);
    if (collinear) {
        const auto col = check_collinear_bound(cfg, eq.points);
        rep.kv("h_sym", col.h_sym);
        rep.kv("collinear_margin", col.margin);
        ok = ok && col.margin >= -1e-9;
    }
    rep.kv("status", std::string(ok ? "ok" : "failed"));
    diagnostics(p, rep);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_ladder(const RunSpec& spec, const ParsedConfig& p, Report& rep)
{
    std::optional<SequenceFamily> fam;
    if (p.kind == ParsedConfig::Kind::Family) {
        fam = p.family;
    } else if (p.kind == ParsedConfig::Kind::Finite) {
        fam = SequenceFamily::user_list(p.finite->points(), p.finite->charges());
    } else {
        throw InputError("ladder needs a 'family' or 'finite' configuration");
    }
    std::vector<std::size_t> levels = spec.levels;
    if (levels.empty() && p.family_n) levels.push_back(*p.family_n);
    if (levels.empty()) throw InputError("ladder needs --levels or n=<count>");
    const Region region = p.region ? *p.region : Region::disk(0.0, fam->rho > 0.0 ? fam->rho : 1.0);
    const auto ladder = zero_count_explorer(*fam, levels, region);

    auto& csv = rep.file("trajectories.csv");
    csv << "n,index,re,im,trajectory,displacement,in_region\n";
    std::string counts;
    for (const auto& l : ladder.levels) {
        for (std::size_t j = 0; j < l.zeros.size(); ++j)
            csv << l.n << ',' << j << ',' << csv_complex(l.zeros[j]) << ',' << l.trajectory[j] << ','
                << (std::isnan(l.displacement[j]) ? std::string("nan") : format_real(l.displacement[j])) << ','
                << (region.contains(l.zeros[j]) ? 1 : 0) << '\n';
        counts += (counts.empty() ? "" : ",") + std::to_string(l.n) + ":" + std::to_string(l.count_in_region);
    }
    rep.kv("family", fam->name);
    rep.kv("levels", ladder.levels.size());
    rep.kv("counts", counts);
    rep.kv("trajectories", ladder.trajectories);
    rep.kv("counts_nondecreasing", ladder.counts_nondecreasing);
    rep.kv("displacement_nonincreasing", ladder.displacement_nonincreasing);
    for (const auto& l : ladder.levels) rep.kv("max_displacement_" + std::to_string(l.n), l.max_displacement);
    diagnostics(p, rep);
    return kExitOk;
}

int cmd_conjecture(const RunSpec& spec, const ParsedConfig& p, Report& rep)
{
    const auto cfg = finite_of(p);
    const std::size_t n = cfg.size();
    if (n < 2) throw InputError("conjecture needs at least two charges");
    const auto w = solve_equilibria(cfg, SolveOptions{spec.tol}).points;
    InertiaSpec is;
    is.alpha = spec.alpha;

    auto& csv = rep.file("conjecture.csv");
    csv << "k,alpha,trials,lhs,lhs_se,rhs,rhs_se,margin,verdict,confirmed\n";
    std::size_t candidates = 0, confirmed = 0;
    for (std::size_t k : select_levels(spec.k, n)) {
        if (binomial(n, k) > 1000) continue;
        const auto r = inertia_inequality_trial(cfg, w, k, is, spec.trials, spec.seed + k);
        bool still = false;
        if (r.verdict == TrialVerdict::ViolationCandidate) {
            ++candidates;
            const auto again = inertia_inequality_trial(cfg, w, k, is, 4 * spec.trials, spec.seed + k + 0x10000);
            still = again.verdict == TrialVerdict::ViolationCandidate;
            confirmed += still;
        }
        csv << k << ',' << format_real(spec.alpha) << ',' << r.trials << ',' << format_real(r.lhs_estimate) << ','
            << format_real(r.lhs_se) << ',' << format_real(r.rhs_estimate) << ',' << format_real(r.rhs_se) << ','
            << format_real(r.margin) << ','
            << (r.verdict == TrialVerdict::Consistent ? "consistent" : "violation-candidate") << ','
            << (still ? "yes" : "no") << '\n';
    }

    // symmetrized hierarchy with random t against a small battery
    auto& dcsv = rep.file("dbs_hierarchy.csv");
    dcsv << "k,m,trial,lhs,rhs,margin,function\n";
    std::size_t dbs_candidates = 0;
    double dbs_min = INFINITY;
    BatteryParameters params;
    params.grid = 3;
    params.angles = 8;
    params.alphas = {1.0, 2.0};
    for (std::size_t k : select_levels(spec.k, n)) {
        double fact = 1.0;
        for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
        if (fact * static_cast<double>(binomial(n, k)) > 1e5) continue;
        const std::size_t m = spec.m ? *spec.m : k;
        if (m < 1 || m > k) throw InputError("--m must lie in 1..k");
        CounterRng rng(spec.seed, 0x100000 + k);
        const auto battery = planar_battery(symmetric_vectors(cfg, w, k, m).z_vec, params);
        for (std::size_t trial = 0; trial < 8; ++trial) {
            std::vector<cplx> t(k);
            for (auto& v : t) v = std::polar(std::sqrt(rng.uniform()), 2.0 * M_PI * rng.uniform());
            HierarchyTrial worst{0.0, 0.0, INFINITY};
            std::string name;
            for (const auto& phi : battery) {
                const auto h = dbs_hierarchy_trial(cfg, w, k, m, t, phi);
                if (h.margin < worst.margin) {
                    worst = h;
                    name = phi.describe();
                }
            }
            const bool cand = worst.margin < -1e-9 * std::max(1.0, std::abs(worst.rhs));
            dbs_candidates += cand;
            dbs_min = std::min(dbs_min, worst.margin);
            dcsv << k << ',' << m << ',' << trial << ',' << format_real(worst.lhs) << ',' << format_real(worst.rhs)
                 << ',' << format_real(worst.margin) << ",\"" << name << "\"\n";
        }
    }
    rep.kv("n", n);
    rep.kv("alpha", spec.alpha);
    rep.kv("trials", spec.trials);
    rep.kv("seed", std::to_string(spec.seed));
    rep.kv("violation_candidates", candidates);
    rep.kv("confirmed_candidates", confirmed);
    if (std::isfinite(dbs_min)) rep.kv("dbs_min_margin", dbs_min);
    rep.kv("dbs_violation_candidates", dbs_candidates);
    diagnostics(p, rep);
    return kExitOk;
}

} // namespace

int run(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    static const std::map<std::string, int (*)(const RunSpec&, const ParsedConfig&, Report&)> commands{
        {"solve", cmd_solve},         {"majorize", cmd_majorize}, {"hierarchy", cmd_hierarchy},
        {"hausdorff", cmd_hausdorff}, {"ladder", cmd_ladder},     {"conjecture", cmd_conjecture},
    };
    try {
        const auto it = commands.find(spec.subcommand);
        if (it == commands.end()) throw InputError("unknown subcommand '" + spec.subcommand + "'");
        if (!(spec.tol > 0.0)) throw InputError("--tol must be positive");
        if (spec.trials < 1) throw InputError("--trials must be positive");
        if (spec.threads < 0) throw InputError("--threads must be nonnegative");
        if (spec.threads > 0) omp_set_num_threads(spec.threads);
        const auto parsed = load(spec);
        Report rep;
        const int code = it->second(spec, parsed, rep);
        rep.write(spec.output_path, out);
        if (code == kExitCheckFailed) err << "logpot: check failed (see report)\n";
        return code;
    } catch (const InputError& e) {
        err << "logpot: input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const NumericalError& e) {
        err << "logpot: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "logpot: input error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Equilibria of planar logarithmic potentials and their majorization certificates"};
    app.set_help_flag("-h,--help");
    RunSpec spec;
    app.add_option("subcommand", spec.subcommand, "solve | majorize | hierarchy | hausdorff | ladder | conjecture")
        ->required()
        ->check(CLI::IsMember({"solve", "majorize", "hierarchy", "hausdorff", "ladder", "conjecture"}));
    app.add_option("input", spec.input_path, "configuration file")->required();
    app.add_option("--tol", spec.tol, "certification / residual tolerance")->capture_default_str();
    app.add_option("--seed", spec.seed, "random seed")->capture_default_str();
    app.add_option("--trials", spec.trials, "Monte Carlo trials")->capture_default_str();
    app.add_option("--k", spec.k, "level, or 'all'")->capture_default_str();
    app.add_option("--m", spec.m, "symmetric-function order");
    app.add_option("--alpha", spec.alpha, "moment exponent")->capture_default_str();
    app.add_option("--levels", spec.levels, "truncation levels, comma separated")->delimiter(',');
    app.add_option("--out", spec.output_path, "report directory (default: stdout)");
    app.add_option("--threads", spec.threads, "OpenMP thread cap (0 = default)")->capture_default_str();
    app.add_flag("--merge-coincident", spec.merge_coincident, "merge coincident points instead of rejecting");
    app.add_flag("--swap", spec.swap, "majorize: swap the two sides");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "logpot: " << e.what() << '\n';
        return kExitInputError;
    }
    return run(spec, out, err);
}

} // namespace logpot
