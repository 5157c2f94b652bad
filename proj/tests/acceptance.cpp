// Acceptance suite: one PASS/FAIL line per criterion, per-instance data under the report directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logpot/cli.hpp"
#include "logpot/config_io.hpp"
#include "logpot/conjecture.hpp"
#include "logpot/convex.hpp"
#include "logpot/dbs_relations.hpp"
#include "logpot/error.hpp"
#include "logpot/geometry.hpp"
#include "logpot/hausdorff.hpp"
#include "logpot/infinite.hpp"
#include "logpot/majorization.hpp"
#include "logpot/potential.hpp"
#include "support/random_configs.hpp"

using namespace logpot;
using logpot::testing::random_charges;
using logpot::testing::random_collinear_config;
using logpot::testing::random_config;
using logpot::testing::random_in_disk;
using logpot::testing::random_real_config;
using logpot::testing::regular_polygon;
namespace fs = std::filesystem;

namespace {

fs::path g_dir;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::ofstream report(const std::string& name)
{
    std::ofstream f(g_dir / name);
    f.precision(17);
    return f;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::vector<ChargeConfiguration> sweep_configs()
{
    static const std::vector<ChargeConfiguration> configs = [] {
        std::mt19937_64 rng(20240501);
        std::vector<ChargeConfiguration> out;
        for (std::size_t i = 0; i < 500; ++i) out.push_back(random_config(rng, 2 + i % 9));
        return out;
    }();
    return configs;
}

double max_abs_point(const ChargeConfiguration& c)
{
    double r = 1.0;
    for (cplx z : c.points()) r = std::max(r, std::abs(z));
    return r;
}

// ---- independent equilibrium oracle: long double Weierstrass iteration on the expanded polynomial
using lcplx = std::complex<long double>;

std::vector<lcplx> expanded_polynomial(const ChargeConfiguration& c)
{
    const std::size_t n = c.size();
    std::vector<lcplx> p(n, 0.0L);  // ascending, degree n-1
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<lcplx> q{1.0L};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<lcplx> r(q.size() + 1, 0.0L);
            const lcplx zj(c.points()[j].real(), c.points()[j].imag());
            for (std::size_t d = 0; d < q.size(); ++d) {
                r[d + 1] += q[d];
                r[d] -= zj * q[d];
            }
            q = r;
        }
        for (std::size_t d = 0; d < q.size(); ++d) p[d] += static_cast<long double>(c.charges()[i]) * q[d];
    }
    return p;
}

lcplx product_sum(const ChargeConfiguration& c, lcplx x)
{
    lcplx s = 0.0L;
    for (std::size_t i = 0; i < c.size(); ++i) {
        lcplx t = c.charges()[i];
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != i) t *= x - lcplx(c.points()[j].real(), c.points()[j].imag());
        s += t;
    }
    return s;
}

std::vector<cplx> oracle_roots(const ChargeConfiguration& c)
{
    auto p = expanded_polynomial(c);
    const std::size_t deg = p.size() - 1;
    if (deg == 0) return {};
    for (auto& v : p) v /= p[deg];
    std::vector<lcplx> x(deg);
    for (std::size_t i = 0; i < deg; ++i)
        x[i] = std::polar(1.2L, 2.0L * std::numbers::pi_v<long double> * (i + 0.25L) / deg);
    auto eval = [&](lcplx z) {
        lcplx v = 0.0L;
        for (std::size_t d = deg + 1; d-- > 0;) v = v * z + p[d];
        return v;
    };
    for (int it = 0; it < 5000; ++it) {
        long double change = 0.0L;
        for (std::size_t i = 0; i < deg; ++i) {
            lcplx den = 1.0L;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) den *= x[i] - x[j];
            const lcplx step = eval(x[i]) / den;
            x[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-24L) break;
    }
    std::vector<cplx> out;
    for (auto v : x) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return out;
}

// greedy closest-pair matching; an upper bound on the optimal bottleneck matching distance
double matching_distance(std::vector<cplx> a, std::vector<cplx> b)
{
    double worst = 0.0;
    while (!a.empty()) {
        std::size_t bi = 0, bj = 0;
        double best = INFINITY;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (std::abs(a[i] - b[j]) < best) {
                    best = std::abs(a[i] - b[j]);
                    bi = i;
                    bj = j;
                }
        worst = std::max(worst, best);
        a.erase(a.begin() + static_cast<long>(bi));
        b.erase(b.begin() + static_cast<long>(bj));
    }
    return worst;
}

// ---- criteria

Outcome equilibria()
{
    auto f = report("01_equilibria.csv");
    f << "config,n,matching_distance,max_residual,oracle_residual\n";
    double worst_match = 0.0, worst_res = 0.0, worst_oracle = 0.0;
    const auto configs = sweep_configs();
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto& cfg = configs[c];
        const auto eq = solve_equilibria(cfg);
        const double match = matching_distance(eq.points, oracle_roots(cfg));
        double oracle = 0.0;
        for (cplx w : eq.points) {
            const lcplx x(w.real(), w.imag());
            oracle = std::max(oracle, static_cast<double>(std::abs(product_sum(cfg, x)) /
                                                          (1.0L + std::pow(std::abs(x), cfg.size() - 1.0L))));
        }
        worst_match = std::max(worst_match, match);
        worst_res = std::max(worst_res, eq.max_residual());
        worst_oracle = std::max(worst_oracle, oracle);
        f << c << ',' << cfg.size() << ',' << match << ',' << eq.max_residual() << ',' << oracle << '\n';
    }
    return {worst_match < 1e-7 && worst_res < 1e-8 && worst_oracle < 1e-8,
            "500 configs; matching " + fmt(worst_match) + " (<1e-7), residual " + fmt(worst_res) + ", oracle residual " +
                fmt(worst_oracle) + " (<1e-8)"};
}

Outcome first_order()
{
    auto f = report("02_first_order.csv");
    f << "config,n,certificate_residual,lp_feasible,lp_iterations\n";
    double worst = 0.0;
    std::size_t infeasible = 0;
    const auto configs = sweep_configs();
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto& cfg = configs[c];
        const auto cert = construct_first_order(cfg);
        const auto sv = symmetric_vectors(cfg, cert.equilibria, 1, 1);
        const auto lp = check_weighted_majorization(sv.w_tuple(), sv.z_tuple());
        worst = std::max({worst, cert.residuals.max(), -cert.residuals.min_entry});
        infeasible += !lp.feasible;
        f << c << ',' << cfg.size() << ',' << cert.residuals.max() << ',' << lp.feasible << ',' << lp.lp_iterations
          << '\n';
    }
    return {worst < 1e-8 && infeasible == 0,
            "500 configs; worst residual " + fmt(worst) + " (<1e-8); LP infeasible on " + std::to_string(infeasible)};
}

Outcome hierarchy()
{
    auto f = report("03_hierarchy.csv");
    f << "config,n,k,m,residual,transform_residual,newton_residual_scaled\n";
    std::mt19937_64 rng(31);
    double worst_res = 0.0, worst_tr = 0.0, worst_newton = 0.0;
    std::size_t checks = 0;
    for (std::size_t c = 0; c < 72; ++c) {
        const auto cfg = random_config(rng, 2 + c % 9);
        const std::size_t n = cfg.size();
        const double zmax = max_abs_point(cfg);
        for (std::size_t k = 1; k < n; ++k) {
            if (binomial(n, k) > kMaxCompoundDim) continue;
            const auto cert = construct_hierarchy(cfg, k);
            const double newton =
                check_newton_identities(cfg, cert.equilibria, k).residual / std::pow(zmax, static_cast<double>(k));
            worst_tr = std::max(worst_tr, cert.transform_residual);
            worst_newton = std::max(worst_newton, newton);
            for (std::size_t m = 1; m <= k; ++m) {
                const auto sv = symmetric_vectors(cfg, cert.equilibria, k, m);
                const auto res = verify_certificate(cert.r, sv.w_tuple(), sv.z_tuple());
                const double r = std::max(res.max(), -res.min_entry) / std::pow(zmax, static_cast<double>(m));
                worst_res = std::max(worst_res, r);
                ++checks;
                f << c << ',' << n << ',' << k << ',' << m << ',' << r << ',' << cert.transform_residual << ','
                  << newton << '\n';
            }
        }
    }
    return {worst_res < 1e-8 && worst_tr < 1e-8 && worst_newton < 1e-8,
            std::to_string(checks) + " (k, m) certificates on 72 configs n = 2..10; residual " + fmt(worst_res) +
                ", 20 transforms " + fmt(worst_tr) + ", identities " + fmt(worst_newton) + " (<1e-8)"};
}

Outcome uniqueness()
{
    auto f = report("04_uniqueness.csv");
    f << "instance,n,moved,identity_residual,lp_level1_feasible\n";
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::size_t false_passes = 0, lp_rejects = 0;
    double weakest = INFINITY;
    for (std::size_t i = 0; i < 100; ++i) {
        const auto cfg = random_config(rng, 3 + i % 8);
        auto w = solve_equilibria(cfg).points;
        const std::size_t j = rng() % w.size();
        w[j] += std::polar(1e-3 * cfg.diameter(), ang(rng));
        double worst = 0.0;
        for (std::size_t k = 1; k < cfg.size(); ++k)
            worst = std::max(worst, check_newton_identities(cfg, w, k).residual);
        const auto sv = symmetric_vectors(cfg, w, 1, 1);
        const bool lp = check_weighted_majorization(sv.w_tuple(), sv.z_tuple()).feasible;
        lp_rejects += !lp;
        const bool detected = worst > 1e-6 || !lp;
        false_passes += !detected;
        weakest = std::min(weakest, worst);
        f << i << ',' << cfg.size() << ',' << j << ',' << worst << ',' << lp << '\n';
    }
    return {false_passes == 0, "100 perturbed instances; false passes " + std::to_string(false_passes) +
                                   "; smallest identity residual " + fmt(weakest) + " (>1e-6); LP rejections " +
                                   std::to_string(lp_rejects)};
}

Outcome moments()
{
    auto f = report("05_moments.csv");
    f << "config,n,k,m,alpha,margin,averaged_margin\n";
    double worst = INFINITY;
    std::size_t checks = 0;
    bool ok = true;
    const auto configs = sweep_configs();
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto& cfg = configs[c];
        const auto w = solve_equilibria(cfg).points;
        for (std::size_t k = 1; k < cfg.size(); ++k)
            for (std::size_t m = 1; m <= k; ++m)
                for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
                    const auto mom = moment_inequalities(cfg, w, k, m, alpha);
                    const auto avg = moment_inequalities_averaged(cfg, w, k, m, alpha);
                    ok = ok && mom.margin >= -1e-9 * std::max(1.0, mom.rhs) &&
                         avg.margin >= -1e-9 * std::max(1.0, avg.rhs);
                    worst = std::min({worst, mom.margin, avg.margin});
                    checks += 2;
                    if (c % 10 == 0)
                        f << c << ',' << cfg.size() << ',' << k << ',' << m << ',' << alpha << ',' << mom.margin << ','
                          << avg.margin << '\n';
                }
    }
    return {ok, std::to_string(checks) + " margins over k, m and alpha in {1, 1.5, 2, 3}; smallest " + fmt(worst) +
                    " (>= -1e-9)"};
}

Outcome hausdorff()
{
    auto f = report("06_hausdorff.csv");
    f << "family,instance,n,sigma,h,margin\n";
    double worst_ext = INFINITY, worst_col = INFINITY, worst_sharp = 0.0;
    const auto configs = sweep_configs();
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto r = check_extended_bound(configs[c]);
        worst_ext = std::min(worst_ext, r.margin);
        f << "extended," << c << ',' << configs[c].size() << ',' << r.sigma << ',' << r.h_we_z << ',' << r.margin
          << '\n';
    }
    std::mt19937_64 rng(61);
    for (std::size_t c = 0; c < 500; ++c) {
        const auto cfg = random_collinear_config(rng, 2 + c % 9);
        const auto r = check_collinear_bound(cfg);
        worst_col = std::min(worst_col, r.margin);
        f << "collinear," << c << ',' << cfg.size() << ',' << r.sigma << ',' << r.h_sym << ',' << r.margin << '\n';
    }
    for (std::size_t n = 3; n <= 10; ++n) {
        const auto r = check_extended_bound(regular_polygon(n));
        worst_sharp = std::max(worst_sharp, std::abs(r.sigma - r.h_we_z));
        f << "polygon," << n << ',' << n << ',' << r.sigma << ',' << r.h_we_z << ',' << r.margin << '\n';
    }
    const auto pair = check_collinear_bound(ChargeConfiguration::create({-1.0, 1.0}, {0.5, 0.5}));
    worst_sharp = std::max(worst_sharp, std::abs(pair.sigma - pair.h_sym));
    f << "pair,0,2," << pair.sigma << ',' << pair.h_sym << ',' << pair.margin << '\n';
    return {worst_ext >= -1e-9 && worst_col >= -1e-9 && worst_sharp < 1e-9,
            "extended margin " + fmt(worst_ext) + ", collinear margin " + fmt(worst_col) +
                " (>= -1e-9); sharpness gap " + fmt(worst_sharp) + " (<1e-9)"};
}

Outcome sherman()
{
    auto f = report("07_sherman.csv");
    f << "instance,construction,m,n,verdict,residual_or_violation\n";
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::size_t mismatches = 0, weak_witnesses = 0, feasible_cases = 0;
    for (std::size_t i = 0; i < 500; ++i) {
        const std::size_t n = 2 + rng() % 7;
        std::vector<cplx> y(n);
        for (auto& p : y) p = random_in_disk(rng);
        std::vector<cplx> x;
        std::vector<double> a, b;
        const int kind = static_cast<int>(i % 4);  // 0, 1: mixing; 2: dilation; 3: point outside the hull
        if (kind == 2) {
            b = random_charges(rng, n);
            a = b;
            cplx c = 0.0;
            for (std::size_t j = 0; j < n; ++j) c += b[j] * y[j];
            const double s = 1.1 + u(rng);
            for (cplx p : y) x.push_back(c + s * (p - c));
        } else {
            const std::size_t m = 2 + rng() % 7;
            a = random_charges(rng, m);
            b.assign(n, 0.0);
            for (std::size_t r = 0; r < m; ++r) {
                std::vector<double> row(n);
                double s = 0.0;
                for (auto& v : row) s += (v = u(rng) + 1e-3);
                cplx xi = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    xi += row[j] / s * y[j];
                    b[j] += a[r] * row[j] / s;
                }
                x.push_back(xi);
            }
            if (kind == 3) x[0] = std::polar(1.5 + u(rng), 2.0 * std::numbers::pi * u(rng));
        }
        const bool truth = kind < 2;
        feasible_cases += truth;
        const auto res = check_weighted_majorization(WeightedTuple::planar(x, a, 1e-10), WeightedTuple::planar(y, b, 1e-10));
        double score = 0.0;
        if (res.feasible != truth) ++mismatches;
        if (res.feasible) {
            score = res.certificate->residuals.max();
            if (score > 1e-8) ++mismatches;
        } else {
            score = res.witness ? res.witness->violation : 0.0;
            if (!res.witness || !res.witness->verified || score <= 1e-8) ++weak_witnesses;
        }
        f << i << ',' << (kind < 2 ? "mixing" : kind == 2 ? "dilation" : "outside") << ',' << x.size() << ',' << n
          << ',' << (res.feasible ? "Feasible" : "Infeasible") << ',' << score << '\n';
    }
    return {mismatches == 0 && weak_witnesses == 0,
            "500 pairs (" + std::to_string(feasible_cases) + " feasible by construction); verdict mismatches " +
                std::to_string(mismatches) + ", unverified witnesses " + std::to_string(weak_witnesses)};
}

Outcome interlacing()
{
    auto f = report("08_interlacing.csv");
    f << "source,n,interlaced,min_gap,column_residual\n";
    std::mt19937_64 rng(81);
    std::size_t failures = 0;
    double worst_col = 0.0;
    auto check = [&](const std::string& source, const ChargeConfiguration& cfg) {
        const auto il = interlacing_check(cfg);
        const auto cert = real_line_certificate(cfg);
        failures += !(il.interlaced && il.min_gap > 0.0);
        worst_col = std::max(worst_col, cert.column_residual);
        f << source << ',' << cfg.size() << ',' << il.interlaced << ',' << il.min_gap << ',' << cert.column_residual
          << '\n';
    };
    for (std::size_t i = 0; i < 500; ++i) check("random", random_real_config(rng, 2 + i % 9));
    for (std::size_t n : {4, 8, 16, 32}) check("geometric-0.75", truncate(SequenceFamily::geometric_real(1.0, 0.75), n));
    for (std::size_t n : {4, 8, 16}) check("geometric-0.5", truncate(SequenceFamily::geometric_real(1.0, 0.5), n));
    return {failures == 0 && worst_col < 1e-8,
            "500 random + geometric N in {4, 8, 16, 32}; non-interlaced " + std::to_string(failures) +
                "; column residual " + fmt(worst_col) + " (<1e-8)"};
}

Outcome battery()
{
    auto f = report("09_battery.csv");
    f << "family,N,lambda_re,lambda_im,mu_re,mu_im,margin\n";
    std::mt19937_64 rng(91);
    double worst = INFINITY;
    std::size_t checks = 0;
    const std::vector<std::pair<std::string, SequenceFamily>> families{
        {"spiral-0.75-1", SequenceFamily::geometric_spiral(1.0, 0.75, 1.0)},
        {"spiral-0.75-3", SequenceFamily::geometric_spiral(1.0, 0.75, 3.0)},
        {"spiral-0.6-0.5", SequenceFamily::geometric_spiral(2.0, 0.6, 0.5)},
    };
    for (const auto& [name, fam] : families)
        for (std::size_t n : {4, 8, 16, 32}) {
            const auto cfg = truncate(fam, n);
            const auto w = solve_equilibria(cfg).points;
            for (int t = 0; t < 50; ++t) {
                const cplx lambda = random_in_disk(rng, 2.0), mu = random_in_disk(rng);
                const auto r = nonnegative_convex_margin(cfg, w, lambda, mu);
                const double scale = std::pow(std::max(1.0, std::abs(lambda) * max_abs_point(cfg) + std::abs(mu)), 3.0);
                worst = std::min(worst, r.worst_margin / scale);
                ++checks;
                f << name << ',' << n << ',' << lambda.real() << ',' << lambda.imag() << ',' << mu.real() << ','
                  << mu.imag() << ',' << r.worst_margin << '\n';
            }
        }
    return {worst >= -1e-9, std::to_string(checks) + " truncations x (lambda, mu); smallest scaled margin " +
                                fmt(worst) + " (>= -1e-9)"};
}

Outcome m_matrix()
{
    auto f = report("10_m_matrix.csv");
    f << "instance,m,norm,residual\n";
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) {
        const std::size_t m = 1 + i % 8;
        std::vector<double> x(m);
        double norm2 = 0.0;
        for (auto& v : x) norm2 += (v = u(rng) + 1e-9) * v;
        const double target = 0.999 * u(rng) + 1e-3;
        const double s = target / std::sqrt(norm2);
        for (auto& v : x) v = std::min(v * s, 1.0 - 1e-12);
        const auto r = m_matrix_identity(x);
        worst = std::max(worst, r.residual);
        f << i << ',' << m << ',' << target << ',' << r.residual << '\n';
    }
    return {worst < 1e-12, "1000 admissible x, m = 1..8; residual " + fmt(worst) + " (<1e-12)"};
}

double inertia_closed_form(const std::vector<cplx>& v, const InertiaSpec& s)
{
    const std::size_t k = v.size();
    auto vec = [&](cplx x) {
        return std::array<double, 3>{x.real() - s.point[0], x.imag() - s.point[1], -s.point[2]};
    };
    double e = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto p = vec(v[i]), q = vec(v[j]);
            double dot = 0.0, pu = 0.0, qu = 0.0;
            for (int c = 0; c < 3; ++c) {
                dot += p[c] * q[c];
                pu += p[c] * s.direction[c];
                qu += q[c] * s.direction[c];
            }
            e += (i == j ? 2.0 : 1.0) / static_cast<double>(k * (k + 1)) * (dot - pu * qu);
        }
    return e;
}

Outcome conjecture_lab()
{
    std::mt19937_64 rng(111);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    // proven case t = (1, ..., 1)
    auto f = report("11_dbs_unit_t.csv");
    f << "trial,n,k,m,function,lhs,rhs,margin\n";
    std::size_t flagged = 0;
    double worst = INFINITY;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const auto cfg = random_config(rng, 3 + trial % 5);
        const auto w = solve_equilibria(cfg).points;
        const std::size_t k = 1 + rng() % std::min<std::size_t>(cfg.size() - 1, 4);
        const std::size_t m = 1 + rng() % k;
        BatteryParameters bp;
        bp.grid = 3;
        bp.angles = 8;
        const auto funcs = planar_battery(symmetric_vectors(cfg, w, k, m).z_vec, bp);
        const auto& phi = funcs[rng() % funcs.size()];
        const std::vector<cplx> t(k, 1.0);
        const auto h = dbs_hierarchy_trial(cfg, w, k, m, t, phi);
        flagged += h.margin < -1e-9 * std::max(1.0, std::abs(h.rhs));
        worst = std::min(worst, h.margin);
        f << trial << ',' << cfg.size() << ',' << k << ',' << m << ",\"" << phi.describe() << "\"," << h.lhs << ','
          << h.rhs << ',' << h.margin << '\n';
    }

    // alpha = 2 inertia moment against the exact quadratic form
    auto g = report("11_inertia_closed_form.csv");
    g << "polygon,k,mc_mean,mc_se,closed_form,z_score\n";
    std::size_t outside = 0;
    double worst_z = 0.0;
    for (std::size_t p = 0; p < 50; ++p) {
        std::vector<cplx> v(3 + p % 6);
        for (auto& x : v) x = random_in_disk(rng);
        InertiaSpec s;
        s.alpha = 2.0;
        s.point = {u(rng) - 0.5, u(rng) - 0.5, u(rng) - 0.5};
        const double th = std::acos(2.0 * u(rng) - 1.0), ph = 2.0 * std::numbers::pi * u(rng);
        s.direction = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
        const auto mc = inertia_moment_mc(v, s, 100000, 1000 + p);
        const double exact = inertia_closed_form(v, s);
        const double z = std::abs(mc.mean - exact) / mc.se;
        outside += z > 4.0;
        worst_z = std::max(worst_z, z);
        g << p << ',' << v.size() << ',' << mc.mean << ',' << mc.se << ',' << exact << ',' << z << '\n';
    }

    // exploratory sweeps: reported, never judged
    auto h = report("11_sweep_inertia.csv");
    h << "config,k,alpha,lhs,lhs_se,rhs,rhs_se,margin,verdict\n";
    for (std::size_t c = 0; c < 6; ++c) {
        const auto cfg = random_config(rng, 6);
        const auto w = solve_equilibria(cfg).points;
        for (double alpha : {1.0, 2.0, 3.0}) {
            InertiaSpec s;
            s.alpha = alpha;
            const auto r = inertia_inequality_trial(cfg, w, 2, s, 20000, 7 + c);
            h << c << ",2," << alpha << ',' << r.lhs_estimate << ',' << r.lhs_se << ',' << r.rhs_estimate << ','
              << r.rhs_se << ',' << r.margin << ','
              << (r.verdict == TrialVerdict::Consistent ? "consistent" : "violation-candidate") << '\n';
        }
    }
    auto d = report("11_sweep_dbs_general_t.csv");
    d << "trial,n,k,m,margin\n";
    for (std::size_t trial = 0; trial < 200; ++trial) {
        const auto cfg = random_config(rng, 3 + trial % 4);
        const auto w = solve_equilibria(cfg).points;
        const std::size_t k = 1 + rng() % (cfg.size() - 1), m = 1 + rng() % k;
        std::vector<cplx> t(k);
        for (auto& x : t) x = random_in_disk(rng);
        const ConvexFunction phi{ConvexKind::Power, random_in_disk(rng), 0.0, 2.0};
        const auto r = dbs_hierarchy_trial(cfg, w, k, m, t, phi);
        d << trial << ',' << cfg.size() << ',' << k << ',' << m << ',' << r.margin << '\n';
    }
    auto l = report("11_sweep_zero_counts.csv");
    l << "family,N,count_in_region,max_displacement\n";
    const std::vector<std::size_t> levels{4, 8, 16, 32};
    for (const auto& [fam, region] : std::vector<std::pair<SequenceFamily, Region>>{
             {SequenceFamily::geometric_spiral(1.0, 0.75, 2.0), Region::disk(0.0, 1.0)},
             {SequenceFamily::harmonic_unbounded(), Region::disk(0.0, 4.0)},
             {SequenceFamily::complex_charge(1.0, 0.75, 1.0), Region::disk(0.0, 1.0)}}) {
        const auto ladder = zero_count_explorer(fam, levels, region);
        for (const auto& lv : ladder.levels)
            l << fam.name << ',' << lv.n << ',' << lv.count_in_region << ',' << lv.max_displacement << '\n';
    }

    return {flagged == 0 && outside == 0,
            "unit-t flags " + std::to_string(flagged) + "/1000 (smallest margin " + fmt(worst) +
                "); alpha = 2 MC outside 4 SE on " + std::to_string(outside) + "/50 (max z " + fmt(worst_z) +
                "); sweeps reported, not judged"};
}

Outcome determinism()
{
    const fs::path in = g_dir / "12_inputs";
    fs::create_directories(in);
    auto put = [&](const std::string& name, const std::string& text) {
        std::ofstream(in / name) << text;
        return (in / name).string();
    };
    const auto pent = put("pentagon.txt", "finite\n0.9 0.1 0.3\n-0.2 0.7 0.1\n-0.6 -0.3 0.25\n0.3 -0.8 0.2\n0.1 0.05 0.15\n");
    const auto line = put("line.txt", "finite\n-1 0 1\n0.2 0 2\n0.7 0 1\n1.5 0 0.5\n");
    const auto fam = put("spiral.txt", "family geometric-spiral base=0.75 twist=2 region=disk:0,0,1\n");
    const std::vector<std::vector<std::string>> runs{
        {"solve", pent},
        {"majorize", pent},
        {"majorize", pent, "--swap"},
        {"hierarchy", pent, "--k", "all"},
        {"hausdorff", line},
        {"ladder", fam, "--levels", "4,8,16,32"},
        {"conjecture", pent, "--trials", "20000", "--seed", "99"},
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    std::size_t files = 0, differing = 0, failed = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        std::vector<fs::path> dirs;
        for (const char* threads : {"0", "1", "3"}) {
            auto args = runs[r];
            const fs::path dir = g_dir / "12_runs" / (std::to_string(r) + "_" + args[0] + "_t" + threads);
            fs::remove_all(dir);
            args.insert(args.begin(), "logpot");
            args.insert(args.end(), {"--threads", threads, "--out", dir.string()});
            std::vector<const char*> argv;
            for (auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            failed += cli_main(static_cast<int>(argv.size()), argv.data(), out, err) != kExitOk;
            dirs.push_back(dir);
        }
        for (const auto& e : fs::directory_iterator(dirs[0])) {
            ++files;
            const auto ref = slurp(e.path());
            for (std::size_t i = 1; i < dirs.size(); ++i) differing += slurp(dirs[i] / e.path().filename()) != ref;
        }
    }
    return {differing == 0 && failed == 0 && files > 0,
            std::to_string(runs.size()) + " invocations x 3 thread caps, " + std::to_string(files) +
                " report files; differing " + std::to_string(differing) + ", nonzero exits " + std::to_string(failed)};
}

} // namespace

int main(int argc, char** argv)
{
    g_dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_reports");
    fs::create_directories(g_dir);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"equilibrium correctness", equilibria},
        {"first-order certificate", first_order},
        {"hierarchy certificates", hierarchy},
        {"uniqueness probe", uniqueness},
        {"moment margins", moments},
        {"hausdorff bounds", hausdorff},
        {"sherman LP soundness", sherman},
        {"real interlacing", interlacing},
        {"nonnegative convex battery", battery},
        {"m-matrix identity", m_matrix},
        {"conjecture lab soundness", conjecture_lab},
        {"determinism", determinism},
    };
    std::ofstream summary(g_dir / "summary.txt");
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char line[1024];
        std::snprintf(line, sizeof line, "[%s] %2zu %-28s %s (%.1f s)", o.pass ? "PASS" : "FAIL", i + 1,
                      criteria[i].first.c_str(), o.detail.c_str(), secs);
        std::cout << line << std::endl;
        summary << line << '\n';
        failures += !o.pass;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
