// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "disklab/constructions.hpp"
#include "disklab/harmonic_measure.hpp"
#include "disklab/ideals.hpp"
#include "disklab/majorant.hpp"
#include "disklab/rng.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace disklab;
using testsupport::Poly;
using testsupport::random_blaschke;
using testsupport::random_point;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = false;
    std::string detail;
};

double max_deleted_bound(const ZeroSequence& seq) {
    BlaschkeProduct b{seq};
    double c0 = 0.0;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        c0 = std::max(c0, -b.deleted_log_product(n));
    }
    return c0;
}

// ---------------------------------------------------------------- criterion 1
Criterion criterion_single_hole() {
    Criterion c{1, "single-hole walk-on-spheres vs closed form (5x5 grid, 1e5 walks)", false, ""};
    auto start = std::chrono::steady_clock::now();
    const double rhos[5] = {0.25, 0.4, 0.55, 0.7, 0.85};
    const double deltas[5] = {0.02, 0.05, 0.1, 0.15, 0.2};
    const DiskPoint lambda = DiskPoint::xy(0.3, 0.2);
    double worst = 0.0;
    bool ok = true;
    for (double rho : rhos) {
        for (double delta : deltas) {
            DiskPoint z = mobius(lambda, DiskPoint::xy(rho, 0));
            WosOptions opt;
            opt.walks = 100000;
            opt.seed = 20240u + static_cast<std::uint64_t>(1000 * rho + 100 * delta);
            Estimate est = wos_estimate(
                HoleDomain::from_pseudo({PseudoDisk{lambda, std::log(delta)}}), z, opt);
            double exact = 1.0 - omega_single_hole(z, lambda, delta);
            double err = std::abs(est.mean - exact);
            double allow = std::max(3.0 * est.std_error, 0.01);
            worst = std::max(worst, err / allow);
            if (err > allow) ok = false;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) ok = false;
    c.pass = ok;
    c.detail = "worst error/allowance " + std::to_string(worst) + ", runtime " +
               std::to_string(secs) + " s (< 60 s)";
    return c;
}

// ---------------------------------------------------------------- criterion 2
Criterion criterion_condition_d_bounds() {
    Criterion c{2, "condition (d) quantitative bounds (>= 1/4 at 4H, >= 3/4 at 12H)", false, ""};
    ZeroSequence geo = geometric_sequence(10);
    double c0 = max_deleted_bound(geo);
    WosOptions opt;
    opt.walks = 20000;
    opt.seed = 7211;

    ConditionDReport four =
        condition_d_check(geo, BoundaryMeasure::uniform(4.0 * c0, 512), 0.5, opt);
    bool ok = four.ran && four.disks_disjoint;
    double min4 = 1.0, min12 = 1.0;
    for (const ConditionDEntry& e : four.entries) {
        min4 = std::min(min4, e.estimate.mean);
        if (e.estimate.mean < 0.25 - 3.0 * e.estimate.std_error) ok = false;
    }
    ConditionDReport twelve =
        condition_d_check(geo, BoundaryMeasure::uniform(12.0 * c0, 512), 0.5, opt);
    ok = ok && twelve.ran && twelve.disks_disjoint;
    for (const ConditionDEntry& e : twelve.entries) {
        min12 = std::min(min12, e.estimate.mean);
        if (e.estimate.mean < 0.75 - 3.0 * e.estimate.std_error) ok = false;
    }
    c.pass = ok;
    c.detail = "min omega at 4H: " + std::to_string(min4) + " (>= 0.25), at 12H: " +
               std::to_string(min12) + " (>= 0.75)";
    return c;
}

// ---------------------------------------------------------------- criterion 3
struct FamilyVerdict {
    bool bounded = false;
    std::string name;
};

FamilyVerdict check_family(const std::string& name, const ZeroSequence& seq, long walks) {
    FamilyVerdict v;
    v.name = name;
    FitOptions fopt;
    fopt.node_count = 512;

    MajorantFit a_full = check_interpolation(seq, fopt);
    MajorantFit a_half = check_interpolation(seq.truncated(std::max<std::size_t>(2, seq.size() / 2)),
                                   fopt);
    bool a_ok = a_full.status == FitStatus::optimal &&
                a_full.objective <= 10.0 * std::max(a_half.objective, 1e-12);

    SampleGrid grid = SampleGrid::whitney(6, 4);
    std::vector<DiskPoint> pts = grid.points;
    for (const Zero& z : seq.zeros()) pts.push_back(z.point);
    BlaschkeProduct b{seq};
    std::vector<std::pair<DiskPoint, double>> cons_b, cons_c;
    for (const DiskPoint& z : pts) {
        double sum = 0.0, nearest = 1e18;
        for (const Zero& zero : seq.zeros()) {
            double lr = log_pseudo_distance(z, zero.point);
            nearest = std::min(nearest, lr);
            if (lr != -std::numeric_limits<double>::infinity()) sum += lr;
        }
        cons_b.emplace_back(z, -(sum - (std::isfinite(nearest) ? nearest : 0.0)));
        double l1 = b.log_modulus(z);
        double l2 = std::log1p(-std::norm(z.value())) + b.log_derivative_modulus(z);
        double m = std::max(l1, l2);
        double ls = m + std::log((std::isfinite(l1) ? std::exp(l1 - m) : 0.0) +
                                 (std::isfinite(l2) ? std::exp(l2 - m) : 0.0));
        cons_c.emplace_back(z, -ls);
    }
    MajorantFit fit_b = fit_min_majorant(cons_b, fopt);
    MajorantFit fit_c = fit_min_majorant(cons_c, fopt);
    bool bc_ok = fit_b.status == FitStatus::optimal && fit_c.status == FitStatus::optimal;

    double c0 = max_deleted_bound(seq);
    WosOptions wopt;
    wopt.walks = walks;
    wopt.seed = 5150;
    ConditionDReport d =
        condition_d_check(seq, BoundaryMeasure::uniform(4.0 * c0, 512), 0.5, wopt);
    bool d_ok = d.ran && d.disks_disjoint &&
                d.min_outer >= 0.25 - 3.0 * d.max_std_error;

    v.bounded = a_ok && bc_ok && d_ok;
    return v;
}

Criterion criterion_consistency_suite() {
    Criterion c{3, "four-checker consistency for three interpolating families + divergence", false, ""};
    ZeroSequence geo = geometric_sequence(12);
    ZeroSequence rays = two_ray_sequence(8);

    // perturbed geometric via the stability construction, factor 1/4
    double c0 = max_deleted_bound(geo);
    BoundaryMeasure h = BoundaryMeasure::uniform(c0, 512);
    FitOptions fopt;
    fopt.node_count = 256;
    WosOptions wopt;
    wopt.walks = 2000;
    wopt.seed = 11;
    PerturbReport perturbed = perturb_and_recheck(geo, h, 0.25, 424242, fopt, wopt);

    bool all = true;
    std::string detail;
    for (const FamilyVerdict& v :
         {check_family("geometric", geo, 4000), check_family("two-ray", rays, 4000),
          check_family("perturbed", perturbed.perturbed, 4000)}) {
        all = all && v.bounded;
        detail += v.name + (v.bounded ? ": bounded  " : ": NOT bounded  ");
    }

    // super-close pairs: the (a) mass blows up by >= 100x from 6 to 12
    FitOptions pair_opt;
    pair_opt.node_count = 512;
    pair_opt.mass_cap = 1e7;
    double mass6 = check_interpolation(close_pair_sequence(6), pair_opt).objective;
    ZeroSequence pair12 = close_pair_sequence(12);
    MajorantFit fit12 = check_interpolation(pair12, pair_opt);
    double mass12 = fit12.objective;
    double ratio = mass12 / std::max(mass6, 1e-12);
    bool diverges = ratio >= 100.0;
    // kernel-bound oracle: P(z, .) <= 2/(1-|z|) forces the mass floor
    double floor12 = 0.0;
    for (const FitConstraint& fc : fit12.constraints) {
        floor12 = std::max(floor12,
                           fc.lower_bound * (1.0 - fc.points[0].abs()) / 2.0);
    }
    diverges = diverges && mass12 >= floor12 - 1e-9 && floor12 > 100.0 * mass6 / 4.0;
    detail += "pair mass ratio " + std::to_string(ratio) + " (>= 100)";

    c.pass = all && diverges;
    c.detail = detail;
    return c;
}

// ---------------------------------------------------------------- criterion 4
Criterion criterion_counterexample() {
    Criterion c{4, "radial oscillation construction at n_max = 12", false, ""};
    FitOptions opt;
    opt.node_count = 256;
    CounterexampleRun run = run_counterexample(12, opt);

    bool ok = true;
    double max_res = 0.0;
    for (double r : run.residuals) max_res = std::max(max_res, std::abs(r));
    if (max_res > 1e-9) ok = false;

    for (int n = 6; n <= run.n_max; ++n) {
        double qn = run.q[n - run.n_start];
        if (n % 2 == 0 && std::abs(qn + 2.0) > 0.3) ok = false;
        if (n % 2 == 1 && std::abs(qn + 4.0) > 0.6) ok = false;
    }
    if (run.gap < 1.0) ok = false;
    if (!(run.corona_mass <= run.h0_feasible_mass * (1.0 + 1e-9) &&
          run.corona_mass >= run.h0_feasible_mass / 4.0)) {
        ok = false;
    }
    c.pass = ok;
    c.detail = "max residual " + std::to_string(max_res) + ", gap " + std::to_string(run.gap) +
               ", corona mass " + std::to_string(run.corona_mass) + " vs c*H0 " +
               std::to_string(run.h0_feasible_mass);
    return c;
}

// ---------------------------------------------------------------- criterion 5
Criterion criterion_splitter() {
    Criterion c{5, "product splitter guarantees on 1e4 rejection-sampled instances", false, ""};
    CounterRng rng(2718, 0);
    int accepted = 0;
    long violations = 0;
    long minimality_checks = 0;
    while (accepted < 10000) {
        double eta = 0.02 + 0.9 * rng.uniform();
        int n;
        std::vector<double> m;
        if (rng.uniform() < 0.5) {
            n = 2 + static_cast<int>(rng.uniform() * 10);
            m.resize(n);
            for (double& v : m) v = 0.02 + 0.98 * rng.uniform();
        } else {
            // banded draw: every factor above eta^{1/4}, so the minimal k
            // exceeds 1 whenever the instance survives rejection
            n = 8 + static_cast<int>(rng.uniform() * 6);
            m.resize(n);
            double lo = std::pow(eta, 0.25), hi = std::pow(eta, 0.125);
            for (double& v : m) v = lo + (hi - lo) * rng.uniform();
        }
        std::sort(m.begin(), m.end());
        double log_eta = std::log(eta);
        double total = 0.0;
        for (double v : m) total += std::log(v);
        if (!(total <= log_eta && total - std::log(m[0]) <= 0.5 * log_eta)) continue;
        ++accepted;
        SplitResult res = split_product(m, eta);
        if (!(res.k >= 1 && res.k < static_cast<std::size_t>(n))) ++violations;
        if (!(res.log_prefix <= 0.25 * log_eta)) ++violations;
        if (!(res.log_tail <= 0.5 * log_eta)) ++violations;
        if (res.k > 1) {
            ++minimality_checks;
            double prefix_less = res.log_prefix - std::log(m[res.k - 1]);
            if (!(prefix_less > 0.25 * log_eta)) ++violations;
        }
    }
    c.pass = violations == 0 && minimality_checks >= 100;
    c.detail = std::to_string(violations) + " violations, " +
               std::to_string(minimality_checks) + " minimality checks with k > 1";
    return c;
}

// ---------------------------------------------------------------- criterion 6
Criterion criterion_property_suites() {
    Criterion c{6, "pointwise bounds: 2 rho, 6 rho, and the zero-free derivative bound", false, ""};
    CounterRng rng(31415, 0);
    long v_schwarz = 0, v_invariant = 0, v_derivative = 0;

    for (int t = 0; t < 1000; ++t) {
        Poly f = Poly::random_normalized(rng, 10);
        for (int i = 0; i < 6; ++i) {
            DiskPoint w = random_point(rng), l = random_point(rng);
            if (std::abs(f.eval(w.value()) - f.eval(l.value())) >
                2.0 * pseudo_distance(w, l) + 1e-9) {
                ++v_schwarz;
            }
            DiskPoint z = random_point(rng);
            double r = 0.5 * rng.uniform();
            DiskPoint u = mobius(z, DiskPoint::from(std::polar(r, 6.2831853 * rng.uniform())));
            double rho = pseudo_distance(z, u);
            if (rho <= 0.5) {
                double gz = (1.0 - std::norm(z.value())) * std::abs(f.deriv(z.value()));
                double gu = (1.0 - std::norm(u.value())) * std::abs(f.deriv(u.value()));
                if (std::abs(gz - gu) > 6.0 * rho + 1e-9) ++v_invariant;
            }
        }
    }

    for (int t = 0; t < 1000; ++t) {
        BlaschkeProduct b = random_blaschke(rng, 20);
        DiskPoint z = random_point(rng);
        double dist = 1.0;
        for (const Zero& zero : b.zeros().zeros()) {
            dist = std::min(dist, pseudo_distance(z, zero.point));
        }
        if (dist < 1e-4) continue;
        double delta = 0.9 * dist;
        double lhs = (1.0 - std::norm(z.value())) * std::abs(b.derivative(z));
        double mod = std::abs(b.eval(z));
        if (lhs > (mod / delta) * std::log(1.0 / (mod * mod)) + 1e-9) ++v_derivative;
    }

    c.pass = v_schwarz == 0 && v_invariant == 0 && v_derivative == 0;
    c.detail = "violations: 2rho " + std::to_string(v_schwarz) + ", 6rho " +
               std::to_string(v_invariant) + ", zero-free bound " +
               std::to_string(v_derivative);
    return c;
}

// ---------------------------------------------------------------- criterion 7
Criterion criterion_blaschke_numerics() {
    Criterion c{7, "log-domain evaluation, derivative identity, high-precision oracle", false, ""};
    CounterRng rng(16180, 0);
    bool ok = true;

    for (int trial = 0; trial < 20 && ok; ++trial) {
        BlaschkeProduct b = random_blaschke(rng, 50);
        for (int i = 0; i < 500; ++i) {
            DiskPoint z = random_point(rng);
            double direct = std::log(std::abs(b.eval(z)));
            double logdom = b.log_modulus(z);
            if (std::abs(direct - logdom) >
                1e-12 * std::max(1.0, std::abs(logdom))) {
                ok = false;
                break;
            }
        }
    }

    for (int trial = 0; trial < 50 && ok; ++trial) {
        BlaschkeProduct b = random_blaschke(rng, 25);
        for (std::size_t n = 0; n < b.size(); ++n) {
            const DiskPoint& l = b.zeros().point(n);
            double lhs = (1.0 - std::norm(l.value())) * std::abs(b.derivative(l));
            double rhs = std::exp(b.deleted_log_product(n));
            if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, rhs)) {
                ok = false;
                break;
            }
        }
    }

    double worst = 0.0;
    BlaschkeProduct geo{geometric_sequence(15)};
    for (int n = 1; n <= 15; ++n) {
        double ours = geo.deleted_log_product(n - 1);
        double oracle = testsupport::deleted_log_geometric_mpfr(n, 15);
        worst = std::max(worst,
                         std::abs(ours - oracle) / std::max(1.0, std::abs(oracle)));
    }
    if (worst > 1e-12) ok = false;

    c.pass = ok;
    c.detail = "worst deleted-product deviation vs 100-digit oracle: " + std::to_string(worst);
    return c;
}

// ---------------------------------------------------------------- criterion 8
Criterion criterion_lp_engine() {
    Criterion c{8, "LP engine: homogeneity, node refinement, analytic optimum", false, ""};
    bool ok = true;
    std::string detail;

    // homogeneity to 1e-9
    CounterRng rng(123, 0);
    for (int trial = 0; trial < 10 && ok; ++trial) {
        std::vector<std::pair<DiskPoint, double>> cons;
        for (int i = 0; i < 6; ++i) cons.emplace_back(random_point(rng, 0.9), 4.0 * rng.uniform());
        FitOptions opt;
        opt.node_count = 256;
        double base = fit_min_majorant(cons, opt).objective;
        for (auto& [p, bound] : cons) bound *= 3.5;
        double scaled = fit_min_majorant(cons, opt).objective;
        if (std::abs(scaled - 3.5 * base) > 1e-9 * std::max(1.0, scaled)) ok = false;
    }

    // node doubling moves acceptance masses by at most 1%
    for (const ZeroSequence& seq :
         {geometric_sequence(12), two_ray_sequence(8), close_pair_sequence(8)}) {
        FitOptions opt;
        opt.node_count = 256;
        opt.mass_cap = 1e7;
        double m1 = check_interpolation(seq, opt).objective;
        opt.node_count = 512;
        double m2 = check_interpolation(seq, opt).objective;
        if (std::abs(m2 - m1) > 0.01 * std::max(m1, 1e-12)) ok = false;
    }

    // analytic single-constraint optimum within 2% at 2^12 nodes
    FitOptions fine;
    fine.node_count = 1 << 12;
    double x = 0.6, bound = 2.0;
    double mass = fit_min_majorant({{DiskPoint::xy(x, 0), bound}}, fine).objective;
    double analytic = bound * (1.0 - x) / (1.0 + x);
    double rel = std::abs(mass - analytic) / analytic;
    if (rel > 0.02) ok = false;
    detail = "single-constraint relative gap " + std::to_string(rel);

    c.pass = ok;
    c.detail = detail;
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    auto guard = [&](Criterion (*fn)(), int id, const char* name) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back(Criterion{id, name, false, std::string("exception: ") + e.what()});
        }
    };
    guard(criterion_single_hole, 1, "single-hole oracle");
    guard(criterion_condition_d_bounds, 2, "condition (d) bounds");
    guard(criterion_consistency_suite, 3, "consistency suite");
    guard(criterion_counterexample, 4, "counterexample");
    guard(criterion_splitter, 5, "splitter");
    guard(criterion_property_suites, 6, "property suites");
    guard(criterion_blaschke_numerics, 7, "blaschke numerics");
    guard(criterion_lp_engine, 8, "lp engine");

    bool all = true;
    for (const Criterion& c : results) {
        std::printf("%s  criterion %d: %s — %s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.detail.c_str());
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above");
    return all ? 0 : 1;
}
