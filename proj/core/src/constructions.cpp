#include "disklab/constructions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "disklab/rng.hpp"

namespace disklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

ZeroSequence geometric_sequence(int count) {
    if (count < 1) throw std::invalid_argument("geometric_sequence: count must be >= 1");
    std::vector<DiskPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        pts.push_back(DiskPoint::xy(1.0 - std::ldexp(1.0, -n), 0.0));
    }
    return ZeroSequence::from_points(std::move(pts));
}

ZeroSequence two_ray_sequence(int count) {
    if (count < 1) throw std::invalid_argument("two_ray_sequence: count must be >= 1");
    std::vector<DiskPoint> pts;
    pts.reserve(2 * static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        double r = 1.0 - std::ldexp(1.0, -n);
        pts.push_back(DiskPoint::xy(r, 0.0));
        pts.push_back(DiskPoint::xy(-r, 0.0));
    }
    return ZeroSequence::from_points(std::move(pts));
}

std::pair<ZeroSequence, ZeroSequence> close_pair_components(int count) {
    if (count < 1) throw std::invalid_argument("close_pair_sequence: count must be >= 1");
    std::vector<DiskPoint> bases, partners;
    bases.reserve(count);
    partners.reserve(count);
    for (int n = 2; n <= count + 1; ++n) {
        DiskPoint base = DiskPoint::xy(1.0 - 1.0 / n, 0.0);
        bases.push_back(base);
        partners.push_back(
            DiskPoint::near(base, -std::exp(static_cast<double>(n)), Complex{-1.0, 0.0}));
    }
    return {ZeroSequence::from_points(std::move(bases)),
            ZeroSequence::from_points(std::move(partners))};
}

ZeroSequence close_pair_sequence(int count) {
    auto [bases, partners] = close_pair_components(count);
    std::vector<DiskPoint> pts;
    pts.reserve(2 * static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < bases.size(); ++i) {
        pts.push_back(bases.point(i));
        pts.push_back(partners.point(i));
    }
    return ZeroSequence::from_points(std::move(pts));
}

namespace {

// Point of the radial segment at log pseudohyperbolic distance l from zero n,
// toward 1.
DiskPoint radial_point(const DiskPoint& anchor, double l) {
    return DiskPoint::near(anchor, l, Complex{-1.0, 0.0});
}

}  // namespace

DiskPoint solve_mu(const BlaschkeProduct& b1, std::size_t n, double target_log) {
    const ZeroSequence& zeros = b1.zeros();
    if (n + 1 >= zeros.size()) {
        throw std::invalid_argument("solve_mu: need the next zero on the segment");
    }
    if (!zeros.simple()) throw std::invalid_argument("solve_mu: zeros must be simple");
    const DiskPoint& a = zeros.point(n);
    const DiskPoint& b = zeros.point(n + 1);
    if (a.im() != 0.0 || b.im() != 0.0 || !(b.re() > a.re() && a.re() > 0.0)) {
        throw std::invalid_argument("solve_mu: zeros must increase along (0, 1)");
    }

    double deleted = b1.deleted_log_product(n);
    if (!(target_log < deleted)) {
        throw std::invalid_argument("solve_mu: target must lie below the deleted log product");
    }

    double mid = 0.5 * (a.re() + b.re());
    double l_hi = std::log(mid - a.re()) - std::log(1.0 - a.re() * mid);
    double l_lo = std::min(target_log - deleted - 5.0, l_hi - 10.0);

    auto g = [&](double l) { return b1.log_modulus(radial_point(a, l)); };

    // Bracket along 100 samples of the segment; fail when the target exceeds
    // the local maximum.
    constexpr int kSamples = 100;
    double prev_l = l_lo;
    double hi = kInf, lo = -kInf;
    if (g(l_lo) >= target_log) {
        throw std::invalid_argument("solve_mu: target already exceeded at the lower end");
    }
    for (int s = 1; s <= kSamples; ++s) {
        double l = l_lo + (l_hi - l_lo) * s / kSamples;
        if (g(l) >= target_log) {
            lo = prev_l;
            hi = l;
            break;
        }
        prev_l = l;
    }
    if (hi == kInf) {
        throw std::runtime_error("solve_mu: no bracket; target above the segment maximum");
    }

    for (int it = 0; it < 300 && hi - lo > 0.0; ++it) {
        double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break;  // interval at double resolution
        (g(m) < target_log ? lo : hi) = m;
    }
    double root = hi;
    double residual = g(root) - target_log;
    if (std::abs(residual) > 1e-9) {
        throw std::runtime_error("solve_mu: bisection residual above 1e-9");
    }
    return radial_point(a, root);
}

CounterexampleRun run_counterexample(int n_max, const FitOptions& fit_options) {
    if (n_max < 4 || n_max > 40) {
        throw std::invalid_argument("run_counterexample: n_max must be in [4, 40]");
    }
    // Extra tail zeros keep truncation effects in the deleted products below
    // the solver tolerance.
    ZeroSequence lam = geometric_sequence(n_max + 5);
    BlaschkeProduct b1{lam};

    CounterexampleRun run;
    run.n_max = n_max;

    std::vector<DiskPoint> mu_points;
    for (int n = run.n_start; n <= n_max; ++n) {
        double lambda = lam.point(n - 1).re();
        double scale = 1.0 / (1.0 - lambda);  // = 2^n
        double target = (n % 2 == 0) ? -scale : -2.0 * scale;
        DiskPoint mu = solve_mu(b1, static_cast<std::size_t>(n - 1), target);
        double l = mu.anchor_form().log_rho;
        double rho = std::exp(l);
        // 1 - mu = (1 - lambda)(1 - rho)/(1 + lambda rho)
        double log_one_minus =
            std::log1p(-lambda) + std::log1p(-rho) - std::log1p(lambda * rho);
        double one_minus = std::exp(log_one_minus);
        double value = b1.log_modulus(mu);
        double qn = one_minus * (2.0 - one_minus) * value;

        run.lambda.push_back(lambda);
        run.log_one_minus_mu.push_back(log_one_minus);
        run.log_rho.push_back(l);
        run.q.push_back(qn);
        run.residuals.push_back(value - target);
        mu_points.push_back(mu);
    }

    int even_count = 0, odd_count = 0;
    for (int n = std::max(6, run.n_start); n <= n_max; ++n) {
        double qn = run.q[n - run.n_start];
        if (n % 2 == 0) {
            run.even_mean += qn;
            ++even_count;
        } else {
            run.odd_mean += qn;
            ++odd_count;
        }
    }
    if (even_count > 0) run.even_mean /= even_count;
    if (odd_count > 0) run.odd_mean /= odd_count;
    run.gap = std::abs(run.even_mean - run.odd_mean);

    // Unimodularity certificate for (B1, B2): corona fit over the radial
    // pressure points, compared against the explicit c*H0 atom at theta = 0.
    BlaschkeProduct b2{ZeroSequence::from_points(mu_points)};
    std::vector<std::pair<DiskPoint, double>> cons;
    auto add_point = [&](const DiskPoint& z) {
        double l1 = b1.log_modulus(z);
        double l2 = b2.log_modulus(z);
        double m = std::max(l1, l2);
        if (m == -kInf) return;  // cannot happen: the zero lists are disjoint
        double ls = m + std::log(std::exp(l1 - m) + std::exp(l2 - m));
        cons.emplace_back(z, -ls);
    };
    for (int n = run.n_start; n <= n_max; ++n) {
        add_point(lam.point(n - 1));
        add_point(mu_points[n - run.n_start]);
    }
    for (int j = 1; j <= n_max; ++j) {
        double r = 1.0 - std::ldexp(1.0, -j);
        add_point(DiskPoint::xy(-r, 0.0));
        add_point(DiskPoint::from(Complex{0.0, r}));
    }
    MajorantFit fit = fit_min_majorant(cons, fit_options);
    run.corona_mass = fit.objective;
    double cstar = 0.0;
    for (const auto& [z, bound] : cons) {
        if (bound > 0.0) cstar = std::max(cstar, bound / poisson_kernel(z, Complex{1.0, 0.0}));
    }
    run.h0_feasible_mass = cstar;
    return run;
}

SplitResult split_product(std::span<const double> m, double eta) {
    const std::size_t n = m.size();
    if (n < 2) throw std::invalid_argument("split_product: need N >= 2 factors");
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("split_product: eta in (0,1)");
    double prev = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!(m[j] > 0.0 && m[j] <= 1.0)) {
            throw std::invalid_argument("split_product: factors must lie in (0, 1]");
        }
        if (j > 0 && m[j] < prev) {
            throw std::invalid_argument("split_product: factors must be nondecreasing");
        }
        prev = m[j];
    }
    const double log_eta = std::log(eta);
    double total = 0.0;
    for (double v : m) total += std::log(v);
    double tail_from_two = total - std::log(m[0]);
    if (!(total <= log_eta)) {
        throw std::invalid_argument("split_product: prod m must be <= eta");
    }
    if (!(tail_from_two <= 0.5 * log_eta)) {
        throw std::invalid_argument("split_product: prod_{j>=2} m must be <= sqrt(eta)");
    }

    double prefix = 0.0;
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
        prefix += std::log(m[j]);
        if (prefix <= 0.25 * log_eta) {
            k = j + 1;
            break;
        }
    }
    if (k == 0 || k >= n) {
        throw std::runtime_error("split_product: guarantee k < N failed");
    }
    SplitResult out;
    out.k = k;
    out.log_prefix = prefix;
    out.log_tail = total - prefix;
    if (!(out.log_prefix <= 0.25 * log_eta) || !(out.log_tail <= 0.5 * log_eta)) {
        throw std::runtime_error("split_product: postcondition failed");
    }
    return out;
}

PerturbReport perturb_and_recheck(const ZeroSequence& seq, const BoundaryMeasure& h,
                                  double factor, std::uint64_t seed,
                                  const FitOptions& fit_options,
                                  const WosOptions& wos_options) {
    if (!(factor >= 0.0 && factor <= 0.25)) {
        throw std::invalid_argument("perturb_and_recheck: factor must be in [0, 1/4]");
    }
    PerturbReport report;
    report.factor = factor;
    report.seed = seed;

    std::vector<DiskPoint> moved;
    moved.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const DiskPoint& p = seq.point(n);
        double radius = factor * std::exp(-eval_majorant(h, p));
        if (radius == 0.0) {
            moved.push_back(p);
            continue;
        }
        CounterRng rng(seed, n);
        double r = radius * std::sqrt(rng.uniform());
        double theta = kTwoPi * rng.uniform();
        Complex w = std::polar(r, theta);
        moved.push_back(mobius(p, DiskPoint::from(w)));
    }
    report.perturbed = ZeroSequence::from_points(std::move(moved));

    report.original_mass = check_interpolation(seq, fit_options).objective;
    report.fit_perturbed = check_interpolation(report.perturbed, fit_options);
    report.perturbed_mass = report.fit_perturbed.objective;
    report.d_perturbed = condition_d_check(report.perturbed, h, 0.5, wos_options);

    report.shrunken_disks_disjoint = true;
    std::vector<EuclideanDisk> disks;
    for (std::size_t n = 0; n < report.perturbed.size(); ++n) {
        const DiskPoint& p = report.perturbed.point(n);
        disks.push_back(
            pseudo_to_euclidean(PseudoDisk{p, -2.0 * eval_majorant(h, p)}));
    }
    for (std::size_t i = 0; i < disks.size() && report.shrunken_disks_disjoint; ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            double gap = std::abs(disks[i].center - disks[j].center) -
                         (disks[i].radius + disks[j].radius);
            if (!(gap > 0.0)) {
                report.shrunken_disks_disjoint = false;
                break;
            }
        }
    }
    return report;
}

}  // namespace disklab
