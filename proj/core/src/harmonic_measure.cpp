#include "disklab/harmonic_measure.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "disklab/rng.hpp"

namespace disklab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinHoleRadius = 1e-12;

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DISKLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void validate_holes(const std::vector<Hole>& holes) {
    for (const Hole& h : holes) {
        if (!(h.radius >= kMinHoleRadius)) {
            throw std::invalid_argument("HoleDomain: hole radius below the 1e-12 floor");
        }
        if (!(std::abs(h.center) + h.radius < 1.0)) {
            throw std::invalid_argument("HoleDomain: hole not inside the unit disk");
        }
    }
    for (std::size_t i = 0; i < holes.size(); ++i) {
        for (std::size_t j = i + 1; j < holes.size(); ++j) {
            double gap = std::abs(holes[i].center - holes[j].center) -
                         (holes[i].radius + holes[j].radius);
            if (!(gap > 1e-12)) {
                throw std::invalid_argument("HoleDomain: holes are not pairwise disjoint");
            }
        }
    }
}

}  // namespace

HoleDomain HoleDomain::from_pseudo(const std::vector<PseudoDisk>& disks) {
    std::vector<Hole> holes;
    holes.reserve(disks.size());
    for (std::size_t i = 0; i < disks.size(); ++i) {
        EuclideanDisk e = pseudo_to_euclidean(disks[i]);
        holes.push_back(Hole{e.center, e.radius, i, 0.0});
    }
    return from_euclidean(std::move(holes));
}

HoleDomain HoleDomain::from_euclidean(std::vector<Hole> holes) {
    validate_holes(holes);
    HoleDomain d;
    d.holes_ = std::move(holes);
    return d;
}

double omega_single_hole(const DiskPoint& z, const DiskPoint& lambda, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("omega_single_hole: delta must be in (0, 1)");
    }
    double rho = pseudo_distance(z, lambda);
    if (rho < delta) {
        throw std::invalid_argument("omega_single_hole: z lies inside the hole");
    }
    return std::log(rho) / std::log(delta);
}

namespace {

struct WalkCounts {
    long outer = 0;
    long censored = 0;
    std::vector<long> holes;
};

// One trajectory; returns 0 for the outer circle, 1 + k for hole k, -1 for a
// censored walk.
int run_walk(const std::vector<Hole>& holes, Complex start, double eps_outer, long step_cap,
             std::uint64_t seed, std::uint64_t trajectory) {
    CounterRng rng(seed, trajectory);
    Complex p = start;
    for (long step = 0; step < step_cap; ++step) {
        double d_out = 1.0 - std::abs(p);
        double radius = d_out;
        int absorb = -1;
        double absorb_dist = std::numeric_limits<double>::infinity();
        if (d_out <= eps_outer) {
            absorb = 0;
            absorb_dist = d_out;
        }
        for (std::size_t k = 0; k < holes.size(); ++k) {
            double d = std::abs(p - holes[k].center) - holes[k].radius;
            if (d < radius) radius = d;
            // absorb at the nearest boundary whose shell contains p
            if (d <= holes[k].shell && d < absorb_dist) {
                absorb = static_cast<int>(k) + 1;
                absorb_dist = d;
            }
        }
        if (absorb >= 0) return absorb;
        double theta = kTwoPi * rng.uniform();
        p += radius * Complex{std::cos(theta), std::sin(theta)};
    }
    return -1;
}

}  // namespace

Estimate wos_estimate(const HoleDomain& domain, const DiskPoint& z, const WosOptions& options) {
    if (options.walks < 1) throw std::invalid_argument("wos_estimate: walks must be >= 1");
    if (!(options.epsilon_shell > 0.0 && options.epsilon_shell < 1.0)) {
        throw std::invalid_argument("wos_estimate: epsilon_shell out of range");
    }

    std::vector<Hole> holes = domain.holes();
    const double eps = options.epsilon_shell;
    for (Hole& h : holes) h.shell = std::min(eps, h.radius / 2.0);

    Complex start = z.value();
    if (!(1.0 - std::abs(start) > eps)) {
        throw std::invalid_argument("wos_estimate: start point inside the outer shell");
    }
    for (const Hole& h : holes) {
        double d = std::abs(start - h.center) - h.radius;
        if (!(d > h.shell)) {
            throw std::invalid_argument("wos_estimate: start point inside a hole shell");
        }
    }

    const int threads = resolve_threads(options.threads);
    const long walks = options.walks;
    std::vector<WalkCounts> partial(threads);
    for (WalkCounts& w : partial) w.holes.assign(holes.size(), 0);

    auto work = [&](int t) {
        WalkCounts& acc = partial[t];
        for (long i = t; i < walks; i += threads) {
            int hit = run_walk(holes, start, eps, options.step_cap, options.seed,
                               static_cast<std::uint64_t>(i));
            if (hit == 0) {
                ++acc.outer;
            } else if (hit > 0) {
                ++acc.holes[static_cast<std::size_t>(hit - 1)];
            } else {
                ++acc.censored;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (std::thread& th : pool) th.join();
    }

    Estimate est;
    est.walks = walks;
    est.seed = options.seed;
    est.epsilon_shell = eps;
    est.hole_hits.assign(holes.size(), 0);
    for (const WalkCounts& w : partial) {
        est.outer_hits += w.outer;
        est.censored += w.censored;
        for (std::size_t k = 0; k < holes.size(); ++k) est.hole_hits[k] += w.holes[k];
    }
    if (est.censored > options.max_censored_fraction * static_cast<double>(walks)) {
        throw std::runtime_error("wos_estimate: too many censored trajectories");
    }
    est.mean = static_cast<double>(est.outer_hits) / static_cast<double>(walks);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(walks));
    return est;
}

ConditionDReport condition_d_check(const ZeroSequence& seq, const BoundaryMeasure& h,
                                   double neighbor_cutoff, const WosOptions& options) {
    if (seq.empty()) throw std::invalid_argument("condition_d_check: empty sequence");
    if (!(neighbor_cutoff > 0.0 && neighbor_cutoff < 1.0)) {
        throw std::invalid_argument("condition_d_check: cutoff must be in (0, 1)");
    }

    ConditionDReport report;
    report.neighbor_cutoff = neighbor_cutoff;

    const std::size_t n = seq.size();
    std::vector<double> h_values(n);
    std::vector<double> log_radius(n);
    for (std::size_t k = 0; k < n; ++k) {
        h_values[k] = eval_majorant(h, seq.point(k));
        // 1% above the geometry floor so the Euclidean image clears the
        // validation threshold after rounding
        double floor_log = std::log(1.01 * kMinHoleRadius) -
                           std::log1p(-std::norm(seq.point(k).value()));
        double lr = -h_values[k];
        if (lr < floor_log) {
            lr = floor_log;
            report.clamped = true;
        }
        log_radius[k] = lr;
    }

    // Disjointness of the disks D(lambda_k, e^{-H(lambda_k)}) comes first; a
    // violation is a negative verdict, not an error.
    std::vector<EuclideanDisk> euclid(n);
    for (std::size_t k = 0; k < n; ++k) {
        euclid[k] = pseudo_to_euclidean(PseudoDisk{seq.point(k), log_radius[k]});
    }
    report.disks_disjoint = true;
    for (std::size_t i = 0; i < n && report.disks_disjoint; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double gap = std::abs(euclid[i].center - euclid[j].center) -
                         (euclid[i].radius + euclid[j].radius);
            if (!(gap > 1e-12)) {
                report.disks_disjoint = false;
                break;
            }
        }
    }
    if (!report.disks_disjoint) return report;

    report.ran = true;
    report.min_outer = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Hole> holes;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            if (pseudo_distance(seq.point(k), seq.point(i)) <= neighbor_cutoff) {
                holes.push_back(Hole{euclid[k].center, euclid[k].radius, k, 0.0});
            }
        }
        ConditionDEntry entry;
        entry.n = i;
        entry.h_value = h_values[i];
        entry.hole_count = holes.size();
        if (holes.empty()) {
            entry.estimate.mean = 1.0;
            entry.estimate.walks = options.walks;
            entry.estimate.seed = options.seed;
            entry.estimate.outer_hits = options.walks;
            entry.estimate.epsilon_shell = options.epsilon_shell;
            entry.epsilon_used = options.epsilon_shell;
        } else {
            Complex start = seq.point(i).value();
            double dist = 1.0 - std::abs(start);
            for (const Hole& hole : holes) {
                dist = std::min(dist, std::abs(start - hole.center) - hole.radius);
            }
            WosOptions local = options;
            local.epsilon_shell = std::min(options.epsilon_shell, dist / 2.0);
            local.seed = options.seed + i;  // independent streams per n
            entry.epsilon_used = local.epsilon_shell;
            entry.estimate =
                wos_estimate(HoleDomain::from_euclidean(std::move(holes)), seq.point(i), local);
        }
        report.min_outer = std::min(report.min_outer, entry.estimate.mean);
        report.max_std_error = std::max(report.max_std_error, entry.estimate.std_error);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace disklab
