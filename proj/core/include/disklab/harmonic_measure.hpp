#pragma once

#include <cstdint>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/geometry.hpp"
#include "disklab/majorant.hpp"

namespace disklab {

struct Hole {
    Complex center;        // Euclidean center
    double radius;         // Euclidean radius
    std::size_t index;     // generating index
    double shell;          // absorption shell for this boundary
};

// The unit disk minus finitely many closed disks (stored as their Euclidean
// images). Holes must be pairwise disjoint and inside the disk.
class HoleDomain {
public:
    HoleDomain() = default;
    static HoleDomain from_pseudo(const std::vector<PseudoDisk>& disks);
    static HoleDomain from_euclidean(std::vector<Hole> holes);

    const std::vector<Hole>& holes() const { return holes_; }

private:
    std::vector<Hole> holes_;
};

// Exact harmonic measure of the hole boundary for a single pseudohyperbolic
// hole D(lambda, delta): log(1/rho(z, lambda)) / log(1/delta). The outer
// boundary gets 1 minus this.
double omega_single_hole(const DiskPoint& z, const DiskPoint& lambda, double delta);

struct Estimate {
    double mean = 0.0;       // outer hits / walks
    double std_error = 0.0;  // sqrt(mean (1-mean) / walks)
    long walks = 0;
    std::uint64_t seed = 0;
    double epsilon_shell = 0.0;
    long outer_hits = 0;
    std::vector<long> hole_hits;  // aligned with HoleDomain::holes()
    long censored = 0;
};

struct WosOptions {
    long walks = 100000;
    double epsilon_shell = 1e-4;
    std::uint64_t seed = 1;
    long step_cap = 1'000'000;
    int threads = 0;  // 0: DISKLAB_THREADS env, else hardware concurrency
    double max_censored_fraction = 1e-3;
};

// Walk-on-spheres estimate of omega(z, outer boundary, domain). Trajectory t
// draws from a counter-based stream keyed by (seed, t), so hit counts are
// bit-identical for a fixed (seed, walks, epsilon_shell, domain) regardless
// of thread count. Throws when the censored fraction exceeds the limit.
Estimate wos_estimate(const HoleDomain& domain, const DiskPoint& z, const WosOptions& options);

struct ConditionDEntry {
    std::size_t n = 0;
    Estimate estimate;
    double h_value = 0.0;      // H(lambda_n)
    double epsilon_used = 0.0;
    std::size_t hole_count = 0;
};

struct ConditionDReport {
    bool ran = false;            // false when the disjointness precheck fails
    bool disks_disjoint = false;
    bool clamped = false;        // some radius was clamped to the geometry floor
    double neighbor_cutoff = 0.5;
    double min_outer = 0.0;
    double max_std_error = 0.0;
    std::vector<ConditionDEntry> entries;
};

// Quantitative interpolation check through harmonic measure: for each n,
// removes the disks D(lambda_k, e^{-H(lambda_k)}) of the neighbors within
// the cutoff and estimates the harmonic measure of the unit circle at lambda_n.
ConditionDReport condition_d_check(const ZeroSequence& seq, const BoundaryMeasure& h,
                                   double neighbor_cutoff, const WosOptions& options);

}  // namespace disklab
