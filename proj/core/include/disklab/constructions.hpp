#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/geometry.hpp"
#include "disklab/harmonic_measure.hpp"
#include "disklab/majorant.hpp"

namespace disklab {

// lambda_n = 1 - 2^-n, n = 1..count, on the positive real axis.
ZeroSequence geometric_sequence(int count);

// Two opposite rays carrying the geometric radii.
ZeroSequence two_ray_sequence(int count);

// lambda_n = 1 - 1/n paired with a partner at log rho = -exp(1/(1-lambda_n))
// = -e^n (anchored form), n = 2..count+1.
ZeroSequence close_pair_sequence(int count);

// The same family split into the base sequence and the partner sequence.
std::pair<ZeroSequence, ZeroSequence> close_pair_components(int count);

// Root of log|B1| = target_log on the radial segment from zero n toward the
// midpoint to zero n+1 (zeros assumed radially increasing). Returned in
// near-anchor form; throws when the target is not bracketed on the segment.
DiskPoint solve_mu(const BlaschkeProduct& b1, std::size_t n, double target_log);

struct CounterexampleRun {
    int n_max = 0;
    // Entries run over n = n_start..n_max. The oscillation targets exceed the
    // local maximum of |B1| on the first two radial segments, so the roots
    // exist only from n_start = 3 on.
    int n_start = 3;
    std::vector<double> lambda;            // 1 - 2^-n
    std::vector<double> log_one_minus_mu;  // log(1 - mu_n)
    std::vector<double> log_rho;           // log rho(lambda_n, mu_n)
    std::vector<double> q;                 // (1 - mu_n^2) log|B1(mu_n)|
    std::vector<double> residuals;         // log-domain target residuals
    double even_mean = 0.0;                // mean of q over even n >= 6
    double odd_mean = 0.0;                 // mean over odd n >= 6
    double gap = 0.0;                      // |even_mean - odd_mean|
    double corona_mass = 0.0;              // unimodularity fit for (B1, B2)
    double h0_feasible_mass = 0.0;         // mass of the explicit c*H0 point
};

// Radial oscillation construction: mu_n solve |B1(mu_n)| = e^{-1/(1-lambda_n)}
// (n even) and e^{-2/(1-lambda_n)} (n odd); q_n then clusters near -2 / -4 and
// the radial limit of (1-|z|^2) P[nu](z) cannot exist.
CounterexampleRun run_counterexample(int n_max, const FitOptions& fit_options = {});

struct SplitResult {
    std::size_t k = 0;       // 1-based count of leading factors
    double log_prefix = 0.0; // log prod_{j<=k} m_j
    double log_tail = 0.0;   // log prod_{j>k} m_j
};

// Smallest k with prod_{j<=k} m_j <= eta^{1/4}; requires m nondecreasing in
// (0,1], N >= 2, prod m <= eta and prod_{j>=2} m <= eta^{1/2}. Guarantees
// 1 <= k < N, prefix <= eta^{1/4} and tail <= eta^{1/2}, all in log domain.
SplitResult split_product(std::span<const double> m, double eta);

struct PerturbReport {
    ZeroSequence perturbed;
    double factor = 0.0;
    std::uint64_t seed = 0;
    double original_mass = 0.0;
    double perturbed_mass = 0.0;
    MajorantFit fit_perturbed;
    ConditionDReport d_perturbed;
    bool shrunken_disks_disjoint = false;  // D(lambda'_n, e^{-2H(lambda'_n)})
};

// Moves each lambda_n to a uniformly drawn point of the chart disk of radius
// factor * e^{-H(lambda_n)} and re-runs the interpolation checkers.
PerturbReport perturb_and_recheck(const ZeroSequence& seq, const BoundaryMeasure& h,
                                  double factor, std::uint64_t seed,
                                  const FitOptions& fit_options, const WosOptions& wos_options);

}  // namespace disklab
