#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/geometry.hpp"

namespace disklab {

// Discrete positive measure on the unit circle; its Poisson integral is the
// candidate positive harmonic majorant.
struct BoundaryMeasure {
    std::vector<double> nodes;    // angles, strictly increasing in [0, 2pi)
    std::vector<double> weights;  // >= 0
    double total_mass = 0.0;

    static BoundaryMeasure atoms(std::vector<double> nodes, std::vector<double> weights);
    static BoundaryMeasure uniform(double mass, int node_count);
    static BoundaryMeasure atom(double theta, double weight);
};

// H(z) = sum_j w_j P(z, e^{i theta_j}).
double eval_majorant(const BoundaryMeasure& mu, const DiskPoint& z);

// Conjugate of the Poisson integral, normalized to vanish at 0:
// sum_j w_j Im((zeta_j + z)/(zeta_j - z)).
double harmonic_conjugate(const BoundaryMeasure& mu, const DiskPoint& z);

enum class FitStatus { optimal, infeasible_at_mass_cap };

enum class NodePlacement {
    equispaced,
    // equispaced plus the angular projections of the constraint points,
    // where the kernel peaks
    equispaced_plus_peaks,
};

struct FitOptions {
    int node_count = 512;
    double mass_cap = 1e6;
    NodePlacement placement = NodePlacement::equispaced;
};

// One fit row: sum_j w_j sum_p P(p, zeta_j) >= lower_bound. Plain point
// constraints have a single point; union-trace rows carry a pair.
struct FitConstraint {
    std::vector<DiskPoint> points;
    double lower_bound = 0.0;  // clamped to >= 0
};

struct MajorantFit {
    BoundaryMeasure measure;
    std::vector<FitConstraint> constraints;
    FitStatus status = FitStatus::optimal;
    double objective = 0.0;       // minimal total mass
    std::vector<double> slack;    // per-constraint residual, >= 0 up to fp noise
    long lp_iterations = 0;
};

// Minimal total mass measure with P[mu](z_i) >= c_i at every constraint.
// Negative bounds clamp to 0. Throws on coincident points carrying different
// bounds.
MajorantFit fit_min_majorant(const std::vector<std::pair<DiskPoint, double>>& constraints,
                             const FitOptions& options);

// Generalized rows (sums of kernels); used by the union-trace checker.
MajorantFit fit_min_majorant_rows(std::vector<FitConstraint> rows, const FitOptions& options);

// Interpolation-condition fit: H(lambda_n) >= -log|B_n(lambda_n)|.
MajorantFit check_interpolation(const ZeroSequence& seq, const FitOptions& options);

// Same with only the factors at pseudohyperbolic distance <= c.
MajorantFit check_local_interpolation(const ZeroSequence& seq, double c, const FitOptions& options);

// Trace-space fit: H(lambda_n) >= log+ |w_n|, targets given in log modulus
// so arbitrarily large targets stay representable.
MajorantFit check_trace(const ZeroSequence& seq, const std::vector<double>& log_abs_values,
                        const FitOptions& options);

// Divided difference (w_k - w_n)/b_{lambda_n}(lambda_k).
Complex divided_difference(Complex w_n, Complex w_k, const DiskPoint& lambda_n,
                           const DiskPoint& lambda_k);

// Union-of-two-interpolating-sequences trace fit:
// H(lambda_n) + H(lambda_k) >= log+ |divided difference| over all pairs.
MajorantFit check_union_trace(const ZeroSequence& seq, const std::vector<Complex>& values,
                              const FitOptions& options);

}  // namespace disklab
