#pragma once

#include <complex>
#include <optional>
#include <utility>

namespace disklab {

using Complex = std::complex<double>;

// Exact representation for a point exponentially close to another point of
// the disk. The explicit coordinates of such a point collapse onto the
// anchor in double precision, but the log pseudohyperbolic distance to the
// anchor stays available for metric work.
struct NearAnchor {
    Complex anchor;     // |anchor| < 1
    double log_rho;     // log rho(point, anchor), <= 0
    Complex direction;  // unit complex; point = mobius(anchor, e^{log_rho} * direction)
};

// A point of the open unit disk.
class DiskPoint {
public:
    DiskPoint() = default;

    // Construct from explicit coordinates; requires re^2 + im^2 < 1.
    static DiskPoint xy(double re, double im);
    static DiskPoint from(Complex z);
    // Construct a point at pseudohyperbolic distance e^{log_rho} from
    // `anchor` along `direction` (in the Mobius chart centered at anchor).
    static DiskPoint near(const DiskPoint& anchor, double log_rho, Complex direction);

    Complex value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    double abs() const { return std::abs(z_); }

    bool anchored() const { return near_.has_value(); }
    const NearAnchor& anchor_form() const { return *near_; }

    // Semantic identity: distinguishes an anchored point from its anchor
    // even when the explicit coordinates coincide.
    friend bool operator==(const DiskPoint& a, const DiskPoint& b);

private:
    Complex z_{0.0, 0.0};
    std::optional<NearAnchor> near_;
};

// rho(z, w) = |z - w| / |1 - conj(z) w|, in [0, 1).
double pseudo_distance(const DiskPoint& z, const DiskPoint& w);

// log rho(z, w); -infinity iff the points coincide. Exact for anchored
// points measured against their anchor, where the explicit formula would
// return -infinity spuriously.
double log_pseudo_distance(const DiskPoint& z, const DiskPoint& w);

// b_lambda(z) = (conj(lambda)/|lambda|) (lambda - z)/(1 - conj(lambda) z),
// with b_0(z) = z. |b_lambda(z)| = rho(lambda, z).
Complex blaschke_factor(const DiskPoint& lambda, const DiskPoint& z);

// Derivative of the factor above in z.
Complex blaschke_factor_derivative(const DiskPoint& lambda, const DiskPoint& z);

// P(z, zeta) = (1 - |z|^2) / |zeta - z|^2 = Re((zeta + z)/(zeta - z)).
double poisson_kernel(const DiskPoint& z, Complex zeta);

// ((1-rho)/(1+rho), (1+rho)/(1-rho)); pins the ratio H(z)/H(w) of any
// positive harmonic function at points with pseudo distance rho.
std::pair<double, double> harnack_bounds(double rho);

// phi_a(z) = (a - z)/(1 - conj(a) z); involution exchanging 0 and a.
DiskPoint mobius(const DiskPoint& a, const DiskPoint& z);

// Pseudohyperbolic disk D(center, e^{log_radius}).
struct PseudoDisk {
    DiskPoint center;
    double log_radius;  // < 0

    double radius() const;
};

struct EuclideanDisk {
    Complex center;
    double radius;
};

// Euclidean image of a pseudohyperbolic disk. Throws if the image radius
// falls below 1e-300.
EuclideanDisk pseudo_to_euclidean(const PseudoDisk& d);

}  // namespace disklab
