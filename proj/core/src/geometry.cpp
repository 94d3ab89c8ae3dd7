#include "disklab/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace disklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_in_disk(Complex z, const char* what) {
    if (!(std::norm(z) < 1.0)) {
        throw std::domain_error(std::string(what) + ": point outside the open unit disk");
    }
}

Complex mobius_raw(Complex a, Complex z) {
    return (a - z) / (1.0 - std::conj(a) * z);
}

bool same_coords(Complex a, Complex b) {
    return a.real() == b.real() && a.imag() == b.imag();
}

}  // namespace

DiskPoint DiskPoint::xy(double re, double im) { return from(Complex{re, im}); }

DiskPoint DiskPoint::from(Complex z) {
    require_in_disk(z, "DiskPoint");
    DiskPoint p;
    p.z_ = z;
    return p;
}

DiskPoint DiskPoint::near(const DiskPoint& anchor, double log_rho, Complex direction) {
    if (!(log_rho <= 0.0)) {
        throw std::invalid_argument("DiskPoint::near: log_rho must be <= 0");
    }
    double dn = std::abs(direction);
    if (!(dn > 0.0) || !std::isfinite(dn)) {
        throw std::invalid_argument("DiskPoint::near: direction must be a nonzero complex");
    }
    Complex u = direction / dn;
    Complex w = std::exp(log_rho) * u;  // collapses to 0 when log_rho is very negative
    DiskPoint p;
    p.z_ = mobius_raw(anchor.value(), w);
    require_in_disk(p.z_, "DiskPoint::near");
    p.near_ = NearAnchor{anchor.value(), log_rho, u};
    return p;
}

bool operator==(const DiskPoint& a, const DiskPoint& b) {
    if (a.anchored() != b.anchored()) return false;
    if (!a.anchored()) return same_coords(a.z_, b.z_);
    const NearAnchor& x = a.anchor_form();
    const NearAnchor& y = b.anchor_form();
    return same_coords(x.anchor, y.anchor) && x.log_rho == y.log_rho &&
           same_coords(x.direction, y.direction);
}

double pseudo_distance(const DiskPoint& z, const DiskPoint& w) {
    if (z.anchored() || w.anchored()) {
        double lr = log_pseudo_distance(z, w);
        return lr == -kInf ? 0.0 : std::exp(lr);
    }
    return std::abs(z.value() - w.value()) / std::abs(1.0 - std::conj(z.value()) * w.value());
}

double log_pseudo_distance(const DiskPoint& z, const DiskPoint& w) {
    // Both points hanging off the same anchor: work in the Mobius chart,
    // where they sit at e^{L} * u. rho is invariant under the chart map.
    if (z.anchored() && w.anchored() &&
        same_coords(z.anchor_form().anchor, w.anchor_form().anchor)) {
        const NearAnchor& a = z.anchor_form();
        const NearAnchor& b = w.anchor_form();
        double m = std::max(a.log_rho, b.log_rho);
        if (m == -kInf) return -kInf;
        Complex pa = std::exp(a.log_rho - m) * a.direction;
        Complex pb = std::exp(b.log_rho - m) * b.direction;
        double num = std::abs(pa - pb);
        if (num == 0.0) return -kInf;
        // |1 - conj(z)w| in the chart; both |z|,|w| <= e^m <= 1
        double den = std::abs(1.0 - std::exp(2.0 * m) * std::conj(pa) * pb);
        return m + std::log(num) - std::log(den);
    }
    // One point anchored at the other: its stored log distance is exact.
    if (z.anchored() && !w.anchored() && same_coords(z.anchor_form().anchor, w.value())) {
        return z.anchor_form().log_rho;
    }
    if (w.anchored() && !z.anchored() && same_coords(w.anchor_form().anchor, z.value())) {
        return w.anchor_form().log_rho;
    }
    double num = std::abs(z.value() - w.value());
    if (num == 0.0) return -kInf;
    return std::log(num) - std::log(std::abs(1.0 - std::conj(z.value()) * w.value()));
}

Complex blaschke_factor(const DiskPoint& lambda, const DiskPoint& z) {
    Complex l = lambda.value();
    Complex x = z.value();
    if (l == 0.0) return x;  // b_0(z) = z by the normalization convention
    return (std::conj(l) / std::abs(l)) * (l - x) / (1.0 - std::conj(l) * x);
}

Complex blaschke_factor_derivative(const DiskPoint& lambda, const DiskPoint& z) {
    Complex l = lambda.value();
    Complex x = z.value();
    if (l == 0.0) return Complex{1.0, 0.0};
    Complex d = 1.0 - std::conj(l) * x;
    return -(std::conj(l) / std::abs(l)) * (1.0 - std::norm(l)) / (d * d);
}

double poisson_kernel(const DiskPoint& z, Complex zeta) {
    double zn = std::abs(zeta);
    if (!(std::abs(zn - 1.0) < 1e-9)) {
        throw std::domain_error("poisson_kernel: zeta must lie on the unit circle");
    }
    return (1.0 - std::norm(z.value())) / std::norm(zeta - z.value());
}

std::pair<double, double> harnack_bounds(double rho) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("harnack_bounds: rho must be in [0, 1)");
    }
    return {(1.0 - rho) / (1.0 + rho), (1.0 + rho) / (1.0 - rho)};
}

DiskPoint mobius(const DiskPoint& a, const DiskPoint& z) {
    return DiskPoint::from(mobius_raw(a.value(), z.value()));
}

double PseudoDisk::radius() const { return std::exp(log_radius); }

EuclideanDisk pseudo_to_euclidean(const PseudoDisk& d) {
    if (!(d.log_radius < 0.0)) {
        throw std::invalid_argument("pseudo_to_euclidean: log_radius must be < 0");
    }
    Complex c = d.center.value();
    double r = std::exp(d.log_radius);
    double c2 = std::norm(c);
    double den = 1.0 - r * r * c2;
    EuclideanDisk out;
    out.center = c * (1.0 - r * r) / den;
    out.radius = r * (1.0 - c2) / den;
    if (out.radius < 1e-300) {
        throw std::underflow_error("pseudo_to_euclidean: Euclidean radius underflows");
    }
    return out;
}

}  // namespace disklab
