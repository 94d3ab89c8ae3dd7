#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/geometry.hpp"
#include "disklab/rng.hpp"

namespace testsupport {

using disklab::Complex;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline disklab::DiskPoint random_point(disklab::CounterRng& rng, double max_abs = 0.95) {
    double r = max_abs * std::sqrt(rng.uniform());
    double th = kTwoPi * rng.uniform();
    return disklab::DiskPoint::from(std::polar(r, th));
}

inline const std::vector<Complex>& boundary_grid() {
    static const std::vector<Complex> grid = [] {
        std::vector<Complex> g(1 << 14);
        for (std::size_t j = 0; j < g.size(); ++j) {
            g[j] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(g.size()));
        }
        return g;
    }();
    return grid;
}

// Analytic test function: polynomial with sup-norm 1 on the 2^14 boundary
// grid (the documented sup-norm approximation).
struct Poly {
    std::vector<Complex> coef;

    Complex eval(Complex z) const {
        Complex acc{0.0, 0.0};
        for (std::size_t i = coef.size(); i-- > 0;) acc = acc * z + coef[i];
        return acc;
    }
    Complex deriv(Complex z) const {
        Complex acc{0.0, 0.0};
        for (std::size_t i = coef.size(); i-- > 1;) {
            acc = acc * z + static_cast<double>(i) * coef[i];
        }
        return acc;
    }

    static Poly random_normalized(disklab::CounterRng& rng, int max_deg) {
        Poly p;
        int deg = 1 + static_cast<int>(rng.uniform() * max_deg);
        p.coef.resize(deg + 1);
        for (Complex& c : p.coef) {
            c = Complex{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
        }
        double sup = 0.0;
        for (Complex zeta : boundary_grid()) sup = std::max(sup, std::abs(p.eval(zeta)));
        for (Complex& c : p.coef) c /= sup;
        return p;
    }
};

inline disklab::BlaschkeProduct random_blaschke(disklab::CounterRng& rng, int max_zeros,
                                                double max_abs = 0.9) {
    int count = 1 + static_cast<int>(rng.uniform() * max_zeros);
    std::vector<disklab::DiskPoint> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(random_point(rng, max_abs));
    return disklab::BlaschkeProduct{disklab::ZeroSequence::from_points(std::move(pts))};
}

}  // namespace testsupport
