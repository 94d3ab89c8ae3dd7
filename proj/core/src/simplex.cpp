#include "disklab/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace disklab {

namespace {

constexpr double kPivotEps = 1e-11;

}  // namespace

PackingResult simplex_packing(const Matrix& a, const std::vector<double>& b,
                              const std::vector<double>& c) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m || c.size() != n) {
        throw std::invalid_argument("simplex_packing: dimension mismatch");
    }
    for (double v : b) {
        if (!(v >= 0.0)) throw std::invalid_argument("simplex_packing: b must be >= 0");
    }

    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    // Proportional to the objective scale so rescaling the objective does not
    // change the pivot path (the LP homogeneity contract depends on this).
    const double enter_eps = 1e-9 * (1.0 + cmax);

    const std::size_t width = n + m + 1;  // structural | slack | rhs
    std::vector<double> t(m * width, 0.0);
    std::vector<double> z(width, 0.0);
    std::vector<std::size_t> basis(m);

    for (std::size_t i = 0; i < m; ++i) {
        double* row = t.data() + i * width;
        for (std::size_t j = 0; j < n; ++j) row[j] = a.at(i, j);
        row[n + i] = 1.0;
        row[width - 1] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) z[j] = -c[j];

    PackingResult res;
    const long iter_cap = 2000 + 50L * static_cast<long>(m + n);
    // Dantzig pricing until the objective stalls, then Bland to break cycles.
    int stall = 0;
    bool bland = false;
    double last_obj = 0.0;
    while (true) {
        std::size_t enter = width;
        if (bland) {
            for (std::size_t j = 0; j + 1 < width; ++j) {
                if (z[j] < -enter_eps) {
                    enter = j;
                    break;
                }
            }
        } else {
            double most = -enter_eps;
            for (std::size_t j = 0; j + 1 < width; ++j) {
                if (z[j] < most) {
                    most = z[j];
                    enter = j;
                }
            }
        }
        if (enter == width) break;

        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            double aij = t[i * width + enter];
            if (aij > kPivotEps) {
                double ratio = t[i * width + width - 1] / aij;
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 &&
                     (leave == m || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) {
            throw std::runtime_error("simplex_packing: unbounded problem");
        }

        double* prow = t.data() + leave * width;
        double piv = prow[enter];
        for (std::size_t j = 0; j < width; ++j) prow[j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            double* row = t.data() + i * width;
            double f = row[enter];
            if (f != 0.0) {
                for (std::size_t j = 0; j < width; ++j) row[j] -= f * prow[j];
            }
        }
        double f = z[enter];
        if (f != 0.0) {
            for (std::size_t j = 0; j < width; ++j) z[j] -= f * prow[j];
        }
        basis[leave] = enter;

        double obj = z[width - 1];
        if (!bland) {
            stall = (obj > last_obj + 1e-15 * (1.0 + std::abs(last_obj))) ? 0 : stall + 1;
            if (stall > 64) bland = true;
        }
        last_obj = obj;

        if (++res.iterations > iter_cap) {
            throw std::runtime_error("simplex_packing: iteration cap exceeded");
        }
    }

    res.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) res.x[basis[i]] = t[i * width + width - 1];
    }
    res.row_dual.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) res.row_dual[i] = std::max(0.0, z[n + i]);
    res.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    return res;
}

namespace {

// Solve the packing dual restricted to the node rows in `active`; returns
// the dual values (weights) for those rows and the objective.
PackingResult solve_restricted(const Matrix& kernel, const std::vector<double>& bounds,
                               const std::vector<std::size_t>& active) {
    const std::size_t npts = kernel.rows();
    Matrix a(active.size(), npts);
    std::vector<double> b(active.size());
    for (std::size_t r = 0; r < active.size(); ++r) {
        std::size_t j = active[r];
        double rowmax = 0.0;
        for (std::size_t i = 0; i < npts; ++i) rowmax = std::max(rowmax, kernel.at(i, j));
        if (!(rowmax > 0.0)) throw std::invalid_argument("solve_min_covering: zero kernel column");
        for (std::size_t i = 0; i < npts; ++i) a.at(r, i) = kernel.at(i, j) / rowmax;
        b[r] = 1.0 / rowmax;
    }
    return simplex_packing(a, b, bounds);
}

}  // namespace

CoveringResult solve_min_covering(const Matrix& kernel, const std::vector<double>& bounds) {
    const std::size_t npts = kernel.rows();
    const std::size_t nnodes = kernel.cols();
    if (bounds.size() != npts) {
        throw std::invalid_argument("solve_min_covering: dimension mismatch");
    }
    for (double v : bounds) {
        if (!(v >= 0.0)) throw std::invalid_argument("solve_min_covering: bounds must be >= 0");
    }

    CoveringResult out;
    out.weights.assign(nnodes, 0.0);

    bool all_zero = std::all_of(bounds.begin(), bounds.end(), [](double v) { return v == 0.0; });
    if (all_zero || npts == 0) return out;

    const bool dense = nnodes * (npts + nnodes) <= 12'000'000;
    std::vector<std::size_t> active;
    if (dense) {
        active.resize(nnodes);
        std::iota(active.begin(), active.end(), 0);
    } else {
        // Seed with a coarse subset plus each constraint's strongest node.
        std::vector<char> used(nnodes, 0);
        std::size_t stride = std::max<std::size_t>(1, nnodes / 64);
        for (std::size_t j = 0; j < nnodes; j += stride) used[j] = 1;
        for (std::size_t i = 0; i < npts; ++i) {
            std::size_t best = 0;
            double bestv = -1.0;
            for (std::size_t j = 0; j < nnodes; ++j) {
                if (kernel.at(i, j) > bestv) {
                    bestv = kernel.at(i, j);
                    best = j;
                }
            }
            used[best] = 1;
        }
        for (std::size_t j = 0; j < nnodes; ++j) {
            if (used[j]) active.push_back(j);
        }
    }

    PackingResult pr;
    for (std::size_t round = 0;; ++round) {
        pr = solve_restricted(kernel, bounds, active);
        out.iterations += pr.iterations;
        if (dense) break;

        // Most violated node constraints sum_i y_i K_ij <= 1 over all nodes.
        std::vector<char> in_active(nnodes, 0);
        for (std::size_t j : active) in_active[j] = 1;
        std::vector<std::pair<double, std::size_t>> viol;
        for (std::size_t j = 0; j < nnodes; ++j) {
            if (in_active[j]) continue;
            double s = 0.0;
            for (std::size_t i = 0; i < npts; ++i) s += pr.x[i] * kernel.at(i, j);
            if (s > 1.0 + 1e-9) viol.emplace_back(s, j);
        }
        if (viol.empty()) break;
        std::sort(viol.rbegin(), viol.rend());
        for (std::size_t k = 0; k < viol.size() && k < 8; ++k) active.push_back(viol[k].second);
        std::sort(active.begin(), active.end());
        if (round > nnodes) {
            throw std::runtime_error("solve_min_covering: cutting-plane loop did not settle");
        }
    }

    // Duals of the scaled rows, unscaled back to measure weights.
    for (std::size_t r = 0; r < active.size(); ++r) {
        std::size_t j = active[r];
        double rowmax = 0.0;
        for (std::size_t i = 0; i < npts; ++i) rowmax = std::max(rowmax, kernel.at(i, j));
        out.weights[j] = pr.row_dual[r] / rowmax;
    }
    out.mass = 0.0;
    for (double w : out.weights) out.mass += w;
    return out;
}

}  // namespace disklab
