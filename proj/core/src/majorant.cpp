#include "disklab/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "disklab/simplex.hpp"

namespace disklab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate(const BoundaryMeasure& mu) {
    if (mu.nodes.size() != mu.weights.size()) {
        throw std::invalid_argument("BoundaryMeasure: nodes/weights size mismatch");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < mu.nodes.size(); ++j) {
        if (!(mu.weights[j] >= 0.0)) {
            throw std::invalid_argument("BoundaryMeasure: negative weight");
        }
        if (!(mu.nodes[j] >= 0.0 && mu.nodes[j] < kTwoPi)) {
            throw std::invalid_argument("BoundaryMeasure: node outside [0, 2pi)");
        }
        if (j > 0 && !(mu.nodes[j] > mu.nodes[j - 1])) {
            throw std::invalid_argument("BoundaryMeasure: nodes must be strictly increasing");
        }
        sum += mu.weights[j];
    }
    if (std::abs(sum - mu.total_mass) > 1e-12 * (1.0 + sum)) {
        throw std::invalid_argument("BoundaryMeasure: total_mass inconsistent");
    }
}

}  // namespace

BoundaryMeasure BoundaryMeasure::atoms(std::vector<double> nodes, std::vector<double> weights) {
    BoundaryMeasure mu;
    mu.nodes = std::move(nodes);
    mu.weights = std::move(weights);
    for (double w : mu.weights) mu.total_mass += w;
    validate(mu);
    return mu;
}

BoundaryMeasure BoundaryMeasure::uniform(double mass, int node_count) {
    if (node_count < 1) throw std::invalid_argument("BoundaryMeasure::uniform: node_count");
    std::vector<double> nodes(node_count), weights(node_count, mass / node_count);
    for (int j = 0; j < node_count; ++j) nodes[j] = kTwoPi * j / node_count;
    return atoms(std::move(nodes), std::move(weights));
}

BoundaryMeasure BoundaryMeasure::atom(double theta, double weight) {
    return atoms({theta}, {weight});
}

double eval_majorant(const BoundaryMeasure& mu, const DiskPoint& z) {
    double sum = 0.0;
    for (std::size_t j = 0; j < mu.nodes.size(); ++j) {
        if (mu.weights[j] == 0.0) continue;
        Complex zeta = std::polar(1.0, mu.nodes[j]);
        sum += mu.weights[j] * poisson_kernel(z, zeta);
    }
    return sum;
}

double harmonic_conjugate(const BoundaryMeasure& mu, const DiskPoint& z) {
    double sum = 0.0;
    for (std::size_t j = 0; j < mu.nodes.size(); ++j) {
        if (mu.weights[j] == 0.0) continue;
        Complex zeta = std::polar(1.0, mu.nodes[j]);
        sum += mu.weights[j] * std::imag((zeta + z.value()) / (zeta - z.value()));
    }
    return sum;
}

namespace {

std::vector<double> build_nodes(const std::vector<FitConstraint>& rows, const FitOptions& opt) {
    if (opt.node_count < 8) {
        throw std::invalid_argument("fit_min_majorant: node_count must be >= 8");
    }
    std::vector<double> nodes(opt.node_count);
    for (int j = 0; j < opt.node_count; ++j) nodes[j] = kTwoPi * j / opt.node_count;
    if (opt.placement == NodePlacement::equispaced_plus_peaks) {
        for (const FitConstraint& row : rows) {
            for (const DiskPoint& p : row.points) {
                double th = std::arg(p.value());
                if (th < 0.0) th += kTwoPi;
                if (th >= kTwoPi) th = 0.0;
                nodes.push_back(th);
            }
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end(),
                                [](double a, double b) { return std::abs(a - b) < 1e-14; }),
                    nodes.end());
    }
    return nodes;
}

}  // namespace

MajorantFit fit_min_majorant_rows(std::vector<FitConstraint> rows, const FitOptions& options) {
    if (rows.empty()) throw std::invalid_argument("fit_min_majorant: no constraints");
    for (FitConstraint& row : rows) {
        if (row.points.empty()) throw std::invalid_argument("fit_min_majorant: empty row");
        row.lower_bound = std::max(0.0, row.lower_bound);
    }

    std::vector<double> nodes = build_nodes(rows, options);
    const std::size_t k = nodes.size();
    if (k > 8192) {
        throw std::invalid_argument("fit_min_majorant: node count beyond the solver budget");
    }

    // Rows clamped to zero are vacuously satisfied; only the rest enter the
    // program. Grids routinely clamp most of their points.
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].lower_bound > 0.0) live.push_back(i);
    }
    if (live.size() > 20000) {
        throw std::runtime_error(
            "fit_min_majorant: active constraint count beyond the dense solver budget");
    }

    const std::size_t m = live.size();
    Matrix kernel(m, k);
    std::vector<double> bounds(m);
    for (std::size_t i = 0; i < m; ++i) {
        bounds[i] = rows[live[i]].lower_bound;
        for (std::size_t j = 0; j < k; ++j) {
            Complex zeta = std::polar(1.0, nodes[j]);
            double v = 0.0;
            for (const DiskPoint& p : rows[live[i]].points) v += poisson_kernel(p, zeta);
            kernel.at(i, j) = v;
        }
    }

    CoveringResult lp;
    lp.weights.assign(k, 0.0);
    if (m > 0) lp = solve_min_covering(kernel, bounds);

    MajorantFit fit;
    fit.lp_iterations = lp.iterations;

    // Multiplicative lift so every clamped constraint holds with nonnegative
    // slack despite fp noise in the solve.
    double lift = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        double h = 0.0;
        for (std::size_t j = 0; j < k; ++j) h += lp.weights[j] * kernel.at(i, j);
        if (h > 0.0) lift = std::max(lift, bounds[i] / h);
    }
    if (lift > 1.0 + 1e-6) {
        throw std::runtime_error("fit_min_majorant: solver left a visibly infeasible fit");
    }
    for (double& w : lp.weights) w *= lift;
    lp.mass *= lift;

    fit.measure = BoundaryMeasure::atoms(std::move(nodes), std::move(lp.weights));
    fit.objective = lp.mass;
    fit.status = lp.mass > options.mass_cap ? FitStatus::infeasible_at_mass_cap
                                            : FitStatus::optimal;
    fit.slack.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double h = 0.0;
        for (const DiskPoint& p : rows[i].points) h += eval_majorant(fit.measure, p);
        fit.slack[i] = h - rows[i].lower_bound;
    }
    fit.constraints = std::move(rows);
    return fit;
}

MajorantFit fit_min_majorant(const std::vector<std::pair<DiskPoint, double>>& constraints,
                             const FitOptions& options) {
    // Coincident points with different bounds signal malformed input. An
    // anchored point and its anchor share coordinates but are distinct.
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        for (std::size_t j = i + 1; j < constraints.size(); ++j) {
            if (constraints[i].first == constraints[j].first &&
                std::max(0.0, constraints[i].second) != std::max(0.0, constraints[j].second)) {
                throw std::invalid_argument(
                    "fit_min_majorant: coincident constraint points with different bounds");
            }
        }
    }
    std::vector<FitConstraint> rows;
    rows.reserve(constraints.size());
    for (const auto& [p, c] : constraints) rows.push_back(FitConstraint{{p}, c});
    return fit_min_majorant_rows(std::move(rows), options);
}

MajorantFit check_interpolation(const ZeroSequence& seq, const FitOptions& options) {
    if (seq.empty()) throw std::invalid_argument("check_interpolation: empty sequence");
    if (!seq.simple()) throw std::invalid_argument("check_interpolation: zeros must be simple");
    BlaschkeProduct b{seq};
    std::vector<std::pair<DiskPoint, double>> cons;
    cons.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        cons.emplace_back(seq.point(n), -b.deleted_log_product(n));
    }
    return fit_min_majorant(cons, options);
}

MajorantFit check_local_interpolation(const ZeroSequence& seq, double c, const FitOptions& options) {
    if (seq.empty()) throw std::invalid_argument("check_local_interpolation: empty sequence");
    if (!seq.simple()) throw std::invalid_argument("check_local_interpolation: zeros must be simple");
    std::vector<std::pair<DiskPoint, double>> cons;
    cons.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        cons.emplace_back(seq.point(n), -local_log_product(seq, n, c));
    }
    return fit_min_majorant(cons, options);
}

MajorantFit check_trace(const ZeroSequence& seq, const std::vector<double>& log_abs_values,
                        const FitOptions& options) {
    if (seq.size() != log_abs_values.size()) {
        throw std::invalid_argument("check_trace: values size mismatch");
    }
    std::vector<std::pair<DiskPoint, double>> cons;
    cons.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        cons.emplace_back(seq.point(n), std::max(0.0, log_abs_values[n]));
    }
    return fit_min_majorant(cons, options);
}

Complex divided_difference(Complex w_n, Complex w_k, const DiskPoint& lambda_n,
                           const DiskPoint& lambda_k) {
    Complex den = blaschke_factor(lambda_n, lambda_k);
    if (den == Complex{0.0, 0.0}) {
        throw std::invalid_argument("divided_difference: coincident points");
    }
    return (w_k - w_n) / den;
}

MajorantFit check_union_trace(const ZeroSequence& seq, const std::vector<Complex>& values,
                              const FitOptions& options) {
    if (seq.size() != values.size()) {
        throw std::invalid_argument("check_union_trace: values size mismatch");
    }
    const std::size_t n = seq.size();
    if (n < 2) throw std::invalid_argument("check_union_trace: need at least two points");
    if (n * (n - 1) / 2 > 1'000'000) {
        throw std::invalid_argument("check_union_trace: pair count exceeds 1e6");
    }
    std::vector<FitConstraint> rows;
    rows.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // log domain: the pair distance can be far below double range
            double log_rho = log_pseudo_distance(seq.point(i), seq.point(j));
            double diff = std::abs(values[j] - values[i]);
            double bound = diff == 0.0 ? 0.0 : std::log(diff) - log_rho;
            rows.push_back(FitConstraint{{seq.point(i), seq.point(j)}, std::max(0.0, bound)});
        }
    }
    return fit_min_majorant_rows(std::move(rows), options);
}

}  // namespace disklab
