#include "disklab/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace disklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double logsumexp(const std::vector<double>& terms) {
    double m = -kInf;
    for (double t : terms) m = std::max(m, t);
    if (m == -kInf) return -kInf;
    double s = 0.0;
    for (double t : terms) {
        if (t != -kInf) s += std::exp(t - m);
    }
    return m + std::log(s);
}

}  // namespace

GeneratorTuple GeneratorTuple::of(std::vector<BlaschkeProduct> gens,
                                  std::vector<std::string> labels) {
    if (gens.empty() || gens.size() > 8) {
        throw std::invalid_argument("GeneratorTuple: need between 1 and 8 generators");
    }
    if (!labels.empty() && labels.size() != gens.size()) {
        throw std::invalid_argument("GeneratorTuple: labels size mismatch");
    }
    GeneratorTuple g;
    g.generators = std::move(gens);
    if (labels.empty()) {
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
            g.labels.push_back("f" + std::to_string(i + 1));
        }
    } else {
        g.labels = std::move(labels);
    }
    return g;
}

SampleGrid SampleGrid::whitney(int rings_j, int angles_q) {
    if (rings_j < 1 || angles_q < 1 || rings_j > 14 || angles_q > 64) {
        throw std::invalid_argument("SampleGrid: rings in [1,14], angles in [1,64]");
    }
    if ((static_cast<long>(angles_q) << (rings_j + 1)) > 200000) {
        throw std::invalid_argument("SampleGrid: grid size beyond the desk-scale budget");
    }
    SampleGrid grid;
    grid.rings = rings_j;
    grid.base_angles = angles_q;
    for (int j = 1; j <= rings_j; ++j) {
        double r = 1.0 - std::ldexp(1.0, -j);
        long count = static_cast<long>(angles_q) << j;
        for (long t = 0; t < count; ++t) {
            double theta = kTwoPi * static_cast<double>(t) / static_cast<double>(count);
            grid.points.push_back(DiskPoint::from(std::polar(r, theta)));
        }
    }
    return grid;
}

SampleGrid SampleGrid::with_points(const std::vector<DiskPoint>& extra) const {
    SampleGrid grid = *this;
    grid.points.insert(grid.points.end(), extra.begin(), extra.end());
    return grid;
}

double corona_quantity(const GeneratorTuple& g, const DiskPoint& z) {
    double one_minus = 1.0 - std::norm(z.value());
    double sum = 0.0;
    for (const BlaschkeProduct& f : g.generators) {
        sum += std::abs(f.eval(z)) + one_minus * std::abs(f.derivative(z));
    }
    return sum;
}

double log_corona_quantity(const GeneratorTuple& g, const DiskPoint& z) {
    double log_one_minus = std::log1p(-std::norm(z.value()));
    std::vector<double> terms;
    terms.reserve(2 * g.generators.size());
    for (const BlaschkeProduct& f : g.generators) {
        terms.push_back(f.log_modulus(z));
        terms.push_back(log_one_minus + f.log_derivative_modulus(z));
    }
    return logsumexp(terms);
}

double log_sum_moduli(const GeneratorTuple& g, const DiskPoint& z) {
    std::vector<double> terms;
    terms.reserve(g.generators.size());
    for (const BlaschkeProduct& f : g.generators) terms.push_back(f.log_modulus(z));
    return logsumexp(terms);
}

namespace {

// log sum_i |f_i(z)| with the single-generator fallback: when the only
// generator has a simple zero exactly at z, its deleted value stands in.
double corona_bound_term(const GeneratorTuple& g, const DiskPoint& z) {
    double ls = log_sum_moduli(g, z);
    if (ls != -kInf) return ls;
    if (g.generators.size() == 1) {
        const ZeroSequence& zs = g.generators[0].zeros();
        for (std::size_t n = 0; n < zs.size(); ++n) {
            if (log_pseudo_distance(zs.point(n), z) == -kInf && zs.zeros()[n].multiplicity == 1) {
                return g.generators[0].deleted_log_product(n);
            }
        }
    }
    throw std::invalid_argument("fit_corona_majorant: every generator vanishes at a grid point");
}

}  // namespace

MajorantFit fit_corona_majorant(const GeneratorTuple& g, const SampleGrid& grid,
                                const FitOptions& options) {
    if (grid.points.empty()) throw std::invalid_argument("fit_corona_majorant: empty grid");
    std::vector<std::pair<DiskPoint, double>> cons;
    cons.reserve(grid.points.size());
    for (const DiskPoint& z : grid.points) {
        cons.emplace_back(z, -corona_bound_term(g, z));
    }
    return fit_min_majorant(cons, options);
}

MajorantFit fit_condition_c_majorant(const GeneratorTuple& g, const SampleGrid& grid,
                                     const FitOptions& options) {
    if (grid.points.empty()) throw std::invalid_argument("fit_condition_c_majorant: empty grid");
    std::vector<std::pair<DiskPoint, double>> cons;
    cons.reserve(grid.points.size());
    for (const DiskPoint& z : grid.points) {
        double lk = log_corona_quantity(g, z);
        if (lk == -kInf) {
            throw std::invalid_argument("fit_condition_c_majorant: k vanishes at a grid point");
        }
        cons.emplace_back(z, -lk);
    }
    return fit_min_majorant(cons, options);
}

MajorantFit j_membership_cost(const BlaschkeProduct& f, const GeneratorTuple& g,
                              const SampleGrid& grid, double exponent_p,
                              const FitOptions& options) {
    if (grid.points.empty()) throw std::invalid_argument("j_membership_cost: empty grid");
    if (!(exponent_p >= 1.0)) throw std::invalid_argument("j_membership_cost: p must be >= 1");
    std::vector<std::pair<DiskPoint, double>> cons;
    cons.reserve(grid.points.size());
    for (const DiskPoint& z : grid.points) {
        double ls = log_sum_moduli(g, z);
        if (ls == -kInf) {
            throw std::invalid_argument("j_membership_cost: grid hits a common zero");
        }
        double lf = f.log_modulus(z);
        double bound = lf == -kInf ? 0.0 : lf - exponent_p * ls;
        cons.emplace_back(z, bound);
    }
    return fit_min_majorant(cons, options);
}

std::pair<BlaschkeProduct, GeneratorTuple> build_f2_example(const BlaschkeProduct& b1,
                                                            const BlaschkeProduct& b2, int n) {
    if (n < 1) throw std::invalid_argument("build_f2_example: N must be >= 1");
    BlaschkeProduct f = product(pow(b1, n), pow(b2, n));  // rejects shared zeros
    GeneratorTuple g = GeneratorTuple::of({pow(b1, n + 1), pow(b2, n + 1)},
                                          {"B1^" + std::to_string(n + 1),
                                           "B2^" + std::to_string(n + 1)});
    return {std::move(f), std::move(g)};
}

GeneratorTuple build_tres_example(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
    BlaschkeProduct cross = product(b1, b2);  // rejects shared zeros
    return GeneratorTuple::of({pow(b1, 2), pow(b2, 2), std::move(cross)},
                              {"B1^2", "B2^2", "B1*B2"});
}

GeneratorTuple reduce_common_zeros(const GeneratorTuple& g, BlaschkeProduct* common) {
    std::vector<Zero> shared;
    const ZeroSequence& first = g.generators[0].zeros();
    for (std::size_t n = 0; n < first.size(); ++n) {
        int mult = first.zeros()[n].multiplicity;
        bool in_all = true;
        for (std::size_t i = 1; i < g.generators.size() && in_all; ++i) {
            bool found = false;
            for (const Zero& z : g.generators[i].zeros().zeros()) {
                if (z.point == first.point(n)) {
                    mult = std::min(mult, z.multiplicity);
                    found = true;
                    break;
                }
            }
            in_all = found;
        }
        if (in_all && g.generators.size() > 1) {
            shared.push_back(Zero{first.point(n), mult});
        }
    }
    if (common != nullptr) {
        *common = BlaschkeProduct(ZeroSequence::from_zeros(shared));
    }
    if (shared.empty()) return g;

    std::vector<BlaschkeProduct> reduced;
    for (const BlaschkeProduct& f : g.generators) {
        std::vector<Zero> zs;
        for (const Zero& z : f.zeros().zeros()) {
            int drop = 0;
            for (const Zero& s : shared) {
                if (s.point == z.point) {
                    drop = s.multiplicity;
                    break;
                }
            }
            if (z.multiplicity > drop) zs.push_back(Zero{z.point, z.multiplicity - drop});
        }
        reduced.emplace_back(ZeroSequence::from_zeros(std::move(zs)));
    }
    return GeneratorTuple::of(std::move(reduced), g.labels);
}

}  // namespace disklab
