#pragma once

#include <string>
#include <utility>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/geometry.hpp"
#include "disklab/majorant.hpp"

namespace disklab {

// Generators of a finitely generated ideal, reduced to Blaschke products.
struct GeneratorTuple {
    std::vector<BlaschkeProduct> generators;  // 1..8 entries
    std::vector<std::string> labels;

    static GeneratorTuple of(std::vector<BlaschkeProduct> gens,
                             std::vector<std::string> labels = {});
};

// Hyperbolically quasi-uniform sample grid: rings r_j = 1 - 2^-j carrying
// 2^j q equispaced angles, j = 1..J.
struct SampleGrid {
    std::vector<DiskPoint> points;
    int rings = 0;
    int base_angles = 0;

    static SampleGrid whitney(int rings_j, int angles_q);
    // Same rings plus caller-supplied points (e.g. the zeros under study).
    SampleGrid with_points(const std::vector<DiskPoint>& extra) const;
};

// k(z) = sum_i(|f_i(z)| + (1-|z|^2)|f_i'(z)|), plain arithmetic.
double corona_quantity(const GeneratorTuple& g, const DiskPoint& z);

// log k(z) via log-sum-exp; stays finite where every term underflows.
double log_corona_quantity(const GeneratorTuple& g, const DiskPoint& z);

// log sum_i |f_i(z)|; -infinity iff all generators vanish at z.
double log_sum_moduli(const GeneratorTuple& g, const DiskPoint& z);

// Corona-condition fit: H(z_j) >= -log sum_i |f_i(z_j)| on the grid. A grid
// point killing every generator is an error, except for a single generator
// with a simple zero there, where the deleted value stands in.
MajorantFit fit_corona_majorant(const GeneratorTuple& g, const SampleGrid& grid,
                                const FitOptions& options);

// Fit for the derivative-augmented corona quantity: H(z_j) >= -log k(z_j).
MajorantFit fit_condition_c_majorant(const GeneratorTuple& g, const SampleGrid& grid,
                                     const FitOptions& options);

// Membership cost: H(z_j) >= log|f(z_j)| - p log sum_i |f_i(z_j)|, p >= 1.
MajorantFit j_membership_cost(const BlaschkeProduct& f, const GeneratorTuple& g,
                              const SampleGrid& grid, double exponent_p,
                              const FitOptions& options);

// f = B1^N B2^N against generators (B1^{N+1}, B2^{N+1}).
std::pair<BlaschkeProduct, GeneratorTuple> build_f2_example(const BlaschkeProduct& b1,
                                                            const BlaschkeProduct& b2, int n);

// (B1^2, B2^2, B1 B2).
GeneratorTuple build_tres_example(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

// Divides the zeros shared by every generator out of each zero list. The
// common Blaschke product is returned through `common` when requested.
GeneratorTuple reduce_common_zeros(const GeneratorTuple& g, BlaschkeProduct* common = nullptr);

}  // namespace disklab
