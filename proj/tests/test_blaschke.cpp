#include <doctest.h>

#include <cmath>
#include <limits>

#include "disklab/blaschke.hpp"
#include "disklab/constructions.hpp"
#include "disklab/majorant.hpp"
#include "disklab/rng.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace disklab;
using testsupport::deleted_log_geometric_mpfr;
using testsupport::random_blaschke;
using testsupport::random_point;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("zero sequence invariants") {
    ZeroSequence seq = geometric_sequence(15);
    CHECK(seq.size() == 15);
    double recomputed = 0.0;
    for (const Zero& z : seq.zeros()) recomputed += 1.0 - z.point.abs();
    CHECK(seq.blaschke_sum() == doctest::Approx(recomputed).epsilon(1e-12));
    CHECK(seq.blaschke_sum() == doctest::Approx(1.0 - std::ldexp(1.0, -15)).epsilon(1e-14));

    CHECK_THROWS_AS(ZeroSequence::from_points(
                        {DiskPoint::xy(0.5, 0), DiskPoint::xy(0.5, 0)}),
                    std::invalid_argument);
    CHECK_NOTHROW(ZeroSequence::from_zeros({Zero{DiskPoint::xy(0.5, 0), 3}}));
    CHECK_THROWS_AS(ZeroSequence::from_zeros({Zero{DiskPoint::xy(0.5, 0), 0}}),
                    std::invalid_argument);
}

TEST_CASE("log modulus matches the direct complex product") {
    BlaschkeProduct single{ZeroSequence::from_points({DiskPoint::xy(0.5, 0)})};
    CHECK(single.log_modulus(DiskPoint::xy(0, 0)) == doctest::Approx(std::log(0.5)));
    CHECK(single.log_modulus(DiskPoint::xy(0.5, 0)) == -kInf);

    CounterRng rng(31, 0);
    for (int trial = 0; trial < 20; ++trial) {
        BlaschkeProduct b = random_blaschke(rng, 50);
        for (int i = 0; i < 500; ++i) {
            DiskPoint z = random_point(rng);
            double direct = std::log(std::abs(b.eval(z)));
            double logdom = b.log_modulus(z);
            CHECK(logdom <= 1e-12);
            CHECK(logdom ==
                  doctest::Approx(direct).epsilon(1e-12).scale(std::max(1.0, -logdom)));
        }
    }
}

TEST_CASE("derivative: identity factor and finite differences") {
    BlaschkeProduct ident{ZeroSequence::from_points({DiskPoint::xy(0, 0)})};
    CHECK(ident.eval(DiskPoint::xy(0.3, 0.1)) == Complex{0.3, 0.1});
    CHECK(ident.derivative(DiskPoint::xy(0.3, 0.1)) == Complex{1.0, 0.0});

    CounterRng rng(32, 0);
    const double h = 1e-6;
    for (int trial = 0; trial < 40; ++trial) {
        BlaschkeProduct b = random_blaschke(rng, 30, 0.85);
        for (int i = 0; i < 25; ++i) {
            DiskPoint z = random_point(rng, 0.8);
            Complex fd = (b.eval(DiskPoint::from(z.value() + h)) -
                          b.eval(DiskPoint::from(z.value() - h))) /
                         (2.0 * h);
            Complex an = b.derivative(z);
            CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
        }
    }
}

TEST_CASE("derivative identity at the zeros") {
    CounterRng rng(33, 0);
    for (int trial = 0; trial < 50; ++trial) {
        BlaschkeProduct b = random_blaschke(rng, 25);
        const ZeroSequence& zs = b.zeros();
        for (std::size_t n = 0; n < zs.size(); ++n) {
            double lhs = (1.0 - std::norm(zs.point(n).value())) *
                         std::abs(b.derivative(zs.point(n)));
            double rhs = std::exp(b.deleted_log_product(n));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("deleted log products") {
    BlaschkeProduct pair{ZeroSequence::from_points(
        {DiskPoint::xy(0.5, 0), DiskPoint::xy(-0.5, 0)})};
    CHECK(pair.deleted_log_product(0) == doctest::Approx(std::log(0.8)).epsilon(1e-14));
    BlaschkeProduct single{ZeroSequence::from_points({DiskPoint::xy(0.3, 0.2)})};
    CHECK(single.deleted_log_product(0) == 0.0);

    // geometric radii versus the 100-digit oracle
    ZeroSequence seq = geometric_sequence(15);
    BlaschkeProduct b{seq};
    for (int n = 1; n <= 15; ++n) {
        double ours = b.deleted_log_product(n - 1);
        double oracle = deleted_log_geometric_mpfr(n, 15);
        CHECK(std::abs(ours - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("carleson delta and separation") {
    ZeroSequence singleton = ZeroSequence::from_points({DiskPoint::xy(0.3, 0)});
    CHECK(carleson_delta(singleton) == 1.0);
    CHECK(separation(singleton) == 1.0);

    ZeroSequence pair =
        ZeroSequence::from_points({DiskPoint::xy(0.5, 0), DiskPoint::xy(-0.5, 0)});
    CHECK(carleson_delta(pair) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(separation(pair) == doctest::Approx(0.8).epsilon(1e-14));

    ZeroSequence geo = geometric_sequence(15);
    double expected = kInf;
    for (int n = 1; n < 15; ++n) {
        double a = 1.0 - std::ldexp(1.0, -n), c = 1.0 - std::ldexp(1.0, -(n + 1));
        expected = std::min(expected, (c - a) / (1.0 - a * c));
    }
    CHECK(separation(geo) == doctest::Approx(expected).epsilon(1e-13));
    // nearest-neighbor distance approaches 1/3 from above along the radii
    CHECK(separation(geo) > 1.0 / 3.0);
    CHECK(separation(geo) < 0.34);
}

TEST_CASE("local log product") {
    ZeroSequence pair =
        ZeroSequence::from_points({DiskPoint::xy(0.5, 0), DiskPoint::xy(-0.5, 0)});
    CHECK(local_log_product(pair, 0, 0.5) == 0.0);  // cutoff below separation

    ZeroSequence triple = ZeroSequence::from_points(
        {DiskPoint::xy(0.5, 0), DiskPoint::xy(-0.5, 0), DiskPoint::xy(0.9, 0)});
    double expected = std::log(0.8) + std::log(0.4 / 0.55);
    CHECK(local_log_product(triple, 0, 0.85) == doctest::Approx(expected).epsilon(1e-13));

    // c -> 1 recovers the deleted product
    BlaschkeProduct b{triple};
    CHECK(local_log_product(triple, 0, 1.0 - 1e-12) ==
          doctest::Approx(b.deleted_log_product(0)).epsilon(1e-13));
}

TEST_CASE("derivative bound for zero-free disks") {
    CounterRng rng(34, 0);
    int violations = 0;
    for (int t = 0; t < 1000; ++t) {
        BlaschkeProduct b = random_blaschke(rng, 20);
        DiskPoint z = random_point(rng);
        double dist = 1.0;
        for (const Zero& zero : b.zeros().zeros()) {
            dist = std::min(dist, pseudo_distance(z, zero.point));
        }
        if (dist < 1e-4) continue;
        double delta = 0.9 * dist;  // no zeros in D(z, delta)
        double lhs = (1.0 - std::norm(z.value())) * std::abs(b.derivative(z));
        double mod = std::abs(b.eval(z));
        double rhs = (mod / delta) * std::log(1.0 / (mod * mod));
        if (lhs > rhs + 1e-9) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("rescaled harnack on |B| in zero-free disks") {
    CounterRng rng(35, 0);
    int violations = 0;
    for (int t = 0; t < 1000; ++t) {
        BlaschkeProduct b = random_blaschke(rng, 20);
        DiskPoint z = random_point(rng);
        double dist = 1.0;
        for (const Zero& zero : b.zeros().zeros()) {
            dist = std::min(dist, pseudo_distance(z, zero.point));
        }
        if (dist < 1e-3) continue;
        double delta = 0.9 * dist;
        // a point of D(z, 0.8 delta); rho_Delta is the chart rescaling rho/delta
        double r = 0.8 * delta * rng.uniform();
        DiskPoint w = mobius(z, DiskPoint::from(std::polar(r, 6.28 * rng.uniform())));
        double rho_delta = pseudo_distance(z, w) / delta;
        double log_bz = b.log_modulus(z), log_bw = b.log_modulus(w);
        double upper = (1.0 - rho_delta) / (1.0 + rho_delta) * log_bz;  // log-domain
        double lower = (1.0 + rho_delta) / (1.0 - rho_delta) * log_bz;
        if (log_bw > upper + 1e-9 || log_bw < lower - 1e-9) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("lower bound extends outside the exclusion disks") {
    // With a fitted H certifying log|B(z)| >= -H(z) + log rho(z, Lambda) on a
    // grid, the product stays above e^{-2H-2H_1} off the disks D(lambda_n,
    // e^{-H_1(lambda_n)}).
    ZeroSequence seq = geometric_sequence(8);
    BlaschkeProduct b{seq};

    std::vector<std::pair<DiskPoint, double>> cons;
    CounterRng rng(36, 0);
    std::vector<DiskPoint> grid;
    for (int i = 0; i < 400; ++i) grid.push_back(random_point(rng, 0.995));
    for (const DiskPoint& z : grid) {
        double sum = 0.0, nearest = kInf;
        for (const Zero& zero : seq.zeros()) {
            double lr = log_pseudo_distance(z, zero.point);
            nearest = std::min(nearest, lr);
            sum += lr;
        }
        cons.emplace_back(z, -(sum - nearest));
    }
    FitOptions opt;
    opt.node_count = 256;
    MajorantFit fit = fit_min_majorant(cons, opt);

    BoundaryMeasure h1 = BoundaryMeasure::uniform(2.0 * std::log(3.0), 256);
    int violations = 0;
    for (const DiskPoint& z : grid) {
        bool inside = false;
        for (const Zero& zero : seq.zeros()) {
            if (pseudo_distance(z, zero.point) <
                std::exp(-eval_majorant(h1, zero.point))) {
                inside = true;
                break;
            }
        }
        if (inside) continue;
        double lhs = b.log_modulus(z);
        double rhs = -2.0 * eval_majorant(fit.measure, z) - 2.0 * eval_majorant(h1, z);
        if (lhs < rhs - 1e-9) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("per-point memo cache matches uncached evaluation") {
    CounterRng rng(38, 0);
    ZeroSequence seq = geometric_sequence(10);
    BlaschkeProduct plain{seq};
    BlaschkeProduct cached{seq, CachePolicy::per_point_memo};
    CHECK(plain.cache_policy() == CachePolicy::none);
    CHECK(cached.cache_policy() == CachePolicy::per_point_memo);
    std::vector<DiskPoint> pts;
    for (int i = 0; i < 50; ++i) pts.push_back(random_point(rng));
    for (int pass = 0; pass < 3; ++pass) {
        for (const DiskPoint& z : pts) {
            CHECK(cached.log_modulus(z) == plain.log_modulus(z));
        }
    }
    // anchored points bypass the memo and stay exact
    DiskPoint mu = DiskPoint::near(seq.point(4), -1000.0, Complex{-1, 0});
    CHECK(cached.log_modulus(mu) == plain.log_modulus(mu));
}

TEST_CASE("powers and products of blaschke data") {
    BlaschkeProduct b1{ZeroSequence::from_points({DiskPoint::xy(0.5, 0)})};
    BlaschkeProduct b2{ZeroSequence::from_points({DiskPoint::xy(-0.4, 0.1)})};
    BlaschkeProduct sq = pow(b1, 2);
    CHECK(sq.zeros().degree() == 2);
    DiskPoint z = DiskPoint::xy(0.2, 0.3);
    CHECK(std::abs(sq.eval(z) - b1.eval(z) * b1.eval(z)) < 1e-15);
    CHECK(sq.log_modulus(z) == doctest::Approx(2.0 * b1.log_modulus(z)).epsilon(1e-14));
    // derivative of a double zero vanishes at the zero
    CHECK(std::abs(sq.derivative(DiskPoint::xy(0.5, 0))) == 0.0);

    BlaschkeProduct prod = product(b1, b2);
    CHECK(prod.zeros().degree() == 2);
    CHECK_THROWS_AS(product(b1, b1), std::invalid_argument);

    // log-domain derivative modulus agrees with the direct sum
    CounterRng rng(37, 0);
    for (int i = 0; i < 200; ++i) {
        BlaschkeProduct b = random_blaschke(rng, 12);
        DiskPoint w = random_point(rng, 0.8);
        double direct = std::abs(b.derivative(w));
        if (direct < 1e-30) continue;
        CHECK(b.log_derivative_modulus(w) ==
              doctest::Approx(std::log(direct)).epsilon(1e-9));
    }
}
