#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "disklab/geometry.hpp"

namespace disklab {

struct Zero {
    DiskPoint point;
    int multiplicity = 1;
};

// A finite list of distinct disk points with multiplicities. The Blaschke
// sum sum_n mult_n (1 - |lambda_n|) is precomputed on construction.
class ZeroSequence {
public:
    ZeroSequence() = default;

    static ZeroSequence from_points(std::vector<DiskPoint> points);
    static ZeroSequence from_zeros(std::vector<Zero> zeros);

    const std::vector<Zero>& zeros() const { return zeros_; }
    const DiskPoint& point(std::size_t n) const { return zeros_[n].point; }
    std::size_t size() const { return zeros_.size(); }
    bool empty() const { return zeros_.empty(); }
    int degree() const { return degree_; }
    bool simple() const;  // all multiplicities equal 1
    double blaschke_sum() const { return blaschke_sum_; }

    ZeroSequence truncated(std::size_t count) const;

private:
    std::vector<Zero> zeros_;
    int degree_ = 0;
    double blaschke_sum_ = 0.0;
};

enum class CachePolicy {
    none,
    per_point_memo,  // memoizes log_modulus per plain evaluation point
};

// Finite Blaschke product with the zeros of a ZeroSequence.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    explicit BlaschkeProduct(ZeroSequence zeros, CachePolicy cache = CachePolicy::none)
        : zeros_(std::move(zeros)) {
        if (cache == CachePolicy::per_point_memo) memo_ = std::make_shared<Memo>();
    }

    const ZeroSequence& zeros() const { return zeros_; }
    std::size_t size() const { return zeros_.size(); }
    CachePolicy cache_policy() const {
        return memo_ ? CachePolicy::per_point_memo : CachePolicy::none;
    }

    // log|B(z)| = sum_n mult_n log rho(z, lambda_n); -infinity iff z is a zero.
    // Term-by-term in the log domain, so no product underflow, and exact for
    // anchored points measured against their anchors.
    double log_modulus(const DiskPoint& z) const;

    // Plain complex product; |eval(z)| can underflow where log_modulus stays
    // informative.
    Complex eval(const DiskPoint& z) const;

    // B'(z) = sum_n (B/b_n)(z) b_n'(z), with the exact single-term form at a
    // simple zero. Deleted products are built by exclusion, never division.
    Complex derivative(const DiskPoint& z) const;

    // log|B'(z)| via a complex log-sum-exp over the derivative terms; usable
    // where the direct sum underflows.
    double log_derivative_modulus(const DiskPoint& z) const;

    // log|B_n(lambda_n)| = sum_{k != n} mult_k log rho(lambda_k, lambda_n).
    // -infinity when the zero has multiplicity > 1. Empty deleted products
    // give 0.
    double deleted_log_product(std::size_t n) const;

private:
    struct Memo {
        mutable std::mutex lock;
        mutable std::unordered_map<std::uint64_t, double> values;
    };

    double log_modulus_uncached(const DiskPoint& z) const;

    ZeroSequence zeros_;
    std::shared_ptr<Memo> memo_;  // null unless per_point_memo
};

// B^n realized as multiplicities scaled by n.
BlaschkeProduct pow(const BlaschkeProduct& b, int n);

// Product of two zero-disjoint Blaschke products; throws on a shared zero.
BlaschkeProduct product(const BlaschkeProduct& a, const BlaschkeProduct& b);

// exp(min_n deleted log product); 1 for a singleton.
double carleson_delta(const ZeroSequence& seq);

// inf_{k != n} rho(lambda_k, lambda_n); 1 for a singleton by convention.
double separation(const ZeroSequence& seq);

// sum over {k != n : rho(lambda_k, lambda_n) <= c} of mult_k log rho.
double local_log_product(const ZeroSequence& seq, std::size_t n, double c);

}  // namespace disklab
