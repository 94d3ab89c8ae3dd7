#include "disklab/blaschke.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace disklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const std::vector<Zero>& zeros) {
    for (const Zero& z : zeros) {
        if (z.multiplicity < 1) {
            throw std::invalid_argument("ZeroSequence: multiplicity must be >= 1");
        }
    }
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        for (std::size_t j = i + 1; j < zeros.size(); ++j) {
            if (log_pseudo_distance(zeros[i].point, zeros[j].point) == -kInf) {
                throw std::invalid_argument("ZeroSequence: points must be pairwise distinct");
            }
        }
    }
}

}  // namespace

ZeroSequence ZeroSequence::from_points(std::vector<DiskPoint> points) {
    std::vector<Zero> zs;
    zs.reserve(points.size());
    for (DiskPoint& p : points) zs.push_back(Zero{std::move(p), 1});
    return from_zeros(std::move(zs));
}

ZeroSequence ZeroSequence::from_zeros(std::vector<Zero> zeros) {
    validate(zeros);
    ZeroSequence seq;
    seq.zeros_ = std::move(zeros);
    for (const Zero& z : seq.zeros_) {
        seq.degree_ += z.multiplicity;
        seq.blaschke_sum_ += z.multiplicity * (1.0 - z.point.abs());
    }
    return seq;
}

bool ZeroSequence::simple() const {
    for (const Zero& z : zeros_) {
        if (z.multiplicity != 1) return false;
    }
    return true;
}

ZeroSequence ZeroSequence::truncated(std::size_t count) const {
    std::vector<Zero> zs(zeros_.begin(), zeros_.begin() + std::min(count, zeros_.size()));
    return from_zeros(std::move(zs));
}

double BlaschkeProduct::log_modulus_uncached(const DiskPoint& z) const {
    double sum = 0.0;
    for (const Zero& zero : zeros_.zeros()) {
        double lr = log_pseudo_distance(z, zero.point);
        if (lr == -kInf) return -kInf;
        sum += zero.multiplicity * lr;
    }
    return sum;
}

double BlaschkeProduct::log_modulus(const DiskPoint& z) const {
    if (!memo_ || z.anchored()) return log_modulus_uncached(z);
    // key the memo on the exact coordinate bits
    std::uint64_t re_bits, im_bits;
    double re = z.re(), im = z.im();
    std::memcpy(&re_bits, &re, sizeof re_bits);
    std::memcpy(&im_bits, &im, sizeof im_bits);
    std::uint64_t key = re_bits ^ (im_bits * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL);
    {
        std::lock_guard<std::mutex> guard(memo_->lock);
        auto it = memo_->values.find(key);
        if (it != memo_->values.end()) return it->second;
    }
    double value = log_modulus_uncached(z);
    std::lock_guard<std::mutex> guard(memo_->lock);
    memo_->values.emplace(key, value);
    return value;
}

Complex BlaschkeProduct::eval(const DiskPoint& z) const {
    Complex prod{1.0, 0.0};
    for (const Zero& zero : zeros_.zeros()) {
        Complex f = blaschke_factor(zero.point, z);
        for (int m = 0; m < zero.multiplicity; ++m) prod *= f;
    }
    return prod;
}

Complex BlaschkeProduct::derivative(const DiskPoint& z) const {
    const std::vector<Zero>& zs = zeros_.zeros();
    const std::size_t n = zs.size();
    if (n == 0) return Complex{0.0, 0.0};

    std::vector<Complex> f(n);
    std::size_t at_zero = n;  // index of a zero matching z exactly, if any
    for (std::size_t k = 0; k < n; ++k) {
        f[k] = blaschke_factor(zs[k].point, z);
        if (f[k] == Complex{0.0, 0.0}) at_zero = k;
    }

    if (at_zero < n) {
        // Exact single-term form at a zero; order >= 2 kills the derivative.
        if (zs[at_zero].multiplicity > 1) return Complex{0.0, 0.0};
        Complex term = blaschke_factor_derivative(zs[at_zero].point, z);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == at_zero) continue;
            for (int m = 0; m < zs[k].multiplicity; ++m) term *= f[k];
        }
        return term;
    }

    // Deleted products by prefix/suffix accumulation, no division.
    std::vector<Complex> pow_f(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex p{1.0, 0.0};
        for (int m = 0; m < zs[k].multiplicity; ++m) p *= f[k];
        pow_f[k] = p;
    }
    std::vector<Complex> prefix(n + 1), suffix(n + 1);
    prefix[0] = Complex{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * pow_f[k];
    suffix[n] = Complex{1.0, 0.0};
    for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * pow_f[k];

    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        Complex term = static_cast<double>(zs[k].multiplicity) *
                       blaschke_factor_derivative(zs[k].point, z) * prefix[k] * suffix[k + 1];
        for (int m = 0; m + 1 < zs[k].multiplicity; ++m) term *= f[k];
        sum += term;
    }
    return sum;
}

double BlaschkeProduct::log_derivative_modulus(const DiskPoint& z) const {
    const std::vector<Zero>& zs = zeros_.zeros();
    const std::size_t n = zs.size();
    if (n == 0) return -kInf;

    std::vector<double> log_rho(n);
    std::vector<Complex> phase(n);
    for (std::size_t k = 0; k < n; ++k) {
        log_rho[k] = log_pseudo_distance(z, zs[k].point);
        Complex f = blaschke_factor(zs[k].point, z);
        double fa = std::abs(f);
        phase[k] = fa > 0.0 ? f / fa : Complex{1.0, 0.0};
    }

    double total = 0.0;  // sum of all mult*log_rho; -inf when z hits a zero
    for (std::size_t k = 0; k < n; ++k) total += zs[k].multiplicity * log_rho[k];

    // term_k = mult_k * b_k'(z) * f_k^{mult_k - 1} * prod_{i != k} f_i^{mult_i}
    std::vector<double> term_log(n);
    std::vector<Complex> term_phase(n);
    double max_log = -kInf;
    for (std::size_t k = 0; k < n; ++k) {
        double lg;
        if (std::isfinite(total)) {
            lg = total - log_rho[k];
        } else {
            int reps = zs[k].multiplicity - 1;
            lg = reps == 0 ? 0.0 : reps * log_rho[k];
            for (std::size_t i = 0; i < n; ++i) {
                if (i != k) lg += zs[i].multiplicity * log_rho[i];
            }
        }
        Complex db = blaschke_factor_derivative(zs[k].point, z);
        double dba = std::abs(db);
        lg += std::log(static_cast<double>(zs[k].multiplicity)) + std::log(dba);
        Complex ph = db / dba;
        if (std::isfinite(lg)) {
            for (std::size_t i = 0; i < n; ++i) {
                int reps = (i == k) ? zs[i].multiplicity - 1 : zs[i].multiplicity;
                for (int m = 0; m < reps; ++m) ph *= phase[i];
            }
        }
        term_log[k] = lg;
        term_phase[k] = ph;
        max_log = std::max(max_log, lg);
    }
    if (max_log == -kInf) return -kInf;

    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        if (term_log[k] == -kInf) continue;
        acc += std::exp(term_log[k] - max_log) * term_phase[k];
    }
    double a = std::abs(acc);
    return a == 0.0 ? -kInf : max_log + std::log(a);
}

double BlaschkeProduct::deleted_log_product(std::size_t n) const {
    const std::vector<Zero>& zs = zeros_.zeros();
    if (n >= zs.size()) throw std::out_of_range("deleted_log_product: index");
    if (zs[n].multiplicity > 1) return -kInf;
    double sum = 0.0;
    for (std::size_t k = 0; k < zs.size(); ++k) {
        if (k == n) continue;
        sum += zs[k].multiplicity * log_pseudo_distance(zs[k].point, zs[n].point);
    }
    return sum;
}

BlaschkeProduct pow(const BlaschkeProduct& b, int n) {
    if (n < 1) throw std::invalid_argument("pow: exponent must be >= 1");
    std::vector<Zero> zs = b.zeros().zeros();
    for (Zero& z : zs) z.multiplicity *= n;
    return BlaschkeProduct(ZeroSequence::from_zeros(std::move(zs)));
}

BlaschkeProduct product(const BlaschkeProduct& a, const BlaschkeProduct& b) {
    std::vector<Zero> zs = a.zeros().zeros();
    const std::vector<Zero>& other = b.zeros().zeros();
    zs.insert(zs.end(), other.begin(), other.end());
    // from_zeros rejects shared zeros via the distinctness check
    return BlaschkeProduct(ZeroSequence::from_zeros(std::move(zs)));
}

double carleson_delta(const ZeroSequence& seq) {
    if (seq.empty()) throw std::invalid_argument("carleson_delta: empty sequence");
    BlaschkeProduct b{seq};
    double min_log = 0.0;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        min_log = std::min(min_log, b.deleted_log_product(n));
    }
    return std::exp(min_log);
}

double separation(const ZeroSequence& seq) {
    if (seq.empty()) throw std::invalid_argument("separation: empty sequence");
    if (seq.size() == 1 && seq.degree() == 1) return 1.0;
    double best = 1.0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq.zeros()[i].multiplicity > 1) return 0.0;
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            best = std::min(best, pseudo_distance(seq.point(i), seq.point(j)));
        }
    }
    return best;
}

double local_log_product(const ZeroSequence& seq, std::size_t n, double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("local_log_product: c must be in (0,1)");
    if (n >= seq.size()) throw std::out_of_range("local_log_product: index");
    double log_c = std::log(c);
    double sum = 0.0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k == n) continue;
        double lr = log_pseudo_distance(seq.point(k), seq.point(n));
        if (lr <= log_c) sum += seq.zeros()[k].multiplicity * lr;
    }
    return sum;
}

}  // namespace disklab
