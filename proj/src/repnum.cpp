#include "sumsq/repnum.hpp"

#include <stdexcept>

#include "sumsq/gaussian.hpp"

namespace sumsq {

namespace {

// Divisor power sum over d | m/2^r via the factorization of m; empty (0)
// when 2^r does not divide m.
Integer shifted_sum(const Factorization& f, unsigned r, unsigned t, DivisorFilter filter) {
    if (f.exponent_of(2) < r) return 0;
    return divisor_power_sum(f.divided_by(2, r), t, filter);
}

}  // namespace

Integer r_elementary(const RepQuery& q) {
    switch (q.n) {
        case 2: case 4: case 6: case 8: case 10: break;
        default:
            throw std::invalid_argument(
                "r_elementary: no elementary formula for n = " + std::to_string(q.n) +
                "; use r12 for n = 12 or the brute-force oracle");
    }
    if (q.m < 0) throw std::invalid_argument("r_elementary: m must be non-negative");
    if (q.m == 0) return 1;  // the zero vector
    Factorization f = q.factorization ? *q.factorization : factorize(q.m);
    if (q.factorization && f.value() != q.m)
        throw std::invalid_argument("r_elementary: factorization does not reconstruct m");
    switch (q.n) {
        case 2:
            return 4 * divisor_power_sum(f, 0, DivisorFilter::chi4_at_divisor);
        case 4:
            return 8 * divisor_power_sum(f, 1, DivisorFilter::odd_only) +
                   16 * shifted_sum(f, 1, 1, DivisorFilter::odd_only);
        case 6:
            return 16 * divisor_power_sum(f, 2, DivisorFilter::chi4_at_cofactor) -
                   4 * divisor_power_sum(f, 2, DivisorFilter::chi4_at_divisor);
        case 8:
            return 16 * divisor_power_sum(f, 3, DivisorFilter::all) -
                   32 * shifted_sum(f, 1, 3, DivisorFilter::all) +
                   256 * shifted_sum(f, 2, 3, DivisorFilter::all);
        default: {  // n = 10
            Integer sum = 4 * divisor_power_sum(f, 4, DivisorFilter::chi4_at_divisor) +
                          64 * divisor_power_sum(f, 4, DivisorFilter::chi4_at_cofactor) +
                          8 * norm_power_sum(f, 4);
            if (sum % 5 != 0) throw std::logic_error("r_elementary: 1/5 terms failed to cancel");
            return sum / 5;
        }
    }
}

Integer r_elementary(unsigned n, const Integer& m) { return r_elementary({n, m, std::nullopt}); }

Integer r12(const Integer& m, const TruncatedSeries& eta12) {
    if (m < 0) throw std::invalid_argument("r12: m must be non-negative");
    if (m == 0) return 1;
    if (!m.fits_ulong_p() || m.get_ui() > eta12.order())
        throw std::invalid_argument("r12: eta context order must be >= m");
    Factorization f = factorize(m);
    Integer value = 8 * divisor_power_sum(f, 5, DivisorFilter::all) -
                    512 * shifted_sum(f, 2, 5, DivisorFilter::all);
    const Rational& tau = eta12.coeff(static_cast<std::size_t>(m.get_ui()));
    if (tau.get_den() != 1) throw std::logic_error("r12: eta coefficient not integral");
    return value + 16 * Integer(tau.get_num());
}

Integer r12(const Integer& m) {
    if (m <= 0) return r12(m, eta12_2z(1));
    if (!m.fits_ulong_p() || m.get_ui() > 1000000)
        throw std::invalid_argument("r12: m too large to build an eta context");
    return r12(m, eta12_2z(static_cast<std::size_t>(m.get_ui())));
}

LatticeCounter::LatticeCounter(unsigned max_n, std::uint64_t max_m)
    : max_n_(max_n), max_m_(max_m) {
    rows_.push_back({Integer(1)});  // r_0
}

void LatticeCounter::grow(unsigned n, std::uint64_t m) {
    std::uint64_t target = extent_;
    if (m > target) target = std::max<std::uint64_t>({m, 2 * extent_, 64});
    target = std::min(target, max_m_);
    bool widen = target > extent_;
    if (widen) {
        rows_.resize(1);
        rows_[0].assign(target + 1, Integer(0));
        rows_[0][0] = 1;
        extent_ = target;
    }
    while (rows_.size() <= n) {
        const auto& prev = rows_.back();
        std::vector<Integer> row(extent_ + 1);
        for (std::uint64_t mm = 0; mm <= extent_; ++mm) {
            Integer acc = prev[mm];
            for (std::uint64_t x = 1; x * x <= mm; ++x) acc += 2 * prev[mm - x * x];
            row[mm] = std::move(acc);
        }
        rows_.push_back(std::move(row));
    }
}

Integer LatticeCounter::count(unsigned n, const Integer& m) {
    if (m < 0) throw std::invalid_argument("lattice count: m must be non-negative");
    if (n > max_n_ || !m.fits_ulong_p() || m.get_ui() > max_m_)
        throw std::invalid_argument("lattice count: guard exceeded (n <= " + std::to_string(max_n_) +
                                    ", m <= " + std::to_string(max_m_) + ")");
    std::uint64_t mm = m.get_ui();
    if (mm > extent_ || rows_.size() <= n) grow(n, mm);
    return rows_[n][mm];
}

Integer r_bruteforce(unsigned n, const Integer& m) {
    thread_local LatticeCounter counter;
    return counter.count(n, m);
}

Rational eisenstein_c(unsigned n, const Integer& m, const Factorization& f) {
    if (n % 2 != 0 || n <= 2) throw std::invalid_argument("eisenstein_c: n must be even, n > 2");
    if (mpz_even_p(m.get_mpz_t()) || m < 1)
        throw std::invalid_argument("eisenstein_c: stated for odd positive m only");
    const unsigned k = n / 2;
    if (n % 4 == 2) {
        Rational scale = make_rational(4, abs(euler_number(k - 1)));
        Integer twist = chi4(m) * ipow(Integer(2), k - 1) + chi4(Integer(k));
        return scale * Rational(twist) *
               Rational(divisor_power_sum(f, k - 1, DivisorFilter::chi4_at_divisor));
    }
    Rational scale = Rational(Integer(n)) / (Rational(ipow(Integer(2), k) - 1) * abs(bernoulli(k)));
    return scale * Rational(divisor_power_sum(f, k - 1, DivisorFilter::all));
}

Rational eisenstein_c(unsigned n, const Integer& m) {
    return eisenstein_c(n, m, factorize(m));
}

}  // namespace sumsq
