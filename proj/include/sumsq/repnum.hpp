#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumsq/arith.hpp"
#include "sumsq/numeric.hpp"
#include "sumsq/qseries.hpp"

namespace sumsq {

struct RepQuery {
    unsigned n = 0;                             // number of squares, even
    Integer m;                                  // target, >= 0
    std::optional<Factorization> factorization; // of m, when the caller has it
};

/// Classical divisor-sum formulas for n in {2, 4, 6, 8, 10}; log-polynomial
/// in m given the factorization (computed if absent). r_n(0) = 1. Sums over
/// d | m/2 or d | m/4 are empty when 2 or 4 does not divide m. Other n are
/// rejected (use r12 for n = 12, or the brute-force oracle).
Integer r_elementary(const RepQuery& q);
Integer r_elementary(unsigned n, const Integer& m);

/// r_12(m) = 8*sigma_5(m) - 512*sigma_5(m/4) + 16*[q^m] eta^12(2z).
/// The eta coefficient comes from a series context of order >= m, so the cost
/// is linear in m, not log-polynomial; the caller either passes the context
/// or lets the overload build one.
Integer r12(const Integer& m, const TruncatedSeries& eta12);
Integer r12(const Integer& m);

/// Memoized lattice-point counter: r_n(m) via the recursion
/// r_n(m) = sum_{x^2 <= m} r_{n-1}(m - x^2), r_0(0) = 1.
/// Guards bound the table size; one instance per thread (not synchronized).
class LatticeCounter {
  public:
    explicit LatticeCounter(unsigned max_n = 16, std::uint64_t max_m = 10000);

    Integer count(unsigned n, const Integer& m);

    unsigned max_n() const { return max_n_; }
    std::uint64_t max_m() const { return max_m_; }

  private:
    void grow(unsigned n, std::uint64_t m);

    unsigned max_n_;
    std::uint64_t max_m_;
    std::uint64_t extent_ = 0;                  // columns built: 0..extent_
    std::vector<std::vector<Integer>> rows_;    // rows_[j][m] = r_j(m)
};

/// Brute-force oracle with the default guards (n <= 16, m <= 10^4), backed by
/// a thread-local LatticeCounter.
Integer r_bruteforce(unsigned n, const Integer& m);

/// Coefficient c_m of the Eisenstein part of theta_n, odd m only (the
/// underlying theorem is stated for odd m):
///   n = 2 (mod 4), n > 2:  4/|e_{n/2-1}| * (chi4(m) 2^{n/2-1} + chi4(n/2))
///                          * sum_{d|m} chi4(d) d^{n/2-1}
///   n = 0 (mod 4):         n / ((2^{n/2}-1) |b_{n/2}|) * sum_{d|m} d^{n/2-1}
Rational eisenstein_c(unsigned n, const Integer& m);
Rational eisenstein_c(unsigned n, const Integer& m, const Factorization& f);

}  // namespace sumsq
