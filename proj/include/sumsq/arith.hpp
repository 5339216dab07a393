#pragma once

#include <string>
#include <vector>

#include "sumsq/numeric.hpp"

namespace sumsq {

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of a positive integer: primes strictly increasing,
/// exponents >= 1, every prime passes a primality check. The empty list is 1.
class Factorization {
  public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    /// Accepts "2^2 * 3^1", "2^2,3", "7" (separator ',' or '*', '^e' optional).
    static Factorization parse(const std::string& text);

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    Integer value() const;
    unsigned exponent_of(const Integer& p) const;

    /// Factorization of value()/p^r; r must not exceed the stored exponent.
    Factorization divided_by(const Integer& p, unsigned r) const;

    /// "p1^e1 * p2^e2 * ..." ("1" for the empty product).
    std::string str() const;

    bool operator==(const Factorization&) const = default;

  private:
    std::vector<PrimePower> factors_;
};

/// Deterministic Miller-Rabin below 2^64; mpz_probab_prime_p above.
bool is_prime(const Integer& n);

/// Trial division to 1e6, then Brent's variant of Pollard rho. Accepts
/// 1 <= m < 2^64; larger inputs must come with a caller-supplied factorization.
Factorization factorize(const Integer& m);

/// Nontrivial character of conductor 4: +1 on 1 (mod 4), -1 on 3 (mod 4),
/// 0 on even arguments.
int chi4(const Integer& a);
int chi4(long a);

enum class DivisorFilter {
    all,               // sum over all d | m of d^t
    odd_only,          // d odd only
    chi4_at_divisor,   // chi4(d) * d^t
    chi4_at_cofactor,  // chi4(m/d) * d^t
};

/// Twisted divisor power sum, computed multiplicatively prime-by-prime from
/// the factorization (log-polynomial in m).
Integer divisor_power_sum(const Factorization& f, unsigned t, DivisorFilter filter);

/// Bernoulli number b_k of t/(e^t - 1), by the recurrence
/// sum_{j=0..k} C(k+1,j) b_j = 0; memoized, thread-safe.
Rational bernoulli(unsigned k);

/// Euler number e_k of 2/(e^t + e^{-t}); zero for odd k; memoized, thread-safe.
Integer euler_number(unsigned k);

/// Generalized Bernoulli number b_k^{chi4} of t(e^t - e^{3t})/(e^{4t} - 1),
/// extracted by exact truncated-series division in the formal variable t.
/// Vanishes for even k >= 2 (chi4 is odd); b_0 = 0, b_1 = -1/2.
Rational gen_bernoulli_chi4(unsigned k);

}  // namespace sumsq
