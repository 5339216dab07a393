#pragma once

#include <string>
#include <vector>

#include "sumsq/arith.hpp"
#include "sumsq/numeric.hpp"

namespace sumsq {

/// Element a + bi of Z[i] with arbitrary-precision components.
struct GaussianInt {
    Integer re;
    Integer im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt conj() const { return {re, -im}; }
    Integer norm() const { return re * re + im * im; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt&) const = default;

    GaussianInt pow(unsigned long e) const;

    /// "a+bi" / "a-bi", both components always printed ("1+1i", "-7+24i").
    std::string str() const;
};

/// x with 0 < x < p and x^2 = -1 (mod p); the smaller of the two roots.
/// Requires p prime, p = 1 (mod 4). Non-residue search tries the first 128
/// candidate bases.
Integer sqrt_minus_one_mod(const Integer& p);

/// A Gaussian integer of norm p for p = 2 (returns 1+i) or p = 1 (mod 4)
/// (returns the canonical associate with re > im > 0). Rejects inert
/// p = 3 (mod 4), which has no element of norm p.
GaussianInt split_prime(const Integer& p);

/// S_t(m) = sum of d^t over all d in Z[i] with Nm(d) = m, for 4 | t (which
/// makes the sum a rational integer, independent of associate choices).
/// Computed multiplicatively over the ideals of Z[i]: S_t(m) = 4*a_m with
///   a_{2^e}    = (1+i)^{te}
///   a_{p^e}    = p^{te/2} for p = 3 (mod 4), e even (0 for e odd)
///   a_{p^e}    = sum_{j=0..e} pi^{tj} conj(pi)^{t(e-j)} for split p = 1 (mod 4).
/// Log-polynomial in m given the factorization.
Integer norm_power_sum(const Factorization& f, unsigned t);
Integer norm_power_sum(const Integer& m, unsigned t);

/// All (a, b) with a^2 + b^2 = m, by scanning a in [-floor(sqrt m), floor(sqrt m)].
/// Brute-force oracle for norm_power_sum; O(sqrt m).
std::vector<GaussianInt> enumerate_norm(const Integer& m);

}  // namespace sumsq
