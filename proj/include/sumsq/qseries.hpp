#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumsq/numeric.hpp"

namespace sumsq {

/// Exact truncated power series c_0 + c_1 q + ... + c_N q^N.
///
/// Truncation contract: arithmetic never extends past the known order (two
/// series combine at the min of their orders), and requesting a coefficient
/// beyond the order is an error, never zero.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Rational(0)) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    std::size_t order() const { return c_.size() - 1; }

    const Rational& coeff(std::size_t m) const;
    void set_coeff(std::size_t m, Rational v);

    TruncatedSeries truncated(std::size_t new_order) const;

    /// q -> q^r. Coefficients of the dilated series are known exactly up to
    /// order()*r + r - 1; new_order must not exceed that.
    TruncatedSeries dilated(std::size_t r, std::size_t new_order) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;  // Cauchy product
    TruncatedSeries scaled(const Rational& s) const;
    TruncatedSeries pow(unsigned long n) const;  // n >= 1
    TruncatedSeries divided_by(const TruncatedSeries& o) const;  // o.coeff(0) != 0

    bool operator==(const TruncatedSeries&) const = default;

    /// "c0 + c1*q + c2*q^2 + ..." with zero terms skipped ("0" if all vanish).
    std::string pretty() const;

    /// {"order": N, "coeffs": ["p/q", ...]} with N+1 exact coefficient strings.
    nlohmann::json to_json() const;
    static TruncatedSeries from_json(const nlohmann::json& j);

  private:
    std::vector<Rational> c_;  // size order+1
};

/// theta_n = theta_1^n with theta_1 = 1 + 2 sum_{j>=1} q^{j^2}; the q^m
/// coefficient is r_n(m). n positive and even.
TruncatedSeries theta_series(unsigned n, std::size_t order);

/// eta^12(2z) = q * prod_{j>=1} (1 - q^{2j})^12, truncated. Integer
/// coefficients; every even-index coefficient is 0.
TruncatedSeries eta12_2z(std::size_t order);

/// E(q) = -b_k/2k + sum_m sigma_{k-1}(m) q^m for even k.
/// k >= 4 is the weight range with a full modular-form reading; k = 2 is
/// admitted as a formal series (it only ever appears inside combinations,
/// such as 8E(q) - 32E(q^4), that are modular).
TruncatedSeries eisenstein_E(unsigned k, std::size_t order);

/// E1(q) = sum_m (sum_{d|m} chi4(m/d) d^{k-1}) q^m with constant term 0,
/// for odd k. k = 1 admitted solely for the two-squares identity.
TruncatedSeries eisenstein_E1(unsigned k, std::size_t order);

/// E2(q) = -b_k^{chi4}/2k + sum_m (sum_{d|m} chi4(d) d^{k-1}) q^m for odd k.
/// The constant term sits on this series (the zeta factor of the associated
/// L-function is the one with a pole at s = 0); the exact anchors
/// 16*E1 - 4*E2 = theta_6 and (4/5)E2 + (64/5)E1 + (32/5)C = theta_10 pin it,
/// constant terms included.
TruncatedSeries eisenstein_E2(unsigned k, std::size_t order);

/// C(q) = sum_m (S_{k-1}(m)/4) q^m: the normalized CM eigenform built from
/// the Gaussian-integer norm power sums. Requires k = 1 (mod 4) and k >= 5
/// (the CM space is trivial otherwise). Coefficient of q is 1; the
/// coefficient of q^2 is (1+i)^{k-1} = (-4)^{(k-1)/4}.
TruncatedSeries cm_form(unsigned k, std::size_t order);

}  // namespace sumsq
