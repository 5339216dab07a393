#include "sumsq/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumsq/arith.hpp"
#include "sumsq/gaussian.hpp"

namespace sumsq {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series: need at least the constant term");
}

const Rational& TruncatedSeries::coeff(std::size_t m) const {
    if (m >= c_.size())
        throw std::out_of_range("series: coefficient " + std::to_string(m) +
                                " beyond truncation order " + std::to_string(order()));
    return c_[m];
}

void TruncatedSeries::set_coeff(std::size_t m, Rational v) {
    if (m >= c_.size()) throw std::out_of_range("series: set past truncation order");
    c_[m] = std::move(v);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    if (new_order > order()) throw std::out_of_range("series: cannot truncate upward");
    return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::dilated(std::size_t r, std::size_t new_order) const {
    if (r == 0) throw std::invalid_argument("series: dilation factor must be >= 1");
    if (new_order > order() * r + (r - 1))
        throw std::out_of_range("series: dilation target order exceeds known coefficients");
    TruncatedSeries out(new_order);
    for (std::size_t j = 0; j * r <= new_order; ++j) out.c_[j * r] = c_[j];
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (o.c_[j] == 0) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i <= order(); ++i) out.c_[i] = c_[i] * s;
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned long n) const {
    if (n == 0) throw std::invalid_argument("series: pow exponent must be >= 1");
    TruncatedSeries base = *this;
    TruncatedSeries acc(order());
    acc.c_[0] = 1;
    while (n) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::divided_by(const TruncatedSeries& o) const {
    if (o.c_[0] == 0) throw std::invalid_argument("series: division needs a unit constant term");
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (std::size_t m = 0; m <= n; ++m) {
        Rational acc = c_[m];
        for (std::size_t j = 1; j <= m; ++j) acc -= o.c_[j] * out.c_[m - j];
        out.c_[m] = acc / o.c_[0];
    }
    return out;
}

std::string TruncatedSeries::pretty() const {
    std::string out;
    for (std::size_t m = 0; m <= order(); ++m) {
        const Rational& c = c_[m];
        if (c == 0) continue;
        Rational a = abs(c);
        bool neg = c < 0;
        std::string mag = to_string(a);
        std::string term;
        if (m == 0) {
            term = mag;
        } else {
            std::string power = (m == 1) ? "q" : "q^" + std::to_string(m);
            term = (a == 1) ? power : mag + "*" + power;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

nlohmann::json TruncatedSeries::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : c_) coeffs.push_back(to_string(c));
    return {{"order", order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries TruncatedSeries::from_json(const nlohmann::json& j) {
    std::size_t ord = j.at("order").get<std::size_t>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != ord + 1)
        throw std::invalid_argument("series: coeffs must hold order+1 entries");
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& s : arr) {
        std::string str = s.get<std::string>();
        auto slash = str.find('/');
        if (slash == std::string::npos)
            c.emplace_back(parse_integer(str));
        else
            c.push_back(make_rational(parse_integer(str.substr(0, slash)),
                                      parse_integer(str.substr(slash + 1))));
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries theta_series(unsigned n, std::size_t order) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("theta_series: n must be positive and even");
    TruncatedSeries theta1(order);
    theta1.set_coeff(0, Rational(1));
    for (std::size_t j = 1; j * j <= order; ++j) theta1.set_coeff(j * j, Rational(2));
    return theta1.pow(n);
}

TruncatedSeries eta12_2z(std::size_t order) {
    if (order < 1) throw std::invalid_argument("eta12_2z: order must be >= 1");
    TruncatedSeries acc(order);
    acc.set_coeff(1, Rational(1));
    for (std::size_t j = 1; 2 * j <= order; ++j) {
        // (1 - q^{2j})^12 expanded directly; 13 terms, most beyond the order
        TruncatedSeries factor(order);
        for (unsigned long i = 0; i <= 12 && 2 * j * i <= order; ++i) {
            Integer b = binomial(12, i);
            factor.set_coeff(2 * j * i, Rational((i & 1) ? -b : b));
        }
        acc = acc * factor;
    }
    return acc;
}

TruncatedSeries eisenstein_E(unsigned k, std::size_t order) {
    if (k % 2 != 0 || k < 2) throw std::invalid_argument("eisenstein_E: k must be even, k >= 2");
    TruncatedSeries out(order);
    out.set_coeff(0, -bernoulli(k) / Rational(2 * k));
    for (std::size_t m = 1; m <= order; ++m)
        out.set_coeff(m, Rational(divisor_power_sum(factorize(Integer(static_cast<unsigned long>(m))),
                                                    k - 1, DivisorFilter::all)));
    return out;
}

namespace {

TruncatedSeries twisted_eisenstein(unsigned k, std::size_t order, DivisorFilter filter,
                                   Rational constant) {
    TruncatedSeries out(order);
    out.set_coeff(0, std::move(constant));
    for (std::size_t m = 1; m <= order; ++m)
        out.set_coeff(m, Rational(divisor_power_sum(factorize(Integer(static_cast<unsigned long>(m))),
                                                    k - 1, filter)));
    return out;
}

}  // namespace

TruncatedSeries eisenstein_E1(unsigned k, std::size_t order) {
    if (k % 2 != 1) throw std::invalid_argument("eisenstein_E1: k must be odd");
    return twisted_eisenstein(k, order, DivisorFilter::chi4_at_cofactor, Rational(0));
}

TruncatedSeries eisenstein_E2(unsigned k, std::size_t order) {
    if (k % 2 != 1) throw std::invalid_argument("eisenstein_E2: k must be odd");
    return twisted_eisenstein(k, order, DivisorFilter::chi4_at_divisor,
                              -gen_bernoulli_chi4(k) / Rational(2 * k));
}

TruncatedSeries cm_form(unsigned k, std::size_t order) {
    if (k % 4 != 1 || k < 5)
        throw std::invalid_argument(
            "cm_form: the CM space at weight k is trivial unless k = 1 (mod 4) and k >= 5");
    TruncatedSeries out(order);
    for (std::size_t m = 1; m <= order; ++m) {
        Integer s = norm_power_sum(factorize(Integer(static_cast<unsigned long>(m))), k - 1);
        if (s % 4 != 0) throw std::logic_error("cm_form: norm power sum not divisible by 4");
        out.set_coeff(m, Rational(s / 4));
    }
    return out;
}

}  // namespace sumsq
