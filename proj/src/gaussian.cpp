#include "sumsq/gaussian.hpp"

#include <stdexcept>
#include <utility>

namespace sumsq {

namespace {

// Nearest-integer quotient of a/b for b > 0 (ties toward +infinity).
Integer round_div(const Integer& a, const Integer& b) {
    Integer q;
    Integer num = 2 * a + b;
    Integer den = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

GaussianInt g_mod(const GaussianInt& z, const GaussianInt& w) {
    Integer n = w.norm();
    GaussianInt zc = z * w.conj();
    GaussianInt q(round_div(zc.re, n), round_div(zc.im, n));
    return z - w * q;
}

GaussianInt g_gcd(GaussianInt a, GaussianInt b) {
    while (!(b.re == 0 && b.im == 0)) {
        GaussianInt r = g_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

GaussianInt GaussianInt::pow(unsigned long e) const {
    GaussianInt base = *this;
    GaussianInt acc(1, 0);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string GaussianInt::str() const {
    Integer ai = abs(im);
    return re.get_str() + (im < 0 ? "-" : "+") + ai.get_str() + "i";
}

Integer sqrt_minus_one_mod(const Integer& p) {
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
        throw std::invalid_argument("sqrt_minus_one_mod: p must be 1 (mod 4)");
    if (!is_prime(p)) throw std::invalid_argument("sqrt_minus_one_mod: p must be prime");
    const Integer half = (p - 1) / 2;
    const Integer quarter = (p - 1) / 4;
    for (unsigned long a = 2; a < 2 + 128; ++a) {
        Integer base(a);
        Integer legendre;
        mpz_powm(legendre.get_mpz_t(), base.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
        if (legendre == p - 1) {  // a is a non-residue
            Integer x;
            mpz_powm(x.get_mpz_t(), base.get_mpz_t(), quarter.get_mpz_t(), p.get_mpz_t());
            return x <= p - x ? x : p - x;
        }
    }
    throw std::runtime_error("sqrt_minus_one_mod: no non-residue among the first 128 candidates");
}

GaussianInt split_prime(const Integer& p) {
    if (p == 2) return {1, 1};
    if (!is_prime(p)) throw std::invalid_argument("split_prime: argument is not prime");
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3)
        throw std::invalid_argument("split_prime: " + p.get_str() + " is inert in Z[i]");
    Integer x = sqrt_minus_one_mod(p);
    GaussianInt g = g_gcd(GaussianInt(p, 0), GaussianInt(x, 1));
    Integer a = abs(g.re), b = abs(g.im);
    if (a < b) std::swap(a, b);
    // For split p the unique representative with re > im > 0.
    return {a, b};
}

Integer norm_power_sum(const Factorization& f, unsigned t) {
    if (t == 0 || t % 4 != 0)
        throw std::invalid_argument("norm_power_sum: t must be a positive multiple of 4");
    GaussianInt acc(1, 0);
    for (const auto& [p, e] : f.factors()) {
        if (p == 2) {
            acc = acc * GaussianInt(1, 1).pow(static_cast<unsigned long>(t) * e);
        } else if (chi4(p) == -1) {
            if (e & 1) return 0;  // no ideal of norm p^odd at an inert prime
            acc = acc * GaussianInt(ipow(p, static_cast<unsigned long>(t) * e / 2), 0);
        } else {
            GaussianInt pi = split_prime(p);
            GaussianInt u = pi.pow(t);
            GaussianInt v = pi.conj().pow(t);
            std::vector<GaussianInt> up(e + 1, GaussianInt(1, 0)), vp(e + 1, GaussianInt(1, 0));
            for (unsigned j = 1; j <= e; ++j) {
                up[j] = up[j - 1] * u;
                vp[j] = vp[j - 1] * v;
            }
            GaussianInt term(0, 0);
            for (unsigned j = 0; j <= e; ++j) term = term + up[j] * vp[e - j];
            acc = acc * term;
        }
    }
    if (acc.im != 0) throw std::logic_error("norm_power_sum: sum must be a rational integer");
    return 4 * acc.re;
}

Integer norm_power_sum(const Integer& m, unsigned t) { return norm_power_sum(factorize(m), t); }

std::vector<GaussianInt> enumerate_norm(const Integer& m) {
    if (m < 1) throw std::invalid_argument("enumerate_norm: m must be positive");
    if (m > Integer(1000000000000L))
        throw std::invalid_argument("enumerate_norm: m too large for the O(sqrt m) scan");
    Integer s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    std::vector<GaussianInt> out;
    for (Integer a = -s; a <= s; ++a) {
        Integer b2 = m - a * a;
        if (mpz_perfect_square_p(b2.get_mpz_t())) {
            Integer b;
            mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
            if (b == 0) {
                out.emplace_back(a, 0);
            } else {
                out.emplace_back(a, b);
                out.emplace_back(a, -b);
            }
        }
    }
    return out;
}

}  // namespace sumsq
