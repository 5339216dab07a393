#include "sumsq/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sumsq/qseries.hpp"

namespace sumsq {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with this base set.
bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ n);
    while (true) {
        std::uint64_t y = rng() % (n - 2) + 1;
        std::uint64_t c = rng() % (n - 2) + 1;
        std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        const std::uint64_t step = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += step) {
                ys = y;
                std::uint64_t lim = std::min(step, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (miller_rabin_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& pp = factors_[i];
        if (pp.exponent == 0) throw std::invalid_argument("factorization: zero exponent");
        if (i > 0 && !(factors_[i - 1].prime < pp.prime))
            throw std::invalid_argument("factorization: primes must be strictly increasing");
        if (!is_prime(pp.prime))
            throw std::invalid_argument("factorization: " + pp.prime.get_str() + " is not prime");
    }
}

Factorization Factorization::parse(const std::string& text) {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), '*', ',');
    std::map<Integer, unsigned> acc;
    std::stringstream ss(norm);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' '; }), tok.end());
        if (tok.empty()) continue;
        if (tok == "1" && acc.empty() && ss.peek() == EOF) break;  // "1" = empty product
        auto caret = tok.find('^');
        Integer p = parse_integer(tok.substr(0, caret));
        unsigned e = 1;
        if (caret != std::string::npos) {
            Integer ez = parse_integer(tok.substr(caret + 1));
            if (ez <= 0 || !ez.fits_uint_p()) throw std::invalid_argument("bad exponent in '" + tok + "'");
            e = static_cast<unsigned>(ez.get_ui());
        }
        acc[p] += e;
    }
    std::vector<PrimePower> factors;
    factors.reserve(acc.size());
    for (const auto& [p, e] : acc) factors.push_back({p, e});
    return Factorization(std::move(factors));
}

Integer Factorization::value() const {
    Integer v = 1;
    for (const auto& pp : factors_) v *= ipow(pp.prime, pp.exponent);
    return v;
}

unsigned Factorization::exponent_of(const Integer& p) const {
    for (const auto& pp : factors_)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

Factorization Factorization::divided_by(const Integer& p, unsigned r) const {
    if (r == 0) return *this;
    std::vector<PrimePower> out;
    out.reserve(factors_.size());
    bool seen = false;
    for (const auto& pp : factors_) {
        if (pp.prime == p) {
            seen = true;
            if (pp.exponent < r) throw std::invalid_argument("divided_by: exponent underflow");
            if (pp.exponent > r) out.push_back({pp.prime, pp.exponent - r});
        } else {
            out.push_back(pp);
        }
    }
    if (!seen) throw std::invalid_argument("divided_by: prime not present");
    Factorization f;
    f.factors_ = std::move(out);  // invariants inherited
    return f;
}

std::string Factorization::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += " * ";
        out += factors_[i].prime.get_str() + "^" + std::to_string(factors_[i].exponent);
    }
    return out;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return miller_rabin_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factorize(const Integer& m) {
    if (m <= 0) throw std::invalid_argument("factorize: m must be positive");
    if (!m.fits_ulong_p())
        throw std::invalid_argument("factorize: m exceeds 64 bits; supply the factorization explicitly");
    std::uint64_t n = m.get_ui();
    std::map<std::uint64_t, unsigned> acc;
    for (std::uint64_t d = 2; d <= 3; ++d)
        while (n % d == 0) { ++acc[d]; n /= d; }
    for (std::uint64_t d = 5; d <= kTrialLimit && d * d <= n; d += 6) {
        while (n % d == 0) { ++acc[d]; n /= d; }
        while (n % (d + 2) == 0) { ++acc[d + 2]; n /= d + 2; }
    }
    if (n > 1) {
        if (n <= kTrialLimit * kTrialLimit)
            ++acc[n];  // no divisor below the trial limit, so n is prime
        else
            factor_u64(n, acc);
    }
    std::vector<PrimePower> factors;
    factors.reserve(acc.size());
    for (const auto& [p, e] : acc) factors.push_back({Integer(static_cast<unsigned long>(p)), e});
    return Factorization(std::move(factors));
}

int chi4(const Integer& a) {
    if (mpz_even_p(a.get_mpz_t())) return 0;
    return mpz_fdiv_ui(a.get_mpz_t(), 4) == 1 ? 1 : -1;
}

int chi4(long a) { return chi4(Integer(a)); }

Integer divisor_power_sum(const Factorization& f, unsigned t, DivisorFilter filter) {
    Integer total = 1;
    for (const auto& [p, e] : f.factors()) {
        const Integer pt = ipow(p, t);
        Integer term;
        switch (filter) {
            case DivisorFilter::all:
            case DivisorFilter::odd_only: {
                if (filter == DivisorFilter::odd_only && p == 2) {
                    term = 1;  // only the divisors with no factor 2 survive
                    break;
                }
                term = 1;
                Integer pw = 1;
                for (unsigned j = 1; j <= e; ++j) { pw *= pt; term += pw; }
                break;
            }
            case DivisorFilter::chi4_at_divisor: {
                int chi = chi4(p);
                term = 1;
                Integer pw = 1;
                for (unsigned j = 1; j <= e; ++j) {
                    pw *= pt;
                    if (chi == 1) term += pw;
                    else if (chi == -1) term += (j & 1) ? -pw : pw;
                }
                break;
            }
            case DivisorFilter::chi4_at_cofactor: {
                // sum_j chi4(p^j) p^{(e-j)t}; for p = 2 only j = 0 survives.
                int chi = chi4(p);
                term = ipow(pt, e);
                if (chi != 0) {
                    Integer pw = 1;
                    for (unsigned j = 1; j <= e; ++j) {
                        pw = ipow(pt, e - j);
                        int sign = (chi == -1 && (j & 1)) ? -1 : 1;
                        term += sign > 0 ? pw : -pw;
                    }
                }
                break;
            }
        }
        total *= term;
    }
    return total;
}

Rational bernoulli(unsigned k) {
    static std::mutex mu;
    static std::vector<Rational> table = {Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) {
        unsigned j = static_cast<unsigned>(table.size());
        Rational acc(0);
        for (unsigned i = 0; i < j; ++i)
            acc += Rational(binomial(j + 1, i)) * table[i];
        table.push_back(-acc / Rational(Integer(j) + 1));
    }
    return table[k];
}

Integer euler_number(unsigned k) {
    if (k & 1) return 0;
    static std::mutex mu;
    static std::vector<Integer> table = {Integer(1)};  // e_0, e_2, e_4, ...
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k / 2) {
        unsigned j = 2 * static_cast<unsigned>(table.size());
        Integer acc(0);
        for (unsigned i = 0; i < j; i += 2)
            acc += binomial(j, i) * table[i / 2];
        table.push_back(-acc);
    }
    return table[k / 2];
}

Rational gen_bernoulli_chi4(unsigned k) {
    if (k == 0) return Rational(0);
    // t(e^t - e^{3t})/(e^{4t} - 1) = N(t)/D(t) with the common factor t removed:
    //   N_j = (1 - 3^{j+1})/(j+1)!,  D_j = 4^{j+1}/(j+1)!.
    const std::size_t ord = k - 1;
    TruncatedSeries num(ord), den(ord);
    for (std::size_t j = 0; j <= ord; ++j) {
        Integer fact = factorial(static_cast<unsigned long>(j) + 1);
        num.set_coeff(j, make_rational(1 - ipow(Integer(3), j + 1), fact));
        den.set_coeff(j, make_rational(ipow(Integer(4), j + 1), fact));
    }
    TruncatedSeries q = num.divided_by(den);
    return q.coeff(ord) * Rational(factorial(k));
}

}  // namespace sumsq
