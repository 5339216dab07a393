// Acceptance suite: the end-to-end exactness gates for the whole library.
// Each criterion prints one PASS/FAIL line; the process exits nonzero if any
// criterion fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "sumsq/arith.hpp"
#include "sumsq/gaussian.hpp"
#include "sumsq/qseries.hpp"
#include "sumsq/repnum.hpp"
#include "sumsq/verify.hpp"

using namespace sumsq;

namespace {

struct Reporter {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (unsigned long q = p * p; q <= n; q += p) sieve[q] = false;
    }
    return out;
}

void criterion1_formula_oracle(Reporter& r) {
    LatticeCounter counter(12, 2000);
    for (unsigned n : {2u, 4u, 6u, 8u, 10u}) {
        for (unsigned long m = 1; m <= 2000; ++m) {
            if (r_elementary(n, m) != counter.count(n, m)) {
                r.require(false, "r_" + std::to_string(n) + "(" + std::to_string(m) +
                                     ") formula != oracle");
                return;
            }
        }
    }
    TruncatedSeries eta = eta12_2z(500);
    for (unsigned long m = 1; m <= 500; ++m) {
        if (r12(Integer(m), eta) != counter.count(12, m)) {
            r.require(false, "r_12(" + std::to_string(m) + ") formula != oracle");
            return;
        }
    }
}

void criterion2_a3_table(Reporter& r) {
    struct Expect { unsigned n; const char* c3; long r3; const char* a3; };
    const Expect expected[] = {
        {4, "32", 32, "0"},
        {6, "160", 160, "0"},
        {8, "448", 448, "0"},
        {10, "960", 960, "0"},
        {12, "1952", 1760, "-192"},
        {14, "189280/61", 2912, "-11648/61"},
        {16, "70016/17", 4480, "6144/17"},
        {18, "1338240/277", 6528, "470016/277"},
        {20, "157472/31", 9120, "125248/31"},
    };
    auto rows = a3_table(4, 20);
    r.require(rows.size() == 9, "table must have 9 rows");
    if (rows.size() != 9) return;
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& row = rows[i];
        const auto& e = expected[i];
        r.require(row.n == e.n, "row order");
        r.require(to_string(row.c3) == e.c3, "c3 at n=" + std::to_string(e.n) + ": got " +
                                                 to_string(row.c3) + ", want " + e.c3);
        r.require(row.r3 == e.r3, "r_n(3) at n=" + std::to_string(e.n));
        r.require(to_string(row.a3) == e.a3, "a3 at n=" + std::to_string(e.n) + ": got " +
                                                 to_string(row.a3) + ", want " + e.a3);
    }
}

void criterion3_determinants(Reporter& r) {
    r.require(det_test(4) == 0, "det(4) = 0");
    r.require(det_test(8) == 0, "det(8) = 0");
    r.require(det_test(6) == 0, "det(6) = 0");
    r.require(det_test(10) == 0, "det(10) = 0");
    r.require(det_test(12) == -4096, "det(12) = -4096");
    Rational closed12 = Rational(Integer(-24) - 24 * ipow(Integer(3), 5) + 1760);
    r.require(closed12 == -4096, "closed form at 12");
    Rational det18 = det_test(18);
    r.require(det18 == Rational(Integer("-439038812160")),
              "det(18) = -439038812160: computed " + to_string(det18) +
                  " (the reference value matches only the matrix with the C(q) q^2 entry "
                  "negated to -16; the true entry is (1+i)^8 = +16; see README, "
                  "docs/det18-reference-note.md, and test_verify)");
    for (unsigned n = 4; n <= 60; n += 2) {
        if (n % 8 == 2) continue;
        DetTestResult res = det_test_detail(n);  // throws on closed-form mismatch
        r.require(res.closed_form.has_value() && *res.closed_form == res.det,
                  "closed form vs matrix at n=" + std::to_string(n));
    }
}

void criterion4_theta12_decomposition(Reporter& r) {
    Decomposition d = decompose_theta(12, 200, true);
    r.require(d.consistent, "theta_12 must decompose over the eta-extended basis");
    if (!d.consistent) return;
    r.require(d.coefficient_of("E(q)") == 8, "E(q) coefficient 8");
    r.require(d.coefficient_of("E(q^2)") == 0, "E(q^2) coefficient 0");
    r.require(d.coefficient_of("E(q^4)") == -512, "E(q^4) coefficient -512");
    r.require(d.coefficient_of("eta12(2z)") == 16, "eta12 coefficient 16");

    TruncatedSeries e = eisenstein_E(6, 200);
    TruncatedSeries combo = e.scaled(Rational(8)) + e.dilated(4, 200).scaled(Rational(-512)) +
                            eta12_2z(200).scaled(Rational(16));
    r.require(combo == theta_series(12, 200), "recombined series equals theta_12 through q^200");

    Rational const_identity = Rational(8 + 0 - 512) * (-bernoulli(6) / Rational(12));
    r.require(const_identity == 1, "(8 + 0 - 512) * (-b_6/12) = 1");
}

void criterion5_cm_lacunarity(Reporter& r) {
    auto primes = primes_up_to(5000);
    for (unsigned k : {5u, 9u, 13u}) {
        TruncatedSeries c = cm_form(k, 5000);
        for (unsigned long p : primes) {
            if (p % 4 != 3) continue;
            if (c.coeff(p) != 0) {
                r.require(false, "cm_form(" + std::to_string(k) + ") coefficient at q^" +
                                     std::to_string(p) + " must vanish");
                return;
            }
        }
    }
    for (unsigned long m = 1; m <= 5000; ++m) {
        auto elems = enumerate_norm(m);
        Factorization f = factorize(Integer(m));
        for (unsigned t : {4u, 8u, 12u}) {
            GaussianInt acc(0, 0);
            for (const auto& z : elems) acc = acc + z.pow(t);
            if (acc.im != 0 || norm_power_sum(f, t) != acc.re) {
                r.require(false, "norm_power_sum(" + std::to_string(m) + ", " + std::to_string(t) +
                                     ") != enumeration");
                return;
            }
        }
    }
}

void criterion6_elementarity_verdicts(Reporter& r) {
    for (unsigned n = 2; n <= 60; n += 2) {
        ElementarityCertificate cert = elementarity(n);
        bool expect_elementary = (n <= 10);
        r.require((cert.verdict == Verdict::elementary) == expect_elementary,
                  "verdict at n=" + std::to_string(n));
        if (cert.verdict == Verdict::not_elementary) {
            r.require(*cert.det_witness != 0 && *cert.a3_witness != 0,
                      "witnesses nonzero and agreeing at n=" + std::to_string(n));
        }
        r.require(cert.self_check(), "certificate self-check at n=" + std::to_string(n));
    }
}

void criterion7_four_square_positivity(Reporter& r) {
    for (unsigned long m = 1; m <= 10000; ++m) {
        if (r_elementary(4, m) <= 0) {
            r.require(false, "r_4(" + std::to_string(m) + ") must be positive");
            return;
        }
    }
}

void criterion8_series_consistency(Reporter& r) {
    LatticeCounter counter(12, 300);
    TruncatedSeries eta_ctx = eta12_2z(300);
    for (unsigned n : {2u, 4u, 6u, 8u, 10u, 12u}) {
        TruncatedSeries t = theta_series(n, 300);
        for (unsigned long m = 0; m <= 300; ++m) {
            Integer formula = (n == 12) ? r12(Integer(m), eta_ctx)
                              : r_elementary(n, m == 0 ? Integer(0) : Integer(m));
            if (t.coeff(m) != Rational(formula) || t.coeff(m) != Rational(counter.count(n, m))) {
                r.require(false, "theta_" + std::to_string(n) + " coefficient at q^" +
                                     std::to_string(m));
                return;
            }
        }
    }
    TruncatedSeries e6 = eisenstein_E(6, 4);
    r.require(e6.coeff(1) == 1 && e6.coeff(2) == 33 && e6.coeff(3) == 244 && e6.coeff(4) == 1057,
              "E at weight 6 reproduces (1, 33, 244, 1057)");
    TruncatedSeries eta = eta12_2z(9);
    const long expect[] = {1, -12, 54, -88, -99};
    for (int i = 0; i < 5; ++i)
        r.require(eta.coeff(2 * i + 1) == Rational(expect[i]),
                  "eta12 coefficient at q^" + std::to_string(2 * i + 1));
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Reporter&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "formula-oracle equivalence (n = 2..10 to m = 2000; n = 12 to m = 500)",
         criterion1_formula_oracle},
        {2, "a3 table rows 4..20 with exact rational entries", criterion2_a3_table},
        {3, "determinant anchors and closed forms over even n in [4, 60]",
         criterion3_determinants},
        {4, "theta_12 = 8E(q) - 512E(q^4) + 16 eta12(2z) through q^200",
         criterion4_theta12_decomposition},
        {5, "CM lacunarity at p = 3 (mod 4) and norm-sum enumeration to 5000",
         criterion5_cm_lacunarity},
        {6, "elementarity verdicts for even n <= 60 with agreeing witnesses",
         criterion6_elementarity_verdicts},
        {7, "four-square positivity to 10^4", criterion7_four_square_positivity},
        {8, "series consistency: theta to q^300, E(6) and eta12 anchors",
         criterion8_series_consistency},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Reporter r;
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        if (r.failures.empty()) {
            std::printf("[PASS] criterion %d: %s\n", c.id, c.title);
        } else {
            ++failed;
            std::printf("[FAIL] criterion %d: %s\n", c.id, c.title);
            for (const auto& f : r.failures) std::printf("       - %s\n", f.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
