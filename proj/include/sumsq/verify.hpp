#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumsq/numeric.hpp"
#include "sumsq/qseries.hpp"

namespace sumsq {

// Dimension formulas for weight-k forms on Gamma_1(4), k >= 1.
int dim_modular(int k);     // (k+2)/2 even k, (k+1)/2 odd k
int dim_cusp(int k);        // max(0, (k-4)/2) even k, max(0, (k-3)/2) odd k
int dim_cm(int k);          // 1 iff k = 1 (mod 4) and k >= 5
int dim_eisenstein(int k);  // dim_modular - dim_cusp

/// Square matrix of exact q-expansion coefficients, with labels recording
/// which form each row came from and which q-power each column is.
struct CoefficientMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<Rational>> entries;

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Rational determinant() const;
    std::string str() const;
};

/// Exact rank of an arbitrary rational matrix.
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

struct DetTestResult {
    unsigned n = 0;
    CoefficientMatrix matrix;
    Rational det;
    /// Closed-form value, where one exists (n = 0 mod 4 and n = 6 mod 8);
    /// always checked against the matrix determinant before returning.
    std::optional<Rational> closed_form;
};

/// Determinant test for even n >= 4. Selects the coefficient matrix by
/// residue: n = 0 (mod 4) uses rows {theta_n, E(q), E(q^2), E(q^4)} on
/// q^1..q^4; n = 6 (mod 8) uses {theta_n, E1, E2} on q^1..q^3; n = 2 (mod 8),
/// n >= 10, uses {theta_n, E1, E2, C} on q^1..q^4. Rows are taken from the
/// actual series expansions. A zero determinant means the low-order
/// coefficients of theta_n lie in the span of the basis rows.
DetTestResult det_test_detail(unsigned n);
Rational det_test(unsigned n);

/// a_3 = r_n(3) - c_3(n) = 8*C(n,3) - eisenstein_c(n, 3): the q^3 coefficient
/// of the cuspidal part of theta_n. Zero exactly when that part is killed by
/// the Hecke operator at the inert prime 3.
Rational a3(unsigned n);

struct A3Row {
    unsigned n = 0;
    Rational c3;
    Integer r3;
    Rational a3;
};

std::vector<A3Row> a3_table(unsigned n_lo, unsigned n_hi);
std::string format_a3_table(const std::vector<A3Row>& rows, bool csv);

/// Result of solving theta_n = sum coeff_i * basis_i exactly on q^0..q^order.
struct Decomposition {
    unsigned n = 0;
    std::vector<std::string> basis;      // row labels, fixed order
    bool consistent = false;
    std::vector<Rational> coefficients;  // parallel to basis, when consistent
    std::optional<std::size_t> first_failing_power;
    std::size_t checked_order = 0;

    const Rational& coefficient_of(const std::string& label) const;
};

/// Candidate elementary basis for weight k = n/2: for even k the dilated
/// series {E(q), E(q^2), E(q^4)}; for odd k {E1, E2} plus C when
/// k = 1 (mod 4), k >= 5. include_eta12 (n = 12 only) appends eta^12(2z),
/// extending the basis to all of the weight-6 space. Solves the exact linear
/// system over q^0..q^order; reports the first failing power when theta_n is
/// not in the span. order must be at least basis size + 2.
Decomposition decompose_theta(unsigned n, std::size_t order, bool include_eta12 = false);

enum class Verdict { elementary, not_elementary };

/// Machine-checkable witness for the elementarity classification of theta_n.
/// Elementary: a decomposition over the candidate basis reproducing every
/// coefficient up to checked_order. Not elementary: both the determinant
/// witness and the a3 witness, nonzero and agreeing.
struct ElementarityCertificate {
    unsigned n = 0;
    Verdict verdict = Verdict::not_elementary;
    std::optional<Decomposition> decomposition;  // elementary verdicts
    std::optional<Rational> det_witness;         // not-elementary verdicts
    std::optional<Rational> a3_witness;          //   "
    std::size_t checked_order = 0;

    /// Recompute the witnesses from scratch and compare.
    bool self_check() const;

    /// {"n", "verdict", "witness_kind", "values", "basis"?, "checked_order"}
    nlohmann::json to_json() const;
};

ElementarityCertificate elementarity(unsigned n, std::size_t decomposition_order = 200);

}  // namespace sumsq
