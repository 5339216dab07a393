#include "sumsq/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "sumsq/arith.hpp"
#include "sumsq/repnum.hpp"

namespace sumsq {

int dim_modular(int k) {
    if (k <= 0) throw std::invalid_argument("dim_modular: k must be positive");
    return k % 2 == 0 ? (k + 2) / 2 : (k + 1) / 2;
}

int dim_cusp(int k) {
    if (k <= 0) throw std::invalid_argument("dim_cusp: k must be positive");
    return std::max(0, k % 2 == 0 ? (k - 4) / 2 : (k - 3) / 2);
}

int dim_cm(int k) {
    if (k <= 0) throw std::invalid_argument("dim_cm: k must be positive");
    return (k % 4 == 1 && k >= 5) ? 1 : 0;
}

int dim_eisenstein(int k) { return dim_modular(k) - dim_cusp(k); }

Rational CoefficientMatrix::determinant() const {
    auto a = entries;
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return Rational(1);
    int sign = 1;
    Rational prev(1);
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (a[c][c] == 0) {
            std::size_t p = c + 1;
            while (p < n && a[p][c] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[c], a[p]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    Rational d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

std::string CoefficientMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        os << (i < row_labels.size() ? row_labels[i] : "") << ": [";
        for (std::size_t j = 0; j < entries[i].size(); ++j)
            os << (j ? ", " : "") << to_string(entries[i][j]);
        os << "]\n";
    }
    return os.str();
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

struct LabeledSeries {
    std::string label;
    TruncatedSeries series;
};

// Candidate elementary basis at weight k = n/2 (plus eta^12(2z) on request,
// which is only meaningful for n = 12).
std::vector<LabeledSeries> elementary_basis(unsigned n, std::size_t order, bool include_eta12) {
    const unsigned k = n / 2;
    std::vector<LabeledSeries> basis;
    if (k % 2 == 0) {
        TruncatedSeries e = eisenstein_E(k, order);
        basis.push_back({"E(q)", e});
        basis.push_back({"E(q^2)", e.dilated(2, order)});
        basis.push_back({"E(q^4)", e.dilated(4, order)});
    } else {
        basis.push_back({"E1", eisenstein_E1(k, order)});
        basis.push_back({"E2", eisenstein_E2(k, order)});
        if (k % 4 == 1 && k >= 5) basis.push_back({"C", cm_form(k, order)});
    }
    if (include_eta12) basis.push_back({"eta12(2z)", eta12_2z(order)});
    return basis;
}

Rational det_closed_form(unsigned n) {
    const unsigned k = n / 2;
    if (n % 4 == 0) {
        // -2n - 2n*3^{k-1} + 8*C(n,3)
        Integer v = -2 * Integer(n) - 2 * Integer(n) * ipow(Integer(3), k - 1) + 8 * binomial(n, 3);
        return Rational(v);
    }
    // n = 6 (mod 8): 2n(2^{k-1}+1)(1-3^{k-1}) - 8C(n,2)(1-3^{k-1}) + 8C(n,3)(1-2^{k-1})
    Integer p2 = ipow(Integer(2), k - 1), p3 = ipow(Integer(3), k - 1);
    Integer v = 2 * Integer(n) * (p2 + 1) * (1 - p3) - 8 * binomial(n, 2) * (1 - p3) +
                8 * binomial(n, 3) * (1 - p2);
    return Rational(v);
}

}  // namespace

DetTestResult det_test_detail(unsigned n) {
    if (n % 2 != 0 || n < 4)
        throw std::invalid_argument("det_test: n must be even and at least 4");
    const std::size_t cols = (n % 8 == 6) ? 3 : 4;
    TruncatedSeries theta = theta_series(n, cols);
    auto basis = elementary_basis(n, cols, false);

    CoefficientMatrix m;
    m.row_labels.push_back("theta_" + std::to_string(n));
    std::vector<const TruncatedSeries*> rows{&theta};
    for (const auto& b : basis) {
        m.row_labels.push_back(b.label);
        rows.push_back(&b.series);
    }
    if (rows.size() != cols)
        throw std::logic_error("det_test: basis size does not give a square matrix");
    for (std::size_t j = 1; j <= cols; ++j) m.col_labels.push_back("q^" + std::to_string(j));
    for (const auto* s : rows) {
        std::vector<Rational> row;
        for (std::size_t j = 1; j <= cols; ++j) row.push_back(s->coeff(j));
        m.entries.push_back(std::move(row));
    }

    DetTestResult out;
    out.n = n;
    out.det = m.determinant();
    out.matrix = std::move(m);
    if (n % 8 != 2) {
        out.closed_form = det_closed_form(n);
        if (*out.closed_form != out.det)
            throw std::logic_error("det_test: closed form disagrees with the matrix at n = " +
                                   std::to_string(n));
    }
    return out;
}

Rational det_test(unsigned n) { return det_test_detail(n).det; }

Rational a3(unsigned n) {
    if (n % 2 != 0 || n < 4) throw std::invalid_argument("a3: n must be even and at least 4");
    return Rational(8 * binomial(n, 3)) - eisenstein_c(n, 3);
}

std::vector<A3Row> a3_table(unsigned n_lo, unsigned n_hi) {
    if (n_lo < 4 || n_hi < n_lo) throw std::invalid_argument("a3_table: need 4 <= lo <= hi");
    std::vector<A3Row> rows;
    for (unsigned n = n_lo + (n_lo % 2); n <= n_hi; n += 2) {
        A3Row row;
        row.n = n;
        row.c3 = eisenstein_c(n, 3);
        row.r3 = 8 * binomial(n, 3);
        row.a3 = Rational(row.r3) - row.c3;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_a3_table(const std::vector<A3Row>& rows, bool csv) {
    std::ostringstream os;
    if (csv) {
        os << "n,c3,r3,a3\n";
        for (const auto& r : rows)
            os << r.n << "," << to_string(r.c3) << "," << to_string(r.r3) << ","
               << to_string(r.a3) << "\n";
        return os.str();
    }
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"n", "c3", "r_n(3)", "a3"});
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.n), to_string(r.c3), to_string(r.r3), to_string(r.a3)});
    std::array<std::size_t, 4> width{};
    for (const auto& row : cells)
        for (int j = 0; j < 4; ++j) width[j] = std::max(width[j], row[j].size());
    for (const auto& row : cells) {
        for (int j = 0; j < 4; ++j) {
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
            os << (j == 3 ? "\n" : "  ");
        }
    }
    return os.str();
}

const Rational& Decomposition::coefficient_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == label) return coefficients.at(i);
    throw std::invalid_argument("decomposition: no basis element '" + label + "'");
}

Decomposition decompose_theta(unsigned n, std::size_t order, bool include_eta12) {
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("decompose_theta: n must be even, n >= 2");
    if (include_eta12 && n != 12)
        throw std::invalid_argument("decompose_theta: the eta12 extension applies to n = 12 only");
    auto basis = elementary_basis(n, order, include_eta12);
    const std::size_t nb = basis.size();
    if (order < nb + 2)
        throw std::invalid_argument("decompose_theta: order must be at least basis size + 2");
    TruncatedSeries theta = theta_series(n, order);

    Decomposition out;
    out.n = n;
    out.checked_order = order;
    for (const auto& b : basis) out.basis.push_back(b.label);

    // Exact incremental reduction: rows are [basis coefficients | theta
    // coefficient] at successive q-powers, kept in reduced echelon form. The
    // first row that reduces to [0 ... 0 | nonzero] is the failing q-power.
    std::vector<std::vector<Rational>> pivots;   // normalized, fully reduced
    std::vector<std::size_t> pivot_col;
    for (std::size_t m = 0; m <= order; ++m) {
        std::vector<Rational> row(nb + 1);
        for (std::size_t i = 0; i < nb; ++i) row[i] = basis[i].series.coeff(m);
        row[nb] = theta.coeff(m);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Rational& f = row[pivot_col[r]];
            if (f == 0) continue;
            Rational fac = f;
            for (std::size_t j = 0; j <= nb; ++j) row[j] -= fac * pivots[r][j];
        }
        std::size_t col = 0;
        while (col < nb && row[col] == 0) ++col;
        if (col == nb) {
            if (row[nb] != 0) {
                out.consistent = false;
                out.first_failing_power = m;
                return out;
            }
            continue;
        }
        Rational inv = row[col];
        for (std::size_t j = 0; j <= nb; ++j) row[j] /= inv;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Rational f = pivots[r][col];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= nb; ++j) pivots[r][j] -= f * row[j];
        }
        pivots.push_back(std::move(row));
        pivot_col.push_back(col);
    }
    if (pivots.size() < nb)
        throw std::invalid_argument("decompose_theta: system under-determined; raise the order");

    out.consistent = true;
    out.coefficients.assign(nb, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.coefficients[pivot_col[r]] = pivots[r][nb];
    return out;
}

ElementarityCertificate elementarity(unsigned n, std::size_t decomposition_order) {
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("elementarity: n must be even, n >= 2");
    ElementarityCertificate cert;
    cert.n = n;
    if (n <= 10) {
        Decomposition d = decompose_theta(n, decomposition_order);
        if (!d.consistent)
            throw std::logic_error("elementarity: expected a decomposition for n = " +
                                   std::to_string(n));
        cert.verdict = Verdict::elementary;
        cert.checked_order = decomposition_order;
        cert.decomposition = std::move(d);
        return cert;
    }
    Rational det = det_test(n);
    Rational a = a3(n);
    if ((det == 0) != (a == 0))
        throw std::logic_error("elementarity: determinant and a3 witnesses disagree at n = " +
                               std::to_string(n));
    if (det == 0)
        throw std::logic_error("elementarity: witnesses vanish unexpectedly at n = " +
                               std::to_string(n));
    cert.verdict = Verdict::not_elementary;
    cert.det_witness = std::move(det);
    cert.a3_witness = std::move(a);
    cert.checked_order = 4;
    return cert;
}

bool ElementarityCertificate::self_check() const {
    try {
        if (verdict == Verdict::elementary) {
            if (!decomposition || !decomposition->consistent) return false;
            const auto& d = *decomposition;
            auto basis = elementary_basis(n, checked_order, false);
            if (basis.size() != d.basis.size()) return false;
            TruncatedSeries combo(checked_order);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (basis[i].label != d.basis[i]) return false;
                combo = combo + basis[i].series.scaled(d.coefficients[i]);
            }
            return combo == theta_series(n, checked_order);
        }
        if (!det_witness || !a3_witness) return false;
        return det_test(n) == *det_witness && a3(n) == *a3_witness && *det_witness != 0 &&
               *a3_witness != 0;
    } catch (const std::exception&) {
        return false;
    }
}

nlohmann::json ElementarityCertificate::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["verdict"] = verdict == Verdict::elementary ? "elementary" : "not_elementary";
    j["checked_order"] = checked_order;
    nlohmann::json values = nlohmann::json::array();
    if (verdict == Verdict::elementary) {
        j["witness_kind"] = "decomposition";
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& b : decomposition->basis) basis.push_back(b);
        for (const auto& c : decomposition->coefficients) values.push_back(to_string(c));
        j["basis"] = std::move(basis);
    } else {
        j["witness_kind"] = "det_and_a3";
        values.push_back(to_string(*det_witness));
        values.push_back(to_string(*a3_witness));
    }
    j["values"] = std::move(values);
    return j;
}

}  // namespace sumsq
