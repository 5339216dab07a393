// Command-line surface: compute, qexp, verify, table, bench.
// Exit codes: 0 success, 2 usage error, 3 verification failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumsq/arith.hpp"
#include "sumsq/numeric.hpp"
#include "sumsq/qseries.hpp"
#include "sumsq/repnum.hpp"
#include "sumsq/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace sumsq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

// CLI-level feasibility guards (the library has its own tighter defaults).
constexpr unsigned kBruteMaxN = 32;
constexpr std::uint64_t kBruteMaxM = 100000;
constexpr std::uint64_t kSeriesMaxOrder = 100000;

struct GlobalOpts {
    bool json = false;
    bool quiet = false;
};

void note(const GlobalOpts& g, const std::string& msg) {
    if (!g.quiet) std::cerr << msg << "\n";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct ComputeArgs {
    unsigned n = 0;
    std::string m_text;
    std::string factorization;
    std::string method = "auto";
};

bool method_feasible(const std::string& method, unsigned n, const Integer& m) {
    if (method == "formula") return n <= 12 && n % 2 == 0 && n >= 2;
    if (method == "series")
        return m.fits_ulong_p() && m.get_ui() <= kSeriesMaxOrder;
    if (method == "brute")
        return n <= kBruteMaxN && m.fits_ulong_p() && m.get_ui() <= kBruteMaxM;
    return false;
}

Integer run_method(const std::string& method, unsigned n, const Integer& m,
                   const std::optional<Factorization>& f) {
    if (method == "formula") {
        if (n == 12) return r12(m);
        return r_elementary({n, m, f});
    }
    if (method == "series") {
        std::size_t ord = static_cast<std::size_t>(m.get_ui());
        TruncatedSeries theta = theta_series(n, std::max<std::size_t>(ord, 1));
        const Rational& c = theta.coeff(ord);
        return Integer(c.get_num());
    }
    if (method == "brute") {
        static LatticeCounter counter(kBruteMaxN, kBruteMaxM);
        return counter.count(n, m);
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

int cmd_compute(const GlobalOpts& g, const ComputeArgs& a) {
    if (a.n == 0 || a.n % 2 != 0) {
        std::cerr << "error: n must be a positive even integer (got " << a.n << ")\n";
        return kExitUsage;
    }
    Integer m = parse_integer(a.m_text);
    if (m < 0) {
        std::cerr << "error: m must be non-negative\n";
        return kExitUsage;
    }
    std::optional<Factorization> f;
    bool supplied = false;
    if (!a.factorization.empty()) {
        f = Factorization::parse(a.factorization);
        if (m >= 1 && f->value() != m) {
            std::cerr << "error: factorization " << f->str() << " = " << f->value().get_str()
                      << " does not equal m = " << m.get_str() << "\n";
            return kExitUsage;
        }
        supplied = true;
    }
    std::string method = a.method;
    if (method == "auto") {
        if (a.n <= 12) method = "formula";
        else if (method_feasible("brute", a.n, m)) method = "brute";
        else {
            std::cerr << "error: no elementary formula for n = " << a.n
                      << " and m is beyond the brute-force guard; try --method series\n";
            return kExitUsage;
        }
    }
    if (method == "formula" && a.n > 12) {
        std::cerr << "error: the formula method covers n <= 12 only\n";
        return kExitUsage;
    }
    if (!method_feasible(method, a.n, m)) {
        std::cerr << "error: method '" << method << "' is not feasible for n = " << a.n
                  << ", m = " << m.get_str() << "\n";
        return kExitUsage;
    }
    if (!supplied && method == "formula" && m >= 1 && !m.fits_ulong_p()) {
        std::cerr << "error: m exceeds 64 bits; pass --factorization p1^e1,p2^e2,...\n";
        return kExitUsage;
    }
    auto t0 = std::chrono::steady_clock::now();
    Integer value = run_method(method, a.n, m, f);
    double elapsed = ms_since(t0);
    if (g.json) {
        json out{{"n", a.n},
                 {"m", m.get_str()},
                 {"value", value.get_str()},
                 {"method", method},
                 {"elapsed_ms", elapsed},
                 {"factorization_supplied", supplied}};
        if (m >= 1 && (supplied || method == "formula"))
            out["factorization"] = (f ? *f : factorize(m)).str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.get_str() << "\n";
    }
    return kExitOk;
}

struct QexpArgs {
    std::string form;
    unsigned weight = 0;
    bool weight_given = false;
    std::size_t order = 8;
};

int cmd_qexp(const GlobalOpts& g, const QexpArgs& a) {
    TruncatedSeries s(0);
    if (a.form == "eta12") {
        if (a.weight_given) {
            std::cerr << "error: eta12 takes no weight argument\n";
            return kExitUsage;
        }
        s = eta12_2z(a.order);
    } else {
        if (!a.weight_given) {
            std::cerr << "error: form '" << a.form << "' needs a weight (theta takes n, E/E1/E2/C take k)\n";
            return kExitUsage;
        }
        if (a.form == "theta") s = theta_series(a.weight, a.order);
        else if (a.form == "E") s = eisenstein_E(a.weight, a.order);
        else if (a.form == "E1") s = eisenstein_E1(a.weight, a.order);
        else if (a.form == "E2") s = eisenstein_E2(a.weight, a.order);
        else if (a.form == "C") s = cm_form(a.weight, a.order);
        else {
            std::cerr << "error: unknown form '" << a.form << "'\n";
            return kExitUsage;
        }
    }
    if (g.json) {
        json out = s.to_json();
        out["form"] = a.form;
        if (a.weight_given) out["weight"] = a.weight;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << s.pretty() << "\n";
    }
    return kExitOk;
}

bool parse_range(const std::string& text, unsigned& lo, unsigned& hi) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
        hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

struct VerifyArgs {
    unsigned n = 0;
    bool n_given = false;
    std::string range;
    std::size_t order = 200;
};

std::string certificate_line(const ElementarityCertificate& c) {
    std::string out = "n=" + std::to_string(c.n) + ": ";
    if (c.verdict == Verdict::elementary) {
        out += "elementary, theta_" + std::to_string(c.n) + " =";
        const auto& d = *c.decomposition;
        bool first = true;
        for (std::size_t i = 0; i < d.basis.size(); ++i) {
            const Rational& coeff = d.coefficients[i];
            if (coeff == 0) continue;
            Rational mag = abs(coeff);
            out += (coeff < 0 ? " - " : (first ? " " : " + "));
            out += (mag == 1 ? "" : to_string(mag) + "*") + d.basis[i];
            first = false;
        }
        out += "  (coefficients verified through q^" + std::to_string(c.checked_order) + ")";
    } else {
        out += "not elementary, det = " + to_string(*c.det_witness) +
               ", a3 = " + to_string(*c.a3_witness);
    }
    return out;
}

int cmd_verify(const GlobalOpts& g, const VerifyArgs& a) {
    unsigned lo = a.n, hi = a.n;
    if (!a.n_given && !parse_range(a.range, lo, hi)) {
        std::cerr << "error: pass --n N or --range lo..hi\n";
        return kExitUsage;
    }
    if (a.n_given && a.n % 2 != 0) {
        std::cerr << "error: n must be even (theta_n for odd n has half-integral weight)\n";
        return kExitUsage;
    }
    json certs = json::array();
    bool all_ok = true;
    for (unsigned n = lo; n <= hi; ++n) {
        if (n % 2 != 0 || n == 0) {
            if (n % 2 != 0) note(g, "note: skipping odd n = " + std::to_string(n));
            continue;
        }
        ElementarityCertificate cert = elementarity(n, a.order);
        bool ok = cert.self_check();
        all_ok = all_ok && ok;
        if (g.json) {
            json j = cert.to_json();
            j["self_check"] = ok;
            certs.push_back(std::move(j));
        } else {
            std::cout << certificate_line(cert) << (ok ? "" : "  [SELF-CHECK FAILED]") << "\n";
        }
    }
    if (g.json) std::cout << certs.dump() << "\n";
    if (!all_ok) {
        std::cerr << "error: certificate self-check failed\n";
        return kExitVerification;
    }
    return kExitOk;
}

struct TableArgs {
    std::string range = "4..20";
    std::string format = "text";
};

int cmd_table(const GlobalOpts& g, const TableArgs& a) {
    (void)g;
    unsigned lo = 0, hi = 0;
    if (!parse_range(a.range, lo, hi) || lo < 4) {
        std::cerr << "error: --range needs lo..hi with 4 <= lo <= hi\n";
        return kExitUsage;
    }
    std::cout << format_a3_table(a3_table(lo, hi), a.format == "csv");
    return kExitOk;
}

struct BenchArgs {
    unsigned n = 0;
    std::vector<std::string> m_texts;
    std::vector<std::string> methods;  // empty = every feasible method
};

int cmd_bench(const GlobalOpts& g, const BenchArgs& a) {
    if (a.n == 0 || a.n % 2 != 0) {
        std::cerr << "error: n must be a positive even integer\n";
        return kExitUsage;
    }
    const std::vector<std::string> all_methods = {"formula", "series", "brute"};
    bool explicit_methods = !a.methods.empty();
    std::vector<std::string> methods = explicit_methods ? a.methods : all_methods;
    for (const auto& m : methods) {
        if (std::find(all_methods.begin(), all_methods.end(), m) == all_methods.end()) {
            std::cerr << "error: unknown method '" << m << "'\n";
            return kExitUsage;
        }
    }
    json rows = json::array();
    std::vector<std::string> lines;
    for (const auto& m_text : a.m_texts) {
        Integer m = parse_integer(m_text);
        if (m < 0) {
            std::cerr << "error: m must be non-negative\n";
            return kExitUsage;
        }
        std::optional<Integer> value;
        json timings = json::object();
        std::string line = "m=" + m.get_str() + ":";
        for (const auto& method : methods) {
            if (!method_feasible(method, a.n, m)) {
                if (explicit_methods) {
                    std::cerr << "error: method '" << method << "' is not feasible for n = " << a.n
                              << ", m = " << m.get_str() << "\n";
                    return kExitUsage;
                }
                line += "  " + method + " -";
                continue;
            }
            auto t0 = std::chrono::steady_clock::now();
            Integer v = run_method(method, a.n, m, std::nullopt);
            double elapsed = ms_since(t0);
            if (value && *value != v) {
                std::cerr << "error: method disagreement at m = " << m.get_str() << ": " << method
                          << " gives " << v.get_str() << ", previous methods gave "
                          << value->get_str() << "\n";
                return kExitVerification;
            }
            value = v;
            timings[method] = elapsed;
            char buf[64];
            std::snprintf(buf, sizeof(buf), "  %s %.3fms", method.c_str(), elapsed);
            line += buf;
        }
        if (!value) {
            std::cerr << "error: no feasible method for m = " << m.get_str() << "\n";
            return kExitUsage;
        }
        line = "m=" + m.get_str() + "  r=" + value->get_str() + line.substr(line.find(':') + 1);
        lines.push_back(line);
        rows.push_back({{"m", m.get_str()}, {"value", value->get_str()}, {"timings_ms", timings}});
    }
    if (g.json) {
        std::cout << json{{"n", a.n}, {"rows", rows}}.dump() << "\n";
    } else {
        std::cout << "n = " << a.n << " (timings informational; values cross-checked)\n";
        for (const auto& l : lines) std::cout << l << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact representation numbers for sums of even numbers of squares,\n"
                 "their q-expansions, and elementarity certificates."};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit machine-readable JSON");
    app.add_flag("--quiet", g.quiet, "suppress notes on stderr");

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "compute r_n(m)");
    compute->add_option("n", ca.n, "number of squares (even)")->required();
    compute->add_option("m", ca.m_text, "target integer")->required();
    compute->add_option("--factorization", ca.factorization,
                        "prime factorization of m as p1^e1,p2^e2,...");
    compute->add_option("--method", ca.method, "formula|series|brute (default: auto)")
        ->check(CLI::IsMember({"auto", "formula", "series", "brute"}));

    QexpArgs qa;
    auto* qexp = app.add_subcommand("qexp", "print a q-expansion");
    qexp->add_option("form", qa.form, "theta|E|E1|E2|C|eta12")->required();
    auto* wopt = qexp->add_option("weight", qa.weight, "n for theta, k for E/E1/E2/C");
    qexp->add_option("--order", qa.order, "truncation order (default 8)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "emit elementarity certificates");
    auto* nopt = verify->add_option("--n", va.n, "single even n");
    verify->add_option("--range", va.range, "range of n, e.g. 2..60");
    verify->add_option("--order", va.order, "decomposition check order (default 200)");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "a3 = r_n(3) - c_3 table");
    table->add_option("--range", ta.range, "range of n (default 4..20)");
    table->add_option("--format", ta.format, "text|csv")->check(CLI::IsMember({"text", "csv"}));

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "time the methods against each other");
    bench->add_option("n", ba.n, "number of squares (even)")->required();
    bench->add_option("m", ba.m_texts, "target integers")->required()->expected(-1);
    bench->add_option("--methods", ba.methods, "subset of formula,series,brute")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    qa.weight_given = wopt->count() > 0;
    va.n_given = nopt->count() > 0;

    try {
        if (compute->parsed()) return cmd_compute(g, ca);
        if (qexp->parsed()) return cmd_qexp(g, qa);
        if (verify->parsed()) return cmd_verify(g, va);
        if (table->parsed()) return cmd_table(g, ta);
        if (bench->parsed()) return cmd_bench(g, ba);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
