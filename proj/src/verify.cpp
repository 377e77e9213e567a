#include "modcount/verify.hpp"

#include "modcount/bernoulli.hpp"
#include "modcount/fatgraph.hpp"
#include "modcount/hurwitz.hpp"
#include "modcount/json_io.hpp"
#include "modcount/laplace.hpp"
#include "modcount/moduli.hpp"
#include "modcount/polytope.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace modcount {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::ostringstream log;
    long long checks = 0;

    void expect(bool condition, const std::string& message) {
        ++checks;
        if (!condition) {
            ok = false;
            log << "FAIL: " << message << "; ";
        }
    }
    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        ++checks;
        if (!(got == want)) {
            ok = false;
            log << "FAIL: " << what << "; ";
        }
    }
};

// all positive compositions of total sums <= max_sum into n parts
std::vector<std::vector<long long>> compositions_up_to(int n, int max_sum) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(n, 1);
    auto rec = [&](auto&& self, int pos, long long budget) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (long long v = 1; v <= budget - (n - pos - 1); ++v) {
            cur[pos] = v;
            self(self, pos + 1, budget - v);
        }
    };
    if (n <= max_sum) rec(rec, 0, max_sum);
    return out;
}

Polynomial poly_from_terms(int vars, std::initializer_list<std::pair<Exponents, Rational>> terms) {
    Polynomial p(vars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Polynomial expected_table2(int g, int n) {
    // printed even-class rows
    if (g == 0 && n == 3) return Polynomial::constant(3, Rational(1));
    if (g == 1 && n == 1)
        return poly_from_terms(1, {{{2}, Rational(1, 48)}, {{0}, Rational(-4, 48)}});
    if (g == 0 && n == 4) {
        Polynomial p(4);
        for (int i = 0; i < 4; ++i) {
            Exponents e(4, 0);
            e[i] = 2;
            p.add_term(e, Rational(1, 4));
        }
        p.add_term(Exponents(4, 0), Rational(-1));
        return p;
    }
    if (g == 1 && n == 2) {
        // (x - 4)(x - 8)/384 with x = b1^2 + b2^2
        Polynomial x(2);
        x.add_term({2, 0}, Rational(1));
        x.add_term({0, 2}, Rational(1));
        Polynomial shift4 = x - Polynomial::constant(2, Rational(4));
        Polynomial shift8 = x - Polynomial::constant(2, Rational(8));
        return (shift4 * shift8).scaled(Rational(1, 384));
    }
    if (g == 2 && n == 1) {
        Polynomial x(1);
        x.add_term({2}, Rational(1));
        auto shift = [&](long long c) { return x - Polynomial::constant(1, Rational(c)); };
        Polynomial five_x(1);
        five_x.add_term({2}, Rational(5));
        Polynomial p = shift(4) * shift(16) * shift(36) * (five_x - Polynomial::constant(1, Rational(32)));
        return p.scaled(Rational(BigInt(1), BigInt(65536) * 27 * 5)); // 2^16 3^3 5
    }
    throw std::logic_error("expected_table2: no row");
}

Polynomial expected_table1(int g, int n) {
    if (g == 0 && n == 3) return Polynomial::constant(3, Rational(1, 2));
    if (g == 1 && n == 1) return poly_from_terms(1, {{{2}, Rational(1, 96)}});
    if (g == 0 && n == 4) {
        Polynomial p(4);
        for (int i = 0; i < 4; ++i) {
            Exponents e(4, 0);
            e[i] = 2;
            p.add_term(e, Rational(1, 8));
        }
        return p;
    }
    if (g == 1 && n == 2) {
        Polynomial x(2);
        x.add_term({2, 0}, Rational(1));
        x.add_term({0, 2}, Rational(1));
        return (x * x).scaled(Rational(1, 768)); // 2^8 * 3
    }
    if (g == 2 && n == 1) {
        Polynomial p(1);
        p.add_term({8}, Rational(BigInt(1), BigInt(131072) * 27)); // 2^17 3^3
        return p;
    }
    throw std::logic_error("expected_table1: no row");
}

CriterionResult run_criterion(const std::string& id, const std::function<void(Checker&)>& body) {
    CriterionResult result;
    result.id = id;
    Checker check;
    auto start = Clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.ok = false;
        check.log << "EXCEPTION: " << e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.pass = check.ok;
    std::string log = check.log.str();
    result.detail = std::to_string(check.checks) + " checks" + (log.empty() ? "" : "; " + log);
    return result;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    std::filesystem::create_directories(options.artifact_dir);
    VerifyReport report;

    // 1. printed quasi-polynomial rows, exact
    report.results.push_back(run_criterion("C1-table2-quasipolynomials", [&](Checker& c) {
        auto start = Clock::now();
        c.expect_eq(lattice_count_quasipolynomial(0, 3).class_poly({0, 0, 0}), expected_table2(0, 3),
                    "N(0,3) even class");
        c.expect_eq(lattice_count_quasipolynomial(1, 1).class_poly({0}), expected_table2(1, 1),
                    "N(1,1) even class");
        c.expect_eq(lattice_count_quasipolynomial(0, 4).class_poly({0, 0, 0, 0}), expected_table2(0, 4),
                    "N(0,4) even class");
        c.expect_eq(lattice_count_quasipolynomial(1, 2).class_poly({0, 0}), expected_table2(1, 2),
                    "N(1,2) even class");
        c.expect_eq(lattice_count_quasipolynomial(2, 1).class_poly({0}), expected_table2(2, 1),
                    "N(2,1) even class");
        // odd-pair class of (0,4): (sum b_i^2 - 2)/4
        Polynomial odd_class = expected_table2(0, 4) + Polynomial::constant(4, Rational(1, 2));
        c.expect_eq(lattice_count_quasipolynomial(0, 4).class_poly({1, 1, 0, 0}), odd_class,
                    "N(0,4) odd-pair class");
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        c.expect(elapsed < 300.0, "table 2 regression exceeded 5 minutes");
    }));

    // 2. printed volume rows, exact (plus the top-degree check against the
    //    printed Weil-Petersson rows)
    report.results.push_back(run_criterion("C2-table1-volumes", [&](Checker& c) {
        for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}}) {
            c.expect_eq(kontsevich_volume(g, n), expected_table1(g, n),
                        "volume row (" + std::to_string(g) + "," + std::to_string(n) + ")");
            // top of V^WP equals 2^{2g-2+n} V
            Polynomial scaled = kontsevich_volume(g, n).scaled(
                Rational(BigInt(1) << (2 * g - 2 + n)));
            Polynomial wp_top(n);
            if (g == 0 && n == 3) wp_top = Polynomial::constant(3, Rational(1));
            if (g == 1 && n == 1) wp_top = poly_from_terms(1, {{{2}, Rational(1, 48)}});
            if (g == 0 && n == 4) {
                for (int i = 0; i < 4; ++i) {
                    Exponents e(4, 0);
                    e[i] = 2;
                    wp_top.add_term(e, Rational(1, 2));
                }
            }
            if (g == 1 && n == 2) {
                Polynomial x(2);
                x.add_term({2, 0}, Rational(1));
                x.add_term({0, 2}, Rational(1));
                wp_top = (x * x).scaled(Rational(1, 192));
            }
            if (g == 2 && n == 1) wp_top = poly_from_terms(1, {{{8}, Rational(BigInt(1), BigInt(16384) * 27)}});
            c.expect_eq(scaled, wp_top, "V^WP top degree (" + std::to_string(g) + "," +
                                            std::to_string(n) + ")");
        }
    }));

    // 3. three-way oracle agreement over every stable type in the frontier
    report.results.push_back(run_criterion("C3-threeway-oracles", [&](Checker& c) {
        long long instances = 0;
        for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 1}}) {
            const auto& catalog = cached_catalog(g, n);
            (void)catalog;
            auto bs = compositions_up_to(n, 12);
            std::vector<int> bad(bs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (size_t i = 0; i < bs.size(); ++i) {
                Rational direct = lattice_count_direct(g, n, bs[i]);
                Rational recursive = lattice_count_recursive(g, n, bs[i]);
                Rational belyi = belyi_count(g, bs[i], true);
                if (!(direct == recursive && recursive == belyi)) bad[i] = 1;
            }
            for (size_t i = 0; i < bs.size(); ++i) {
                ++instances;
                c.expect(bad[i] == 0, "oracle mismatch at (" + std::to_string(g) + "," +
                                          std::to_string(n) + ") some b");
            }
        }
        c.expect(instances >= 60, "need at least 60 instances");
        c.log << instances << " instances; ";
        c.log << "Fat(0,3): " << cached_catalog(0, 3).entries.size() << " labeled / "
              << cached_catalog(0, 3).unlabeled_classes << " unlabeled; ";
    }));

    // 4. Euler characteristics, both methods
    report.results.push_back(run_criterion("C4-euler-characteristics", [&](Checker& c) {
        for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {0, 5}, {1, 2}, {2, 1}}) {
            Rational lattice = euler_characteristic(g, n, EulerMethod::Lattice);
            Rational zeta = euler_characteristic(g, n, EulerMethod::Zeta);
            c.expect_eq(lattice, zeta, "euler methods disagree at (" + std::to_string(g) + "," +
                                           std::to_string(n) + ")");
        }
        c.expect_eq(euler_characteristic(0, 4, EulerMethod::Lattice), Rational(-1), "chi(M_{0,4})");
        c.expect_eq(euler_characteristic(1, 1, EulerMethod::Lattice), Rational(-1, 12),
                    "chi(M_{1,1})");
        c.expect_eq(euler_characteristic(2, 1, EulerMethod::Lattice), Rational(1, 120),
                    "chi(M_{2,1})");
    }));

    // 5. Harer-Zagier pipeline
    report.results.push_back(run_criterion("C5-harer-zagier", [&](Checker& c) {
        for (int g : {1, 2, 3}) {
            for (long long b = 2; b <= 12; b += 2) {
                Rational hz = lattice_count_g1_hz(g, b);
                c.expect_eq(hz, lattice_count_recursive(g, 1, {b}),
                            "hz vs recursion at g=" + std::to_string(g) + " b=" + std::to_string(b));
                if (g <= 2)
                    c.expect_eq(hz, lattice_count_direct(g, 1, {b}),
                                "hz vs direct at g=" + std::to_string(g) + " b=" + std::to_string(b));
            }
        }
    }));

    // 6. dilaton identity
    report.results.push_back(run_criterion("C6-dilaton", [&](Checker& c) {
        for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
            for (const auto& b : compositions_up_to(n, 12)) {
                auto [lhs, rhs] = dilaton_check(g, n, b);
                c.expect_eq(lhs, rhs, "dilaton fails at (" + std::to_string(g) + "," +
                                          std::to_string(n) + ")");
            }
            std::vector<long long> zeros(n, 0);
            std::vector<long long> two_zeros{2};
            two_zeros.insert(two_zeros.end(), zeros.begin(), zeros.end());
            c.expect(lattice_count_quasipolynomial(g, n + 1).evaluate(two_zeros).is_zero(),
                     "N(2,0,...,0) != 0 at (" + std::to_string(g) + "," + std::to_string(n) + ")");
        }
    }));

    // 7. Hurwitz / ELSV
    report.results.push_back(run_criterion("C7-hurwitz-elsv", [&](Checker& c) {
        const std::vector<std::pair<int, Partition>> cases = {
            {0, Partition{{1, 1, 1}}}, {0, Partition{{2, 1}}},  {0, Partition{{2, 1, 1}}},
            {1, Partition{{1, 1}}},    {1, Partition{{2}}},     {0, Partition{{3, 1}}},
        };
        for (const auto& [g, mu] : cases) {
            Rational brute = simple_hurwitz(g, mu);
            Rational elsv = elsv_hurwitz(g, mu);
            c.expect_eq(brute, elsv,
                        "ELSV mismatch at g=" + std::to_string(g) + " mu=" + mu.to_string() +
                            " (oracle " + brute.to_string() + ", formula " + elsv.to_string() + ")");
        }
        BranchData data{4, {Partition{{4}}, Partition{{2, 2}}, Partition{{4}}}};
        c.expect_eq(class_trace(data), Rational(1, 4), "trace of (4),(2,2),(4) at d=4");
    }));

    // 8. vector partition regression
    report.results.push_back(run_criterion("C8-vector-partition", [&](Checker& c) {
        ConstraintSystem sys{{{1, 2, 2}, {1, 0, 0}}};
        for (long long b1 = 1; b1 <= 14; ++b1)
            for (long long b2 = 1; b2 <= 14; ++b2) {
                BigInt count = count_lattice_points(sys, {b1, b2}, true);
                BigInt want = 0;
                if ((b1 - b2) % 2 == 0 && b1 > b2) want = (b1 - b2) / 2 - 1;
                c.expect_eq(count, want, "printed count formula");
            }
        c.expect_eq(polytope_volume(sys, {3, 1}), Rational(1, 2), "printed volume at (3,1)");
        c.expect_eq(polytope_volume(sys, {7, 3}), Rational(1), "printed volume at (7,3)");
        c.expect_eq(polytope_volume(sys, {1, 3}), Rational(0), "printed volume at (1,3)");

        // closed Laplace form z1^5 z2 / ((1-z1 z2)(1-z1^2)^2), series-checked
        RationalExpr z1 = RationalExpr::variable(0), z2 = RationalExpr::variable(1);
        RationalExpr one = RationalExpr::constant(Rational(1));
        RationalExpr closed = RationalExpr::pow(z1, 5) * z2 /
                              ((one - z1 * z2) * RationalExpr::pow(one - z1 * z1, 2));
        TruncatedSeries closed_series = series_expand(closed, 2, 12);
        TruncatedSeries expanded = expand_laplace_form(vpf_laplace_form(sys), 12);
        c.expect(closed_series == expanded, "printed Laplace form vs column product");
        bool coefficients_ok = true;
        for_each_exponent(2, 12, [&](const Exponents& e) {
            BigInt want = count_lattice_points(sys, {e[0], e[1]}, true);
            if (expanded.coefficient(e) != Rational(want)) coefficients_ok = false;
        });
        c.expect(coefficients_ok, "Laplace expansion vs strict counts");

        ConstraintSystem mixed{{{1, 1, 2, 0}, {1, 1, 0, 2}}};
        for (long long b1 = 3; b1 <= 9; b1 += 2)
            for (long long b2 = b1; b2 <= 9; b2 += 2) {
                Rational want = Rational(b1 * b1, 4) - Rational(b1) + Rational(3, 4);
                c.expect_eq(Rational(count_lattice_points(mixed, {b1, b2}, true)), want,
                            "quarter-square regression");
            }

        ConstraintSystem triangle{{{1, 1, 1}}};
        Polynomial ehrhart = ehrhart_polynomial(triangle, {1}, 6, true); // reciprocity k<=6
        Polynomial want(1);
        want.add_term({2}, Rational(1, 2));
        want.add_term({1}, Rational(3, 2));
        want.add_term({0}, Rational(1));
        c.expect_eq(ehrhart, want, "triangle Ehrhart polynomial");
        c.expect_eq(ehrhart.evaluate(std::vector<BigInt>{BigInt(0)}), Rational(1),
                    "Ehrhart constant term");
    }));

    // 9. Laplace identities
    report.results.push_back(run_criterion("C9-laplace", [&](Checker& c) {
        c.expect(compare_omega_series(0, 3, 12).matched, "omega03 closed form to order 12");
        c.expect(compare_omega_series(1, 1, 12).matched, "omega11 closed form to order 12");

        SeriesDiff diff04 = compare_omega_series(0, 4, 8);
        nlohmann::json artifact = to_json(diff04);
        artifact["mismatches"] = nlohmann::json::array();
        bool mixed_only = true;
        for (const auto& m : diff04.mismatches) {
            int odd = 0;
            for (int e : m.exp) odd += (e + 1) % 2 == 1 ? 1 : 0; // b = e + 1
            if (odd == 0 || odd == static_cast<int>(m.exp.size())) mixed_only = false;
            artifact["mismatches"].push_back({{"exp", m.exp},
                                              {"direct", m.direct.to_string()},
                                              {"closed_form", m.closed_form.to_string()}});
        }
        artifact["note"] =
            diff04.matched
                ? "printed omega04 matches the direct series"
                : std::string("printed omega04 differs from the direct series") +
                      (mixed_only ? " exactly on mixed-parity classes" : "");
        {
            // the volume route and the printed pole-local form for (0,4)
            AiryForm computed = airy_form_from_volume(0, 4);
            AiryForm printed = printed_airy_form(0, 4);
            Rational ratio = airy_form_value_at_one(computed) / airy_form_value_at_one(printed);
            artifact["airy04_computed_over_printed"] = ratio.to_string();
        }
        std::ofstream out(std::filesystem::path(options.artifact_dir) / "omega04_diff.json");
        out << artifact.dump(2) << "\n";
        c.expect(out.good(), "omega04 diff artifact written");
        c.log << "omega04 " << (diff04.matched ? "matched" : "documented discrepancy") << "; ";

        c.expect(airy_form_from_volume(0, 3) == printed_airy_form(0, 3), "airy form (0,3)");
        c.expect(airy_form_from_volume(1, 1) == printed_airy_form(1, 1), "airy form (1,1)");

        std::vector<Rational> svals{Rational(1, 4), Rational(1, 10), Rational(1, 40),
                                    Rational(1, 100)};
        AsymptoticReport asym = asymptotic_airy_check(1, 1, svals);
        c.expect(asym.monotone_pass, "asymptotic ratios not monotone for (1,1)");
        c.expect(asym.entries.back().abs_ratio_gap <= Rational(1, 20),
                 "asymptotic ratio not within 5% at s = 1/100");
        nlohmann::json asym_json = nlohmann::json::array();
        for (const auto& e : asym.entries)
            asym_json.push_back({{"s", e.s.to_string()},
                                 {"ratio", e.ratio.to_string()},
                                 {"abs_gap", e.abs_ratio_gap.to_string()}});
        std::ofstream asym_out(std::filesystem::path(options.artifact_dir) /
                               "asymptotic_report.json");
        asym_out << asym_json.dump(2) << "\n";

        AsymptoticReport asym03 = asymptotic_airy_check(0, 3, svals);
        c.expect(asym03.monotone_pass, "asymptotic ratios not monotone for (0,3)");
    }));

    // 10. structural properties
    report.results.push_back(run_criterion("C10-structural", [&](Checker& c) {
        for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 1}}) {
            const auto& catalog = cached_catalog(g, n);
            // wherever the index is defined it equals 2; the remaining cells
            // are rank-deficient and must report that as the documented error
            bool all_two = true;
            long defined = 0, deficient = 0;
            for (const auto& entry : catalog.entries) {
                try {
                    ++defined;
                    if (lattice_index(ConstraintSystem{incidence_matrix(entry.graph)}) != 2)
                        all_two = false;
                } catch (const std::domain_error&) {
                    --defined;
                    ++deficient;
                }
            }
            c.expect(all_two && defined > 0,
                     "incidence index != 2 somewhere in (" + std::to_string(g) + "," +
                         std::to_string(n) + ")");
            c.log << "(" << g << "," << n << "): " << defined << " full-rank / " << deficient
                  << " degenerate; ";

            const QuasiPolynomial& qp = lattice_count_quasipolynomial(g, n);
            Polynomial top = qp.class_poly(ParityClass(n, 0)).homogeneous_part(6 * g - 6 + 2 * n);
            for (const auto& [parity, poly] : qp.classes()) {
                int weight = std::accumulate(parity.begin(), parity.end(), 0);
                c.expect(weight % 2 == 0, "odd-weight class stored");
                c.expect(poly.homogeneous_part(6 * g - 6 + 2 * n) == top,
                         "top homogeneous part differs between parity classes");
            }
            c.expect(top == kontsevich_volume(g, n).scaled(Rational(2)),
                     "top part is not twice the volume");
        }
        // odd length sums vanish structurally
        c.expect(lattice_count_recursive(0, 4, {1, 1, 1, 2}).is_zero(), "odd-sum value nonzero");
        c.expect(lattice_count_recursive(1, 2, {3, 2}).is_zero(), "odd-sum value nonzero");

        auto tau = intersection_numbers(1, 1);
        c.expect_eq(tau[{1}], Rational(1, 24), "<tau_1> on (1,1)");
        auto psi03 = intersection_numbers(0, 3);
        c.expect_eq(psi03[{0, 0, 0}], Rational(1), "<tau_0^3> on (0,3)");
    }));

    return report;
}

} // namespace modcount
