// Acceptance suite: one pass/fail line per criterion, exit nonzero if any
// criterion fails.
//
//   blockrb_acceptance <path-to-cli> <golden-dir> [--regen]
//
// --regen rewrites the golden files from the current run instead of
// comparing (for intentional behavior changes; review the diff).

#include "blockrb/config.hpp"
#include "blockrb/derived.hpp"
#include "blockrb/report.hpp"

#include "support/generators.hpp"
#include "support/independent_feq.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace blockrb;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_golden;
bool g_regen = false;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool matches_golden(const std::string& name, const std::string& content, std::string& detail) {
    const fs::path path = g_golden / name;
    if (g_regen) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << content;
        detail = "regenerated " + name;
        return true;
    }
    if (!fs::exists(path)) {
        detail = "missing golden file " + name;
        return false;
    }
    const std::string expected = read_file(path);
    if (expected != content) {
        detail = "byte mismatch against " + name;
        return false;
    }
    detail = "byte-identical to " + name;
    return true;
}

int run_cli(const std::string& args) {
    const std::string command = g_cli + " " + args;
    return std::system(command.c_str());
}

// 1. Lie axioms for B(q) with symbolic q on the window |m|,|i| <= 4.
void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const AlgebraParams params = AlgebraParams::bq_symbolic();
    const auto degrees = Window::square(4).basis_degrees();

    std::size_t anti_fail = 0;
    std::vector<GradedElement> basis;
    basis.reserve(degrees.size());
    for (const Bidegree& d : degrees)
        basis.push_back(GradedElement::basis(d.m, d.i));

    for (const auto& u : basis)
        for (const auto& v : basis)
            if (!antisymmetry_defect(params, u, v).is_zero())
                ++anti_fail;

    std::size_t jacobi_fail = 0;
    for (const auto& u : basis)
        for (const auto& v : basis)
            for (const auto& w : basis)
                if (!jacobi_defect(params, u, v, w).is_zero())
                    ++jacobi_fail;

    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << anti_fail << " antisymmetry defects, " << jacobi_fail << " jacobi defects, "
           << elapsed << "s";
    report(1, "Lie axioms for B(q), symbolic q, window 4",
           anti_fail == 0 && jacobi_fail == 0 && elapsed < 60.0, detail.str());
}

// 2. Constant-profile identity, symbolic in q and c, (i,j) in [-10,10]^2.
void criterion2() {
    const Profile1D g = ConstantProfile{Scalar::symbol('c')};
    const Scalar q = Scalar::symbol('q');
    std::size_t nonzero = 0;
    for (std::int64_t i = -10; i <= 10; ++i)
        for (std::int64_t j = -10; j <= 10; ++j)
            for (std::int64_t kp : {-2, 0, 1})
                if (!feq_residual(g, i, j, q, kp).is_zero())
                    ++nonzero;
    report(2, "constant profile solves the functional equation symbolically", nonzero == 0);
}

// 3. Example reproduction: g(i)=i fails at (1,0) with -(1+k')(1+k'+q).
void criterion3() {
    const Profile1D lin = PolynomialProfile{{Scalar(0), Scalar(1)}};
    const Scalar q = Scalar::symbol('q');
    bool ok = true;
    std::string detail;
    for (std::int64_t kp = -2; kp <= 2; ++kp) {
        const Scalar expected = -(Scalar(1 + kp) * (q + (1 + kp)));
        if (!(feq_residual(lin, 1, 0, q, kp) == expected)) {
            ok = false;
            detail = "closed form mismatch at k'=" + std::to_string(kp);
        }
    }

    auto cells = admissibility_matrix(Window{-6, 6, -6, 6}, Scalar(Rational(1, 2)), 1, 0,
                                      EquationId::FEQ_NONRES);
    bool poly_fail = false, canonical = false;
    for (const auto& cell : cells) {
        if (cell.family != "polynomial")
            continue;
        poly_fail = !cell.pass;
        for (const Witness& w : cell.witnesses)
            if (w.inputs.size() == 1 && w.inputs[0] == Bidegree{1, 0} &&
                w.value == Scalar(Rational(-3, 2)))
                canonical = true;
    }
    if (!poly_fail)
        detail = "polynomial row did not fail";
    else if (!canonical)
        detail = "witness (1,0) with residual -3/2 absent";
    report(3, "linear profile counterexample reproduced", ok && poly_fail && canonical, detail);
}

// 4. Table of canonical families under FEQ_NONRES at q=1/2, k'=0.
void criterion4() {
    auto cells = admissibility_matrix(Window{-6, 6, -6, 6}, Scalar(Rational(1, 2)), 1, 0,
                                      EquationId::FEQ_NONRES);
    bool ok = true;
    std::ostringstream detail;
    for (const auto& cell : cells) {
        if (cell.family == "constant" && !cell.pass) {
            ok = false;
            detail << "constant row failed; ";
        }
        if ((cell.family == "exponential" || cell.family == "polynomial" ||
             cell.family == "periodic") &&
            (cell.pass || cell.witnesses.empty())) {
            ok = false;
            detail << cell.family << " row did not fail with a witness; ";
        }
        if (!cell.pass && cell.witnesses.empty()) {
            ok = false;
            detail << cell.family << " failed without a witness; ";
        }
        detail << cell.family << "=" << (cell.pass ? "pass" : "fail") << " ";
    }
    report(4, "admissibility table cells at q=1/2, k'=0", ok, detail.str());
}

// 5. Brute-force search equals the independent exhaustive filter.
void criterion5() {
    const auto start = std::chrono::steady_clock::now();
    auto got = feq_solution_search(-3, 3, {Rational(0), Rational(1)}, Rational(1, 2), 0,
                                   EquationId::FEQ_NONRES);
    auto expected = indep::enumerate_solutions(-3, 3, {Rational(0), Rational(1)}, Rational(1, 2),
                                               0, false);
    const double elapsed = seconds_since(start);

    bool equal = got.solutions.size() == expected.size();
    if (equal)
        for (std::size_t s = 0; s < expected.size(); ++s)
            if (!(got.solutions[s] == expected[s]))
                equal = false;

    std::map<std::int64_t, Rational> zero_table, one_table;
    for (std::int64_t i = -3; i <= 3; ++i)
        one_table[i] = Rational(1);
    const bool constants =
        std::find(got.solutions.begin(), got.solutions.end(), zero_table) !=
            got.solutions.end() &&
        std::find(got.solutions.begin(), got.solutions.end(), one_table) != got.solutions.end();

    std::ostringstream detail;
    detail << got.solutions.size() << " solutions, independent filter " << expected.size() << ", "
           << elapsed << "s";
    report(5, "search matches the independent enumerator", equal && constants && elapsed < 10.0,
           detail.str());
}

// 6. Appendix closed forms, symbolic q, |m|,|i|,|n|,|j| <= 3.
void criterion6() {
    const Scalar q = Scalar::symbol('q');
    const AlgebraParams params = AlgebraParams::bq_symbolic();
    std::size_t mismatches = 0;
    for (std::int64_t k = -2; k <= 2; ++k) {
        for (std::int64_t kp : {-1, 0, 1}) {
            for (Profile1D g : {Profile1D{ConstantProfile{Scalar(1)}},
                                Profile1D{KroneckerProfile{0, Scalar(1)}}}) {
                OperatorSpec op = OperatorSpec::canonical(k, kp, g);
                for (std::int64_t m = -3; m <= 3; ++m)
                    for (std::int64_t i = -3; i <= 3; ++i)
                        for (std::int64_t n = -3; n <= 3; ++n)
                            for (std::int64_t j = -3; j <= 3; ++j) {
                                const GradedElement u = GradedElement::basis(m, i);
                                const GradedElement v = GradedElement::basis(n, j);
                                if (!(prelie_product(params, op, u, v) ==
                                      prelie_closed_form(g, k, kp, q, m, i, n, j)))
                                    ++mismatches;
                                if (!(deformed_bracket(params, op, u, v) - bracket(params, u, v) ==
                                      delta_term(g, k, kp, q, m, i, n, j)))
                                    ++mismatches;
                            }
            }
        }
    }
    report(6, "appendix closed forms agree with composed products", mismatches == 0,
           std::to_string(mismatches) + " mismatches");
}

// 7. Defect-residual identity on 200 randomized triples.
void criterion7() {
    const AlgebraParams params = AlgebraParams::bq_symbolic();
    auto rng = gen::make_rng(0xacce97);
    std::uniform_int_distribution<std::int64_t> kk(-2, 2);
    std::uniform_int_distribution<int> which(0, 2);
    std::size_t bad = 0;
    for (int t = 0; t < 200; ++t) {
        Profile1D g;
        switch (which(rng)) {
            case 0: g = ConstantProfile{Scalar(1)}; break;
            case 1: g = KroneckerProfile{kk(rng), Scalar(1)}; break;
            default: g = TableProfile{{{0, Scalar(1)}, {1, Scalar(2)}}}; break;
        }
        OperatorSpec op = OperatorSpec::canonical(kk(rng), kk(rng), g);
        GradedElement u = gen::random_rational_element(rng);
        GradedElement v = gen::random_rational_element(rng);
        GradedElement w = gen::random_rational_element(rng);
        GradedElement lhs = left_symmetry_defect(params, op, u, v, w) +
                            bracket(params, rb_residual(params, op, u, v), w);
        if (!lhs.is_zero())
            ++bad;
    }
    report(7, "defect-residual identity on 200 random triples", bad == 0,
           std::to_string(bad) + " violations");
}

// 8. cross-check determinism and mismatch re-evaluation.
void criterion8() {
    const fs::path tmp = fs::temp_directory_path();
    const fs::path out1 = tmp / "blockrb_cross1.json";
    const fs::path out2 = tmp / "blockrb_cross2.json";
    const std::string flags =
        "cross-check --q 0 --k 1 --kprime 0 --window 3 --profile constant:1 --out ";
    bool ok = run_cli(flags + out1.string()) == 0 && run_cli(flags + out2.string()) == 0;
    std::string detail = "cli runs";
    if (ok) {
        const std::string c1 = read_file(out1);
        ok = c1 == read_file(out2);
        detail = ok ? "byte-identical across runs" : "outputs differ between runs";

        if (ok) {
            // re-evaluate every mismatch in isolation
            DiscrepancyReport rep = nlohmann::json::parse(c1).get<DiscrepancyReport>();
            const AlgebraParams params = AlgebraParams::bq(Scalar(0));
            OperatorSpec op = OperatorSpec::single_line(1, 0, -1, ConstantProfile{Scalar(1)});
            std::size_t bad = 0;
            for (const Mismatch& mm : rep.mismatches) {
                Scalar printed =
                    printed_rb_residual(op.profile, mm.m, mm.i, mm.n, mm.j, Scalar(0), 1, 0);
                GradedElement res = rb_residual(params, op, GradedElement::basis(mm.m, mm.i),
                                                GradedElement::basis(mm.n, mm.j));
                Scalar kernel = res.coefficient(Bidegree{mm.m + mm.n + 2, mm.i + mm.j});
                if (!(printed == mm.printed) || !(kernel == mm.kernel_coefficient))
                    ++bad;
            }
            ok = bad == 0 && rep.mismatches.size() == 12;
            detail += ", " + std::to_string(rep.mismatches.size()) + " mismatches re-evaluated";

            std::string golden_detail;
            ok = matches_golden("cross_check_resonant.json", c1, golden_detail) && ok;
            detail += ", " + golden_detail;
        }
    }
    fs::remove(out1);
    fs::remove(out2);
    report(8, "cross-check determinism and completeness", ok, detail);
}

// 9. Two-line exclusion audit with witness re-evaluation and golden status.
void criterion9() {
    const Scalar q0{Rational(0)};
    const AlgebraParams params = AlgebraParams::bq(q0);
    Verdict v = two_line_test(params, -1, ConstantProfile{Scalar(1)}, 0,
                              ConstantProfile{Scalar(1)}, 1, 0, q0, Window::square(3));
    bool ok = true;
    std::size_t bad = 0;
    for (const Witness& w : v.witnesses)
        if (!reevaluate_witness(v, w))
            ++bad;
    ok = bad == 0;
    if (v.status == VerdictStatus::Fails && v.witnesses.empty())
        ok = false;

    std::string golden_detail;
    ok = matches_golden("two_line_n3.json", dump_json(nlohmann::json(v)), golden_detail) && ok;
    report(9, "two-line exclusion audit", ok,
           to_string(v.status) + ", " + std::to_string(v.witnesses.size()) + " witnesses, " +
               std::to_string(bad) + " re-evaluation failures, " + golden_detail);
}

// 10. Full default audit matches the committed golden report byte-for-byte.
void criterion10() {
    const auto start = std::chrono::steady_clock::now();
    const fs::path out = fs::temp_directory_path() / "blockrb_audit.json";
    bool ok = run_cli("audit --claims all --out " + out.string() + " > /dev/null") == 0;
    std::string detail = "cli run failed";
    if (ok) {
        const std::string content = read_file(out);
        ok = matches_golden("audit_default.json", content, detail);

        // the same bytes must come out of an in-process run
        RunConfig cfg;
        AuditReport report_obj = run_all(cfg.audit_config());
        if (dump_json(nlohmann::json(report_obj)) != content) {
            ok = false;
            detail += "; in-process audit differs from the CLI artifact";
        }
    }
    fs::remove(out);
    const double elapsed = seconds_since(start);
    detail += ", " + std::to_string(elapsed) + "s";
    report(10, "full default audit is byte-stable", ok && elapsed < 300.0, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: blockrb_acceptance <path-to-cli> <golden-dir> [--regen]\n";
        return 2;
    }
    g_cli = argv[1];
    g_golden = argv[2];
    g_regen = argc > 3 && std::string(argv[3]) == "--regen";
    fs::create_directories(g_golden);

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
