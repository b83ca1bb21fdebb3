#include "blockrb/audit.hpp"

#include "blockrb/report.hpp"
#include "doctest.h"
#include "support/independent_feq.hpp"

using namespace blockrb;

namespace {
const Scalar q = Scalar::symbol('q');
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(Scalar(3), 5, 3).kind == RegimeKind::I);   // q = k'
    CHECK(classify_regime(Scalar(Rational(1, 2)), 0, 0).kind == RegimeKind::I);  // k = 0
    CHECK(classify_regime(Scalar(Rational(1, 2)), 2, 0).kind == RegimeKind::II);

    Regime sym = classify_regime(q, 2, 0);
    CHECK(sym.kind == RegimeKind::II);
    CHECK(sym.generic_in_q);

    CHECK_FALSE(classify_regime(Scalar(Rational(1, 2)), 2, 0).generic_in_q);
}

TEST_CASE("regimes partition concrete configurations") {
    for (std::int64_t k : {-2, 0, 1})
        for (std::int64_t kp : {-1, 0, 2})
            for (Rational qv : {Rational(0), Rational(2), Rational(1, 2), Rational(-1)}) {
                Regime r = classify_regime(Scalar(qv), k, kp);
                const bool is_one = (qv == Rational(kp)) || k == 0;
                CHECK((r.kind == RegimeKind::I) == is_one);
            }
}

TEST_CASE("claim registry is closed and keyed") {
    CHECK(claim_registry().size() == 11);
    for (const char* id :
         {"DICHOTOMY_2_1", "PROP_NONRES_4_1", "EXAMPLE_LINEAR_4_2", "REMARK_SOLUTIONS_4_3",
          "PROP_RESONANT_4_6", "THM_TWO_LINE_4_4", "THM_RIGIDITY_4_5", "THM_COMPLETE_5_1",
          "TABLE_1", "PRELIE_A1", "DEFORM_A2"})
        CHECK(is_known_claim(id));
    CHECK_FALSE(is_known_claim("THM_X"));
}

TEST_CASE("admissibility matrix under FEQ_NONRES at q=1/2, k'=0") {
    Window w{-6, 6, -6, 6};
    auto cells = admissibility_matrix(w, Scalar(Rational(1, 2)), 1, 0, EquationId::FEQ_NONRES);
    REQUIRE(cells.size() == 6);
    std::map<std::string, const AdmissibilityCell*> by_family;
    for (const auto& cell : cells)
        by_family[cell.family] = &cell;

    CHECK(by_family["constant"]->pass);
    CHECK(by_family["kronecker"]->pass);
    CHECK_FALSE(by_family["finite-support"]->pass);
    CHECK_FALSE(by_family["exponential"]->pass);
    CHECK_FALSE(by_family["polynomial"]->pass);
    CHECK_FALSE(by_family["periodic"]->pass);

    // polynomial row carries the canonical witness (1,0) with residual -3/2
    bool found = false;
    for (const Witness& wit : by_family["polynomial"]->witnesses)
        if (wit.inputs.size() == 1 && wit.inputs[0] == Bidegree{1, 0}) {
            found = true;
            CHECK(wit.value == Scalar(Rational(-3, 2)));
        }
    CHECK(found);

    // finite-support row: first failing pair is (-1, 1) with residual 1+q = 3/2
    REQUIRE_FALSE(by_family["finite-support"]->witnesses.empty());
    CHECK(by_family["finite-support"]->witnesses[0].inputs[0] == Bidegree{-1, 1});
    CHECK(by_family["finite-support"]->witnesses[0].value == Scalar(Rational(3, 2)));

    // failing rows always carry a witness
    for (const auto& cell : cells)
        if (!cell.pass)
            CHECK_FALSE(cell.witnesses.empty());
}

TEST_CASE("admissibility matrix: constant and zero profiles pass symbolically") {
    // symbolic q is classified Regime II generically; the constant row must
    // pass for every shift tested
    for (std::int64_t kp : {-1, 0, 1}) {
        Window w{-4, 4, -4, 4};
        auto cells = admissibility_matrix(w, q, 1, kp, EquationId::FEQ_NONRES);
        CHECK(cells[0].family == "constant");
        CHECK(cells[0].pass);
    }
    // the zero profile satisfies every variant trivially
    for (std::int64_t i = -4; i <= 4; ++i)
        for (std::int64_t j = -4; j <= 4; ++j) {
            CHECK(feq_residual(ConstantProfile{Scalar()}, i, j, q, 1).is_zero());
            CHECK(feq_residual(EquationId::FEQ_PLUS, ConstantProfile{Scalar()}, i, j, q, 1)
                      .is_zero());
        }
}

TEST_CASE("admissibility matrix rejects non-admissibility variants") {
    CHECK_THROWS_AS(
        admissibility_matrix(Window::square(2), q, 1, 0, EquationId::CONSTRAINT),
        std::invalid_argument);
}

TEST_CASE("two_line_test") {
    const Scalar q0{Rational(0)};
    const AlgebraParams params = AlgebraParams::bq(q0);
    const Profile1D c1 = ConstantProfile{Scalar(1)};
    const Profile1D zero = ConstantProfile{Scalar()};

    SUBCASE("rejects equal lines") {
        CHECK_THROWS_AS(
            two_line_test(params, -1, c1, -1, c1, 1, 0, q0, Window::square(2)),
            std::invalid_argument);
    }
    SUBCASE("rejects non-resonant hypothesis") {
        CHECK_THROWS_AS(two_line_test(AlgebraParams::bq(Scalar(Rational(1, 2))), -1, c1, 0, c1, 1,
                                      0, Scalar(Rational(1, 2)), Window::square(2)),
                        std::invalid_argument);
    }
    SUBCASE("zero superposition reduces to the single-line verdict") {
        Verdict two = two_line_test(params, -1, zero, 0, c1, 1, 0, q0, Window::square(3));
        OperatorSpec single = OperatorSpec::single_line(1, 0, 0, c1);
        Verdict one = window_sweep(params, single, Window::square(3));
        CHECK(two.status == one.status);
        REQUIRE(two.witnesses.size() == one.witnesses.size());
        for (std::size_t wi = 0; wi < two.witnesses.size(); ++wi) {
            CHECK(two.witnesses[wi].inputs == one.witnesses[wi].inputs);
            CHECK(two.witnesses[wi].residual == one.witnesses[wi].residual);
        }
    }
    SUBCASE("both lines zero holds") {
        Verdict v = two_line_test(params, -1, zero, 0, zero, 1, 0, q0, Window::square(3));
        CHECK(v.status == VerdictStatus::HoldsOnWindow);
        CHECK(v.witnesses.empty());
    }
    SUBCASE("constant superposition on {-1, 0} fails with re-evaluable witnesses") {
        Verdict v = two_line_test(params, -1, c1, 0, c1, 1, 0, q0, Window::square(3));
        CHECK(v.status == VerdictStatus::Fails);
        REQUIRE_FALSE(v.witnesses.empty());
        for (const Witness& wit : v.witnesses)
            CHECK(reevaluate_witness(v, wit));
        CHECK(v.notes.find("printed cross-check") != std::string::npos);
    }
}

TEST_CASE("rigidity support scan") {
    const Scalar q0{Rational(0)};
    SUBCASE("zero profile holds on every line") {
        auto per_line = rigidity_support_scan(q0, 1, 0, ConstantProfile{Scalar()},
                                              Window::square(2));
        CHECK(per_line.size() == 5);
        for (const auto& [line, v] : per_line) {
            (void)line;
            CHECK(v.status == VerdictStatus::HoldsOnWindow);
        }
    }
    SUBCASE("invisible profile is flagged vacuous") {
        auto per_line = rigidity_support_scan(q0, 1, 0, KroneckerProfile{50, Scalar(1)},
                                              Window::square(2));
        for (const auto& [line, v] : per_line) {
            (void)line;
            CHECK(v.status == VerdictStatus::HoldsOnWindow);
            CHECK(v.notes.find("vacuous") != std::string::npos);
        }
    }
    SUBCASE("constant profile: per-line statuses from the sweep") {
        auto per_line = rigidity_support_scan(q0, 1, 0, ConstantProfile{Scalar(1)},
                                              Window::square(3));
        REQUIRE(per_line.size() == 7);
        // every line fails on this window (including m = -k: the kernel
        // residual there is (i-j) g(i+j) on the line)
        for (const auto& [line, v] : per_line) {
            (void)line;
            CHECK(v.status == VerdictStatus::Fails);
            CHECK_FALSE(v.witnesses.empty());
            CHECK(reevaluate_witness(v, v.witnesses[0]));
        }
    }
    SUBCASE("hypothesis q = k' is enforced") {
        CHECK_THROWS_AS(rigidity_support_scan(Scalar(Rational(1, 2)), 1, 0,
                                              ConstantProfile{Scalar(1)}, Window::square(2)),
                        std::invalid_argument);
    }
}

TEST_CASE("feq_solution_search") {
    SUBCASE("values {0}: only the zero table") {
        auto res = feq_solution_search(-2, 2, {Rational(0)}, Rational(1, 2), 0,
                                       EquationId::FEQ_NONRES);
        REQUIRE(res.solutions.size() == 1);
        CHECK(res.solutions[0].empty());
    }
    SUBCASE("matches the independent exhaustive filter") {
        auto res = feq_solution_search(-3, 3, {Rational(0), Rational(1)}, Rational(1, 2), 0,
                                       EquationId::FEQ_NONRES);
        auto expected = indep::enumerate_solutions(-3, 3, {Rational(0), Rational(1)},
                                                   Rational(1, 2), 0, false);
        REQUIRE(res.solutions.size() == expected.size());
        for (std::size_t s = 0; s < expected.size(); ++s)
            CHECK(res.solutions[s] == expected[s]);
    }
    SUBCASE("constants are always solutions of FEQ_NONRES") {
        auto res = feq_solution_search(-2, 2, {Rational(0), Rational(2), Rational(-1)},
                                       Rational(1, 3), 1, EquationId::FEQ_NONRES);
        for (const Rational& c : res.values) {
            std::map<std::int64_t, Rational> table;
            if (!c.is_zero())
                for (std::int64_t i = -2; i <= 2; ++i)
                    table[i] = c;
            CHECK(std::find(res.solutions.begin(), res.solutions.end(), table) !=
                  res.solutions.end());
        }
    }
    SUBCASE("scaling closure inside the value set") {
        // FEQ_NONRES is quadratic throughout, so lambda*g solves whenever g
        // does and lambda*values stays inside the value set.
        std::vector<Rational> values{Rational(0), Rational(1), Rational(2), Rational(4)};
        auto res = feq_solution_search(-2, 2, values, Rational(1, 2), 0, EquationId::FEQ_NONRES);
        for (const auto& sol : res.solutions) {
            for (const Rational& lambda : {Rational(0), Rational(2)}) {
                std::map<std::int64_t, Rational> scaled;
                bool inside = true;
                for (const auto& [i, v] : sol) {
                    Rational sv = lambda * v;
                    if (std::find(values.begin(), values.end(), sv) == values.end() &&
                        !sv.is_zero())
                        inside = false;
                    if (!sv.is_zero())
                        scaled[i] = sv;
                }
                if (inside)
                    CHECK(std::find(res.solutions.begin(), res.solutions.end(), scaled) !=
                          res.solutions.end());
            }
        }
    }
    SUBCASE("oversized search spaces are rejected") {
        CHECK_THROWS_AS(feq_solution_search(-5, 5, {Rational(0), Rational(1)}, Rational(1, 2), 0,
                                            EquationId::FEQ_NONRES),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            feq_solution_search(-1, 1,
                                {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)},
                                Rational(1, 2), 0, EquationId::FEQ_NONRES),
            std::invalid_argument);
        CHECK_THROWS_AS(feq_solution_search(-1, 1, {Rational(0)}, Rational(1, 2), 0,
                                            EquationId::CONSTRAINT),
                        std::invalid_argument);
    }
}

TEST_CASE("run_all: empty selection yields an empty report with config echo") {
    AuditConfig cfg;
    cfg.claims = {};
    AuditReport report = run_all(cfg);
    CHECK(report.verdicts.empty());
    CHECK(report.config.at("window") == 4);
    CHECK(report.schema_version == "1");
}

TEST_CASE("run_all: EXAMPLE_LINEAR_4_2 selection") {
    AuditConfig cfg;
    cfg.claims = {"EXAMPLE_LINEAR_4_2"};
    AuditReport report = run_all(cfg);
    REQUIRE_FALSE(report.verdicts.empty());

    // the concrete sweep fails with the (1,0) witness carrying -3/2
    bool found_sweep = false;
    for (const Verdict& v : report.verdicts) {
        if (v.config.value("case", "") != "concrete-sweep")
            continue;
        found_sweep = true;
        CHECK(v.status == VerdictStatus::Fails);
        bool canonical = false;
        for (const Witness& wit : v.witnesses)
            if (wit.inputs.size() == 1 && wit.inputs[0] == Bidegree{1, 0}) {
                canonical = true;
                CHECK(wit.value == Scalar(Rational(-3, 2)));
                CHECK(reevaluate_witness(v, wit));
            }
        CHECK(canonical);
    }
    CHECK(found_sweep);

    // the closed-form instances hold for every k' in {-2..2}
    std::size_t instances = 0;
    for (const Verdict& v : report.verdicts)
        if (v.config.value("case", "") == "counterexample-instance") {
            ++instances;
            CHECK(v.status == VerdictStatus::HoldsOnWindow);
        }
    CHECK(instances == 5);
}

TEST_CASE("run_all: verdicts are ordered by claim id and re-evaluable") {
    AuditConfig cfg;
    cfg.claims = {"TABLE_1", "PRELIE_A1"};
    AuditReport report = run_all(cfg);
    REQUIRE_FALSE(report.verdicts.empty());
    for (std::size_t v = 1; v < report.verdicts.size(); ++v)
        CHECK(report.verdicts[v - 1].claim <= report.verdicts[v].claim);

    std::size_t checked = 0;
    for (const Verdict& v : report.verdicts) {
        if (v.status != VerdictStatus::Fails || v.witnesses.empty())
            continue;
        CHECK(reevaluate_witness(v, v.witnesses.front()));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("run_all validates the configuration") {
    AuditConfig cfg;
    cfg.claims = {"NOPE"};
    CHECK_THROWS_AS(run_all(cfg), ConfigError);
    AuditConfig cfg2;
    cfg2.window_n = 0;
    CHECK_THROWS_AS(run_all(cfg2), ConfigError);
}

TEST_CASE("failing verdicts always carry witnesses; holding ones never do") {
    AuditConfig cfg;
    cfg.window_n = 2;
    cfg.feq_lo = -3;
    cfg.feq_hi = 3;
    cfg.claims = {"PROP_RESONANT_4_6", "REMARK_SOLUTIONS_4_3", "TABLE_1"};
    AuditReport report = run_all(cfg);
    for (const Verdict& v : report.verdicts) {
        if (v.status == VerdictStatus::Fails)
            CHECK_FALSE(v.witnesses.empty());
        if (v.status == VerdictStatus::HoldsOnWindow)
            CHECK(v.witnesses.empty());
    }
}
