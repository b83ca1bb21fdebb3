// blockrb: exact-arithmetic audits of homogeneous weight-0 Rota-Baxter
// operator candidates on Block-type Witt algebras.
//
// Exit codes reflect tool health, not mathematical verdicts: 0 for a
// completed run (even when every audited claim fails), 2 for an invalid
// configuration, 3 for an I/O failure.

#include "blockrb/config.hpp"
#include "blockrb/derived.hpp"
#include "blockrb/report.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace blockrb;

constexpr const char* kUsage = R"(usage: blockrb <subcommand> [flags]

subcommands:
  sweep        kernel residual sweep over a window of basis pairs
  audit        run registered claim checkers and write an audit report
  table        admissibility of the canonical profile families
  solve-feq    brute-force functional-equation solutions on a finite window
  cross-check  printed equation vs first-principles kernel
  derived      structure constants of the induced products

flags:
  --q <r|symbolic>  --alpha <r|symbolic|inherit>  --beta <r|symbolic|inherit>
  --k <int>  --kprime <int>  --window <n>  --profile <shorthand>
  --variant <ids>  --claims <ids|all>  --values <r,...>  --search-window <lo..hi>
  --witness-cap <n>  --out <path>  --config <file>

profile shorthand: constant:c | kronecker:i0:c | exp:b | poly:c0,c1,... |
periodic:v0;v1;... | table:i=v,... ; prefix "m0=<int>:" places a line
(default m0 = -k), join several lines with '+'.
)";

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << dump_json(j);
    else
        write_json_atomic(j, out_path);
}

int cmd_sweep(const RunConfig& config) {
    Verdict v = window_sweep(config.algebra_params(), config.operator_spec(), config.window_box(),
                             config.witness_cap);
    const AlgebraParams params = config.algebra_params();
    nlohmann::json vc;
    vc["variant"] = to_string(EquationId::KERNEL);
    if (params.symmetric()) {
        vc["q"] = params.alpha;
    } else {
        vc["alpha"] = params.alpha;
        vc["beta"] = params.beta;
    }
    vc["operator"] = config.operator_spec();
    v.config = std::move(vc);
    emit(nlohmann::json(v), config.out);
    return 0;
}

int cmd_audit(const RunConfig& config) {
    AuditReport report = run_all(config.audit_config());
    bool has_table1 = false;
    for (const std::string& claim : config.resolved_claims())
        if (claim == "TABLE_1")
            has_table1 = true;
    if (has_table1) {
        const AuditConfig acfg = config.audit_config();
        for (EquationId variant : acfg.variants) {
            const Window w = (variant == EquationId::KERNEL)
                                 ? Window::square(acfg.window_n)
                                 : Window{acfg.feq_lo, acfg.feq_hi, acfg.feq_lo, acfg.feq_hi};
            auto regime1 =
                admissibility_matrix(w, Scalar(Rational(acfg.kprime)), acfg.k, acfg.kprime,
                                     variant, acfg.witness_cap);
            Scalar q2 = acfg.q == Scalar(acfg.kprime) ? Scalar(Rational(1, 2)) : acfg.q;
            auto regime2 =
                admissibility_matrix(w, q2, acfg.k, acfg.kprime, variant, acfg.witness_cap);
            std::cout << render_admissibility_table(variant, regime1, regime2) << "\n";
        }
    }
    emit(nlohmann::json(report), config.out);
    return 0;
}

int cmd_table(const RunConfig& config) {
    const AuditConfig acfg = config.audit_config();
    nlohmann::json tables = nlohmann::json::array();
    for (EquationId variant : acfg.variants) {
        const Window w = (variant == EquationId::KERNEL)
                             ? Window::square(acfg.window_n)
                             : Window{acfg.feq_lo, acfg.feq_hi, acfg.feq_lo, acfg.feq_hi};
        auto regime1 = admissibility_matrix(w, Scalar(Rational(acfg.kprime)), acfg.k, acfg.kprime,
                                            variant, acfg.witness_cap);
        Scalar q2 = acfg.q == Scalar(acfg.kprime) ? Scalar(Rational(1, 2)) : acfg.q;
        auto regime2 = admissibility_matrix(w, q2, acfg.k, acfg.kprime, variant, acfg.witness_cap);
        std::cout << render_admissibility_table(variant, regime1, regime2) << "\n";
        tables.push_back(nlohmann::json{{"variant", to_string(variant)},
                                        {"window", w},
                                        {"regime1", regime1},
                                        {"regime2", regime2}});
    }
    emit(nlohmann::json{{"tables", std::move(tables)}}, config.out);
    return 0;
}

int cmd_solve_feq(const RunConfig& config) {
    if (config.q.kind != ParamSpec::Kind::Value)
        throw ConfigError("q", "solve-feq needs a concrete rational q");
    EquationId variant = EquationId::FEQ_NONRES;
    for (EquationId v : config.variants) {
        if (v == EquationId::FEQ_NONRES || v == EquationId::FEQ_PLUS) {
            variant = v;
            break;
        }
    }
    FeqSearchResult result = feq_solution_search(config.search_lo, config.search_hi,
                                                 config.values, config.q.value, config.kprime,
                                                 variant);
    emit(nlohmann::json(result), config.out);
    return 0;
}

int cmd_cross_check(const RunConfig& config) {
    const AlgebraParams params = config.algebra_params();
    DiscrepancyReport report = cross_check(params, config.operator_spec(), config.window_box());
    emit(nlohmann::json(report), config.out);
    return 0;
}

int cmd_derived(const RunConfig& config) {
    nlohmann::json rows = derived_structure_export(config.algebra_params(),
                                                   config.operator_spec(), config.window_box());
    emit(rows, config.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::cout << kUsage;
        return args.empty() ? 2 : 0;
    }
    const std::string subcommand = args[0];
    args.erase(args.begin());

    try {
        RunConfig config = parse_config(args);
        if (subcommand == "sweep")
            return cmd_sweep(config);
        if (subcommand == "audit")
            return cmd_audit(config);
        if (subcommand == "table")
            return cmd_table(config);
        if (subcommand == "solve-feq")
            return cmd_solve_feq(config);
        if (subcommand == "cross-check")
            return cmd_cross_check(config);
        if (subcommand == "derived")
            return cmd_derived(config);
        std::cerr << "blockrb: unknown subcommand '" << subcommand << "'\n" << kUsage;
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "blockrb: invalid configuration (" << e.field << "): " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "blockrb: i/o failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "blockrb: invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "blockrb: error: " << e.what() << "\n";
        return 1;
    }
}
