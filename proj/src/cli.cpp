#include "chern/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <ostream>

#include "chern/errors.hpp"
#include "chern/genera.hpp"
#include "chern/json.hpp"
#include "chern/manifolds.hpp"
#include "chern/report.hpp"
#include "chern/symmetric.hpp"

namespace chern::cli {

namespace {

void print_report_text(const Report& report, std::ostream& out) {
    for (const auto& check : report) {
        if (check.pass) {
            out << "PASS n=" << check.n << " " << check.identity << ": " << check.lhs.str()
                << "\n";
        } else {
            out << "FAIL n=" << check.n << " " << check.identity << ": lhs=" << check.lhs.str()
                << " rhs=" << check.rhs.str() << "\n";
        }
    }
}

int cmd_verify(const std::string& target, int n_min, int n_max, int max_n, bool json,
               std::ostream& out, std::ostream& err) {
    if (n_min < 2 || n_max < n_min) {
        err << "error: need 2 <= --n-min <= --n-max\n";
        return 1;
    }
    if (n_max > max_n) {
        err << "error: --n-max exceeds --max-n (" << max_n << ")\n";
        return 1;
    }
    std::vector<std::string> targets;
    if (target == "all") {
        targets = {"lemma23", "theorem-mr", "libgober-wood"};
    } else {
        targets = {target};
    }
    Report report;
    for (const auto& t : targets) {
        for (int n = n_min; n <= n_max; ++n) {
            Report part;
            if (t == "lemma23") {
                part = verify_h_identities(n);
            } else if (t == "theorem-mr") {
                part = verify_twisted_indices(n);
            } else {
                part = verify_libgober_wood(n);
            }
            report.insert(report.end(), part.begin(), part.end());
        }
    }
    if (json) {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        print_report_text(report, out);
    }
    return all_pass(report) ? 0 : 2;
}

int cmd_table(GenusKind kind, int n, int max_n, bool json, std::ostream& out) {
    const GenusTable table = genus_table(kind, n, max_n);
    if (json) {
        out << table_to_json(table).dump(2) << "\n";
        return 0;
    }
    out << "kind=" << kind_name(kind) << " n=" << n << "\n";
    for (std::size_t p = 0; p < table.rows.size(); ++p) {
        out << "row" << p << ": " << table.rows[p].str() << "\n";
    }
    return 0;
}

int cmd_expand(GenusKind kind, int n, int order, int max_n, bool json, std::ostream& out) {
    const ZExpansion expansion = z_expand(kind, n, order, max_n);
    if (json) {
        out << expansion_to_json(expansion).dump(2) << "\n";
        return 0;
    }
    out << "kind=" << kind_name(kind) << " n=" << n << " order=" << order << "\n";
    for (std::size_t k = 0; k < expansion.coeffs.size(); ++k) {
        out << "z^" << k << ": " << expansion.coeffs[k].str() << "\n";
    }
    return 0;
}

std::optional<bool> spin_or_unknown(const ManifoldModel& model) {
    try {
        return is_spin(model);
    } catch (const not_decidable_error&) {
        return std::nullopt;
    }
}

const char* spin_text(std::optional<bool> spin) {
    if (!spin.has_value()) return "unknown";
    return *spin ? "true" : "false";
}

int cmd_manifold(const ManifoldModel& model, GenusKind kind, int max_n, bool json,
                 std::ostream& out) {
    const int n = complex_dimension(model);
    const auto numbers = chern_numbers(model);
    const auto indices = index_table(kind, model, max_n);
    const auto spin = spin_or_unknown(model);

    if (json) {
        njson idx = njson::array();
        for (std::size_t p = 0; p < indices.size(); ++p) {
            idx.push_back(njson{{"p", p},
                                {"value", indices[p].str()},
                                {"integral", indices[p].is_integer()}});
        }
        njson doc{{"model", model_spec(model)},
                  {"n", n},
                  {"spin", spin.has_value() ? njson(*spin) : njson(nullptr)},
                  {"chern_numbers", chern_numbers_to_json(n, numbers)},
                  {"kind", kind_name(kind)},
                  {"indices", std::move(idx)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "model=" << model_spec(model) << " n=" << n << " spin=" << spin_text(spin)
        << " kind=" << kind_name(kind) << "\n";
    for (const auto& [key, value] : numbers) {
        ChernCombo single(n);
        single.add(key, Rational(1));
        out << "chern " << single.str() << " = " << value.get_str() << "\n";
    }
    for (std::size_t p = 0; p < indices.size(); ++p) {
        out << "index p=" << p << ": " << indices[p].str()
            << (indices[p].is_integer() ? " (integer)" : " (non-integer)") << "\n";
    }
    return 0;
}

int cmd_divisibility(const ManifoldModel& model, bool json, std::ostream& out) {
    const DivisibilityResult result = divisibility_check(model);
    const auto spin = spin_or_unknown(model);
    if (json) {
        njson doc{{"model", model_spec(model)},
                  {"n", complex_dimension(model)},
                  {"spin", spin.has_value() ? njson(*spin) : njson(nullptr)},
                  {"value", result.value.get_str()},
                  {"divisible_by_8", result.divisible_by_8}};
        doc[result.divisible_by_8 ? "quotient" : "remainder"] =
            result.quotient_or_remainder.get_str();
        out << doc.dump(2) << "\n";
    } else {
        out << "value=" << result.value.get_str()
            << " divisible=" << (result.divisible_by_8 ? "true" : "false")
            << (result.divisible_by_8 ? " quotient=" : " remainder=")
            << result.quotient_or_remainder.get_str() << " spin=" << spin_text(spin) << "\n";
    }
    const bool spin_violation = spin.has_value() && *spin && !result.divisible_by_8;
    return spin_violation ? 2 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hirzebruch-genus calculator over Chern numbers"};
    app.require_subcommand(1);

    std::string target = "all";
    std::string kind_text = "chi-y";
    std::string model_text;
    int n = 1;
    int n_min = 2;
    int n_max = 8;
    int order = 2;
    int max_n = kDefaultMaxDimension;
    bool json = false;

    const auto kind_choice =
        CLI::IsMember({"chi-y", "a-y", "l-y"});

    auto* verify = app.add_subcommand("verify", "Verify identity families over a range of n");
    verify->add_option("--target", target, "lemma23 | theorem-mr | libgober-wood | all")
        ->check(CLI::IsMember({"lemma23", "theorem-mr", "libgober-wood", "all"}));
    verify->add_option("--n-min", n_min, "Lowest dimension (default 2)");
    verify->add_option("--n-max", n_max, "Highest dimension (default 8)");
    verify->add_option("--max-n", max_n, "Resource cap override");
    verify->add_flag("--json", json, "Emit JSON");

    auto* table = app.add_subcommand("table", "Print a genus table as Chern-number rows");
    table->add_option("--kind", kind_text, "chi-y | a-y | l-y")->check(kind_choice)->required();
    table->add_option("--n", n, "Complex dimension")->required();
    table->add_option("--max-n", max_n, "Resource cap override");
    table->add_flag("--json", json, "Emit JSON");

    auto* expand = app.add_subcommand("expand", "Print the z = 1+y expansion of a genus");
    expand->add_option("--kind", kind_text, "chi-y | a-y | l-y")->check(kind_choice)->required();
    expand->add_option("--n", n, "Complex dimension")->required();
    expand->add_option("--order", order, "Highest z power")->required();
    expand->add_option("--max-n", max_n, "Resource cap override");
    expand->add_flag("--json", json, "Emit JSON");

    auto* manifold = app.add_subcommand("manifold", "Chern numbers and index table of a model");
    manifold->add_option("--model", model_text, "cp:N | prod:cpA,cpB,... | JSON")->required();
    manifold->add_option("--kind", kind_text, "chi-y | a-y | l-y")->check(kind_choice)->required();
    manifold->add_option("--max-n", max_n, "Resource cap override");
    manifold->add_flag("--json", json, "Emit JSON");

    auto* divisibility =
        app.add_subcommand("divisibility", "Divisibility-by-8 check of 2(n-1)c1c_{n-1}+c1^2c_{n-2}");
    divisibility->add_option("--model", model_text, "cp:N | prod:cpA,cpB,... | JSON")->required();
    divisibility->add_flag("--json", json, "Emit JSON");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("chern");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(target, n_min, n_max, max_n, json, out, err);
        }
        if (table->parsed()) {
            return cmd_table(kind_from_name(kind_text), n, max_n, json, out);
        }
        if (expand->parsed()) {
            return cmd_expand(kind_from_name(kind_text), n, order, max_n, json, out);
        }
        if (manifold->parsed()) {
            return cmd_manifold(parse_model_spec(model_text), kind_from_name(kind_text), max_n,
                                json, out);
        }
        if (divisibility->parsed()) {
            return cmd_divisibility(parse_model_spec(model_text), json, out);
        }
        err << "error: no subcommand\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace chern::cli
