// polyprod: Euler characteristics of polyhedral products over JSON documents.
//
// One JSON document per invocation on stdin (or --input FILE), one JSON
// result on stdout. Exit codes: 0 success, 1 malformed input, 2 domain
// error, 3 internal cross-check failure (formula vs oracle disagreement;
// must never happen).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "polyprod/polyprod.hpp"

namespace {

using polyprod::json;

struct CommonOptions {
    std::string input_path;
    bool pretty = false;
};

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json load_document(const CommonOptions& opts, std::initializer_list<const char*> required) {
    std::string text;
    if (!opts.input_path.empty()) {
        std::ifstream file(opts.input_path);
        if (!file) throw polyprod::InputError("cannot open input file: " + opts.input_path);
        text = read_all(file);
    } else {
        text = read_all(std::cin);
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw polyprod::InputError(std::string("invalid JSON: ") + e.what());
    }
    polyprod::io_detail::require_object(doc, "input document");
    polyprod::io_detail::require_known_keys(doc, required, "the input document");
    for (const char* key : required) polyprod::io_detail::require_field(doc, key);
    return doc;
}

void emit(const json& result, bool pretty) {
    json doc{{"result", result}};
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

json run_graph_product(const json& doc) {
    const auto L = polyprod::complex_from_json(doc.at("complex"));
    const auto specs = polyprod::groups_from_json(doc.at("groups"));
    bool all_orders = true, all_chis = true;
    std::vector<polyprod::Int> values;
    values.reserve(specs.size());
    for (const auto& spec : specs) {
        all_orders = all_orders && spec.kind == polyprod::GroupSpec::Kind::FiniteOfOrder;
        all_chis = all_chis && spec.kind == polyprod::GroupSpec::Kind::TypeFLWithChi;
        values.push_back(spec.value);
    }
    if (all_orders) return polyprod::to_json(polyprod::chi_rational_graph_product(L, values));
    if (all_chis) return polyprod::to_json(polyprod::chi_classifying_space(L, values));
    throw polyprod::InputError("group specs must be all \"order\" or all \"chi\", not a mixture");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler characteristics of polyhedral products"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::uint64_t seeds = 1000;
    int max_m = 5;
    std::uint64_t budget = polyprod::kDefaultCellBudget;

    struct Sub {
        CLI::App* cmd;
        const char* name;
    };
    std::vector<Sub> subs;
    auto add_sub = [&](const char* name, const char* desc, bool reads_input) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        if (reads_input)
            cmd->add_option("--input", opts.input_path, "read the JSON document from FILE instead of stdin");
        cmd->add_flag("--pretty", opts.pretty, "indent the JSON output");
        subs.push_back({cmd, name});
        return cmd;
    };

    add_sub("fpoly", "f-polynomial of the complex", true);
    add_sub("hpoly", "h-polynomial of the complex", true);
    add_sub("hhat", "hhat-polynomial of the complex", true);
    add_sub("chi", "Euler characteristic of Z_L(A,B) from chi(A_i), chi(B_i)", true);
    add_sub("chi-points", "point case: every B_i a point", true);
    add_sub("chi-cone", "cone case: (Cone E_i, E_i) with |E_i| = q_i + 1", true);
    add_sub("chi-manifold", "manifold case: odd-dimensional A_i with boundary B_i", true);
    CLI::App* oracle_cmd = add_sub("chi-oracle", "brute-force cell enumeration of Z_L(A,B)", true);
    oracle_cmd->add_option("--budget", budget, "maximum number of product cells to enumerate");
    add_sub("cd-check", "Charney-Davis quantity and sign check", true);
    add_sub("graph-product", "Euler characteristic of a graph product of groups", true);
    CLI::App* verify_cmd = add_sub("verify", "formula vs oracle over seeded random instances", false);
    verify_cmd->add_option("--seeds", seeds, "number of seeded instances to run (seeds 1..N)");
    verify_cmd->add_option("--max-m", max_m, "largest vertex count to sample");
    verify_cmd->add_option("--budget", budget, "oracle cell budget per instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const std::string name = [&] {
            for (const auto& sub : subs)
                if (sub.cmd->parsed()) return std::string(sub.name);
            return std::string();
        }();

        if (name == "fpoly") {
            const json doc = load_document(opts, {"complex"});
            emit(polyprod::to_json(polyprod::f_polynomial(polyprod::complex_from_json(doc.at("complex")))),
                 opts.pretty);
        } else if (name == "hpoly") {
            const json doc = load_document(opts, {"complex"});
            emit(polyprod::to_json(polyprod::h_polynomial(polyprod::complex_from_json(doc.at("complex")))),
                 opts.pretty);
        } else if (name == "hhat") {
            const json doc = load_document(opts, {"complex"});
            emit(polyprod::to_json(polyprod::hhat_polynomial(polyprod::complex_from_json(doc.at("complex")))),
                 opts.pretty);
        } else if (name == "chi") {
            const json doc = load_document(opts, {"complex", "euler"});
            const auto L = polyprod::complex_from_json(doc.at("complex"));
            const auto euler = polyprod::euler_from_json(doc.at("euler"), /*need_eB=*/true);
            emit(polyprod::to_json(polyprod::chi_polyhedral_product(
                     L, polyprod::EulerVector(euler.eA), polyprod::EulerVector(euler.eB))),
                 opts.pretty);
        } else if (name == "chi-points") {
            const json doc = load_document(opts, {"complex", "euler"});
            const auto L = polyprod::complex_from_json(doc.at("complex"));
            const auto euler = polyprod::euler_from_json(doc.at("euler"), /*need_eB=*/false);
            emit(polyprod::to_json(polyprod::chi_points_case(L, polyprod::EulerVector(euler.eA))),
                 opts.pretty);
        } else if (name == "chi-cone") {
            const json doc = load_document(opts, {"complex", "q"});
            const auto L = polyprod::complex_from_json(doc.at("complex"));
            const auto q = polyprod::io_detail::parse_bigint_array(doc.at("q"), "\"q\"");
            emit(polyprod::to_json(polyprod::chi_cone_case(L, q)), opts.pretty);
        } else if (name == "chi-manifold") {
            const json doc = load_document(opts, {"complex", "manifold"});
            const auto L = polyprod::complex_from_json(doc.at("complex"));
            const auto spec = polyprod::manifold_from_json(doc.at("manifold"));
            emit(polyprod::to_json(polyprod::chi_manifold_case(L, spec)), opts.pretty);
        } else if (name == "chi-oracle") {
            const json doc = load_document(opts, {"complex", "pairs"});
            const auto L = polyprod::complex_from_json(doc.at("complex"));
            const auto pairs = polyprod::pairs_from_json(doc.at("pairs"));
            emit(polyprod::to_json(polyprod::chi_brute_force(L, pairs, budget)), opts.pretty);
        } else if (name == "cd-check") {
            const json doc = load_document(opts, {"complex"});
            emit(polyprod::to_json(polyprod::cd_sign_check(polyprod::complex_from_json(doc.at("complex")))),
                 opts.pretty);
        } else if (name == "graph-product") {
            const json doc = load_document(opts, {"complex", "groups"});
            emit(run_graph_product(doc), opts.pretty);
        } else if (name == "verify") {
            if (max_m < 1) throw polyprod::InputError("--max-m must be >= 1");
            const auto summary = polyprod::verify_formula_against_oracle(
                seeds, polyprod::InstanceLimits{max_m, 6, 3}, budget);
            json result{{"instances", summary.instances}, {"failures", summary.failures}};
            if (summary.failures > 0) result["first_failing_seed"] = summary.first_failing_seed;
            emit(result, opts.pretty);
            if (summary.failures > 0) {
                std::cerr << "InternalCheckFailed: formula and oracle disagree on "
                          << summary.failures << " instance(s)\n";
                return 3;
            }
        }
        return 0;
    } catch (const polyprod::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const polyprod::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const polyprod::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
