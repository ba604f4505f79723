// facets -- command-line front end.
//
// Input is a literal when it starts with '(', '<', or '{' (grammar or
// JSON), the string "-" for stdin, and a file path otherwise.  Exit codes:
// 0 computed, 2 input error, 3 precondition violation.  Verdicts live in
// the payload, never in the exit code.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <facets/facets.hpp>

namespace {

std::string read_input(const std::string& arg) {
    std::string trimmed(facets::detail::trim(arg));
    if (!trimmed.empty() && (trimmed[0] == '(' || trimmed[0] == '<' || trimmed[0] == '{'))
        return arg;
    std::ostringstream buf;
    if (trimmed == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(trimmed);
        if (!in)
            throw facets::ParseError("cannot open input file '" + trimmed + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void write_certificate(const std::string& dir, const std::string& name, const facets::json& j) {
    std::filesystem::create_directories(dir);
    std::filesystem::path path = std::filesystem::path(dir) / name;
    std::ofstream out(path);
    if (!out)
        throw facets::ParseError("cannot write certificate file '" + path.string() + "'");
    out << j.dump(2) << "\n";
}

// certificate payloads worth writing to --cert-dir, per command
void emit_certificates(const std::string& dir, const facets::Report& report) {
    if (dir.empty())
        return;
    const facets::json& res = report.result;
    if (report.command == "covers" && res.contains("covers"))
        write_certificate(dir, "covers.json", res["covers"]);
    if (report.command == "tree" && res.contains("leaf_order") && !res["leaf_order"].is_null())
        write_certificate(dir, "leaf_order.json", res["leaf_order"]);
    if (report.command == "linquo") {
        if (res.contains("quotient_order") && !res["quotient_order"].is_null())
            write_certificate(dir, "quotient_order.json", res["quotient_order"]);
        if (res.contains("components"))
            write_certificate(dir, "components.json", res["components"]);
        if (res.contains("shelling") && !res["shelling"].is_null())
            write_certificate(dir, "shelling.json",
                              facets::json{{"shelling", res["shelling"]}});
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with square-free monomial ideals and facet complexes"};
    app.require_subcommand(1);

    std::string input;
    std::string field_flag = "q";
    std::string cert_dir;
    bool as_json = false;
    bool oracle = false;
    int max_facets = 15;
    int component_k = 0;

    auto add_common = [&](CLI::App* cmd, bool with_field) {
        cmd->add_option("input", input,
                        "ideal or complex: literal starting with '(', '<' or '{', "
                        "a file path, or '-' for stdin")
            ->required();
        cmd->add_flag("--json", as_json, "emit the JSON report instead of text");
        cmd->add_flag("--oracle", oracle, "recompute every verdict along a brute-force route");
        if (with_field)
            cmd->add_option("--field", field_flag, "coefficient field: q or fp:<prime>")
                ->capture_default_str();
        return cmd;
    };

    CLI::App* c_covers = add_common(app.add_subcommand("covers", "minimal vertex covers"), false);
    CLI::App* c_dual = add_common(app.add_subcommand("dual", "the full duality diagram"), false);
    CLI::App* c_tree = add_common(app.add_subcommand("tree", "leaves, forest and tree verdicts"), false);
    c_tree->add_option("--max-facets", max_facets,
                       "refuse complexes with more facets than this (exponential check)")
        ->capture_default_str();
    CLI::App* c_cm = add_common(app.add_subcommand("cm", "Cohen-Macaulay verdict"), true);
    CLI::App* c_scm =
        add_common(app.add_subcommand("scm", "sequentially Cohen-Macaulay verdict"), true);
    CLI::App* c_linquo = add_common(
        app.add_subcommand("linquo", "linear-quotient certificates per component"), true);
    c_linquo->add_option("--component", component_k, "restrict to the degree-k component");
    CLI::App* c_betti = add_common(app.add_subcommand("betti", "graded Betti numbers"), true);

    for (CLI::App* cmd : {c_covers, c_dual, c_tree, c_cm, c_scm, c_linquo, c_betti})
        cmd->add_option("--cert-dir", cert_dir, "directory for certificate files");

    CLI11_PARSE(app, argc, argv);

    try {
        facets::ParsedObject obj = facets::parse_any(read_input(input));
        facets::FieldSpec field = facets::FieldSpec::parse(field_flag);

        facets::Report report;
        if (c_covers->parsed()) {
            report = facets::cmd_covers(facets::as_complex(obj), oracle);
        } else if (c_dual->parsed()) {
            report = facets::cmd_dual(facets::as_ideal(obj), oracle);
        } else if (c_tree->parsed()) {
            report = facets::cmd_tree(facets::as_complex(obj), max_facets, oracle);
        } else if (c_cm->parsed()) {
            report = facets::cmd_cm(facets::as_ideal(obj), field, oracle);
        } else if (c_scm->parsed()) {
            report = facets::cmd_scm(facets::as_ideal(obj), field, oracle);
        } else if (c_linquo->parsed()) {
            std::optional<int> only;
            if (c_linquo->count("--component")) {
                if (component_k < 1)
                    throw facets::ParseError("--component must be at least 1");
                only = component_k;
            }
            report = facets::cmd_linquo(facets::as_ideal(obj), field, only, oracle);
        } else {
            report = facets::cmd_betti(facets::as_ideal(obj), field, oracle);
        }

        emit_certificates(cert_dir, report);
        if (as_json)
            std::cout << report.envelope().dump(2) << "\n";
        else
            std::cout << report.text;
        return 0;
    } catch (const facets::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const facets::PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    }
}
