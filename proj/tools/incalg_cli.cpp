// incalg — command-line front end over the shared-library C API.
//
// Subcommands: validate, basis, decompose, audit, enumerate.
// Exit codes: 0 success; 1 usage, parse, or tool error; 2 when a decompose
// verification flag fails (the JSON report still carries the honest flags).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "incalg.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_flag_failure = 2;

int fail(const std::string& message) {
    std::cerr << "incalg: " << message << '\n';
    return exit_error;
}

int fail_api(void) { return fail(incalg_last_error()); }

/// Owner for strings returned by the C API.
struct api_string {
    char* s = nullptr;
    ~api_string() { incalg_string_free(s); }
    api_string() = default;
    api_string(const api_string&) = delete;
    api_string& operator=(const api_string&) = delete;
};

bool read_file(const std::string& path, std::string& out, std::string& message) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        message = "cannot open file: " + path;
        return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        message = "cannot read file: " + path;
        return false;
    }
    out = buffer.str();
    return true;
}

/// Write `text` plus a final newline to output_path, or stdout when empty.
int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << '\n';
        return std::cout ? exit_ok : fail("cannot write to standard output");
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) return fail("cannot open output file: " + output_path);
    out << text << '\n';
    out.flush();
    if (!out) return fail("cannot write output file: " + output_path);
    return exit_ok;
}

int run_validate(const std::string& poset_path) {
    std::string doc;
    std::string message;
    if (!read_file(poset_path, doc, message)) return fail(message);
    api_string diagnostic;
    incalg_status status = incalg_preorder_validate_json(doc.c_str(), &diagnostic.s);
    if (status != INCALG_OK)
        return fail(diagnostic.s != nullptr ? diagnostic.s : incalg_last_error());

    incalg_preorder* p = nullptr;
    if (incalg_preorder_parse(doc.c_str(), &p) != INCALG_OK) return fail_api();
    std::ostringstream out;
    out << "{\n  \"valid\": true,\n  \"elements\": " << incalg_preorder_size(p)
        << ",\n  \"poset\": " << (incalg_preorder_is_poset(p) ? "true" : "false")
        << ",\n  \"connected\": "
        << (incalg_preorder_is_connected(p) ? "true" : "false") << "\n}";
    incalg_preorder_free(p);
    return emit(out.str(), "");
}

int run_basis(const std::string& poset_path, const std::string& ring,
              const std::string& kind, const std::string& method,
              bool exploratory, const std::string& output_path) {
    std::string doc;
    std::string message;
    if (!read_file(poset_path, doc, message)) return fail(message);
    api_string result;
    if (incalg_basis_json(doc.c_str(), ring.c_str(), kind.c_str(), method.c_str(),
                          exploratory ? 1 : 0, &result.s) != INCALG_OK)
        return fail_api();
    return emit(result.s, output_path);
}

int run_decompose(const std::string& poset_path, const std::string& ring,
                  const std::string& operator_path, const std::string& method,
                  const std::string& output_path) {
    std::string poset_doc;
    std::string operator_doc;
    std::string message;
    if (!read_file(poset_path, poset_doc, message)) return fail(message);
    if (!read_file(operator_path, operator_doc, message)) return fail(message);
    api_string result;
    int all_flags = 0;
    if (incalg_decompose_json(poset_doc.c_str(), ring.c_str(),
                              operator_doc.c_str(), method.c_str(), &all_flags,
                              &result.s) != INCALG_OK)
        return fail_api();
    int code = emit(result.s, output_path);
    if (code != exit_ok) return code;
    return all_flags != 0 ? exit_ok : exit_flag_failure;
}

int run_audit(const std::string& poset_path, const std::string& ring,
              long long trials, unsigned long long seed, bool exploratory,
              const std::string& output_path) {
    std::string doc;
    std::string message;
    if (!read_file(poset_path, doc, message)) return fail(message);
    api_string result;
    if (incalg_audit_json(doc.c_str(), ring.c_str(), trials, seed,
                          exploratory ? 1 : 0, &result.s) != INCALG_OK)
        return fail_api();
    return emit(result.s, output_path);
}

struct enumerate_sink {
    std::ostream* out;
    bool ok = true;
};

extern "C" int enumerate_visitor(const char* preorder_json, void* user_data) {
    auto* sink = static_cast<enumerate_sink*>(user_data);
    (*sink->out) << preorder_json << '\n';
    if (!*sink->out) {
        sink->ok = false;
        return 0; // stop
    }
    return 1;
}

int run_enumerate(int n, bool connected_only, const std::string& output_path) {
    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path, std::ios::binary);
        if (!file) return fail("cannot open output file: " + output_path);
    }
    enumerate_sink sink{output_path.empty() ? &std::cout : &file};
    if (incalg_enumerate_preorders(n, connected_only ? 1 : 0, enumerate_visitor,
                                   &sink, nullptr) != INCALG_OK)
        return fail_api();
    if (!sink.ok) return fail("cannot write enumeration output");
    if (file.is_open()) {
        file.flush();
        if (!file) return fail("cannot write output file: " + output_path);
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact incidence-algebra toolkit (version " +
                 std::string(incalg_version()) + ")"};
    app.require_subcommand(1);

    std::string poset_path;
    std::string ring = "Q";
    std::string kind = "lie";
    std::string method = "bruteforce";
    std::string operator_path;
    std::string output_path;
    long long trials = 100;
    unsigned long long seed = 0;
    bool exploratory = false;
    bool connected_only = false;
    int n = 3;

    auto* validate =
        app.add_subcommand("validate", "check a preorder document: parses, and "
                                       "its relation list equals its own "
                                       "reflexive-transitive closure");
    validate->add_option("--poset", poset_path, "preorder JSON file")->required();

    auto* basis = app.add_subcommand(
        "basis", "compute a basis of the Lie-derivation or derivation module");
    basis->add_option("--poset", poset_path, "preorder JSON file")->required();
    basis->add_option("--ring", ring, "coefficient ring: Q, Z/<p> (default Q)");
    basis->add_option("--kind", kind, "lie | derivation (default lie)");
    basis->add_option("--method", method,
                      "bruteforce | closed_form | both (default bruteforce)");
    basis->add_flag("--exploratory", exploratory,
                    "additionally admit the ring Z/2");
    basis->add_option("--output", output_path, "write the JSON here");

    auto* decompose = app.add_subcommand(
        "decompose", "split a Lie derivation into derivation + central parts");
    decompose->add_option("--poset", poset_path, "preorder JSON file")->required();
    decompose->add_option("--ring", ring, "coefficient ring (default Q)");
    decompose->add_option("--operator", operator_path, "operator JSON file")
        ->required();
    decompose->add_option("--method", method,
                          "coefficients | diagonal (required)")
        ->required();
    decompose->add_option("--output", output_path, "write the JSON here");

    auto* audit = app.add_subcommand(
        "audit", "run the property-audit suite and report findings as data");
    audit->add_option("--poset", poset_path, "preorder JSON file")->required();
    audit->add_option("--ring", ring, "coefficient ring (default Q)");
    audit->add_option("--trials", trials, "random trials per section (default 100)");
    audit->add_option("--seed", seed, "random seed (default 0)");
    audit->add_flag("--exploratory", exploratory,
                    "additionally admit the ring Z/2");
    audit->add_option("--output", output_path, "write the JSON here");

    auto* enumerate = app.add_subcommand(
        "enumerate", "stream every preorder on n labeled points, one JSON "
                     "document per line");
    enumerate->add_option("--n", n, "number of points, 1..5")->required();
    enumerate->add_flag("--connected-only", connected_only,
                        "only connected preorders");
    enumerate->add_option("--output", output_path, "write the stream here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    if (app.got_subcommand(validate)) return run_validate(poset_path);
    if (app.got_subcommand(basis))
        return run_basis(poset_path, ring, kind, method, exploratory, output_path);
    if (app.got_subcommand(decompose))
        return run_decompose(poset_path, ring, operator_path, method, output_path);
    if (app.got_subcommand(audit))
        return run_audit(poset_path, ring, trials, seed, exploratory, output_path);
    if (app.got_subcommand(enumerate))
        return run_enumerate(n, connected_only, output_path);
    return fail("no subcommand"); // unreachable: require_subcommand(1)
}
