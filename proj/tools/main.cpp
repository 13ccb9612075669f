#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trop/census.hpp"
#include "trop/classify.hpp"
#include "trop/families.hpp"
#include "trop/io.hpp"
#include "trop/oracle.hpp"

using namespace trop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefused = 1; // domain refusal: not a Kleene star, hypotheses fail, bad family parameters
constexpr int kExitParse = 2;  // malformed input

struct InputError {
    int code;
    std::string message;
};

// Input spec: "registry <name>" | "gen <family> <params...>" | "file <path>"
// | bare path | "-" for stdin.
Matrix4 load_matrix(const std::vector<std::string>& spec) {
    if (spec.empty()) throw InputError{kExitParse, "no input given"};

    auto parse_param = [](const std::string& s) {
        try {
            return Rational::parse(s);
        } catch (const std::exception& e) {
            throw InputError{kExitParse, e.what()};
        }
    };

    if (spec[0] == "registry") {
        if (spec.size() != 2) throw InputError{kExitParse, "usage: registry <name>"};
        try {
            return families::registry(spec[1]);
        } catch (const std::exception& e) {
            throw InputError{kExitRefused, e.what()};
        }
    }
    if (spec[0] == "gen") {
        if (spec.size() < 2) throw InputError{kExitParse, "usage: gen <family> <params...>"};
        std::vector<Rational> params;
        for (size_t k = 2; k < spec.size(); ++k) params.push_back(parse_param(spec[k]));
        const std::string& family = spec[1];
        try {
            if (family == "gammadelta") {
                if (params.size() != 3) throw InputError{kExitParse, "gammadelta takes gamma delta c"};
                return families::gamma_delta(params[0], params[1], params[2]);
            }
            if (family == "circulant") {
                if (params.size() != 3) throw InputError{kExitParse, "circulant takes a b c"};
                return families::circulant(params[0], params[1], params[2]);
            }
            if (family == "anticirculant") {
                if (params.size() != 3) throw InputError{kExitParse, "anticirculant takes a b c"};
                return families::anticirculant(params[0], params[1], params[2]);
            }
            if (family == "penta555left") {
                if (params.size() != 9)
                    throw InputError{kExitParse, "penta555left takes g1 g2 g3 d1 d2 d3 a b c"};
                return families::penta555_left({params[0], params[1], params[2]},
                                               {params[3], params[4], params[5]}, params[6], params[7],
                                               params[8]);
            }
        } catch (const InputError&) {
            throw;
        } catch (const std::exception& e) {
            throw InputError{kExitRefused, e.what()};
        }
        throw InputError{kExitParse, "unknown family '" + family +
                                         "' (gammadelta, circulant, anticirculant, penta555left)"};
    }

    std::string path = spec[0] == "file" ? (spec.size() > 1 ? spec[1] : "") : spec[0];
    if (path.empty()) throw InputError{kExitParse, "usage: file <path>"};
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError{kExitParse, "cannot open '" + path + "'"};
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    io::MatrixParse parsed = io::parse_matrix(text);
    if (!parsed.matrix) throw InputError{kExitParse, parsed.error->str()};
    return *parsed.matrix;
}

KleeneMatrix require_kleene(const Matrix4& m) {
    KleeneCheck check = is_kleene_star(m);
    if (!check.ok) {
        std::string msg = "not a Kleene star:";
        for (const auto& v : check.violations) msg += "\n  " + v.str();
        throw InputError{kExitRefused, msg};
    }
    return KleeneMatrix::validate(m);
}

int cmd_check(const std::vector<std::string>& spec) {
    Matrix4 m = load_matrix(spec);
    KleeneCheck check = is_kleene_star(m);
    if (!check.ok) {
        std::cout << "kleene: no\n";
        for (const auto& v : check.violations) std::cout << "  violated: " << v.str() << "\n";
        return kExitRefused;
    }
    std::cout << "kleene: yes\n";
    KleeneMatrix a = KleeneMatrix::validate(m);
    auto h1 = check_hypothesis1(a);
    if (h1.ok) {
        std::cout << "hypothesis1: PASS\n";
    } else {
        std::cout << "hypothesis1: FAIL (coplanar at column";
        for (int l : h1.coplanar_witnesses) std::cout << ' ' << (l + 1);
        std::cout << ")\n";
    }
    auto h2 = check_hypothesis2(a);
    if (h2.ok) {
        std::cout << "hypothesis2: PASS\n";
    } else {
        std::cout << "hypothesis2: FAIL (";
        for (size_t k = 0; k < h2.singular.size(); ++k) {
            if (k) std::cout << ", ";
            std::cout << h2.singular[k].str() << "=0";
        }
        std::cout << ")\n";
    }
    ExtremalSet ext = extremal_set(a);
    std::cout << "maximal: " << (ext.maximal ? "yes" : "no") << "\n";
    if (!ext.maximal) std::cout << "distinct extremals: " << ext.distinct().size() << "\n";
    return kExitOk;
}

void print_text_verdict(const Polytrope& body, const ClassVerdict& v) {
    std::cout << "class: " << v.class_id << "\n";
    std::cout << "type-vector: " << v.type_vector.str() << "\n";
    std::cout << "polygon-vector: (" << v.polygon_vector[0] << "," << v.polygon_vector[1] << ","
              << v.polygon_vector[2] << "," << v.polygon_vector[3] << ")\n";
    std::cout << "f-vector: (" << body.f_vector[0] << "," << body.f_vector[1] << "," << body.f_vector[2]
              << ")\n";
    std::cout << "hexagons: " << v.hexes.str() << "\n";
    std::cout << "configuration at 123: " << v.at_123.str() << "\n";
    std::cout << "configuration at 4:   " << v.at_4.str() << "\n";
    std::cout << "centrally symmetric: " << (v.centrally_symmetric ? "yes" : "no") << "\n";
    std::cout << "chiral partner distinct: " << (v.chiral_partner_distinct ? "yes" : "no") << "\n";
    ChiralityReport chi = symmetry_chirality(body.a);
    std::cout << "transpose class: " << chi.transpose_class_id << " (configurations "
              << chi.transpose_at_123.str() << " at 123, " << chi.transpose_at_4.str() << " at 4)\n";
    std::cout << "facets:\n";
    for (const auto& f : body.facets) {
        std::cout << "  " << f.plane.str() << " [" << f.gon << "-gon]:";
        for (const auto& l : f.cycle) std::cout << ' ' << l.str();
        std::cout << "\n";
    }
    std::cout << "edges (label pair, tropical length, Euclidean length):\n";
    for (const auto& e : body.edges) {
        std::cout << "  " << e.a.str() << "-" << e.b.str() << "  " << e.tropical_length.str() << "  ";
        double eu = std::sqrt(e.euclidean_sq.to_double());
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", eu);
        std::cout << buf << "\n";
    }
}

int cmd_classify(const std::vector<std::string>& spec, const std::string& format) {
    KleeneMatrix a = require_kleene(load_matrix(spec));
    Polytrope body = build_polytrope(a);
    ClassVerdict v;
    try {
        v = classify(body);
    } catch (const HypothesisError& e) {
        std::cout << "refused: " << e.what() << "\n";
        return kExitRefused;
    }
    if (format == "json")
        std::cout << io::polytrope_to_json(body, &v) << "\n";
    else
        print_text_verdict(body, v);
    return kExitOk;
}

int cmd_census(int samples, int range, std::uint64_t seed, int jobs, bool validate) {
    CensusConfig cfg{samples, range, seed, jobs, validate};
    CensusReport report = run_census(cfg);
    std::cout << report.str();
    return report.violations.empty() ? kExitOk : kExitRefused;
}

int cmd_export(const std::vector<std::string>& spec, const std::string& off_path,
               const std::string& json_path) {
    KleeneMatrix a = require_kleene(load_matrix(spec));
    Polytrope body = build_polytrope(a);
    const ClassVerdict* verdict_ptr = nullptr;
    ClassVerdict v;
    if (body.extremals.maximal) {
        v = classify(body);
        verdict_ptr = &v;
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw InputError{kExitParse, "cannot write '" + json_path + "'"};
        out << io::polytrope_to_json(body, verdict_ptr) << "\n";
        std::cout << "wrote " << json_path << "\n";
    }
    if (!off_path.empty()) {
        if (!body.extremals.maximal) {
            std::cerr << "OFF export refused: body is not maximal\n";
            return kExitRefused;
        }
        std::ofstream out(off_path);
        if (!out) throw InputError{kExitParse, "cannot write '" + off_path + "'"};
        out << io::to_off(body);
        std::cout << "wrote " << off_path << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classifier for convex maximal tropical tetrahedra (max-plus polytropes)"};
    app.require_subcommand(1);

    std::vector<std::string> input;
    std::string format = "text";
    std::string off_path, json_path;
    int samples = 10000, range = 50, jobs = 1;
    std::uint64_t seed = 1;
    bool validate = false;

    auto* check = app.add_subcommand("check", "Kleene, hypothesis and maximality verdicts");
    check->add_option("input", input, "registry <name> | gen <family> <params...> | file <path> | <path>")
        ->expected(-1);

    auto* classify_cmd = app.add_subcommand("classify", "Combinatorial class and full structure report");
    classify_cmd->add_option("input", input, "input spec (see check)")->expected(-1);
    classify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* census = app.add_subcommand("census", "Random Kleene star census with invariant checks");
    census->add_option("--samples", samples, "number of samples")->check(CLI::PositiveNumber);
    census->add_option("--range", range, "entries drawn from [-range, 0]")->check(CLI::PositiveNumber);
    census->add_option("--seed", seed, "RNG seed");
    census->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    census->add_flag("--validate", validate, "run the brute-force oracle on every classified sample");

    auto* export_cmd = app.add_subcommand("export", "Write OFF geometry and/or a JSON report");
    export_cmd->add_option("input", input, "input spec (see check)")->expected(-1);
    export_cmd->add_option("--off", off_path, "OFF output path");
    export_cmd->add_option("--json", json_path, "JSON output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check)) return cmd_check(input);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(input, format);
        if (app.got_subcommand(census)) return cmd_census(samples, range, seed, jobs, validate);
        if (app.got_subcommand(export_cmd)) return cmd_export(input, off_path, json_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefused;
    }
    return kExitOk;
}
