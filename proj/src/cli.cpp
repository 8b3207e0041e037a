#include "tanaka/cli.hpp"

#include "tanaka/catalog.hpp"
#include "tanaka/errors.hpp"
#include "tanaka/io.hpp"
#include "tanaka/pencil.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tanaka {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Algebra read_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

void require_gnla(const Algebra& a) {
    const auto r = validate(a);
    if (!r.is_gnla()) {
        std::string why;
        for (const auto& f : r.failures)
            if (f.check != "nondegenerate") why += (why.empty() ? "" : "; ") + f.check + " " + f.witness;
        throw Error("not a graded nilpotent Lie algebra: " + why);
    }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f || !(f << text)) throw UsageError("cannot write " + path);
    out << "wrote " << path << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_check(const std::string& file, std::ostream& out) {
    const Algebra a = read_algebra(file);
    const auto r = validate(a);
    out << "algebra " << a.name() << ": dim " << a.dim() << ", depth " << a.depth() << ", dims [";
    const auto dims = a.layer_dims();
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? ", " : "") << dims[i];
    out << "]\n";
    for (const auto& [name, ok] : std::vector<std::pair<std::string, bool>>{
             {"grading", r.grading}, {"jacobi", r.jacobi}, {"generated", r.generated}, {"nondegenerate", r.nondegenerate}}) {
        out << "  " << name << ": " << (ok ? "ok" : "FAILED");
        if (!ok)
            for (const auto& f : r.failures)
                if (f.check == name) out << ' ' << f.witness;
        out << '\n';
    }
    if (r.central_witness) out << "  central element in degree -1: " << format_vector(a, *r.central_witness) << '\n';
    return r.is_gnla() ? Ok : ValidationFailed;
}

int cmd_prolong(const std::string& file, int n, bool json, std::ostream& out) {
    const Algebra a = read_algebra(file);
    require_gnla(a);
    const auto start = std::chrono::steady_clock::now();
    const auto v = classify_by_iteration(a, n);
    Report r = make_report(a, v);
    if (!v.finite) r.note = "no layer vanished up to degree " + std::to_string(n);
    r.seconds = seconds_since(start);
    out << emit_report(r, json ? ReportFormat::Json : ReportFormat::Text);
    return Ok;
}

int cmd_classify(const std::string& file, const ClassifyOptions& opts, bool json, std::ostream& out) {
    const Algebra a = read_algebra(file);
    require_gnla(a);
    const auto start = std::chrono::steady_clock::now();
    const auto v = classify(a, opts);
    Report r = make_report(a, v);
    r.seconds = seconds_since(start);
    out << emit_report(r, json ? ReportFormat::Json : ReportFormat::Text);
    return v.cap_exceeded && v.kind == TypeVerdict::Kind::Inconclusive ? CapReached : Ok;
}

int cmd_catalog(const std::string& name, const std::vector<std::string>& params, const std::string& output,
                std::ostream& out) {
    std::map<std::string, std::string> kv;
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("parameter must look like key=value: " + p);
        if (!kv.emplace(p.substr(0, eq), p.substr(eq + 1)).second) throw UsageError("parameter given twice: " + p);
    }
    emit(serialize_algebra(catalog::build(name, kv)), output, out);
    return Ok;
}

int cmd_extend(const std::string& file, int s, const std::string& cocycle_file, bool canonical,
               const std::string& output, std::ostream& out) {
    const Algebra base = read_algebra(file);
    require_gnla(base);
    ExtensionData data = parse_cocycle(read_file(cocycle_file), base, s);
    if (canonical) data = canonicalize_extension(data).data;
    emit(serialize_algebra(special_extension(data)), output, out);
    return Ok;
}

int cmd_cohomology(const std::string& file, int s, const std::string& x_label, bool json, std::ostream& out) {
    const Algebra a = read_algebra(file);
    require_gnla(a);
    std::size_t x = 0;
    if (x_label.empty()) {
        if (a.layer_indices(1).empty()) throw UsageError("algebra has no degree -1 element");
        x = a.layer_indices(1).front();
    } else {
        const auto idx = a.index_of(x_label);
        if (!idx || a.degree(*idx) != -1) throw UsageError(x_label + " is not a degree -1 basis label");
        x = *idx;
    }
    const auto h = h2_0(a, x, s);
    if (json) {
        Json j;
        j["algebra"] = a.name();
        j["x"] = a.basis()[x].label;
        j["s"] = s;
        j["dim"] = h.dim;
        j["cocycle_dim"] = h.cocycle_dim;
        j["coboundary_dim"] = h.coboundary_dim;
        Json reps = Json::array();
        for (const auto& c : h.representatives) reps.push_back(serialize_cocycle(a, x, c));
        j["representatives"] = reps;
        j["version"] = version();
        out << j.dump(2) << '\n';
        return Ok;
    }
    out << "algebra:        " << a.name() << '\n'
        << "x:              " << a.basis()[x].label << '\n'
        << "s:              " << s << '\n'
        << "dim H^2_0:      " << h.dim << '\n'
        << "cocycles:       " << h.cocycle_dim << '\n'
        << "coboundaries:   " << h.coboundary_dim << '\n';
    for (std::size_t i = 0; i < h.representatives.size(); ++i)
        out << "# representative " << i + 1 << '\n' << serialize_cocycle(a, x, h.representatives[i]);
    return Ok;
}

int cmd_pencil(const std::string& blocks, const std::string& output, std::ostream& out) {
    PencilSpec spec;
    try {
        spec = parse_pencil_blocks(blocks);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit(serialize_algebra(algebra_from_pencil(spec)), output, out);
    if (!output.empty()) {
        const auto p = assemble_pencil(spec);
        out << "side " << spec.side() << ", det(l1 B1 + l2 B2) = " << det_pencil(p.b1, p.b2).to_string() << '\n';
        if (!spec.nondegenerate()) out << "warning: minimal index 0, the algebra is degenerate\n";
    }
    return Ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tanaka prolongation of graded nilpotent Lie algebras.\n"
                 "Witness vectors are printed in the declaration order of the basis.",
                 "tanaka"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    std::string file, cocycle_file, output, name, blocks, x_label;
    int max_degree = default_max_degree, s = 0;
    unsigned height = default_height, cap = GroebnerOptions{}.degree_cap;
    bool json = false, canonical = false;
    std::vector<std::string> params;

    auto* check = app.add_subcommand("check", "Validate an algebra file");
    check->add_option("FILE", file, "algebra file")->required();

    auto* prolong = app.add_subcommand("prolong", "Compute prolongation layers g_0, g_1, ...");
    prolong->add_option("FILE", file, "algebra file")->required();
    prolong->add_option("--max-degree", max_degree, "highest layer to compute")->required()->check(CLI::Range(0, 1000));
    prolong->add_flag("--json", json, "JSON report");

    auto* cls = app.add_subcommand("classify", "Decide finite or infinite type");
    cls->add_option("FILE", file, "algebra file")->required();
    cls->add_option("--max-degree", max_degree, "highest layer to compute")->check(CLI::Range(0, 1000));
    cls->add_option("--height", height, "height bound of the rational witness search")->check(CLI::Range(0u, 100u));
    cls->add_option("--degree-cap", cap, "Groebner S-pair degree cap")->check(CLI::Range(2u, 1000u));
    cls->add_flag("--json", json, "JSON report");

    auto* cat = app.add_subcommand("catalog", "Write a named example algebra");
    cat->add_option("NAME", name, "goursat, heisenberg, mixedjet, nontrivial6, free2step3, kgen, from_pencil")
        ->required();
    cat->add_option("--param", params, "parameter key=value (n, dim, k, blocks)");
    cat->add_option("-o,--output", output, "output file");

    auto* ext = app.add_subcommand("extend", "Build a special extension from a cocycle file");
    ext->add_option("FILE", file, "base algebra file")->required();
    ext->add_option("--s", s, "module length")->required()->check(CLI::Range(2, 1000));
    ext->add_option("--cocycle", cocycle_file, "cocycle file")->required();
    ext->add_flag("--canonical", canonical, "replace the cocycle by its cohomology representative");
    ext->add_option("-o,--output", output, "output file");

    auto* coh = app.add_subcommand("cohomology", "Degree-0 second cohomology with values in the shift module");
    coh->add_option("FILE", file, "base algebra file")->required();
    coh->add_option("--s", s, "module length")->required()->check(CLI::Range(2, 1000));
    coh->add_option("--x", x_label, "degree -1 label acting by the shift (default: first)");
    coh->add_flag("--json", json, "JSON output");

    auto* pen = app.add_subcommand("pencil", "Write the 2-step algebra of a canonical skew pencil");
    pen->add_option("--blocks", blocks, "block list such as \"M:1,F:2,E:1:a=0\"")->required();
    pen->add_option("-o,--output", output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Ok : Usage;
    }

    try {
        if (check->parsed()) return cmd_check(file, out);
        if (prolong->parsed()) return cmd_prolong(file, max_degree, json, out);
        if (cls->parsed()) {
            ClassifyOptions opts;
            opts.max_degree = max_degree;
            opts.height = height;
            opts.groebner.degree_cap = cap;
            return cmd_classify(file, opts, json, out);
        }
        if (cat->parsed()) return cmd_catalog(name, params, output, out);
        if (ext->parsed()) return cmd_extend(file, s, cocycle_file, canonical, output, out);
        if (coh->parsed()) return cmd_cohomology(file, s, x_label, json, out);
        if (pen->parsed()) return cmd_pencil(blocks, output, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ValidationFailed;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return CapReached;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return ValidationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

} // namespace tanaka
