#include "tanaka/io.hpp"

#include "tanaka/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace tanaka {

namespace {

using Json = nlohmann::ordered_json;
using Kind = ParseError::Kind;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool valid_label(const std::string& s) {
    static const std::regex re(R"([A-Za-z_][A-Za-z0-9_.']*)");
    return std::regex_match(s, re);
}

/// Splits a document into (line number, content) with comments removed.
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::size_t no = 0;
    for (std::string line; std::getline(in, line);) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) out.emplace_back(no, line);
    }
    return out;
}

/// "c1 A + c2 B - C" with labels resolved by `lookup`; coefficients summed per index.
std::map<std::size_t, Scalar> parse_terms(const std::string& rhs, std::size_t line,
                                          const std::function<std::size_t(const std::string&)>& lookup) {
    std::map<std::size_t, Scalar> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[pos]))) ++pos;
    };
    auto syntax = [&](const std::string& what) { return ParseError(Kind::Syntax, line, what + " in '" + rhs + "'"); };
    skip();
    if (rhs.substr(pos) == "0") return out;
    bool first = true;
    while (true) {
        skip();
        if (pos == rhs.size()) {
            if (first) throw syntax("empty right-hand side");
            break;
        }
        Scalar sign = 1;
        if (rhs[pos] == '+' || rhs[pos] == '-') {
            sign = rhs[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            throw syntax("expected + or -");
        }
        Scalar coef = 1;
        if (pos < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[pos]))) {
            const std::size_t start = pos;
            while (pos < rhs.size() && (std::isdigit(static_cast<unsigned char>(rhs[pos])) || rhs[pos] == '/')) ++pos;
            try {
                coef = parse_scalar(rhs.substr(start, pos - start));
            } catch (const std::invalid_argument& e) {
                throw syntax(e.what());
            }
            skip();
            if (pos < rhs.size() && rhs[pos] == '*') {
                ++pos;
                skip();
            }
        }
        const std::size_t start = pos;
        while (pos < rhs.size() && (std::isalnum(static_cast<unsigned char>(rhs[pos])) || rhs[pos] == '_' ||
                                    rhs[pos] == '.' || rhs[pos] == '\''))
            ++pos;
        const std::string label = rhs.substr(start, pos - start);
        if (!valid_label(label)) throw syntax("expected a basis label");
        out[lookup(label)] += sign * coef;
        first = false;
    }
    for (auto it = out.begin(); it != out.end();)
        it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

struct BracketLine {
    std::string a, b, rhs;
};

std::optional<BracketLine> split_bracket(const std::string& rest) {
    static const std::regex re(R"(^\[\s*([^,\s\]]+)\s*,\s*([^,\s\]]+)\s*\]\s*=(.*)$)");
    std::smatch m;
    if (!std::regex_match(rest, m, re)) return std::nullopt;
    return BracketLine{m[1], m[2], m[3]};
}

std::string rest_after_keyword(const std::string& line) {
    const auto sp = line.find_first_of(" \t");
    return sp == std::string::npos ? std::string{} : trim(line.substr(sp));
}

std::string keyword(const std::string& line) { return line.substr(0, line.find_first_of(" \t")); }

Json scalar_array(const Vector& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

} // namespace

std::string version() { return TANAKA_VERSION; }

Algebra parse_algebra(const std::string& text) {
    std::optional<std::string> name;
    std::vector<BasisElement> basis;
    std::map<std::string, std::size_t> index;
    StructureConstants sc;
    std::set<IndexPair> seen;

    for (const auto& [no, line] : content_lines(text)) {
        const std::string kw = keyword(line), rest = rest_after_keyword(line);
        if (kw == "algebra") {
            const auto w = words(rest);
            if (name || w.size() != 1) throw ParseError(Kind::Syntax, no, "expected a single 'algebra NAME' line");
            name = w[0];
        } else if (kw == "basis") {
            const auto w = words(rest);
            if (w.empty()) throw ParseError(Kind::Syntax, no, "empty basis line");
            for (const auto& item : w) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) throw ParseError(Kind::Syntax, no, "expected LABEL:DEGREE, got '" + item + "'");
                const std::string label = item.substr(0, colon), deg = item.substr(colon + 1);
                if (!valid_label(label)) throw ParseError(Kind::Syntax, no, "invalid label '" + label + "'");
                static const std::regex deg_re(R"(-?[0-9]{1,4})");
                if (!std::regex_match(deg, deg_re)) throw ParseError(Kind::Syntax, no, "invalid degree '" + deg + "'");
                const int d = std::stoi(deg);
                if (d >= 0) throw ParseError(Kind::GradingViolation, no, "degree of " + label + " must be negative");
                if (index.count(label)) throw ParseError(Kind::Syntax, no, "label " + label + " declared twice");
                index[label] = basis.size();
                basis.push_back({label, d});
            }
        } else if (kw == "bracket") {
            const auto br = split_bracket(rest);
            if (!br) throw ParseError(Kind::Syntax, no, "expected 'bracket [A,B] = ...'");
            auto lookup = [&, no = no](const std::string& l) {
                const auto it = index.find(l);
                if (it == index.end()) throw ParseError(Kind::UnknownLabel, no, "undeclared label " + l);
                return it->second;
            };
            std::size_t i = lookup(br->a), j = lookup(br->b);
            if (i == j) throw ParseError(Kind::Syntax, no, "bracket of " + br->a + " with itself");
            const bool flip = i > j;
            if (flip) std::swap(i, j);
            if (!seen.insert({i, j}).second)
                throw ParseError(Kind::DuplicateBracket, no, "[" + br->a + "," + br->b + "] declared twice");
            const auto terms = parse_terms(br->rhs, no, lookup);
            const int target = basis[i].degree + basis[j].degree;
            Terms t;
            for (const auto& [k, c] : terms) {
                if (basis[k].degree != target)
                    throw ParseError(Kind::GradingViolation, no,
                                     "[" + br->a + "," + br->b + "] has degree " + std::to_string(target) + " but " +
                                         basis[k].label + " has degree " + std::to_string(basis[k].degree));
                t.emplace_back(k, flip ? Scalar(-c) : c);
            }
            if (!t.empty()) sc[{i, j}] = std::move(t);
        } else {
            throw ParseError(Kind::Syntax, no, "unknown keyword '" + kw + "'");
        }
    }
    if (basis.empty()) throw ParseError(Kind::Syntax, 0, "no basis declared");
    return Algebra(name.value_or("unnamed"), std::move(basis), sc);
}

Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

std::string format_terms(const std::vector<std::string>& labels, const Vector& coords) {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Scalar& c = coords[i];
        if (is_zero(c)) continue;
        const Scalar mag = abs(c);
        const std::string term = mag == 1 ? labels[i] : to_string(mag) + " " + labels[i];
        if (s.empty()) s = (c < 0 ? "-" : "") + term;
        else s += (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

std::string serialize_algebra(const Algebra& a) {
    std::vector<std::string> labels;
    for (const auto& b : a.basis()) labels.push_back(b.label);
    std::ostringstream out;
    out << "algebra " << a.name() << "\nbasis";
    for (const auto& b : a.basis()) out << ' ' << b.label << ':' << b.degree;
    out << '\n';
    for (const auto& [ij, t] : a.structure_constants())
        out << "bracket [" << labels[ij.first] << ',' << labels[ij.second]
            << "] = " << format_terms(labels, a.bracket_basis(ij.first, ij.second)) << '\n';
    return out.str();
}

ExtensionData parse_cocycle(const std::string& text, const Algebra& base, int s) {
    if (s < 2) throw std::invalid_argument("s must be at least 2");
    std::optional<std::size_t> x;
    std::vector<std::string> module;
    bool custom_module = false;
    for (int i = 1; i <= s; ++i) module.push_back("Y" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::string>> cocycle_lines;

    for (const auto& [no, line] : content_lines(text)) {
        const std::string kw = keyword(line), rest = rest_after_keyword(line);
        if (kw == "x") {
            const auto w = words(rest);
            if (x || w.size() != 1) throw ParseError(Kind::Syntax, no, "expected a single 'x LABEL' line");
            const auto idx = base.index_of(w[0]);
            if (!idx) throw ParseError(Kind::UnknownLabel, no, "undeclared label " + w[0]);
            if (base.degree(*idx) != -1) throw ParseError(Kind::GradingViolation, no, w[0] + " is not of degree -1");
            x = *idx;
        } else if (kw == "module") {
            const auto w = words(rest);
            if (custom_module || w.size() != static_cast<std::size_t>(s))
                throw ParseError(Kind::Syntax, no, "module line must list exactly s labels");
            for (const auto& l : w)
                if (!valid_label(l)) throw ParseError(Kind::Syntax, no, "invalid label '" + l + "'");
            module = w;
            custom_module = true;
        } else if (kw == "cocycle") {
            cocycle_lines.emplace_back(no, rest);
        } else {
            throw ParseError(Kind::Syntax, no, "unknown keyword '" + kw + "'");
        }
    }
    if (!x) throw ParseError(Kind::Syntax, 0, "missing 'x LABEL' line");

    ExtensionData data{base, *x, s, {}, custom_module ? module : std::vector<std::string>{}};
    data.cocycle.module_dim = static_cast<std::size_t>(s);
    std::set<IndexPair> seen;
    for (const auto& [no, rest] : cocycle_lines) {
        const auto br = split_bracket(rest);
        if (!br) throw ParseError(Kind::Syntax, no, "expected 'cocycle [A,B] = ...'");
        auto base_index = [&, no = no](const std::string& l) {
            const auto idx = base.index_of(l);
            if (!idx) throw ParseError(Kind::UnknownLabel, no, "undeclared label " + l);
            return *idx;
        };
        std::size_t i = base_index(br->a), j = base_index(br->b);
        if (i == j) throw ParseError(Kind::Syntax, no, "cocycle on a repeated element");
        const bool flip = i > j;
        if (flip) std::swap(i, j);
        if (!seen.insert({i, j}).second) throw ParseError(Kind::DuplicateBracket, no, "pair declared twice");
        auto module_index = [&, no = no](const std::string& l) {
            for (std::size_t k = 0; k < module.size(); ++k)
                if (module[k] == l) return k;
            throw ParseError(Kind::UnknownLabel, no, "undeclared module label " + l);
        };
        const auto terms = parse_terms(br->rhs, no, module_index);
        const int target = -(base.degree(i) + base.degree(j));
        Vector v = zero_vector(static_cast<std::size_t>(s));
        for (const auto& [k, c] : terms) {
            if (static_cast<int>(k) + 1 != target)
                throw ParseError(Kind::GradingViolation, no,
                                 "cocycle value must lie in the module slot of degree " + std::to_string(-target));
            v[k] = flip ? Scalar(-c) : c;
        }
        if (!is_zero(v)) data.cocycle.values[{i, j}] = std::move(v);
    }
    return data;
}

std::string serialize_cocycle(const Algebra& base, std::size_t x_index, const Cochain2& c) {
    std::vector<std::string> module;
    for (std::size_t i = 1; i <= c.module_dim; ++i) module.push_back("Y" + std::to_string(i));
    std::ostringstream out;
    out << "x " << base.basis()[x_index].label << '\n';
    for (const auto& [ij, v] : c.values) {
        if (is_zero(v)) continue;
        out << "cocycle [" << base.basis()[ij.first].label << ',' << base.basis()[ij.second].label
            << "] = " << format_terms(module, v) << '\n';
    }
    return out.str();
}

bool Report::same_json_fields(const Report& o) const {
    return algebra == o.algebra && dims == o.dims && depth == o.depth && kind == o.kind && witness == o.witness &&
           total_dim == o.total_dim && layers == o.layers && version == o.version;
}

namespace {

Report base_report(const Algebra& a) {
    Report r;
    r.algebra = a.name();
    r.dims = a.layer_dims();
    r.depth = a.depth();
    r.version = version();
    for (const auto& b : a.basis()) r.basis_labels.push_back(b.label);
    return r;
}

} // namespace

Report make_report(const Algebra& a, const TypeVerdict& v) {
    Report r = base_report(a);
    r.kind = to_string(v.kind);
    r.witness = v.witness;
    if (v.kind == TypeVerdict::Kind::Finite) r.total_dim = v.total_dim;
    r.layers = v.layer_dims;
    switch (v.certificate) {
    case TypeVerdict::Certificate::RationalWitness: r.note = "rational witness, rank ad y = 1"; break;
    case TypeVerdict::Certificate::ClosureWitness: r.note = "minor ideal has a nontrivial zero over the closure"; break;
    case TypeVerdict::Certificate::None: r.note = v.reason; break;
    }
    if (v.kind == TypeVerdict::Kind::DegenerateInfinite) r.note = "central element in degree -1";
    if (v.cap_exceeded) r.note = "Groebner degree cap exceeded: " + v.reason;
    else if (v.finite_type_certified && v.kind == TypeVerdict::Kind::Inconclusive) r.note = v.reason;
    return r;
}

Report make_report(const Algebra& a, const IterationVerdict& v) {
    Report r = base_report(a);
    r.kind = v.finite ? "finite" : "inconclusive";
    if (v.finite) r.total_dim = v.total_dim;
    r.layers = v.layer_dims;
    return r;
}

std::string emit_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        Json j;
        j["algebra"] = r.algebra;
        j["dims"] = r.dims;
        j["depth"] = r.depth;
        Json v;
        v["kind"] = r.kind;
        v["witness"] = r.witness ? scalar_array(*r.witness) : Json(nullptr);
        v["total_dim"] = r.total_dim ? Json(*r.total_dim) : Json(nullptr);
        v["layers"] = r.layers;
        j["verdict"] = v;
        j["version"] = r.version;
        return j.dump(2) + "\n";
    }
    auto list = [](const std::vector<std::size_t>& xs) {
        std::string s = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
        return s + "]";
    };
    std::ostringstream out;
    out << "algebra:   " << r.algebra << '\n';
    out << "dims:      " << list(r.dims) << '\n';
    out << "depth:     " << r.depth << '\n';
    out << "verdict:   " << r.kind << '\n';
    if (!r.note.empty()) out << "note:      " << r.note << '\n';
    if (r.witness) {
        out << "witness:   ";
        if (r.basis_labels.size() == r.witness->size()) out << format_terms(r.basis_labels, *r.witness);
        else out << "(coordinates)";
        out << "  [";
        for (std::size_t i = 0; i < r.witness->size(); ++i) out << (i ? ", " : "") << to_string((*r.witness)[i]);
        out << "]\n";
    }
    if (r.total_dim) out << "total_dim: " << *r.total_dim << '\n';
    if (!r.layers.empty()) out << "layers:    " << list(r.layers) << "  (g_0, g_1, ...)\n";
    if (r.seconds) out << "time:      " << std::fixed << std::setprecision(3) << *r.seconds << " s\n";
    out << "version:   " << r.version << '\n';
    return out.str();
}

Report report_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
        Report r;
        r.algebra = j.at("algebra").get<std::string>();
        r.dims = j.at("dims").get<std::vector<std::size_t>>();
        r.depth = j.at("depth").get<int>();
        const auto& v = j.at("verdict");
        r.kind = v.at("kind").get<std::string>();
        if (!v.at("witness").is_null()) {
            Vector w;
            for (const auto& x : v.at("witness")) w.push_back(parse_scalar(x.get<std::string>()));
            r.witness = std::move(w);
        }
        if (!v.at("total_dim").is_null()) r.total_dim = v.at("total_dim").get<std::size_t>();
        r.layers = v.at("layers").get<std::vector<std::size_t>>();
        r.version = j.at("version").get<std::string>();
        return r;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

} // namespace tanaka
