#include "schwarz/spec_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schwarz/errors.hpp"

namespace schwarz {
namespace io {

namespace {

using nlohmann::json;

// --- tiny constant-expression evaluator ------------------------------------

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " in expression \"" + s + "\"", 0,
                          static_cast<int>(pos) + 1);
    }

    double parse_expr() {
        double v = parse_term();
        for (;;) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }

    double parse_term() {
        double v = parse_factor();
        for (;;) {
            if (eat('*')) v *= parse_factor();
            else if (eat('/')) v /= parse_factor();
            else return v;
        }
    }

    double parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        double base = parse_atom();
        skip_ws();
        if (eat('^')) return std::pow(base, parse_factor()); // right-associative
        return base;
    }

    double parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        if (eat('(')) {
            double v = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "pi") return M_PI;
            fail("unknown constant '" + name + "'");
        }
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
                s[pos] == 'e' || s[pos] == 'E' ||
                ((s[pos] == '+' || s[pos] == '-') && pos > start &&
                 (s[pos - 1] == 'e' || s[pos - 1] == 'E'))))
            ++pos;
        if (pos == start) fail("expected a number");
        try {
            size_t used = 0;
            double v = std::stod(s.substr(start, pos - start), &used);
            if (used != pos - start) fail("malformed number");
            return v;
        } catch (const std::exception&) {
            fail("malformed number");
        }
    }
};

// --- JSON helpers -----------------------------------------------------------

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double number_at(const json& v, const std::string& path) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            return eval_number_expr(v.get<std::string>());
        } catch (const parse_error& e) {
            throw parse_error(e.what(), 0, 0, path);
        }
    }
    throw parse_error("expected a number or expression string", 0, 0, path);
}

std::vector<double> number_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw parse_error("expected an array of numbers", 0, 0, path);
    std::vector<double> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(number_at(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

const json& field(const json& obj, const char* name, const std::string& path) {
    auto it = obj.find(name);
    if (it == obj.end())
        throw parse_error("missing field", 0, 0, path.empty() ? name : path + "." + name);
    return *it;
}

std::string join(const std::string& path, const std::string& name) {
    return path.empty() ? name : path + "." + name;
}

BVFunction parse_function(const json& obj, const std::string& path) {
    std::vector<double> bks =
        number_array(field(obj, "breakpoints", path), join(path, "breakpoints"));
    const json& jp = field(obj, "pieces", path);
    if (!jp.is_array()) throw parse_error("expected an array", 0, 0, join(path, "pieces"));
    std::vector<Piece> pieces;
    for (size_t i = 0; i < jp.size(); ++i) {
        std::string ppath = join(path, "pieces[" + std::to_string(i) + "]");
        const json& pj = jp[i];
        if (!pj.is_object()) throw parse_error("expected an object", 0, 0, ppath);
        std::string kind = field(pj, "kind", ppath).get<std::string>();
        if (kind == "polynomial") {
            pieces.push_back(PolyPiece{number_array(field(pj, "coeffs", ppath), ppath + ".coeffs")});
        } else if (kind == "cantor") {
            bool reversed = pj.value("reversed", false);
            pieces.push_back(
                CantorPiece{number_array(field(pj, "coeffs", ppath), ppath + ".coeffs"), reversed});
        } else if (kind == "cantor_affine") {
            bool reversed = pj.value("reversed", false);
            double base = number_at(field(pj, "base", ppath), ppath + ".base");
            double amp = number_at(field(pj, "amplitude", ppath), ppath + ".amplitude");
            pieces.push_back(CantorPiece{{base, amp}, reversed});
        } else {
            throw parse_error("unknown piece kind '" + kind + "'", 0, 0, ppath + ".kind");
        }
    }
    try {
        return BVFunction(std::move(bks), std::move(pieces));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0, 0, path);
    }
}

json function_to_json(const BVFunction& f) {
    json obj;
    obj["breakpoints"] = f.breakpoints();
    json pieces = json::array();
    for (const Piece& p : f.pieces()) {
        json pj;
        if (const auto* pp = std::get_if<PolyPiece>(&p)) {
            pj["kind"] = "polynomial";
            pj["coeffs"] = pp->coeffs;
        } else {
            const auto& cp = std::get<CantorPiece>(p);
            pj["kind"] = "cantor";
            pj["coeffs"] = cp.coeffs;
            pj["reversed"] = cp.reversed;
        }
        pieces.push_back(std::move(pj));
    }
    obj["pieces"] = std::move(pieces);
    return obj;
}

SpecDocument parse_document(const json& doc) {
    if (!doc.is_object()) throw parse_error("document must be a JSON object");
    const json& version = field(doc, "schema_version", "");
    if (!version.is_string() || version.get<std::string>() != "1")
        throw parse_error("unsupported schema_version (expected \"1\")", 0, 0, "schema_version");
    const json& dim = field(doc, "dimension", "");
    if (!dim.is_number_integer() || dim.get<int>() < 2)
        throw parse_error("dimension must be an integer >= 2", 0, 0, "dimension");

    BVFunction f = parse_function(doc, "");
    Profile profile = [&] {
        try {
            return Profile(std::move(f), dim.get<int>());
        } catch (const precondition_error& e) {
            throw parse_error(e.what(), 0, 0, "pieces");
        }
    }();

    std::optional<BVFunction> drift;
    if (doc.contains("drift")) drift = parse_function(doc["drift"], "drift");
    std::optional<std::vector<double>> direction;
    if (doc.contains("direction")) direction = number_array(doc["direction"], "direction");
    return SpecDocument{std::move(profile), std::move(drift), std::move(direction)};
}

} // namespace

double eval_number_expr(const std::string& text) {
    ExprParser p(text);
    double v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    if (!std::isfinite(v)) p.fail("expression is not finite");
    return v;
}

TubeSet SpecDocument::to_tube() const {
    if (!drift) return TubeSet::symmetral(profile);
    std::vector<double> e;
    if (direction) {
        e = *direction;
        double norm = 0.0;
        for (double v : e) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) throw precondition_error("direction must be nonzero");
        for (double& v : e) v /= norm;
    } else {
        e.assign(static_cast<size_t>(profile.dimension()) - 1, 0.0);
        e[0] = 1.0;
    }
    return TubeSet(profile, *drift, std::move(e));
}

SpecDocument parse_spec_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error(e.what(), line, col);
    }
    return parse_document(doc);
}

SpecDocument parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

namespace {

json document_to_json(const SpecDocument& doc) {
    json out;
    out["schema_version"] = "1";
    out["dimension"] = doc.profile.dimension();
    json fn = function_to_json(doc.profile.function());
    out["breakpoints"] = std::move(fn["breakpoints"]);
    out["pieces"] = std::move(fn["pieces"]);
    if (doc.drift) out["drift"] = function_to_json(*doc.drift);
    if (doc.direction) out["direction"] = *doc.direction;
    return out;
}

} // namespace

std::string serialize(const SpecDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

std::string serialize_witness(const WitnessSet& witness, const InequalityCheck& verification) {
    SpecDocument doc{witness.tube.profile(), witness.tube.drift(), witness.tube.direction()};
    json out = document_to_json(doc);
    switch (witness.kind) {
        case WitnessKind::Split: out["kind"] = "split"; break;
        case WitnessKind::Jump: out["kind"] = "jump"; break;
        case WitnessKind::Cantor: out["kind"] = "cantor"; break;
        case WitnessKind::Staircase: out["kind"] = "staircase"; break;
    }
    json prov;
    if (witness.provenance.zbar) prov["zbar"] = *witness.provenance.zbar;
    if (!witness.provenance.tau.empty()) prov["tau"] = witness.provenance.tau;
    if (witness.provenance.lambda) prov["lambda"] = *witness.provenance.lambda;
    if (!witness.provenance.direction.empty()) prov["direction"] = witness.provenance.direction;
    if (witness.provenance.depth) prov["depth"] = *witness.provenance.depth;
    out["provenance"] = std::move(prov);
    json ver;
    ver["tube_perimeter"] = verification.tube_perimeter;
    ver["symmetral_perimeter"] = verification.symmetral_perimeter;
    ver["gap"] = verification.gap;
    ver["holds"] = verification.holds;
    out["verification"] = std::move(ver);
    return out.dump(2) + "\n";
}

} // namespace io
} // namespace schwarz
