#include "trop/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace trop {
namespace io {

using nlohmann::json;

std::string ParseError::str() const {
    std::string s = message;
    if (line > 0) s += " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    return s;
}

namespace {

MatrixParse fail(std::string msg, int line, int col) {
    return {std::nullopt, ParseError{std::move(msg), line, col}};
}

Rational json_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw std::invalid_argument("matrix entries must be integers or rational strings");
}

MatrixParse parse_matrix_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) return fail("invalid JSON", 0, 0);
    if (!doc.is_object() || !doc.contains("matrix")) return fail("JSON object must contain \"matrix\"", 0, 0);
    const json& m = doc["matrix"];
    if (!m.is_array() || m.size() != 4) return fail("\"matrix\" must be an array of 4 rows", 0, 0);
    Matrix4 out;
    for (int i = 0; i < 4; ++i) {
        const json& row = m[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != 4)
            return fail("matrix row " + std::to_string(i + 1) + " must have 4 entries", 0, 0);
        for (int j = 0; j < 4; ++j) {
            try {
                out.at(i, j) = json_rational(row[static_cast<size_t>(j)]);
            } catch (const std::exception& e) {
                return fail(std::string("row ") + std::to_string(i + 1) + ", entry " + std::to_string(j + 1) +
                                ": " + e.what(),
                            0, 0);
            }
        }
    }
    return {out, std::nullopt};
}

} // namespace

MatrixParse parse_matrix(const std::string& text) {
    size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k < text.size() && text[k] == '{') return parse_matrix_json(text);

    Matrix4 out;
    int next_entry = 0;
    int line_no = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            std::string token = line.substr(start, pos - start);
            if (next_entry >= 16)
                return fail("more than 16 matrix entries", line_no, static_cast<int>(start + 1));
            try {
                out.at(next_entry / 4, next_entry % 4) = Rational::parse(token);
            } catch (const std::exception&) {
                return fail("bad rational '" + token + "'", line_no, static_cast<int>(start + 1));
            }
            ++next_entry;
        }
    }
    if (next_entry != 16)
        return fail("expected 16 matrix entries, found " + std::to_string(next_entry), line_no, 1);
    return {out, std::nullopt};
}

namespace {

json rational_json(const Rational& r) { return r.str(); }

json point_json(const ProjectivePoint& p) {
    json arr = json::array();
    for (int i = 0; i < 4; ++i) arr.push_back(rational_json(p[i]));
    return arr;
}

json plane_json(const SupportingPlane& p) {
    json o;
    o["kind"] = p.kind == SupportingPlane::Kind::coordinate ? "coordinate" : "difference";
    o["bound"] = p.bound == SupportingPlane::Bound::lower ? "lower" : "upper";
    o["i"] = p.i + 1;
    if (p.kind == SupportingPlane::Kind::difference) o["j"] = p.j + 1;
    o["level"] = rational_json(p.level);
    o["plane"] = p.str();
    return o;
}

json config_json(const Configuration& c) {
    json o;
    o["shape"] = c.str();
    o["sizes"] = c.sizes;
    if (c.is_555) o["handedness"] = c.left ? "left" : "right";
    return o;
}

ProjectivePoint point_from_json(const json& arr) {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[static_cast<size_t>(i)] = Rational::parse(arr.at(static_cast<size_t>(i)).get<std::string>());
    return ProjectivePoint::from_homogeneous(v);
}

ExtremalLabel label_from_string(const std::string& s) {
    if (s.size() == 1) return ExtremalLabel::generator(s[0] - '1');
    if (s.size() == 2) return ExtremalLabel::line_vertex(s[0] - '1', s[1] - '1');
    if (s.size() == 3) {
        bool present[4] = {false, false, false, false};
        for (char ch : s) present[ch - '1'] = true;
        for (int l = 0; l < 4; ++l)
            if (!present[l]) return ExtremalLabel::plane_vertex_omitting(l);
    }
    throw std::invalid_argument("bad extremal label '" + s + "'");
}

} // namespace

std::string polytrope_to_json(const Polytrope& p, const ClassVerdict* verdict) {
    json doc;
    json matrix = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(rational_json(p.a.at(i, j)));
        matrix.push_back(row);
    }
    doc["matrix"] = matrix;
    doc["hypothesis1"] = p.extremals.hypothesis1;
    doc["hypothesis2"] = p.extremals.hypothesis2;
    doc["maximal"] = p.extremals.maximal;

    json extremals = json::array();
    for (const auto& [label, pt] : p.extremals.points) {
        json e;
        e["label"] = label.str();
        e["kind"] = label.kind == ExtremalLabel::Kind::generator
                        ? "generator"
                        : (label.kind == ExtremalLabel::Kind::plane_vertex ? "plane-vertex" : "line-vertex");
        e["point"] = point_json(pt);
        extremals.push_back(e);
    }
    doc["extremals"] = extremals;

    json facets = json::array();
    for (const auto& f : p.facets) {
        json o = plane_json(f.plane);
        o["gon"] = f.gon;
        json cycle = json::array();
        for (const auto& l : f.cycle) cycle.push_back(l.str());
        o["cycle"] = cycle;
        facets.push_back(o);
    }
    doc["facets"] = facets;

    json edges = json::array();
    for (const auto& e : p.edges) {
        json o;
        o["a"] = e.a.str();
        o["b"] = e.b.str();
        o["tropical_length"] = rational_json(e.tropical_length);
        o["euclidean_sq"] = rational_json(e.euclidean_sq);
        edges.push_back(o);
    }
    doc["edges"] = edges;
    doc["f_vector"] = p.f_vector;
    doc["polygon_vector"] = p.polygon_vector;

    if (verdict) {
        json c;
        c["class"] = verdict->class_id;
        c["type_vector"] = verdict->type_vector.t;
        c["hexagons"] = verdict->hexes.hexagon_count;
        c["hexagon_adjacency"] = verdict->hexes.str();
        c["centrally_symmetric"] = verdict->centrally_symmetric;
        c["chiral_partner_distinct"] = verdict->chiral_partner_distinct;
        c["configuration_at_123"] = config_json(verdict->at_123);
        c["configuration_at_4"] = config_json(verdict->at_4);
        json all = json::object();
        for (int i = 0; i < 4; ++i)
            all[ExtremalLabel::generator(i).str()] = config_json(verdict->configurations[static_cast<size_t>(i)]);
        for (int l = 0; l < 4; ++l)
            all[ExtremalLabel::plane_vertex_omitting(l).str()] =
                config_json(verdict->configurations[static_cast<size_t>(4 + l)]);
        c["configurations"] = all;
        doc["classification"] = c;
    }
    return doc.dump(2);
}

Polytrope polytrope_from_json(const std::string& text) {
    json doc = json::parse(text);
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m.at(i, j) = Rational::parse(doc["matrix"][static_cast<size_t>(i)][static_cast<size_t>(j)]
                                             .get<std::string>());
    KleeneMatrix a = KleeneMatrix::validate(m);
    Polytrope p = build_polytrope(a);

    // The rebuilt structure must coincide with the document; spot-check the
    // exact pieces so a stale or edited file cannot silently pass.
    for (const auto& e : doc["extremals"]) {
        ExtremalLabel l = label_from_string(e["label"].get<std::string>());
        if (p.extremals.at(l) != point_from_json(e["point"]))
            throw std::invalid_argument("document extremal " + l.str() + " does not match the rebuild");
    }
    if (doc["f_vector"].get<std::array<int, 3>>() != p.f_vector)
        throw std::invalid_argument("document f-vector does not match the rebuild");
    if (doc["facets"].size() != p.facets.size() || doc["edges"].size() != p.edges.size())
        throw std::invalid_argument("document facet/edge counts do not match the rebuild");
    for (size_t fi = 0; fi < p.facets.size(); ++fi) {
        const json& cycle = doc["facets"][fi]["cycle"];
        const auto& rebuilt = p.facets[fi].cycle;
        if (cycle.size() != rebuilt.size())
            throw std::invalid_argument("document facet cycle length does not match the rebuild");
        for (size_t k = 0; k < rebuilt.size(); ++k)
            if (cycle[k].get<std::string>() != rebuilt[k].str())
                throw std::invalid_argument("document facet cycle does not match the rebuild");
    }
    return p;
}

std::string to_off(const Polytrope& p) {
    if (!p.extremals.maximal)
        throw std::invalid_argument("OFF export requires a maximal body (facet cycles undefined otherwise)");
    std::ostringstream os;
    os << "OFF\n" << p.vertices.size() << ' ' << p.facets.size() << ' ' << p.edges.size() << '\n';
    std::map<ExtremalLabel, size_t> index;
    for (size_t k = 0; k < p.vertices.size(); ++k) index[p.vertices[k].first] = k;
    char buf[64];
    for (const auto& [label, pt] : p.vertices) {
        std::snprintf(buf, sizeof buf, "%.12f %.12f %.12f", pt[0].to_double(), pt[1].to_double(),
                      pt[2].to_double());
        os << buf << '\n';
    }
    for (const auto& f : p.facets) {
        os << f.cycle.size();
        for (const auto& l : f.cycle) os << ' ' << index.at(l);
        os << '\n';
    }
    return os.str();
}

} // namespace io
} // namespace trop
