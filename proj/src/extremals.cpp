#include "trop/extremals.hpp"

#include <set>
#include <stdexcept>

namespace trop {

std::string ExtremalLabel::str() const {
    switch (kind) {
        case Kind::generator:
            return std::to_string(a + 1);
        case Kind::plane_vertex: {
            std::string s;
            for (int i = 0; i < 4; ++i)
                if (i != a) s += std::to_string(i + 1);
            return s;
        }
        case Kind::line_vertex:
        default:
            return std::to_string(a + 1) + std::to_string(b + 1);
    }
}

Hypothesis1Result check_hypothesis1(const KleeneMatrix& a) {
    Hypothesis1Result r;
    for (int l = 0; l < 4; ++l) {
        // Plane through the three columns other than l has coefficient vector
        // row l of A; evaluate at column l and count attainment.
        std::optional<Rational> best;
        int count = 0;
        for (int i = 0; i < 4; ++i) {
            Rational term = a.at(l, i) + a.at(i, l);
            if (!best || *best < term) {
                best = term;
                count = 1;
            } else if (*best == term) {
                ++count;
            }
        }
        if (count != 1) r.coplanar_witnesses.push_back(l);
    }
    r.ok = r.coplanar_witnesses.empty();
    return r;
}

std::string MinorRef::str() const {
    auto pair_str = [](int p) {
        return std::to_string(kPairs[p][0] + 1) + std::to_string(kPairs[p][1] + 1);
    };
    return "adiff(" + pair_str(row_pair) + ";" + pair_str(col_pair) + ")";
}

Hypothesis2Result check_hypothesis2(const KleeneMatrix& a) {
    Hypothesis2Result r;
    for (int rp = 0; rp < 6; ++rp)
        for (int cp = 0; cp < 6; ++cp) {
            if (rp == cp) continue; // minors on two indices are not part of this hypothesis
            if (a.adiff(rp, cp).is_zero()) r.singular.push_back({rp, cp});
        }
    r.ok = r.singular.empty();
    return r;
}

ExtremalSet extremal_set(const KleeneMatrix& a) {
    ExtremalSet out{.points = {},
                    .line_types = {LineType::tetrapod(), LineType::tetrapod(), LineType::tetrapod(),
                                   LineType::tetrapod(), LineType::tetrapod(), LineType::tetrapod()},
                    .hypothesis1 = false,
                    .hypothesis2 = false,
                    .maximal = false};
    out.hypothesis1 = check_hypothesis1(a).ok;
    out.hypothesis2 = check_hypothesis2(a).ok;
    bool hyp = out.hypothesis1 && out.hypothesis2;

    for (int i = 0; i < 4; ++i) out.points.emplace(ExtremalLabel::generator(i), a.generator(i));
    for (int l = 0; l < 4; ++l)
        out.points.emplace(ExtremalLabel::plane_vertex_omitting(l), a.plane_vertex_omitting(l));

    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        ProjectivePoint p = a.generator(i);
        ProjectivePoint q = a.generator(j);
        if (p == q) continue; // degenerate line contributes nothing
        MinorSextet m = minors(p, q);
        LineType type = line_type(m);
        out.line_types[static_cast<size_t>(t)] = type;
        LineVertices v = line_vertices(p, q, m, type);
        if (type.is_tetrapod()) {
            out.points.emplace(ExtremalLabel::line_vertex(i, j), v.first);
            out.points.emplace(ExtremalLabel::line_vertex(j, i), v.first);
            continue;
        }
        // The vertex of the half containing i is the one tropically nearest
        // generator i; when the two tropical distances tie, the exact
        // Euclidean distance still distinguishes them.
        auto halves = type.halves();
        bool first_has_i = halves[0][0] == i || halves[0][1] == i;
        const ProjectivePoint& near_i = first_has_i ? v.first : v.second;
        const ProjectivePoint& near_j = first_has_i ? v.second : v.first;
        if (hyp) {
            if (tdist(p, near_j) < tdist(p, near_i) || tdist(q, near_i) < tdist(q, near_j))
                throw std::logic_error("extremal_set: vertex naming contradicts the distances");
            if (tdist(p, near_i) == tdist(p, near_j) && euclid_sq(p, near_j) <= euclid_sq(p, near_i))
                throw std::logic_error("extremal_set: vertex naming tie not broken by Euclidean distance");
        }
        out.points.emplace(ExtremalLabel::line_vertex(i, j), near_i);
        out.points.emplace(ExtremalLabel::line_vertex(j, i), near_j);
    }

    if (hyp) {
        std::set<ProjectivePoint> uniq;
        for (const auto& [label, pt] : out.points) uniq.insert(pt);
        out.maximal = uniq.size() == 20;
        if (!out.maximal)
            throw std::logic_error("extremal_set: hypotheses hold but extremals are not pairwise distinct");
        // Regularity facts implied by the hypotheses; violations indicate a bug.
        if (trop_det(a.matrix()).attain_count != 1)
            throw std::logic_error("extremal_set: matrix must be tropically regular under the hypotheses");
        for (int rp = 0; rp < 6; ++rp)
            if (a.adiff(rp, rp).is_zero())
                throw std::logic_error("extremal_set: all 2x2 minors must be regular under the hypotheses");
    }
    return out;
}

std::vector<std::pair<ExtremalLabel, ProjectivePoint>> ExtremalSet::distinct() const {
    std::map<ProjectivePoint, ExtremalLabel> first_label;
    for (const auto& [label, pt] : points) {
        auto it = first_label.find(pt);
        if (it == first_label.end() || label < it->second) first_label.insert_or_assign(pt, label);
    }
    std::vector<std::pair<ExtremalLabel, ProjectivePoint>> out;
    out.reserve(first_label.size());
    for (const auto& [pt, label] : first_label) out.emplace_back(label, pt);
    return out;
}

EdgeLengths edge_lengths_on_line(const KleeneMatrix& a, int i, int j) {
    if (i > j) std::swap(i, j);
    LineType t = line_type_from_kleene(a, i, j);
    if (t.is_tetrapod()) throw std::invalid_argument("edge_lengths_on_line: tetrapod line has no edge");
    int k = t.partner(i);
    int l = t.partner(j);
    int ij = pair_index(i, j);
    return EdgeLengths{.generator_to_near = a.adiff(pair_index(j, l), ij),
                       .generator_to_near2 = a.adiff(pair_index(i, k), ij),
                       .between_vertices = a.adiff(pair_index(k, l), ij)};
}

} // namespace trop
