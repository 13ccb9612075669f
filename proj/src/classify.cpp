#include "trop/classify.hpp"

#include <algorithm>
#include <set>

namespace trop {

std::array<int, 3> TypeVector::sorted_desc() const {
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

std::string TypeVector::str() const {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

TypeVector type_vector(const KleeneMatrix& a) {
    TypeVector tv;
    for (int p = 0; p < 6; ++p) {
        LineType t = line_type_from_kleene(a, kPairs[p][0], kPairs[p][1]);
        if (t.is_tetrapod())
            throw std::invalid_argument("type_vector: line " + std::to_string(kPairs[p][0] + 1) +
                                        std::to_string(kPairs[p][1] + 1) + " is a tetrapod (span not maximal)");
        ++tv.t[static_cast<size_t>(t.partner(3))];
    }
    return tv;
}

std::string HexStructure::str() const {
    std::string adj;
    switch (adjacency) {
        case HexAdjacency::none: adj = "none adjacent"; break;
        case HexAdjacency::one_pair: adj = "one adjacent pair"; break;
        case HexAdjacency::two_pairs: adj = "two adjacent pairs"; break;
        case HexAdjacency::cycle4: adj = "cycle of four"; break;
    }
    return std::to_string(hexagon_count) + " hexagons, " + adj;
}

namespace {

struct TypeGroups {
    // For each line type code 0..2, the column pairs (indices into kPairs)
    // of the lines having that type.
    std::array<std::vector<int>, 3> lines;
};

TypeGroups group_lines_by_type(const KleeneMatrix& a) {
    TypeGroups g;
    for (int p = 0; p < 6; ++p) {
        LineType t = line_type_from_kleene(a, kPairs[p][0], kPairs[p][1]);
        if (t.is_tetrapod()) throw std::invalid_argument("span is not maximal: tetrapod line present");
        g.lines[static_cast<size_t>(t.code())].push_back(p);
    }
    return g;
}

bool share_index(int pair_a, int pair_b) {
    int common = 0;
    for (int x : {kPairs[pair_a][0], kPairs[pair_a][1]})
        for (int y : {kPairs[pair_b][0], kPairs[pair_b][1]}) common += x == y;
    return common == 1;
}

} // namespace

HexStructure hex_structure(const KleeneMatrix& a, const Polytrope& p) {
    if (!p.extremals.maximal) throw std::invalid_argument("hex_structure: polytrope is not maximal");
    TypeGroups groups = group_lines_by_type(a);

    HexStructure hs;
    int adjacent_pairs = 0;
    bool cycle = false;
    std::vector<int> hexagon_plane_vertices; // omitted index of each predicted hexagon's plane vertex
    for (const auto& lines : groups.lines) {
        for (size_t x = 0; x < lines.size(); ++x)
            for (size_t y = x + 1; y < lines.size(); ++y)
                if (share_index(lines[x], lines[y])) {
                    ++hs.hexagon_count;
                    std::set<int> touched{kPairs[lines[x]][0], kPairs[lines[x]][1], kPairs[lines[y]][0],
                                          kPairs[lines[y]][1]};
                    for (int l = 0; l < 4; ++l)
                        if (!touched.count(l)) hexagon_plane_vertices.push_back(l);
                }
        if (lines.size() == 3) ++adjacent_pairs;
        if (lines.size() == 4) cycle = true;
    }
    if (cycle)
        hs.adjacency = HexAdjacency::cycle4;
    else if (adjacent_pairs == 2)
        hs.adjacency = HexAdjacency::two_pairs;
    else if (adjacent_pairs == 1)
        hs.adjacency = HexAdjacency::one_pair;
    else
        hs.adjacency = HexAdjacency::none;

    // Geometric cross-check against the built facets.
    std::vector<int> hex_facets;
    for (size_t fi = 0; fi < p.facets.size(); ++fi)
        if (p.facets[fi].gon == 6) hex_facets.push_back(static_cast<int>(fi));
    if (static_cast<int>(hex_facets.size()) != hs.hexagon_count)
        throw std::logic_error("hexagon count from line types disagrees with the built facets");

    for (int l : hexagon_plane_vertices) {
        bool found = false;
        for (int fi : p.facets_at(ExtremalLabel::plane_vertex_omitting(l)))
            found |= p.facets[static_cast<size_t>(fi)].gon == 6;
        if (!found) throw std::logic_error("predicted hexagon at a plane vertex not found among the facets");
    }

    int geometric_pairs = 0;
    std::map<int, int> neighbor_count;
    for (size_t x = 0; x < hex_facets.size(); ++x)
        for (size_t y = x + 1; y < hex_facets.size(); ++y) {
            const auto& ca = p.facets[static_cast<size_t>(hex_facets[x])].cycle;
            const auto& cb = p.facets[static_cast<size_t>(hex_facets[y])].cycle;
            int shared = 0;
            for (const auto& la : ca) shared += std::count(cb.begin(), cb.end(), la);
            if (shared >= 2) {
                ++geometric_pairs;
                ++neighbor_count[hex_facets[x]];
                ++neighbor_count[hex_facets[y]];
            }
        }
    int expected_pairs = 0;
    switch (hs.adjacency) {
        case HexAdjacency::none: expected_pairs = 0; break;
        case HexAdjacency::one_pair: expected_pairs = 1; break;
        case HexAdjacency::two_pairs: expected_pairs = 2; break;
        case HexAdjacency::cycle4: expected_pairs = 4; break;
    }
    if (geometric_pairs != expected_pairs)
        throw std::logic_error("hexagon adjacency from line types disagrees with the built facets");
    if (hs.adjacency == HexAdjacency::cycle4)
        for (const auto& [fi, n] : neighbor_count)
            if (n != 2) throw std::logic_error("hexagon cycle must be 2-regular");
    return hs;
}

ClassVerdict classify(const KleeneMatrix& a) { return classify(build_polytrope(a)); }

ClassVerdict classify(const Polytrope& p) {
    const KleeneMatrix& a = p.a;
    auto h1 = check_hypothesis1(a);
    if (!h1.ok) {
        std::string cols;
        for (int l : h1.coplanar_witnesses) cols += std::to_string(l + 1) + " ";
        throw HypothesisError("hypothesis 1", "generators tropically coplanar (witness columns: " + cols + ")");
    }
    auto h2 = check_hypothesis2(a);
    if (!h2.ok) {
        std::string ms;
        for (const auto& m : h2.singular) ms += m.str() + "=0 ";
        throw HypothesisError("hypothesis 2", "singular 2x2 minors: " + ms);
    }

    ClassVerdict v;
    v.type_vector = type_vector(a);
    v.polygon_vector = p.polygon_vector;
    v.hexes = hex_structure(a, p);

    auto groups = group_lines_by_type(a);
    auto sorted = v.type_vector.sorted_desc();
    if (sorted == std::array<int, 3>{2, 2, 2}) {
        v.class_id = 1;
    } else if (sorted == std::array<int, 3>{3, 2, 1}) {
        // The doubled type decides: lines sharing an index -> class 2,
        // disjoint index pairs -> class 3.
        int doubled = -1;
        for (int c = 0; c < 3; ++c)
            if (groups.lines[static_cast<size_t>(c)].size() == 2) doubled = c;
        const auto& two = groups.lines[static_cast<size_t>(doubled)];
        v.class_id = share_index(two[0], two[1]) ? 2 : 3;
    } else if (sorted == std::array<int, 3>{3, 3, 0}) {
        v.class_id = 4;
    } else if (sorted == std::array<int, 3>{4, 1, 1}) {
        v.class_id = 5;
    } else if (sorted == std::array<int, 3>{4, 2, 0}) {
        v.class_id = 6;
    } else {
        throw std::logic_error("type vector " + v.type_vector.str() + " outside the five admissible multisets");
    }

    static const std::map<int, std::array<int, 4>> class_polygons{
        {1, {0, 3, 6, 3}}, {2, {0, 3, 6, 3}}, {3, {0, 2, 8, 2}},
        {4, {0, 4, 4, 4}}, {5, {0, 4, 4, 4}}, {6, {0, 4, 4, 4}}};
    if (class_polygons.at(v.class_id) != v.polygon_vector)
        throw std::logic_error("polygon vector does not match the class");
    if (v.hexes.hexagon_count != v.polygon_vector[3])
        throw std::logic_error("hexagon structure does not match the polygon vector");

    for (int i = 0; i < 4; ++i)
        v.configurations[static_cast<size_t>(i)] = configuration_at(p, ExtremalLabel::generator(i));
    for (int l = 0; l < 4; ++l)
        v.configurations[static_cast<size_t>(4 + l)] =
            configuration_at(p, ExtremalLabel::plane_vertex_omitting(l));
    v.at_4 = v.configurations[3];
    v.at_123 = v.configurations[7];

    // Relations of the four opposite odd pairs (generator l against the
    // plane vertex omitting l). The handed pair of class 1 need not be
    // (4, 123); it sits at some opposite pair, so the checks are quantified
    // over all four.
    int both_555 = 0, mixed = 0, equal_pairs = 0, reversed_pairs = 0;
    for (int l = 0; l < 4; ++l) {
        const Configuration& cg = v.configurations[static_cast<size_t>(l)];
        const Configuration& cp = v.configurations[static_cast<size_t>(4 + l)];
        if (cg.is_555 && cp.is_555) {
            if (cg.left != cp.left)
                throw std::logic_error("opposite (5.5.5) extremals with opposite handedness");
            ++both_555;
        } else if (cg.is_555 || cp.is_555) {
            ++mixed;
        } else if (cg.sizes == cp.sizes) {
            ++equal_pairs;
        } else if (cg.sizes == std::array<int, 3>{cp.sizes[2], cp.sizes[1], cp.sizes[0]}) {
            ++reversed_pairs;
        }
    }
    switch (v.class_id) {
        case 1:
            if (both_555 != 1) throw std::logic_error("class 1 must have one (5.5.5) opposite pair");
            break;
        case 2:
        case 3:
            if (both_555 != 0 || mixed == 0 || equal_pairs != 0)
                throw std::logic_error("classes 2 and 3 pair one (5.5.5) extremal with (p.q.r) ones");
            break;
        case 4:
        case 5:
            if (both_555 != 0 || mixed != 0 || equal_pairs != 0 || reversed_pairs == 0)
                throw std::logic_error("classes 4 and 5 need a reversed (p.q.r)/(r.q.p) opposite pair");
            break;
        case 6:
            if (equal_pairs != 4)
                throw std::logic_error("class 6 requires equal configurations at every opposite pair");
            break;
        default: break;
    }

    v.centrally_symmetric = a.matrix() == a.matrix().transpose();
    v.chiral_partner_distinct = both_555 > 0; // exactly the handed class
    return v;
}

ChiralityReport symmetry_chirality(const KleeneMatrix& a) {
    ChiralityReport r;
    r.centrally_symmetric = a.matrix() == a.matrix().transpose();
    try {
        ClassVerdict va = classify(a);
        ClassVerdict vt = classify(a.transpose());
        r.class_id = va.class_id;
        r.transpose_class_id = vt.class_id;
        r.at_123 = va.at_123;
        r.at_4 = va.at_4;
        r.transpose_at_123 = vt.at_123;
        r.transpose_at_4 = vt.at_4;
    } catch (const HypothesisError&) {
        // not maximal: symmetry still reported, classes stay 0
    }
    return r;
}

} // namespace trop
