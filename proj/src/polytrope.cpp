#include "trop/polytrope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace trop {

std::array<int, 3> SupportingPlane::outward_normal() const {
    std::array<int, 3> n{0, 0, 0};
    int s = bound == Bound::upper ? 1 : -1;
    n[static_cast<size_t>(i)] = s;
    if (kind == Kind::difference) n[static_cast<size_t>(j)] = -s;
    return n;
}

std::string SupportingPlane::functional_str() const {
    if (kind == Kind::coordinate) return "X" + std::to_string(i + 1);
    return "X" + std::to_string(i + 1) + "-X" + std::to_string(j + 1);
}

std::string SupportingPlane::str() const {
    return functional_str() + " = " + level.str();
}

std::array<SupportingPlane, 12> facet_planes(const KleeneMatrix& a) {
    using K = SupportingPlane::Kind;
    using B = SupportingPlane::Bound;
    std::array<SupportingPlane, 12> p;
    for (int i = 0; i < 3; ++i) {
        p[static_cast<size_t>(2 * i)] = {K::coordinate, B::lower, i, 0, a.at(i, 3)};
        p[static_cast<size_t>(2 * i + 1)] = {K::coordinate, B::upper, i, 0, -a.at(3, i)};
    }
    constexpr int diff_pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (int d = 0; d < 3; ++d) {
        int i = diff_pairs[d][0], j = diff_pairs[d][1];
        p[static_cast<size_t>(6 + 2 * d)] = {K::difference, B::lower, i, j, a.at(i, j)};
        p[static_cast<size_t>(6 + 2 * d + 1)] = {K::difference, B::upper, i, j, -a.at(j, i)};
    }
    return p;
}

bool membership(const KleeneMatrix& a, const ProjectivePoint& x) {
    for (const auto& plane : facet_planes(a))
        if (!plane.satisfied(x)) return false;
    return true;
}

namespace {

struct Projected {
    Rational u, v;
};

Projected project_out(const SupportingPlane& plane, const ProjectivePoint& x) {
    // Drop the coordinate carrying the normal's leading component; the two
    // remaining chart coordinates keep their index order.
    int drop = plane.i;
    Projected out;
    bool first = true;
    for (int k = 0; k < 3; ++k) {
        if (k == drop) continue;
        (first ? out.u : out.v) = x[k];
        first = false;
    }
    return out;
}

// Strict angular order around the origin starting at the positive u axis.
bool angular_less(const Projected& a, const Projected& b) {
    auto half = [](const Projected& p) {
        return (p.v > Rational(0) || (p.v.is_zero() && p.u > Rational(0))) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = a.u * b.v - a.v * b.u;
    if (cross.is_zero()) throw std::logic_error("facet cycle: two vertices on one ray from the centroid");
    return cross > Rational(0);
}

std::array<Rational, 3> chart_diff(const ProjectivePoint& a, const ProjectivePoint& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

std::array<Rational, 3> cross3(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool alcoved_direction(const std::array<Rational, 3>& d) {
    // Every edge of the body runs along e_i, e_i+e_j or e_1+e_2+e_3, up to
    // sign and scale: all nonzero components must be one common value.
    std::optional<Rational> val;
    for (const auto& c : d) {
        if (c.is_zero()) continue;
        if (!val)
            val = c;
        else if (*val != c)
            return false;
    }
    return val.has_value();
}

} // namespace

Polytrope build_polytrope(const KleeneMatrix& a) { return build_polytrope(a, extremal_set(a)); }

Polytrope build_polytrope(const KleeneMatrix& a, const ExtremalSet& ext) {
    Polytrope p{.a = a,
                .extremals = ext,
                .vertices = ext.distinct(),
                .facets = {},
                .edges = {},
                .f_vector = {},
                .polygon_vector = {}};

    auto planes = facet_planes(a);
    for (int pi = 0; pi < 12; ++pi) {
        const SupportingPlane& plane = planes[static_cast<size_t>(pi)];
        std::vector<std::pair<ExtremalLabel, ProjectivePoint>> tight;
        for (const auto& entry : p.vertices)
            if (plane.tight(entry.second)) tight.push_back(entry);
        if (tight.size() < 3) continue;

        // Affine rank must be 2: skip planes touching only an edge or vertex.
        std::vector<Projected> proj;
        proj.reserve(tight.size());
        for (const auto& entry : tight) proj.push_back(project_out(plane, entry.second));
        bool planar = false;
        for (size_t k = 2; k < proj.size() && !planar; ++k) {
            Rational cr = (proj[1].u - proj[0].u) * (proj[k].v - proj[0].v) -
                          (proj[1].v - proj[0].v) * (proj[k].u - proj[0].u);
            planar = !cr.is_zero();
        }
        if (!planar) continue; // plane touches the body only in an edge or a point

        Rational cu(0), cv(0);
        for (const auto& q : proj) {
            cu += q.u;
            cv += q.v;
        }
        Rational n(static_cast<std::int64_t>(proj.size()));
        cu /= n;
        cv /= n;

        std::vector<size_t> order(tight.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
            return angular_less({proj[x].u - cu, proj[x].v - cv}, {proj[y].u - cu, proj[y].v - cv});
        });

        Facet f{.plane_index = pi, .plane = plane, .cycle = {}, .gon = static_cast<int>(tight.size())};
        for (size_t k : order) f.cycle.push_back(tight[k].first);

        // Convexity and consistent outward orientation, checked in 3D.
        auto normal = plane.outward_normal();
        int sign_seen = 0;
        size_t g = f.cycle.size();
        for (size_t k = 0; k < g; ++k) {
            const ProjectivePoint& prev = ext.at(f.cycle[(k + g - 1) % g]);
            const ProjectivePoint& cur = ext.at(f.cycle[k]);
            const ProjectivePoint& next = ext.at(f.cycle[(k + 1) % g]);
            auto nvec = cross3(chart_diff(cur, prev), chart_diff(next, cur));
            Rational s(0);
            for (int c = 0; c < 3; ++c) s += nvec[static_cast<size_t>(c)] * Rational(normal[static_cast<size_t>(c)]);
            int sgn = s.sign();
            if (sgn == 0) throw std::logic_error("facet cycle: collinear consecutive vertices");
            if (sign_seen == 0) sign_seen = sgn;
            if (sgn != sign_seen) throw std::logic_error("facet cycle: non-convex vertex order");
        }
        if (sign_seen < 0) std::reverse(f.cycle.begin(), f.cycle.end());

        if (f.gon < 3 || f.gon > 6) throw std::logic_error("facet with " + std::to_string(f.gon) + " vertices");
        p.facets.push_back(std::move(f));
    }

    std::map<std::pair<ExtremalLabel, ExtremalLabel>, int> edge_count;
    for (const auto& f : p.facets) {
        size_t g = f.cycle.size();
        for (size_t k = 0; k < g; ++k) {
            ExtremalLabel x = f.cycle[k], y = f.cycle[(k + 1) % g];
            if (y < x) std::swap(x, y);
            ++edge_count[{x, y}];
        }
    }
    for (const auto& [key, count] : edge_count) {
        if (ext.maximal && count != 2) throw std::logic_error("edge not shared by exactly two facets");
        const ProjectivePoint& x = ext.at(key.first);
        const ProjectivePoint& y = ext.at(key.second);
        if (!alcoved_direction(chart_diff(x, y)))
            throw std::logic_error("edge direction is not an alcoved direction");
        p.edges.push_back({key.first, key.second, tdist(x, y), euclid_sq(x, y)});
    }

    p.f_vector = {static_cast<int>(p.vertices.size()), static_cast<int>(p.edges.size()),
                  static_cast<int>(p.facets.size())};
    for (const auto& f : p.facets) ++p.polygon_vector[static_cast<size_t>(f.gon - 3)];

    if (ext.maximal) {
        if (p.f_vector != std::array<int, 3>{20, 30, 12})
            throw std::logic_error("maximal polytrope must have f-vector (20,30,12)");
        if (p.polygon_vector[0] != 0) throw std::logic_error("maximal polytrope has no triangular facet");
        if (p.polygon_vector[1] != p.polygon_vector[3])
            throw std::logic_error("maximal polytrope must have as many quadrangles as hexagons");
        if (p.f_vector[0] - p.f_vector[1] + p.f_vector[2] != 2)
            throw std::logic_error("Euler characteristic violated");
        for (const auto& entry : p.vertices)
            if (p.facets_at(entry.first).size() != 3)
                throw std::logic_error("maximal polytrope must be trivalent");
        for (const auto& f : p.facets) {
            int generators = 0, plane_vertices = 0;
            for (const auto& l : f.cycle) {
                generators += l.kind == ExtremalLabel::Kind::generator;
                plane_vertices += l.kind == ExtremalLabel::Kind::plane_vertex;
            }
            if (generators != 1 || plane_vertices != 1)
                throw std::logic_error("each facet carries exactly one generator and one 3-generated extremal");
        }
        for (const auto& entry : p.vertices) {
            if (!entry.first.odd()) continue;
            int hexes = 0;
            for (int fi : p.facets_at(entry.first)) hexes += p.facets[static_cast<size_t>(fi)].gon == 6;
            if (hexes > 1) throw std::logic_error("two hexagons meet at an oddly generated extremal");
        }
    }
    return p;
}

std::vector<int> Polytrope::facets_at(const ExtremalLabel& l) const {
    const ProjectivePoint& pt = extremals.at(l);
    ExtremalLabel canonical = l;
    for (const auto& entry : vertices)
        if (entry.second == pt) {
            canonical = entry.first;
            break;
        }
    std::vector<int> out;
    for (size_t fi = 0; fi < facets.size(); ++fi)
        for (const auto& c : facets[fi].cycle)
            if (c == canonical) {
                out.push_back(static_cast<int>(fi));
                break;
            }
    return out;
}

const Facet* Polytrope::facet_on(const SupportingPlane& plane) const {
    for (const auto& f : facets)
        if (f.plane == plane) return &f;
    return nullptr;
}

std::string Configuration::str() const {
    if (is_555) return std::string("(5.5.5) ") + (left ? "left" : "right");
    return "(" + std::to_string(sizes[0]) + "." + std::to_string(sizes[1]) + "." + std::to_string(sizes[2]) + ")";
}

namespace {

// Line-type reading of the configuration in coordinates where the point of
// interest is generator 4 (odd_generator true) or plane vertex 123. Returns
// the per-axis sizes, or (5.5.5) with handedness before any chart flip.
Configuration read_configuration(const KleeneMatrix& b, bool at_generator_side) {
    std::array<int, 3> partner_count{0, 0, 0};
    std::array<int, 3> partner_of_line{-1, -1, -1};
    if (at_generator_side) {
        for (int i = 0; i < 3; ++i) {
            LineType t = line_type_from_kleene(b, i, 3);
            if (t.is_tetrapod()) throw std::logic_error("configuration undefined: tetrapod line");
            partner_of_line[static_cast<size_t>(i)] = t.partner(3);
            ++partner_count[static_cast<size_t>(t.partner(3))];
        }
    } else {
        constexpr int cyc[3][2] = {{0, 1}, {1, 2}, {2, 0}};
        for (int c = 0; c < 3; ++c) {
            LineType t = line_type_from_kleene(b, cyc[c][0], cyc[c][1]);
            if (t.is_tetrapod()) throw std::logic_error("configuration undefined: tetrapod line");
            partner_of_line[static_cast<size_t>(c)] = t.partner(3);
            ++partner_count[static_cast<size_t>(t.partner(3))];
        }
    }

    Configuration conf;
    if (partner_count == std::array<int, 3>{1, 1, 1}) {
        conf.is_555 = true;
        conf.sizes = {5, 5, 5};
        bool right, left;
        if (at_generator_side) {
            right = left = true;
            for (int i = 0; i < 3; ++i) {
                right &= partner_of_line[static_cast<size_t>(i)] == (i + 2) % 3;
                left &= partner_of_line[static_cast<size_t>(i)] == (i + 1) % 3;
            }
        } else {
            constexpr int cyc[3][2] = {{0, 1}, {1, 2}, {2, 0}};
            right = left = true;
            for (int c = 0; c < 3; ++c) {
                right &= partner_of_line[static_cast<size_t>(c)] == cyc[c][0];
                left &= partner_of_line[static_cast<size_t>(c)] == cyc[c][1];
            }
        }
        if (right == left) throw std::logic_error("configuration handedness unresolved");
        conf.left = left;
    } else {
        for (int k = 0; k < 3; ++k) {
            switch (partner_count[static_cast<size_t>(k)]) {
                case 0: conf.sizes[static_cast<size_t>(k)] = 4; break;
                case 1: conf.sizes[static_cast<size_t>(k)] = 5; break;
                case 2: conf.sizes[static_cast<size_t>(k)] = 6; break;
                default: throw std::logic_error("impossible partner multiplicity");
            }
        }
    }
    return conf;
}

} // namespace

Configuration configuration_at(const Polytrope& p, const ExtremalLabel& label) {
    if (!p.extremals.maximal) throw std::invalid_argument("configuration_at: polytrope is not maximal");
    if (!label.odd()) throw std::invalid_argument("configuration_at: label must be oddly generated");

    int l = label.a; // generator index, or omitted index of the plane vertex
    bool at_generator_side = label.kind == ExtremalLabel::Kind::generator;
    std::array<int, 4> perm{0, 1, 2, 3};
    std::swap(perm[static_cast<size_t>(l)], perm[3]);
    KleeneMatrix b = l == 3 ? p.a : p.a.conjugate(perm);

    Configuration conf = read_configuration(b, at_generator_side);
    // A transposition of homogeneous coordinates reverses chart orientation,
    // which exchanges the left and right (5.5.5) forms.
    if (conf.is_555 && l != 3) conf.left = !conf.left;

    // The facet sizes of the built body must agree with the line-type reading.
    auto incident = p.facets_at(label);
    if (incident.size() != 3) throw std::logic_error("odd extremal must lie on exactly three facets");
    std::multiset<int> got, want;
    for (int fi : incident) got.insert(p.facets[static_cast<size_t>(fi)].gon);
    for (int s : conf.sizes) want.insert(s);
    if (got != want) throw std::logic_error("configuration mismatch between facet sizes and line types");

    if (l == 3) {
        // Identity chart: the ordered reading must match the coordinate-plane
        // facets axis by axis (lower planes at generator 4, upper at 123).
        auto planes = facet_planes(p.a);
        for (int axis = 0; axis < 3; ++axis) {
            int plane_index = 2 * axis + (at_generator_side ? 0 : 1);
            const Facet* f = p.facet_on(planes[static_cast<size_t>(plane_index)]);
            if (!f || f->gon != conf.sizes[static_cast<size_t>(axis)])
                throw std::logic_error("configuration mismatch on coordinate plane facet");
        }
    }
    return conf;
}

std::vector<double> angle_vector(const Polytrope& p, const Facet& f) {
    size_t g = f.cycle.size();
    if (g < 3) throw std::invalid_argument("angle_vector: facet needs at least three vertices");
    std::vector<std::array<double, 3>> pts;
    pts.reserve(g);
    for (const auto& l : f.cycle) {
        const ProjectivePoint& x = p.extremals.at(l);
        pts.push_back({x[0].to_double(), x[1].to_double(), x[2].to_double()});
    }
    std::vector<double> out;
    out.reserve(g);
    for (size_t k = 0; k < g; ++k) {
        const auto& prev = pts[(k + g - 1) % g];
        const auto& cur = pts[k];
        const auto& next = pts[(k + 1) % g];
        double u[3], w[3];
        for (int c = 0; c < 3; ++c) {
            u[c] = prev[static_cast<size_t>(c)] - cur[static_cast<size_t>(c)];
            w[c] = next[static_cast<size_t>(c)] - cur[static_cast<size_t>(c)];
        }
        double dot = 0, nu = 0, nw = 0;
        for (int c = 0; c < 3; ++c) {
            dot += u[c] * w[c];
            nu += u[c] * u[c];
            nw += w[c] * w[c];
        }
        double cosv = dot / std::sqrt(nu * nw);
        cosv = std::clamp(cosv, -1.0, 1.0);
        out.push_back(std::acos(cosv) * 180.0 / 3.14159265358979323846);
    }
    return out;
}

} // namespace trop
