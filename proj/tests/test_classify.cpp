#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "trop/classify.hpp"
#include "trop/families.hpp"

using namespace trop;

namespace {

KleeneMatrix reg(const char* name) { return KleeneMatrix::validate(families::registry(name)); }

KleeneMatrix gd112() {
    return KleeneMatrix::validate(families::gamma_delta(Rational(1), Rational(1), Rational(2)));
}

std::vector<std::array<int, 4>> all_permutations() {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST_CASE("type vectors of the worked examples") {
    CHECK(type_vector(KleeneMatrix::validate(families::circulant(Rational(3), Rational(4), Rational(6)))).t ==
          std::array<int, 3>{1, 4, 1});
    CHECK(type_vector(KleeneMatrix::validate(families::circulant(Rational(3), Rational(5), Rational(6)))).t ==
          std::array<int, 3>{3, 0, 3});
    CHECK(type_vector(gd112()).t == std::array<int, 3>{2, 2, 2});
    CHECK(type_vector(reg("b15")).sorted_desc() == std::array<int, 3>{3, 2, 1});

    // Tetrapod line present: no type vector.
    Matrix4 flat;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) flat.at(i, j) = i == j ? Rational(0) : Rational(-1);
    CHECK_THROWS_AS(type_vector(KleeneMatrix::validate(flat)), std::invalid_argument);
}

TEST_CASE("hexagon structure") {
    auto hex = [](const KleeneMatrix& a) { return hex_structure(a, build_polytrope(a)); };

    HexStructure b15 = hex(reg("b15"));
    CHECK(b15.hexagon_count == 2);
    CHECK(b15.adjacency == HexAdjacency::one_pair);

    HexStructure gd = hex(gd112());
    CHECK(gd.hexagon_count == 3);
    CHECK(gd.adjacency == HexAdjacency::none);

    HexStructure aa = hex(reg("aa191"));
    CHECK(aa.hexagon_count == 3);
    CHECK(aa.adjacency == HexAdjacency::one_pair);

    HexStructure c5 = hex(KleeneMatrix::validate(families::circulant(Rational(3), Rational(4), Rational(6))));
    CHECK(c5.hexagon_count == 4);
    CHECK(c5.adjacency == HexAdjacency::cycle4);

    HexStructure c4 = hex(KleeneMatrix::validate(families::circulant(Rational(3), Rational(5), Rational(6))));
    CHECK(c4.hexagon_count == 4);
    CHECK(c4.adjacency == HexAdjacency::two_pairs);
}

TEST_CASE("the six classes on the worked examples") {
    CHECK(classify(gd112()).class_id == 1);
    CHECK(classify(reg("aa191")).class_id == 2);
    CHECK(classify(reg("b15")).class_id == 3);
    CHECK(classify(reg("b15-prime")).class_id == 3);
    CHECK(classify(KleeneMatrix::validate(families::circulant(Rational(3), Rational(5), Rational(6)))).class_id == 4);
    CHECK(classify(KleeneMatrix::validate(families::circulant(Rational(3), Rational(4), Rational(6)))).class_id == 5);
    CHECK(classify(KleeneMatrix::validate(families::anticirculant(Rational(3), Rational(4), Rational(6)))).class_id == 6);

    ClassVerdict aa = classify(reg("aa191"));
    CHECK(aa.polygon_vector == std::array<int, 4>{0, 3, 6, 3});
    CHECK(aa.at_123.is_555);
    CHECK(aa.at_123.left);
    CHECK(aa.at_4.sizes == std::array<int, 3>{6, 5, 4});

    ClassVerdict b15 = classify(reg("b15"));
    CHECK(b15.polygon_vector == std::array<int, 4>{0, 2, 8, 2});

    ClassVerdict anti = classify(KleeneMatrix::validate(families::anticirculant(Rational(3), Rational(4), Rational(6))));
    CHECK(anti.centrally_symmetric);
    CHECK(anti.at_123.sizes == anti.at_4.sizes);

    CHECK_THROWS_AS(classify(reg("drum")), HypothesisError);
}

TEST_CASE("class to polygon-vector map") {
    static const std::array<int, 4> expected[7] = {{},
                                                   {0, 3, 6, 3}, {0, 3, 6, 3}, {0, 2, 8, 2},
                                                   {0, 4, 4, 4}, {0, 4, 4, 4}, {0, 4, 4, 4}};
    auto check = [&](const KleeneMatrix& a) {
        ClassVerdict v = classify(a);
        CHECK(v.polygon_vector == expected[static_cast<size_t>(v.class_id)]);
        CHECK(v.hexes.hexagon_count == v.polygon_vector[3]);
    };
    check(gd112());
    check(reg("aa191"));
    check(reg("b15"));
    check(reg("b15-prime"));
    check(KleeneMatrix::validate(families::circulant(Rational(3), Rational(4), Rational(6))));
    check(KleeneMatrix::validate(families::circulant(Rational(3), Rational(5), Rational(6))));
    check(KleeneMatrix::validate(families::anticirculant(Rational(3), Rational(4), Rational(6))));
}

TEST_CASE("class is invariant under permutation conjugation") {
    auto perms = all_permutations();
    for (const char* name : {"b15", "b15-prime", "aa191"}) {
        int base = classify(reg(name)).class_id;
        for (const auto& p : perms) CHECK(classify(reg(name).conjugate(p)).class_id == base);
    }
    // Hypothesis failures are conjugation-invariant too.
    for (const auto& p : perms) CHECK_THROWS_AS(classify(reg("drum").conjugate(p)), HypothesisError);
}

TEST_CASE("class is invariant under transposition") {
    for (const char* name : {"b15", "b15-prime", "aa191"})
        CHECK(classify(reg(name)).class_id == classify(reg(name).transpose()).class_id);
    CHECK(classify(gd112()).class_id == classify(gd112().transpose()).class_id);
    testing::Rng rng(401);
    for (int trial = 0; trial < 300; ++trial) {
        KleeneMatrix a = rng.kleene(25);
        if (!check_hypothesis1(a).ok || !check_hypothesis2(a).ok) continue;
        CHECK(classify(a).class_id == classify(a.transpose()).class_id);
    }
}

TEST_CASE("symmetry and chirality") {
    ChiralityReport anti =
        symmetry_chirality(KleeneMatrix::validate(families::anticirculant(Rational(3), Rational(4), Rational(6))));
    CHECK(anti.centrally_symmetric);
    CHECK(anti.class_id == 6);
    CHECK(anti.transpose_class_id == 6);

    ChiralityReport gd = symmetry_chirality(gd112());
    CHECK_FALSE(gd.centrally_symmetric);
    CHECK(gd.class_id == 1);
    CHECK(gd.at_123.is_555);
    CHECK_FALSE(gd.at_123.left);
    CHECK(gd.transpose_at_123.is_555);
    CHECK(gd.transpose_at_123.left); // handedness flips under transposition
    CHECK(gd.transpose_at_4.left);

    ChiralityReport drum = symmetry_chirality(reg("drum"));
    CHECK(drum.centrally_symmetric);
    CHECK(drum.class_id == 0); // not classifiable
}

TEST_CASE("class five versus six at an opposite pair") {
    ClassVerdict c5 = classify(KleeneMatrix::validate(families::circulant(Rational(3), Rational(4), Rational(6))));
    std::array<int, 3> reversed{c5.at_4.sizes[2], c5.at_4.sizes[1], c5.at_4.sizes[0]};
    CHECK(c5.at_123.sizes == reversed);
    CHECK(c5.at_123.sizes != c5.at_4.sizes);

    ClassVerdict c6 = classify(KleeneMatrix::validate(families::anticirculant(Rational(3), Rational(4), Rational(6))));
    CHECK(c6.at_123.sizes == c6.at_4.sizes);
}

TEST_CASE("b15 is not vertex transitive") {
    // Line vertex 24 sees facet sizes {6,6,4}, which no oddly generated
    // extremal can see (no two hexagons meet at an odd extremal).
    Polytrope p = build_polytrope(reg("b15"));
    std::multiset<int> sizes;
    for (int fi : p.facets_at(ExtremalLabel::line_vertex(1, 3)))
        sizes.insert(p.facets[static_cast<size_t>(fi)].gon);
    CHECK(sizes == std::multiset<int>{4, 6, 6});
    for (const auto& [label, point] : p.vertices) {
        if (!label.odd()) continue;
        int hexes = 0;
        for (int fi : p.facets_at(label)) hexes += p.facets[static_cast<size_t>(fi)].gon == 6;
        CHECK(hexes <= 1);
    }
}

TEST_CASE("census samples classify consistently") {
    testing::Rng rng(409);
    std::array<int, 6> seen{};
    for (int trial = 0; trial < 2500; ++trial) {
        KleeneMatrix a = rng.kleene(40);
        if (!check_hypothesis1(a).ok || !check_hypothesis2(a).ok) continue;
        ClassVerdict v = classify(a); // all internal consistency checks run here
        ++seen[static_cast<size_t>(v.class_id - 1)];
        auto sd = v.type_vector.sorted_desc();
        bool admissible = sd == std::array<int, 3>{2, 2, 2} || sd == std::array<int, 3>{3, 2, 1} ||
                          sd == std::array<int, 3>{3, 3, 0} || sd == std::array<int, 3>{4, 1, 1} ||
                          sd == std::array<int, 3>{4, 2, 0};
        CHECK(admissible);
    }
    int total = 0;
    for (int s : seen) total += s;
    CHECK(total > 20);
}
