#pragma once

#include <optional>
#include <vector>

#include "trop/matrix.hpp"

namespace trop {

// Index pairs {i,j}, i<j, in the fixed order used for minors and adiffs:
// 01, 02, 03, 12, 13, 23. All indices in this library are 0-based; printed
// labels are 1-based.
inline constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

/// Index of the unordered pair {i,j} in kPairs.
int pair_index(int i, int j);

/// The two indices of [4] outside {i,j}, ascending.
std::pair<int, int> complement_pair(int i, int j);

struct TropDet {
    Rational value;
    int attain_count = 0; // number of permutations achieving the max
    bool regular() const { return attain_count == 1; }
};

/// Tropical determinant (permanent): max over permutations of the diagonal
/// sum, with the number of maximizing permutations. Supported sizes 2..4;
/// anything else throws std::invalid_argument.
TropDet trop_det(const std::vector<Rational>& entries, int n);
TropDet trop_det(const Matrix4& m);

/// 2x2 helper: max{a+d, b+c} for [[a,b],[c,d]] with attainment count.
TropDet trop_det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

struct KleeneViolation {
    int i, j, k;            // a[i][k] + a[k][j] > a[i][j], or i==j==k for a nonzero diagonal entry
    std::string str() const;
};

struct KleeneCheck {
    bool ok = false;
    std::vector<KleeneViolation> violations;
};

/// Total check of the defining conditions: zero diagonal and
/// a[i][k] + a[k][j] <= a[i][j] for every triple with at least two distinct
/// indices. Lists every violated triple.
KleeneCheck is_kleene_star(const Matrix4& a);

/// A0: subtract the last row entry from each column, so row 4 becomes zero.
/// Every column stays projectively equal to the input column.
Matrix4 normalize_chart(const Matrix4& a);

/// Validated Kleene star with cached 2x2 tropical minors and adiffs.
///
/// minor(kl, ij) caches |A(kl;ij)|_trop = max{a[k][i]+a[l][j], a[k][j]+a[l][i]}
/// over row pair kl and column pair ij; adiff(kl, ij) is the absolute
/// difference of the two products, the quantity that carries the tropical
/// edge lengths.
class KleeneMatrix {
public:
    /// Throws std::invalid_argument (with the violation list) if a is not a
    /// Kleene star.
    static KleeneMatrix validate(const Matrix4& a);

    const Matrix4& matrix() const { return a_; }
    const Matrix4& chart() const { return chart_; }
    const Rational& at(int i, int j) const { return a_.at(i, j); }

    /// Column j of the chart matrix, as a point.
    ProjectivePoint generator(int j) const;

    /// Column l of -(A^t), normalized: the vertex of the tropical plane
    /// through the other three generators.
    ProjectivePoint plane_vertex_omitting(int l) const;

    const TropDet& minor(int row_pair, int col_pair) const {
        return minors_[static_cast<size_t>(row_pair)][static_cast<size_t>(col_pair)];
    }
    const Rational& adiff(int row_pair, int col_pair) const {
        return adiffs_[static_cast<size_t>(row_pair)][static_cast<size_t>(col_pair)];
    }
    /// adiff with the symmetry conventions: order inside each index pair is
    /// irrelevant.
    Rational adiff(int k, int l, int i, int j) const;

    KleeneMatrix transpose() const { return validate(a_.transpose()); }

    /// Simultaneous row and column permutation: entry (perm[i], perm[j]) of
    /// the result is entry (i, j) of this matrix. Permutes the generators.
    KleeneMatrix conjugate(const std::array<int, 4>& perm) const;

    bool operator==(const KleeneMatrix& o) const { return a_ == o.a_; }

private:
    KleeneMatrix() = default;

    Matrix4 a_;
    Matrix4 chart_;
    std::array<std::array<TropDet, 6>, 6> minors_{};
    std::array<std::array<Rational, 6>, 6> adiffs_{};
};

/// Max-plus product of 4x4 matrices.
Matrix4 maxplus_product(const Matrix4& a, const Matrix4& b);

/// Transitive closure of a zero-diagonal matrix with nonpositive
/// off-diagonal entries (two max-plus squarings; powers of such a matrix
/// stabilize at the third). Throws std::invalid_argument if the
/// precondition fails.
KleeneMatrix kleene_closure(const Matrix4& a);

} // namespace trop
