#pragma once

#include "intmatrix.hpp"

#include <cstddef>
#include <vector>

namespace torusemb {

// Smith normal form with accumulated transforms: u * a * v = d, where u and v
// are unimodular and d is diagonal with d1 | d2 | ... and trailing zeros.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix v;
    IntMatrix d;
    std::vector<Int> invariant_factors;  // the nonzero diagonal entries
};

SmithDecomposition snf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Basis of the saturated integer kernel lattice {v : a*v = 0}, returned in
// canonical column-Hermite form (pivot rows increasing, positive pivots,
// entries left of a pivot reduced into [0, pivot)).
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

Int gcd_vector(const std::vector<Int>& v);
bool is_primitive(const std::vector<Int>& v);

// Canonical column-style Hermite form of a full-column-rank matrix; column
// operations only, so the column lattice is preserved.
IntMatrix hermite_columns(IntMatrix b);

// |det| of a square matrix, computed as the product of invariant factors.
// The 0x0 matrix has determinant 1.
Int abs_det(const IntMatrix& a);

// Integral skew-symmetric bilinear form.
class SkewForm {
public:
    explicit SkewForm(IntMatrix gram);

    static SkewForm standard_symplectic(std::size_t genus);       // 2g x 2g, pairs (a_i, b_i) interleaved
    static SkewForm symplectic_with_radical(std::size_t genus);   // (2g+1) square, last generator central

    std::size_t dimension() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }

    Int pair(const std::vector<Int>& x, const std::vector<Int>& y) const;

private:
    IntMatrix gram_;
};

bool is_skew_symmetric(const IntMatrix& g);

// Gram matrix of the given vectors under the form; always skew-symmetric.
IntMatrix skew_gram(const SkewForm& form, const std::vector<std::vector<Int>>& vectors);

// Congruence normal form of a skew matrix g: transform^T * g * transform is
// block diagonal with 2x2 blocks [[0, d_i], [-d_i, 0]], d_1 | d_2 | ...,
// followed by zeros.
struct SkewNormalForm {
    IntMatrix transform;      // unimodular
    std::vector<Int> blocks;  // the d_i
    std::size_t dimension = 0;

    // The form is unimodular iff every block is 1 and there is no radical.
    bool unimodular() const;
};

SkewNormalForm skew_normal_form(const IntMatrix& g);

// Extends a primitive vector to a basis (v, u, rest...) whose Gram matrix
// under the unimodular form j is the standard symplectic matrix; in
// particular pair(v, u) = 1.
std::vector<std::vector<Int>> complete_to_symplectic(const std::vector<Int>& v, const SkewForm& j);

// Same, starting from a pair with pair(v, u) = 1; the pair is kept in front.
std::vector<std::vector<Int>> complete_pair_to_symplectic(const std::vector<Int>& v,
                                                          const std::vector<Int>& u,
                                                          const SkewForm& j);

}  // namespace torusemb
