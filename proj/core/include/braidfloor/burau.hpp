#pragma once

#include <cstddef>
#include <vector>

#include "braidfloor/braid.hpp"
#include "braidfloor/laurent.hpp"

namespace braidfloor {

/// Square matrix of Laurent polynomials, dimension >= 1.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t dim);
    static PolyMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    LaurentPoly& at(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }
    const LaurentPoly& at(std::size_t row, std::size_t col) const { return cells_[row * dim_ + col]; }

    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<LaurentPoly> cells_;
};

/// Reduced Burau matrix of one letter, dimension (n-1). Rows are images of
/// the basis vectors: for sigma_i,
///   e_{i-1} -> e_{i-1} + t e_i   (i > 1)
///   e_i     -> -t e_i
///   e_{i+1} -> e_i + e_{i+1}     (i < n-1)
/// and every other basis vector is fixed; sign -1 yields the exact inverse
/// matrix (which involves t^-1). For n = 2 the matrix is the 1x1 [-t].
PolyMatrix reduced_burau(Letter letter, int n);

/// Ordered product of letter matrices; identity for the empty word.
PolyMatrix burau_matrix(const BraidWord& w);

/// Exact determinant: cofactor expansion for dim <= 4, fraction-free
/// Bareiss elimination with exact division above.
LaurentPoly poly_det(const PolyMatrix& m);

/// Alexander polynomial of the knot closure of w, computed as
/// det(burau_matrix(w) - I) * (1 - t) / (1 - t^n) and normalized by units
/// +-t^k so the lowest exponent is 0 and the leading coefficient positive.
/// Throws not_a_knot unless the closure has one component; an inexact
/// division throws internal_error (divisibility is a theorem).
LaurentPoly alexander_polynomial(const BraidWord& w);

/// Classical genus lower bound span(alexander) / 2; the span of a knot
/// polynomial is even after normalization, odd span throws internal_error.
long alexander_genus_lower(const BraidWord& w);

/// Genus of the Bennequin surface of the free-reduced word: (l - n + 1) / 2
/// where l is the reduced length. An upper bound for the Seifert genus of
/// the knot closure; parity violations throw internal_error.
long bennequin_genus_upper(const BraidWord& w);

/// Euler characteristic n - l of the Bennequin surface (n disks joined by
/// one band per letter of the free-reduced word). Links allowed.
long bennequin_chi(const BraidWord& w);

/// Certified lower bound for the maximal Euler characteristic of a
/// connected orientable spanning surface of the closure:
/// n - l - 2(c - 1), where c counts connected components of the
/// disk-and-band graph. Equals bennequin_chi whenever that surface is
/// connected (always for knot closures); tubing the c components together
/// costs 2 per tube otherwise.
long chi_lower_bound(const BraidWord& w);

}  // namespace braidfloor
