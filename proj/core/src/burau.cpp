#include "braidfloor/burau.hpp"

#include <numeric>
#include <utility>

#include "braidfloor/errors.hpp"

namespace braidfloor {

PolyMatrix::PolyMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {
    if (dim_ < 1) throw invalid_braid("matrix dimension must be at least 1");
}

PolyMatrix PolyMatrix::identity(std::size_t dim) {
    PolyMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw invalid_braid("matrix dimensions differ");
    PolyMatrix out(lhs.dim());
    for (std::size_t r = 0; r < lhs.dim(); ++r)
        for (std::size_t k = 0; k < lhs.dim(); ++k) {
            const LaurentPoly& a = lhs.at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < lhs.dim(); ++c) {
                const LaurentPoly& b = rhs.at(k, c);
                if (!b.is_zero()) out.at(r, c) += a * b;
            }
        }
    return out;
}

PolyMatrix reduced_burau(Letter letter, int n) {
    if (n < 2) throw invalid_braid("Burau matrices need at least 2 strands");
    if (letter.index < 1 || letter.index >= n)
        throw invalid_braid("generator index out of range for strand count");
    const std::size_t dim = static_cast<std::size_t>(n) - 1;
    const std::size_t i = static_cast<std::size_t>(letter.index);  // 1-based
    PolyMatrix m = PolyMatrix::identity(dim);
    if (letter.sign > 0) {
        if (i >= 2) m.at(i - 2, i - 1) = LaurentPoly::monomial(1, 1);
        m.at(i - 1, i - 1) = LaurentPoly::monomial(-1, 1);
        if (i <= dim - 1) m.at(i, i - 1) = LaurentPoly(1);
    } else {
        if (i >= 2) m.at(i - 2, i - 1) = LaurentPoly(1);
        m.at(i - 1, i - 1) = LaurentPoly::monomial(-1, -1);
        if (i <= dim - 1) m.at(i, i - 1) = LaurentPoly::monomial(1, -1);
    }
    return m;
}

PolyMatrix burau_matrix(const BraidWord& w) {
    PolyMatrix m = PolyMatrix::identity(static_cast<std::size_t>(w.strands()) - 1);
    for (const Letter& l : w.letters()) m = m * reduced_burau(l, w.strands());
    return m;
}

namespace {

LaurentPoly det_cofactor(const PolyMatrix& m) {
    const std::size_t d = m.dim();
    if (d == 1) return m.at(0, 0);
    LaurentPoly sum;
    for (std::size_t j = 0; j < d; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(d - 1);
        for (std::size_t r = 1; r < d; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const LaurentPoly term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

// Fraction-free Gaussian elimination. Every intermediate entry is a minor
// of the input, so the divisions are exact in the Laurent ring.
LaurentPoly det_bareiss(PolyMatrix m) {
    const std::size_t d = m.dim();
    LaurentPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        std::size_t pivot = k;
        while (pivot < d && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == d) return {};
        if (pivot != k) {
            for (std::size_t c = k; c < d; ++c) std::swap(m.at(pivot, c), m.at(k, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            for (std::size_t j = k + 1; j < d; ++j)
                m.at(i, j) = exact_divide(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = LaurentPoly();
        }
        prev = m.at(k, k);
    }
    const LaurentPoly& corner = m.at(d - 1, d - 1);
    return sign > 0 ? corner : -corner;
}

}  // namespace

LaurentPoly poly_det(const PolyMatrix& m) {
    return m.dim() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

LaurentPoly alexander_polynomial(const BraidWord& w) {
    const int n = w.strands();
    if (closure_components(w) != 1)
        throw not_a_knot("Alexander polynomial requires a one-component closure");

    PolyMatrix m = burau_matrix(w);
    for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) -= LaurentPoly(1);

    const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::variable();
    const LaurentPoly one_minus_tn = LaurentPoly(1) - LaurentPoly::monomial(1, n);
    LaurentPoly p = exact_divide(poly_det(m) * one_minus_t, one_minus_tn);
    if (p.is_zero()) throw internal_error("Alexander polynomial of a knot cannot vanish");

    p = p.shifted(-p.min_exp());
    if (p.coefficients().rbegin()->second < 0) p = -p;
    return p;
}

long alexander_genus_lower(const BraidWord& w) {
    const long span = alexander_polynomial(w).span();
    if (span % 2 != 0) throw internal_error("normalized knot polynomial has odd span");
    return span / 2;
}

long bennequin_genus_upper(const BraidWord& w) {
    if (closure_components(w) != 1)
        throw not_a_knot("Bennequin genus bound requires a one-component closure");
    const long l = static_cast<long>(free_reduce(w).length());
    const long doubled = l - w.strands() + 1;
    if (doubled % 2 != 0) throw internal_error("l - n + 1 must be even for a knot closure");
    return doubled / 2;
}

long bennequin_chi(const BraidWord& w) {
    return w.strands() - static_cast<long>(free_reduce(w).length());
}

long chi_lower_bound(const BraidWord& w) {
    const BraidWord reduced = free_reduce(w);
    const int n = reduced.strands();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Letter& l : reduced.letters()) {
        const int a = find(l.index - 1);
        const int b = find(l.index);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    int components = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++components;
    return bennequin_chi(w) - 2 * (components - 1);
}

}  // namespace braidfloor
