#pragma once

// Dense exact linear algebra over a generic field context F (see ff.hpp for
// the field interface): matrix arithmetic, canonical nullspaces, centralizer
// bases, constrained conjugacy systems, and Las Vegas sampling of invertible
// elements of a subspace.
//
// Conventions, pinned so tests can freeze basis representatives:
//  - matrices are row-major; vectorization of an n x m matrix sends entry
//    (i, j) to index i*m + j;
//  - elimination is classical Gaussian with the pivot chosen as the first
//    row with a nonzero entry in column order;
//  - every subspace basis is canonicalized to reduced row echelon form of
//    the stacked vectorizations, so equal subspaces have equal bases.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lclab/errors.hpp"
#include "lclab/ff.hpp"
#include "lclab/jsonio.hpp"
#include "lclab/rng.hpp"

namespace lclab::linalg {

using Integer = mpz_class;

template <class F>
struct Matrix {
    using Element = typename F::Element;

    const F* ctx = nullptr;
    std::size_t n_rows = 0, n_cols = 0;
    std::vector<Element> e; // row-major, n_rows * n_cols entries

    Matrix() = default;
    Matrix(const F& f, std::size_t r, std::size_t c)
        : ctx(&f), n_rows(r), n_cols(c), e(r * c, f.zero()) {}

    Element& at(std::size_t r, std::size_t c) { return e[r * n_cols + c]; }
    const Element& at(std::size_t r, std::size_t c) const { return e[r * n_cols + c]; }

    static Matrix identity(const F& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    bool is_square() const { return n_rows == n_cols; }
};

template <class F>
bool eq(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.n_rows != b.n_rows || a.n_cols != b.n_cols) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (!a.ctx->eq(a.e[i], b.e[i])) return false;
    return true;
}

template <class F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.n_rows != b.n_rows || a.n_cols != b.n_cols)
        throw ShapeMismatchError("matrix add: shapes differ");
    Matrix<F> r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.ctx->add(a.e[i], b.e[i]);
    return r;
}

template <class F>
Matrix<F> sub(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.n_rows != b.n_rows || a.n_cols != b.n_cols)
        throw ShapeMismatchError("matrix sub: shapes differ");
    Matrix<F> r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.ctx->sub(a.e[i], b.e[i]);
    return r;
}

template <class F>
Matrix<F> mul(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.n_cols != b.n_rows) throw ShapeMismatchError("matrix mul: inner dimensions differ");
    const F& f = *a.ctx;
    Matrix<F> r(f, a.n_rows, b.n_cols);
    auto acc = f.dot();
    for (std::size_t i = 0; i < a.n_rows; ++i)
        for (std::size_t j = 0; j < b.n_cols; ++j) {
            for (std::size_t k = 0; k < a.n_cols; ++k) acc.addmul(a.at(i, k), b.at(k, j));
            r.at(i, j) = acc.take();
        }
    return r;
}

template <class F>
Matrix<F> scalar_mul(const typename F::Element& s, const Matrix<F>& a) {
    Matrix<F> r = a;
    for (auto& v : r.e) v = a.ctx->mul(s, v);
    return r;
}

/// In-place reduced row echelon form; returns the pivot column indices.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    const F& f = *m.ctx;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.n_cols && row < m.n_rows; ++col) {
        std::size_t pr = row;
        while (pr < m.n_rows && f.is_zero(m.at(pr, col))) ++pr;
        if (pr == m.n_rows) continue;
        if (pr != row)
            for (std::size_t c = col; c < m.n_cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
        const auto inv = f.inv(m.at(row, col));
        for (std::size_t c = col; c < m.n_cols; ++c) m.at(row, c) = f.mul(inv, m.at(row, c));
        for (std::size_t r2 = 0; r2 < m.n_rows; ++r2) {
            if (r2 == row || f.is_zero(m.at(r2, col))) continue;
            const auto factor = m.at(r2, col);
            for (std::size_t c = col; c < m.n_cols; ++c)
                f.submul_inplace(m.at(r2, c), factor, m.at(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Determinant by Gaussian elimination with sign-tracked row swaps.
template <class F>
typename F::Element det(const Matrix<F>& a) {
    if (!a.is_square()) throw ShapeMismatchError("det: matrix must be square");
    const F& f = *a.ctx;
    Matrix<F> m = a;
    auto result = f.one();
    bool negate = false;
    for (std::size_t col = 0; col < m.n_cols; ++col) {
        std::size_t pr = col;
        while (pr < m.n_rows && f.is_zero(m.at(pr, col))) ++pr;
        if (pr == m.n_rows) return f.zero();
        if (pr != col) {
            negate = !negate;
            for (std::size_t c = col; c < m.n_cols; ++c) std::swap(m.at(col, c), m.at(pr, c));
        }
        result = f.mul(result, m.at(col, col));
        const auto inv = f.inv(m.at(col, col));
        for (std::size_t r2 = col + 1; r2 < m.n_rows; ++r2) {
            if (f.is_zero(m.at(r2, col))) continue;
            const auto factor = f.mul(inv, m.at(r2, col));
            for (std::size_t c = col; c < m.n_cols; ++c)
                f.submul_inplace(m.at(r2, c), factor, m.at(col, c));
        }
    }
    return negate ? f.neg(result) : result;
}

/// Inverse via Gauss-Jordan. Singular matrices report nullopt rather than a
/// matrix; shape errors throw.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (!a.is_square()) throw ShapeMismatchError("inverse: matrix must be square");
    const F& f = *a.ctx;
    const std::size_t n = a.n_rows;
    Matrix<F> m(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n + i) = f.one();
    }
    auto pivots = rref(m);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<F> r(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = m.at(i, n + j);
    return r;
}

template <class F>
bool is_invertible(const Matrix<F>& a) {
    return !a.ctx->is_zero(det(a));
}

/// Basis list spanning a linear subspace of r x c matrices. Bases produced by
/// this module are linearly independent and in canonical (RREF) form.
template <class F>
struct Subspace {
    const F* ctx = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<Matrix<F>> basis;

    std::size_t dim() const { return basis.size(); }
};

namespace detail {

template <class F>
Matrix<F> stack_vectorized(const F& f, const std::vector<Matrix<F>>& mats) {
    const std::size_t len = mats.empty() ? 0 : mats[0].e.size();
    Matrix<F> m(f, mats.size(), len);
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) m.at(i, j) = mats[i].e[j];
    return m;
}

template <class F>
Matrix<F> reshape(const F& f, const std::vector<typename F::Element>& v, std::size_t r, std::size_t c) {
    Matrix<F> m(f, r, c);
    m.e.assign(v.begin(), v.end());
    return m;
}

} // namespace detail

/// Canonicalize a spanning list into an RREF basis of the span.
template <class F>
Subspace<F> make_subspace(const F& f, std::size_t rows, std::size_t cols,
                          const std::vector<Matrix<F>>& spanning) {
    for (const auto& m : spanning)
        if (m.n_rows != rows || m.n_cols != cols)
            throw ShapeMismatchError("make_subspace: inconsistent shapes");
    Subspace<F> s;
    s.ctx = &f;
    s.rows = rows;
    s.cols = cols;
    if (spanning.empty()) return s;
    Matrix<F> stacked = detail::stack_vectorized(f, spanning);
    auto pivots = rref(stacked);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Matrix<F> b(f, rows, cols);
        for (std::size_t j = 0; j < rows * cols; ++j) b.e[j] = stacked.at(i, j);
        s.basis.push_back(std::move(b));
    }
    return s;
}

/// Membership test: reduce vec(m) against the canonical basis.
template <class F>
bool subspace_contains(const Subspace<F>& s, const Matrix<F>& m) {
    if (m.n_rows != s.rows || m.n_cols != s.cols) return false;
    const F& f = *m.ctx;
    std::vector<typename F::Element> v = m.e;
    for (const auto& b : s.basis) {
        // leading (pivot) position of b is its first nonzero entry, with value 1
        std::size_t lead = 0;
        while (lead < b.e.size() && f.is_zero(b.e[lead])) ++lead;
        if (lead == b.e.size()) continue;
        if (f.is_zero(v[lead])) continue;
        const auto factor = v[lead];
        for (std::size_t j = lead; j < v.size(); ++j) f.submul_inplace(v[j], factor, b.e[j]);
    }
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

/// Coordinates of m in the canonical basis, if m lies in the subspace.
template <class F>
std::optional<std::vector<typename F::Element>> subspace_coords(const Subspace<F>& s, const Matrix<F>& m) {
    const F& f = *s.ctx;
    std::vector<typename F::Element> v = m.e;
    std::vector<typename F::Element> coords;
    coords.reserve(s.basis.size());
    for (const auto& b : s.basis) {
        std::size_t lead = 0;
        while (lead < b.e.size() && f.is_zero(b.e[lead])) ++lead;
        const auto factor = v[lead];
        coords.push_back(factor);
        if (!f.is_zero(factor))
            for (std::size_t j = lead; j < v.size(); ++j) f.submul_inplace(v[j], factor, b.e[j]);
    }
    for (const auto& x : v)
        if (!f.is_zero(x)) return std::nullopt;
    return coords;
}

/// Basis of {x : Ax = 0} as column vectors (n_cols x 1 matrices), canonical.
template <class F>
Subspace<F> nullspace(const Matrix<F>& a) {
    const F& f = *a.ctx;
    Matrix<F> m = a;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(a.n_cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Matrix<F>> vecs;
    for (std::size_t free_col = 0; free_col < a.n_cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Matrix<F> v(f, a.n_cols, 1);
        v.at(free_col, 0) = f.one();
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v.at(pivots[pi], 0) = f.neg(m.at(pi, free_col));
        vecs.push_back(std::move(v));
    }
    return make_subspace(f, a.n_cols, 1, vecs);
}

// ---------------------------------------------------------------------------
// Centralizers

namespace detail {

/// Append the n^2 rows of the constraint s*x - x*s = 0 (unknown x vectorized
/// row-major) to the stacked system.
template <class F>
void append_commutation_rows(Matrix<F>& sys, std::size_t& next_row, const Matrix<F>& s) {
    const F& f = *s.ctx;
    const std::size_t n = s.n_rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t a = 0; a < n; ++a) {
                // coefficient of x[a, j]
                auto& c1 = sys.at(next_row, a * n + j);
                c1 = f.add(c1, s.at(i, a));
                // coefficient of x[i, b] with b = a
                auto& c2 = sys.at(next_row, i * n + a);
                c2 = f.sub(c2, s.at(a, j));
            }
            ++next_row;
        }
}

} // namespace detail

/// Basis of C(mats) = {x in M_n : m x = x m for all m}, computed as the
/// nullspace of the k n^2 x n^2 stacked commutation system.
template <class F>
Subspace<F> centralizer_basis(const F& f, const std::vector<Matrix<F>>& mats, std::size_t n) {
    for (const auto& m : mats)
        if (m.n_rows != n || m.n_cols != n)
            throw ShapeMismatchError("centralizer_basis: matrices must be n x n");
    Matrix<F> sys(f, mats.size() * n * n, n * n);
    std::size_t next_row = 0;
    for (const auto& m : mats) detail::append_commutation_rows(sys, next_row, m);
    Subspace<F> vecs = nullspace(sys);
    std::vector<Matrix<F>> basis;
    basis.reserve(vecs.dim());
    for (const auto& v : vecs.basis) basis.push_back(detail::reshape(f, v.e, n, n));
    Subspace<F> s;
    s.ctx = &f;
    s.rows = n;
    s.cols = n;
    s.basis = std::move(basis); // nullspace output is already canonical
    return s;
}

/// Basis of the double centralizer C(C(mats)).
template <class F>
Subspace<F> double_centralizer_basis(const F& f, const std::vector<Matrix<F>>& mats, std::size_t n) {
    Subspace<F> c = centralizer_basis(f, mats, n);
    return centralizer_basis(f, c.basis, n);
}

/// Basis of {x : g_i x = x h_i for all pairs}, optionally intersected with a
/// constraint subspace. With a constraint, the unknowns are the
/// constraint-basis coordinates (at most dim scalar variables).
template <class F>
Subspace<F> solve_conjugacy_system(const F& f,
                                   const std::vector<std::pair<Matrix<F>, Matrix<F>>>& pairs,
                                   std::size_t n,
                                   const Subspace<F>* constraint = nullptr) {
    for (const auto& [g, h] : pairs)
        if (g.n_rows != n || g.n_cols != n || h.n_rows != n || h.n_cols != n)
            throw ShapeMismatchError("solve_conjugacy_system: matrices must be n x n");
    if (constraint == nullptr) {
        Matrix<F> sys(f, pairs.size() * n * n, n * n);
        std::size_t row = 0;
        for (const auto& [g, h] : pairs) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t a = 0; a < n; ++a) {
                        auto& c1 = sys.at(row, a * n + j);
                        c1 = f.add(c1, g.at(i, a));
                        auto& c2 = sys.at(row, i * n + a);
                        c2 = f.sub(c2, h.at(a, j));
                    }
                    ++row;
                }
        }
        Subspace<F> vecs = nullspace(sys);
        std::vector<Matrix<F>> basis;
        for (const auto& v : vecs.basis) basis.push_back(detail::reshape(f, v.e, n, n));
        Subspace<F> s;
        s.ctx = &f;
        s.rows = n;
        s.cols = n;
        s.basis = std::move(basis);
        return s;
    }
    if (constraint->rows != n || constraint->cols != n)
        throw ShapeMismatchError("solve_conjugacy_system: constraint has the wrong ambient shape");
    const std::size_t dim = constraint->dim();
    Matrix<F> sys(f, pairs.size() * n * n, dim);
    for (std::size_t m = 0; m < dim; ++m) {
        const Matrix<F>& s_m = constraint->basis[m];
        std::size_t row = 0;
        for (const auto& [g, h] : pairs) {
            Matrix<F> lhs = sub(mul(g, s_m), mul(s_m, h));
            for (std::size_t idx = 0; idx < n * n; ++idx) sys.at(row + idx, m) = lhs.e[idx];
            row += n * n;
        }
    }
    Subspace<F> coords = nullspace(sys);
    std::vector<Matrix<F>> spanning;
    for (const auto& cvec : coords.basis) {
        Matrix<F> acc(f, n, n);
        for (std::size_t m = 0; m < dim; ++m) {
            if (f.is_zero(cvec.at(m, 0))) continue;
            for (std::size_t idx = 0; idx < n * n; ++idx)
                acc.e[idx] = f.add(acc.e[idx], f.mul(cvec.at(m, 0), constraint->basis[m].e[idx]));
        }
        spanning.push_back(std::move(acc));
    }
    return make_subspace(f, n, n, spanning);
}

/// Solution space of x * lhs_factor = rhs_factor * y over V1 x V2, kept as
/// coupled (x, y) pairs so both sides can be read off one coefficient draw.
template <class F>
struct PairSubspace {
    const F* ctx = nullptr;
    std::size_t n = 0;
    std::vector<std::pair<Matrix<F>, Matrix<F>>> basis;
    std::size_t dim() const { return basis.size(); }
};

template <class F>
PairSubspace<F> solve_coupled_system(const F& f, const Matrix<F>& lhs_factor,
                                     const Matrix<F>& rhs_factor, const Subspace<F>& v1,
                                     const Subspace<F>& v2, std::size_t n) {
    const std::size_t d1 = v1.dim(), d2 = v2.dim();
    Matrix<F> sys(f, n * n, d1 + d2);
    for (std::size_t m = 0; m < d1; ++m) {
        Matrix<F> col = mul(v1.basis[m], lhs_factor);
        for (std::size_t idx = 0; idx < n * n; ++idx) sys.at(idx, m) = col.e[idx];
    }
    for (std::size_t m = 0; m < d2; ++m) {
        Matrix<F> col = mul(rhs_factor, v2.basis[m]);
        for (std::size_t idx = 0; idx < n * n; ++idx) sys.at(idx, d1 + m) = f.neg(col.e[idx]);
    }
    Subspace<F> coords = nullspace(sys);
    PairSubspace<F> out;
    out.ctx = &f;
    out.n = n;
    for (const auto& cvec : coords.basis) {
        Matrix<F> x(f, n, n), y(f, n, n);
        for (std::size_t m = 0; m < d1; ++m)
            if (!f.is_zero(cvec.at(m, 0)))
                for (std::size_t idx = 0; idx < n * n; ++idx)
                    x.e[idx] = f.add(x.e[idx], f.mul(cvec.at(m, 0), v1.basis[m].e[idx]));
        for (std::size_t m = 0; m < d2; ++m)
            if (!f.is_zero(cvec.at(d1 + m, 0)))
                for (std::size_t idx = 0; idx < n * n; ++idx)
                    y.e[idx] = f.add(y.e[idx], f.mul(cvec.at(d1 + m, 0), v2.basis[m].e[idx]));
        out.basis.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Las Vegas sampling

/// max_tries: draw budget; sample_set_size: |S|, the size of the coefficient
/// sampling set (indexes the field elements; |S| = |F| uses the whole field).
struct SampleConfig {
    std::size_t max_tries = 64;
    Integer sample_set_size;
};

template <class F>
struct InvertibleDraw {
    Matrix<F> matrix;
    std::vector<typename F::Element> coeffs;
    std::size_t draws = 0;
};

namespace detail {

template <class F>
std::vector<typename F::Element> draw_coeffs(const F& f, std::size_t count,
                                             const Integer& set_size, Rng& rng) {
    std::vector<typename F::Element> coeffs;
    coeffs.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        coeffs.push_back(f.element_from_index(rng.below(set_size)));
    return coeffs;
}

template <class F>
Matrix<F> combine(const F& f, const std::vector<Matrix<F>>& basis,
                  const std::vector<typename F::Element>& coeffs, std::size_t r, std::size_t c) {
    Matrix<F> acc(f, r, c);
    for (std::size_t m = 0; m < basis.size(); ++m) {
        if (f.is_zero(coeffs[m])) continue;
        for (std::size_t idx = 0; idx < acc.e.size(); ++idx)
            acc.e[idx] = f.add(acc.e[idx], f.mul(coeffs[m], basis[m].e[idx]));
    }
    return acc;
}

} // namespace detail

/// Draw random S-linear combinations of the basis until one is invertible.
/// Throws NoInvertibleFoundError after cfg.max_tries draws: either the space
/// has no invertible element, or the caller hit extreme bad luck.
template <class F>
InvertibleDraw<F> random_invertible_in(const Subspace<F>& space, const SampleConfig& cfg, Rng& rng) {
    if (space.rows != space.cols)
        throw ShapeMismatchError("random_invertible_in: ambient matrices must be square");
    const F& f = *space.ctx;
    if (cfg.sample_set_size <= Integer(static_cast<unsigned long>(space.rows)))
        throw Error("random_invertible_in: sample set must be larger than n");
    for (std::size_t tries = 1; tries <= cfg.max_tries; ++tries) {
        auto coeffs = detail::draw_coeffs(f, space.dim(), cfg.sample_set_size, rng);
        Matrix<F> m = detail::combine(f, space.basis, coeffs, space.rows, space.cols);
        if (is_invertible(m)) return {std::move(m), std::move(coeffs), tries};
    }
    throw NoInvertibleFoundError("no invertible element found in " + std::to_string(cfg.max_tries) +
                                 " draws");
}

/// Same draw loop over a coupled pair space; invertibility is required of the
/// chosen side only (0 = x, 1 = y), matching how the attack proofs use it.
template <class F>
struct InvertiblePairDraw {
    Matrix<F> x, y;
    std::size_t draws = 0;
};

template <class F>
InvertiblePairDraw<F> random_pair_with_invertible(const PairSubspace<F>& space, int side,
                                                  const SampleConfig& cfg, Rng& rng) {
    const F& f = *space.ctx;
    if (cfg.sample_set_size <= Integer(static_cast<unsigned long>(space.n)))
        throw Error("random_pair_with_invertible: sample set must be larger than n");
    for (std::size_t tries = 1; tries <= cfg.max_tries; ++tries) {
        auto coeffs = detail::draw_coeffs(f, space.dim(), cfg.sample_set_size, rng);
        Matrix<F> x(f, space.n, space.n), y(f, space.n, space.n);
        for (std::size_t m = 0; m < space.dim(); ++m) {
            if (f.is_zero(coeffs[m])) continue;
            for (std::size_t idx = 0; idx < x.e.size(); ++idx) {
                x.e[idx] = f.add(x.e[idx], f.mul(coeffs[m], space.basis[m].first.e[idx]));
                y.e[idx] = f.add(y.e[idx], f.mul(coeffs[m], space.basis[m].second.e[idx]));
            }
        }
        if (is_invertible(side == 0 ? x : y)) return {std::move(x), std::move(y), tries};
    }
    throw NoInvertibleFoundError("no invertible pair component found in " +
                                 std::to_string(cfg.max_tries) + " draws");
}

// ---------------------------------------------------------------------------
// JSON

template <class F>
json matrix_to_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n_cols; ++j) row.push_back(m.ctx->elem_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.n_rows}, {"cols", m.n_cols}, {"entries", std::move(rows)}};
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j) {
    const std::size_t r = require_key(j, "rows").get<std::size_t>();
    const std::size_t c = require_key(j, "cols").get<std::size_t>();
    const json& entries = require_key(j, "entries");
    if (!entries.is_array() || entries.size() != r) throw ParseError("matrix entries: wrong row count");
    Matrix<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!entries[i].is_array() || entries[i].size() != c)
            throw ParseError("matrix entries: wrong column count");
        for (std::size_t jj = 0; jj < c; ++jj) m.at(i, jj) = f.elem_from_json(entries[i][jj]);
    }
    return m;
}

template <class F>
json subspace_to_json(const Subspace<F>& s) {
    json basis = json::array();
    for (const auto& b : s.basis) basis.push_back(matrix_to_json(b));
    return json{{"shape", json::array({s.rows, s.cols})}, {"basis", std::move(basis)}};
}

template <class F>
Subspace<F> subspace_from_json(const F& f, const json& j) {
    const json& shape = require_key(j, "shape");
    Subspace<F> s;
    s.ctx = &f;
    s.rows = shape.at(0).get<std::size_t>();
    s.cols = shape.at(1).get<std::size_t>();
    for (const auto& b : require_key(j, "basis")) s.basis.push_back(matrix_from_json(f, b));
    return s;
}

} // namespace lclab::linalg
