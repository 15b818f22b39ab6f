#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "rackgraph/exactla/echelon.hpp"

namespace rackgraph::exactla {

/// Subspace of F^n held in canonical reduced row echelon form, so two
/// spanning sets of the same subspace give identical objects.
template <class F>
class Subspace {
public:
    using T = typename F::value_type;
    using Vector = FieldVector<F>;

    Subspace(F field, std::size_t ambient_dim)
        : field_(std::move(field)), n_(ambient_dim), basis_(zeros(field_, 0, ambient_dim))
    {
    }

    static Subspace span(const F& field, std::size_t ambient_dim, const std::vector<Vector>& vectors)
    {
        auto m = zeros(field, vectors.size(), ambient_dim);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != ambient_dim) throw Error("spanning vector has wrong length");
            for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
        }
        return from_rows(field, m);
    }

    /// Row space of m.
    static Subspace from_rows(const F& field, const FieldMatrix<F>& m)
    {
        Subspace s(field, m.cols());
        auto red = rref(field, m);
        s.basis_ = std::move(red.rows);
        s.pivots_ = std::move(red.pivots);
        return s;
    }

    static Subspace full(const F& field, std::size_t n) { return from_rows(field, identity(field, n)); }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return pivots_.size(); }
    const FieldMatrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const F& field() const { return field_; }

    std::vector<Vector> basis_vectors() const
    {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    /// v minus its projection along the pivot coordinates; zero iff v is in
    /// the subspace.
    Vector reduce(Vector v) const
    {
        if (v.size() != n_) throw Error("vector has wrong ambient dimension");
        for (std::size_t i = 0; i < dim(); ++i) {
            const auto c = v[pivots_[i]];
            if (field_.is_zero(c)) continue;
            for (std::size_t j = pivots_[i]; j < n_; ++j)
                if (!field_.is_zero(basis_(i, j))) v[j] -= c * basis_(i, j);
        }
        return v;
    }

    bool contains(const Vector& v) const { return is_zero_vector(field_, reduce(v)); }

    bool contains(const Subspace& other) const
    {
        check_same_ambient(other);
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    Subspace operator+(const Subspace& other) const
    {
        check_same_ambient(other);
        auto m = zeros(field_, dim() + other.dim(), n_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = basis_(i, j);
        for (std::size_t i = 0; i < other.dim(); ++i)
            for (std::size_t j = 0; j < n_; ++j) m(dim() + i, j) = other.basis_(i, j);
        return from_rows(field_, m);
    }

    /// Zassenhaus: reduce [a | a ; b | 0]; rows with vanishing left half
    /// span the intersection in their right half.
    Subspace intersect(const Subspace& other) const
    {
        check_same_ambient(other);
        auto m = zeros(field_, dim() + other.dim(), 2 * n_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                m(i, j) = basis_(i, j);
                m(i, n_ + j) = basis_(i, j);
            }
        for (std::size_t i = 0; i < other.dim(); ++i)
            for (std::size_t j = 0; j < n_; ++j) m(dim() + i, j) = other.basis_(i, j);
        const auto red = rref(field_, m);
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < red.rank(); ++i) {
            if (red.pivots[i] < n_) continue;
            Vector v(n_, field_.zero());
            for (std::size_t j = 0; j < n_; ++j) v[j] = red.rows(i, n_ + j);
            rows.push_back(std::move(v));
        }
        return span(field_, n_, rows);
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    void check_same_ambient(const Subspace& other) const
    {
        if (other.n_ != n_)
            throw Error(rackgraph::detail::cat("ambient dimension mismatch: ", n_, " vs ", other.n_));
    }

    F field_;
    std::size_t n_;
    FieldMatrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

/// Column space of m together with its rank.
template <class F>
struct ImageAndRank {
    Subspace<F> image;
    std::size_t rank;
};

template <class F>
ImageAndRank<F> image_and_rank(const F& field, const FieldMatrix<F>& m)
{
    auto image = Subspace<F>::from_rows(field, m.transposed());
    const std::size_t r = image.dim();
    return {std::move(image), r};
}

/// Image of a subspace under a linear map given as a matrix acting on
/// column vectors.
template <class F>
Subspace<F> map_subspace(const F& field, const FieldMatrix<F>& m, const Subspace<F>& s)
{
    std::vector<FieldVector<F>> images;
    for (const auto& v : s.basis_vectors()) images.push_back(apply(field, m, v));
    return Subspace<F>::span(field, m.rows(), images);
}

/// A basis of F^n adapted to a decreasing chain L_0 ⊇ L_1 ⊇ … ⊇ L_s:
/// every L_k is spanned by the basis vectors of level ≥ k. Vectors of the
/// last subspace get level `infinite_level` (they lie in every level).
template <class F>
class AdaptedBasis {
public:
    static constexpr std::size_t infinite_level = std::numeric_limits<std::size_t>::max() / 4;

    AdaptedBasis(const F& field, const std::vector<Subspace<F>>& chain)
        : basis_(zeros(field, chain.empty() ? 0 : chain.front().ambient_dim(), 0)),
          inverse_(basis_)
    {
        if (chain.empty()) throw Error("adapted basis needs a nonempty chain");
        const std::size_t n = chain.front().ambient_dim();
        if (chain.front().dim() != n) throw Error("filtration must start at the whole space");
        std::vector<FieldVector<F>> vecs;
        Subspace<F> running(field, n);
        for (std::size_t k = chain.size(); k-- > 0;) {
            const std::size_t level = (k + 1 == chain.size()) ? infinite_level : k;
            for (const auto& v : chain[k].basis_vectors()) {
                if (running.contains(v)) continue;
                running = running + Subspace<F>::span(field, n, {v});
                vecs.push_back(v);
                levels_.push_back(level);
            }
        }
        if (vecs.size() != n) throw Error("filtration chain is not decreasing");
        basis_ = zeros(field, n, n);
        for (std::size_t k = 0; k < n; ++k) basis_.set_col(k, vecs[k]);
        inverse_ = exactla::inverse(field, basis_);
    }

    std::size_t size() const { return levels_.size(); }
    std::size_t level(std::size_t k) const { return levels_[k]; }
    const std::vector<std::size_t>& levels() const { return levels_; }
    FieldVector<F> vector(std::size_t k) const { return basis_.col(k); }
    const FieldMatrix<F>& basis() const { return basis_; }
    const FieldMatrix<F>& inverse() const { return inverse_; }

    /// Coordinates of v in the adapted basis.
    template <class G>
    FieldVector<F> coords(const G& field, const FieldVector<F>& v) const
    {
        return apply(field, inverse_, v);
    }

    /// Smallest level among basis vectors carrying a nonzero coordinate of
    /// v; infinite for v = 0. v lies in L_k iff this is ≥ k.
    template <class G>
    std::size_t filtration_degree(const G& field, const FieldVector<F>& v) const
    {
        const auto c = coords(field, v);
        std::size_t deg = infinite_level;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!field.is_zero(c[k]) && levels_[k] < deg) deg = levels_[k];
        return deg;
    }

    /// Indices of basis vectors with level < bound, in basis order.
    std::vector<std::size_t> below(std::size_t bound) const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < levels_.size(); ++k)
            if (levels_[k] < bound) out.push_back(k);
        return out;
    }

private:
    FieldMatrix<F> basis_;
    FieldMatrix<F> inverse_;
    std::vector<std::size_t> levels_;
};

/// Saturating addition of filtration levels.
inline std::size_t level_sum(std::size_t a, std::size_t b)
{
    constexpr auto inf = std::numeric_limits<std::size_t>::max() / 4;
    if (a >= inf || b >= inf) return inf;
    return a + b;
}

}  // namespace rackgraph::exactla
