#pragma once

// Truncations of the free differential graded Lie algebra E𝔤 on 𝔤₀ ⊕ 𝔤₁
// (𝔤₀ in degree 0, 𝔤₁ = M in degree 1), modulo ⟦x,y⟧ = [x,y] for x, y ∈ 𝔤₀
// and ⟦m,a⟧ = m^a for m ∈ M, a ∈ 𝔤₀.
//
// Computed by linear algebra over the free magma: words are binary bracket
// trees in prefix encoding (−1 for a bracket node, letter ids at leaves;
// ids < dim 𝔤₀ are 𝔤₀ letters). All words up to a length bound are listed,
// every relation instance is inserted at every node of every word, and the
// quotient is read off per degree. Pure-M and shorter words sort first, so
// they are kept as normal-form representatives.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rackgraph/exactla/echelon.hpp"
#include "rackgraph/lmlie/algebra.hpp"

namespace rackgraph::lmlie {

enum class SignConvention { graded_koszul, plain };

inline std::string convention_name(SignConvention c)
{
    return c == SignConvention::graded_koszul ? "graded_koszul" : "plain";
}

inline SignConvention parse_convention(const std::string& s)
{
    if (s == "graded_koszul" || s == "koszul") return SignConvention::graded_koszul;
    if (s == "plain") return SignConvention::plain;
    throw Error("unknown sign convention '" + s + "'");
}

using Word = std::vector<int>;
using Combination = std::vector<std::pair<Word, Rational>>;

/// Word helpers for a fixed alphabet: letters 0 … dim_g−1 are degree 0,
/// dim_g … dim_g+dim_m−1 are degree 1.
struct Alphabet {
    std::size_t dim_g = 0;
    std::size_t dim_m = 0;

    bool is_m(int letter) const { return letter >= static_cast<int>(dim_g); }
    int g_letter(std::size_t i) const { return static_cast<int>(i); }
    int m_letter(std::size_t j) const { return static_cast<int>(dim_g + j); }

    std::size_t degree(const Word& w) const
    {
        std::size_t d = 0;
        for (int x : w)
            if (x >= 0 && is_m(x)) ++d;
        return d;
    }
    static std::size_t length(const Word& w)
    {
        std::size_t n = 0;
        for (int x : w)
            if (x >= 0) ++n;
        return n;
    }
    std::size_t g_count(const Word& w) const { return length(w) - degree(w); }
};

/// End of the subtree starting at position `at`.
inline std::size_t subtree_end(const Word& w, std::size_t at)
{
    std::size_t need = 1;
    while (need > 0) {
        if (at >= w.size()) throw Error("malformed bracket word");
        need += w[at] < 0 ? 1 : 0;
        need -= w[at] < 0 ? 0 : 1;
        ++at;
    }
    return at;
}

inline Word bracket_words(const Word& u, const Word& v)
{
    Word w{-1};
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

/// Children of a bracket node at `at`: [start, mid) and [mid, end).
inline std::pair<std::size_t, std::size_t> children(const Word& w, std::size_t at)
{
    const std::size_t mid = subtree_end(w, at + 1);
    return {mid, subtree_end(w, mid)};
}

inline Word splice(const Word& w, std::size_t from, std::size_t to, const Word& piece)
{
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(from));
    out.insert(out.end(), piece.begin(), piece.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(to), w.end());
    return out;
}

inline std::string render_word(const Word& w, const Alphabet& al)
{
    std::string s;
    std::vector<int> pending;  // children still to print per open node
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) {
            s += "[";
            pending.push_back(2);
            continue;
        }
        s += al.is_m(w[i]) ? "m" + std::to_string(w[i] - static_cast<int>(al.dim_g)) : "g" + std::to_string(w[i]);
        while (!pending.empty()) {
            if (--pending.back() == 1) {
                s += ",";
                break;
            }
            s += "]";
            pending.pop_back();
        }
    }
    return s;
}

/// Degree-wise quotient of the free magma, with bracket and differential
/// tables on the normal-form bases.
struct GradedLieTruncation {
    std::size_t degree_bound = 0;
    std::size_t length_bound = 0;
    SignConvention convention = SignConvention::graded_koszul;
    Alphabet alphabet;
    std::vector<std::vector<Word>> basis;  // per degree
    // bracket[{p, i, q, j}] = coordinates in degree p+q of [basis_p[i], basis_q[j]]
    std::map<std::array<std::size_t, 4>, QVector> bracket;
    std::vector<std::vector<QVector>> differential;  // differential[p][i] in degree p−1; empty for p = 0
    bool stabilized = false;
    std::vector<std::size_t> dims_previous;  // dims at length bound − 1

    std::vector<std::size_t> dims() const
    {
        std::vector<std::size_t> d;
        for (const auto& b : basis) d.push_back(b.size());
        return d;
    }

    const QVector& br(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const
    {
        return bracket.at({p, i, q, j});
    }

    /// Bracket of coordinate vectors x (degree p) and y (degree q).
    QVector br(std::size_t p, const QVector& x, std::size_t q, const QVector& y) const
    {
        QVector out(basis.at(p + q).size(), Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                if (y[j] != 0) out = add(out, br(p, i, q, j), x[i] * y[j]);
        }
        return out;
    }

    QVector d(std::size_t p, const QVector& x) const
    {
        if (p == 0) return {};
        QVector out(basis[p - 1].size(), Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) out = add(out, differential[p][i], x[i]);
        return out;
    }
};

namespace detail {

inline int koszul(SignConvention c, std::size_t du, std::size_t dv)
{
    if (c == SignConvention::plain) return 1;
    return (du * dv) % 2 == 0 ? 1 : -1;
}

/// Words with exactly n letters and degree ≤ D.
inline void words_of_length(const Alphabet& al, std::size_t n, std::size_t max_deg, std::vector<Word>& out)
{
    // shapes first, then letters
    std::map<std::size_t, std::vector<Word>> shapes;
    shapes[1] = {{0}};
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t a = 1; a < k; ++a)
            for (const auto& l : shapes[a])
                for (const auto& r : shapes[k - a]) shapes[k].push_back(bracket_words(l, r));
    const std::size_t nl = al.dim_g + al.dim_m;
    if (nl == 0) return;
    for (const auto& shape : shapes[n]) {
        std::vector<std::size_t> leaves;
        for (std::size_t i = 0; i < shape.size(); ++i)
            if (shape[i] >= 0) leaves.push_back(i);
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            Word w = shape;
            std::size_t deg = 0;
            for (std::size_t k = 0; k < n; ++k) {
                w[leaves[k]] = static_cast<int>(pick[k]);
                if (al.is_m(w[leaves[k]])) ++deg;
            }
            if (deg <= max_deg) out.push_back(std::move(w));
            std::size_t k = n;
            while (k > 0 && ++pick[k - 1] == nl) pick[--k] = 0;
            if (k == 0) break;
        }
    }
}

struct Universe {
    Alphabet al;
    std::vector<std::vector<Word>> words;          // per degree, in elimination order
    std::vector<std::map<Word, std::size_t>> pos;  // per degree
};

inline Universe make_universe(const Alphabet& al, std::size_t max_deg, std::size_t max_len)
{
    Universe u{al, std::vector<std::vector<Word>>(max_deg + 1), std::vector<std::map<Word, std::size_t>>(max_deg + 1)};
    std::vector<Word> all;
    for (std::size_t n = 1; n <= max_len; ++n) words_of_length(al, n, max_deg, all);
    for (auto& w : all) u.words[al.degree(w)].push_back(std::move(w));
    for (auto& ws : u.words) {
        std::stable_sort(ws.begin(), ws.end(), [&](const Word& a, const Word& b) {
            const auto ka = std::make_tuple(al.g_count(a), Alphabet::length(a));
            const auto kb = std::make_tuple(al.g_count(b), Alphabet::length(b));
            if (ka != kb) return ka < kb;
            return a < b;
        });
    }
    for (std::size_t d = 0; d <= max_deg; ++d)
        for (std::size_t i = 0; i < u.words[d].size(); ++i) u.pos[d][u.words[d][i]] = i;
    return u;
}

/// Local relations anchored at the subtree s of a word, as combinations of
/// replacement subtrees (s itself included with its coefficient).
inline std::vector<Combination> local_relations(const LMLieAlgebra& l, const Alphabet& al, SignConvention conv,
                                                const Word& s)
{
    std::vector<Combination> out;
    if (s.size() == 1) return out;
    const auto [mid, end] = children(s, 0);
    const Word u(s.begin() + 1, s.begin() + static_cast<std::ptrdiff_t>(mid));
    const Word v(s.begin() + static_cast<std::ptrdiff_t>(mid), s.begin() + static_cast<std::ptrdiff_t>(end));
    const std::size_t du = al.degree(u), dv = al.degree(v);
    // antisymmetry: [u,v] + ε[v,u] = 0
    out.push_back({{s, Rational(1)}, {bracket_words(v, u), Rational(koszul(conv, du, dv))}});
    // Jacobi, Leibniz form: [u,[v,w]] = [[u,v],w] + ε(u,v)[v,[u,w]]
    if (v.size() > 1) {
        const auto [m2, e2] = children(v, 0);
        const Word v1(v.begin() + 1, v.begin() + static_cast<std::ptrdiff_t>(m2));
        const Word w1(v.begin() + static_cast<std::ptrdiff_t>(m2), v.begin() + static_cast<std::ptrdiff_t>(e2));
        out.push_back({{s, Rational(1)},
                       {bracket_words(bracket_words(u, v1), w1), Rational(-1)},
                       {bracket_words(v1, bracket_words(u, w1)), Rational(-koszul(conv, du, al.degree(v1)))}});
    }
    // ⟦x,y⟧ = [x,y] on 𝔤₀ letters, ⟦m,a⟧ = m^a
    if (u.size() == 1 && v.size() == 1) {
        const int x = u[0], y = v[0];
        if (!al.is_m(x) && !al.is_m(y)) {
            Combination r{{s, Rational(1)}};
            for (std::size_t k = 0; k < al.dim_g; ++k)
                if (l.c[x][y][k] != 0) r.push_back({{al.g_letter(k)}, -l.c[x][y][k]});
            out.push_back(std::move(r));
        } else if (al.is_m(x) && !al.is_m(y)) {
            const std::size_t j = static_cast<std::size_t>(x) - al.dim_g;
            Combination r{{s, Rational(1)}};
            for (std::size_t i = 0; i < al.dim_m; ++i)
                if (l.rho[y](i, j) != 0) r.push_back({{al.m_letter(i)}, -l.rho[y](i, j)});
            out.push_back(std::move(r));
        }
    }
    return out;
}

using Eliminator = exactla::SparseEliminator<exactla::RationalField>;

struct Quotient {
    Universe uni;
    std::vector<Eliminator> elim;                    // per degree
    std::vector<std::vector<std::size_t>> free_cols;  // non-pivot columns per degree = basis
    std::vector<std::map<std::size_t, std::size_t>> free_pos;
};

inline Quotient build_quotient(const LMLieAlgebra& l, SignConvention conv, std::size_t max_deg, std::size_t max_len)
{
    const Alphabet al{l.dim_g, l.dim_m};
    Quotient q{make_universe(al, max_deg, max_len), {}, {}, {}};
    for (std::size_t d = 0; d <= max_deg; ++d) q.elim.emplace_back(exactla::RationalField{});
    for (std::size_t d = 0; d <= max_deg; ++d) {
        for (const auto& w : q.uni.words[d])
            for (std::size_t at = 0; at < w.size(); ++at) {
                if (w[at] >= 0) continue;
                const std::size_t end = subtree_end(w, at);
                const Word s(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(end));
                for (const auto& rel : local_relations(l, al, conv, s)) {
                    Eliminator::Row row;
                    for (const auto& [piece, coef] : rel) {
                        const auto it = q.uni.pos[d].find(splice(w, at, end, piece));
                        if (it == q.uni.pos[d].end()) throw std::logic_error("relation term outside the universe");
                        row.emplace_back(it->second, coef);
                    }
                    q.elim[d].add(std::move(row));
                }
            }
        std::vector<std::size_t> free;
        std::map<std::size_t, std::size_t> fp;
        for (std::size_t c = 0; c < q.uni.words[d].size(); ++c)
            if (!q.elim[d].is_pivot(c)) {
                fp[c] = free.size();
                free.push_back(c);
            }
        q.free_cols.push_back(std::move(free));
        q.free_pos.push_back(std::move(fp));
    }
    return q;
}

/// Coordinates of a degree-d combination of words in the quotient basis.
inline QVector reduce(const Quotient& q, std::size_t d, const Combination& comb)
{
    Eliminator::Row row;
    for (const auto& [w, c] : comb) {
        const auto it = q.uni.pos.at(d).find(w);
        if (it == q.uni.pos[d].end())
            throw Error("bracket word exceeds the length bound: " + render_word(w, q.uni.al));
        row.emplace_back(it->second, c);
    }
    const auto nf = q.elim[d].normal_form(std::move(row));
    QVector out(q.free_cols[d].size(), Rational(0));
    for (const auto& [c, v] : nf) out[q.free_pos[d].at(c)] = v;
    return out;
}

/// d as a derivation on a single word; terms have degree one less.
inline Combination differential_of(const LMLieAlgebra& l, const Alphabet& al, SignConvention conv, const Word& w)
{
    if (w.size() == 1) {
        Combination out;
        if (al.is_m(w[0])) {
            const std::size_t j = static_cast<std::size_t>(w[0]) - al.dim_g;
            for (std::size_t k = 0; k < al.dim_g; ++k)
                if (l.f(k, j) != 0) out.push_back({{al.g_letter(k)}, l.f(k, j)});
        }
        return out;
    }
    const auto [mid, end] = children(w, 0);
    const Word u(w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(mid));
    const Word v(w.begin() + static_cast<std::ptrdiff_t>(mid), w.begin() + static_cast<std::ptrdiff_t>(end));
    const Rational sign = conv == SignConvention::plain || al.degree(u) % 2 == 0 ? 1 : -1;
    Combination out;
    for (const auto& [du, c] : differential_of(l, al, conv, u)) out.push_back({bracket_words(du, v), c});
    for (const auto& [dv, c] : differential_of(l, al, conv, v)) out.push_back({bracket_words(u, dv), sign * c});
    return out;
}

inline GradedLieTruncation tables(const LMLieAlgebra& l, SignConvention conv, const Quotient& q, std::size_t max_deg,
                                  std::size_t max_len)
{
    GradedLieTruncation t;
    t.degree_bound = max_deg;
    t.length_bound = max_len;
    t.convention = conv;
    t.alphabet = q.uni.al;
    for (std::size_t d = 0; d <= max_deg; ++d) {
        std::vector<Word> b;
        for (auto c : q.free_cols[d]) b.push_back(q.uni.words[d][c]);
        t.basis.push_back(std::move(b));
    }
    for (std::size_t p = 0; p <= max_deg; ++p)
        for (std::size_t r = 0; p + r <= max_deg; ++r)
            for (std::size_t i = 0; i < t.basis[p].size(); ++i)
                for (std::size_t j = 0; j < t.basis[r].size(); ++j)
                    t.bracket[{p, i, r, j}] =
                        reduce(q, p + r, {{bracket_words(t.basis[p][i], t.basis[r][j]), Rational(1)}});
    t.differential.resize(max_deg + 1);
    for (std::size_t p = 1; p <= max_deg; ++p)
        for (const auto& w : t.basis[p]) t.differential[p].push_back(reduce(q, p - 1, differential_of(l, t.alphabet, conv, w)));
    return t;
}

}  // namespace detail

struct EFunctorOptions {
    std::size_t length_bound = 0;      // 0: degree bound + 1
    std::size_t max_length_bound = 7;  // give up beyond this
};

/// E𝔤 up to degree D. The length bound grows until the degree-wise
/// dimensions agree with those one length up.
inline GradedLieTruncation e_functor(const LMLieAlgebra& l, std::size_t max_deg,
                                     SignConvention conv = SignConvention::graded_koszul, EFunctorOptions opt = {})
{
    l.check_shape();
    if (max_deg < 1) throw Error("degree bound must be at least 1");
    std::size_t len = opt.length_bound == 0 ? max_deg + 1 : opt.length_bound;
    if (len < max_deg + 1) throw Error("length bound must exceed the degree bound");
    auto dims_of = [&](const detail::Quotient& q) {
        std::vector<std::size_t> d;
        for (const auto& c : q.free_cols) d.push_back(c.size());
        return d;
    };
    auto prev = detail::build_quotient(l, conv, max_deg, len);
    while (true) {
        if (len + 1 > opt.max_length_bound)
            throw Error(rackgraph::detail::cat("length bound ", opt.max_length_bound,
                                               " reached before the quotient dimensions stabilized"));
        auto next = detail::build_quotient(l, conv, max_deg, len + 1);
        if (dims_of(next) == dims_of(prev)) {
            auto t = detail::tables(l, conv, prev, max_deg, len);
            t.stabilized = true;
            t.dims_previous = dims_of(prev);
            return t;
        }
        prev = std::move(next);
        ++len;
    }
}

/// Degree-≤1 part equals the input; d is a derivation; d∘d = 0;
/// antisymmetry and Jacobi in the chosen convention; all on basis elements.
inline ValidationReport verify_e_truncation(const GradedLieTruncation& t, const LMLieAlgebra& l)
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    const std::size_t D = t.degree_bound;
    const auto& al = t.alphabet;
    bool letters = t.basis.size() > 1 && t.basis[0].size() == l.dim_g && t.basis[1].size() == l.dim_m;
    for (std::size_t i = 0; letters && i < l.dim_g; ++i) letters = t.basis[0][i] == Word{al.g_letter(i)};
    for (std::size_t j = 0; letters && j < l.dim_m; ++j) letters = t.basis[1][j] == Word{al.m_letter(j)};
    if (!letters) {
        rep.add("low_degree_basis", "degree 0/1 bases are not the input letters");
        return rep;
    }
    for (std::size_t i = 0; i < l.dim_g; ++i)
        for (std::size_t j = 0; j < l.dim_g; ++j)
            if (t.br(0, i, 0, j) != l.c[i][j]) rep.add("degree0_bracket", cat("(", i, ",", j, ")"));
    for (std::size_t j = 0; j < l.dim_m; ++j) {
        for (std::size_t a = 0; a < l.dim_g; ++a) {
            const auto expect = l.rho[a].col(j);
            if (t.br(1, j, 0, a) != expect) rep.add("module_bracket", cat("(m", j, ",", a, ")"));
            if (t.br(0, a, 1, j) != add(QVector(expect.size(), Rational(0)), expect, -1))
                rep.add("module_bracket_antisymmetric", cat("(", a, ",m", j, ")"));
        }
        if (t.d(1, unit(l.dim_m, j)) != l.f.col(j)) rep.add("differential_is_f", cat("m", j));
    }

    auto sgn = [&](std::size_t p, std::size_t q) {
        return Rational(detail::koszul(t.convention, p, q));
    };
    auto e = [&](std::size_t p, std::size_t i) { return unit(t.basis[p].size(), i); };
    for (std::size_t p = 0; p <= D; ++p)
        for (std::size_t q = 0; p + q <= D; ++q)
            for (std::size_t i = 0; i < t.basis[p].size(); ++i)
                for (std::size_t j = 0; j < t.basis[q].size(); ++j) {
                    const auto& uv = t.br(p, i, q, j);
                    const auto& vu = t.br(q, j, p, i);
                    if (!is_zero(add(uv, vu, sgn(p, q)))) rep.add("antisymmetry", cat("(", p, ":", i, ",", q, ":", j, ")"));
                    if (p + q == 0) continue;
                    // d[u,v] = [du,v] + ε[u,dv]
                    const auto lhs = t.d(p + q, uv);
                    QVector rhs(t.basis[p + q - 1].size(), Rational(0));
                    const Rational s = t.convention == SignConvention::plain || p % 2 == 0 ? 1 : -1;
                    if (p > 0) rhs = add(rhs, t.br(p - 1, t.d(p, e(p, i)), q, e(q, j)));
                    if (q > 0) rhs = add(rhs, t.br(p, e(p, i), q - 1, t.d(q, e(q, j))), s);
                    if (lhs != rhs) rep.add("derivation", cat("(", p, ":", i, ",", q, ":", j, ")"));
                }
    for (std::size_t p = 2; p <= D; ++p)
        for (std::size_t i = 0; i < t.basis[p].size(); ++i)
            if (!is_zero(t.d(p - 1, t.d(p, e(p, i))))) rep.add("d_squared_zero", cat("degree ", p, " basis ", i));
    for (std::size_t p = 0; p <= D; ++p)
        for (std::size_t q = 0; p + q <= D; ++q)
            for (std::size_t r = 0; p + q + r <= D; ++r)
                for (std::size_t i = 0; i < t.basis[p].size(); ++i)
                    for (std::size_t j = 0; j < t.basis[q].size(); ++j)
                        for (std::size_t k = 0; k < t.basis[r].size(); ++k) {
                            // [u,[v,w]] = [[u,v],w] + ε(u,v)[v,[u,w]]
                            const auto lhs = t.br(p, e(p, i), q + r, t.br(q, j, r, k));
                            auto rhs = t.br(p + q, t.br(p, i, q, j), r, e(r, k));
                            rhs = add(rhs, t.br(q, e(q, j), p + r, t.br(p, i, r, k)), sgn(p, q));
                            if (lhs != rhs) rep.add("jacobi", cat("(", p, ":", i, ",", q, ":", j, ",", r, ":", k, ")"));
                        }
    return rep;
}

/// LM-morphism (α: 𝔤 → 𝔤', β: M → M'), as matrices in the column convention.
struct LMMorphism {
    QMatrix alpha;  // dim 𝔤' × dim 𝔤
    QMatrix beta;   // dim M' × dim M
};

inline ValidationReport validate_morphism(const LMLieAlgebra& src, const LMLieAlgebra& dst, const LMMorphism& m)
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    auto mat_apply = [](const QMatrix& a, const QVector& v) {
        QVector out(a.rows(), Rational(0));
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t i = 0; i < a.rows(); ++i) out[i] += a(i, j) * v[j];
        return out;
    };
    for (std::size_t i = 0; i < src.dim_g; ++i)
        for (std::size_t j = 0; j < src.dim_g; ++j)
            if (mat_apply(m.alpha, src.bracket(unit(src.dim_g, i), unit(src.dim_g, j))) !=
                dst.bracket(m.alpha.col(i), m.alpha.col(j)))
                rep.add("alpha_bracket", cat("(", i, ",", j, ")"));
    for (std::size_t x = 0; x < src.dim_m; ++x) {
        for (std::size_t a = 0; a < src.dim_g; ++a)
            if (mat_apply(m.beta, src.act(unit(src.dim_m, x), unit(src.dim_g, a))) !=
                dst.act(m.beta.col(x), m.alpha.col(a)))
                rep.add("beta_equivariant", cat("(m", x, ",", a, ")"));
        if (dst.apply_f(m.beta.col(x)) != mat_apply(m.alpha, src.f.col(x))) rep.add("commutes_with_f", cat("m", x));
    }
    return rep;
}

/// Degree-wise matrices of E(α, β) between two truncations.
inline std::vector<QMatrix> e_morphism(const GradedLieTruncation& src, const GradedLieTruncation& dst,
                                       const LMMorphism& m, const LMLieAlgebra& dst_algebra)
{
    if (src.degree_bound != dst.degree_bound) throw Error("truncations have different degree bounds");
    const auto q = detail::build_quotient(dst_algebra, dst.convention, dst.degree_bound, dst.length_bound);
    const auto& sa = src.alphabet;
    const auto& da = dst.alphabet;
    // images of a word: multilinear substitution of letters
    std::function<Combination(const Word&)> image = [&](const Word& w) -> Combination {
        if (w.size() == 1) {
            Combination out;
            if (sa.is_m(w[0])) {
                const std::size_t j = static_cast<std::size_t>(w[0]) - sa.dim_g;
                for (std::size_t i = 0; i < da.dim_m; ++i)
                    if (m.beta(i, j) != 0) out.push_back({{da.m_letter(i)}, m.beta(i, j)});
            } else {
                for (std::size_t i = 0; i < da.dim_g; ++i)
                    if (m.alpha(i, static_cast<std::size_t>(w[0])) != 0)
                        out.push_back({{da.g_letter(i)}, m.alpha(i, static_cast<std::size_t>(w[0]))});
            }
            return out;
        }
        const auto [mid, end] = children(w, 0);
        const auto left = image(Word(w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(mid)));
        const auto right = image(Word(w.begin() + static_cast<std::ptrdiff_t>(mid), w.begin() + static_cast<std::ptrdiff_t>(end)));
        Combination out;
        for (const auto& [a, x] : left)
            for (const auto& [b, y] : right) out.push_back({bracket_words(a, b), x * y});
        return out;
    };
    std::vector<QMatrix> mats;
    for (std::size_t d = 0; d <= src.degree_bound; ++d) {
        QMatrix mat(dst.basis[d].size(), src.basis[d].size(), Rational(0));
        for (std::size_t j = 0; j < src.basis[d].size(); ++j) {
            const auto col = detail::reduce(q, d, image(src.basis[d][j]));
            for (std::size_t i = 0; i < col.size(); ++i) mat(i, j) = col[i];
        }
        mats.push_back(std::move(mat));
    }
    return mats;
}

/// E(α,β)[u,v] = [E(α,β)u, E(α,β)v] and E(α,β)∘d = d∘E(α,β) on basis elements.
inline ValidationReport verify_e_morphism(const GradedLieTruncation& src, const GradedLieTruncation& dst,
                                          const std::vector<QMatrix>& mats)
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    auto apply = [](const QMatrix& a, const QVector& v) {
        QVector out(a.rows(), Rational(0));
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (v[j] != 0)
                for (std::size_t i = 0; i < a.rows(); ++i) out[i] += a(i, j) * v[j];
        return out;
    };
    const std::size_t D = src.degree_bound;
    for (std::size_t p = 0; p <= D; ++p)
        for (std::size_t q = 0; p + q <= D; ++q)
            for (std::size_t i = 0; i < src.basis[p].size(); ++i)
                for (std::size_t j = 0; j < src.basis[q].size(); ++j) {
                    const auto lhs = apply(mats[p + q], src.br(p, i, q, j));
                    const auto rhs = dst.br(p, mats[p].col(i), q, mats[q].col(j));
                    if (lhs != rhs) rep.add("morphism_bracket", cat("(", p, ":", i, ",", q, ":", j, ")"));
                }
    for (std::size_t p = 1; p <= D; ++p)
        for (std::size_t i = 0; i < src.basis[p].size(); ++i)
            if (apply(mats[p - 1], src.d(p, unit(src.basis[p].size(), i))) != dst.d(p, mats[p].col(i)))
                rep.add("morphism_differential", cat("degree ", p, " basis ", i));
    return rep;
}

}  // namespace rackgraph::lmlie
