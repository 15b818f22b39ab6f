#pragma once

// JSON schemas (version 1). Group elements are indices everywhere.
//   group      {order, mul, identity}
//   rack       {size, op}
//   augmented  {x_size, group, action, pi}
//   graph      {vertex_group, arrows: [{s, t}], left_act, right_act}
//   lm_lie     {dim_g, dim_m, c, rho, f}           exact, column convention
//   matrix_lm  {m, basis, dim_x, rho, f}           floating point, row convention
// Top-level documents carry "schema": 1 and optionally "kind".

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "rackgraph/cubical/homology.hpp"
#include "rackgraph/graphlike/multiplicative.hpp"
#include "rackgraph/liegraph/lierack.hpp"
#include "rackgraph/lmlie/algebra.hpp"
#include "rackgraph/racks/rack.hpp"

namespace rackgraph::io {

using nlohmann::json;
using racks::Index;
using racks::Table;

constexpr int schema_version = 1;

/// Malformed document; `where` is a JSON pointer into the input.
class SchemaError : public Error {
public:
    SchemaError(std::string where, const std::string& what)
        : Error(where + ": " + what), where_(std::move(where))
    {
    }
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

enum class Kind { group, rack, augmented, graph, lm_lie, matrix_lm };

inline std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::group: return "group";
    case Kind::rack: return "rack";
    case Kind::augmented: return "augmented";
    case Kind::graph: return "graph";
    case Kind::lm_lie: return "lm_lie";
    case Kind::matrix_lm: return "matrix_lm";
    }
    return "?";
}

namespace detail {

inline std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline const json& field(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path, "missing field '" + key + "'");
    return *it;
}

inline std::size_t as_size(const json& j, const std::string& path)
{
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        throw SchemaError(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

inline Index as_index(const json& j, std::size_t bound, const std::string& path)
{
    const auto v = as_size(j, path);
    if (v >= bound) throw SchemaError(path, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
}

inline const json& as_array(const json& j, std::size_t len, const std::string& path)
{
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    if (j.size() != len)
        throw SchemaError(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
    return j;
}

inline std::vector<Index> index_vector(const json& j, std::size_t len, std::size_t bound, const std::string& path)
{
    as_array(j, len, path);
    std::vector<Index> out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(as_index(j[i], bound, at(path, i)));
    return out;
}

inline Table index_table(const json& j, std::size_t rows, std::size_t cols, std::size_t bound, const std::string& path)
{
    as_array(j, rows, path);
    Table t;
    for (std::size_t r = 0; r < rows; ++r) t.push_back(index_vector(j[r], cols, bound, at(path, r)));
    return t;
}

inline lmlie::Rational as_rational(const json& j, const std::string& path)
{
    if (j.is_number_integer()) return lmlie::Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return lmlie::Rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError(path, "bad rational '" + j.get<std::string>() + "'");
        }
    }
    throw SchemaError(path, "expected an integer or a \"p/q\" string");
}

inline lmlie::QMatrix rational_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path)
{
    as_array(j, rows, path);
    lmlie::QMatrix m(rows, cols, lmlie::Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
        as_array(j[r], cols, at(path, r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_rational(j[r][c], at(at(path, r), c));
    }
    return m;
}

inline liegraph::Mat real_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path)
{
    as_array(j, rows, path);
    liegraph::Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        as_array(j[r], cols, at(path, r));
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& v = j[r][c];
            if (!v.is_number()) throw SchemaError(at(at(path, r), c), "expected a number");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v.get<double>();
        }
    }
    return m;
}

inline json rational_json(const lmlie::Rational& q)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) {
        const auto n = numerator(q);
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(n);
    }
    return q.str();
}

inline json bigint_json(const exactla::BigInt& n)
{
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

}  // namespace detail

/// Reads "schema" and determines the kind, from "kind" or else by keys.
inline Kind document_kind(const json& j)
{
    if (!j.is_object()) throw SchemaError("", "document is not an object");
    const auto& s = detail::field(j, "schema", "");
    if (!s.is_number_integer() || s.get<int>() != schema_version)
        throw SchemaError("/schema", "unsupported schema version (expected 1)");
    if (j.contains("kind")) {
        const auto& k = j["kind"];
        for (Kind c : {Kind::group, Kind::rack, Kind::augmented, Kind::graph, Kind::lm_lie, Kind::matrix_lm})
            if (k.is_string() && k.get<std::string>() == kind_name(c)) return c;
        throw SchemaError("/kind", "unknown kind");
    }
    if (j.contains("op")) return Kind::rack;
    if (j.contains("action")) return Kind::augmented;
    if (j.contains("arrows")) return Kind::graph;
    if (j.contains("mul")) return Kind::group;
    if (j.contains("basis")) return Kind::matrix_lm;
    if (j.contains("c")) return Kind::lm_lie;
    throw SchemaError("", "cannot determine the document kind");
}

/// The raw table, unvalidated beyond shape and range.
inline Table read_group_table(const json& j, const std::string& path = "")
{
    const auto n = detail::as_size(detail::field(j, "order", path), detail::at(path, "order"));
    if (n == 0) throw SchemaError(detail::at(path, "order"), "group order must be positive");
    auto mul = detail::index_table(detail::field(j, "mul", path), n, n, n, detail::at(path, "mul"));
    if (j.contains("identity")) detail::as_index(j["identity"], n, detail::at(path, "identity"));
    return mul;
}

/// Throws rackgraph::Error if the table is not a group or the declared
/// identity is wrong.
inline racks::FiniteGroup read_group(const json& j, const std::string& path = "")
{
    racks::FiniteGroup g(read_group_table(j, path));
    if (j.contains("identity") && j["identity"].get<std::size_t>() != g.identity())
        throw Error(path + "/identity: declared identity is not the unit of the table");
    return g;
}

inline racks::FiniteRack read_rack(const json& j, const std::string& path = "")
{
    const auto n = detail::as_size(detail::field(j, "size", path), detail::at(path, "size"));
    return racks::FiniteRack(detail::index_table(detail::field(j, "op", path), n, n, n, detail::at(path, "op")));
}

inline racks::AugmentedRack read_augmented(const json& j, const std::string& path = "")
{
    const auto n = detail::as_size(detail::field(j, "x_size", path), detail::at(path, "x_size"));
    auto g = read_group(detail::field(j, "group", path), detail::at(path, "group"));
    const auto order = g.order();
    auto action = detail::index_table(detail::field(j, "action", path), n, order, n, detail::at(path, "action"));
    auto pi = detail::index_vector(detail::field(j, "pi", path), n, order, detail::at(path, "pi"));
    return racks::AugmentedRack(std::move(g), action, std::move(pi));
}

inline graphlike::GroupLikeGraph read_graph(const json& j, const std::string& path = "")
{
    auto g = read_group(detail::field(j, "vertex_group", path), detail::at(path, "vertex_group"));
    const auto order = g.order();
    const auto& arr = detail::field(j, "arrows", path);
    if (!arr.is_array()) throw SchemaError(detail::at(path, "arrows"), "expected an array");
    std::vector<graphlike::Arrow> arrows;
    for (std::size_t a = 0; a < arr.size(); ++a) {
        const auto p = detail::at(detail::at(path, "arrows"), a);
        arrows.push_back({detail::as_index(detail::field(arr[a], "s", p), order, detail::at(p, "s")),
                          detail::as_index(detail::field(arr[a], "t", p), order, detail::at(p, "t"))});
    }
    const auto na = arrows.size();
    auto left = detail::index_table(detail::field(j, "left_act", path), order, na, na, detail::at(path, "left_act"));
    auto right = detail::index_table(detail::field(j, "right_act", path), na, order, na, detail::at(path, "right_act"));
    return {std::move(g), std::move(arrows), std::move(left), std::move(right)};
}

inline lmlie::LMLieAlgebra read_lm_lie(const json& j, const std::string& path = "")
{
    using detail::at;
    const auto ng = detail::as_size(detail::field(j, "dim_g", path), at(path, "dim_g"));
    const auto nm = detail::as_size(detail::field(j, "dim_m", path), at(path, "dim_m"));
    lmlie::LMLieAlgebra l;
    l.dim_g = ng;
    l.dim_m = nm;
    const auto& c = detail::as_array(detail::field(j, "c", path), ng, at(path, "c"));
    for (std::size_t i = 0; i < ng; ++i) {
        detail::as_array(c[i], ng, at(at(path, "c"), i));
        l.c.emplace_back();
        for (std::size_t k = 0; k < ng; ++k) {
            const auto p = at(at(at(path, "c"), i), k);
            detail::as_array(c[i][k], ng, p);
            lmlie::QVector v;
            for (std::size_t r = 0; r < ng; ++r) v.push_back(detail::as_rational(c[i][k][r], at(p, r)));
            l.c.back().push_back(std::move(v));
        }
    }
    const auto& rho = detail::as_array(detail::field(j, "rho", path), ng, at(path, "rho"));
    for (std::size_t a = 0; a < ng; ++a) l.rho.push_back(detail::rational_matrix(rho[a], nm, nm, at(at(path, "rho"), a)));
    l.f = detail::rational_matrix(detail::field(j, "f", path), ng, nm, at(path, "f"));
    return l;
}

inline liegraph::MatrixLMLie read_matrix_lm(const json& j, const std::string& path = "")
{
    using detail::at;
    liegraph::MatrixLMLie l;
    l.m = detail::as_size(detail::field(j, "m", path), at(path, "m"));
    l.dim_x = detail::as_size(detail::field(j, "dim_x", path), at(path, "dim_x"));
    const auto& basis = detail::field(j, "basis", path);
    if (!basis.is_array()) throw SchemaError(at(path, "basis"), "expected an array");
    for (std::size_t k = 0; k < basis.size(); ++k)
        l.basis.push_back(detail::real_matrix(basis[k], l.m, l.m, at(at(path, "basis"), k)));
    const auto ng = l.basis.size();
    const auto& rho = detail::as_array(detail::field(j, "rho", path), ng, at(path, "rho"));
    for (std::size_t k = 0; k < ng; ++k)
        l.rho.push_back(detail::real_matrix(rho[k], l.dim_x, l.dim_x, at(at(path, "rho"), k)));
    l.f = detail::real_matrix(detail::field(j, "f", path), l.dim_x, ng, at(path, "f"));
    return l;
}

// Writers. Object keys come out sorted, so dumps are canonical.

inline json with_header(json body, Kind k)
{
    body["schema"] = schema_version;
    body["kind"] = kind_name(k);
    return body;
}

inline json to_json(const racks::FiniteGroup& g)
{
    return {{"order", g.order()}, {"mul", g.table()}, {"identity", g.identity()}};
}

inline json to_json(const racks::FiniteRack& r) { return {{"size", r.size()}, {"op", r.table()}}; }

inline json to_json(const racks::AugmentedRack& a)
{
    return {{"x_size", a.size()}, {"group", to_json(a.group())}, {"action", a.action_table()}, {"pi", a.pi_map()}};
}

inline json to_json(const graphlike::GroupLikeGraph& q)
{
    json arrows = json::array();
    for (const auto& a : q.arrows) arrows.push_back({{"s", a.s}, {"t", a.t}});
    return {{"vertex_group", to_json(q.group)}, {"arrows", arrows}, {"left_act", q.left_act}, {"right_act", q.right_act}};
}

inline json to_json(const lmlie::LMLieAlgebra& l)
{
    json c = json::array(), rho = json::array();
    for (const auto& row : l.c) {
        json r = json::array();
        for (const auto& v : row) {
            json e = json::array();
            for (const auto& q : v) e.push_back(detail::rational_json(q));
            r.push_back(e);
        }
        c.push_back(r);
    }
    auto mat = [](const lmlie::QMatrix& m) {
        json out = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json r = json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(detail::rational_json(m(i, k)));
            out.push_back(r);
        }
        return out;
    };
    for (const auto& r : l.rho) rho.push_back(mat(r));
    return {{"dim_g", l.dim_g}, {"dim_m", l.dim_m}, {"c", c}, {"rho", rho}, {"f", mat(l.f)}};
}

inline json to_json(const liegraph::MatrixLMLie& l)
{
    auto mat = [](const liegraph::Mat& m) {
        json out = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            json r = json::array();
            for (Eigen::Index k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
            out.push_back(r);
        }
        return out;
    };
    json basis = json::array(), rho = json::array();
    for (const auto& b : l.basis) basis.push_back(mat(b));
    for (const auto& r : l.rho) rho.push_back(mat(r));
    return {{"m", l.m}, {"dim_x", l.dim_x}, {"basis", basis}, {"rho", rho}, {"f", mat(l.f)}};
}

/// At most `limit` violations are listed; the count is always exact.
inline json to_json(const ValidationReport& r, std::size_t limit = 20)
{
    json v = json::array();
    for (std::size_t i = 0; i < r.violations.size() && i < limit; ++i)
        v.push_back({{"identity", r.violations[i].identity}, {"witness", r.violations[i].witness}});
    return {{"ok", r.ok()}, {"violation_count", r.violations.size()}, {"violations", v}};
}

inline json to_json(const cubical::HomologyResult& h)
{
    json out = json::array();
    for (std::size_t n = 0; n < h.degrees.size(); ++n) {
        json t = json::array();
        for (const auto& d : h.degrees[n].torsion) t.push_back(detail::bigint_json(d));
        out.push_back({{"degree", n}, {"betti", h.degrees[n].betti}, {"torsion", t}});
    }
    return out;
}

/// Pretty-printed with two-space indent and a trailing newline.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rackgraph::io
