// rackgraph: command-line front end. Exit status 0 when every check passes,
// 1 when a check fails, 2 on usage or schema errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rackgraph/corpus.hpp"
#include "rackgraph/io/schema.hpp"
#include "rackgraph/rackgraph.hpp"

namespace {

using namespace rackgraph;
using io::json;

struct Options {
    std::string input;
    std::string field = "q";
    std::size_t max_degree = 3;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::string complex = "bq";
    std::string convention = "graded_koszul";
    std::string out;
    std::string golden;
    bool golden_update = false;
};

struct Outcome {
    json report;
    bool ok = true;
};

json load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw io::SchemaError(path, "cannot open input file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io::SchemaError(path, std::string("invalid JSON: ") + e.what());
    }
}

json header(const std::string& command)
{
    return {{"schema", io::schema_version}, {"command", command}};
}

/// A bare rack is augmented over its inner group; a graph over its vertex group.
racks::AugmentedRack as_augmented(const json& doc)
{
    switch (io::document_kind(doc)) {
    case io::Kind::rack: return racks::inner_group(io::read_rack(doc)).augmented;
    case io::Kind::augmented: return io::read_augmented(doc);
    case io::Kind::graph: {
        auto q = io::read_graph(doc);
        const auto rep = graphlike::validate_group_like(q);
        if (!rep.ok()) throw Error("input graph is not group-like: " + rep.violations.front().identity);
        return graphlike::graph_to_rack(q);
    }
    default: throw io::SchemaError("", "expected a rack, augmented rack or graph");
    }
}

Outcome cmd_validate(const Options& o)
{
    const auto doc = load(o.input);
    const auto kind = io::document_kind(doc);
    ValidationReport rep;
    json extra = json::object();
    switch (kind) {
    case io::Kind::group: {
        const auto mul = io::read_group_table(doc);
        rep = racks::validate_group_table(mul);
        if (rep.ok() && doc.contains("identity") &&
            racks::FiniteGroup(mul).identity() != doc["identity"].get<std::size_t>())
            rep.add("identity_field", "declared identity is not the unit");
        break;
    }
    case io::Kind::rack: rep = racks::validate_rack(io::read_rack(doc)); break;
    case io::Kind::augmented: {
        const auto a = io::read_augmented(doc);
        rep = racks::validate_augmented(a);
        if (rep.ok()) {
            const auto derived = racks::validate_rack(a.derived_rack());
            for (const auto& v : derived.violations) rep.add("derived_" + v.identity, v.witness);
        }
        break;
    }
    case io::Kind::graph: rep = graphlike::validate_group_like(io::read_graph(doc)); break;
    case io::Kind::lm_lie: {
        const auto l = io::read_lm_lie(doc);
        l.check_shape();
        rep = lmlie::validate_lm_lie(l);
        if (rep.ok()) {
            const auto b = lmlie::leibniz_bracket(l);
            extra["leibniz_antisymmetric"] = b.is_antisymmetric();
        }
        break;
    }
    case io::Kind::matrix_lm: {
        liegraph::Tolerances tol;
        tol.structure = o.tol;
        rep = liegraph::validate_matrix_lm(io::read_matrix_lm(doc), tol);
        break;
    }
    }
    auto out = header("validate");
    out["kind"] = io::kind_name(kind);
    out["report"] = io::to_json(rep);
    for (auto& [k, v] : extra.items()) out[k] = v;
    return {out, rep.ok()};
}

Outcome cmd_convert(const Options& o)
{
    const auto doc = load(o.input);
    switch (io::document_kind(doc)) {
    case io::Kind::rack:
    case io::Kind::augmented: {
        const auto a = as_augmented(doc);
        return {io::with_header(io::to_json(graphlike::rack_to_graph(a)), io::Kind::graph), true};
    }
    case io::Kind::graph: {
        const auto q = io::read_graph(doc);
        const auto rep = graphlike::validate_group_like(q);
        if (!rep.ok()) {
            auto out = header("convert");
            out["report"] = io::to_json(rep);
            return {out, false};
        }
        return {io::with_header(io::to_json(graphlike::graph_to_rack(q)), io::Kind::augmented), true};
    }
    default: throw io::SchemaError("", "convert expects a rack, augmented rack or graph");
    }
}

Outcome cmd_homology(const Options& o)
{
    const auto a = as_augmented(load(o.input));
    cubical::ChainComplex c;
    if (o.complex == "bq")
        c = cubical::bq_chain_complex(a, o.max_degree);
    else if (o.complex == "eq")
        c = cubical::eq_chain_complex(a, o.max_degree);
    else
        throw io::SchemaError("--complex", "expected bq or eq");
    const auto h = cubical::homology(c);
    const auto q = cubical::rational_betti(c);
    bool agree = q.size() == h.degrees.size();
    for (std::size_t n = 0; agree && n < q.size(); ++n) agree = q[n] == h.degrees[n].betti;
    auto out = header("homology");
    out["complex"] = o.complex;
    out["max_degree"] = o.max_degree;
    out["ranks"] = c.ranks;
    out["homology"] = io::to_json(h);
    out["rational_betti"] = q;
    out["betti_agree"] = agree;
    return {out, agree};
}

template <class F>
Outcome hopf_over(const F& field, const racks::AugmentedRack& a, const Options& o)
{
    const auto q = graphlike::rack_to_graph(a);
    const auto b = lmhopf::build_lm_hopf(q, field);
    const auto hopf = lmhopf::verify_hopf(b);
    const auto fl = lmhopf::augmentation_filtration(b, o.max_degree);
    const auto lemma = lmhopf::verify_connected_lemma(b, fl);
    const auto cm = lmhopf::coinvariant_module(a, field, o.max_degree);
    const auto graded = lmhopf::verify_graded_structure(b, fl, cm);
    auto dims = [](const auto& chain) {
        std::vector<std::size_t> d;
        for (const auto& s : chain) d.push_back(s.dim());
        return d;
    };
    const auto uc = graphlike::unit_component(q);
    auto out = header("hopf");
    out["field"] = field.name();
    out["group_order"] = a.group().order();
    out["arrows"] = q.arrow_count();
    out["connected"] = uc.is_connected;
    out["hopf"] = io::to_json(hopf);
    out["filtration"] = {{"dims_G", dims(fl.levels_G)},
                         {"dims_A", dims(fl.levels_A)},
                         {"stable_G", fl.stable_G},
                         {"stable_A", fl.stable_A}};
    out["lemma"] = io::to_json(lemma);
    out["coinvariants"] = {{"graded_dims", cm.graded_dims}, {"report", io::to_json(cm.report)}};
    out["graded"] = io::to_json(graded);
    return {out, hopf.ok() && lemma.ok() && cm.report.ok() && graded.ok()};
}

Outcome cmd_hopf(const Options& o)
{
    const auto a = as_augmented(load(o.input));
    return exactla::with_field(exactla::FieldSpec::parse(o.field),
                               [&](const auto& f) { return hopf_over(f, a, o); });
}

Outcome cmd_dgla(const Options& o)
{
    const auto doc = load(o.input);
    if (io::document_kind(doc) != io::Kind::lm_lie) throw io::SchemaError("", "dgla expects an lm_lie document");
    const auto l = io::read_lm_lie(doc);
    l.check_shape();
    auto out = header("dgla");
    const auto input = lmlie::validate_lm_lie(l);
    out["input"] = io::to_json(input);
    if (!input.ok()) return {out, false};
    const auto conv = lmlie::parse_convention(o.convention);
    const auto t = lmlie::e_functor(l, o.max_degree, conv);
    const auto rep = lmlie::verify_e_truncation(t, l);
    out["convention"] = lmlie::convention_name(conv);
    out["max_degree"] = o.max_degree;
    out["dims"] = t.dims();
    out["length_bound"] = t.length_bound;
    out["stabilized"] = t.stabilized;
    out["report"] = io::to_json(rep);
    return {out, rep.ok()};
}

Outcome cmd_integrate(const Options& o)
{
    const auto doc = load(o.input);
    if (io::document_kind(doc) != io::Kind::matrix_lm)
        throw io::SchemaError("", "integrate expects a matrix_lm document");
    const auto l = io::read_matrix_lm(doc);
    auto out = header("integrate");
    const auto input = liegraph::validate_matrix_lm(l);
    out["input"] = io::to_json(input);
    if (!input.ok()) return {out, false};
    const auto r = liegraph::integrate(l);
    const auto num = liegraph::verify_rack_numeric(r, o.samples, o.seed, o.tol);
    const auto der = liegraph::derivative_check(r);
    out["numeric"] = {{"samples", num.samples},          {"seed", o.seed},
                      {"self_distributivity", num.self_distributivity},
                      {"equivariance", num.equivariance}, {"pi_at_zero", num.pi_at_zero},
                      {"linearity", num.linearity},     {"ok", num.ok},
                      {"witness", num.witness}};
    out["derivative"] = {{"h", der.h},           {"error_h", der.error_h}, {"error_half", der.error_half},
                         {"ratio", der.ratio},   {"exact", der.exact},     {"ok", der.ok}};
    out["tol"] = o.tol;
    return {out, num.ok && der.ok};
}

Outcome cmd_presentation(const Options& o)
{
    const auto doc = load(o.input);
    racks::FiniteRack r = io::document_kind(doc) == io::Kind::rack ? io::read_rack(doc) : as_augmented(doc).derived_rack();
    const auto p = racks::associated_group_presentation(r);
    const auto ab = racks::abelianization(p);
    json rels = json::array(), torsion = json::array();
    for (const auto& w : p.relations) rels.push_back(p.render(w));
    for (const auto& t : ab.torsion) torsion.push_back(io::detail::bigint_json(t));
    auto out = header("presentation");
    out["generators"] = p.generator_names;
    out["relations"] = rels;
    out["abelianization"] = {{"free_rank", ab.free_rank}, {"torsion", torsion}};
    out["inner_orbits"] = racks::inner_orbits(r).size();
    return {out, true};
}

Outcome cmd_corpus(const Options& o)
{
    if (o.out.empty()) throw io::SchemaError("--out", "corpus needs an output directory");
    std::filesystem::create_directories(o.out);
    json files = json::array();
    for (const auto& [name, doc] : corpus::documents()) {
        std::ofstream f(std::filesystem::path(o.out) / name);
        f << io::canonical_dump(doc);
        files.push_back(name);
    }
    auto out = header("corpus");
    out["files"] = files;
    return {out, true};
}

int emit(const Outcome& res, const Options& o, bool to_stdout_only)
{
    const auto text = io::canonical_dump(res.report);
    if (!o.out.empty() && !to_stdout_only) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    if (o.golden_update) {
        if (o.golden.empty()) {
            std::cerr << "--golden-update needs --golden PATH\n";
            return 2;
        }
        std::ofstream g(o.golden);
        g << text;
    } else if (!o.golden.empty()) {
        std::ifstream g(o.golden);
        if (!g) {
            std::cerr << "golden file " << o.golden << " missing\n";
            return 1;
        }
        std::stringstream ss;
        ss << g.rdbuf();
        if (ss.str() != text) {
            std::cerr << "output differs from golden file " << o.golden << "\n";
            return 1;
        }
    }
    return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Racks, group-like graphs and their linearizations"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s, bool needs_input) {
        if (needs_input) s->add_option("input", o.input, "input JSON document")->required()->check(CLI::ExistingFile);
        s->add_option("--out", o.out, "write the report here instead of stdout");
        s->add_option("--golden", o.golden, "compare the report with this file");
        s->add_flag("--golden-update", o.golden_update, "rewrite the golden file");
        return s;
    };
    auto* validate = common(app.add_subcommand("validate", "check the axioms of a document"), true);
    validate->add_option("--tol", o.tol, "tolerance for matrix data");
    auto* convert = common(app.add_subcommand("convert", "rack to group-like graph and back"), true);
    auto* homology = common(app.add_subcommand("homology", "BQ or EQ homology"), true);
    homology->add_option("--complex", o.complex, "bq or eq")->check(CLI::IsMember({"bq", "eq"}));
    homology->add_option("--max-degree", o.max_degree, "top cube dimension N (reports H_0 .. H_{N-1})")
        ->check(CLI::PositiveNumber);
    auto* hopf = common(app.add_subcommand("hopf", "LM Hopf algebra checks, filtrations, coinvariants"), true);
    hopf->add_option("--field", o.field, "q, f2, f3 or f<p>");
    hopf->add_option("--max-degree", o.max_degree, "minimum filtration depth")->check(CLI::PositiveNumber);
    auto* dgla = common(app.add_subcommand("dgla", "truncated E-functor dimensions"), true);
    dgla->add_option("--max-degree", o.max_degree, "degree bound D")->check(CLI::PositiveNumber);
    dgla->add_option("--convention", o.convention, "graded_koszul or plain")
        ->check(CLI::IsMember({"graded_koszul", "plain"}));
    auto* integrate = common(app.add_subcommand("integrate", "integrate matrix data to a linear Lie rack"), true);
    integrate->add_option("--tol", o.tol, "residual tolerance");
    integrate->add_option("--seed", o.seed, "sampling seed");
    integrate->add_option("--samples", o.samples, "number of random samples");
    auto* presentation = common(app.add_subcommand("presentation", "associated group presentation"), true);
    auto* corpus_cmd = app.add_subcommand("corpus", "write the sample documents to a directory");
    corpus_cmd->add_option("--out", o.out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Outcome res;
        bool stdout_only = false;
        if (validate->parsed()) res = cmd_validate(o);
        else if (convert->parsed()) res = cmd_convert(o);
        else if (homology->parsed()) res = cmd_homology(o);
        else if (hopf->parsed()) res = cmd_hopf(o);
        else if (dgla->parsed()) res = cmd_dgla(o);
        else if (integrate->parsed()) res = cmd_integrate(o);
        else if (presentation->parsed()) res = cmd_presentation(o);
        else {
            res = cmd_corpus(o);
            stdout_only = true;
        }
        return emit(res, o, stdout_only);
    } catch (const io::SchemaError& e) {
        std::cerr << "schema error at " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
