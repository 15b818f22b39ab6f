// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "rackgraph/corpus.hpp"
#include "rackgraph/rackgraph.hpp"

using namespace rackgraph;
namespace fs = std::filesystem;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass) detail = why;
        pass = false;
    }
};

template <class... Args>
std::string cat(Args&&... a)
{
    return rackgraph::detail::cat(std::forward<Args>(a)...);
}

std::vector<std::pair<std::string, racks::AugmentedRack>> racks_up_to(std::size_t max_x)
{
    std::vector<std::pair<std::string, racks::AugmentedRack>> out;
    for (auto& [n, a] : corpus::augmented())
        if (a.size() <= max_x) out.emplace_back(n, a);
    for (auto& [n, r] : corpus::bare_racks())
        if (r.size() <= max_x) out.emplace_back("bare_" + n, racks::inner_group(r).augmented);
    return out;
}

// 1 ----------------------------------------------------------------------

template <class Check>
void mutate_table(const racks::Table& t, std::size_t values, std::mt19937& rng, const std::string& what, Check check,
                  Result& res, std::size_t& count)
{
    if (values < 2 || t.empty() || t[0].empty()) return;
    std::uniform_int_distribution<std::size_t> row(0, t.size() - 1), col(0, t[0].size() - 1), shift(1, values - 1);
    for (int k = 0; k < 50; ++k) {
        auto m = t;
        const auto i = row(rng), j = col(rng);
        m[i][j] = (m[i][j] + shift(rng)) % values;
        ++count;
        if (check(m)) res.fail(cat(what, ": mutation at (", i, ",", j, ") undetected"));
    }
}

Result axiom_suites()
{
    Result res;
    std::mt19937 rng(2024);
    std::size_t structures = 0, mutations = 0;
    std::vector<std::pair<std::string, racks::FiniteRack>> rs;
    for (auto& [n, r] : corpus::bare_racks()) rs.emplace_back(n, r);
    for (std::size_t n = 3; n <= 6; ++n) rs.emplace_back(cat("dihedral_", n), racks::dihedral_quandle(n));
    for (auto& [n, a] : corpus::augmented()) {
        ++structures;
        if (!racks::validate_augmented(a).ok()) res.fail(n + " fails validate_augmented");
        rs.emplace_back(n + "_derived", a.derived_rack());
        auto still_valid = [&](const racks::Table& act) {
            try {
                return racks::validate_augmented(racks::AugmentedRack(a.group(), act, a.pi_map())).ok();
            } catch (const Error&) {
                return false;
            }
        };
        mutate_table(a.action_table(), a.size(), rng, n + " action", still_valid, res, mutations);
    }
    for (auto& [n, r] : rs) {
        ++structures;
        if (!racks::validate_rack(r).ok()) res.fail(n + " fails validate_rack");
        auto still_valid = [](const racks::Table& op) {
            try {
                return racks::validate_rack(racks::FiniteRack(op)).ok();
            } catch (const Error&) {
                return false;
            }
        };
        mutate_table(r.table(), r.size(), rng, n, still_valid, res, mutations);
    }
    if (res.pass) res.detail = cat(structures, " structures valid, ", mutations, "/", mutations, " mutations detected");
    return res;
}

// 2 ----------------------------------------------------------------------

Result roundtrips()
{
    Result res;
    std::size_t exact = 0, relabeled = 0;
    auto all = racks_up_to(1000);
    for (auto& [n, a] : all) {
        if (!(graphlike::graph_to_rack(graphlike::rack_to_graph(a)) == a)) res.fail(n + ": graph_to_rack∘rack_to_graph ≠ id");
        ++exact;
    }
    std::mt19937 rng(77);
    for (int k = 0; k < 20; ++k) {
        const auto& a = all[static_cast<std::size_t>(k) % all.size()].second;
        auto q = graphlike::rack_to_graph(a);
        std::vector<racks::Index> perm(q.arrow_count());
        std::iota(perm.begin(), perm.end(), racks::Index{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        auto moved = graphlike::relabel_arrows(q, perm);
        auto iso = graphlike::roundtrip_graph_iso(moved);
        auto back = graphlike::rack_to_graph(graphlike::graph_to_rack(moved));
        if (!graphlike::verify_isomorphism(moved, back, iso).ok()) res.fail(cat("relabeled graph ", k, ": isomorphism fails"));
        ++relabeled;
    }
    if (res.pass) res.detail = cat(exact, " exact roundtrips, ", relabeled, " verified isomorphisms");
    return res;
}

// 3, 4, 5, 6 ---------------------------------------------------------------

struct Computed {
    std::string name;
    cubical::ChainComplex c;
};

std::vector<Computed>& complexes()
{
    static std::vector<Computed> all = [] {
        std::vector<Computed> out;
        for (auto& [n, a] : racks_up_to(6)) {
            out.push_back({n + " BQ", cubical::bq_chain_complex(a, 4)});
            out.push_back({n + " EQ", cubical::eq_chain_complex(a, 4)});
        }
        return out;
    }();
    return all;
}

Result boundary_squares()
{
    Result res;
    std::size_t maps = 0;
    for (auto& [name, c] : complexes()) {
        for (std::size_t n = 2; n <= c.max_degree; ++n) {
            // ∂_{n−1} ∘ ∂_n on sparse columns, exact integers
            const auto& lower = c.boundaries[n - 1];
            std::map<std::size_t, exactla::BigInt> acc;
            for (std::size_t j = 0; j < c.boundaries[n].size() && res.pass; ++j) {
                acc.clear();
                for (const auto& [k, a] : c.boundaries[n][j])
                    for (const auto& [i, b] : lower[k]) acc[i] += exactla::BigInt(a) * b;
                for (const auto& [i, v] : acc)
                    if (v != 0) {
                        res.fail(cat(name, ": ∂∂ ≠ 0 in degree ", n, " on cell ", j));
                        break;
                    }
            }
            ++maps;
        }
    }
    if (res.pass) res.detail = cat(complexes().size(), " complexes up to N = 4, ", maps, " composites zero");
    return res;
}

Result trivial_homology()
{
    Result res;
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto h = cubical::homology(cubical::bq_chain_complex(racks::trivial_augmented(k), 4));
        std::size_t expect = 1;
        for (std::size_t n = 0; n <= 3; ++n, expect *= k) {
            const auto& d = h.degrees.at(n);
            if (d.betti != expect || !d.torsion.empty())
                res.fail(cat("T", k, " H", n, ": betti ", d.betti, " torsion ", d.torsion.size(), ", expected Z^", expect));
        }
    }
    if (res.pass) res.detail = "H_n(BQ(T_k)) = Z^(k^n) for k = 1,2,3 and n = 0..3";
    return res;
}

Result low_degree_homology()
{
    Result res;
    std::size_t count = 0;
    for (auto& [n, a] : racks_up_to(1000)) {
        const auto h = cubical::homology(cubical::bq_chain_complex(a, 2));
        const auto orbits = racks::inner_orbits(a.derived_rack()).size();
        if (h.degrees[0].betti != 1 || !h.degrees[0].torsion.empty()) res.fail(n + ": H0 ≠ Z");
        if (h.degrees[1].betti != orbits || !h.degrees[1].torsion.empty())
            res.fail(cat(n, ": H1 has rank ", h.degrees[1].betti, " but ", orbits, " inner orbits"));
        ++count;
    }
    if (res.pass) res.detail = cat(count, " racks: H0 = Z, H1 = Z^(inner orbits)");
    return res;
}

Result betti_cross_validation()
{
    Result res;
    std::size_t degrees = 0;
    auto check = [&](const std::string& name, const cubical::ChainComplex& c) {
        const auto h = cubical::homology(c);
        const auto q = cubical::rational_betti(c);
        if (q.size() != h.degrees.size()) res.fail(name + ": degree count differs");
        for (std::size_t n = 0; n < std::min(q.size(), h.degrees.size()); ++n, ++degrees)
            if (q[n] != h.degrees[n].betti) res.fail(cat(name, " degree ", n, ": rational ", q[n], " vs SNF ", h.degrees[n].betti));
    };
    for (auto& [name, c] : complexes()) check(name, c);
    for (auto& [n, a] : racks_up_to(1000))
        if (a.size() > 6) check(n + " BQ", cubical::bq_chain_complex(a, 3));
    if (res.pass) res.detail = cat(degrees, " degrees agree");
    return res;
}

// 7, 8, 9 ------------------------------------------------------------------

template <class F>
void hopf_for(const F& f, const std::string& name, const graphlike::GroupLikeGraph& q, Result& res)
{
    const auto rep = lmhopf::verify_hopf(lmhopf::build_lm_hopf(q, f));
    if (!rep.ok()) res.fail(cat(name, " over ", f.name(), ": ", rep.violations.front().identity, " ", rep.violations.front().witness));
}

Result hopf_identities()
{
    Result res;
    std::size_t count = 0;
    for (auto& [n, a] : corpus::augmented()) {
        const auto q = graphlike::rack_to_graph(a);
        hopf_for(exactla::RationalField{}, n, q, res);
        hopf_for(exactla::PrimeField(2), n, q, res);
        hopf_for(exactla::PrimeField(3), n, q, res);
        count += 3;
    }
    if (res.pass) res.detail = cat(count, " graph/field pairs, every identity exact");
    return res;
}

template <class F>
void lemma_for(const F& f, const std::string& name, const racks::AugmentedRack& a, Result& res, std::size_t& levels)
{
    const auto q = graphlike::rack_to_graph(a);
    const auto b = lmhopf::build_lm_hopf(q, f);
    const auto fl = lmhopf::augmentation_filtration(b, 3);
    const auto depth = fl.depth();
    const auto uc = graphlike::unit_component(q);
    const auto rel = lmhopf::relative_levels(b, depth + 1);
    for (std::size_t n = 0; n <= depth; ++n, ++levels) {
        const auto img = exactla::map_subspace(f, b.phi, fl.A(n));
        const auto& target = uc.is_connected ? fl.G(n + 1) : rel[n + 1];
        if (img != target)
            res.fail(cat(name, " over ", f.name(), " n=", n, ": dim φ(I^n(A)) = ", img.dim(), " vs ", target.dim()));
    }
    if (!uc.is_connected) {
        // first relative level: kernel of k[G] → k[G/G₀]
        std::vector<exactla::FieldVector<F>> gens;
        const auto& G = a.group();
        for (racks::Index g = 0; g < G.order(); ++g)
            for (auto h : uc.vertices) {
                auto v = exactla::zero_vector(f, G.order());
                v[G.mul(g, h)] += f.one();
                v[g] -= f.one();
                gens.push_back(v);
            }
        const auto ker = exactla::Subspace<F>::span(f, G.order(), gens);
        if (exactla::map_subspace(f, b.phi, fl.A(0)) != ker) res.fail(name + ": φ(k[A]) is not the relative ideal");
    }
}

Result connected_lemma()
{
    Result res;
    std::size_t levels = 0;
    bool saw_disconnected = false;
    for (auto& [n, a] : corpus::augmented()) {
        saw_disconnected |= !graphlike::unit_component(graphlike::rack_to_graph(a)).is_connected;
        lemma_for(exactla::PrimeField(2), n, a, res, levels);
        lemma_for(exactla::PrimeField(3), n, a, res, levels);
    }
    if (!saw_disconnected) res.fail("no disconnected sample in the corpus");
    if (res.pass) res.detail = cat(levels, " levels, subspace equality at each");
    return res;
}

Result graded_dimensions()
{
    Result res;
    exactla::PrimeField f2(2);
    std::size_t degrees = 0;
    for (auto& [n, a] : corpus::augmented()) {
        const auto b = lmhopf::build_lm_hopf(graphlike::rack_to_graph(a), f2);
        const auto fl = lmhopf::augmentation_filtration(b, 2);
        const auto cm = lmhopf::coinvariant_module(a, f2, 2);
        const std::size_t top = std::max({fl.stable_A, fl.stable_G, cm.stable_X}) + 1;
        const auto ga = lmhopf::graded_dimensions(fl.levels_A, top), gg = lmhopf::graded_dimensions(fl.levels_G, top);
        const auto gx = lmhopf::graded_dimensions(cm.levels_X, top);
        for (std::size_t d = 0; d <= top; ++d, ++degrees) {
            std::size_t sum = 0;
            for (std::size_t p = 0; p <= d; ++p) sum += gg[p] * gx[d - p];
            if (ga[d] != sum) res.fail(cat(n, " degree ", d, ": ", ga[d], " vs ", sum));
        }
        const auto rep = lmhopf::verify_graded_structure(b, fl, cm);
        if (!rep.ok()) res.fail(n + ": " + rep.violations.front().identity);
    }
    const auto toy = corpus::c2_toy();
    const auto b = lmhopf::build_lm_hopf(graphlike::rack_to_graph(toy), f2);
    const auto dims = lmhopf::graded_dimensions(lmhopf::augmentation_filtration(b, 3).levels_A, 2);
    if (dims != std::vector<std::size_t>{1, 1, 0}) res.fail("C2 toy graded dims differ from (1,1,0)");
    if (res.pass) res.detail = cat(degrees, " degrees match; C2 toy (1,1,0); Δ₁' raises filtration");
    return res;
}

// 10, 11 -------------------------------------------------------------------

Result lie_algebras()
{
    Result res;
    using namespace lmlie;
    for (auto& [n, l] : corpus::lm_lie()) {
        if (!verify_leibniz(leibniz_bracket(l)).ok()) res.fail(n + ": Leibniz identity");
        for (auto conv : {SignConvention::graded_koszul, SignConvention::plain}) {
            const auto t = e_functor(l, 1, conv);
            if (t.dims() != std::vector<std::size_t>{l.dim_g, l.dim_m} || !verify_e_truncation(t, l).ok())
                res.fail(n + ": degree ≤ 1 part differs from the input (" + convention_name(conv) + ")");
        }
        const auto t3 = e_functor(l, 3);
        const auto rep = verify_e_truncation(t3, l);
        if (!rep.ok()) res.fail(n + " D = 3: " + rep.violations.front().identity + " " + rep.violations.front().witness);
    }
    if (leibniz_bracket(nilpotent_lm()).is_antisymmetric()) res.fail("nilpotent example is antisymmetric");
    if (e_functor(abelian_lm(1), 3).dims() != std::vector<std::size_t>{0, 1, 1, 0}) res.fail("one-generator dims");
    if (res.pass) res.detail = "Leibniz, degree ≤ 1, d² = 0 and derivation law to D = 3; one generator (0,1,1,0)";
    return res;
}

Result linear_lie_rack()
{
    Result res;
    const auto r = liegraph::integrate(liegraph::so3_adjoint());
    const auto num = liegraph::verify_rack_numeric(r, 100, 1, 1e-9);
    if (num.self_distributivity >= 1e-9) res.fail(cat("self-distributivity residual ", num.self_distributivity));
    if (num.equivariance >= 1e-9) res.fail(cat("equivariance residual ", num.equivariance));
    if (num.pi_at_zero > 1e-14) res.fail(cat("π(0) off by ", num.pi_at_zero));
    const auto der = liegraph::derivative_check(r, 1e-3);
    if (der.ratio < 3 || der.ratio > 5) res.fail(cat("derivative ratio ", der.ratio));
    if (res.pass)
        res.detail = cat("residuals ", num.self_distributivity, ", ", num.equivariance, "; ratio ", der.ratio);
    return res;
}

// 12 -----------------------------------------------------------------------

std::pair<int, std::string> run(const std::string& cmd)
{
    std::string out;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (p == nullptr) return {-1, out};
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result golden_files()
{
    Result res;
    const fs::path golden(RACKGRAPH_GOLDEN);
    const fs::path source = fs::path(RACKGRAPH_CORPUS).parent_path();
    std::ifstream cases(golden.parent_path() / "golden_cases.cmake");
    const std::regex line("\"([A-Za-z0-9_]+)\\|([^\"]+)\"");
    std::size_t count = 0;
    for (std::string s; std::getline(cases, s);) {
        std::smatch m;
        if (!std::regex_search(s, m, line)) continue;
        std::string args = m[2];
        const std::string dir = (source / "corpus").string() + "/";
        for (std::size_t pos = 0; (pos = args.find("corpus/", pos)) != std::string::npos; pos += dir.size())
            args.replace(pos, 7, dir);
        const std::string cmd = std::string(RACKGRAPH_CLI) + " " + args;
        const auto a = run(cmd), b = run(cmd);
        std::ifstream g(golden / (std::string(m[1]) + ".json"));
        std::stringstream ss;
        ss << g.rdbuf();
        if (!g) res.fail(std::string(m[1]) + ": golden file missing");
        else if (a.second != b.second) res.fail(std::string(m[1]) + ": runs differ");
        else if (a.second != ss.str()) res.fail(std::string(m[1]) + ": output differs from golden");
        ++count;
    }
    if (count != 10) res.fail(cat(count, " golden cases found, expected 10"));
    if (res.pass) res.detail = cat(count, " commands bit-identical across runs and with the golden files");
    return res;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"axiom suites and mutation detection", axiom_suites},
        {"rack/graph roundtrips", roundtrips},
        {"boundary squares to zero", boundary_squares},
        {"trivial rack homology", trivial_homology},
        {"H0 and H1 of BQ", low_degree_homology},
        {"rational and integral Betti numbers agree", betti_cross_validation},
        {"Hopf identities over Q, F2, F3", hopf_identities},
        {"image of phi is the augmentation power", connected_lemma},
        {"graded dimension identity", graded_dimensions},
        {"LM Lie algebras and E-functor", lie_algebras},
        {"integrated so(3) rack", linear_lie_rack},
        {"CLI golden files", golden_files},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all &= r.pass;
        std::printf("%s %2zu %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    r.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
