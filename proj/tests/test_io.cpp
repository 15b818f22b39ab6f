#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rackgraph/corpus.hpp"
#include "rackgraph/io/schema.hpp"

namespace fs = std::filesystem;
using namespace rackgraph;
using io::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    const std::string cmd = std::string(RACKGRAPH_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string corpus_file(const std::string& name) { return std::string(RACKGRAPH_CORPUS) + "/" + name; }

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Scratch : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() /
              ("rackgraph_io_" + std::to_string(::getpid()) + "_" +
               ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text)
    {
        const auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir;
};

}  // namespace

TEST(Corpus, FilesMatchGeneratedDocuments)
{
    const auto docs = corpus::documents();
    EXPECT_GE(docs.size(), 40u);
    for (const auto& [name, doc] : docs) EXPECT_EQ(slurp(corpus_file(name)), io::canonical_dump(doc)) << name;
}

TEST(Corpus, DocumentsReadBackToTheSameObjects)
{
    for (const auto& [name, doc] : corpus::documents()) {
        const auto kind = io::document_kind(doc);
        json again;
        switch (kind) {
        case io::Kind::group: again = io::to_json(io::read_group(doc)); break;
        case io::Kind::rack: again = io::to_json(io::read_rack(doc)); break;
        case io::Kind::augmented: again = io::to_json(io::read_augmented(doc)); break;
        case io::Kind::graph: again = io::to_json(io::read_graph(doc)); break;
        case io::Kind::lm_lie: again = io::to_json(io::read_lm_lie(doc)); break;
        case io::Kind::matrix_lm: again = io::to_json(io::read_matrix_lm(doc)); break;
        }
        EXPECT_EQ(io::canonical_dump(io::with_header(again, kind)), io::canonical_dump(doc)) << name;
    }
}

TEST(Schema, Rejections)
{
    auto rack = json::parse(slurp(corpus_file("rack_R3.json")));
    auto bad_version = rack;
    bad_version["schema"] = 2;
    try {
        io::document_kind(bad_version);
        FAIL() << "expected a schema error";
    } catch (const io::SchemaError& e) {
        EXPECT_EQ(e.where(), "/schema");
    }
    auto out_of_range = rack;
    out_of_range["op"][1][2] = 3;
    EXPECT_THROW(io::read_rack(out_of_range), io::SchemaError);
    auto short_row = rack;
    short_row["op"][0].erase(0);
    EXPECT_THROW(io::read_rack(short_row), io::SchemaError);
    auto kind = rack;
    kind["kind"] = "quandle";
    EXPECT_THROW(io::document_kind(kind), io::SchemaError);
    EXPECT_THROW(io::document_kind(json::array()), io::SchemaError);

    auto lie = json::parse(slurp(corpus_file("lie_nilpotent.json")));
    lie["f"] = "not a matrix";
    EXPECT_THROW(io::read_lm_lie(lie), io::SchemaError);
}

TEST(Schema, RationalsAndBigIntegers)
{
    EXPECT_EQ(io::detail::as_rational(json("3/6"), ""), lmlie::Rational(1, 2));
    EXPECT_EQ(io::detail::as_rational(json(-4), ""), lmlie::Rational(-4));
    EXPECT_THROW(io::detail::as_rational(json("1/0"), ""), io::SchemaError);
    EXPECT_THROW(io::detail::as_rational(json(0.5), ""), io::SchemaError);
    EXPECT_EQ(io::detail::rational_json(lmlie::Rational(-2, 4)), json("-1/2"));
    EXPECT_EQ(io::detail::rational_json(lmlie::Rational(7)), json(7));
    exactla::BigInt huge = 1;
    for (int i = 0; i < 80; ++i) huge *= 2;
    EXPECT_EQ(io::detail::bigint_json(huge), json("1208925819614629174706176"));
    EXPECT_EQ(io::detail::bigint_json(exactla::BigInt(12)), json(12));
}

TEST_F(Scratch, CliExitCodes)
{
    EXPECT_EQ(cli("validate " + corpus_file("rack_R3.json")).code, 0);
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("validate " + (dir / "missing.json").string()).code, 2);
    EXPECT_EQ(cli("validate " + write("broken.json", "{ not json")).code, 2);
    EXPECT_EQ(cli("validate " + write("v2.json", R"({"schema": 2, "kind": "rack", "size": 1, "op": [[0]]})")).code, 2);
    EXPECT_EQ(cli("homology " + corpus_file("rack_R3.json") + " --complex xq").code, 2);
    EXPECT_EQ(cli("hopf " + corpus_file("aug_toy_C2.json") + " --field f4").code, 1);
    EXPECT_EQ(cli("dgla " + corpus_file("rack_R3.json")).code, 2);
}

TEST_F(Scratch, CorruptedRackFailsValidation)
{
    auto doc = json::parse(slurp(corpus_file("rack_R3.json")));
    // 0^1 = 2 in R3; making it 0 breaks bijectivity of the translation by 1
    doc["op"][0][1] = 0;
    const auto r = cli("validate " + write("bad.json", io::canonical_dump(doc)));
    EXPECT_EQ(r.code, 1);
    const auto rep = json::parse(r.out);
    EXPECT_FALSE(rep["report"]["ok"].get<bool>());
    EXPECT_GT(rep["report"]["violation_count"].get<std::size_t>(), 0u);
}

TEST_F(Scratch, CorruptedAugmentationFailsValidation)
{
    auto doc = json::parse(slurp(corpus_file("aug_conj_S3.json")));
    doc["pi"][1] = doc["pi"][2];
    const auto r = cli("validate " + write("bad.json", io::canonical_dump(doc)));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("equivariance"), std::string::npos);
}

TEST_F(Scratch, ConvertRoundtripIsByteIdentical)
{
    for (const char* name : {"aug_toy_C2.json", "aug_conj_S3.json", "aug_class_C4_u2.json", "aug_inner_R4.json"}) {
        const auto g = cli("convert " + corpus_file(name));
        ASSERT_EQ(g.code, 0) << name;
        EXPECT_EQ(json::parse(g.out)["kind"], "graph");
        const auto back = cli("convert " + write("graph.json", g.out));
        ASSERT_EQ(back.code, 0) << name;
        EXPECT_EQ(back.out, slurp(corpus_file(name))) << name;
    }
}

TEST_F(Scratch, OutFileEqualsStdout)
{
    const auto path = (dir / "report.json").string();
    const auto direct = cli("presentation " + corpus_file("rack_R3.json"));
    EXPECT_EQ(cli("presentation " + corpus_file("rack_R3.json") + " --out " + path).code, 0);
    EXPECT_EQ(slurp(path), direct.out);
}

TEST_F(Scratch, GoldenComparison)
{
    const auto golden = (dir / "g.json").string();
    const std::string args = "homology " + corpus_file("rack_T2.json") + " --max-degree 2 --golden " + golden;
    EXPECT_EQ(cli(args).code, 1);
    EXPECT_EQ(cli(args + " --golden-update").code, 0);
    EXPECT_EQ(cli(args).code, 0);
    write("g.json", slurp(golden) + " ");
    EXPECT_EQ(cli(args).code, 1);
}

TEST_F(Scratch, CorpusCommandReproducesCorpusDirectory)
{
    ASSERT_EQ(cli("corpus --out " + (dir / "c").string()).code, 0);
    std::size_t count = 0;
    for (const auto& e : fs::directory_iterator(dir / "c")) {
        ++count;
        EXPECT_EQ(slurp(e.path()), slurp(corpus_file(e.path().filename().string()))) << e.path();
    }
    EXPECT_EQ(count, corpus::documents().size());
}

TEST(Cli, HomologyOfR3)
{
    const auto r = cli("homology " + corpus_file("rack_R3.json") + " --complex bq --max-degree 4");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["ranks"], json({1, 3, 9, 27, 81}));
    const auto& h = j["homology"];
    ASSERT_EQ(h.size(), 4u);
    for (std::size_t n = 0; n < 4; ++n) EXPECT_EQ(h[n]["betti"], 1) << n;
    EXPECT_EQ(h[3]["torsion"], json({3}));
    EXPECT_TRUE(j["betti_agree"].get<bool>());
}

TEST(Cli, HopfReportOnToy)
{
    const auto r = cli("hopf " + corpus_file("aug_toy_C2.json") + " --field f2 --max-degree 3");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["field"], "f2");
    EXPECT_TRUE(j["hopf"]["ok"].get<bool>());
    EXPECT_EQ(j["filtration"]["dims_A"][1], 1);
    EXPECT_EQ(j["coinvariants"]["graded_dims"][0], 1);
}

TEST(Cli, GraphInputIsAccepted)
{
    const auto r = cli("homology " + corpus_file("graph_toy_C2.json") + " --max-degree 2");
    EXPECT_EQ(r.code, 0);
    const auto v = cli("validate " + corpus_file("graph_conj_S3.json"));
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(json::parse(v.out)["kind"], "graph");
}

TEST(Cli, DglaAndIntegrate)
{
    const auto d = cli("dgla " + corpus_file("lie_one_generator.json") + " --max-degree 3");
    ASSERT_EQ(d.code, 0);
    EXPECT_EQ(json::parse(d.out)["dims"], json({0, 1, 1, 0}));
    const auto i = cli("integrate " + corpus_file("mat_so3_matrix.json") + " --samples 20");
    ASSERT_EQ(i.code, 0);
    const auto j = json::parse(i.out);
    EXPECT_LT(j["numeric"]["self_distributivity"].get<double>(), 1e-9);
    EXPECT_TRUE(j["derivative"]["ok"].get<bool>());
    const auto v = cli("validate " + corpus_file("lie_nilpotent.json"));
    EXPECT_EQ(v.code, 0);
    EXPECT_FALSE(json::parse(v.out)["leibniz_antisymmetric"].get<bool>());
}

TEST(Cli, RepeatedRunsAreIdentical)
{
    for (const char* args : {"homology corpus/aug_conj_S3.json --complex eq --max-degree 3",
                             "hopf corpus/aug_class_C4_u2.json --field f3", "presentation corpus/rack_R4.json"}) {
        std::string a = args;
        a.replace(a.find("corpus/"), 7, std::string(RACKGRAPH_CORPUS) + "/");
        EXPECT_EQ(cli(a).out, cli(a).out) << args;
    }
}
