#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "kronlab/json_io.hpp"

using namespace kronlab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "kronlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("kronlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
        unsetenv("KRONLAB_BACKEND");
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& body) {
        auto p = dir_ / name;
        std::ofstream(p) << body;
        return p.string();
    }

    std::filesystem::path dir_;
};

} // namespace

TEST_F(Cli, KronOfColumnAndRow) {
    auto a = file("a.json", R"({"rows":2,"cols":1,"data":[1,2]})");
    auto b = file("b.json", R"({"rows":1,"cols":2,"data":[3,4]})");
    auto r = run({"kron", a, b});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"rows\":2,\"cols\":2,\"data\":[3,4,6,8]}\n");
    EXPECT_EQ(run({"kron", a, b, "--lazy"}).out, r.out);
    auto m = json_io::matrix_from<Rational>(json_io::parse_text(r.out));
    EXPECT_EQ(m, DenseMatrix<Rational>::from_rows({{3, 4}, {6, 8}}));
}

TEST_F(Cli, KronLabels) {
    auto a = file("a.json", R"({"rows":2,"cols":1,"data":[1,2]})");
    auto r = run({"kron", a, a, "--labels"});
    EXPECT_NE(r.out.find("\"rowLabels\":[[1,1],[1,2],[2,1],[2,2]]"), std::string::npos) << r.out;
}

TEST_F(Cli, LazyAndDenseMatvecAgree) {
    auto a = file("a.json", R"([[1,2],[3,4]])");
    auto b = file("b.json", R"([["1/2",0,1],[0,1,"-1"]])");
    auto x = file("x.json", "[1,2,3,4,5,6]");
    auto lazy = run({"kron", a, b, "--lazy", "--matvec", x});
    auto dense = run({"kron", a, b, "--matvec", x});
    auto direct = run({"matvec", a, b, "--x", x});
    EXPECT_EQ(lazy.code, 0) << lazy.err;
    EXPECT_EQ(lazy.out, dense.out);
    EXPECT_EQ(lazy.out, direct.out);
}

TEST_F(Cli, BlocksExampleIsByteExact) {
    std::ifstream in(KRONLAB_GOLDEN_DIR "/rwsclmslex.txt");
    std::stringstream want;
    want << in.rdbuf();
    auto r = run({"blocks", "--example", "rwsclmslex"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, want.str());
}

TEST_F(Cli, BlocksFromPartitions) {
    auto r = run({"blocks", "--rows", "2", "--cols", "3", "--row-part", "1|2", "--col-part", "1,3|2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "  1 2 3\n"
                     "1 a b a\n"
                     "2 c d c\n");
}

TEST_F(Cli, VerifyReportsWitness) {
    auto nu = file("nu.json", R"({"shape":[2,2],"ambientDim":4,"values":[[1,0,0,0],[0,1,0,0],[0,1,0,0],[0,0,0,1]]})");
    auto r = run({"verify", nu});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"isTensorProduct\":false,\"failedCriterion\":\"span\",\"spanOk\":false,\"dimensionOk\":true,"
                     "\"rank\":3,\"witness\":[{\"index\":[1,2],\"coeff\":-1},{\"index\":[2,1],\"coeff\":1}]}\n");
}

TEST_F(Cli, FactorMatmulAndArgs) {
    auto a = file("a.json", R"([[1,2,3],[4,5,6]])");
    auto b = file("b.json", R"([[1,0],[0,1],[1,1]])");
    EXPECT_EQ(run({"factor", "--matmul", a, b}).out, "{\"rows\":2,\"cols\":2,\"data\":[4,5,10,11]}\n");
    auto phi = file("phi.json", R"({"shape":[2,2],"targetDim":1,"values":[[1],[2],[3],["1/2"]]})");
    auto xs = file("xs.json", R"([[1,2],[3,4]])");
    auto r = run({"factor", phi, "--args", xs});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"agree\":true"), std::string::npos) << r.out;
}

TEST_F(Cli, InnerOnGaussianTensors) {
    auto a = file("a.json", R"({"shape":[2],"coeffs":["1+i","2"]})");
    auto b = file("b.json", R"({"shape":[2],"coeffs":["i","1"]})");
    auto r = run({"--backend", "gaussian", "inner", a, b});
    EXPECT_EQ(r.code, 0) << r.err;
    // (1+i)·conj(i) + 2·1 = 3 - i
    EXPECT_EQ(r.out, "{\"value\":\"3-i\",\"isInnerProduct\":true}\n");
}

TEST_F(Cli, BackendFromEnvironment) {
    auto a = file("a.json", R"({"shape":[2],"coeffs":["1+i","2"]})");
    setenv("KRONLAB_BACKEND", "gaussian", 1);
    auto r = run({"inner", a, a});
    unsetenv("KRONLAB_BACKEND");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"value\":6,\"isInnerProduct\":true}\n");
    // The flag wins over the environment.
    setenv("KRONLAB_BACKEND", "gaussian", 1);
    auto q = run({"--backend", "rational", "inner", a, a});
    unsetenv("KRONLAB_BACKEND");
    EXPECT_NE(q.code, 0);
}

TEST_F(Cli, DecomposeDims) {
    auto r = run({"decompose", "--shape", "2,4,2,4", "--part", "1|2", "--part", "1,2,3,4", "--part", "1|2", "--part",
                  "1,2,3,4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"shape\":[2,4,2,4],\"blockShape\":[2,1,2,1],\"summands\":["
                     "{\"alpha\":[1,1,1,1],\"dim\":16},{\"alpha\":[1,1,2,1],\"dim\":16},"
                     "{\"alpha\":[2,1,1,1],\"dim\":16},{\"alpha\":[2,1,2,1],\"dim\":16}],\"totalDim\":64}\n");
}

TEST_F(Cli, PartitionsAndCounts) {
    auto r = run({"partitions", "--n", "3"});
    EXPECT_EQ(r.out, "{{1,2,3}}\n{{1,2},{3}}\n{{1,3},{2}}\n{{1},{2,3}}\n{{1},{2},{3}}\n");
    auto dot = run({"partitions", "--n", "4", "--hasse", "--dot"});
    EXPECT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out.rfind("digraph refinement {\n", 0), 0u);
    EXPECT_EQ(run({"counts", "--n", "3", "--p", "5"}).out, "SNC 10\nWNC 35\nINJ 60\nPER 0\n");
    EXPECT_EQ(run({"counts", "--n", "2", "--p", "3", "--list", "snc"}).out, "1 2\n1 3\n2 3\n");
}

TEST_F(Cli, Gamma) {
    EXPECT_EQ(run({"gamma", "--shape", "2,3", "--rank", "2,1"}).out, "{\"shape\":[2,3],\"rank\":4}\n");
    EXPECT_EQ(run({"gamma", "--shape", "3,4", "--unrank", "12"}).out, "{\"shape\":[3,4],\"index\":[3,4]}\n");
    EXPECT_EQ(run({"gamma", "--shape", "2,2"}).out, "{\"shape\":[2,2],\"indices\":[[1,1],[1,2],[2,1],[2,2]]}\n");
}

TEST_F(Cli, OracleSuite) {
    auto r = run({"oracle", "--suite", "tensor.pure", "--seed", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("PASS tensor.pure 50/50\n", 0), 0u) << r.out;
}

TEST_F(Cli, ErrorsCarryModuleMessage) {
    auto bad = file("bad.json", "{not json");
    auto r = run({"verify", bad});
    EXPECT_NE(r.code, 0);
    EXPECT_EQ(r.err.rfind("error: json: ", 0), 0u) << r.err;

    auto a = file("a.json", R"([[1,2],[3,4]])");
    auto x = file("x.json", "[1,2,3]");
    auto s = run({"matvec", a, "--x", x});
    EXPECT_NE(s.code, 0);
    EXPECT_NE(s.err.find("kronecker"), std::string::npos) << s.err;

    auto p = run({"decompose", "--shape", "2,2", "--part", "1|2"});
    EXPECT_NE(p.code, 0);
    EXPECT_NE(p.err.find("partition"), std::string::npos) << p.err;

    EXPECT_NE(run({"frobnicate"}).code, 0);
    EXPECT_NE(run({"partitions", "--n", "7", "--hasse"}).code, 0);
    EXPECT_NE(run({"--backend", "octonion", "counts", "--n", "1", "--p", "1"}).code, 0);
}

TEST_F(Cli, DeterministicOutput) {
    auto a = file("a.json", R"([["1/3",2],[3,"-4/7"]])");
    auto first = run({"kron", a, a, a});
    auto second = run({"kron", a, a, a});
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(run({"oracle", "--all", "--seed", "7"}).out, run({"oracle", "--all", "--seed", "7"}).out);
}
