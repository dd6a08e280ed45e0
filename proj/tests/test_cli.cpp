#include <doctest.h>

#include "hurwitz/insulin.hpp"
#include "hurwitz/json_io.hpp"
#include "support/process.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

const std::string kCli = HURWITZ_KIT_CLI;
const std::string kA7 = HURWITZ_KIT_SOURCE_DIR "/data/insulin_a7.json";
const std::string kCorrupted = HURWITZ_KIT_SOURCE_DIR "/tests/data/insulin_a7_corrupted.json";

RunResult cli(const std::string& args, const std::string& env = {}) { return run_cli(kCli, args, env); }

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("certify exit codes") {
    const ScratchDir tmp;
    RunResult r = cli("certify --kind metzler --mode exact --input " + kA7);
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "hurwitz");
    CHECK(j["pivots"].size() == 7);
    CHECK(j["pivots"][0] == "-111/1000");
    CHECK(j["oracles"] == Json{{"mmatrix", true}, {"routh", true}});

    const auto one = tmp.file("one.json", R"({"n":1,"mode":"exact","entries":[["1"]]})");
    CHECK(cli("certify --kind symmetric --input " + q(one)).exit_code == 1);

    const auto nonmetzler = tmp.file("nm.json", R"({"n":2,"mode":"exact","entries":[["-1","-1"],["0","-1"]]})");
    r = cli("certify --kind metzler --input " + q(nonmetzler));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("NotMetzler") != std::string::npos);

    const auto marginal = tmp.file("marg.json", R"({"n":2,"mode":"float","entries":[[-1,0],[0,1e-12]]})");
    CHECK(cli("certify --kind symmetric --mode float --input " + q(marginal)).exit_code == 3);

    CHECK(cli("certify --kind symmetric --mode exact --tol 1e-9 --input " + q(one)).exit_code == 2);
    CHECK(cli("certify --kind symmetric --mode float --tol 0 --input " + q(one)).exit_code == 2);
    CHECK(cli("certify --kind symmetric --input /nonexistent.json").exit_code == 2);
    CHECK(cli("certify --kind diagonal --input " + q(one)).exit_code == 2);
    CHECK(cli("").exit_code == 2);
    CHECK(cli("--help").exit_code == 0);

    const auto out = tmp / "cert.json";
    CHECK(cli("certify --kind metzler --input " + kA7 + " --out " + q(out)).exit_code == 0);
    CHECK(Json::parse(read_file(out))["verdict"] == "hurwitz");
}

TEST_CASE("reduce reproduces B6") {
    const RunResult r = cli("reduce --input " + kA7);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == canonical_dump(to_json(insulin_b6())) + "\n");
    CHECK(Json::parse(r.out)["entries"][5][5] == "-23158/13875");
}

TEST_CASE("lift commands") {
    const ScratchDir tmp;
    const auto b6 = tmp.file("b6.json", canonical_dump(to_json(insulin_b6())));
    const auto nominal = tmp.file("p.json", R"({"h":["0","0","0","0","0","91/200"],"k":["0","0","0","0","0","1/20"],"d":"-111/1000"})");
    RunResult r = cli("lift metzler --base " + q(b6) + " --params " + q(nominal));
    CHECK(r.exit_code == 0);
    CHECK(r.out == canonical_dump(to_json(insulin_a7())) + "\n");

    const auto bad = tmp.file("bad.json", R"({"h":["0","1000000","0","0","0","0"],"k":["0","0","0","0","0","1"],"d":"-1"})");
    r = cli("lift metzler --base " + q(b6) + " --params " + q(bad));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find(R"("i":2,"j":6)") != std::string::npos);

    const auto base = tmp.file("s.json", R"({"n":2,"mode":"exact","entries":[["-2","1"],["1","-3/2"]]})");
    const auto params = tmp.file("sp.json", R"({"k_row":["1","1"],"d":"-2"})");
    r = cli("lift symmetric --base " + q(base) + " --params " + q(params));
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out)["entries"] == Json::parse(R"([["-5/2","1/2","1"],["1/2","-2","1"],["1","1","-2"]])"));
}

TEST_CASE("chart forward, inverse and pipe roundtrip") {
    const ScratchDir tmp;
    const auto diag = tmp.file("d.json", R"({"n":2,"mode":"float","entries":[[-2,0],[0,-3]]})");
    RunResult r = cli("chart forward --input " + q(diag));
    REQUIRE(r.exit_code == 0);
    const Json p = Json::parse(r.out);
    CHECK(p["base"]["entries"] == Json::parse("[[-2]]"));
    CHECK(p["k"][1].get<double>() == doctest::Approx(1.0986122886681098).epsilon(1e-15));

    const auto a = tmp.file("a.json", R"({"n":3,"mode":"float","entries":[[-4,1,0.5],[1,-3,0.25],[0.5,0.25,-2]]})");
    r = run_cli("/bin/sh", "-c \"'" + kCli + "' chart forward --input " + q(a) + " | '" + kCli +
                               "' chart inverse --input -\"");
    REQUIRE(r.exit_code == 0);
    const Matrix back = matrix_from_json(Json::parse(r.out));
    const Matrix orig = matrix_from_json(Json::parse(read_file(a)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(back(i, j).value() == doctest::Approx(orig(i, j).value()).epsilon(1e-9));

    const auto unstable = tmp.file("u.json", R"({"n":2,"mode":"float","entries":[[-1,2],[2,-1]]})");
    CHECK(cli("chart forward --input " + q(unstable)).exit_code == 2);
}

TEST_CASE("sample, seeds and reproducibility") {
    const ScratchDir tmp;
    const auto cfg = tmp.file("cfg.json", R"({"center":{"n":3,"mode":"float","entries":[[-5,0,0],[0,-5,0],[0,0,-5]]},"radius":0.1,"count":100})");
    const RunResult a = cli("sample --config " + q(cfg) + " --seed 5");
    REQUIRE(a.exit_code == 0);
    CHECK(Json::parse(a.out)["accepted"] == 100);
    CHECK(cli("sample --config " + q(cfg) + " --seed 5").out == a.out);
    CHECK(cli("sample --config " + q(cfg) + " --seed 6").out != a.out);
    CHECK(cli("sample --config " + q(cfg) + " --seed 6", "HURWITZ_KIT_SEED=5").out == a.out);
    CHECK(cli("sample --config " + q(cfg), "HURWITZ_KIT_SEED=abc").exit_code == 2);

    const auto empty = tmp.file("e.json", R"({"center":{"n":2,"mode":"float","entries":[[1,0],[0,1]]},"radius":0.1,"count":5})");
    CHECK(cli("sample --config " + q(empty)).exit_code == 2);
}

TEST_CASE("equilibrium and simulate") {
    const ScratchDir tmp;
    const auto sys = tmp.file("sys.json", R"({"A":{"n":2,"mode":"exact","entries":[["-1","0"],["0","-2"]]},"b":["1","4"]})");
    RunResult r = cli("equilibrium --system " + q(sys));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"residual\":0,\"strictly_positive\":true,\"x_bar\":[\"1\",\"2\"]}\n");

    const auto unstable = tmp.file("us.json", R"({"A":{"n":1,"mode":"exact","entries":[["1"]]},"b":["1"]})");
    CHECK(cli("equilibrium --system " + q(unstable)).exit_code == 2);

    const auto scalar = tmp.file("sc.json", R"({"A":{"n":1,"mode":"float","entries":[[-1]]},"b":[1]})");
    const auto x0 = tmp.file("x0.json", "[0]");
    r = cli("simulate --system " + q(scalar) + " --x0 " + q(x0) + " --dt 0.5 --steps 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("t,x1\n0,0\n0.5,", 0) == 0);
    CHECK(cli("simulate --system " + q(scalar) + " --x0 " + q(x0) + " --dt 0 --steps 2").exit_code == 2);
}

TEST_CASE("insulin-demo") {
    RunResult r = cli("insulin-demo --family-count 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stage 1 reduce: PASS B6(6,6) = -23158/13875") != std::string::npos);
    CHECK(r.out.find("stage 2 nominal-recovery: PASS") != std::string::npos);
    CHECK(r.out.find("stage 3 family: PASS members=20 stability_failures=0") != std::string::npos);
    CHECK(r.out.find("stage 4 equilibrium: PASS") != std::string::npos);
    CHECK(cli("insulin-demo --family-count 20").out == r.out);

    r = cli("insulin-demo --family-count 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stage 3 family: SKIPPED") != std::string::npos);
    CHECK(r.out.find("stage 4 equilibrium: PASS") != std::string::npos);

    r = cli("insulin-demo --family-count 5 --data " + kCorrupted);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("stage 1 (reduce)") != std::string::npos);
}
