#include "cli.hpp"

#include "zpd/json_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace zpd;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result zpd_run(std::vector<std::string> args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

json::Json out_json(const Result &r) { return json::parse(r.out); }

} // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(zpd_run({}).code, cli::kUsage);
    EXPECT_EQ(zpd_run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(zpd_run({"david"}).code, cli::kUsage);
    EXPECT_EQ(zpd_run({"classify", "--p", "3", "--d", "2", "--mode", "bogus"}).code, cli::kUsage);
    EXPECT_EQ(zpd_run({"--help"}).code, cli::kOk);
}

TEST(Cli, InputErrors) {
    const auto bad = zpd_run({"analyze"}, "{\"p\":3,\n\"d\":");
    EXPECT_EQ(bad.code, cli::kInvalidInput);
    EXPECT_NE(bad.err.find("line"), std::string::npos);
    const auto range = zpd_run({"analyze"}, R"({"p":3,"d":2,"elems":[[0,0],[1,5]]})");
    EXPECT_EQ(range.code, cli::kInvalidInput);
    EXPECT_NE(range.err.find("set.elems[1][1]"), std::string::npos) << range.err;
    EXPECT_EQ(zpd_run({"david", "--p", "2"}).code, cli::kInvalidInput);
    EXPECT_EQ(zpd_run({"david", "--p", "9"}).code, cli::kInvalidInput);
    EXPECT_EQ(zpd_run({"classify", "--p", "5", "--d", "2", "--mode", "exhaustive"}).code, cli::kInvalidInput);
    EXPECT_EQ(zpd_run({"analyze", "-i", "/nonexistent/file.json"}).code, cli::kInvalidInput);
}

TEST(Cli, WeakPdVerdicts) {
    const auto no = zpd_run({"weak-pd"}, R"({"p":3,"d":2,"elems":[[0,0],[1,0]]})");
    ASSERT_EQ(no.code, cli::kOk) << no.err;
    EXPECT_EQ(out_json(no)["feasible"], false);

    const auto yes = zpd_run({"weak-pd", "--via", "tiling"}, R"({"p":3,"d":2,"elems":[[0,0],[1,0],[2,0]]})");
    ASSERT_EQ(yes.code, cli::kOk) << yes.err;
    const auto j = out_json(yes);
    EXPECT_EQ(j["feasible"], true);
    EXPECT_EQ(j["provenance"], "from-tiling");

    const auto four = zpd_run({"four-tuple"}, yes.out);
    ASSERT_EQ(four.code, cli::kOk) << four.err;
    const auto verified = zpd_run({"verify-tuple"}, four.out);
    ASSERT_EQ(verified.code, cli::kOk);
    EXPECT_EQ(out_json(verified)["passed"], true);
    EXPECT_EQ(out_json(verified)["mass"], "3");
}

TEST(Cli, Analyze) {
    const auto r = zpd_run({"analyze"}, R"({"p":3,"d":2,"elems":[[0,0],[1,0],[0,1]]})");
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto j = out_json(r);
    EXPECT_EQ(j["tiles"], true);
    EXPECT_EQ(j["spectral"], true);
    EXPECT_EQ(j["weak_pd_feasible"], true);

    const auto tc = zpd_run({"tile-check"}, R"({"A":{"p":3,"d":2,"elems":[[0,0],[1,0],[2,0]]},
                                                "B":{"p":3,"d":2,"elems":[[0,0],[0,1],[0,2]]}})");
    ASSERT_EQ(tc.code, cli::kOk) << tc.err;
    EXPECT_EQ(out_json(tc)["tiling"], true);
}

TEST(Cli, TrianglePipeline) {
    const auto t = zpd_run({"david", "--p", "5"});
    ASSERT_EQ(t.code, cli::kOk) << t.err;
    const auto v = zpd_run({"verify-tuple"}, t.out);
    ASSERT_EQ(v.code, cli::kOk) << v.err;
    EXPECT_EQ(out_json(v)["passed"], true);
    EXPECT_EQ(out_json(v)["mass"], "175/11");

    const auto d = zpd_run({"dispersive"}, t.out);
    ASSERT_EQ(d.code, cli::kOk) << d.err;
    const auto dj = out_json(d);
    for (const char *k : {"f", "h", "fhat", "hhat"}) EXPECT_EQ(dj[k]["dispersive"], true);
    EXPECT_EQ(dj["case"], "dispersive");

    const auto f = json::parse(t.out)["f"].dump();
    const auto dec = zpd_run({"decompose"}, f);
    ASSERT_EQ(dec.code, cli::kOk) << dec.err;
    EXPECT_EQ(out_json(dec)["w"], "0");

    const auto human = zpd_run({"verify-tuple", "--format", "human"}, t.out);
    ASSERT_EQ(human.code, cli::kOk);
    EXPECT_NE(human.out.find("passed"), std::string::npos);
}

TEST(Cli, TamperedTupleFailsAxiomTwo) {
    auto j = json::parse(zpd_run({"david", "--p", "5"}).out);
    j["h"]["lines"][0]["value"] = "-1";
    const auto v = zpd_run({"verify-tuple"}, j.dump());
    ASSERT_EQ(v.code, cli::kOk);
    const auto r = out_json(v);
    EXPECT_EQ(r["passed"], false);
    EXPECT_EQ(r["axioms"]["ii"]["holds"], false);
}

TEST(Cli, NearPencilAndExclusion) {
    const auto np = zpd_run({"near-pencil", "--p", "5", "--k", "4"});
    ASSERT_EQ(np.code, cli::kOk) << np.err;
    EXPECT_EQ(zpd_run({"near-pencil", "--p", "5", "--k", "9"}).code, cli::kInvalidInput);

    const auto ex = zpd_run({"david-p3-exclusion"});
    ASSERT_EQ(ex.code, cli::kOk) << ex.err;
    EXPECT_EQ(out_json(ex)["excluded"], true);
    EXPECT_EQ(out_json(zpd_run({"david-p3-exclusion", "--p", "2"}))["vacuous"], true);
}

TEST(Cli, ClassifyEmitsRecordsThenSummary) {
    const auto r = zpd_run({"classify", "--p", "3", "--d", "1", "--mode", "exhaustive", "--jobs", "1"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    std::istringstream lines(r.out);
    std::string line, last;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        last = line;
        ++n;
    }
    EXPECT_EQ(n, 8u);
    const auto summary = json::parse(last)["summary"];
    EXPECT_EQ(summary["pd_flat_confirmed"], true);
    EXPECT_EQ(summary["feasible_sizes"], json::Json({1, 3}));

    const auto orbit = zpd_run({"classify", "--p", "5", "--d", "2", "--sizes", "1,5,25", "--jobs", "1", "--format", "human"});
    ASSERT_EQ(orbit.code, cli::kOk) << orbit.err;
    EXPECT_NE(orbit.out.find("pd_flat_confirmed"), std::string::npos);
    EXPECT_EQ(zpd_run({"classify", "--p", "3", "--d", "2", "--sizes", "2..x"}).code, cli::kInvalidInput);
}
