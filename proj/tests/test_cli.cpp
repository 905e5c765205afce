#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hopfact/json_io.hpp"
#include "prop.hpp"

using namespace hopfact;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    Json doc() const { return Json::parse(out); }
};

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("hopfact_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_doc(const std::string& name, const Json& j) {
    const fs::path p = scratch(name);
    std::ofstream(p) << j.dump();
    return p;
}

CliRun cli(const std::string& args) {
    const std::string cmd = std::string(HOPFACT_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* f = ::popen(cmd.c_str(), "r");
    if (!f) return r;
    char buf[4096];
    size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
    const int status = ::pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

CliRun cli_doc(const std::string& sub, const Json& j, const std::string& flags = "") {
    std::string name = sub;
    for (char& ch : name)
        if (ch == ' ' || ch == '-') ch = '_';
    return cli(flags + " " + sub + " " + write_doc(name + ".json", j).string());
}

CatalogEntry dd_pi_omega2() {
    const CycNum w = cyc_root(3, 1);
    return catalog_dd_division(3, w.pow(2), CycNum(1), (CycNum(1) - w).inv());
}

}  // namespace

// ---- in-process encoding -------------------------------------------------------

TEST(JsonEncoding, CycNumRoundTrip) {
    prop::for_all(11, 60, [](prop::Gen& g) {
        const long n = std::vector<long>{1, 3, 4, 5, 8, 12}[static_cast<size_t>(g.integer(0, 5))];
        const CycNum z = g.cyc(n);
        const Json j = to_json(z);
        EXPECT_EQ(cyc_from_json(j), z);
        EXPECT_EQ(j["text"], z.str());
        EXPECT_EQ(j["conductor"], z.conductor());
    });
}

TEST(JsonEncoding, CycNumShorthands) {
    EXPECT_EQ(cyc_from_json(Json(-4)), CycNum(-4));
    EXPECT_EQ(cyc_from_json(Json("3/6")), CycNum::rational(1, 2));
    EXPECT_EQ(cyc_from_json(Json{{"zeta", {6, 1}}}), cyc_root(6, 1));
    EXPECT_THROW(cyc_from_json(Json("1/0")), SchemaError);
    EXPECT_THROW(cyc_from_json(Json("x")), SchemaError);
    EXPECT_THROW(cyc_from_json(Json{{"conductor", 0}, {"coeffs", Json::array()}}), SchemaError);
}

TEST(JsonEncoding, MatrixRoundTrip) {
    prop::for_all(12, 20, [](prop::Gen& g) {
        const ExactMatrix m = g.matrix(static_cast<size_t>(g.integer(1, 4)), static_cast<size_t>(g.integer(1, 4)), 3);
        EXPECT_EQ(matrix_from_json(to_json(m)), m);
    });
}

TEST(JsonEncoding, SchemaErrorsNameTheField) {
    try {
        matrix_from_json(Json{{1, 2}, {3}}, "/u/g");
        FAIL();
    } catch (const SchemaError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("/u/g/1:", 0), 0u) << e.what();
    }
    try {
        cyc_from_json(Json{{"conductor", 3}, {"coeffs", {"1", "a/b"}}}, "/x");
        FAIL();
    } catch (const SchemaError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("/x/coeffs/1:", 0), 0u) << e.what();
    }
}

TEST(JsonEncoding, PresentationRoundTrip) {
    const CycNum w3 = cyc_root(3, 1), w5 = cyc_root(5, 1);
    Datum custom;
    custom.group = AbGroup({4});
    custom.a = {custom.group.gen(0)};
    custom.chi = {Character(custom.group, {1})};
    custom.mu = {0};
    custom.lambda = {{CycNum(0)}};
    for (const auto& p : {taft(4, cyc_root(4, 1)), dd_taft(3, w3), uq_sl2(5, w5), book(3, w3, 2), p3_example(3, w3),
                          make_presentation(custom)}) {
        const HopfPresentation q = presentation_from_json(to_json(p));
        EXPECT_EQ(to_json(q), to_json(p)) << to_string(p.family);
    }
}

TEST(JsonEncoding, ActionRoundTripKeepsMatrices) {
    for (const auto& e : {dd_pi_omega2(), uqsl2_m2(5, CycNum(1), 2, CycNum(1)), catalog_p3(3, cyc_root(3, 1), 2, CycNum(1))}) {
        const InnerActionMap b = action_from_json(to_json(e.action));
        EXPECT_EQ(b.ug, e.action.ug) << e.label;
        EXPECT_EQ(b.ux, e.action.ux) << e.label;
    }
}

TEST(JsonEncoding, UnknownGeneratorAndMissingGroupPart) {
    Json j = to_json(dd_pi_omega2().action);
    Json bad = j;
    bad["u"]["Y"] = bad["u"]["x"];
    EXPECT_THROW(action_from_json(bad), SchemaError);
    bad = j;
    bad["u"].erase("G");
    EXPECT_THROW(action_from_json(bad), SchemaError);
    bad = j;
    bad["m"] = 2;
    EXPECT_THROW(action_from_json(bad), SchemaError);
}

TEST(JsonEncoding, CatalogRequestsMatchConstructors) {
    const auto es = catalog_from_request(Json{{"family", "taft_m3"}, {"params", {{"n", 5}}}});
    const auto ref = catalog_taft_m3(5, cyc_root(5, 1));
    ASSERT_EQ(es.size(), ref.size());
    for (size_t i = 0; i < es.size(); ++i) EXPECT_EQ(to_json(es[i]), to_json(ref[i]));
    EXPECT_THROW(catalog_from_request(Json{{"family", "nope"}}), SchemaError);
    EXPECT_THROW(catalog_from_request(Json{{"family", "p3"}, {"params", {{"p", "3"}}}}), SchemaError);
}

// ---- the binary ---------------------------------------------------------------------

TEST(Cli, VerifyDivisionCatalogPasses) {
    const CliRun r = cli_doc("verify", to_json(dd_pi_omega2()));
    EXPECT_EQ(r.code, 0) << r.out;
    const Json d = r.doc();
    EXPECT_EQ(d["verdict"], "pass");
    EXPECT_TRUE(d["agree"].get<bool>());
    EXPECT_FALSE(d["extracted"]["lambda_dd"].is_null());
}

TEST(Cli, VerifyCorruptedProductFailsWithScalarResidual) {
    // gamma delta = 1 instead of 1/(1 - w): scale u(X) by (1 - w)
    const CatalogEntry e = dd_pi_omega2();
    const CycNum w = cyc_root(3, 1);
    Json j = to_json(e.action);
    j["u"]["X"] = to_json((CycNum(1) - w) * e.action.ux[1]);
    const CliRun r = cli_doc("verify", j);
    EXPECT_EQ(r.code, 1) << r.out;
    const Json d = r.doc();
    EXPECT_EQ(d["verdict"], "fail");
    bool scalar_residual = false;
    for (const auto& f : d["route_b"]["failures"]) {
        const ExactMatrix res = matrix_from_json(f["residual"]);
        const auto s = res.scalar_value();
        if (s && !s->is_zero()) scalar_residual = true;
    }
    for (const auto& f : d["route_a"]["failures"]) {
        const ExactMatrix res = matrix_from_json(f["residual"]);
        const auto s = res.scalar_value();
        if (s && !s->is_zero()) scalar_residual = true;
    }
    EXPECT_TRUE(scalar_residual) << r.out.substr(0, 2000);
}

TEST(Cli, IsoOnConjugateCopiesEmitsWitness) {
    const Json req{{"family", "taft_nonsingular"}, {"params", {{"n", 3}, {"m", 3}, {"alpha", 1}}}};
    const CliRun a = cli_doc("catalog", req);
    const CliRun b = cli_doc("catalog --conjugate", req, "--seed 5");
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    const Json ja = a.doc()[0], jb = b.doc()[0];
    EXPECT_NE(ja["action"], jb["action"]);
    const CliRun r = cli_doc("iso", Json{{"a", ja}, {"b", jb}});
    EXPECT_EQ(r.code, 0) << r.out;
    const Json d = r.doc();
    ASSERT_TRUE(d["isomorphic"].get<bool>());
    ASSERT_FALSE(d["witness"].is_null());
    IsoWitness w{matrix_from_json(d["witness"]["c"]), {}, {}};
    for (const auto& l : d["witness"]["lambda"]) w.lambda.push_back(cyc_from_json(l));
    for (const auto& m : d["witness"]["mu"]) w.mu.push_back(cyc_from_json(m));
    EXPECT_TRUE(replay_witness(action_from_json(ja["action"]), action_from_json(jb["action"]), w));
}

TEST(Cli, IsoNonIsomorphicExitsOne) {
    const CycNum z = cyc_root(3, 1);
    const Json a = to_json(catalog_taft_nonsingular(3, z, 3, CycNum(1)));
    const Json b = to_json(catalog_taft_nonsingular(3, z, 3, z));
    const CliRun r = cli_doc("iso", Json{{"a", a}, {"b", b}});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.doc()["isomorphic"].get<bool>());
    EXPECT_TRUE(r.doc()["decided"].get<bool>());
}

TEST(Cli, SeedControlsConjugator) {
    const Json req{{"family", "p3"}, {"params", {{"p", 3}, {"ell", 1}}}};
    const CliRun a = cli_doc("catalog --conjugate", req, "--seed 3");
    const CliRun b = cli_doc("catalog --conjugate", req, "--seed 3");
    const CliRun c = cli_doc("catalog --conjugate", req, "--seed 4");
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    const CliRun d = cli_doc("catalog --conjugate", req);
    const CliRun e = cli_doc("catalog --conjugate", req, "--seed 1");
    EXPECT_EQ(d.out, e.out);
}

TEST(Cli, EveryEmittedCatalogReverifies) {
    const std::vector<Json> reqs = {
        {{"family", "taft_m3"}, {"params", {{"n", 4}}}},
        {{"family", "taft_nonsingular"}, {"params", {{"n", 2}, {"m", 4}, {"alpha", {{"zeta", {4, 1}}}}}}},
        {{"family", "p3"}, {"params", {{"p", 3}, {"ell", 2}, {"alpha", 0}}}},
        {{"family", "dd_division"}, {"params", {{"n", 3}, {"pi", {{"zeta", {3, 2}}}}}}},
        {{"family", "dt2_nilpotent"}, {"params", {{"r", 2}, {"tau", -1}}}},
        {{"family", "dt2_nonnilpotent"}, {"params", {{"r", 2}, {"s", 1}, {"t", 0}, {"big_xi", {{1, 0}}}}}},
        {{"family", "dd_elementary"},
         {"params", {{"n", 2}, {"r", 1}, {"phi", {0, 0}}, {"seed", {{1}}}, {"lambda", 1}, {"alpha", 1}}}},
        {{"family", "uqsl2_m2"}, {"params", {{"n", 5}, {"k", 3}, {"lambda", 2}}}},
        {{"family", "uqsl2_lift"}, {"params", {{"n", 3}, {"k", 2}}}},
        {{"family", "rank1_division"},
         {"params",
          {{"presentation", {{"family", "custom"}, {"datum", {{"group", {2, 2}}, {"a", {{1, 0}}}, {"chi", {{1, 1}}},
                                                              {"mu", {0}}, {"lambda", {{0}}}}}}},
           {"support", {2, 2}},
           {"beta", {{0, 1}, {1, 0}}}}}},
    };
    for (const auto& req : reqs) {
        const CliRun c = cli_doc("catalog", req);
        ASSERT_EQ(c.code, 0) << req.dump() << "\n" << c.out;
        for (const auto& e : c.doc()) {
            const CliRun v = cli_doc("verify", e);
            EXPECT_EQ(v.code, 0) << e["family"] << " " << e["label"];
            EXPECT_EQ(v.doc()["verdict"], "pass");
        }
    }
}

TEST(Cli, EnumerateIsByteIdentical) {
    const Json req{{"catalogs", {{{"family", "taft_m3"}, {"params", {{"n", 5}}}}}}};
    const CliRun a = cli_doc("enumerate", req);
    const CliRun b = cli_doc("enumerate", req);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Json d = a.doc();
    EXPECT_EQ(d["entries"].size(), 8u);
    EXPECT_EQ(d["verdicts"].size(), 8u);
    EXPECT_EQ(d["verdicts"][0].size(), 8u);
    size_t covered = 0;
    for (const auto& c : d["classes"]) covered += c.size();
    EXPECT_EQ(covered, 8u);
}

TEST(Cli, ActMatchesLibrary) {
    const CatalogEntry e = catalog_p3(3, cyc_root(3, 1), 1, CycNum(1));
    const ExactMatrix m = ExactMatrix::unit(3, 0, 1);
    const CliRun r = cli_doc("act", Json{{"action", to_json(e)}, {"word", "x h"}, {"matrix", to_json(m)}});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(matrix_from_json(r.doc()["result"]), act(e.action, "x h", m));
}

TEST(Cli, GradingReportsKind) {
    const CliRun d = cli_doc("grading", to_json(dd_pi_omega2()));
    ASSERT_EQ(d.code, 0) << d.out;
    EXPECT_EQ(d.doc()["classification"]["kind"], "division");
    EXPECT_EQ(d.doc()["classification"]["ell"], 3);
    const CliRun t = cli_doc("grading", to_json(catalog_taft_nonsingular(2, CycNum(-1), 4, CycNum(1))));
    ASSERT_EQ(t.code, 0) << t.out;
    EXPECT_EQ(t.doc()["classification"]["kind"], "elementary");
}

TEST(Cli, MalformedInputExitsTwo) {
    Json j = to_json(dd_pi_omega2().action);
    j["u"]["g"][1][1] = "1/0";
    CliRun r = cli_doc("verify", j);
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.doc()["error"], "SchemaError");
    EXPECT_EQ(r.doc()["message"].get<std::string>().rfind("/u/g/1/1:", 0), 0u) << r.out;

    r = cli("verify '{\"m\": 3'");
    EXPECT_EQ(r.code, 2);
    r = cli("verify /nonexistent/file.json");
    EXPECT_EQ(r.code, 2);
    r = cli("frobnicate");
    EXPECT_EQ(r.code, 2);
    r = cli_doc("catalog", Json{{"family", "taft_m3"}, {"params", {{"n", "five"}}}});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.doc()["message"].get<std::string>().rfind("/params/n:", 0), 0u) << r.out;
}

TEST(Cli, RefusedParametersExitOne) {
    const CliRun r = cli_doc("catalog", Json{{"family", "dd_division"}, {"params", {{"n", 3}, {"gamma", 1}, {"delta", 1}}}});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.doc()["error"], "ConstraintViolated");
    const CliRun s = cli_doc("catalog", Json{{"family", "dd_elementary"},
                                          {"params", {{"n", 2}, {"r", 2}, {"phi", {0, 0}}, {"seed", {{1, 0}, {0, 2}}},
                                                      {"lambda", 0}, {"alpha", 1}}}});
    EXPECT_EQ(s.code, 1) << s.out;
    EXPECT_EQ(s.doc()["error"], "RecurrenceInconsistent");
    EXPECT_FALSE(matrix_from_json(s.doc()["residual"]).is_zero());
}

TEST(Cli, OutputFlagWritesFile) {
    const fs::path out = scratch("out.json");
    const CliRun r = cli("-o " + out.string() + " catalog '{\"family\":\"p3\",\"params\":{\"p\":3,\"ell\":1}}'");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(out);
    EXPECT_EQ(Json::parse(f).size(), 1u);
}
