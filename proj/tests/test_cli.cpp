#include "equik/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using equik::cli::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(EQUIK_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("equik_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST(Cli, ThomRanksOfS5) {
    CliRun r = run("ranks thom --sym 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"K0\":2,\"K1\":1}\n");
}

TEST(Cli, PartitionStats) {
    CliRun r = run("partitions --n 6 --stats");
    ASSERT_EQ(r.code, 0);
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["P"], 11);
    EXPECT_EQ(doc["p"], 2);
    EXPECT_EQ(doc["i"], 2);
    EXPECT_EQ(doc["j"], 4);
}

TEST(Cli, LargeIntegersAreStrings) {
    json doc = json::parse(run("partitions --n 500 --stats").out);
    EXPECT_TRUE(doc["P"].is_string());
    EXPECT_EQ(doc["P"], "2300165032574323995027");
}

TEST(Cli, PartitionList) {
    json doc = json::parse(run("partitions --n 5 --kind distinct").out);
    EXPECT_EQ(doc["partitions"], (json{"5", "1+4", "2+3"}));
    EXPECT_EQ(run("partitions --n 60 --verify-upto 60").code, 0);
}

TEST(Cli, ClassesFromFileAndCsv) {
    std::string file =
        write_temp("s3.json", R"({"n": 3, "generators": [{"perm": [2,1,3], "signs": [1,1,1]}, {"perm": [1,3,2]}]})");
    json doc = json::parse(run("classes --group " + file).out);
    EXPECT_EQ(doc["order"], 6);
    EXPECT_EQ(doc["class_count"], 3);
    EXPECT_EQ(doc["classes"][0]["rep"]["perm"], (json{1, 2, 3}));
    CliRun csv = run("--format csv classes --sym 3");
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "index,rep,size,det,cycle_type");
    json ext = json::parse(run("classes --sym 3 --extend").out);
    EXPECT_EQ(ext["class_count"], 6);
    EXPECT_EQ(ext["n"], 4);
}

TEST(Cli, CommutatorSign) {
    std::string file = write_temp(
        "signs2.json", R"({"n": 2, "generators": [{"perm": [1,2], "signs": [-1,1]}, {"perm": [1,2], "signs": [1,-1]}]})");
    // Canonical order: (-1,-1), (-1,1), (1,-1), (1,1).
    EXPECT_EQ(json::parse(run("commutator --group " + file + " --g 1 --h 2").out)["sign"], -1);
    EXPECT_EQ(json::parse(run("commutator --group " + file + " --g 1 --h 1").out)["sign"], 1);
    EXPECT_EQ(run("commutator --sym 3 --g 1 --h 2").code, 2);
    EXPECT_EQ(run("commutator --group " + file + " --g 9 --h 0").code, 2);
}

TEST(Cli, SchurReport) {
    CliRun r = run("schur --sym 4 --oracle --ranks");
    ASSERT_EQ(r.code, 0);
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["decomposed_count"], 3);
    EXPECT_EQ(doc["cover_class_count"], 8);
    EXPECT_EQ(doc["cover_identity_holds"], true);
    EXPECT_EQ(doc["R_V"], 3);
    EXPECT_EQ(doc["R_V1"], 3);
}

TEST(Cli, Report) {
    json doc = json::parse(run("report --sym 4").out);
    EXPECT_EQ(doc["C"], 5);
    EXPECT_EQ(doc["K0_proj"], 2 * 5 - 2);
    EXPECT_EQ(doc["projective_balance"], true);
    EXPECT_EQ(doc["euler_characteristic"], true);
}

TEST(Cli, LambdaTables) {
    json c = json::parse(run("lambda c --L 2").out);
    EXPECT_EQ(c["entries"].size(), 3u);
    json psi = json::parse(run("lambda psi --i 2").out);
    EXPECT_EQ(psi["terms"].size(), 2u);
    json theta = json::parse(run("lambda theta --k 2").out);
    EXPECT_EQ(theta["rows"][0]["2"], -2);
    json omega = json::parse(run("lambda omega --k 2").out);
    EXPECT_EQ(omega["rows"][0]["2"], "-1/2");
    json u = json::parse(run("lambda u --L 1").out);
    EXPECT_EQ(u["entries"][0]["value"], 1);
    json m = json::parse(run("lambda module --n 3 --I 1,1,1 --S 3").out);
    EXPECT_EQ(m["coefficients"].size(), 2u);
    EXPECT_EQ(m["degree"], 1);
}

TEST(Cli, MalformedInputExitsTwo) {
    EXPECT_EQ(run("classes").code, 2);
    EXPECT_EQ(run("classes --sym 0").code, 2);
    EXPECT_EQ(run("classes --sym 3 --group x.json").code, 2);
    EXPECT_EQ(run("classes --group /nonexistent.json").code, 2);
    EXPECT_EQ(run("classes --group " + write_temp("bad.json", "{\"n\": 2, \"generators\": [{\"perm\": [1,1]}]}")).code,
              2);
    EXPECT_EQ(run("classes --group " + write_temp("junk.json", "not json")).code, 2);
    EXPECT_EQ(run("lambda module --n 2 --I 1,1 --S 1,1").code, 2);
    EXPECT_EQ(run("lambda c --L 2,,3").code, 2);
    EXPECT_EQ(run("lambda c --L 9").code, 2);
    EXPECT_EQ(run("--max-degree 10 lambda c --L 1").code, 0);
    EXPECT_EQ(run("nonsense").code, 2);
    EXPECT_EQ(run("--max-group 100 classes --sym 6").code, 2);
}

TEST(Cli, VerifySmall) {
    CliRun r = run("verify --sym-upto 3");
    EXPECT_EQ(r.code, 0);
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["passed"], true);
    EXPECT_GE(doc["checks"].size(), 12u);
}

TEST(Render, CsvFallsBackToPairs) {
    json doc{{"K0", 2}, {"K1", 1}};
    EXPECT_EQ(equik::cli::render(doc, equik::cli::Format::csv), "key,value\nK0,2\nK1,1\n");
    EXPECT_EQ(equik::cli::render(doc, equik::cli::Format::json), "{\"K0\":2,\"K1\":1}\n");
}
