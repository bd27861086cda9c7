#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(WVG_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_game(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("wvg_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST(Cli, ComputeJson)
{
    const auto r = run("compute " + write_game("ex.txt", "6; 5, 4, 1\n"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["swings"], nlohmann::json({"3", "1", "1"}));
    EXPECT_EQ(j["banzhaf"], nlohmann::json({"3/5", "1/5", "1/5"}));
    EXPECT_EQ(j["prob_banzhaf"], nlohmann::json({"3/4", "1/4", "1/4"}));
    EXPECT_EQ(j["total_swings"], "5");
    EXPECT_EQ(j["winning_count"], "3");
    EXPECT_EQ(j["coleman_a"], "3/8");
    EXPECT_EQ(j["backend"], "k_value");
    EXPECT_TRUE(j["classes"].is_object());
    EXPECT_FALSE(j.contains("approximate"));
}

TEST(Cli, ComputeFromStdinWithCrosscheck)
{
    const auto r = run("compute - --crosscheck --backend brute < " + write_game("red.txt", "19; 1, 5, 4, 14, 12"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["backend"], "brute");
    EXPECT_TRUE(j.contains("crosscheck"));
    EXPECT_EQ(j["swings"][0], "1");
}

TEST(Cli, ComputeCsvAndTable)
{
    const auto path = write_game("ub.json", R"({"quota": 22, "weights": [1, 2, 4, 9, 18]})");
    auto r = run("compute " + path + " --format csv --decimal 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("player,weight,swings,banzhaf,prob_banzhaf,banzhaf_approx"), std::string::npos);
    EXPECT_NE(r.out.find("5,18,12,3/5,3/4,0.600,0.750"), std::string::npos);
    EXPECT_NE(r.out.find("1,1,0,0/1,0/1"), std::string::npos);
    r = run("compute " + path + " --format table");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("backend: unbalanced"), std::string::npos);
    EXPECT_NE(r.out.find("coleman A: 3/8"), std::string::npos);
}

TEST(Cli, DecimalIsMarkedApproximate)
{
    const auto r = run("compute " + write_game("ex2.txt", "6; 5, 4, 1") + " --decimal 4");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["approximate"]["banzhaf"][0], "0.6000");
    EXPECT_EQ(j["banzhaf"][0], "3/5");
}

TEST(Cli, InvalidInputExitsTwo)
{
    EXPECT_EQ(run("compute " + write_game("bad.txt", "6; 5, x")).code, 2);
    EXPECT_EQ(run("compute " + write_game("noq.txt", "40; 5, 4")).code, 2);
    EXPECT_EQ(run("compute /nonexistent/game.txt").code, 2);
    EXPECT_EQ(run("compute " + write_game("ex3.txt", "6; 5, 4, 1") + " --backend nope").code, 2);
    EXPECT_EQ(run("compute " + write_game("ex4.txt", "6; 5, 4, 1") + " --format xml").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, NoBackendExitsThree)
{
    EXPECT_EQ(run("compute " + write_game("forced.txt", "5; 3, 3, 1, 1") + " --backend unbalanced").code, 3);
    std::string text = "10000000000000000000000000;";
    for (int i = 0; i < 30; ++i)
        text += (i ? ", " : " ") + std::to_string(1000000000 + i * 7919) + "000000000000000";
    EXPECT_EQ(run("compute " + write_game("huge.txt", text) + " --max-cost 1000").code, 3);
}

TEST(Cli, Classify)
{
    const auto r = run("classify " + write_game("cls.txt", "22; 18, 9, 4, 2, 1"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["classes"]["min_unbalance_order"], 1);
    EXPECT_EQ(j["classes"]["max_geometric_ratio"], "2/1");
    EXPECT_EQ(j["plan"]["backend"], "unbalanced");
    EXPECT_TRUE(j["plan"]["rationale"].is_array());
}

TEST(Cli, ClassifyReportsCallerDictator)
{
    const auto r = run("classify " + write_game("dict.txt", "5; 1, 3, 6"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["classes"]["dictator_index"], 3);
}

TEST(Cli, Gen)
{
    auto r = run("gen 3game --m 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "5; 3, 3, 1, 1\n");
    r = run("gen reduction --z 1,2 --t 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "19; 1, 5, 4, 14, 12\n");
    r = run("gen --format json random --n 6 --shape unbalanced --seed 3 --max-weight 1000");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["weights"].size(), 6u);
    EXPECT_EQ(run("gen random --n 6 --seed 9").out, run("gen random --n 6 --seed 9").out);
    EXPECT_EQ(run("gen reduction --z 1,2 --t 9").code, 2);
    EXPECT_EQ(run("gen random --n 3 --shape spiral").code, 2);
}

TEST(Cli, GenOutputFeedsCompute)
{
    const auto r = run("gen random --n 8 --seed 4 --shape k_value:3 --max-weight 20");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(run("compute " + write_game("gen.txt", r.out) + " --crosscheck").code, 0);
}

TEST(Cli, Bench)
{
    const auto r = run("bench --suite k_value");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("suite,backend,n,size,terms,cost_estimate,wall_ms", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
    EXPECT_EQ(run("bench --suite nope").code, 2);
}
