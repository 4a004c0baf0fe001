/*********************************************************************
 * Software License Agreement (BSD License)
 *
 *  Copyright (c) 2026, The grrt Contributors
 *  All rights reserved.
 *
 *  Redistribution and use in source and binary forms, with or without
 *  modification, are permitted provided that the following conditions
 *  are met:
 *
 *   * Redistributions of source code must retain the above copyright
 *     notice, this list of conditions and the following disclaimer.
 *   * Redistributions in binary form must reproduce the above
 *     copyright notice, this list of conditions and the following
 *     disclaimer in the documentation and/or other materials provided
 *     with the distribution.
 *   * Neither the names of the copyright holders nor the names of its
 *     contributors may be used to endorse or promote products derived
 *     from this software without specific prior written permission.
 *
 *  THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
 *  "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
 *  LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS
 *  FOR A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE
 *  COPYRIGHT OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT,
 *  INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING,
 *  BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
 *  LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
 *  CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
 *  LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN
 *  ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
 *  POSSIBILITY OF SUCH DAMAGE.
 *********************************************************************/

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <vector>

#include "doctest.h"
#include "grrt/bench.hpp"
#include "grrt/error.hpp"
#include "json.hpp"

using namespace grrt;
namespace fs = std::filesystem;

namespace
{
    SuiteConfig quickConfig()
    {
        SuiteConfig c;
        c.planners = {std::string(kPlannerGreedy), std::string(kPlannerInformed)};
        c.problems = {ProblemSpec{ProblemKind::NarrowPassage, {2}, {}}};
        c.trials = 5;
        c.timeLimit = 0.05;
        c.virtualSecondsPerIteration = 1e-4;
        c.seedBase = 100;
        c.verifyScale = 0.0;
        c.gridPoints = 20;
        return c;
    }

    // Coverage of [X_(l), X_(u)] for the median of n continuous samples:
    // P(l <= B <= u - 1) with B ~ Binomial(n, 1/2), by Pascal's triangle.
    long double coverage(std::size_t n, std::size_t l, std::size_t u)
    {
        std::vector<long double> row{1.0L};
        for (std::size_t i = 0; i < n; ++i)
        {
            std::vector<long double> next(row.size() + 1, 0.0L);
            for (std::size_t k = 0; k < row.size(); ++k)
            {
                next[k] += row[k] / 2;
                next[k + 1] += row[k] / 2;
            }
            row = std::move(next);
        }
        long double p = 0;
        for (std::size_t k = l; k + 1 <= u; ++k)
            p += row[k];
        return p;
    }

    TrialRecord record(std::string planner, std::vector<TrialEvent> events, Cost si, Cost sf)
    {
        return {std::move(planner), "empty", 2, 1, std::move(events), si, sf};
    }

    struct TempDir
    {
        fs::path path;
        TempDir()
        {
            path = fs::temp_directory_path() / ("grrt_bench_" + std::to_string(std::rand()) + "_" +
                                                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }
    };
}  // namespace

TEST_CASE("suite config parsing")
{
    const SuiteConfig c = parseSuiteConfig(R"({
        "format": 1,
        "planners": ["grrt_star", "rrt_connect"],
        "problems": [{"kind": "double_enclosure", "dims": [2, 4], "params": {"gap_width": 0.05}}],
        "trials": 3, "time_limit_s": 2.5, "seed_base": 7, "epsilon": 0.5,
        "planner": {"delay_rewiring": false, "greedy_scope": "all_bridges"}
    })");
    CHECK(c.planners.size() == 2);
    CHECK((c.problems.at(0).kind == ProblemKind::DoubleEnclosure));
    CHECK(c.problems[0].dims == std::vector<int>{2, 4});
    CHECK(c.problems[0].params.gapWidth == 0.05);
    CHECK(c.trials == 3);
    CHECK(c.timeLimit == 2.5);
    CHECK(c.seedBase == 7);
    CHECK(c.epsilon == 0.5);
    CHECK_FALSE(c.planner.delayRewiring);
    CHECK((c.planner.greedyScope == GreedyScope::AllBridges));

    const SuiteConfig back = parseSuiteConfig(suiteConfigToJson(c));
    CHECK(back.planners == c.planners);
    CHECK(back.problems[0].dims == c.problems[0].dims);
    CHECK(back.epsilon == c.epsilon);
    CHECK((back.planner.greedyScope == GreedyScope::AllBridges));

    CHECK_THROWS_AS(parseSuiteConfig(R"({"trails": 3})"), ParseError);
    CHECK_THROWS_AS(parseSuiteConfig(R"({"planner": {"etta": 1}})"), ParseError);
    CHECK_THROWS_AS(parseSuiteConfig(R"({"planners": ["rrt_sharp"]})"), InvalidArgument);
    CHECK_THROWS_AS(parseSuiteConfig(R"({"problems": [{"kind": "maze"}]})"), ParseError);
    CHECK_THROWS_AS(parseSuiteConfig(R"({"trials": 0})"), InvalidArgument);
    CHECK_THROWS_AS(parseSuiteConfig("[1, 2"), ParseError);
}

TEST_CASE("problem params")
{
    const ProblemParams p = parseProblemParams(R"({"gap_width": 0.04, "wall_top": 0.3, "grid_count": 3})");
    CHECK(p.gapWidth == 0.04);
    CHECK(p.wallTop == 0.3);
    CHECK(p.gridCount == 3);
    CHECK_THROWS_AS(parseProblemParams(R"({"gap": 0.04})"), ParseError);
}

TEST_CASE("seed from the environment")
{
    SuiteConfig c;
    c.seedBase = 5;
    ::unsetenv("BENCH_SEED");
    applyEnvironment(c);
    CHECK(c.seedBase == 5);
    ::setenv("BENCH_SEED", "1234", 1);
    applyEnvironment(c);
    CHECK(c.seedBase == 1234);
    ::setenv("BENCH_SEED", "12x", 1);
    CHECK_THROWS_AS(applyEnvironment(c), InvalidArgument);
    ::unsetenv("BENCH_SEED");
}

TEST_CASE("suite cardinality, order and determinism")
{
    SuiteConfig c = quickConfig();
    const auto records = runSuite(c);
    REQUIRE(records.size() == 10);
    for (std::size_t i = 0; i < records.size(); ++i)
    {
        CHECK(records[i].planner == c.planners[i / 5]);
        CHECK(records[i].seed == 100 + i % 5);
        REQUIRE_FALSE(records[i].events.empty());
        CHECK((records[i].events.back().tag == EventTag::Final));
        for (std::size_t k = 1; k < records[i].events.size(); ++k)
        {
            CHECK(records[i].events[k].cost <= records[i].events[k - 1].cost);
            CHECK(records[i].events[k].elapsed >= records[i].events[k - 1].elapsed);
        }
        CHECK(records[i].simplifiedFinalCost <= records[i].events.back().cost);
    }
    const std::string csv = emitTrialsCsv(records);
    c.workers = 3;
    CHECK(emitTrialsCsv(runSuite(c)) == csv);
    CHECK(parseTrialsCsv(csv) == records);
}

TEST_CASE("unsolved trials report infinity")
{
    SuiteConfig c = quickConfig();
    c.planners = {std::string(kPlannerGreedy)};
    c.problems = {ProblemSpec{ProblemKind::DoubleEnclosure, {2}, {}}};
    c.trials = 1;
    c.iterationLimit = 1;
    const auto records = runSuite(c);
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].events.size() == 1);
    CHECK(std::isinf(records[0].events[0].cost));
    CHECK(std::isinf(records[0].simplifiedInitialCost));
    const std::string csv = emitTrialsCsv(records);
    CHECK(csv.find(",inf,final\n") != std::string::npos);
    CHECK(parseTrialsCsv(csv) == records);

    const SummaryTable t = summarize(records, logTimeGrid(1e-3, 1.0, 5));
    CHECK(t.cells.at(0).success.back() == 0.0);
    CHECK(std::isinf(t.cells[0].median.back()));
}

TEST_CASE("trials csv format")
{
    const std::vector<TrialRecord> records{
        record("grrt_star", {{0.5, 1.25, EventTag::Initial}, {1.0, 1.0, EventTag::Final}}, 1.1, 0.9)};
    const std::string csv = emitTrialsCsv(records);
    CHECK(csv.rfind("planner,problem,dim,seed,elapsed_s,cost,tag\n", 0) == 0);
    CHECK(csv.find("grrt_star,empty,2,1,0.5,1.25,initial\n") != std::string::npos);
    CHECK(csv.find(",simplified_initial\n") != std::string::npos);
    CHECK(csv.find(",simplified_final\n") != std::string::npos);
    CHECK(parseTrialsCsv(csv) == records);
    CHECK(parseTrialsCsv(emitTrialsCsv({})).empty());
    CHECK_THROWS_AS(parseTrialsCsv("planner,problem\n"), ParseError);
    CHECK_THROWS_AS(parseTrialsCsv("planner,problem,dim,seed,elapsed_s,cost,tag\nx,y,2,1,0.1,zz,final\n"),
                    ParseError);
}

TEST_CASE("median")
{
    CHECK(medianCost({1.0, 2.0, kInfiniteCost}) == 2.0);
    CHECK(medianCost({3.0, 1.0}) == 2.0);
    CHECK(std::isinf(medianCost({1.0, kInfiniteCost})));
    CHECK(std::isinf(medianCost({kInfiniteCost, kInfiniteCost, kInfiniteCost})));
    CHECK_THROWS_AS(medianCost({}), InvalidArgument);
}

TEST_CASE("median confidence ranks match the exact binomial")
{
    const auto r100 = medianCiRanks(100, 0.99);
    REQUIRE(r100);
    CHECK(r100->first == 37);
    CHECK(r100->second == 64);
    for (double conf : {0.9, 0.95, 0.99})
    {
        for (std::size_t n = 1; n <= 120; ++n)
        {
            const auto r = medianCiRanks(n, conf);
            if (!r)
            {
                CHECK(coverage(n, 1, n) < conf);
                continue;
            }
            CHECK(r->first + r->second == n + 1);
            CHECK(coverage(n, r->first, r->second) >= conf - 1e-12L);
            if (r->first + 1 < r->second - 1)
                CHECK(coverage(n, r->first + 1, r->second - 1) < conf);
        }
    }
}

TEST_CASE("summary aggregation")
{
    std::vector<TrialRecord> records;
    for (int k = 0; k < 30; ++k)
    {
        const double t0 = 0.01 * (k + 1);
        const Cost c0 = 2.0 + 0.01 * k;
        records.push_back(record("grrt_star",
                                 {{t0, c0, EventTag::Initial},
                                  {t0 + 0.1, c0 - 0.5, EventTag::Improvement},
                                  {0.5, c0 - 0.5, EventTag::Final}},
                                 c0, c0 - 0.6));
    }
    const auto grid = logTimeGrid(1e-3, 1.0, 40);
    CHECK(grid.front() == doctest::Approx(1e-3));
    CHECK(grid.back() == doctest::Approx(1.0));
    CHECK(grid.size() == 40);

    const SummaryTable t = summarize(records, grid);
    REQUIRE(t.cells.size() == 1);
    const SummaryCell &cell = t.cells[0];
    CHECK(cell.trials == 30);
    CHECK_FALSE(t.warnings.empty());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        if (i > 0)
            CHECK(cell.success[i] >= cell.success[i - 1]);
        if (cell.ciLower[i] && cell.ciUpper[i])
        {
            CHECK(*cell.ciLower[i] <= cell.median[i]);
            CHECK(cell.median[i] <= *cell.ciUpper[i]);
        }
    }
    CHECK(cell.success.back() == 1.0);
    CHECK(cell.median.back() == doctest::Approx(1.5 + 0.01 * 14.5));
    CHECK(cell.initialMedian == doctest::Approx(2.0 + 0.01 * 14.5));
    CHECK(cell.finalMedian == doctest::Approx(1.4 + 0.01 * 14.5));

    const auto doc = nlohmann::json::parse(summaryToJson(t));
    CHECK(doc["format"] == 1);
    CHECK(doc["time_grid_s"].size() == 40);
    CHECK(doc["cells"][0]["planner"] == "grrt_star");
    CHECK(doc["cells"][0]["median_cost"][0] == "inf");
    CHECK(doc["cells"][0]["ci_lower"][0] == "inf");
}

TEST_CASE("run and write the output directory")
{
    TempDir dir;
    SuiteConfig c = quickConfig();
    c.trials = 2;
    runAndWrite(c, dir.path.string());
    for (const char *f : {"config.json", "trials.csv", "summary.json", "verification.json"})
        CHECK(fs::exists(dir.path / f));
    const std::string summary = readTextFile((dir.path / "summary.json").string());
    fs::remove(dir.path / "summary.json");
    summarizeDirectory(dir.path.string());
    CHECK(readTextFile((dir.path / "summary.json").string()) == summary);
    CHECK_THROWS_AS(readTextFile((dir.path / "missing.txt").string()), IoError);
}
