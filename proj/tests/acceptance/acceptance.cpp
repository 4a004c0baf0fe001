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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Budgets are wall-clock and match the stated tolerances.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grrt/analysis.hpp"
#include "grrt/bench.hpp"
#include "grrt/grid_oracle.hpp"
#include "grrt/planner.hpp"

using namespace grrt;

namespace
{
    struct Outcome
    {
        bool passed{false};
        std::string detail;
    };

    std::string format(const char *fmt, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, fmt, args...);
        return buf;
    }

    // Every cost stream seen by any criterion, checked by the anytime one.
    std::vector<std::vector<CostEvent>> gStreams;

    PlannerResult plan(const Problem &problem, PlannerConfig config)
    {
        PlannerResult r = GreedyRRTstar(problem, config).solve();
        gStreams.push_back(r.events);
        return r;
    }

    std::vector<PlannerResult> planSeeds(const Problem &problem, PlannerConfig config, std::size_t seeds)
    {
        std::vector<PlannerResult> out;
        for (std::size_t s = 0; s < seeds; ++s)
        {
            config.seed = s;
            out.push_back(plan(problem, config));
        }
        return out;
    }

    std::vector<Cost> finalCosts(const std::vector<PlannerResult> &runs)
    {
        std::vector<Cost> c;
        for (const auto &r : runs)
            c.push_back(r.bestCost);
        return c;
    }

    std::size_t solvedCount(const std::vector<PlannerResult> &runs)
    {
        return std::count_if(runs.begin(), runs.end(), [](const PlannerResult &r) { return r.solved(); });
    }

    Outcome fromCheck(const CheckResult &c)
    {
        return {c.passed, format("value %.4g tol %.4g, %.1f s; %s", c.value, c.tolerance, c.seconds, c.detail.c_str())};
    }

    // Two-sided Mann-Whitney U p-value, normal approximation with tie
    // correction. Infinite values rank above every finite one.
    double mannWhitneyP(const std::vector<double> &a, const std::vector<double> &b)
    {
        struct Item
        {
            double v;
            int group;
        };
        std::vector<Item> all;
        for (double v : a)
            all.push_back({v, 0});
        for (double v : b)
            all.push_back({v, 1});
        std::sort(all.begin(), all.end(), [](const Item &x, const Item &y) { return x.v < y.v; });
        const double n1 = static_cast<double>(a.size()), n2 = static_cast<double>(b.size()), n = n1 + n2;
        double rankSum = 0.0, tieTerm = 0.0;
        for (std::size_t i = 0; i < all.size();)
        {
            std::size_t j = i;
            while (j < all.size() && all[j].v == all[i].v)
                ++j;
            const double rank = 0.5 * static_cast<double>(i + 1 + j);
            const double t = static_cast<double>(j - i);
            tieTerm += t * t * t - t;
            for (std::size_t k = i; k < j; ++k)
                if (all[k].group == 0)
                    rankSum += rank;
            i = j;
        }
        const double u = rankSum - n1 * (n1 + 1) / 2;
        const double mean = n1 * n2 / 2;
        const double var = n1 * n2 / 12 * ((n + 1) - tieTerm / (n * (n - 1)));
        if (var <= 0.0)
            return 1.0;
        const double z = (std::abs(u - mean) - 0.5) / std::sqrt(var);
        return std::erfc(std::max(z, 0.0) / std::sqrt(2.0));
    }

    Outcome geometry()
    {
        return fromCheck(checkGeometry({2, 4, 8}, 100000, 1000000, 0.02, 1));
    }

    Outcome measureAlgebra()
    {
        return fromCheck(checkMeasureAlgebra(1000, 1e-12, 2));
    }

    Outcome worstCaseFactor()
    {
        return fromCheck(checkWorstCaseFactor({0.5, 0.9}, 100000, 0.10, 3));
    }

    Outcome factorGrid()
    {
        return fromCheck(checkFactorGrid(0.9, {0.2, 0.5, 0.8}, {0.3, 0.6, 0.9}, 100000, 0.05, 4));
    }

    Outcome containment()
    {
        return fromCheck(checkContainment(20, 2.0, 512, 5));
    }

    Outcome emptyWorld()
    {
        const Problem p = makeProblem(ProblemKind::Empty, 2);
        PlannerConfig c;
        c.epsilon = 0.9;
        c.timeLimit = 5.0;
        const auto runs = planSeeds(p, c, 20);
        const Cost m = medianCost(finalCosts(runs));
        const double err = std::abs(m - 0.6) / 0.6;
        return {err <= 0.02, format("median %.5f vs 0.6, rel err %.4f (tol 0.02), solved %zu/20", m, err,
                                    solvedCount(runs))};
    }

    // The default gap sits on the start-goal axis, where the straight line
    // threads it. The offset gap forces a bend through the passage.
    ProblemParams offsetGap()
    {
        ProblemParams p;
        p.gapCenter = 0.15;
        return p;
    }

    Outcome narrowPassageOracle()
    {
        bool passed = true;
        std::string detail;
        for (const ProblemParams &params : {ProblemParams{}, offsetGap()})
        {
            const Problem p = makeProblem(ProblemKind::NarrowPassage, 2, params);
            const GridOracle oracle(p);
            const Cost o = oracle.shortestPath().cost();
            PlannerConfig c;
            c.epsilon = 0.9;
            c.timeLimit = 10.0;
            const auto runs = planSeeds(p, c, 20);
            const Cost m = medianCost(finalCosts(runs));
            const double err = std::abs(m - o) / o;
            const std::size_t solved = solvedCount(runs);
            passed = passed && err <= 0.05 && solved == 20;
            detail += format("gap %.2f: median %.5f vs oracle %.5f, rel err %.4f (tol 0.05), solved %zu/20; ",
                             params.gapCenter, m, o, err, solved);
        }
        return {passed, detail};
    }

    Outcome greedyVersusInformed()
    {
        constexpr std::size_t seeds = 50;
        constexpr double budget = 2.0;
        const Problem p = makeProblem(ProblemKind::NarrowPassage, 4, offsetGap());
        PlannerConfig c;
        c.timeLimit = budget;
        c.epsilon = 0.9;
        const auto greedy = planSeeds(p, c, seeds);
        c.epsilon = 0.0;
        const auto informed = planSeeds(p, c, seeds);
        const Cost mg = medianCost(finalCosts(greedy));
        const Cost mi = medianCost(finalCosts(informed));
        std::vector<double> tg, ti;
        for (const auto &r : greedy)
            tg.push_back(r.initialTime);
        for (const auto &r : informed)
            ti.push_back(r.initialTime);
        const double pValue = mannWhitneyP(tg, ti);
        return {mg <= mi && pValue >= 0.01,
                format("%zu seeds at %.1f s: median cost %.4f (eps 0.9) vs %.4f (eps 0); initial-time median %.4f "
                       "vs %.4f s, Mann-Whitney p %.3f (need >= 0.01); solved %zu/%zu",
                       seeds, budget, mg, mi, medianCost(tg), medianCost(ti), pValue, solvedCount(greedy),
                       solvedCount(informed))};
    }

    Outcome doubleEnclosure()
    {
        const Problem p = makeProblem(ProblemKind::DoubleEnclosure, 4);
        PlannerConfig c;
        c.epsilon = 0.9;
        c.timeLimit = 20.0;
        c.stopAtFirstSolution = true;
        const auto runs = planSeeds(p, c, 20);
        std::vector<double> times;
        for (const auto &r : runs)
            times.push_back(r.initialTime);
        const std::size_t solved = solvedCount(runs);
        return {solved >= 18, format("solved %zu/20 (need 18), median first-solution time %.4f s, median cost %.4f",
                                     solved, medianCost(times), medianCost(finalCosts(runs)))};
    }

    Outcome anytimeAndDeterminism()
    {
        std::size_t violations = 0, events = 0;
        for (const auto &stream : gStreams)
        {
            for (std::size_t k = 1; k < stream.size(); ++k)
                if (stream[k].cost > stream[k - 1].cost || stream[k].elapsed < stream[k - 1].elapsed)
                    ++violations;
            events += stream.size();
        }

        SuiteConfig s;
        s.planners = {std::string(kPlannerGreedy), std::string(kPlannerInformed), std::string(kPlannerConnect)};
        s.problems = {ProblemSpec{ProblemKind::NarrowPassage, {2, 4}, {}},
                      ProblemSpec{ProblemKind::ManyHomotopy, {2}, {}}};
        s.trials = 3;
        s.timeLimit = 0.5;
        s.virtualSecondsPerIteration = 1e-4;
        s.verifyScale = 0.0;
        const auto dir = std::filesystem::temp_directory_path() / "grrt_acceptance";
        std::filesystem::remove_all(dir);
        runAndWrite(s, (dir / "a").string());
        runAndWrite(s, (dir / "b").string());
        const std::string a = readTextFile((dir / "a" / "trials.csv").string());
        const bool identical = a == readTextFile((dir / "b" / "trials.csv").string());
        bool artifacts = true;
        for (const char *f : {"summary.json", "verification.json", "config.json"})
            artifacts = artifacts && std::filesystem::exists(dir / "a" / f);
        for (const auto &r : parseTrialsCsv(a))
            for (std::size_t k = 1; k < r.events.size(); ++k)
                if (r.events[k].cost > r.events[k - 1].cost)
                    ++violations;
        std::filesystem::remove_all(dir);
        return {violations == 0 && identical && artifacts,
                format("%zu streams, %zu events, %zu monotonicity violations; trials.csv byte-identical: %s; "
                       "summary and verification written: %s",
                       gStreams.size(), events, violations, identical ? "yes" : "no", artifacts ? "yes" : "no")};
    }

    struct Criterion
    {
        const char *name;
        std::function<Outcome()> run;
    };
}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"G-RRT* acceptance criteria"};
    std::vector<int> only;
    app.add_option("--only", only, "Run only these criteria (1-based)");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {"geometry", geometry},
        {"measure_algebra", measureAlgebra},
        {"worst_case_factor", worstCaseFactor},
        {"factor_grid", factorGrid},
        {"containment", containment},
        {"empty_world_convergence", emptyWorld},
        {"narrow_passage_oracle", narrowPassageOracle},
        {"greedy_vs_informed_r4", greedyVersusInformed},
        {"double_enclosure_r4", doubleEnclosure},
        {"anytime_determinism", anytimeAndDeterminism},
    };
    const std::set<int> selected(only.begin(), only.end());

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        if (!selected.empty() && !selected.count(static_cast<int>(i + 1)))
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = criteria[i].run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += o.passed ? 0 : 1;
        std::printf("%s %2zu %-26s %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, selected.empty() ? criteria.size() : selected.size());
    return failures == 0 ? 0 : 1;
}
