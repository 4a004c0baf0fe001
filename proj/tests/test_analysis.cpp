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

#include "doctest.h"
#include "grrt/analysis.hpp"
#include "grrt/error.hpp"
#include "grrt/simplify.hpp"
#include "test_support.hpp"
#include "json.hpp"

using namespace grrt;
using grrt::test::box;
using grrt::test::vec;

namespace
{
    // A wall x0 in [-0.1, 0.1] from the floor to 0.3 threaded by a serpentine
    // corridor near the start-goal axis. The corridor is long, so the optimum
    // goes over the wall; but the corridor stays close to the axis, so its
    // greedy set is thin.
    struct Maze
    {
        Problem problem;
        Path corridor;
    };

    Maze makeMaze()
    {
        constexpr int columns = 10;
        constexpr int rows = 40;
        constexpr double cell = 0.02;
        bool open[columns][rows] = {};
        auto column = [&](int c, int lo, int hi) {
            for (int r = lo; r <= hi; ++r)
                open[c][r] = true;
        };
        for (int c = 0; c < columns; c += 2)
            column(c, 22, 28);
        for (int c = 1; c < columns; c += 2)
            column(c, (c % 4 == 1) ? 28 : 22, (c % 4 == 1) ? 28 : 22);
        open[9][22] = false;
        open[9][28] = true;

        std::vector<HyperRect> obstacles;
        for (int c = 0; c < columns; ++c)
        {
            const double x0 = -0.1 + cell * c;
            int r = 0;
            while (r < rows)
            {
                if (open[c][r])
                {
                    ++r;
                    continue;
                }
                const int start = r;
                while (r < rows && !open[c][r])
                    ++r;
                obstacles.push_back(box({x0, -0.5 + cell * start}, {x0 + cell, -0.5 + cell * r}));
            }
        }
        Problem p(box({-0.5, -0.5}, {0.5, 0.5}), obstacles, vec({-0.3, 0.0}), vec({0.3, 0.0}), 1e-3, "maze");
        const double top = 0.07, bottom = -0.05;
        Path corridor({p.start(), vec({-0.09, 0.01}), vec({-0.09, top}), vec({-0.05, top}), vec({-0.05, bottom}),
                       vec({-0.01, bottom}), vec({-0.01, top}), vec({0.03, top}), vec({0.03, bottom}),
                       vec({0.07, bottom}), vec({0.07, top}), vec({0.13, top}), p.goal()});
        return {std::move(p), std::move(corridor)};
    }
}  // namespace

TEST_CASE("rho closed form")
{
    CHECK(rhoClosedForm(1.2, 1.2, 0.6, 2) == doctest::Approx(1.0));
    CHECK(rhoClosedForm(0.6, 1.2, 0.6, 2) == 0.0);
    CHECK(rhoClosedForm(0.6, 1.2, 0.6, 4) == 0.0);
    CHECK(rhoClosedForm(1.0, 1.2, 0.6, 2) == doctest::Approx((1.0 / 1.2) * std::sqrt(0.64 / 1.08)).epsilon(1e-14));
    CHECK(rhoClosedForm(1.0, 1.2, 0.6, 2) ==
          doctest::Approx(phsMeasure(1.0, 0.6, 2) / phsMeasure(1.2, 0.6, 2)).epsilon(1e-14));
    CHECK_THROWS_AS(rhoClosedForm(0.6, 0.6, 0.6, 2), InvalidArgument);
    CHECK_THROWS_AS(rhoClosedForm(1.3, 1.2, 0.6, 2), InvalidArgument);
    CHECK_THROWS_AS(rhoClosedForm(0.5, 1.2, 0.6, 2), InvalidArgument);
}

TEST_CASE("rho equals the measure ratio on random triples")
{
    Rng rng(1, Stream::Test);
    for (int i = 0; i < 1000; ++i)
    {
        const int n = 1 + i % 10;
        const double cMin = rng.uniform(0.01, 3.0);
        const double ci = cMin * rng.uniform(1.001, 4.0);
        const double f = rng.uniform(cMin, ci);
        const double ratio = phsMeasure(f, cMin, n) / phsMeasure(ci, cMin, n);
        if (ratio > 0.0)
            CHECK(rhoClosedForm(f, ci, cMin, n) == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("expected sample factor")
{
    for (double eps : {0.0, 0.3, 0.5, 0.9})
    {
        CHECK(expectedSampleFactor(eps, 0.0, 0.4) == 1.0 / (1.0 - eps));
        CHECK(expectedSampleFactor(eps, 0.4, 0.4) == 1.0);
        CHECK(expectedSampleFactor(0.0, eps, 0.7) == 1.0);
    }
    CHECK(expectedSampleFactor(1.0, 1.0, 0.25) == doctest::Approx(0.25));
    CHECK_THROWS_AS(expectedSampleFactor(1.0, 0.0, 0.5), InvalidArgument);
    CHECK_THROWS_AS(expectedSampleFactor(0.5, 0.5, 0.0), InvalidArgument);
    CHECK_THROWS_AS(expectedSampleFactor(-0.1, 0.5, 0.5), InvalidArgument);

    // Monotone in epsilon: increasing when gamma < rho, decreasing when gamma > rho.
    double up = expectedSampleFactor(0.0, 0.2, 0.6);
    double down = expectedSampleFactor(0.0, 0.8, 0.6);
    for (int k = 1; k <= 20; ++k)
    {
        const double eps = 0.05 * k;
        const double u = expectedSampleFactor(eps, 0.2, 0.6);
        const double d = expectedSampleFactor(eps, 0.8, 0.6);
        CHECK(u > up);
        CHECK(d < down);
        up = u;
        down = d;
    }
}

TEST_CASE("simulated waiting times")
{
    Rng rng(2, Stream::Analysis);
    // Geometric waiting times: mean 1/p, so the ratio is p / ((1-eps) p).
    CHECK(simulateSampleFactor(0.5, 0.1, 0.0, 100000, rng) == doctest::Approx(2.0).epsilon(0.10));
    CHECK(simulateSampleFactor(0.9, 0.1, 0.0, 100000, rng) == doctest::Approx(10.0).epsilon(0.10));
    const double q = greedyHitProbability(0.1, 0.5, 0.25);
    CHECK(q == doctest::Approx(0.2));
    CHECK(simulateSampleFactor(0.7, 0.1, q, 100000, rng) ==
          doctest::Approx(expectedSampleFactor(0.7, 0.5, 0.25)).epsilon(0.05));
    CHECK(simulateSampleFactor(0.0, 0.3, 0.9, 1000, rng) > 0.0);
    CHECK_THROWS_AS(greedyHitProbability(0.5, 1.0, 0.2), InvalidArgument);
    CHECK_THROWS_AS(simulateSampleFactor(1.0, 0.1, 0.0, 1000, rng), InvalidArgument);
    CHECK_THROWS_AS(simulateSampleFactor(0.5, 0.0, 0.1, 1000, rng), InvalidArgument);
}

TEST_CASE("recall is complete for a kinked path in an empty world")
{
    const Problem p = makeProblem(ProblemKind::Empty, 2);
    const GridOracle oracle(p);
    const Path kinked({p.start(), vec({0.0, 0.05}), p.goal()});
    Rng rng(3, Stream::Analysis);
    const SetEstimate e = estimateGamma(p, kinked, kinked.cost(), 200000, rng, &oracle);
    CHECK(e.rho == doctest::Approx(1.0));
    CHECK(e.gamma >= 0.99);
    CHECK(e.gamma <= 1.0);
    CHECK(e.improvementHits > 100);
    CHECK(e.greedyDiameter == doctest::Approx(kinked.cost()));

    // The straight line has a zero-measure greedy set, which recalls nothing.
    const Path straight({p.start(), p.goal()});
    const SetEstimate s = estimateGamma(p, straight, 0.61, 200000, rng, &oracle);
    CHECK(s.rho == 0.0);
    CHECK(s.gamma == 0.0);
}

TEST_CASE("recall drops when the optimum lies in another class")
{
    const Maze maze = makeMaze();
    REQUIRE(pathFeasible(maze.problem, maze.corridor));
    const GridOracle oracle(maze.problem);
    const Path optimum = oracle.shortestPath();
    REQUIRE_FALSE(optimum.empty());
    REQUIRE(optimum.cost() < maze.corridor.cost());
    CHECK(homotopySignature(maze.problem, optimum) != homotopySignature(maze.problem, maze.corridor));

    Rng rng(4, Stream::Analysis);
    const SetEstimate e = estimateGamma(maze.problem, maze.corridor, maze.corridor.cost(), 100000, rng, &oracle);
    CHECK(e.gamma >= 0.0);
    CHECK(e.gamma + e.halfWidth < 0.9);
    CHECK(e.rho > 0.0);
    CHECK(e.rho < 0.2);
    CHECK_THROWS_AS(optimumContained(maze.problem, maze.corridor, 2.0, &oracle), PreconditionError);
}

TEST_CASE("recall preconditions")
{
    const Problem p = makeProblem(ProblemKind::Empty, 2);
    const GridOracle oracle(p, 64);
    Rng rng(5, Stream::Analysis);
    const Path kinked({p.start(), vec({0.0, 0.05}), p.goal()});
    // No cell is cheaper than the straight line itself.
    CHECK_THROWS_AS(estimateGamma(p, kinked, 0.6001, 1000, rng, &oracle), InvalidArgument);
    CHECK_THROWS_AS(estimateGamma(p, kinked, 0.61, 0, rng, &oracle), InvalidArgument);
}

TEST_CASE("containment on the narrow passage")
{
    ProblemParams params;
    params.gapCenter = 0.12;
    const Problem p = makeProblem(ProblemKind::NarrowPassage, 2, params);
    const GridOracle oracle(p);
    CHECK(optimumContained(p, oracle.shortestPath(), 2.0, &oracle));
    Rng rng(6, Stream::Analysis);
    for (int k = 0; k < 5; ++k)
        CHECK(optimumContained(p, randomGapPath(p, params, 1 + k, rng), 2.0, &oracle));

    // Around the free top end of the wall: another class.
    const Path around({p.start(), vec({-0.06, 0.36}), vec({0.06, 0.36}), p.goal()});
    REQUIRE(pathFeasible(p, around));
    CHECK_THROWS_AS(optimumContained(p, around, 2.0, &oracle), PreconditionError);
    CHECK_THROWS_AS(optimumContained(p, Path({p.start(), vec({0.0, 0.3})}), 2.0, &oracle),
                    InvalidArgument);
}

TEST_CASE("suite checks and report")
{
    const auto results = runVerificationSuite({11, 0.05});
    REQUIRE(results.size() == 5);
    const auto doc = nlohmann::json::parse(verificationReport(results, {11, 0.05}));
    CHECK(doc["format"] == 1);
    CHECK(doc["checks"].size() == 5);
    CHECK(doc["checks"][1]["name"] == "measure_algebra");
    CHECK(doc["checks"][1]["passed"] == true);
    CHECK_THROWS_AS(runVerificationSuite({0, 0.0}), InvalidArgument);
}
