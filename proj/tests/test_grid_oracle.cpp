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
#include "grrt/error.hpp"
#include "grrt/grid_oracle.hpp"
#include "grrt/random.hpp"
#include "grrt/simplify.hpp"
#include "test_support.hpp"

using namespace grrt;
using grrt::test::vec;

TEST_CASE("empty world shortest path is the segment")
{
    const Problem p = makeProblem(ProblemKind::Empty, 2);
    const GridOracle oracle(p);
    REQUIRE(oracle.solvable());
    const Path best = oracle.shortestPath();
    CHECK(best.cost() == doctest::Approx(0.6).epsilon(1e-3));
    CHECK(pathFeasible(p, best));
}

TEST_CASE("offset gap matches the analytic corner path")
{
    // Wall [-0.05, 0.05] x [-0.5, 0.18] u [0.22, 0.35]; the optimum bends at
    // the upper corners of the lower wall piece.
    ProblemParams params;
    params.gapCenter = 0.2;
    const Problem p = makeProblem(ProblemKind::NarrowPassage, 2, params);
    const GridOracle oracle(p);
    const double analytic = 2.0 * std::hypot(0.25, 0.18) + 0.1;
    const Path best = oracle.shortestPath();
    CHECK(best.cost() == doctest::Approx(analytic).epsilon(0.01));
    CHECK(best.cost() >= analytic - 1e-9);
    CHECK(pathFeasible(p, best));
}

TEST_CASE("cost fields are bounded below by the heuristic")
{
    const Problem p = makeProblem(ProblemKind::ManyHomotopy, 2);
    const GridOracle oracle(p, 256);
    Rng rng(4, Stream::Test);
    int checked = 0;
    for (int i = 0; i < 5000; ++i)
    {
        const State x = vec({rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
        const auto cell = *oracle.cellOf(x);
        if (!oracle.cellFree(cell))
            continue;
        const State c = oracle.cellCenter(cell);
        CHECK(oracle.costToCome(cell) >= distance(c, p.start()) - 1e-12);
        CHECK(oracle.costToGo(cell) >= distance(c, p.goal()) - 1e-12);
        ++checked;
    }
    CHECK(checked > 4000);
    const auto s = *oracle.cellOf(p.start());
    CHECK(oracle.costToCome(s) < oracle.cellSize());
}

TEST_CASE("cell lookup")
{
    const Problem p = makeProblem(ProblemKind::Empty, 2);
    const GridOracle oracle(p, 10);
    CHECK_FALSE(oracle.cellOf(vec({0.6, 0.0})));
    const auto corner = *oracle.cellOf(vec({0.5, 0.5}));
    CHECK(corner.i == 9);
    CHECK(corner.j == 9);
    const auto first = *oracle.cellOf(vec({-0.5, -0.5}));
    CHECK(first.i == 0);
    CHECK(oracle.cellCenter(first)[0] == doctest::Approx(-0.45));
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(GridOracle(makeProblem(ProblemKind::Empty, 3)), PreconditionError);
    ProblemParams thin;
    thin.gapWidth = 0.004;  // about two cells at 512
    CHECK_THROWS_AS(GridOracle(makeProblem(ProblemKind::NarrowPassage, 2, thin)), PreconditionError);
    CHECK_NOTHROW(GridOracle(makeProblem(ProblemKind::NarrowPassage, 2, thin), 2048));
}

TEST_CASE("enclosed goal is unsolvable")
{
    const Problem p(test::box({-0.5, -0.5}, {0.5, 0.5}),
                    {test::box({0.1, -0.3}, {0.5, -0.2}), test::box({0.1, 0.2}, {0.5, 0.3}),
                     test::box({0.1, -0.2}, {0.2, 0.2})},
                    vec({-0.3, 0.0}), vec({0.3, 0.0}));
    const GridOracle oracle(p, 128);
    CHECK_FALSE(oracle.solvable());
    CHECK(oracle.shortestPath().empty());
    CHECK(oracle.cellPath().empty());
}
