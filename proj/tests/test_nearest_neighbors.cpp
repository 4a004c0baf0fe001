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

#include <algorithm>
#include <map>

#include "doctest.h"
#include "grrt/error.hpp"
#include "grrt/nearest_neighbors.hpp"
#include "grrt/random.hpp"
#include "test_support.hpp"

using namespace grrt;
using grrt::test::vec;

namespace
{
    // Linear-scan reference kept in lockstep with the index under test.
    struct ScanOracle
    {
        std::map<VertexId, State> points;

        VertexId nearest(const State &x) const
        {
            VertexId best = 0;
            double bestD = std::numeric_limits<double>::infinity();
            for (const auto &[id, p] : points)
            {
                const double d = (p - x).squaredNorm();
                if (d < bestD)  // ascending ids keep the smallest on ties
                {
                    bestD = d;
                    best = id;
                }
            }
            return best;
        }

        std::vector<VertexId> near(const State &x, double r) const
        {
            std::vector<VertexId> out;
            for (const auto &[id, p] : points)
                if ((p - x).norm() <= r)
                    out.push_back(id);
            return out;
        }
    };

    State randomState(Rng &rng, int n)
    {
        State x(n);
        for (int d = 0; d < n; ++d)
            x[d] = rng.uniform(-0.5, 0.5);
        return x;
    }
}  // namespace

TEST_CASE("basic queries")
{
    NearestNeighbors nn;
    CHECK(nn.empty());
    CHECK_THROWS_AS(nn.nearest(vec({0.0, 0.0})), InvalidArgument);
    nn.insert(4, vec({0.1, 0.2}));
    CHECK(nn.nearest(vec({0.1, 0.2})) == 4);
    CHECK(nn.near(vec({0.1, 0.2}), 0.0) == std::vector<VertexId>{4});
    CHECK_THROWS_AS(nn.insert(4, vec({0.0, 0.0})), InvalidArgument);
    CHECK_THROWS_AS(nn.remove(5), InvalidArgument);
    nn.insert(2, vec({0.3, 0.3}));
    CHECK(nn.near(vec({0.0, 0.0}), 10.0) == std::vector<VertexId>{2, 4});
    nn.remove(4);
    CHECK_FALSE(nn.contains(4));
    CHECK(nn.nearest(vec({0.1, 0.2})) == 2);
    nn.remove(2);
    CHECK_THROWS_AS(nn.nearest(vec({0.0, 0.0})), InvalidArgument);
}

TEST_CASE("ties go to the smallest id")
{
    NearestNeighbors nn;
    for (VertexId id = 300; id > 0; --id)
        nn.insert(id, vec({0.25 * (id % 3), 0.0}));
    // Ids 3, 6, ... sit at the origin; 3 is the smallest.
    CHECK(nn.nearest(vec({0.0, 0.0})) == 3);
    CHECK(nn.nearest(vec({0.25, 0.0})) == 1);
}

TEST_CASE("closed ball boundary")
{
    NearestNeighbors nn;
    nn.insert(0, vec({0.0, 0.0}));
    nn.insert(1, vec({0.5, 0.0}));
    CHECK(nn.near(vec({0.0, 0.0}), 0.5) == std::vector<VertexId>{0, 1});
}

TEST_CASE("random sets match the linear scan")
{
    for (int n : {2, 4, 7})
    {
        Rng rng(100 + n, Stream::Test);
        NearestNeighbors nn;
        ScanOracle oracle;
        for (VertexId id = 0; id < 1000; ++id)
        {
            const State x = randomState(rng, n);
            nn.insert(id, x);
            oracle.points.emplace(id, x);
        }
        for (int q = 0; q < 100; ++q)
        {
            const State x = randomState(rng, n);
            CHECK(nn.nearest(x) == oracle.nearest(x));
            const double r = rng.uniform(0.0, 0.6);
            CHECK(nn.near(x, r) == oracle.near(x, r));
        }
        CHECK(nn.near(State::Zero(n), 10.0).size() == 1000);
    }
}

TEST_CASE("interleaved operations match the linear scan")
{
    Rng rng(77, Stream::Test);
    NearestNeighbors nn;
    ScanOracle oracle;
    VertexId next = 0;
    for (int step = 0; step < 20000; ++step)
    {
        const double u = rng.uniform01();
        if (u < 0.55 || oracle.points.empty())
        {
            const State x = randomState(rng, 3);
            nn.insert(next, x);
            oracle.points.emplace(next, x);
            ++next;
        }
        else if (u < 0.85)
        {
            // Remove a random live id.
            auto it = oracle.points.begin();
            std::advance(it, static_cast<long>(rng.uniform01() * static_cast<double>(oracle.points.size())));
            nn.remove(it->first);
            oracle.points.erase(it);
        }
        else
        {
            const State x = randomState(rng, 3);
            REQUIRE(nn.nearest(x) == oracle.nearest(x));
            const double r = rng.uniform(0.0, 0.4);
            REQUIRE(nn.near(x, r) == oracle.near(x, r));
        }
        REQUIRE(nn.size() == oracle.points.size());
    }
}

TEST_CASE("mass removal and clear")
{
    Rng rng(5, Stream::Test);
    NearestNeighbors nn;
    for (VertexId id = 0; id < 500; ++id)
        nn.insert(id, randomState(rng, 2));
    for (VertexId id = 0; id < 499; ++id)
        nn.remove(id);
    CHECK(nn.size() == 1);
    CHECK(nn.nearest(vec({0.0, 0.0})) == 499);
    nn.remove(499);
    CHECK_THROWS_AS(nn.nearest(vec({0.0, 0.0})), InvalidArgument);
    nn.insert(1000, vec({0.0, 0.0}));
    nn.clear();
    CHECK(nn.empty());
    CHECK(nn.near(vec({0.0, 0.0}), 1.0).empty());
}
