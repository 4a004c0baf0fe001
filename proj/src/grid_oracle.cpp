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

#include "grrt/grid_oracle.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "grrt/error.hpp"

namespace grrt
{
    namespace
    {
        constexpr std::size_t kNone = static_cast<std::size_t>(-1);

        // Euclidean gap between two boxes in the plane; 0 when they touch.
        double boxGap(const HyperRect &a, const HyperRect &b)
        {
            double sq = 0.0;
            for (int d = 0; d < 2; ++d)
            {
                const double g = std::max({0.0, a.low[d] - b.high[d], b.low[d] - a.high[d]});
                sq += g * g;
            }
            return std::sqrt(sq);
        }
    }  // namespace

    GridOracle::GridOracle(const Problem &problem, std::size_t resolution, double minPassageCells)
      : problem_(problem), resolution_(resolution)
    {
        if (problem.dimension() != 2)
            throw PreconditionError("grid oracle requires a planar problem");
        if (resolution < 4)
            throw InvalidArgument("grid oracle resolution must be at least 4");

        const HyperRect &b = problem.bounds();
        cellSize_ = (b.high[0] - b.low[0]) / static_cast<double>(resolution);
        cellSizeY_ = (b.high[1] - b.low[1]) / static_cast<double>(resolution);

        // Refuse worlds whose gaps the grid cannot resolve.
        const double minGap = minPassageCells * std::max(cellSize_, cellSizeY_);
        const auto &obs = problem.obstacles();
        // Gaps within rounding of zero are touching faces, not passages.
        auto tooNarrow = [&](double g) { return g > 1e-9 * minGap && g < minGap; };
        for (std::size_t i = 0; i < obs.size(); ++i)
        {
            for (int d = 0; d < 2; ++d)
                if (tooNarrow(obs[i].low[d] - b.low[d]) || tooNarrow(b.high[d] - obs[i].high[d]))
                    throw PreconditionError("obstacle " + std::to_string(i) +
                                            " leaves a passage to the boundary narrower than the grid resolves");
            for (std::size_t j = i + 1; j < obs.size(); ++j)
                if (tooNarrow(boxGap(obs[i], obs[j])))
                    throw PreconditionError("obstacles " + std::to_string(i) + " and " + std::to_string(j) +
                                            " leave a passage narrower than the grid resolves");
        }

        free_.assign(resolution_ * resolution_, false);
        for (std::size_t j = 0; j < resolution_; ++j)
            for (std::size_t i = 0; i < resolution_; ++i)
                free_[flat({i, j})] = isFree(problem, cellCenter({i, j}));

        fromStart_ = dijkstra(problem.start(), nullptr);
        toGoal_ = dijkstra(problem.goal(), &parentsFromGoal_);
    }

    std::optional<GridOracle::Cell> GridOracle::cellOf(const State &x) const
    {
        requireCompatible(x, problem_.start());
        const HyperRect &b = problem_.bounds();
        if (!b.contains(x))
            return std::nullopt;
        auto index = [&](double v, double lo, double h) {
            const auto k = static_cast<std::size_t>(std::floor((v - lo) / h));
            return std::min(k, resolution_ - 1);
        };
        return Cell{index(x[0], b.low[0], cellSize_), index(x[1], b.low[1], cellSizeY_)};
    }

    State GridOracle::cellCenter(Cell c) const
    {
        const HyperRect &b = problem_.bounds();
        State x(2);
        x << b.low[0] + (static_cast<double>(c.i) + 0.5) * cellSize_,
            b.low[1] + (static_cast<double>(c.j) + 0.5) * cellSizeY_;
        return x;
    }

    std::vector<Cost> GridOracle::dijkstra(const State &source, std::vector<std::size_t> *parents) const
    {
        const std::size_t total = resolution_ * resolution_;
        std::vector<Cost> dist(total, kInfiniteCost);
        if (parents)
            parents->assign(total, kNone);

        const auto seed = cellOf(source);
        if (!seed || !cellFree(*seed))
            throw PreconditionError("grid cell of a terminal state is blocked");

        using Entry = std::pair<Cost, std::size_t>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
        const std::size_t s = flat(*seed);
        // Exact offset to the seed centre keeps g + h an upper bound on f.
        dist[s] = distance(source, cellCenter(*seed));
        open.emplace(dist[s], s);

        const double diag = std::hypot(cellSize_, cellSizeY_);
        const long n = static_cast<long>(resolution_);
        while (!open.empty())
        {
            const auto [d, u] = open.top();
            open.pop();
            if (d > dist[u])
                continue;
            const long ui = static_cast<long>(u % resolution_);
            const long uj = static_cast<long>(u / resolution_);
            for (long dj = -1; dj <= 1; ++dj)
            {
                for (long di = -1; di <= 1; ++di)
                {
                    if (di == 0 && dj == 0)
                        continue;
                    const long vi = ui + di;
                    const long vj = uj + dj;
                    if (vi < 0 || vj < 0 || vi >= n || vj >= n)
                        continue;
                    const std::size_t v = static_cast<std::size_t>(vj * n + vi);
                    if (!free_[v])
                        continue;
                    double step = di == 0 ? cellSizeY_ : cellSize_;
                    if (di != 0 && dj != 0)
                    {
                        // No corner cutting.
                        if (!free_[static_cast<std::size_t>(uj * n + vi)] || !free_[static_cast<std::size_t>(vj * n + ui)])
                            continue;
                        step = diag;
                    }
                    const Cost nd = d + step;
                    if (nd < dist[v])
                    {
                        dist[v] = nd;
                        if (parents)
                            (*parents)[v] = u;
                        open.emplace(nd, v);
                    }
                }
            }
        }
        return dist;
    }

    bool GridOracle::solvable() const
    {
        const auto c = cellOf(problem_.start());
        return c && isFinite(costToGo(*c));
    }

    std::vector<State> GridOracle::cellPath() const
    {
        std::vector<State> out;
        if (!solvable())
            return out;
        out.push_back(problem_.start());
        std::size_t u = flat(*cellOf(problem_.start()));
        while (u != kNone)
        {
            out.push_back(cellCenter({u % resolution_, u / resolution_}));
            u = parentsFromGoal_[u];
        }
        out.push_back(problem_.goal());
        return out;
    }

    Path GridOracle::shortestPath() const
    {
        const std::vector<State> pts = cellPath();
        if (pts.empty())
            return {};
        std::vector<State> pulled{pts.front()};
        std::size_t i = 0;
        while (i + 1 < pts.size())
        {
            // Advance while the next point stays visible from pts[i].
            std::size_t j = i + 1;
            while (j + 1 < pts.size() && segmentFree(problem_, pts[i], pts[j + 1]))
                ++j;
            pulled.push_back(pts[j]);
            i = j;
        }
        return Path(std::move(pulled));
    }
}  // namespace grrt
