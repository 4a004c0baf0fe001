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

#include "grrt/simplify.hpp"

#include <algorithm>
#include <vector>

#include "grrt/error.hpp"

namespace grrt
{
    namespace
    {
        /// Position on a polyline: segment index and the interpolated state.
        struct ArcPoint
        {
            std::size_t segment;
            State state;
        };

        ArcPoint locate(const std::vector<State> &states, const std::vector<double> &cumulative, double s)
        {
            // First vertex whose cumulative length exceeds s closes the segment.
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
            std::size_t hi = static_cast<std::size_t>(it - cumulative.begin());
            hi = std::clamp<std::size_t>(hi, 1, states.size() - 1);
            const std::size_t lo = hi - 1;
            const double len = cumulative[hi] - cumulative[lo];
            const double t = len > 0.0 ? std::clamp((s - cumulative[lo]) / len, 0.0, 1.0) : 0.0;
            return {lo, states[lo] + (states[hi] - states[lo]) * t};
        }
    }  // namespace

    bool pathFeasible(const Problem &problem, const Path &path)
    {
        const auto &s = path.states();
        if (s.empty())
            return false;
        if (s.size() == 1)
            return isFree(problem, s.front());
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!segmentFree(problem, s[i - 1], s[i]))
                return false;
        return true;
    }

    Path shortcut(const Path &path, const Problem &problem, std::size_t iterations, Rng &rng)
    {
        if (path.size() < 2)
            throw InvalidArgument("cannot shortcut a path with fewer than two states");
        if (!pathFeasible(problem, path))
            throw InvalidArgument("cannot shortcut an infeasible path");
        if (iterations == 0)
            iterations = 10 * path.size();

        std::vector<State> states = path.states();
        Cost cost = path.cost();
        std::vector<double> cumulative;
        auto rebuild = [&]() {
            cumulative.assign(states.size(), 0.0);
            for (std::size_t i = 1; i < states.size(); ++i)
                cumulative[i] = cumulative[i - 1] + distance(states[i - 1], states[i]);
        };
        rebuild();

        for (std::size_t it = 0; it < iterations; ++it)
        {
            const double total = cumulative.back();
            if (total <= 0.0)
                break;
            double s0 = rng.uniform(0.0, total);
            double s1 = rng.uniform(0.0, total);
            if (s0 > s1)
                std::swap(s0, s1);
            const ArcPoint a = locate(states, cumulative, s0);
            const ArcPoint b = locate(states, cumulative, s1);
            if (a.segment == b.segment)
                continue;

            // Spliced path: states[0..a.segment], a, b, states[b.segment+1..].
            std::vector<State> candidate(states.begin(), states.begin() + static_cast<std::ptrdiff_t>(a.segment) + 1);
            candidate.push_back(a.state);
            candidate.push_back(b.state);
            candidate.insert(candidate.end(), states.begin() + static_cast<std::ptrdiff_t>(b.segment) + 1,
                             states.end());
            const Cost candidateCost = pathLength(candidate);
            if (!(candidateCost < cost - 1e-12))
                continue;

            // Every new segment is checked, including the two partial ones.
            if (!segmentFree(problem, states[a.segment], a.state) || !segmentFree(problem, a.state, b.state) ||
                !segmentFree(problem, b.state, states[b.segment + 1]))
                continue;

            // Drop zero-length segments produced by cuts at existing vertices.
            std::vector<State> compact;
            compact.reserve(candidate.size());
            for (auto &x : candidate)
                if (compact.empty() || !(compact.back() == x))
                    compact.push_back(std::move(x));
            if (compact.size() < 2)
                continue;
            states = std::move(compact);
            cost = pathLength(states);
            rebuild();
        }
        return Path(std::move(states));
    }
}  // namespace grrt
