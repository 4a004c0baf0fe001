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

#include "grrt/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "grrt/error.hpp"

namespace grrt
{
    State steer(const State &from, const State &to, double maxEdge)
    {
        if (!(maxEdge > 0.0))
            throw InvalidArgument("steering range must be positive");
        requireCompatible(from, to);
        const double d = distance(from, to);
        if (d <= maxEdge)
            return to;
        return from + (to - from) * (maxEdge / d);
    }

    State sampleInformed(const Problem &problem, Cost c, Rng &rng, std::size_t retryBudget)
    {
        const HyperRect &bounds = problem.bounds();
        if (!isFinite(c))
            return sampleUniform(bounds, rng);

        const ProlateHyperspheroid phs(problem.start(), problem.goal(), c);
        const bool sampleSpheroid = phs.measure() <= bounds.measure();
        for (std::size_t attempt = 0; attempt < retryBudget; ++attempt)
        {
            if (sampleSpheroid)
            {
                State x = sampleUniform(phs, rng);
                if (bounds.contains(x))
                    return x;
            }
            else
            {
                State x = sampleUniform(bounds, rng);
                if (phs.contains(x, 0.0))
                    return x;
            }
        }
        throw SamplingError("informed sampler exhausted " + std::to_string(retryBudget) +
                            " attempts; the informed set barely intersects the bounds (c = " + std::to_string(c) +
                            ")");
    }

    std::string_view toString(ExtendStatus status)
    {
        switch (status)
        {
            case ExtendStatus::Reached:
                return "REACHED";
            case ExtendStatus::Advanced:
                return "ADVANCED";
            case ExtendStatus::Trapped:
                return "TRAPPED";
        }
        return "?";
    }

    std::string_view toString(EventTag tag)
    {
        switch (tag)
        {
            case EventTag::Initial:
                return "initial";
            case EventTag::Improvement:
                return "improvement";
            case EventTag::Final:
                return "final";
        }
        return "?";
    }

    EventTag eventTagFromString(std::string_view name)
    {
        for (auto tag : {EventTag::Initial, EventTag::Improvement, EventTag::Final})
            if (toString(tag) == name)
                return tag;
        throw ParseError("unknown event tag '" + std::string(name) + "'");
    }

    void PlannerConfig::validate() const
    {
        if (!(epsilon >= 0.0 && epsilon <= 1.0))
            throw InvalidArgument("epsilon must lie in [0, 1]");
        if (!(maxEdge >= 0.0) || !std::isfinite(maxEdge))
            throw InvalidArgument("maxEdge must be positive (or 0 for the default)");
        if (!(eta > 0.0))
            throw InvalidArgument("eta must be positive");
        if (!(timeLimit > 0.0))
            throw InvalidArgument("time limit must be positive");
        if (!(virtualSecondsPerIteration >= 0.0) || !std::isfinite(virtualSecondsPerIteration))
            throw InvalidArgument("virtual seconds per iteration must be non-negative");
        if (!std::isfinite(timeLimit) && iterationLimit == 0 && !stopAtFirstSolution)
            throw InvalidArgument("planner needs a finite time limit or an iteration limit");
        if (sampleRetriesPerDimension == 0)
            throw InvalidArgument("sample retry budget must be positive");
    }

    GreedyRRTstar::GreedyRRTstar(const Problem &problem, PlannerConfig config, PlannerVariant variant)
      : problem_(problem)
      , config_(config)
      , variant_(variant)
      , trees_{SearchTree(problem.start()), SearchTree(problem.goal())}
      , rng_(config.seed, Stream::Sampling)
      , maxEdge_(config.maxEdge > 0.0 ? config.maxEdge : 0.2 * problem.bounds().diagonal())
      , freeMeasureBound_(problem.bounds().measure())
    {
        config_.validate();
    }

    bool GreedyRRTstar::rewiringActive() const
    {
        if (variant_ == PlannerVariant::RRTConnect)
            return false;
        return !config_.delayRewiring || hasSolution_;
    }

    void GreedyRRTstar::dropStaleBridges()
    {
        std::erase_if(bridges_, [&](const SolutionBridge &b) {
            return !trees_[0].isAlive(b.startVertex) || !trees_[1].isAlive(b.goalVertex);
        });
    }

    std::optional<std::size_t> GreedyRRTstar::bestBridgeIndex() const
    {
        std::optional<std::size_t> best;
        Cost bestCost = kInfiniteCost;
        for (std::size_t i = 0; i < bridges_.size(); ++i)
        {
            const Cost c = bridgeCost(bridges_[i], trees_[0], trees_[1]);
            if (c < bestCost)
            {
                bestCost = c;
                best = i;
            }
        }
        return best;
    }

    Cost GreedyRRTstar::currentSolutionCost() const
    {
        const auto best = bestBridgeIndex();
        return best ? bridgeCost(bridges_[*best], trees_[0], trees_[1]) : kInfiniteCost;
    }

    Path GreedyRRTstar::currentSolution() const
    {
        const auto best = bestBridgeIndex();
        return best ? extractPath(bridges_[*best], trees_[0], trees_[1]) : Path();
    }

    void GreedyRRTstar::addBridge(const SolutionBridge &bridge)
    {
        if (!trees_[0].isAlive(bridge.startVertex) || !trees_[1].isAlive(bridge.goalVertex))
            throw InvalidArgument("bridge endpoints must be live vertices");
        if (!segmentFree(problem_, trees_[0].state(bridge.startVertex), trees_[1].state(bridge.goalVertex)))
            throw InvalidArgument("bridge segment is in collision");
        bridges_.push_back(bridge);
        hasSolution_ = true;
    }

    Cost GreedyRRTstar::greedyDiameter(GreedyScope scope) const
    {
        const State &start = problem_.start();
        const State &goal = problem_.goal();
        Cost result = -kInfiniteCost;
        auto visit = [&](const SearchTree &tree, VertexId v) {
            for (; v != SearchTree::kNoParent; v = tree.parent(v))
                result = std::max(result, l2Heuristic(tree.state(v), start, goal));
        };
        auto visitBridge = [&](const SolutionBridge &b) {
            visit(trees_[0], b.startVertex);
            visit(trees_[1], b.goalVertex);
        };
        if (scope == GreedyScope::BestBridge)
        {
            const auto best = bestBridgeIndex();
            if (!best)
                return kInfiniteCost;
            visitBridge(bridges_[*best]);
        }
        else
        {
            for (const auto &b : bridges_)
                if (trees_[0].isAlive(b.startVertex) && trees_[1].isAlive(b.goalVertex))
                    visitBridge(b);
            if (result < 0.0)
                return kInfiniteCost;
        }
        return result;
    }

    Cost GreedyRRTstar::computeBestCost()
    {
        lastTrace_ = {};
        dropStaleBridges();
        if (bridges_.empty())
        {
            solutionCost_ = kInfiniteCost;
            return kInfiniteCost;
        }
        solutionCost_ = currentSolutionCost();
        lastTrace_.solutionCost = solutionCost_;
        if (variant_ == PlannerVariant::RRTConnect)
            return kInfiniteCost;

        if (config_.epsilon > rng_.uniform01())
        {
            lastTrace_.greedyBranch = true;
            if (solutionCost_ < latchBest_)
            {
                lastTrace_.latchUpdated = true;
                latchBest_ = solutionCost_;
                latchMax_ = greedyDiameter(config_.greedyScope);
                if (config_.prune)
                {
                    for (auto &tree : trees_)
                        stats_.prunedVertices += tree.prune(latchMax_, problem_.start(), problem_.goal());
                    dropStaleBridges();
                }
            }
            lastTrace_.returned = latchMax_;
            return latchMax_;
        }
        latchBest_ = solutionCost_;
        lastTrace_.returned = solutionCost_;
        return solutionCost_;
    }

    State GreedyRRTstar::sample(Cost c)
    {
        return sampleInformed(problem_, c, rng_, config_.sampleRetriesPerDimension * problem_.dimension());
    }

    ExtendResult GreedyRRTstar::extend(int side, const State &x, Cost gate)
    {
        SearchTree &tree = trees_[side];
        const State &otherRoot = trees_[1 - side].root();

        const VertexId nearestId = tree.nearest(x);
        const State &nearest = tree.state(nearestId);
        if (distance(nearest, x) == 0.0)
            return {ExtendStatus::Reached, x, nearestId};

        State newState = steer(nearest, x, maxEdge_);
        const Cost edge = distance(nearest, newState);
        const bool gated = config_.heuristicGate && variant_ == PlannerVariant::GreedyRRTstar;
        if (gated && !(tree.costToCome(nearestId) + edge + distance(newState, otherRoot) < gate))
        {
            ++stats_.gatedExtensions;
            return {ExtendStatus::Trapped, std::move(newState), std::nullopt};
        }
        if (!segmentFree(problem_, nearest, newState))
            return {ExtendStatus::Trapped, std::move(newState), std::nullopt};

        VertexId newId;
        if (rewiringActive())
        {
            const double radius = rewireRadius(tree.size() + 1, static_cast<int>(problem_.dimension()),
                                               freeMeasureBound_, config_.eta, maxEdge_);
            const std::vector<VertexId> nearIds =
                radius > 0.0 ? tree.near(newState, radius) : std::vector<VertexId>{};

            VertexId parent = nearestId;
            Cost parentCost = tree.costToCome(nearestId) + edge;
            for (VertexId id : nearIds)
            {
                if (id == nearestId)
                    continue;
                const Cost c = tree.costToCome(id) + distance(tree.state(id), newState);
                if (c < parentCost && segmentFree(problem_, tree.state(id), newState))
                {
                    parent = id;
                    parentCost = c;
                }
            }
            newId = tree.addChild(parent, newState);

            for (VertexId id : nearIds)
            {
                if (id == parent)
                    continue;
                const Cost c = tree.costToCome(newId) + distance(newState, tree.state(id));
                if (c < tree.costToCome(id) && segmentFree(problem_, newState, tree.state(id)))
                {
                    tree.rewireParent(id, newId);
                    ++stats_.rewires;
                }
            }
        }
        else
        {
            newId = tree.addChild(nearestId, newState);
        }

        const ExtendStatus status = newState == x ? ExtendStatus::Reached : ExtendStatus::Advanced;
        return {status, std::move(newState), newId};
    }

    ExtendResult GreedyRRTstar::connect(int side, const State &x, Cost gate)
    {
        const auto cap = static_cast<std::size_t>(std::ceil(problem_.bounds().diagonal() / maxEdge_ * 4.0)) + 1;
        for (std::size_t step = 0; step < cap; ++step)
        {
            ExtendResult r = extend(side, x, gate);
            if (r.status != ExtendStatus::Advanced)
                return r;
        }
        return {ExtendStatus::Trapped, x, std::nullopt};
    }

    void GreedyRRTstar::iterate()
    {
        ++stats_.iterations;
        const Cost c = computeBestCost();
        const Cost gate = solutionCost_;

        std::optional<State> x;
        try
        {
            x = sample(c);
        }
        catch (const SamplingError &)
        {
            ++stats_.samplingFailures;
        }

        const int a = extender_;
        const int b = 1 - a;
        if (x)
        {
            ExtendResult extended = extend(a, *x, gate);
            if (extended.status != ExtendStatus::Trapped)
            {
                ExtendResult connected = connect(b, extended.state, gate);
                if (connected.status == ExtendStatus::Reached)
                {
                    const VertexId va = *extended.vertex;
                    const VertexId vb = *connected.vertex;
                    bridges_.push_back(a == 0 ? SolutionBridge{va, vb} : SolutionBridge{vb, va});
                    hasSolution_ = true;
                }
            }
        }

        extender_ = b;
        if (config_.balanced)
        {
            const std::size_t s0 = trees_[0].size();
            const std::size_t s1 = trees_[1].size();
            if (s0 > 2 * s1)
                extender_ = 1;
            else if (s1 > 2 * s0)
                extender_ = 0;
        }
    }

    void GreedyRRTstar::trackBest(double elapsed, const Observer &observer)
    {
        const auto best = bestBridgeIndex();
        if (!best)
            return;
        const Cost c = bridgeCost(bridges_[*best], trees_[0], trees_[1]);
        if (!(c < result_.bestCost))
            return;
        result_.bestCost = c;
        result_.bestPath = extractPath(bridges_[*best], trees_[0], trees_[1]);
        const bool first = !isFinite(result_.initialCost);
        if (first)
        {
            result_.initialCost = c;
            result_.initialPath = result_.bestPath;
            result_.initialTime = elapsed;
        }
        CostEvent event{elapsed, c, first ? EventTag::Initial : EventTag::Improvement, stats_.iterations};
        result_.events.push_back(event);
        if (observer)
            observer(event);
    }

    PlannerResult GreedyRRTstar::solve(const Observer &observer)
    {
        using Clock = std::chrono::steady_clock;
        const auto started = Clock::now();
        const bool virtualClock = config_.virtualSecondsPerIteration > 0.0;
        auto elapsedNow = [&]() {
            if (virtualClock)
                return static_cast<double>(stats_.iterations) * config_.virtualSecondsPerIteration;
            return std::chrono::duration<double>(Clock::now() - started).count();
        };

        result_ = PlannerResult{};
        double elapsed = 0.0;
        while (true)
        {
            if (config_.iterationLimit > 0 && stats_.iterations >= config_.iterationLimit)
                break;
            if (config_.stopAtFirstSolution && result_.solved())
                break;
            iterate();
            elapsed = elapsedNow();
            trackBest(elapsed, observer);
            if (elapsed >= config_.timeLimit)
                break;
        }
        elapsed = elapsedNow();

        CostEvent final{elapsed, result_.bestCost, EventTag::Final, stats_.iterations};
        result_.events.push_back(final);
        if (observer)
            observer(final);

        result_.elapsed = elapsed;
        stats_.startTreeSize = trees_[0].size();
        stats_.goalTreeSize = trees_[1].size();
        stats_.bridges = bridges_.size();
        result_.stats = stats_;
        return result_;
    }

    PlannerResult grrtStarPlan(const Problem &problem, const PlannerConfig &config, const Observer &observer)
    {
        GreedyRRTstar planner(problem, config, PlannerVariant::GreedyRRTstar);
        return planner.solve(observer);
    }

    PlannerResult rrtConnectPlan(const Problem &problem, const PlannerConfig &config, const Observer &observer)
    {
        PlannerConfig c = config;
        c.stopAtFirstSolution = true;
        GreedyRRTstar planner(problem, c, PlannerVariant::RRTConnect);
        return planner.solve(observer);
    }
}  // namespace grrt
