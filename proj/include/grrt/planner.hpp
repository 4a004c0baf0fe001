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

#ifndef GRRT_PLANNER_HPP
#define GRRT_PLANNER_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "grrt/random.hpp"
#include "grrt/search_tree.hpp"
#include "grrt/space.hpp"
#include "grrt/world.hpp"

namespace grrt
{
    /// Point at most maxEdge away from `from` on the segment towards `to`;
    /// returns `to` itself when it is within reach.
    State steer(const State &from, const State &to, double maxEdge);

    /// Draws a state within the bounds and, for finite c, inside the informed
    /// set { x : f(x) <= c }. Rejection-samples whichever of the spheroid and the
    /// bounds has the smaller measure; throws SamplingError after retryBudget
    /// rejections.
    State sampleInformed(const Problem &problem, Cost c, Rng &rng, std::size_t retryBudget);

    enum class ExtendStatus
    {
        Reached,
        Advanced,
        Trapped,
    };

    std::string_view toString(ExtendStatus status);

    struct ExtendResult
    {
        ExtendStatus status;
        /// The steered state (also reported when trapped).
        State state;
        /// Vertex that now holds `state`; empty when trapped.
        std::optional<VertexId> vertex;
    };

    enum class EventTag
    {
        Initial,
        Improvement,
        Final,
    };

    std::string_view toString(EventTag tag);
    /// Throws ParseError on unknown names.
    EventTag eventTagFromString(std::string_view name);

    struct CostEvent
    {
        double elapsed;
        Cost cost;
        EventTag tag;
        std::uint64_t iteration;

        bool operator==(const CostEvent &) const = default;
    };

    using Observer = std::function<void(const CostEvent &)>;

    /// Which bridges contribute ancestors to the greedy transverse diameter.
    enum class GreedyScope
    {
        /// Only the current best solution path.
        BestBridge,
        /// Every recorded bridge, as the ComputeBestCost pseudocode is written.
        AllBridges,
    };

    struct PlannerConfig
    {
        /// Probability of sampling the greedy informed set. 0 gives the purely
        /// informed bidirectional variant.
        double epsilon{0.9};
        /// Steering range; 0 selects 0.2 x the domain diagonal.
        double maxEdge{0.0};
        /// Rewiring radius constant.
        double eta{1.001};
        /// Near-parent selection and rewiring only once a solution exists.
        bool delayRewiring{true};
        /// Prune both trees whenever the greedy latch improves.
        bool prune{true};
        /// Let the smaller tree extend when one tree is over twice the other.
        bool balanced{true};
        /// Skip edges that cannot improve the current solution.
        bool heuristicGate{true};
        GreedyScope greedyScope{GreedyScope::BestBridge};
        std::uint64_t seed{0};
        /// Wall-clock (or virtual) budget in seconds; infinity for none.
        double timeLimit{1.0};
        /// Iteration budget; 0 for none.
        std::uint64_t iterationLimit{0};
        /// When positive, elapsed time is iterations x this value instead of
        /// wall-clock time, making runs fully deterministic.
        double virtualSecondsPerIteration{0.0};
        bool stopAtFirstSolution{false};
        /// Sampling rejections allowed per dimension before giving up.
        std::size_t sampleRetriesPerDimension{100};

        /// Throws InvalidArgument on out-of-range fields.
        void validate() const;
    };

    struct PlannerStats
    {
        std::uint64_t iterations{0};
        std::uint64_t samplingFailures{0};
        std::uint64_t gatedExtensions{0};
        std::uint64_t rewires{0};
        std::uint64_t prunedVertices{0};
        std::size_t startTreeSize{0};
        std::size_t goalTreeSize{0};
        std::size_t bridges{0};
    };

    struct PlannerResult
    {
        Path bestPath;
        Cost bestCost{kInfiniteCost};
        Path initialPath;
        Cost initialCost{kInfiniteCost};
        double initialTime{kInfiniteCost};
        double elapsed{0.0};
        std::vector<CostEvent> events;
        PlannerStats stats;

        bool solved() const
        {
            return isFinite(bestCost);
        }
    };

    /// Record of one ComputeBestCost call, for inspection.
    struct BestCostTrace
    {
        /// Cheapest bridge cost (the true current solution cost).
        Cost solutionCost{kInfiniteCost};
        /// Value handed to the sampler.
        Cost returned{kInfiniteCost};
        bool greedyBranch{false};
        bool latchUpdated{false};
    };

    enum class PlannerVariant
    {
        /// Bidirectional RRT* with greedy informed sampling.
        GreedyRRTstar,
        /// Plain RRT-Connect: uniform sampling, nearest-only parenting, no gate.
        RRTConnect,
    };

    /// Bidirectional anytime planner. Tree 0 is rooted at the start state and
    /// tree 1 at the goal; the roles of extending and connecting tree swap
    /// every iteration. Single-threaded.
    class GreedyRRTstar
    {
    public:
        GreedyRRTstar(const Problem &problem, PlannerConfig config,
                      PlannerVariant variant = PlannerVariant::GreedyRRTstar);

        /// Runs until the time or iteration budget is spent.
        PlannerResult solve(const Observer &observer = {});

        /// One iteration: best cost, sample, extend, connect, swap.
        void iterate();

        /// Minimum bridge cost, greedy/informed branch and latch maintenance.
        Cost computeBestCost();

        /// Draws the next random state for sampling bound c.
        State sample(Cost c);

        /// One Extend* step of the given tree towards x with gating cost gate.
        ExtendResult extend(int side, const State &x, Cost gate);

        /// Repeated extension towards x until reached or trapped.
        ExtendResult connect(int side, const State &x, Cost gate);

        /// Records a connection between live vertices of the two trees whose
        /// states are joined by a free segment. Throws InvalidArgument otherwise.
        void addBridge(const SolutionBridge &bridge);

        const SearchTree &tree(int side) const
        {
            return trees_[side];
        }

        const std::vector<SolutionBridge> &bridges() const
        {
            return bridges_;
        }

        /// Index (0 = start tree, 1 = goal tree) of the tree extended next.
        int extender() const
        {
            return extender_;
        }

        Cost bestLatch() const
        {
            return latchBest_;
        }

        Cost greedyLatch() const
        {
            return latchMax_;
        }

        const BestCostTrace &lastBestCost() const
        {
            return lastTrace_;
        }

        /// Cheapest current bridge cost, ignoring stale bridges.
        Cost currentSolutionCost() const;

        /// Path through the cheapest live bridge; empty if none.
        Path currentSolution() const;

        /// Max heuristic over the ancestors of the bridges in scope.
        Cost greedyDiameter(GreedyScope scope) const;

        bool rewiringActive() const;

        double maxEdge() const
        {
            return maxEdge_;
        }

        const PlannerStats &stats() const
        {
            return stats_;
        }

        const PlannerConfig &config() const
        {
            return config_;
        }

    private:
        std::optional<std::size_t> bestBridgeIndex() const;
        void dropStaleBridges();
        void trackBest(double elapsed, const Observer &observer);

        const Problem &problem_;
        PlannerConfig config_;
        PlannerVariant variant_;
        std::array<SearchTree, 2> trees_;
        std::vector<SolutionBridge> bridges_;
        Rng rng_;
        double maxEdge_;
        double freeMeasureBound_;
        int extender_{0};
        bool hasSolution_{false};
        Cost solutionCost_{kInfiniteCost};
        Cost latchBest_{kInfiniteCost};
        Cost latchMax_{kInfiniteCost};
        BestCostTrace lastTrace_;
        PlannerStats stats_;

        PlannerResult result_;
    };

    PlannerResult grrtStarPlan(const Problem &problem, const PlannerConfig &config, const Observer &observer = {});

    /// Terminates at the first solution.
    PlannerResult rrtConnectPlan(const Problem &problem, const PlannerConfig &config, const Observer &observer = {});
}  // namespace grrt

#endif
