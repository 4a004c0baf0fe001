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

#ifndef GRRT_BENCH_HPP
#define GRRT_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grrt/planner.hpp"
#include "grrt/world.hpp"

namespace grrt
{
    /// Planner identifiers accepted by the harness.
    inline constexpr std::string_view kPlannerGreedy = "grrt_star";
    inline constexpr std::string_view kPlannerInformed = "grrt_star_dagger";
    inline constexpr std::string_view kPlannerConnect = "rrt_connect";

    struct ProblemSpec
    {
        ProblemKind kind{ProblemKind::NarrowPassage};
        std::vector<int> dims{2};
        ProblemParams params;
    };

    struct SuiteConfig
    {
        std::vector<std::string> planners{std::string(kPlannerGreedy)};
        std::vector<ProblemSpec> problems{ProblemSpec{}};
        std::size_t trials{10};
        double timeLimit{5.0};
        std::uint64_t seedBase{0};
        /// Greedy biasing ratio of grrt_star (grrt_star_dagger always uses 0).
        double epsilon{0.9};
        double virtualSecondsPerIteration{0.0};
        std::uint64_t iterationLimit{0};
        std::size_t workers{1};
        /// Planner knobs shared by every trial; epsilon, seed and budgets are
        /// filled in per trial.
        PlannerConfig planner;
        /// Shortcut attempts per simplification; 0 picks 10 x path size.
        std::size_t shortcutIterations{0};
        /// Scale of the verification suite run alongside; 0 skips it.
        double verifyScale{0.05};
        std::size_t gridPoints{200};
        double gridStart{1e-3};

        /// Throws InvalidArgument on out-of-range values.
        void validate() const;
    };

    /// Parses a JSON suite document; unknown keys are rejected.
    SuiteConfig parseSuiteConfig(std::string_view text);

    /// Serializes a configuration in the format parseSuiteConfig reads.
    std::string suiteConfigToJson(const SuiteConfig &config);

    /// Parses the JSON object of problem parameters (snake_case keys).
    ProblemParams parseProblemParams(std::string_view text);

    /// Replaces the seed base with BENCH_SEED when that variable is set.
    void applyEnvironment(SuiteConfig &config);

    struct TrialEvent
    {
        double elapsed{0.0};
        Cost cost{kInfiniteCost};
        EventTag tag{EventTag::Final};

        bool operator==(const TrialEvent &) const = default;
    };

    struct TrialRecord
    {
        std::string planner;
        std::string problem;
        int dim{0};
        std::uint64_t seed{0};
        /// Planner events; the last one is the final event.
        std::vector<TrialEvent> events;
        Cost simplifiedInitialCost{kInfiniteCost};
        Cost simplifiedFinalCost{kInfiniteCost};

        bool operator==(const TrialRecord &) const = default;
    };

    /// Runs one trial: plans, then shortcuts the initial and the final path.
    TrialRecord runTrial(const Problem &problem, const SuiteConfig &config, std::string_view planner,
                         std::uint64_t seed);

    /// Every planner x problem x dimension x trial, in that order. Trials run
    /// on `config.workers` threads; the output order does not depend on it.
    std::vector<TrialRecord> runSuite(const SuiteConfig &config);

    /// Header: planner,problem,dim,seed,elapsed_s,cost,tag
    std::string emitTrialsCsv(const std::vector<TrialRecord> &records);

    /// Inverse of emitTrialsCsv; throws ParseError.
    std::vector<TrialRecord> parseTrialsCsv(std::string_view text);

    /// Log-spaced times from start to stop, both included.
    std::vector<double> logTimeGrid(double start, double stop, std::size_t points);

    /// Median with infinity ordered above every finite value; the two middle
    /// values are averaged for even counts. Throws on an empty input.
    Cost medianCost(std::vector<Cost> values);

    /// One-based order-statistic ranks bracketing the median with at least the
    /// given confidence; empty when there are too few samples.
    std::optional<std::pair<std::size_t, std::size_t>> medianCiRanks(std::size_t n, double confidence);

    struct SummaryCell
    {
        std::string planner;
        std::string problem;
        int dim{0};
        std::size_t trials{0};
        std::vector<double> success;
        std::vector<Cost> median;
        /// Undefined (empty) entries when there are too few trials.
        std::vector<std::optional<Cost>> ciLower;
        std::vector<std::optional<Cost>> ciUpper;
        Cost initialMedian{kInfiniteCost};
        Cost finalMedian{kInfiniteCost};
    };

    struct SummaryTable
    {
        std::vector<double> timeGrid;
        std::vector<SummaryCell> cells;
        std::vector<std::string> warnings;
    };

    /// Step-interpolates every trial onto the grid and aggregates per
    /// (planner, problem, dim). Grid times past the last recorded time of a
    /// cell are clamped to it with a warning.
    SummaryTable summarize(const std::vector<TrialRecord> &records, const std::vector<double> &timeGrid);

    std::string summaryToJson(const SummaryTable &table);

    /// Writes trials.csv, summary.json, verification.json and config.json.
    void runAndWrite(const SuiteConfig &config, const std::string &outDir);

    /// Rebuilds summary.json from trials.csv and config.json in a directory.
    void summarizeDirectory(const std::string &dir);

    /// Runs the verification suite and writes verification.json.
    /// Returns true when every check passed.
    bool verifyToDirectory(const std::string &outDir, std::uint64_t seed, double scale);

    std::string readTextFile(const std::string &path);
    void writeTextFile(const std::string &path, std::string_view text);
}  // namespace grrt

#endif
