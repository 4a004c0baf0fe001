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

#ifndef GRRT_ANALYSIS_HPP
#define GRRT_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "grrt/grid_oracle.hpp"
#include "grrt/random.hpp"
#include "grrt/space.hpp"
#include "grrt/world.hpp"

namespace grrt
{
    /// Measure ratio of the greedy spheroid (diameter fMax) to the informed
    /// spheroid (diameter ci) sharing foci at distance cMin.
    double rhoClosedForm(Cost fMax, Cost ci, Cost cMin, int n);

    /// Expected samples to hit an improvement with greedy biasing ratio epsilon,
    /// relative to pure informed sampling: 1 / ((1 - eps) + eps * gamma / rho).
    double expectedSampleFactor(double epsilon, double gamma, double rho);

    /// Per-draw hit probability inside the greedy set implied by an informed-set
    /// hit probability and the recall and measure ratios. Throws if above 1.
    double greedyHitProbability(double informedHit, double gamma, double rho);

    /// Two-region waiting-time model. Each draw samples the greedy region with
    /// probability epsilon (hitting with probability greedyHit) and the informed
    /// region otherwise (hitting with probability informedHit). Returns the mean
    /// waiting time over `trials` runs divided by that of an epsilon = 0 baseline
    /// simulated from the same generator.
    double simulateSampleFactor(double epsilon, double informedHit, double greedyHit, std::size_t trials, Rng &rng);

    struct SetEstimate
    {
        /// Greedy-to-informed measure ratio (closed form).
        double rho{0.0};
        /// Share of the oracle improvement set inside the greedy set.
        double gamma{0.0};
        std::size_t sampleCount{0};
        /// Samples that fell in the improvement set.
        std::size_t improvementHits{0};
        /// 95% normal-approximation half-width of gamma.
        double halfWidth{0.0};
        Cost greedyDiameter{0.0};
    };

    /// Estimates the recall of the greedy set of `solution` against the grid
    /// improvement set { x : g*(x) + h*(x) < ci } by uniform sampling of the
    /// bounds. Pass an oracle to reuse one across calls. Throws
    /// PreconditionError when the improvement set receives no samples.
    SetEstimate estimateGamma(const Problem &problem, const Path &solution, Cost ci, std::size_t samples, Rng &rng,
                              const GridOracle *oracle = nullptr);

    /// Crossing parities of the path against a vertical ray from the top of
    /// every obstacle to the upper boundary. Equal for homotopic paths.
    std::vector<int> homotopySignature(const Problem &problem, const Path &path);

    /// True iff every vertex of the oracle shortest path satisfies
    /// f(x) <= f(x_max) + tolerance, where x_max maximizes the heuristic along
    /// `solution` and the tolerance covers toleranceCells grid cells. Throws
    /// PreconditionError if the solution and the oracle path differ in homotopy
    /// signature.
    bool optimumContained(const Problem &problem, const Path &solution, double toleranceCells = 2.0,
                                  const GridOracle *oracle = nullptr);

    /// Random path from start to goal through the narrow-passage gap, made of
    /// free waypoints on either side of the wall. Throws PreconditionError if
    /// none is found within the attempt budget.
    Path randomGapPath(const Problem &problem, const ProblemParams &params, std::size_t waypointsPerSide, Rng &rng);

    struct CheckResult
    {
        std::string name;
        bool passed{false};
        /// Headline measured quantity (worst error, hit count, ...).
        double value{0.0};
        double tolerance{0.0};
        double seconds{0.0};
        std::string detail;
    };

    /// Flattened spheroid samples must satisfy the heuristic bound; the closed
    /// form measure must match the Monte-Carlo hit rate of a bounding box.
    CheckResult checkGeometry(const std::vector<int> &dims, std::size_t containmentSamples,
                              std::size_t measureSamples, double relTolerance, std::uint64_t seed);

    /// rho identity on random triples plus exact boundary cases of the factor.
    CheckResult checkMeasureAlgebra(std::size_t triples, double relTolerance, std::uint64_t seed);

    /// Zero greedy hit probability must reproduce 1 / (1 - eps).
    CheckResult checkWorstCaseFactor(const std::vector<double> &epsilons, std::size_t trials, double relTolerance,
                                     std::uint64_t seed);

    /// Simulated factor against the closed form over a (gamma, rho) grid.
    CheckResult checkFactorGrid(double epsilon, const std::vector<double> &gammas, const std::vector<double> &rhos,
                                std::size_t trials, double relTolerance, std::uint64_t seed);

    /// Containment on randomized same-class solutions of planar narrow-passage
    /// worlds with random gap offsets.
    CheckResult checkContainment(std::size_t instances, double toleranceCells, std::size_t gridResolution,
                                 std::uint64_t seed);

    struct VerificationOptions
    {
        std::uint64_t seed{0};
        /// Multiplies every sample and trial count; 1 is the full suite.
        double scale{1.0};
    };

    std::vector<CheckResult> runVerificationSuite(const VerificationOptions &options);

    /// Versioned JSON report of a suite run.
    std::string verificationReport(const std::vector<CheckResult> &results, const VerificationOptions &options);
}  // namespace grrt

#endif
