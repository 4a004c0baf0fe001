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

#include "grrt/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>

#include "grrt/error.hpp"
#include "json.hpp"

namespace grrt
{
    namespace
    {
        constexpr double kZ95 = 1.959963984540054;

        double relativeError(double value, double reference)
        {
            return std::abs(value - reference) / std::abs(reference);
        }

        class Stopwatch
        {
        public:
            double seconds() const
            {
                return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            }

        private:
            std::chrono::steady_clock::time_point start_{std::chrono::steady_clock::now()};
        };

        std::size_t scaled(std::size_t count, double scale, std::size_t floor)
        {
            return std::max(floor, static_cast<std::size_t>(std::llround(static_cast<double>(count) * scale)));
        }

        double meanWaitingTime(double epsilon, double informedHit, double greedyHit, std::size_t trials, Rng &rng)
        {
            double total = 0.0;
            for (std::size_t t = 0; t < trials; ++t)
            {
                std::uint64_t draws = 0;
                for (;;)
                {
                    ++draws;
                    const bool greedy = rng.uniform01() < epsilon;
                    if (rng.uniform01() < (greedy ? greedyHit : informedHit))
                        break;
                }
                total += static_cast<double>(draws);
            }
            return total / static_cast<double>(trials);
        }
    }  // namespace

    double rhoClosedForm(Cost fMax, Cost ci, Cost cMin, int n)
    {
        if (n < 1)
            throw InvalidArgument("dimension must be positive");
        if (!(cMin >= 0.0) || !isFinite(ci))
            throw InvalidArgument("costs must be finite and non-negative");
        if (ci <= cMin)
            throw InvalidArgument("informed set is degenerate (c_i = c_min)");
        if (fMax < cMin - kGeometricTolerance || fMax > ci + kGeometricTolerance)
            throw InvalidArgument("greedy diameter must lie in [c_min, c_i]");
        fMax = std::clamp(fMax, cMin, ci);
        const double ratio = (fMax * fMax - cMin * cMin) / (ci * ci - cMin * cMin);
        return (fMax / ci) * std::pow(ratio, 0.5 * (n - 1));
    }

    double expectedSampleFactor(double epsilon, double gamma, double rho)
    {
        if (!(epsilon >= 0.0 && epsilon <= 1.0))
            throw InvalidArgument("epsilon must lie in [0, 1]");
        if (!(gamma >= 0.0 && gamma <= 1.0))
            throw InvalidArgument("gamma must lie in [0, 1]");
        if (!(rho > 0.0 && rho <= 1.0))
            throw InvalidArgument("rho must lie in (0, 1]");
        const double denominator = (1.0 - epsilon) + epsilon * gamma / rho;
        if (denominator == 0.0)
            throw InvalidArgument("sample factor is unbounded for epsilon = 1 and gamma = 0");
        return 1.0 / denominator;
    }

    double greedyHitProbability(double informedHit, double gamma, double rho)
    {
        if (!(informedHit >= 0.0 && informedHit <= 1.0))
            throw InvalidArgument("hit probability must lie in [0, 1]");
        if (!(gamma >= 0.0 && gamma <= 1.0) || !(rho > 0.0 && rho <= 1.0))
            throw InvalidArgument("gamma must lie in [0, 1] and rho in (0, 1]");
        const double q = gamma * informedHit / rho;
        if (q > 1.0)
            throw InvalidArgument("implied greedy hit probability exceeds 1");
        return q;
    }

    double simulateSampleFactor(double epsilon, double informedHit, double greedyHit, std::size_t trials, Rng &rng)
    {
        if (!(epsilon >= 0.0 && epsilon <= 1.0))
            throw InvalidArgument("epsilon must lie in [0, 1]");
        if (!(informedHit > 0.0 && informedHit <= 1.0))
            throw InvalidArgument("informed hit probability must lie in (0, 1]");
        if (!(greedyHit >= 0.0 && greedyHit <= 1.0))
            throw InvalidArgument("greedy hit probability must lie in [0, 1]");
        if (epsilon == 1.0 && greedyHit == 0.0)
            throw InvalidArgument("waiting time is unbounded for epsilon = 1 and zero greedy hit probability");
        if (trials == 0)
            throw InvalidArgument("trials must be positive");
        const double mixed = meanWaitingTime(epsilon, informedHit, greedyHit, trials, rng);
        const double baseline = meanWaitingTime(0.0, informedHit, greedyHit, trials, rng);
        return mixed / baseline;
    }

    SetEstimate estimateGamma(const Problem &problem, const Path &solution, Cost ci, std::size_t samples, Rng &rng,
                              const GridOracle *oracle)
    {
        if (samples == 0)
            throw InvalidArgument("samples must be positive");
        if (solution.size() < 2)
            throw InvalidArgument("solution needs at least two states");
        std::unique_ptr<GridOracle> owned;
        if (!oracle)
        {
            owned = std::make_unique<GridOracle>(problem);
            oracle = owned.get();
        }

        const Cost cMin = distance(problem.start(), problem.goal());
        SetEstimate out;
        out.greedyDiameter = greedyTransverseDiameter(solution, problem.start(), problem.goal());
        out.rho = rhoClosedForm(out.greedyDiameter, ci, cMin, static_cast<int>(problem.dimension()));
        out.sampleCount = samples;

        std::size_t inside = 0;
        for (std::size_t s = 0; s < samples; ++s)
        {
            const State x = sampleUniform(problem.bounds(), rng);
            const auto cell = oracle->cellOf(x);
            if (!cell || !oracle->cellFree(*cell))
                continue;
            if (!(oracle->costToCome(*cell) + oracle->costToGo(*cell) < ci))
                continue;
            ++out.improvementHits;
            if (l2Heuristic(x, problem.start(), problem.goal()) <= out.greedyDiameter)
                ++inside;
        }
        if (out.improvementHits == 0)
            throw PreconditionError("no sample fell in the oracle improvement set; raise c_i or the sample count");
        const double hits = static_cast<double>(out.improvementHits);
        out.gamma = static_cast<double>(inside) / hits;
        out.halfWidth = kZ95 * std::sqrt(out.gamma * (1.0 - out.gamma) / hits);
        return out;
    }

    std::vector<int> homotopySignature(const Problem &problem, const Path &path)
    {
        if (problem.dimension() != 2)
            throw PreconditionError("homotopy signatures are defined for planar problems");
        const auto &states = path.states();
        std::vector<int> signature;
        signature.reserve(problem.obstacles().size());
        for (const auto &o : problem.obstacles())
        {
            // Ray x0 = cx, x1 >= top, running to the upper boundary.
            const double cx = 0.5 * (o.low[0] + o.high[0]);
            const double top = o.high[1];
            int parity = 0;
            for (std::size_t i = 1; i < states.size(); ++i)
            {
                const State &p = states[i - 1];
                const State &q = states[i];
                if ((p[0] < cx) == (q[0] < cx))
                    continue;
                const double y = p[1] + (cx - p[0]) / (q[0] - p[0]) * (q[1] - p[1]);
                if (y >= top)
                    parity ^= 1;
            }
            signature.push_back(parity);
        }
        return signature;
    }

    bool optimumContained(const Problem &problem, const Path &solution, double toleranceCells,
                                  const GridOracle *oracle)
    {
        if (solution.size() < 2)
            throw InvalidArgument("solution needs at least two states");
        if (distance(solution.states().front(), problem.start()) > kGeometricTolerance ||
            distance(solution.states().back(), problem.goal()) > kGeometricTolerance)
            throw InvalidArgument("solution must run from the start to the goal");
        if (!(toleranceCells >= 0.0))
            throw InvalidArgument("tolerance must be non-negative");
        std::unique_ptr<GridOracle> owned;
        if (!oracle)
        {
            owned = std::make_unique<GridOracle>(problem);
            oracle = owned.get();
        }
        const Path optimal = oracle->shortestPath();
        if (optimal.empty())
            throw PreconditionError("grid oracle found no path");
        if (homotopySignature(problem, optimal) != homotopySignature(problem, solution))
            throw PreconditionError("solution and oracle path lie in different homotopy classes");

        const Cost fMax = greedyTransverseDiameter(solution, problem.start(), problem.goal());
        // Each heuristic term moves by at most the displacement of a vertex.
        const double cellDiagonal = std::hypot(oracle->cellSize(), oracle->cellSize());
        const double tolerance = 2.0 * toleranceCells * cellDiagonal;
        // The sublevel set is convex, so checking the vertices covers the path.
        for (const State &x : optimal.states())
            if (l2Heuristic(x, problem.start(), problem.goal()) > fMax + tolerance)
                return false;
        return true;
    }

    Path randomGapPath(const Problem &problem, const ProblemParams &params, std::size_t waypointsPerSide, Rng &rng)
    {
        if (problem.dimension() != 2)
            throw PreconditionError("gap paths are built for planar problems");
        const double margin = 0.01;
        const double face = 0.5 * params.wallThickness + margin;
        const double band = 0.15;
        const HyperRect &b = problem.bounds();
        const double gapLow = params.gapCenter - 0.5 * params.gapWidth + 0.25 * params.gapWidth;
        const double gapHigh = params.gapCenter + 0.5 * params.gapWidth - 0.25 * params.gapWidth;

        auto waypoint = [&](double xLow, double xHigh) {
            State x(2);
            x << rng.uniform(xLow, xHigh),
                rng.uniform(std::max(b.low[1], params.gapCenter - band), std::min(b.high[1], params.gapCenter + band));
            return x;
        };

        for (int attempt = 0; attempt < 1000; ++attempt)
        {
            std::vector<State> states{problem.start()};
            for (std::size_t k = 0; k < waypointsPerSide; ++k)
                states.push_back(waypoint(b.low[0], -face));
            const double y = rng.uniform(gapLow, gapHigh);
            State entry(2), exit(2);
            entry << -face, y;
            exit << face, y;
            states.push_back(entry);
            states.push_back(exit);
            for (std::size_t k = 0; k < waypointsPerSide; ++k)
                states.push_back(waypoint(face, b.high[0]));
            states.push_back(problem.goal());

            bool ok = true;
            for (std::size_t i = 1; i < states.size() && ok; ++i)
                ok = segmentFree(problem, states[i - 1], states[i]);
            if (ok)
                return Path(std::move(states));
        }
        throw PreconditionError("no collision-free gap path found");
    }

    CheckResult checkGeometry(const std::vector<int> &dims, std::size_t containmentSamples,
                              std::size_t measureSamples, double relTolerance, std::uint64_t seed)
    {
        Stopwatch watch;
        CheckResult r{"geometry", true, 0.0, relTolerance, 0.0, ""};
        Rng rng(seed, Stream::Analysis);
        std::ostringstream detail;
        std::size_t violations = 0;
        double worst = 0.0;
        for (int n : dims)
        {
            // Random foci and diameter; the focal axis is generally not aligned.
            State a(n), b(n);
            for (int d = 0; d < n; ++d)
            {
                a[d] = rng.uniform(-0.5, 0.5);
                b[d] = rng.uniform(-0.5, 0.5);
            }
            const Cost cMin = distance(a, b);
            const Cost c = cMin * rng.uniform(1.05, 1.6);
            const ProlateHyperspheroid phs(a, b, c);

            std::size_t bad = 0;
            for (std::size_t s = 0; s < containmentSamples; ++s)
            {
                const State x = sampleUniform(phs, rng);
                if (l2Heuristic(x, a, b) > c + kGeometricTolerance)
                    ++bad;
            }
            violations += bad;

            // Monte-Carlo over the tight axis-aligned box of the spheroid.
            Eigen::VectorXd radii = Eigen::VectorXd::Constant(n, 0.5 * std::sqrt(c * c - cMin * cMin));
            radii[0] = 0.5 * c;
            const Eigen::MatrixXd scaledAxes = phs.rotation() * radii.asDiagonal();
            const Eigen::VectorXd halfExtent = scaledAxes.rowwise().norm();
            const HyperRect box(phs.center() - halfExtent, phs.center() + halfExtent);
            std::size_t hits = 0;
            for (std::size_t s = 0; s < measureSamples; ++s)
                if (l2Heuristic(sampleUniform(box, rng), a, b) <= c)
                    ++hits;
            const double estimate = box.measure() * static_cast<double>(hits) / static_cast<double>(measureSamples);
            const double err = relativeError(estimate, phsMeasure(phs));
            worst = std::max(worst, err);
            detail << "n=" << n << " violations=" << bad << " measure_rel_err=" << err << "; ";
        }
        r.value = worst;
        r.passed = violations == 0 && worst <= relTolerance;
        r.detail = detail.str();
        r.seconds = watch.seconds();
        return r;
    }

    CheckResult checkMeasureAlgebra(std::size_t triples, double relTolerance, std::uint64_t seed)
    {
        Stopwatch watch;
        CheckResult r{"measure_algebra", true, 0.0, relTolerance, 0.0, ""};
        Rng rng(seed, Stream::Analysis);
        double worst = 0.0;
        for (std::size_t t = 0; t < triples; ++t)
        {
            const int n = 2 + static_cast<int>(rng.uniform01() * 7.0);
            const Cost cMin = rng.uniform(0.1, 2.0);
            const Cost ci = cMin * rng.uniform(1.01, 3.0);
            const Cost fMax = rng.uniform(cMin, ci);
            const double ratio = phsMeasure(fMax, cMin, n) / phsMeasure(ci, cMin, n);
            if (ratio == 0.0)
                continue;
            worst = std::max(worst, relativeError(rhoClosedForm(fMax, ci, cMin, n), ratio));
        }
        bool exact = true;
        for (double eps : {0.0, 0.25, 0.5, 0.9})
        {
            exact = exact && expectedSampleFactor(eps, 0.0, 0.5) == 1.0 / (1.0 - eps);
            exact = exact && expectedSampleFactor(0.0, 0.3, 0.7) == 1.0;
            exact = exact && expectedSampleFactor(eps, 0.4, 0.4) == 1.0;
        }
        r.value = worst;
        r.passed = exact && worst <= relTolerance;
        r.detail = std::string("boundary cases ") + (exact ? "exact" : "inexact");
        r.seconds = watch.seconds();
        return r;
    }

    CheckResult checkWorstCaseFactor(const std::vector<double> &epsilons, std::size_t trials, double relTolerance,
                                     std::uint64_t seed)
    {
        Stopwatch watch;
        CheckResult r{"worst_case_factor", true, 0.0, relTolerance, 0.0, ""};
        Rng rng(seed, Stream::Analysis);
        std::ostringstream detail;
        for (double eps : epsilons)
        {
            const double ratio = simulateSampleFactor(eps, 0.1, 0.0, trials, rng);
            const double err = relativeError(ratio, 1.0 / (1.0 - eps));
            r.value = std::max(r.value, err);
            detail << "eps=" << eps << " ratio=" << ratio << "; ";
        }
        r.passed = r.value <= relTolerance;
        r.detail = detail.str();
        r.seconds = watch.seconds();
        return r;
    }

    CheckResult checkFactorGrid(double epsilon, const std::vector<double> &gammas, const std::vector<double> &rhos,
                                std::size_t trials, double relTolerance, std::uint64_t seed)
    {
        Stopwatch watch;
        CheckResult r{"factor_grid", true, 0.0, relTolerance, 0.0, ""};
        Rng rng(seed, Stream::Analysis);
        std::ostringstream detail;
        const double informedHit = 0.1;
        for (double gamma : gammas)
            for (double rho : rhos)
            {
                const double q = greedyHitProbability(informedHit, gamma, rho);
                const double ratio = simulateSampleFactor(epsilon, informedHit, q, trials, rng);
                const double err = relativeError(ratio, expectedSampleFactor(epsilon, gamma, rho));
                r.value = std::max(r.value, err);
                detail << "(" << gamma << "," << rho << ")=" << ratio << "; ";
            }
        r.passed = r.value <= relTolerance;
        r.detail = detail.str();
        r.seconds = watch.seconds();
        return r;
    }

    CheckResult checkContainment(std::size_t instances, double toleranceCells, std::size_t gridResolution,
                                 std::uint64_t seed)
    {
        Stopwatch watch;
        CheckResult r{"containment", true, 0.0, toleranceCells, 0.0, ""};
        Rng rng(seed, Stream::Analysis);
        std::size_t held = 0;
        for (std::size_t k = 0; k < instances; ++k)
        {
            ProblemParams params;
            params.gapCenter = rng.uniform(-0.2, 0.2);
            const Problem problem = makeProblem(ProblemKind::NarrowPassage, 2, params);
            const GridOracle oracle(problem, gridResolution);
            const Path solution = randomGapPath(problem, params, 1 + k % 4, rng);
            if (optimumContained(problem, solution, toleranceCells, &oracle))
                ++held;
        }
        r.value = static_cast<double>(held);
        r.passed = held == instances;
        r.detail = std::to_string(held) + "/" + std::to_string(instances) + " instances contained";
        r.seconds = watch.seconds();
        return r;
    }

    std::vector<CheckResult> runVerificationSuite(const VerificationOptions &options)
    {
        if (!(options.scale > 0.0))
            throw InvalidArgument("verification scale must be positive");
        const double s = options.scale;
        const std::uint64_t seed = options.seed;
        std::vector<CheckResult> out;
        out.push_back(checkGeometry({2, 4, 8}, scaled(100000, s, 1000), scaled(1000000, s, 10000), 0.02, seed));
        out.push_back(checkMeasureAlgebra(scaled(1000, s, 10), 1e-12, seed + 1));
        out.push_back(checkWorstCaseFactor({0.5, 0.9}, scaled(100000, s, 1000), 0.10, seed + 2));
        out.push_back(checkFactorGrid(0.9, {0.2, 0.5, 0.8}, {0.3, 0.6, 0.9}, scaled(100000, s, 1000), 0.05, seed + 3));
        out.push_back(checkContainment(scaled(20, s, 2), 2.0, 512, seed + 4));
        return out;
    }

    std::string verificationReport(const std::vector<CheckResult> &results, const VerificationOptions &options)
    {
        nlohmann::ordered_json doc;
        doc["format"] = 1;
        doc["seed"] = options.seed;
        doc["scale"] = options.scale;
        bool all = true;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto &r : results)
        {
            all = all && r.passed;
            checks.push_back({{"name", r.name},
                              {"passed", r.passed},
                              {"value", r.value},
                              {"tolerance", r.tolerance},
                              {"seconds", r.seconds},
                              {"detail", r.detail}});
        }
        doc["passed"] = all;
        doc["checks"] = std::move(checks);
        return doc.dump(2) + "\n";
    }
}  // namespace grrt
