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

#ifndef GRRT_SPACE_HPP
#define GRRT_SPACE_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "grrt/random.hpp"

namespace grrt
{
    /// A point in R^n. All states of one problem share the same dimension.
    using State = Eigen::VectorXd;

    /// Path-length cost; +infinity means "no solution".
    using Cost = double;

    inline constexpr Cost kInfiniteCost = std::numeric_limits<double>::infinity();

    /// Absolute tolerance for geometric identities on the unit domain.
    inline constexpr double kGeometricTolerance = 1e-9;

    inline bool isFinite(Cost c)
    {
        return c < kInfiniteCost;
    }

    /// Throws InvalidArgument unless both states have the same dimension and
    /// all coordinates are finite.
    void requireCompatible(const State &a, const State &b);

    double distance(const State &a, const State &b);

    /// Axis-aligned box [low, high]. Used both for domain bounds and obstacles.
    struct HyperRect
    {
        State low;
        State high;

        HyperRect() = default;
        /// Throws InvalidArgument if dimensions differ or low[i] > high[i].
        HyperRect(State lowCorner, State highCorner);

        std::size_t dimension() const
        {
            return static_cast<std::size_t>(low.size());
        }

        /// Closed-set membership: the boundary is inside.
        bool contains(const State &x) const;

        double diagonal() const
        {
            return (high - low).norm();
        }

        /// Lebesgue measure (product of side lengths).
        double measure() const;

        bool operator==(const HyperRect &other) const;
    };

    /// A polyline from the start state to the goal state.
    class Path
    {
    public:
        Path() = default;
        explicit Path(std::vector<State> states);

        const std::vector<State> &states() const
        {
            return states_;
        }

        std::size_t size() const
        {
            return states_.size();
        }

        bool empty() const
        {
            return states_.empty();
        }

        /// Sum of consecutive Euclidean segment lengths; +inf for an empty path.
        Cost cost() const
        {
            return cost_;
        }

    private:
        std::vector<State> states_;
        Cost cost_{kInfiniteCost};
    };

    Cost pathLength(const std::vector<State> &states);

    /// The standard L2 informed heuristic: ||x - start|| + ||x - goal||.
    Cost l2Heuristic(const State &x, const State &start, const State &goal);

    /// Maximum of l2Heuristic over the path vertices (the greedy informed set's
    /// transverse diameter). For a polyline the maximum over the continuous
    /// curve is attained at a vertex because the heuristic is convex.
    Cost greedyTransverseDiameter(const Path &path, const State &start, const State &goal);

    /// Lebesgue measure of the unit n-ball, pi^(n/2) / Gamma(n/2 + 1).
    double unitBallMeasure(int n);

    /// Prolate hyperspheroid with foci at the start and goal states:
    /// { x : ||x - a|| + ||x - b|| <= transverseDiameter }.
    class ProlateHyperspheroid
    {
    public:
        /// Throws InvalidArgument when the set is empty
        /// (transverseDiameter < focal distance beyond tolerance).
        ProlateHyperspheroid(State focusA, State focusB, Cost transverseDiameter);

        const State &focusA() const
        {
            return focusA_;
        }

        const State &focusB() const
        {
            return focusB_;
        }

        const State &center() const
        {
            return center_;
        }

        /// Focal distance, the theoretical minimum path cost.
        Cost minimumCost() const
        {
            return minimumCost_;
        }

        Cost transverseDiameter() const
        {
            return transverseDiameter_;
        }

        /// Orthonormal matrix whose first column is the unit focal vector.
        const Eigen::MatrixXd &rotation() const
        {
            return rotation_;
        }

        std::size_t dimension() const
        {
            return static_cast<std::size_t>(center_.size());
        }

        /// True when the spheroid has collapsed onto the focal segment.
        bool isDegenerate() const;

        /// Closed-form Lebesgue measure.
        double measure() const;

        bool contains(const State &x, double tolerance = kGeometricTolerance) const;

        /// Maps a point of the unit n-ball into the spheroid.
        State fromUnitBall(const Eigen::VectorXd &ball) const;

    private:
        State focusA_;
        State focusB_;
        State center_;
        Cost minimumCost_;
        Cost transverseDiameter_;
        Eigen::MatrixXd rotation_;
        Eigen::VectorXd radii_;
    };

    /// Closed-form measure of a spheroid with transverse diameter d and focal
    /// distance dmin in R^n: (zeta_n / 2^n) d (d^2 - dmin^2)^((n-1)/2).
    double phsMeasure(Cost transverseDiameter, Cost minimumCost, int n);

    inline double phsMeasure(const ProlateHyperspheroid &phs)
    {
        return phsMeasure(phs.transverseDiameter(), phs.minimumCost(), static_cast<int>(phs.dimension()));
    }

    /// Uniform sample from the unit n-ball.
    Eigen::VectorXd sampleUnitBall(std::size_t n, Rng &rng);

    /// Uniform sample over the spheroid; for a degenerate spheroid, uniform on
    /// the focal segment.
    State sampleUniform(const ProlateHyperspheroid &phs, Rng &rng);

    /// Uniform sample over a box.
    State sampleUniform(const HyperRect &bounds, Rng &rng);

    /// Householder reflection mapping e_1 onto the given unit vector.
    Eigen::MatrixXd rotationFromFirstAxis(const Eigen::VectorXd &unitVector);
}  // namespace grrt

#endif
