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

#include "grrt/space.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "grrt/error.hpp"

namespace grrt
{
    std::uint64_t mixSeed(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    void requireCompatible(const State &a, const State &b)
    {
        if (a.size() != b.size())
        {
            std::ostringstream msg;
            msg << "dimension mismatch: " << a.size() << " vs " << b.size();
            throw InvalidArgument(msg.str());
        }
        if (a.size() == 0)
            throw InvalidArgument("states must have dimension >= 1");
        if (!a.allFinite() || !b.allFinite())
            throw InvalidArgument("state coordinates must be finite");
    }

    double distance(const State &a, const State &b)
    {
        return (a - b).norm();
    }

    HyperRect::HyperRect(State lowCorner, State highCorner) : low(std::move(lowCorner)), high(std::move(highCorner))
    {
        requireCompatible(low, high);
        for (Eigen::Index i = 0; i < low.size(); ++i)
            if (low[i] > high[i])
                throw InvalidArgument("box has low > high in coordinate " + std::to_string(i));
    }

    bool HyperRect::contains(const State &x) const
    {
        for (Eigen::Index i = 0; i < low.size(); ++i)
            if (x[i] < low[i] || x[i] > high[i])
                return false;
        return true;
    }

    double HyperRect::measure() const
    {
        return (high - low).prod();
    }

    bool HyperRect::operator==(const HyperRect &other) const
    {
        return low.size() == other.low.size() && low == other.low && high == other.high;
    }

    Cost pathLength(const std::vector<State> &states)
    {
        if (states.empty())
            return kInfiniteCost;
        Cost total = 0.0;
        for (std::size_t i = 1; i < states.size(); ++i)
            total += distance(states[i - 1], states[i]);
        return total;
    }

    Path::Path(std::vector<State> states) : states_(std::move(states))
    {
        if (states_.size() < 2)
            throw InvalidArgument("a path needs at least two states");
        for (const auto &s : states_)
            requireCompatible(states_.front(), s);
        cost_ = pathLength(states_);
    }

    Cost l2Heuristic(const State &x, const State &start, const State &goal)
    {
        requireCompatible(x, start);
        requireCompatible(x, goal);
        return distance(x, start) + distance(x, goal);
    }

    Cost greedyTransverseDiameter(const Path &path, const State &start, const State &goal)
    {
        if (path.empty())
            throw InvalidArgument("greedy transverse diameter of an empty path");
        Cost best = -1.0;
        for (const auto &x : path.states())
            best = std::max(best, l2Heuristic(x, start, goal));
        return best;
    }

    double unitBallMeasure(int n)
    {
        if (n <= 0)
            throw InvalidArgument("unit ball measure needs n >= 1");
        const double half = 0.5 * n;
        return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
    }

    double phsMeasure(Cost transverseDiameter, Cost minimumCost, int n)
    {
        if (n <= 0)
            throw InvalidArgument("spheroid measure needs n >= 1");
        if (transverseDiameter < minimumCost)
            throw InvalidArgument("transverse diameter below focal distance");
        const double conjugateSq = transverseDiameter * transverseDiameter - minimumCost * minimumCost;
        return unitBallMeasure(n) / std::pow(2.0, n) * transverseDiameter * std::pow(conjugateSq, 0.5 * (n - 1));
    }

    Eigen::MatrixXd rotationFromFirstAxis(const Eigen::VectorXd &unitVector)
    {
        const auto n = unitVector.size();
        Eigen::MatrixXd rotation = Eigen::MatrixXd::Identity(n, n);
        Eigen::VectorXd v = unitVector;
        v[0] -= 1.0;
        const double vv = v.squaredNorm();
        if (vv < 1e-24)
            return rotation;
        rotation -= (2.0 / vv) * v * v.transpose();
        return rotation;
    }

    ProlateHyperspheroid::ProlateHyperspheroid(State focusA, State focusB, Cost transverseDiameter)
      : focusA_(std::move(focusA)), focusB_(std::move(focusB)), transverseDiameter_(transverseDiameter)
    {
        requireCompatible(focusA_, focusB_);
        if (!std::isfinite(transverseDiameter_))
            throw InvalidArgument("spheroid transverse diameter must be finite");
        center_ = 0.5 * (focusA_ + focusB_);
        minimumCost_ = distance(focusA_, focusB_);
        if (transverseDiameter_ < minimumCost_ - kGeometricTolerance)
            throw InvalidArgument("empty spheroid: transverse diameter below focal distance");
        transverseDiameter_ = std::max(transverseDiameter_, minimumCost_);

        const auto n = focusA_.size();
        if (minimumCost_ > 0.0)
            rotation_ = rotationFromFirstAxis((focusB_ - focusA_) / minimumCost_);
        else
            rotation_ = Eigen::MatrixXd::Identity(n, n);

        const double conjugate =
            std::sqrt(std::max(0.0, transverseDiameter_ * transverseDiameter_ - minimumCost_ * minimumCost_));
        radii_ = Eigen::VectorXd::Constant(n, 0.5 * conjugate);
        radii_[0] = 0.5 * transverseDiameter_;
    }

    bool ProlateHyperspheroid::isDegenerate() const
    {
        return transverseDiameter_ - minimumCost_ < 1e-12;
    }

    double ProlateHyperspheroid::measure() const
    {
        return phsMeasure(transverseDiameter_, minimumCost_, static_cast<int>(dimension()));
    }

    bool ProlateHyperspheroid::contains(const State &x, double tolerance) const
    {
        return l2Heuristic(x, focusA_, focusB_) <= transverseDiameter_ + tolerance;
    }

    State ProlateHyperspheroid::fromUnitBall(const Eigen::VectorXd &ball) const
    {
        return rotation_ * radii_.cwiseProduct(ball) + center_;
    }

    Eigen::VectorXd sampleUnitBall(std::size_t n, Rng &rng)
    {
        Eigen::VectorXd direction(static_cast<Eigen::Index>(n));
        double norm = 0.0;
        do
        {
            for (Eigen::Index i = 0; i < direction.size(); ++i)
                direction[i] = rng.normal();
            norm = direction.norm();
        } while (norm == 0.0);
        const double radius = std::pow(rng.uniform01(), 1.0 / static_cast<double>(n));
        return direction * (radius / norm);
    }

    State sampleUniform(const ProlateHyperspheroid &phs, Rng &rng)
    {
        if (phs.isDegenerate())
        {
            const double t = rng.uniform01();
            return phs.focusA() + t * (phs.focusB() - phs.focusA());
        }
        return phs.fromUnitBall(sampleUnitBall(phs.dimension(), rng));
    }

    State sampleUniform(const HyperRect &bounds, Rng &rng)
    {
        State x(bounds.low.size());
        for (Eigen::Index i = 0; i < x.size(); ++i)
            x[i] = bounds.low[i] == bounds.high[i] ? bounds.low[i] : rng.uniform(bounds.low[i], bounds.high[i]);
        return x;
    }
}  // namespace grrt
