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

#include "grrt/world.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "grrt/error.hpp"

namespace grrt
{
    namespace
    {
        constexpr int kProblemFormat = 1;
        constexpr double kDomainHalfWidth = 0.5;

        bool boxesOverlap(const HyperRect &a, const State &low, const State &high)
        {
            for (Eigen::Index i = 0; i < low.size(); ++i)
                if (a.high[i] < low[i] || a.low[i] > high[i])
                    return false;
            return true;
        }

        /// Box spanning the full domain except in the first two coordinates.
        HyperRect slab(int n, double x0Low, double x0High, double x1Low, double x1High)
        {
            State low = State::Constant(n, -kDomainHalfWidth);
            State high = State::Constant(n, kDomainHalfWidth);
            low[0] = x0Low;
            high[0] = x0High;
            low[1] = x1Low;
            high[1] = x1High;
            return {low, high};
        }

        State onFirstAxis(int n, double x0)
        {
            State x = State::Zero(n);
            x[0] = x0;
            return x;
        }

        void requirePositive(double value, const char *name)
        {
            if (!(value > 0.0))
                throw InvalidArgument(std::string("problem parameter must be positive: ") + name);
        }

        /// Hollow square (in the first two axes) centred at cx with one wall
        /// pierced by an opening; openingSide is -1 for the low-x0 face, +1 for
        /// the high-x0 face.
        void addEnclosure(std::vector<HyperRect> &out, int n, double cx, int openingSide, const ProblemParams &p)
        {
            const double h = 0.5 * p.enclosureEdge;
            const double w = p.enclosureWall;
            const double o = 0.5 * p.enclosureOpening;
            const double x0 = cx - h;
            const double x1 = cx + h;
            // top and bottom
            out.push_back(slab(n, x0, x1, h - w, h));
            out.push_back(slab(n, x0, x1, -h, -h + w));
            // closed face
            if (openingSide < 0)
                out.push_back(slab(n, x1 - w, x1, -h, h));
            else
                out.push_back(slab(n, x0, x0 + w, -h, h));
            // face with the opening
            const double fLow = openingSide < 0 ? x0 : x1 - w;
            const double fHigh = openingSide < 0 ? x0 + w : x1;
            out.push_back(slab(n, fLow, fHigh, -h, -o));
            out.push_back(slab(n, fLow, fHigh, o, h));
        }

        nlohmann::json toJson(const State &x)
        {
            return std::vector<double>(x.data(), x.data() + x.size());
        }

        State stateFromJson(const nlohmann::json &j, const char *field)
        {
            if (!j.is_array())
                throw ParseError(std::string("field '") + field + "' must be an array of numbers");
            State x(static_cast<Eigen::Index>(j.size()));
            for (std::size_t i = 0; i < j.size(); ++i)
            {
                if (!j[i].is_number())
                    throw ParseError(std::string("field '") + field + "' must be an array of numbers");
                x[static_cast<Eigen::Index>(i)] = j[i].get<double>();
            }
            return x;
        }

        const nlohmann::json &require(const nlohmann::json &doc, const char *field)
        {
            auto it = doc.find(field);
            if (it == doc.end())
                throw ParseError(std::string("problem document is missing '") + field + "'");
            return *it;
        }

        HyperRect boxFromJson(const nlohmann::json &j, const char *what)
        {
            if (!j.is_object())
                throw ParseError(std::string(what) + " must be an object with low/high");
            return {stateFromJson(require(j, "low"), "low"), stateFromJson(require(j, "high"), "high")};
        }
    }  // namespace

    Problem::Problem(HyperRect bounds, std::vector<HyperRect> obstacles, State start, State goal,
                     double collisionResolution, std::string name)
      : bounds_(std::move(bounds))
      , obstacles_(std::move(obstacles))
      , start_(std::move(start))
      , goal_(std::move(goal))
      , resolution_(collisionResolution)
      , name_(std::move(name))
    {
        requireCompatible(bounds_.low, bounds_.high);
        requireCompatible(bounds_.low, start_);
        requireCompatible(bounds_.low, goal_);
        for (const auto &o : obstacles_)
        {
            requireCompatible(bounds_.low, o.low);
            requireCompatible(bounds_.low, o.high);
            if ((o.low.array() > o.high.array()).any())
                throw InvalidArgument("obstacle has low > high");
        }
        if (!(resolution_ > 0.0) || !std::isfinite(resolution_))
            throw InvalidArgument("collision resolution must be positive");
        if (!isFree(*this, start_))
            throw InvalidArgument("start state is not collision-free");
        if (!isFree(*this, goal_))
            throw InvalidArgument("goal state is not collision-free");
    }

    Problem Problem::withResolution(double collisionResolution) const
    {
        return {bounds_, obstacles_, start_, goal_, collisionResolution, name_};
    }

    bool Problem::operator==(const Problem &other) const
    {
        return bounds_ == other.bounds_ && obstacles_ == other.obstacles_ && start_.size() == other.start_.size() &&
               start_ == other.start_ && goal_.size() == other.goal_.size() && goal_ == other.goal_ &&
               resolution_ == other.resolution_ && name_ == other.name_;
    }

    bool isFree(const Problem &problem, const State &x)
    {
        if (static_cast<std::size_t>(x.size()) != problem.dimension())
            throw InvalidArgument("state dimension does not match the problem");
        if (!problem.bounds().contains(x))
            return false;
        return std::none_of(problem.obstacles().begin(), problem.obstacles().end(),
                            [&](const HyperRect &o) { return o.contains(x); });
    }

    std::size_t segmentSubdivisions(const Problem &problem, double length)
    {
        const double step = problem.collisionStep();
        std::size_t k = 1;
        while (static_cast<double>(k) * step < length)
            k *= 2;
        return k;
    }

    bool segmentFree(const Problem &problem, const State &a, const State &b)
    {
        if (!isFree(problem, a) || !isFree(problem, b))
            return false;

        // Canonical direction so the checked points do not depend on argument order.
        const bool swap = std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
        const State &from = swap ? b : a;
        const State &to = swap ? a : b;

        const State low = from.cwiseMin(to);
        const State high = from.cwiseMax(to);
        std::vector<const HyperRect *> candidates;
        for (const auto &o : problem.obstacles())
            if (boxesOverlap(o, low, high))
                candidates.push_back(&o);
        // The bounds are convex, so with no candidate obstacle every point is free.
        if (candidates.empty())
            return true;

        const State delta = to - from;
        const std::size_t k = segmentSubdivisions(problem, delta.norm());
        State x(from.size());
        for (std::size_t i = 1; i < k; ++i)
        {
            x = from + delta * (static_cast<double>(i) / static_cast<double>(k));
            for (const HyperRect *o : candidates)
                if (o->contains(x))
                    return false;
        }
        return true;
    }

    std::string_view toString(ProblemKind kind)
    {
        switch (kind)
        {
            case ProblemKind::Empty:
                return "empty";
            case ProblemKind::ManyHomotopy:
                return "many_homotopy";
            case ProblemKind::NarrowPassage:
                return "narrow_passage";
            case ProblemKind::DoubleEnclosure:
                return "double_enclosure";
        }
        return "unknown";
    }

    ProblemKind problemKindFromString(std::string_view name)
    {
        for (auto kind : {ProblemKind::Empty, ProblemKind::ManyHomotopy, ProblemKind::NarrowPassage,
                          ProblemKind::DoubleEnclosure})
            if (toString(kind) == name)
                return kind;
        throw InvalidArgument("unknown problem kind '" + std::string(name) + "'");
    }

    Problem makeProblem(ProblemKind kind, int n, const ProblemParams &p)
    {
        if (n < 2)
            throw InvalidArgument("benchmark problems need n >= 2");
        requirePositive(p.collisionResolution, "collisionResolution");

        const HyperRect bounds(State::Constant(n, -kDomainHalfWidth), State::Constant(n, kDomainHalfWidth));
        std::vector<HyperRect> obstacles;
        State start = onFirstAxis(n, -0.3);
        State goal = onFirstAxis(n, 0.3);

        switch (kind)
        {
            case ProblemKind::Empty:
                break;
            case ProblemKind::ManyHomotopy:
            {
                requirePositive(p.cubeEdge, "cubeEdge");
                requirePositive(p.gridPitch, "gridPitch");
                if (p.gridCount < 1)
                    throw InvalidArgument("problem parameter must be positive: gridCount");
                if (p.cubeEdge >= p.gridPitch)
                    throw InvalidArgument("cubes would overlap: cubeEdge >= gridPitch");
                start = onFirstAxis(n, -0.25);
                goal = onFirstAxis(n, 0.25);
                const double offset = 0.5 * (p.gridCount - 1);
                const double h = 0.5 * p.cubeEdge;
                for (int i = 0; i < p.gridCount; ++i)
                    for (int j = 0; j < p.gridCount; ++j)
                    {
                        const double cx = (i - offset) * p.gridPitch;
                        const double cy = (j - offset) * p.gridPitch;
                        obstacles.push_back(slab(n, cx - h, cx + h, cy - h, cy + h));
                    }
                break;
            }
            case ProblemKind::NarrowPassage:
            {
                requirePositive(p.wallThickness, "wallThickness");
                requirePositive(p.gapWidth, "gapWidth");
                const double gapLow = p.gapCenter - 0.5 * p.gapWidth;
                const double gapHigh = p.gapCenter + 0.5 * p.gapWidth;
                if (gapLow <= -kDomainHalfWidth || gapHigh >= p.wallTop || p.wallTop >= kDomainHalfWidth)
                    throw InvalidArgument("narrow passage gap must lie strictly inside the wall");
                const double t = 0.5 * p.wallThickness;
                obstacles.push_back(slab(n, -t, t, -kDomainHalfWidth, gapLow));
                obstacles.push_back(slab(n, -t, t, gapHigh, p.wallTop));
                break;
            }
            case ProblemKind::DoubleEnclosure:
            {
                requirePositive(p.enclosureEdge, "enclosureEdge");
                requirePositive(p.enclosureWall, "enclosureWall");
                requirePositive(p.enclosureOpening, "enclosureOpening");
                if (p.enclosureOpening >= p.enclosureEdge - 2.0 * p.enclosureWall)
                    throw InvalidArgument("enclosure opening wider than the enclosure face");
                if (2.0 * p.enclosureWall >= p.enclosureEdge)
                    throw InvalidArgument("enclosure walls thicker than the enclosure");
                addEnclosure(obstacles, n, start[0], -1, p);
                addEnclosure(obstacles, n, goal[0], +1, p);
                break;
            }
        }
        return {bounds, std::move(obstacles), std::move(start), std::move(goal), p.collisionResolution,
                std::string(toString(kind))};
    }

    std::string saveProblem(const Problem &problem)
    {
        nlohmann::json doc;
        doc["format"] = kProblemFormat;
        doc["name"] = problem.name();
        doc["dim"] = problem.dimension();
        doc["bounds"] = {{"low", toJson(problem.bounds().low)}, {"high", toJson(problem.bounds().high)}};
        doc["obstacles"] = nlohmann::json::array();
        for (const auto &o : problem.obstacles())
            doc["obstacles"].push_back({{"low", toJson(o.low)}, {"high", toJson(o.high)}});
        doc["start"] = toJson(problem.start());
        doc["goal"] = toJson(problem.goal());
        doc["resolution"] = problem.collisionResolution();
        return doc.dump(2) + "\n";
    }

    Problem loadProblem(std::string_view text)
    {
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ParseError(std::string("problem document is not valid JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw ParseError("problem document must be a JSON object");
        const auto &format = require(doc, "format");
        if (!format.is_number_integer() || format.get<int>() != kProblemFormat)
            throw ParseError("unsupported problem format version");

        const auto &dimField = require(doc, "dim");
        if (!dimField.is_number_integer() || dimField.get<int>() < 1)
            throw ParseError("'dim' must be a positive integer");
        const auto dim = dimField.get<Eigen::Index>();

        HyperRect bounds = boxFromJson(require(doc, "bounds"), "bounds");
        std::vector<HyperRect> obstacles;
        if (auto it = doc.find("obstacles"); it != doc.end())
        {
            if (!it->is_array())
                throw ParseError("'obstacles' must be an array");
            for (const auto &o : *it)
                obstacles.push_back(boxFromJson(o, "obstacle"));
        }
        State start = stateFromJson(require(doc, "start"), "start");
        State goal = stateFromJson(require(doc, "goal"), "goal");
        if (bounds.low.size() != dim || start.size() != dim || goal.size() != dim)
            throw InvalidArgument("problem document has inconsistent dimensions");
        for (const auto &o : obstacles)
            if (o.low.size() != dim)
                throw InvalidArgument("problem document has inconsistent dimensions");

        double resolution = 1e-3;
        if (auto it = doc.find("resolution"); it != doc.end())
        {
            if (!it->is_number())
                throw ParseError("'resolution' must be a number");
            resolution = it->get<double>();
        }
        std::string name = "custom";
        if (auto it = doc.find("name"); it != doc.end())
        {
            if (!it->is_string())
                throw ParseError("'name' must be a string");
            name = it->get<std::string>();
        }
        return {std::move(bounds), std::move(obstacles), std::move(start), std::move(goal), resolution,
                std::move(name)};
    }
}  // namespace grrt
