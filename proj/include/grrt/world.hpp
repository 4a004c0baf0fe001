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

#ifndef GRRT_WORLD_HPP
#define GRRT_WORLD_HPP

#include <string>
#include <string_view>
#include <vector>

#include "grrt/space.hpp"

namespace grrt
{
    /// One planning instance: a box-shaped domain with closed axis-aligned
    /// obstacles, a start and a goal. Immutable after construction.
    class Problem
    {
    public:
        /// Validates every invariant; throws InvalidArgument on violation.
        Problem(HyperRect bounds, std::vector<HyperRect> obstacles, State start, State goal,
                double collisionResolution = 1e-3, std::string name = "custom");

        std::size_t dimension() const
        {
            return bounds_.dimension();
        }

        const HyperRect &bounds() const
        {
            return bounds_;
        }

        const std::vector<HyperRect> &obstacles() const
        {
            return obstacles_;
        }

        const State &start() const
        {
            return start_;
        }

        const State &goal() const
        {
            return goal_;
        }

        /// Edge-checking step as a fraction of the domain diagonal.
        double collisionResolution() const
        {
            return resolution_;
        }

        /// Absolute spacing between checked states on a segment.
        double collisionStep() const
        {
            return resolution_ * bounds_.diagonal();
        }

        const std::string &name() const
        {
            return name_;
        }

        /// Same geometry with a different edge-checking resolution.
        Problem withResolution(double collisionResolution) const;

        bool operator==(const Problem &other) const;

    private:
        HyperRect bounds_;
        std::vector<HyperRect> obstacles_;
        State start_;
        State goal_;
        double resolution_;
        std::string name_;
    };

    /// True iff x lies within the bounds and inside no obstacle. Obstacles are
    /// closed, so touching one counts as a collision.
    bool isFree(const Problem &problem, const State &x);

    /// Number of subdivisions used to check a segment: the smallest power of
    /// two whose spacing does not exceed the collision step. Using powers of two
    /// makes the checked point sets nested under refinement.
    std::size_t segmentSubdivisions(const Problem &problem, double length);

    /// Discrete segment check at the problem's collision resolution, endpoints
    /// included. Symmetric in its arguments.
    bool segmentFree(const Problem &problem, const State &a, const State &b);

    enum class ProblemKind
    {
        Empty,
        ManyHomotopy,
        NarrowPassage,
        DoubleEnclosure,
    };

    std::string_view toString(ProblemKind kind);
    /// Throws InvalidArgument on unknown names.
    ProblemKind problemKindFromString(std::string_view name);

    /// Tunable geometry of the generated worlds. All lengths are in units of the
    /// domain width (the domain is [-0.5, 0.5]^n).
    struct ProblemParams
    {
        double collisionResolution{1e-3};

        // Narrow passage: a wall normal to the first axis, spanning the second
        // axis from the lower boundary to wallTop with a gap, so paths either
        // thread the gap or go around the free end.
        double wallThickness{0.1};
        double gapWidth{0.04};
        double gapCenter{0.0};
        double wallTop{0.35};

        // Many homotopy classes: gridCount x gridCount cubes in the first two axes.
        int gridCount{4};
        double cubeEdge{0.10};
        double gridPitch{0.25};

        // Double enclosure: hollow boxes around start and goal, opening outward.
        double enclosureEdge{0.3};
        double enclosureWall{0.02};
        double enclosureOpening{0.1};
    };

    /// Builds one of the benchmark worlds in R^n (n >= 2). Extra dimensions
    /// extend every obstacle across the full domain.
    Problem makeProblem(ProblemKind kind, int n, const ProblemParams &params = {});

    /// Serializes to the versioned JSON problem document.
    std::string saveProblem(const Problem &problem);

    /// Parses a problem document; throws ParseError or InvalidArgument.
    Problem loadProblem(std::string_view text);
}  // namespace grrt

#endif
