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

#ifndef GRRT_GRID_ORACLE_HPP
#define GRRT_GRID_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "grrt/space.hpp"
#include "grrt/world.hpp"

namespace grrt
{
    /// Dense 8-connected Dijkstra over a planar problem, used as an independent
    /// reference for shortest-path lengths and for cost-to-come / cost-to-go
    /// fields. Cells are free when their centre is free; diagonal moves may not
    /// cut obstacle corners.
    class GridOracle
    {
    public:
        struct Cell
        {
            std::size_t i;  // along the first axis
            std::size_t j;  // along the second axis
        };

        /// Throws PreconditionError for non-planar problems, blocked start/goal
        /// cells, or obstacle gaps narrower than minPassageCells cells.
        explicit GridOracle(const Problem &problem, std::size_t resolution = 512, double minPassageCells = 3.0);

        std::size_t resolution() const
        {
            return resolution_;
        }

        /// Side length of a cell along the first axis.
        double cellSize() const
        {
            return cellSize_;
        }

        std::optional<Cell> cellOf(const State &x) const;

        State cellCenter(Cell c) const;

        bool cellFree(Cell c) const
        {
            return free_[flat(c)];
        }

        /// Octile cost-to-come from the start state (infinite if unreachable).
        Cost costToCome(Cell c) const
        {
            return fromStart_[flat(c)];
        }

        /// Octile cost-to-go to the goal state (infinite if unreachable).
        Cost costToGo(Cell c) const
        {
            return toGoal_[flat(c)];
        }

        bool solvable() const;

        /// Start, the chain of cell centres, goal. Empty if unsolvable.
        std::vector<State> cellPath() const;

        /// Cell path with visibility shortcuts applied greedily (string pulling);
        /// its length estimates the optimal cost. Empty if unsolvable.
        Path shortestPath() const;

    private:
        std::size_t flat(Cell c) const
        {
            return c.j * resolution_ + c.i;
        }

        std::vector<Cost> dijkstra(const State &source, std::vector<std::size_t> *parents) const;

        const Problem &problem_;
        std::size_t resolution_;
        double cellSize_;
        double cellSizeY_;
        std::vector<bool> free_;
        std::vector<Cost> fromStart_;
        std::vector<Cost> toGoal_;
        std::vector<std::size_t> parentsFromGoal_;
    };
}  // namespace grrt

#endif
