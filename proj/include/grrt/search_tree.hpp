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

#ifndef GRRT_SEARCH_TREE_HPP
#define GRRT_SEARCH_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grrt/nearest_neighbors.hpp"
#include "grrt/space.hpp"

namespace grrt
{
    /// A rooted tree of states with cost-to-come bookkeeping. Vertex ids are
    /// dense indices that are never reused; pruned vertices stay as tombstones.
    class SearchTree
    {
    public:
        explicit SearchTree(State root);

        static constexpr VertexId kRootId = 0;
        static constexpr VertexId kNoParent = static_cast<VertexId>(-1);

        const State &root() const
        {
            return states_.front();
        }

        const State &state(VertexId id) const;

        /// Cost-to-come from the root.
        Cost costToCome(VertexId id) const;

        /// kNoParent for the root.
        VertexId parent(VertexId id) const;

        const std::vector<VertexId> &children(VertexId id) const;

        bool isAlive(VertexId id) const
        {
            return id < alive_.size() && alive_[id];
        }

        /// Number of live vertices.
        std::size_t size() const
        {
            return index_.size();
        }

        /// Number of ids ever handed out (live or pruned).
        std::size_t capacity() const
        {
            return states_.size();
        }

        const NearestNeighbors &index() const
        {
            return index_;
        }

        VertexId nearest(const State &x) const
        {
            return index_.nearest(x);
        }

        std::vector<VertexId> near(const State &x, double r) const
        {
            return index_.near(x, r);
        }

        /// Adds x as a child of parent; throws InvalidArgument for a dead parent.
        VertexId addChild(VertexId parent, const State &x);

        /// Re-parents child under newParent and propagates the cost change to
        /// the whole subtree. Throws InvalidArgument when rewiring the root, a
        /// dead vertex, or when newParent lies in child's subtree.
        void rewireParent(VertexId child, VertexId newParent);

        /// True iff ancestor is on the root path of id (inclusive).
        bool isAncestor(VertexId ancestor, VertexId id) const;

        /// Removes every vertex whose L2 heuristic exceeds threshold together
        /// with all of its descendants. Returns the number removed.
        std::size_t prune(Cost threshold, const State &start, const State &goal);

        /// States from the root down to id.
        std::vector<State> pathFromRoot(VertexId id) const;

        /// Ids of live vertices in increasing order.
        std::vector<VertexId> liveVertices() const;

        /// Debug dump of live vertices and edges as JSON.
        std::string dump() const;

    private:
        void requireAlive(VertexId id, const char *what) const;
        void removeSubtree(VertexId id, std::size_t &count);

        std::vector<State> states_;
        std::vector<VertexId> parents_;
        std::vector<Cost> costs_;
        std::vector<std::vector<VertexId>> children_;
        std::vector<bool> alive_;
        NearestNeighbors index_;
    };

    /// An edge joining a start-tree vertex to a goal-tree vertex.
    struct SolutionBridge
    {
        VertexId startVertex;
        VertexId goalVertex;

        bool operator==(const SolutionBridge &) const = default;
    };

    /// Cost of the solution through a bridge; +inf if either end is pruned.
    Cost bridgeCost(const SolutionBridge &bridge, const SearchTree &startTree, const SearchTree &goalTree);

    /// Concatenates start-root -> a, the bridge edge, and b -> goal-root.
    /// Throws InvalidArgument if either endpoint has been pruned.
    Path extractPath(const SolutionBridge &bridge, const SearchTree &startTree, const SearchTree &goalTree);

    /// RRT* connection radius
    ///   min(maxEdge, eta (2 (1 + 1/n) (measure / zeta_n) (log m / m))^(1/n)).
    double rewireRadius(std::size_t m, int n, double freeMeasureBound, double eta, double maxEdge);
}  // namespace grrt

#endif
