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

#include "grrt/search_tree.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "grrt/error.hpp"

namespace grrt
{
    SearchTree::SearchTree(State root)
    {
        if (root.size() == 0 || !root.allFinite())
            throw InvalidArgument("tree root must be a finite state");
        states_.push_back(std::move(root));
        parents_.push_back(kNoParent);
        costs_.push_back(0.0);
        children_.emplace_back();
        alive_.push_back(true);
        index_.insert(kRootId, states_.front());
    }

    void SearchTree::requireAlive(VertexId id, const char *what) const
    {
        if (!isAlive(id))
            throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(id) + " is not live");
    }

    const State &SearchTree::state(VertexId id) const
    {
        if (id >= states_.size())
            throw InvalidArgument("unknown vertex id " + std::to_string(id));
        return states_[id];
    }

    Cost SearchTree::costToCome(VertexId id) const
    {
        requireAlive(id, "cost-to-come");
        return costs_[id];
    }

    VertexId SearchTree::parent(VertexId id) const
    {
        requireAlive(id, "parent");
        return parents_[id];
    }

    const std::vector<VertexId> &SearchTree::children(VertexId id) const
    {
        requireAlive(id, "children");
        return children_[id];
    }

    VertexId SearchTree::addChild(VertexId parent, const State &x)
    {
        requireAlive(parent, "add child");
        requireCompatible(states_.front(), x);
        const auto id = static_cast<VertexId>(states_.size());
        states_.push_back(x);
        parents_.push_back(parent);
        costs_.push_back(costs_[parent] + distance(states_[parent], x));
        children_.emplace_back();
        alive_.push_back(true);
        children_[parent].push_back(id);
        index_.insert(id, x);
        return id;
    }

    bool SearchTree::isAncestor(VertexId ancestor, VertexId id) const
    {
        for (VertexId v = id; v != kNoParent; v = parents_[v])
            if (v == ancestor)
                return true;
        return false;
    }

    void SearchTree::rewireParent(VertexId child, VertexId newParent)
    {
        requireAlive(child, "rewire");
        requireAlive(newParent, "rewire");
        if (child == kRootId)
            throw InvalidArgument("the root cannot be rewired");
        if (isAncestor(child, newParent))
            throw InvalidArgument("rewiring would create a cycle");

        auto &siblings = children_[parents_[child]];
        siblings.erase(std::find(siblings.begin(), siblings.end(), child));
        parents_[child] = newParent;
        children_[newParent].push_back(child);

        std::vector<VertexId> stack{child};
        while (!stack.empty())
        {
            const VertexId v = stack.back();
            stack.pop_back();
            costs_[v] = costs_[parents_[v]] + distance(states_[parents_[v]], states_[v]);
            stack.insert(stack.end(), children_[v].begin(), children_[v].end());
        }
    }

    void SearchTree::removeSubtree(VertexId id, std::size_t &count)
    {
        std::vector<VertexId> stack{id};
        while (!stack.empty())
        {
            const VertexId v = stack.back();
            stack.pop_back();
            stack.insert(stack.end(), children_[v].begin(), children_[v].end());
            children_[v].clear();
            alive_[v] = false;
            index_.remove(v);
            ++count;
        }
    }

    std::size_t SearchTree::prune(Cost threshold, const State &start, const State &goal)
    {
        std::size_t count = 0;
        if (!isFinite(threshold))
            return 0;
        // Parents always have smaller ids than their children at insertion, but
        // rewiring breaks that order, so test every vertex and detach whole
        // subtrees from their parent.
        for (VertexId v = 1; v < states_.size(); ++v)
        {
            if (!alive_[v])
                continue;
            if (l2Heuristic(states_[v], start, goal) > threshold)
            {
                auto &siblings = children_[parents_[v]];
                siblings.erase(std::find(siblings.begin(), siblings.end(), v));
                removeSubtree(v, count);
            }
        }
        return count;
    }

    std::vector<State> SearchTree::pathFromRoot(VertexId id) const
    {
        requireAlive(id, "path");
        std::vector<State> out;
        for (VertexId v = id; v != kNoParent; v = parents_[v])
            out.push_back(states_[v]);
        std::reverse(out.begin(), out.end());
        return out;
    }

    std::vector<VertexId> SearchTree::liveVertices() const
    {
        std::vector<VertexId> out;
        out.reserve(size());
        for (VertexId v = 0; v < states_.size(); ++v)
            if (alive_[v])
                out.push_back(v);
        return out;
    }

    std::string SearchTree::dump() const
    {
        nlohmann::json doc;
        doc["vertices"] = nlohmann::json::array();
        doc["edges"] = nlohmann::json::array();
        for (VertexId v : liveVertices())
        {
            doc["vertices"].push_back({{"id", v},
                                       {"state", std::vector<double>(states_[v].data(),
                                                                     states_[v].data() + states_[v].size())},
                                       {"cost", costs_[v]}});
            if (parents_[v] != kNoParent)
                doc["edges"].push_back({parents_[v], v});
        }
        return doc.dump();
    }

    Cost bridgeCost(const SolutionBridge &bridge, const SearchTree &startTree, const SearchTree &goalTree)
    {
        if (!startTree.isAlive(bridge.startVertex) || !goalTree.isAlive(bridge.goalVertex))
            return kInfiniteCost;
        return startTree.costToCome(bridge.startVertex) +
               distance(startTree.state(bridge.startVertex), goalTree.state(bridge.goalVertex)) +
               goalTree.costToCome(bridge.goalVertex);
    }

    Path extractPath(const SolutionBridge &bridge, const SearchTree &startTree, const SearchTree &goalTree)
    {
        if (!startTree.isAlive(bridge.startVertex) || !goalTree.isAlive(bridge.goalVertex))
            throw InvalidArgument("stale solution bridge: an endpoint has been pruned");
        std::vector<State> states = startTree.pathFromRoot(bridge.startVertex);
        std::vector<State> tail = goalTree.pathFromRoot(bridge.goalVertex);
        states.insert(states.end(), tail.rbegin(), tail.rend());
        return Path(std::move(states));
    }

    double rewireRadius(std::size_t m, int n, double freeMeasureBound, double eta, double maxEdge)
    {
        if (m < 1)
            throw InvalidArgument("rewire radius needs at least one vertex");
        if (n < 1)
            throw InvalidArgument("rewire radius needs n >= 1");
        const double dm = static_cast<double>(m);
        const double dn = static_cast<double>(n);
        const double inner = 2.0 * (1.0 + 1.0 / dn) * (freeMeasureBound / unitBallMeasure(n)) * (std::log(dm) / dm);
        return std::min(maxEdge, eta * std::pow(inner, 1.0 / dn));
    }
}  // namespace grrt
