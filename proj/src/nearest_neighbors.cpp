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

#include "grrt/nearest_neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "grrt/error.hpp"

namespace grrt
{
    /// Static kd-tree over a fixed set of entry slots.
    class NearestNeighbors::KdTree
    {
    public:
        static constexpr std::size_t kLeafSize = 8;

        KdTree(std::vector<std::size_t> slots, const std::vector<Entry> &entries) : slots_(std::move(slots))
        {
            nodes_.reserve(2 * slots_.size() / kLeafSize + 1);
            build(0, slots_.size(), entries);
        }

        std::size_t size() const
        {
            return slots_.size();
        }

        const std::vector<std::size_t> &slots() const
        {
            return slots_;
        }

        void nearest(const State &x, const std::vector<Entry> &entries, double &bestD2, VertexId &bestId,
                     bool &found) const
        {
            nearestRec(0, x, entries, bestD2, bestId, found);
        }

        void near(const State &x, double r, const std::vector<Entry> &entries, std::vector<VertexId> &out) const
        {
            nearRec(0, x, r, entries, out);
        }

    private:
        struct Node
        {
            std::size_t begin;
            std::size_t end;
            int dim;  // -1 for a leaf
            double split;
            std::size_t left;
            std::size_t right;
        };

        std::size_t build(std::size_t begin, std::size_t end, const std::vector<Entry> &entries)
        {
            const std::size_t index = nodes_.size();
            nodes_.push_back({begin, end, -1, 0.0, 0, 0});
            if (end - begin <= kLeafSize)
                return index;

            const auto n = entries[slots_[begin]].x.size();
            int bestDim = 0;
            double bestSpread = -1.0;
            for (Eigen::Index d = 0; d < n; ++d)
            {
                double lo = std::numeric_limits<double>::infinity();
                double hi = -lo;
                for (std::size_t i = begin; i < end; ++i)
                {
                    const double v = entries[slots_[i]].x[d];
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                if (hi - lo > bestSpread)
                {
                    bestSpread = hi - lo;
                    bestDim = static_cast<int>(d);
                }
            }
            if (bestSpread <= 0.0)
                return index;  // all points coincide

            const std::size_t mid = begin + (end - begin) / 2;
            std::nth_element(slots_.begin() + static_cast<std::ptrdiff_t>(begin),
                             slots_.begin() + static_cast<std::ptrdiff_t>(mid),
                             slots_.begin() + static_cast<std::ptrdiff_t>(end),
                             [&](std::size_t a, std::size_t b) { return entries[a].x[bestDim] < entries[b].x[bestDim]; });
            const double split = entries[slots_[mid]].x[bestDim];
            const std::size_t left = build(begin, mid, entries);
            const std::size_t right = build(mid, end, entries);
            nodes_[index].dim = bestDim;
            nodes_[index].split = split;
            nodes_[index].left = left;
            nodes_[index].right = right;
            return index;
        }

        void nearestRec(std::size_t index, const State &x, const std::vector<Entry> &entries, double &bestD2,
                        VertexId &bestId, bool &found) const
        {
            const Node &node = nodes_[index];
            if (node.dim < 0)
            {
                for (std::size_t i = node.begin; i < node.end; ++i)
                {
                    const Entry &e = entries[slots_[i]];
                    if (!e.alive)
                        continue;
                    const double d2 = (e.x - x).squaredNorm();
                    if (!found || d2 < bestD2 || (d2 == bestD2 && e.id < bestId))
                    {
                        bestD2 = d2;
                        bestId = e.id;
                        found = true;
                    }
                }
                return;
            }
            const double diff = x[node.dim] - node.split;
            const std::size_t first = diff < 0.0 ? node.left : node.right;
            const std::size_t second = diff < 0.0 ? node.right : node.left;
            nearestRec(first, x, entries, bestD2, bestId, found);
            if (!found || diff * diff <= bestD2)
                nearestRec(second, x, entries, bestD2, bestId, found);
        }

        void nearRec(std::size_t index, const State &x, double r, const std::vector<Entry> &entries,
                     std::vector<VertexId> &out) const
        {
            const Node &node = nodes_[index];
            if (node.dim < 0)
            {
                for (std::size_t i = node.begin; i < node.end; ++i)
                {
                    const Entry &e = entries[slots_[i]];
                    if (e.alive && (e.x - x).norm() <= r)
                        out.push_back(e.id);
                }
                return;
            }
            const double diff = x[node.dim] - node.split;
            if (diff <= r)
                nearRec(node.left, x, r, entries, out);
            if (-diff <= r)
                nearRec(node.right, x, r, entries, out);
        }

        std::vector<std::size_t> slots_;
        std::vector<Node> nodes_;
    };

    NearestNeighbors::NearestNeighbors() = default;
    NearestNeighbors::~NearestNeighbors() = default;
    NearestNeighbors::NearestNeighbors(NearestNeighbors &&) noexcept = default;
    NearestNeighbors &NearestNeighbors::operator=(NearestNeighbors &&) noexcept = default;

    void NearestNeighbors::insert(VertexId id, const State &x)
    {
        if (slotOf_.contains(id))
            throw InvalidArgument("vertex id already present in the index: " + std::to_string(id));
        if (!entries_.empty() && entries_.front().x.size() != x.size())
            throw InvalidArgument("state dimension does not match the index");
        slotOf_.emplace(id, entries_.size());
        buffer_.push_back(entries_.size());
        entries_.push_back({id, x, true});
        ++live_;
        if (buffer_.size() >= kBufferCapacity)
            flushBuffer();
    }

    void NearestNeighbors::flushBuffer()
    {
        std::vector<std::size_t> merged;
        for (std::size_t s : buffer_)
            if (entries_[s].alive)
                merged.push_back(s);
        buffer_.clear();
        std::size_t level = 0;
        for (; level < levels_.size() && levels_[level]; ++level)
        {
            for (std::size_t s : levels_[level]->slots())
                if (entries_[s].alive)
                    merged.push_back(s);
            levels_[level].reset();
        }
        if (level == levels_.size())
            levels_.emplace_back();
        if (!merged.empty())
            levels_[level] = std::make_unique<KdTree>(std::move(merged), entries_);
    }

    void NearestNeighbors::remove(VertexId id)
    {
        auto it = slotOf_.find(id);
        if (it == slotOf_.end())
            throw InvalidArgument("vertex id not present in the index: " + std::to_string(id));
        entries_[it->second].alive = false;
        slotOf_.erase(it);
        --live_;
        ++dead_;
        if (dead_ > kBufferCapacity && dead_ > live_)
            rebuild();
    }

    void NearestNeighbors::rebuild()
    {
        std::vector<Entry> compacted;
        compacted.reserve(live_);
        for (auto &e : entries_)
            if (e.alive)
                compacted.push_back(std::move(e));
        entries_ = std::move(compacted);
        slotOf_.clear();
        levels_.clear();
        buffer_.clear();
        dead_ = 0;

        std::vector<std::size_t> all(entries_.size());
        for (std::size_t s = 0; s < entries_.size(); ++s)
        {
            slotOf_.emplace(entries_[s].id, s);
            all[s] = s;
        }
        if (all.size() < kBufferCapacity)
        {
            buffer_ = std::move(all);
            return;
        }
        std::size_t level = 0;
        while ((kBufferCapacity << level) < all.size())
            ++level;
        levels_.resize(level + 1);
        levels_[level] = std::make_unique<KdTree>(std::move(all), entries_);
    }

    bool NearestNeighbors::contains(VertexId id) const
    {
        return slotOf_.contains(id);
    }

    VertexId NearestNeighbors::nearest(const State &x) const
    {
        if (live_ == 0)
            throw InvalidArgument("nearest-neighbour query on an empty index");
        double bestD2 = std::numeric_limits<double>::infinity();
        VertexId bestId = 0;
        bool found = false;
        for (const auto &tree : levels_)
            if (tree)
                tree->nearest(x, entries_, bestD2, bestId, found);
        for (std::size_t s : buffer_)
        {
            const Entry &e = entries_[s];
            if (!e.alive)
                continue;
            const double d2 = (e.x - x).squaredNorm();
            if (!found || d2 < bestD2 || (d2 == bestD2 && e.id < bestId))
            {
                bestD2 = d2;
                bestId = e.id;
                found = true;
            }
        }
        return bestId;
    }

    std::vector<VertexId> NearestNeighbors::near(const State &x, double r) const
    {
        std::vector<VertexId> out;
        if (r < 0.0)
            throw InvalidArgument("radius must be non-negative");
        for (const auto &tree : levels_)
            if (tree)
                tree->near(x, r, entries_, out);
        for (std::size_t s : buffer_)
        {
            const Entry &e = entries_[s];
            if (e.alive && (e.x - x).norm() <= r)
                out.push_back(e.id);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void NearestNeighbors::clear()
    {
        entries_.clear();
        slotOf_.clear();
        levels_.clear();
        buffer_.clear();
        live_ = 0;
        dead_ = 0;
    }
}  // namespace grrt
