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

#ifndef GRRT_NEAREST_NEIGHBORS_HPP
#define GRRT_NEAREST_NEIGHBORS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "grrt/space.hpp"

namespace grrt
{
    /// Handle of a vertex within one tree. Never reused after removal.
    using VertexId = std::uint32_t;

    /// Exact Euclidean nearest-neighbour and radius queries over a growing,
    /// occasionally shrinking point set.
    ///
    /// Points live in a logarithmic forest of static kd-trees (sizes 64, 128,
    /// 256, ...) plus a small unindexed buffer. An insertion that fills the
    /// buffer merges it with the smaller trees into the next free level.
    /// Removals are tombstones; the forest is rebuilt once tombstones outnumber
    /// live points. Ties are broken by the smallest id.
    class NearestNeighbors
    {
    public:
        NearestNeighbors();
        ~NearestNeighbors();
        NearestNeighbors(NearestNeighbors &&) noexcept;
        NearestNeighbors &operator=(NearestNeighbors &&) noexcept;
        NearestNeighbors(const NearestNeighbors &) = delete;
        NearestNeighbors &operator=(const NearestNeighbors &) = delete;

        /// Throws InvalidArgument if the id is already present.
        void insert(VertexId id, const State &x);

        /// Throws InvalidArgument if the id is unknown.
        void remove(VertexId id);

        bool contains(VertexId id) const;

        /// Throws InvalidArgument on an empty index.
        VertexId nearest(const State &x) const;

        /// All ids within the closed ball of radius r, sorted by id.
        std::vector<VertexId> near(const State &x, double r) const;

        std::size_t size() const
        {
            return live_;
        }

        bool empty() const
        {
            return live_ == 0;
        }

        void clear();

        static constexpr std::size_t kBufferCapacity = 64;

    private:
        struct Entry
        {
            VertexId id;
            State x;
            bool alive;
        };
        class KdTree;

        void rebuild();
        void flushBuffer();

        std::vector<Entry> entries_;
        std::unordered_map<VertexId, std::size_t> slotOf_;
        std::vector<std::unique_ptr<KdTree>> levels_;
        std::vector<std::size_t> buffer_;
        std::size_t live_{0};
        std::size_t dead_{0};
    };
}  // namespace grrt

#endif
