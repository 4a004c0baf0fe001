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

#ifndef GRRT_RANDOM_HPP
#define GRRT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace grrt
{
    /// Independent random streams derived from one 64-bit seed. Planning draws,
    /// shortcutting and diagnostics each get their own stream so that adding
    /// draws to one never perturbs another.
    enum class Stream : std::uint64_t
    {
        Sampling = 1,
        Shortcut = 2,
        Analysis = 3,
        Test = 4,
    };

    /// SplitMix64 finalizer; used to decorrelate derived seeds.
    std::uint64_t mixSeed(std::uint64_t x);

    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(mixSeed(seed))
        {
        }

        Rng(std::uint64_t seed, Stream stream)
          : engine_(mixSeed(mixSeed(seed) ^ (static_cast<std::uint64_t>(stream) * 0x9e3779b97f4a7c15ULL)))
        {
        }

        /// Uniform on [0, 1).
        double uniform01()
        {
            return unit_(engine_);
        }

        double uniform(double low, double high)
        {
            return low + (high - low) * uniform01();
        }

        double normal()
        {
            return gauss_(engine_);
        }

        std::mt19937_64 &engine()
        {
            return engine_;
        }

    private:
        std::mt19937_64 engine_;
        std::uniform_real_distribution<double> unit_{0.0, 1.0};
        std::normal_distribution<double> gauss_{0.0, 1.0};
    };
}  // namespace grrt

#endif
