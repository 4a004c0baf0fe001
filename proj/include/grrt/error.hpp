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

#ifndef GRRT_ERROR_HPP
#define GRRT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grrt
{
    /// Base class of every exception thrown by the library.
    class Exception : public std::runtime_error
    {
    public:
        explicit Exception(const std::string &what) : std::runtime_error(what)
        {
        }
    };

    /// Bad argument: dimension mismatch, out-of-range parameter, empty container.
    class InvalidArgument : public Exception
    {
    public:
        using Exception::Exception;
    };

    /// Malformed problem, config or CSV document.
    class ParseError : public Exception
    {
    public:
        using Exception::Exception;
    };

    /// A documented precondition could not be verified (e.g. homotopy check).
    class PreconditionError : public Exception
    {
    public:
        using Exception::Exception;
    };

    /// Rejection sampler ran out of its retry budget.
    class SamplingError : public Exception
    {
    public:
        using Exception::Exception;
    };

    class IoError : public Exception
    {
    public:
        using Exception::Exception;
    };
}  // namespace grrt

#endif
