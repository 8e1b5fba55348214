// SPDX-License-Identifier: Apache-2.0
//
// nearfield-rainbow: wideband near-field beam split and rainbow beam training
// Copyright (C) 2026 The nearfield-rainbow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NFR_ERROR_HPP
#define NFR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nfr
{
    // Base for every error raised by the library
    class error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A configuration or argument violates its documented invariants
    class invalid_argument : public error
    {
    public:
        using error::error;
    };

    // A predicted focus leaves the visible region theta in [-1, 1]
    class outside_visible_region : public error
    {
    public:
        using error::error;
    };

    // No alias integer places the focus inside the visible region
    class no_valid_alias : public error
    {
    public:
        using error::error;
    };

    // Angular search range collapses to a point
    class degenerate_range : public error
    {
    public:
        using error::error;
    };

    inline void require(bool condition, const std::string &message)
    {
        if (!condition)
            throw invalid_argument(message);
    }

} // namespace nfr

#endif
