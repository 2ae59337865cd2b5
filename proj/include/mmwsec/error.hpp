// SPDX-License-Identifier: Apache-2.0
//
// mmwsec - secrecy analysis for AN-masked mm-Wave beamforming with impaired hardware
// Copyright (C) 2026 The mmwsec authors
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
#ifndef MMWSEC_ERROR_HPP
#define MMWSEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mmwsec
{

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Parameters are legal but no transmission / power split can satisfy the constraint.
class InfeasibleError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// The beamformer cannot be built (e.g. all-zero destination channel).
class DegenerateChannelError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Iterative solver or quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace mmwsec

#endif
