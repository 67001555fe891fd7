// SPDX-License-Identifier: Apache-2.0
//
// hrnsim - link-level Monte Carlo simulator for relay, reflective-surface,
// and hybrid relaying networks
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

#ifndef HRNSIM_ERRORS_HPP
#define HRNSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hrnsim
{

// The model itself is inconsistent (e.g. a correlation kernel that is not
// positive semidefinite at the requested geometry).
class model_error : public std::runtime_error
{
  public:
    explicit model_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Pilot/guard overhead consumes the whole coherence interval (eta <= 0).
class infeasible_frame : public std::runtime_error
{
  public:
    explicit infeasible_frame(const std::string &msg) : std::runtime_error(msg) {}
};

// Config file is malformed; carries the 1-based line number when known.
class parse_error : public std::runtime_error
{
  public:
    parse_error(const std::string &msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_no(line)
    {
    }
    int line_no;
};

class io_error : public std::runtime_error
{
  public:
    explicit io_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace hrnsim

#endif
