// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rtri
{

enum class Errc
{
    InvalidArgument,
    NonFinite,
    Domain,
    DegenerateRegion,
    UnknownName,
    WorkLimitExceeded,
};

//! Exception carrying a machine-readable error category.
class Error : public std::runtime_error
{
  public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace rtri
