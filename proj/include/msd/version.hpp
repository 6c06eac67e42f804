#pragma once

#include <string_view>

namespace msd {

#ifndef MSD_VERSION_STRING
#define MSD_VERSION_STRING "0.0.0"
#endif

inline constexpr std::string_view kVersion = MSD_VERSION_STRING;

}  // namespace msd
