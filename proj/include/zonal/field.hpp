#pragma once

#include <string>
#include <string_view>

#include "zonal/partition.hpp"

namespace zonal {

/// Entry field of a Gaussian ensemble.
enum class Field { real, complex, quaternion };

/// alpha = 2, 1, 1/2 for real, complex, quaternion entries.
JackParam jack_param(Field f);
std::string to_string(Field f);
/// "real", "complex", "quaternion"; throws Error otherwise.
Field parse_field(std::string_view name);

}  // namespace zonal
