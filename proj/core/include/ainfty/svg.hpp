#pragma once

#include <string>

#include "ainfty/reduction.hpp"

namespace ainfty {

// Standalone SVG rendering of a barcode: one horizontal bar per interval,
// essentials drawn with an arrowhead, a value axis with tick labels.
std::string barcode_svg(const Barcode& bars, const std::string& title);

}  // namespace ainfty
