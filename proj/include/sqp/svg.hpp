#pragma once

#include <string>

#include "sqp/braid.hpp"

namespace sqp {

// Disk-band picture of F(w): disks as horizontal segments stacked by strand
// index, band k as a vertical strip at column k between its two disks, marked
// with a cross for its half twist.
std::string band_diagram_svg(const BandWord& w);

}  // namespace sqp
