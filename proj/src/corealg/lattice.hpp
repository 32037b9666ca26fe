#pragma once

#include <map>
#include <vector>

#include "corealg/laurent_poly.hpp"

namespace qw {

using LatticePoint = std::vector<long>;
using LatticeTable = std::map<LatticePoint, LaurentPoly>;

} // namespace qw
