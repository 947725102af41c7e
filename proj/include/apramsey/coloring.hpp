#pragma once

#include "apramsey/residue_set.hpp"

namespace apramsey {

// Parameters (p, d, S) of a spherical coloring: a point x is "red" exactly
// when floor(d*|x|^2) mod p lands in S.
struct ColoringSpec {
    int p;
    int d;
    ResidueSet set;

    ColoringSpec(int p_, int d_, ResidueSet set_);
};

}  // namespace apramsey
