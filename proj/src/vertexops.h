#pragma once

#include "symfunc.h"

namespace cf {

// Jing vertex operator B_m applied to f
SymFunc jing_b(int m, const SymFunc& f);

// compositional Hall-Littlewood polynomial: B_{gamma_1} ... B_{gamma_ell} . 1
SymFunc chl(const Ints& gamma);

}  // namespace cf
