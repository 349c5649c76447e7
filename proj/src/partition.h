#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cf {

using Ints = std::vector<int>;

bool is_partition(const Ints& v);
Ints stripped(Ints v);
int sum_of(const Ints& v);
int nonzero_len(const Ints& v);
Ints padded(Ints v, int ell);
Ints conjugate(const Ints& v);
bool contains(const Ints& outer, const Ints& inner);

// true iff the prefix sums of b dominate those of a (lengths must match)
bool dominance_leq(const Ints& a, const Ints& b);

// s_gamma rewritten on the partition basis: absent means s_gamma = 0,
// otherwise s_gamma = sign * s_lambda
std::optional<std::pair<int, Ints>> schur_straighten(const Ints& gamma);

Ints eps(int i, int ell);               // unit vector, rows 1-based
Ints eps_range(int a, int b, int ell);  // sum of eps_i over a <= i <= b

std::string ints_str(const Ints& v);

}  // namespace cf
