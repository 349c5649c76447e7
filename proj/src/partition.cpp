#include "partition.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cf {

bool is_partition(const Ints& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
  }
  return true;
}

Ints stripped(Ints v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

int sum_of(const Ints& v) { return std::accumulate(v.begin(), v.end(), 0); }

int nonzero_len(const Ints& v) {
  int n = 0;
  for (int x : v)
    if (x != 0) ++n;
  return n;
}

Ints padded(Ints v, int ell) {
  if ((int)v.size() > ell) throw std::invalid_argument("padded: vector longer than target");
  v.resize(ell, 0);
  return v;
}

Ints conjugate(const Ints& v) {
  Ints out;
  for (int c = 1; !v.empty() && c <= v[0]; ++c) {
    int cnt = 0;
    for (int x : v)
      if (x >= c) ++cnt;
    out.push_back(cnt);
  }
  return out;
}

bool contains(const Ints& outer, const Ints& inner) {
  for (size_t i = 0; i < inner.size(); ++i) {
    int o = i < outer.size() ? outer[i] : 0;
    if (inner[i] > o) return false;
  }
  return true;
}

bool dominance_leq(const Ints& a, const Ints& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance_leq: length mismatch");
  long sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

std::optional<std::pair<int, Ints>> schur_straighten(const Ints& gamma) {
  int L = (int)gamma.size();
  Ints d(L);
  for (int i = 0; i < L; ++i) d[i] = gamma[i] + (L - 1 - i);
  for (int x : d)
    if (x < 0) return std::nullopt;
  // sign of the sorting permutation = parity of inversions for descending order
  int inv = 0;
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j) {
      if (d[i] == d[j]) return std::nullopt;
      if (d[i] < d[j]) ++inv;
    }
  std::sort(d.rbegin(), d.rend());
  Ints lam(L);
  for (int i = 0; i < L; ++i) lam[i] = d[i] - (L - 1 - i);
  return std::pair<int, Ints>{inv % 2 == 0 ? 1 : -1, stripped(lam)};
}

Ints eps(int i, int ell) {
  Ints v(ell, 0);
  v[i - 1] = 1;
  return v;
}

Ints eps_range(int a, int b, int ell) {
  Ints v(ell, 0);
  for (int i = a; i <= b; ++i) v[i - 1] = 1;
  return v;
}

std::string ints_str(const Ints& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace cf
