#include "vertexops.h"

#include <map>
#include <mutex>

namespace cf {

// B_m f = sum_{i,j>=0} (-1)^i t^j h_{m+i+j} e_i^perp h_j^perp f;
// on a homogeneous piece of degree d the sum truncates at i + j <= d
SymFunc jing_b(int m, const SymFunc& f) {
  SymFunc out;
  for (auto& [d, g] : f.split_by_degree()) {
    for (int j = 0; j <= d; ++j) {
      SymFunc hj = h_perp(j, g);
      if (hj.is_zero()) continue;
      for (int i = 0; i + j <= d; ++i) {
        if (m + i + j < 0) continue;
        SymFunc term = e_perp(i, hj);
        if (term.is_zero()) continue;
        term = mult_h(m + i + j, term);
        term = term * TPoly::t_power(j, i % 2 == 0 ? 1 : -1);
        out += term;
      }
    }
  }
  return out;
}

namespace {
std::map<Ints, SymFunc> cache;
std::mutex cache_mu;
constexpr size_t kCacheCap = 20000;
}  // namespace

// memoized on suffixes: chl(gamma) = B_{gamma_1} chl(gamma_2..)
SymFunc chl(const Ints& gamma) {
  if (gamma.empty()) return SymFunc::one();
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(gamma);
    if (it != cache.end()) return it->second;
  }
  SymFunc tail = chl(Ints(gamma.begin() + 1, gamma.end()));
  SymFunc out = jing_b(gamma[0], tail);
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    if (cache.size() >= kCacheCap) cache.clear();
    cache.emplace(gamma, out);
  }
  return out;
}

}  // namespace cf
