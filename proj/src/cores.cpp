#include "cores.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cf {

namespace {

int floordiv(int a, int b) {  // b > 0
  int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

int hook_at(const Ints& shape, const Ints& conj, int r, int c) {
  return (shape[r - 1] - c) + (conj[c - 1] - r) + 1;
}

struct Components {
  std::vector<int> head;    // smallest row per component, ascending
  std::vector<int> height;  // rows spanned, aligned with head
};

// Connected components of kappa/tau.  Rows r and r+1 of the skew shape
// touch exactly when tau_r < kappa_{r+1}.
Components skew_parts(const Core& tau, const Core& kappa) {
  Components out;
  int ell = kappa.length();
  int r = 1;
  while (r <= ell) {
    if (kappa.row(r) == tau.row(r)) {
      ++r;
      continue;
    }
    int head = r;
    while (r < ell && kappa.row(r + 1) > tau.row(r + 1) &&
           tau.row(r) < kappa.row(r + 1))
      ++r;
    out.head.push_back(head);
    out.height.push_back(r - head + 1);
    ++r;
  }
  return out;
}

Components cover_parts(const Core& tau, const Core& kappa) {
  if (tau.n() != kappa.n())
    throw std::invalid_argument("strong cover: mismatched core parameters");
  if (!contains(kappa.shape(), tau.shape()) || tau.shape() == kappa.shape())
    throw std::invalid_argument(
        "strong cover: tau must sit strictly inside kappa");
  if (sum_of(to_bounded(tau)) + 1 != sum_of(to_bounded(kappa)))
    throw std::invalid_argument("strong cover: bounded sizes do not step by 1");
  return skew_parts(tau, kappa);
}

}  // namespace

Core::Core(Ints shape, int n) : shape_(stripped(std::move(shape))), n_(n) {
  if (n_ < 1) throw std::invalid_argument("Core: n must be positive");
  if (!is_partition(shape_))
    throw std::invalid_argument("Core: shape is not a partition");
  Ints conj = conjugate(shape_);
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= shape_[r - 1]; ++c)
      if (hook_at(shape_, conj, r, c) == n_)
        throw std::invalid_argument("Core: box of hook length n");
}

int Core::row(int r) const {
  if (r < 1) throw std::invalid_argument("Core::row: r must be positive");
  return r <= length() ? shape_[r - 1] : 0;
}

Ints to_bounded(const Core& kappa) {
  const Ints& sh = kappa.shape();
  Ints conj = conjugate(sh);
  Ints out;
  for (int r = 1; r <= kappa.length(); ++r) {
    int cnt = 0;
    for (int c = 1; c <= sh[r - 1]; ++c)
      if (hook_at(sh, conj, r, c) < kappa.n()) ++cnt;
    out.push_back(cnt);
  }
  return stripped(out);
}

Core to_core(const Ints& lambda, int k) {
  if (k < 1) throw std::invalid_argument("to_core: k must be positive");
  if (!is_partition(lambda))
    throw std::invalid_argument("to_core: lambda is not a partition");
  Ints lam = stripped(lambda);
  if (!lam.empty() && lam[0] > k)
    throw std::invalid_argument("to_core: first part exceeds k");
  int n = k + 1;
  int ell = static_cast<int>(lam.size());
  Ints kap(ell, 0);
  // Build bottom up.  Row r is lambda_r boxes of hook <= k preceded by an
  // indent of boxes of hook >= n+1; hooks of row r only involve rows >= r,
  // so each row admits exactly one indent once the rows below are fixed.
  for (int r = ell; r >= 1; --r) {
    int below = r < ell ? kap[r] : 0;
    int found = -1;
    for (int ind = 0; ind <= below; ++ind) {
      int len = lam[r - 1] + ind;
      if (len < below) continue;
      bool ok = true;
      for (int c = 1; c <= len && ok; ++c) {
        int leg = 0;
        for (int rr = r + 1; rr <= ell; ++rr)
          if (kap[rr - 1] >= c) ++leg;
        int h = (len - c) + leg + 1;
        if (c <= ind ? h <= n : h > k) ok = false;
      }
      if (ok) {
        if (found >= 0) throw std::logic_error("to_core: indent not unique");
        found = ind;
      }
    }
    if (found < 0) throw std::logic_error("to_core: no valid indent");
    kap[r - 1] = lam[r - 1] + found;
  }
  return Core(std::move(kap), n);
}

SkewShape k_skew(const Ints& lambda, int k) {
  Core kappa = to_core(lambda, k);
  Ints lam = stripped(lambda);
  Ints inner;
  for (int r = 1; r <= kappa.length(); ++r)
    inner.push_back(kappa.row(r) - lam[r - 1]);
  inner = stripped(inner);
  if (!is_partition(inner))
    throw std::logic_error("k_skew: inner shape is not a partition");
  return SkewShape{kappa.shape(), std::move(inner)};
}

int row_map(const Core& kappa, int z) {
  if (z < 1) throw std::invalid_argument("row_map: z must be positive");
  return kappa.row(z) - z + 1;
}

int offset_at(const Core& kappa, int i) {
  int n = kappa.n();
  int ell = kappa.length();
  std::set<int> ones;  // f(z) for the nonempty rows
  for (int z = 1; z <= ell; ++z) ones.insert(row_map(kappa, z));
  auto bit = [&](int x) { return x <= -ell || ones.count(x) > 0; };
  // Walk up the diagonal class i + nZ from inside the all-ones tail.
  int j = floordiv(-ell - i, n);
  while (bit(i + n * (j + 1))) ++j;
  return j + 1;
}

OffsetView offsets(const Core& kappa) {
  int n = kappa.n();
  int lo = -kappa.length() - n;
  int hi = kappa.row(1) + n;
  OffsetView out{kappa, lo, hi, {}};
  for (int i = lo; i <= hi; ++i) out.d[i] = offset_at(kappa, i);
  return out;
}

Core reflect(const Core& kappa, int r, int s) {
  int n = kappa.n();
  if (r >= s) throw std::invalid_argument("reflect: need r < s");
  if ((s - r) % n == 0)
    throw std::invalid_argument("reflect: r and s agree mod n");
  // Highest one bit of each residue class of the boundary word.
  std::vector<long long> top(n);
  for (int c = 0; c < n; ++c)
    top[c] = c + static_cast<long long>(n) * (offset_at(kappa, c) - 1);
  int dr = offset_at(kappa, r);
  int ds = offset_at(kappa, s);
  auto res = [n](int x) { return ((x % n) + n) % n; };
  top[res(r)] = r + static_cast<long long>(n) * (ds - 1);
  top[res(s)] = s + static_cast<long long>(n) * (dr - 1);
  // Read the new word back into a partition, highest one bit first.
  Ints out;
  for (int z = 1;; ++z) {
    int best = 0;
    for (int c = 1; c < n; ++c)
      if (top[c] > top[best]) best = c;
    long long part = top[best] + z - 1;
    top[best] -= n;
    if (part < 0) throw std::logic_error("reflect: malformed boundary word");
    if (part == 0) break;
    out.push_back(static_cast<int>(part));
  }
  return Core(std::move(out), n);
}

std::optional<Core> cover_z(const Core& kappa, int z) {
  if (z < 1) throw std::invalid_argument("cover_z: z must be positive");
  if (z > kappa.length()) return std::nullopt;
  int n = kappa.n();
  int s = row_map(kappa, z);
  int ds = offset_at(kappa, s);
  // Smallest r < s with d_i > d_s or d_i < 0 strictly between; the cover
  // exists when that r satisfies d_r = 0 and s - n < r.
  for (int r = s - 1; r > s - n; --r) {
    int dr = offset_at(kappa, r);
    if (dr >= 0 && dr <= ds) {
      if (dr != 0) return std::nullopt;
      return reflect(kappa, r, s);
    }
  }
  return std::nullopt;
}

std::set<int> markings(const Core& tau, const Core& kappa) {
  Components comps = cover_parts(tau, kappa);
  return std::set<int>(comps.head.begin(), comps.head.end());
}

int spin(const StrongMarkedCover& cover) {
  Components comps = cover_parts(cover.tau, cover.kappa);
  int c = static_cast<int>(comps.head.size());
  int h = comps.height[0];
  for (int hh : comps.height)
    if (hh != h) throw std::logic_error("spin: components of unequal height");
  bool seen = false;
  int below = 0;
  for (int head : comps.head) {
    if (head == cover.mark) seen = true;
    if (head > cover.mark) ++below;
  }
  if (!seen)
    throw std::invalid_argument("spin: mark is not a component head");
  return c * (h - 1) + below;
}

Ints StrongMarkedTableau::inside_bounded() const {
  return chain.empty() ? to_bounded(outside) : to_bounded(chain.front().tau);
}

Ints StrongMarkedTableau::outside_bounded() const {
  return to_bounded(outside);
}

int StrongMarkedTableau::spin_total() const {
  int total = 0;
  for (const auto& cv : chain) total += spin(cv);
  return total;
}

std::vector<StrongMarkedTableau> enumerate_tableaux(const Ints& mu, int k,
                                                    const Ints& eta,
                                                    bool vertical) {
  for (int e : eta)
    if (e < 0)
      throw std::invalid_argument("enumerate_tableaux: negative weight entry");
  Core outside = to_core(mu, k);
  int m = 0;
  for (int e : eta) m += e;
  std::vector<int> blk(m + 2, 0);  // block index per chain position
  {
    int step = 1, b = 0;
    for (int e : eta) {
      ++b;
      for (int j = 0; j < e; ++j) blk[step++] = b;
    }
  }
  std::vector<StrongMarkedTableau> out;
  std::vector<StrongMarkedCover> chain;  // collected outside in
  auto rec = [&](auto&& self, const Core& cur, int step, int prev) -> void {
    if (step == 0) {
      StrongMarkedTableau t{outside, eta, vertical, chain};
      std::reverse(t.chain.begin(), t.chain.end());
      out.push_back(std::move(t));
      return;
    }
    bool inner = step < m && blk[step] == blk[step + 1];
    for (int z = 1; z <= cur.length(); ++z) {
      std::optional<Core> tau = cover_z(cur, z);
      if (!tau) continue;
      for (int mark : markings(*tau, cur)) {
        if (inner && (vertical ? mark >= prev : mark < prev)) continue;
        chain.push_back(StrongMarkedCover{*tau, cur, mark});
        self(self, *tau, step - 1, mark);
        chain.pop_back();
      }
    }
  };
  rec(rec, outside, m, 0);
  return out;
}

}  // namespace cf
