#include "symfunc.h"

#include <functional>
#include <stdexcept>

namespace cf {

SymFunc SymFunc::one() {
  SymFunc f;
  f.t_[{}] = TPoly(1);
  return f;
}

SymFunc SymFunc::schur(const Ints& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("schur: not a partition");
  SymFunc f;
  f.t_[stripped(lambda)] = TPoly(1);
  return f;
}

SymFunc SymFunc::from_weight(const Ints& gamma) {
  SymFunc f;
  if (auto st = schur_straighten(gamma)) f.t_[st->second] = TPoly(st->first);
  return f;
}

TPoly SymFunc::coeff(const Ints& lambda) const {
  auto it = t_.find(stripped(lambda));
  return it == t_.end() ? TPoly() : it->second;
}

void SymFunc::add_term(const Ints& lambda, const TPoly& c) {
  if (c.is_zero()) return;
  Ints key = stripped(lambda);
  if (!is_partition(key)) throw std::invalid_argument("add_term: not a partition");
  TPoly& cur = t_[key];
  cur += c;
  if (cur.is_zero()) t_.erase(key);
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (auto& [lam, c] : o.t_) {
    TPoly& cur = t_[lam];
    cur += c;
    if (cur.is_zero()) t_.erase(lam);
  }
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (auto& [lam, c] : o.t_) {
    TPoly& cur = t_[lam];
    cur -= c;
    if (cur.is_zero()) t_.erase(lam);
  }
  return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  r += o;
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc r = *this;
  r -= o;
  return r;
}

SymFunc SymFunc::operator*(const TPoly& c) const {
  SymFunc r;
  if (c.is_zero()) return r;
  for (auto& [lam, p] : t_) r.t_[lam] = p * c;
  return r;
}

SymFunc SymFunc::at_one() const {
  SymFunc r;
  for (auto& [lam, p] : t_) {
    TPoly v(p.at_one());
    if (!v.is_zero()) r.t_[lam] = v;
  }
  return r;
}

bool SymFunc::schur_positive() const {
  for (auto& [lam, p] : t_)
    if (!p.nonneg()) return false;
  return true;
}

std::optional<int> SymFunc::homogeneous_degree() const {
  std::optional<int> deg;
  for (auto& [lam, p] : t_) {
    int d = sum_of(lam);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<int>(0);
}

std::map<int, SymFunc> SymFunc::split_by_degree() const {
  std::map<int, SymFunc> out;
  for (auto& [lam, p] : t_) out[sum_of(lam)].t_[lam] = p;
  return out;
}

// enumerate partitions obtained from mu by adding a horizontal strip of size d
static void add_hstrips(const Ints& mu, int d, const std::function<void(const Ints&)>& emit) {
  int rows = (int)mu.size() + 1;
  Ints lam(rows, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rows) {
      if (left == 0) emit(lam);
      return;
    }
    int mi = i < (int)mu.size() ? mu[i] : 0;
    int hi = i == 0 ? mi + left : std::min(mu[i - 1], mi + left);
    for (int v = mi; v <= hi; ++v) {
      lam[i] = v;
      self(self, i + 1, left - (v - mi));
    }
  };
  rec(rec, 0, d);
}

static void add_vstrips(const Ints& mu, int d, const std::function<void(const Ints&)>& emit) {
  int rows = (int)mu.size() + d;
  Ints lam(rows, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rows) {
      if (left == 0) emit(lam);
      return;
    }
    int mi = i < (int)mu.size() ? mu[i] : 0;
    for (int add = 0; add <= std::min(1, left); ++add) {
      int v = mi + add;
      if (i > 0 && v > lam[i - 1]) continue;
      if (v == 0 && left - add > 0) continue;  // remaining rows would stay empty
      lam[i] = v;
      self(self, i + 1, left - add);
    }
  };
  rec(rec, 0, d);
}

SymFunc mult_h(int d, const SymFunc& f) {
  if (d < 0) return SymFunc::zero();
  if (d == 0) return f;
  SymFunc r;
  for (auto& [mu, c] : f.terms())
    add_hstrips(mu, d, [&](const Ints& lam) { r.add_term(lam, c); });
  return r;
}

SymFunc mult_e(int d, const SymFunc& f) {
  if (d < 0) return SymFunc::zero();
  if (d == 0) return f;
  SymFunc r;
  for (auto& [mu, c] : f.terms())
    add_vstrips(mu, d, [&](const Ints& lam) { r.add_term(lam, c); });
  return r;
}

SymFunc e_perp(int d, const SymFunc& f) {
  if (d < 0) return SymFunc::zero();
  if (d == 0) return f;
  SymFunc r;
  for (auto& [lam, c] : f.terms()) {
    // remove a vertical strip of size d: at most one box per row
    int rows = (int)lam.size();
    Ints mu(rows, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == rows) {
        if (left == 0) r.add_term(mu, c);
        return;
      }
      for (int rem = 0; rem <= std::min(1, left); ++rem) {
        int v = lam[i] - rem;
        if (v < 0) continue;
        if (i + 1 < rows && v < lam[i + 1] - 1) continue;  // cannot stay decreasing
        if (i > 0 && v > mu[i - 1]) continue;
        mu[i] = v;
        self(self, i + 1, left - rem);
      }
    };
    rec(rec, 0, d);
  }
  return r;
}

SymFunc h_perp(int d, const SymFunc& f) {
  if (d < 0) return SymFunc::zero();
  if (d == 0) return f;
  SymFunc r;
  for (auto& [lam, c] : f.terms()) {
    // remove a horizontal strip of size d: mu interlaces lam
    int rows = (int)lam.size();
    Ints mu(rows, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == rows) {
        if (left == 0) r.add_term(mu, c);
        return;
      }
      int lo = i + 1 < rows ? lam[i + 1] : 0;
      for (int v = lam[i]; v >= lo && lam[i] - v <= left; --v) {
        mu[i] = v;
        self(self, i + 1, left - (lam[i] - v));
      }
    };
    rec(rec, 0, d);
  }
  return r;
}

TPoly hall_pair_h(const SymFunc& f, const Ints& lambda) {
  SymFunc g = f;
  for (int p : lambda) g = h_perp(p, g);
  return g.coeff({});
}

SymFunc omega(const SymFunc& f) {
  SymFunc r;
  for (auto& [lam, c] : f.terms()) r.add_term(conjugate(lam), c);
  return r;
}

}  // namespace cf
