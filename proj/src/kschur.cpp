#include "kschur.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "vertexops.h"

namespace cf {

namespace {

int at(const Ints& v, int i) {  // 1-based, 0 outside
  return (i >= 1 && i <= static_cast<int>(v.size())) ? v[i - 1] : 0;
}

}  // namespace

KWeight::KWeight(Ints m, int kk) : mu(std::move(m)), k(kk) {
  if (k < 1) throw std::invalid_argument("kweight: k must be positive");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] > k) throw std::invalid_argument("kweight: entry above k");
    if (i + 1 < mu.size() && mu[i + 1] > mu[i] + 1)
      throw std::invalid_argument("kweight: staircase condition fails");
  }
}

TPoly KExpansion::coeff(const Ints& mu) const {
  auto it = t_.find(stripped(mu));
  return it == t_.end() ? TPoly() : it->second;
}

void KExpansion::add_term(const Ints& mu, const TPoly& c) {
  if (c.is_zero()) return;
  Ints key = stripped(mu);
  if (!is_partition(key) || (!key.empty() && key[0] > k_))
    throw std::invalid_argument("kexpansion: key must be a partition with parts at most k");
  TPoly& cur = t_[key];
  cur += c;
  if (cur.is_zero()) t_.erase(key);
}

KExpansion& KExpansion::operator+=(const KExpansion& o) {
  if (k_ != o.k_) throw std::logic_error("kexpansion: cannot mix different k");
  for (const auto& [mu, c] : o.t_) add_term(mu, c);
  return *this;
}

KExpansion& KExpansion::operator-=(const KExpansion& o) {
  if (k_ != o.k_) throw std::logic_error("kexpansion: cannot mix different k");
  for (const auto& [mu, c] : o.t_) add_term(mu, -c);
  return *this;
}

KExpansion KExpansion::operator*(const TPoly& c) const {
  KExpansion r(k_);
  if (c.is_zero()) return r;
  for (const auto& [mu, q] : t_) r.add_term(mu, q * c);
  return r;
}

SymFunc KExpansion::evaluate() const {
  SymFunc f;
  for (const auto& [mu, c] : t_) f += kschur(mu, k_) * c;
  return f;
}

RootIdeal delta_k(const KWeight& kw) {
  const int ell = kw.ell();
  Ints counts(ell, 0);
  for (int i = 1; i <= ell; ++i)
    counts[i - 1] = std::clamp(ell - kw.k + kw.mu[i - 1] - i, 0, ell - i);
  return RootIdeal(ell, counts);
}

SymFunc kschur(const KWeight& kw) {
  if (kw.ell() == 0) return SymFunc::one();
  return catalan_chl({delta_k(kw), kw.mu});
}

SymFunc kschur(const Ints& mu, int k) { return kschur(KWeight(mu, k)); }

namespace {

struct CvrWork {
  int ell;
  Ints mu;                // lambda - eps_z
  RootIdeal psi;          // delta_k of mu
  std::vector<int> path;  // uppath of z
  int c = 0;
  int h = 0;
  int y = 0;  // meaningful only when h > 0
};

CvrWork cvr_work(const Ints& lambda, int z, int k) {
  if (!is_partition(lambda))
    throw std::invalid_argument("cvr: lambda must be a partition");
  if (!lambda.empty() && lambda[0] > k)
    throw std::invalid_argument("cvr: parts must be at most k");
  const int ell = static_cast<int>(lambda.size());
  if (z < 1 || z > ell) throw std::invalid_argument("cvr: row out of range");

  Ints mu = lambda;
  mu[z - 1] -= 1;
  CvrWork w{ell, mu, delta_k(KWeight(mu, k)), {}, 0, 0, 0};
  w.path = uppath(w.psi, z);
  w.c = static_cast<int>(w.path.size());

  if (z == ell || at(lambda, z) > at(lambda, z + 1)) return w;
  std::optional<int> top = z + 1;
  for (int i = 0; i < w.c && top; ++i) top = up(w.psi, *top);
  if (!top) return w;
  w.y = *top - 1;

  auto constant_on = [&](int a, int b) {
    for (int i = a; i < b; ++i)
      if (at(w.mu, i) != at(w.mu, i + 1)) return false;
    return true;
  };
  auto ok = [&](int h) {
    if (!constant_on(z + 1, z + h)) return false;
    for (int x : w.path)
      if (x != z && !constant_on(x, x + h)) return false;
    return constant_on(w.y + 1, w.y + h);
  };
  while (w.h < ell - z && ok(w.h + 1)) ++w.h;
  return w;
}

}  // namespace

CvrResult cvr(const Ints& lambda, int z, int k) {
  CvrWork w = cvr_work(lambda, z, k);
  Ints weight = lambda;
  weight[z - 1] -= 1;
  for (int i = z + 1; i <= z + w.h; ++i) weight[i - 1] -= 1;
  for (int i = w.y + 1; i <= w.y + w.h; ++i) weight[i - 1] += 1;
  bool part = at(lambda, z + w.h) > at(lambda, z + w.h + 1);
  return {weight, part, w.h * w.c, w.c, w.h};
}

std::vector<std::pair<int, int>> straightening_intervals(const Ints& lambda,
                                                         int z, int k) {
  CvrWork w = cvr_work(lambda, z, k);
  int cprime = -1;
  if (at(lambda, z + w.h) <= at(lambda, z + w.h + 1)) {
    cprime = 0;
    for (int i = 1; i < w.c; ++i) {
      int x = w.path[i];
      if (at(w.mu, x + w.h) != at(w.mu, x + w.h + 1)) break;
      cprime = i;
    }
  }
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < w.c; ++s) {
    int hx = s <= cprime ? w.h + 1 : w.h;
    out.emplace_back(w.path[s], w.path[s] + hx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

KExpansion straighten(const Ints& lambda, int z, int k) {
  CvrResult r = cvr(lambda, z, k);
  KExpansion out(k);
  if (r.partition) out.add_term(r.weight, TPoly::t_power(r.bounce));
  return out;
}

KExpansion vertical_pieri(const Ints& mu, int k, int d) {
  KExpansion out(k);
  for (const auto& T : enumerate_tableaux(mu, k, {d}, true))
    out.add_term(T.inside_bounded(), TPoly::t_power(T.spin_total()));
  return out;
}

KExpansion horizontal_pieri(const Ints& mu, int k, int d) {
  KExpansion out(k);
  for (const auto& T : enumerate_tableaux(mu, k, {d}, false))
    out.add_term(T.inside_bounded(), TPoly::t_power(T.spin_total()));
  return out;
}

namespace {

void check_row_cap(const Ints& mu, int m) {
  if (m < 1 || m > std::max(1, static_cast<int>(mu.size())))
    throw std::invalid_argument("restriction: row cap out of range");
}

}  // namespace

KExpansion partial_restriction(const Ints& mu, int k, int d, int m) {
  check_row_cap(mu, m);
  KExpansion out(k);
  for (const auto& T : enumerate_tableaux(mu, k, {d}, true)) {
    bool ok = true;
    for (const auto& cov : T.chain) ok = ok && cov.mark <= m;
    if (ok) out.add_term(T.inside_bounded(), TPoly::t_power(T.spin_total()));
  }
  return out;
}

KExpansion l_restriction(const Ints& mu, int k, int d, int m) {
  check_row_cap(mu, m);
  KExpansion out(k);
  if (d < 1) return out;
  for (const auto& T : enumerate_tableaux(mu, k, {d}, true)) {
    int top = 0;
    for (const auto& cov : T.chain) top = std::max(top, cov.mark);
    if (top == m) out.add_term(T.inside_bounded(), TPoly::t_power(T.spin_total()));
  }
  return out;
}

KExpansion branch(const Ints& mu, int k) {
  Ints base = stripped(mu);
  if (!is_partition(base) || (!base.empty() && base[0] > k))
    throw std::invalid_argument("branch: need a partition with parts at most k");
  const int ell = static_cast<int>(base.size());
  for (int& v : base) v += 1;
  KExpansion out(k + 1);
  for (const auto& T : enumerate_tableaux(base, k + 1, {ell}, true))
    out.add_term(T.inside_bounded(), TPoly::t_power(T.spin_total()));
  return out;
}

SymFunc schur_expand(const Ints& mu, int k) {
  Ints base = stripped(mu);
  if (!is_partition(base) || (!base.empty() && base[0] > k))
    throw std::invalid_argument("schur expand: need a partition with parts at most k");
  const int ell = static_cast<int>(base.size());
  const int m = std::max(sum_of(base) - k, 0);
  for (int& v : base) v += m;
  Ints eta(m, ell);
  SymFunc out;
  for (const auto& T : enumerate_tableaux(base, k + m, eta, true))
    out.add_term(T.inside_bounded(), TPoly::t_power(T.spin_total()));
  return out;
}

TPoly smt_weight_poly(const Ints& mu, int k, const Ints& eta) {
  TPoly out;
  for (const auto& T : enumerate_tableaux(mu, k, eta, false))
    out += TPoly::t_power(T.spin_total());
  return out;
}

namespace {

void check_skew(const SkewShape& ke) {
  if (!is_partition(ke.outer) || !is_partition(ke.inner) ||
      !contains(ke.outer, ke.inner))
    throw std::invalid_argument("skew shape: inner must sit inside outer");
}

Ints column_rows(const SkewShape& ke) {  // rows of the transpose
  Ints outc = conjugate(ke.outer);
  Ints innc = conjugate(ke.inner);
  Ints mu(outc.size());
  for (std::size_t j = 0; j < outc.size(); ++j)
    mu[j] = outc[j] - at(innc, static_cast<int>(j) + 1);
  return mu;
}

}  // namespace

bool skew_linking_check(const SkewShape& ke) {
  check_skew(ke);
  Ints outer = stripped(ke.outer);
  Ints lam(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i)
    lam[i] = outer[i] - at(ke.inner, static_cast<int>(i) + 1);
  return is_partition(lam) && is_partition(column_rows(ke));
}

RootIdeal chen_ideal(const SkewShape& ke) {
  if (!skew_linking_check(ke))
    throw std::invalid_argument("chen ideal: rows or columns fail to be partitions");
  Ints outer = stripped(ke.outer);
  const int ell = static_cast<int>(outer.size());
  Ints mu = column_rows(ke);
  const int leta = nonzero_len(ke.inner);
  Ints counts(ell, 0);
  for (int i = 1; i <= leta; ++i) {
    int start = std::max(i + 1, at(mu, at(ke.inner, i)) + i);
    counts[i - 1] = std::max(0, ell - start + 1);
  }
  return RootIdeal(ell, counts);
}

namespace {

void box_partitions_rec(int total, int maxpart, int maxlen, Ints& cur,
                        std::vector<Ints>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (maxlen == 0) return;
  for (int p = std::min(total, maxpart); p >= 1; --p) {
    cur.push_back(p);
    box_partitions_rec(total - p, p, maxlen - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::map<Ints, TPoly> hl_expand(const SymFunc& f, int k, int ell) {
  if (k < 1 || ell < 0) throw std::invalid_argument("hl expand: bad bounds");
  std::map<Ints, TPoly> out;
  for (const auto& [deg, part] : f.split_by_degree()) {
    std::vector<Ints> cands;
    Ints cur;
    box_partitions_rec(deg, k, ell, cur, cands);
    std::sort(cands.begin(), cands.end());
    // peel from the dominance-smallest end: each candidate's Schur
    // coefficient is untouched by the basis elements still to come
    SymFunc residual = part;
    for (const Ints& lam : cands) {
      TPoly c = residual.coeff(lam);
      if (c.is_zero()) continue;
      out[lam] = c;
      residual -= chl(lam) * c;
    }
    if (!residual.is_zero())
      throw std::domain_error("hl expand: input outside the basis span");
  }
  return out;
}

}  // namespace cf
