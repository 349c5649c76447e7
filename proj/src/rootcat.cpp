#include "rootcat.h"

#include <algorithm>
#include <stdexcept>

#include "vertexops.h"

namespace cf {

RootIdeal::RootIdeal(int ell, Ints rowcounts) : ell_(ell), n_(std::move(rowcounts)) {
  if (ell_ <= 0) throw std::invalid_argument("root ideal: length must be positive");
  if ((int)n_.size() != ell_)
    throw std::invalid_argument("root ideal: need one row count per row");
  for (int i = 1; i <= ell_; ++i) {
    if (n_[i - 1] < 0 || n_[i - 1] > ell_ - i)
      throw std::invalid_argument("root ideal: row count out of range");
    if (i < ell_ && n_[i - 1] < n_[i])
      throw std::invalid_argument("root ideal: row counts must weakly decrease");
  }
}

RootIdeal RootIdeal::empty(int ell) { return RootIdeal(ell, Ints(ell, 0)); }

RootIdeal RootIdeal::full(int ell) {
  Ints n(ell);
  for (int i = 1; i <= ell; ++i) n[i - 1] = ell - i;
  return RootIdeal(ell, n);
}

RootIdeal RootIdeal::from_roots(int ell, const std::set<Root>& roots) {
  Ints n(ell, 0);
  for (auto& [i, j] : roots) {
    if (i < 1 || j <= i || j > ell) throw std::invalid_argument("root out of range");
    n[i - 1]++;
  }
  RootIdeal psi(ell, n);
  if (psi.roots() != roots)
    throw std::invalid_argument("root set is not an upper order ideal");
  return psi;
}

int RootIdeal::row_count(int i) const {
  if (i < 1 || i > ell_) throw std::invalid_argument("row out of range");
  return n_[i - 1];
}

int RootIdeal::col_count(int j) const {
  if (j < 1 || j > ell_) throw std::invalid_argument("column out of range");
  int c = 0;
  for (int i = 1; i <= j - 1; ++i)
    if (n_[i - 1] >= ell_ + 1 - j) c++;
  return c;
}

bool RootIdeal::contains(int i, int j) const {
  if (i < 1 || i >= j || j > ell_) return false;
  return j >= ell_ + 1 - n_[i - 1];
}

std::set<Root> RootIdeal::roots() const {
  std::set<Root> out;
  for (int i = 1; i <= ell_; ++i)
    for (int j = ell_ + 1 - n_[i - 1]; j <= ell_; ++j) out.insert({i, j});
  return out;
}

int RootIdeal::size() const {
  int s = 0;
  for (int v : n_) s += v;
  return s;
}

RootIdeal RootIdeal::with_root(Root r) const {
  auto [i, j] = r;
  if (i < 1 || i > ell_ || j != ell_ - n_[i - 1])
    throw std::invalid_argument("root is not addable here");
  Ints n = n_;
  n[i - 1]++;
  return RootIdeal(ell_, n);
}

RootIdeal RootIdeal::without_root(Root r) const {
  auto [i, j] = r;
  if (i < 1 || i > ell_ || n_[i - 1] == 0 || j != ell_ + 1 - n_[i - 1])
    throw std::invalid_argument("root is not removable here");
  Ints n = n_;
  n[i - 1]--;
  return RootIdeal(ell_, n);
}

std::vector<Root> removable_roots(const RootIdeal& psi) {
  int ell = psi.ell();
  const Ints& n = psi.rowcounts();
  std::vector<Root> out;
  for (int i = 1; i <= ell; ++i) {
    int below = i < ell ? n[i] : 0;
    if (n[i - 1] >= 1 && n[i - 1] > below) out.push_back({i, ell + 1 - n[i - 1]});
  }
  return out;
}

std::vector<Root> addable_roots(const RootIdeal& psi) {
  int ell = psi.ell();
  const Ints& n = psi.rowcounts();
  std::vector<Root> out;
  for (int i = 1; i <= ell; ++i) {
    if (n[i - 1] >= ell - i) continue;  // row full
    if (i > 1 && n[i - 2] < n[i - 1] + 1) continue;  // row above too short
    out.push_back({i, ell - n[i - 1]});
  }
  return out;
}

std::optional<int> down(const RootIdeal& psi, int x) {
  for (auto& [i, j] : removable_roots(psi))
    if (i == x) return j;
  return std::nullopt;
}

std::optional<int> up(const RootIdeal& psi, int x) {
  for (auto& [i, j] : removable_roots(psi))
    if (j == x) return i;
  return std::nullopt;
}

std::vector<int> downpath(const RootIdeal& psi, int r) {
  std::vector<int> path{r};
  while (auto nxt = down(psi, path.back())) path.push_back(*nxt);
  return path;
}

std::vector<int> uppath(const RootIdeal& psi, int r) {
  std::vector<int> path{r};
  while (auto nxt = up(psi, path.back())) path.push_back(*nxt);
  return path;
}

int chaindown(const RootIdeal& psi, int r) { return downpath(psi, r).back(); }

int chainup(const RootIdeal& psi, int r) { return uppath(psi, r).back(); }

std::optional<BounceResult> bounce_query(const RootIdeal& psi, int a, int b) {
  if (a < 1 || a > b || b > psi.ell())
    throw std::invalid_argument("bounce query: need 1 <= a <= b <= ell");
  std::vector<int> path{a};
  while (path.back() != b) {
    auto nxt = down(psi, path.back());
    if (!nxt || *nxt > b) return std::nullopt;
    path.push_back(*nxt);
  }
  return BounceResult{path, (int)path.size() - 1};
}

StructureFlags structure_predicates(const RootIdeal& psi, int idx) {
  int ell = psi.ell();
  if (idx < 1 || idx >= ell)
    throw std::invalid_argument("structure predicates: index out of range");
  StructureFlags f{};
  f.wall = psi.row_count(idx) == psi.row_count(idx + 1);
  f.ceiling = psi.col_count(idx) == psi.col_count(idx + 1);
  auto d1 = down(psi, idx), d2 = down(psi, idx + 1);
  f.mirror = d1 && d2 && *d2 == *d1 + 1 && *d1 > idx + 1;
  return f;
}

IndexedRootIdeal::IndexedRootIdeal(RootIdeal p, Ints g)
    : psi(std::move(p)), gamma(std::move(g)) {
  if ((int)gamma.size() != psi.ell())
    throw std::invalid_argument("indexed root ideal: weight length must equal ell");
}

namespace {

std::vector<Root> complement_roots(const RootIdeal& psi) {
  std::vector<Root> out;
  for (int i = 1; i <= psi.ell(); ++i)
    for (int j = i + 1; j <= psi.ell(); ++j)
      if (!psi.contains(i, j)) out.push_back({i, j});
  return out;
}

// signed multiplier per weight reached by lowering gamma along subsets of
// the complement; sign and t-power both count the subset size
void subset_weights(const std::vector<Root>& comp, size_t idx, Ints& delta,
                    int used, std::map<Ints, TPoly>& out) {
  if (idx == comp.size()) {
    out[delta] += TPoly::t_power(used, used % 2 == 0 ? 1 : -1);
    return;
  }
  subset_weights(comp, idx + 1, delta, used, out);
  auto [i, j] = comp[idx];
  delta[i - 1]++;
  delta[j - 1]--;
  subset_weights(comp, idx + 1, delta, used + 1, out);
  delta[i - 1]--;
  delta[j - 1]++;
}

}  // namespace

SymFunc catalan_chl(const IndexedRootIdeal& iri) {
  auto comp = complement_roots(iri.psi);
  if (comp.size() > 24)
    throw std::length_error("catalan evaluation: complement too large");
  std::map<Ints, TPoly> mults;
  Ints delta = iri.gamma;
  subset_weights(comp, 0, delta, 0, mults);
  SymFunc out;
  for (auto& [w, c] : mults) out += chl(w) * c;
  return out;
}

namespace {

struct SeriesState {
  std::vector<Root> roots;  // rows descending, columns ascending within a row
  int ell;
  Ints delta;
  std::map<Ints, TPoly> acc;
};

void series_rec(SeriesState& st, size_t idx, int used) {
  if (idx == st.roots.size()) {
    if (auto s = schur_straighten(st.delta))
      st.acc[s->second] += TPoly::t_power(used, s->first);
    return;
  }
  auto [r, j] = st.roots[idx];
  // once every row below r is done, coordinate r only decreases; a value
  // under r - ell can never straighten back to a partition
  if (idx > 0 && st.roots[idx - 1].first != r &&
      st.delta[st.roots[idx - 1].first - 1] + st.ell - st.roots[idx - 1].first < 0)
    return;
  for (int m = 0;; ++m) {
    series_rec(st, idx + 1, used + m);
    st.delta[r - 1]++;
    st.delta[j - 1]--;
    if (st.delta[j - 1] + st.ell - j < 0) {
      st.delta[r - 1] -= m + 1;
      st.delta[j - 1] += m + 1;
      return;
    }
  }
}

}  // namespace

SymFunc catalan_series(const IndexedRootIdeal& iri) {
  SeriesState st;
  st.ell = iri.psi.ell();
  st.delta = iri.gamma;
  for (int i = st.ell; i >= 1; --i)
    for (int j = st.ell + 1 - iri.psi.row_count(i); j <= st.ell; ++j)
      st.roots.push_back({i, j});
  series_rec(st, 0, 0);
  SymFunc out;
  for (auto& [lam, c] : st.acc) out.add_term(lam, c);
  return out;
}

SymFunc catalan_t1(const IndexedRootIdeal& iri) {
  auto comp = complement_roots(iri.psi);
  if (comp.size() > 24)
    throw std::length_error("catalan evaluation: complement too large");
  std::map<Ints, TPoly> mults;
  Ints delta = iri.gamma;
  subset_weights(comp, 0, delta, 0, mults);
  // collapse each weight to an h-product key; h_m = 0 for m < 0 kills it
  std::map<Ints, Int> hkeys;
  for (auto& [w, c] : mults) {
    bool dead = false;
    Ints key;
    for (int v : w) {
      if (v < 0) { dead = true; break; }
      if (v > 0) key.push_back(v);
    }
    if (dead) continue;
    std::sort(key.rbegin(), key.rend());
    hkeys[key] += c.at_one();
  }
  SymFunc out;
  std::map<Ints, SymFunc> expanded;
  for (auto& [key, c] : hkeys) {
    if (c == 0) continue;
    auto it = expanded.find(key);
    if (it == expanded.end()) {
      SymFunc f = SymFunc::one();
      for (int d : key) f = mult_h(d, f);
      it = expanded.emplace(key, f).first;
    }
    out += it->second * TPoly(c);
  }
  return out;
}

std::pair<RecurrenceTerm, RecurrenceTerm> expand_recurrence(
    const IndexedRootIdeal& iri, Root root, RootMode mode) {
  auto [i, j] = root;
  Ints moved = iri.gamma;
  moved[i - 1]++;
  moved[j - 1]--;
  if (mode == RootMode::addable) {
    auto add = addable_roots(iri.psi);
    if (std::find(add.begin(), add.end(), root) == add.end())
      throw std::invalid_argument("expand_recurrence: root is not addable");
    RootIdeal grown = iri.psi.with_root(root);
    return {RecurrenceTerm{{grown, iri.gamma}, TPoly(1)},
            RecurrenceTerm{{grown, moved}, TPoly::t_power(1, -1)}};
  }
  auto rem = removable_roots(iri.psi);
  if (std::find(rem.begin(), rem.end(), root) == rem.end())
    throw std::invalid_argument("expand_recurrence: root is not removable");
  return {RecurrenceTerm{{iri.psi.without_root(root), iri.gamma}, TPoly(1)},
          RecurrenceTerm{{iri.psi, moved}, TPoly::t_power(1)}};
}

std::vector<RecurrenceTerm> downpath_expand(const IndexedRootIdeal& iri, int m) {
  if (m < 1 || m > iri.psi.ell())
    throw std::invalid_argument("downpath_expand: row out of range");
  auto path = downpath(iri.psi, m);
  std::vector<RecurrenceTerm> out;
  for (size_t p = 0; p < path.size(); ++p) {
    int z = path[p];
    RootIdeal shrunk = p + 1 < path.size()
                           ? iri.psi.without_root({z, *down(iri.psi, z)})
                           : iri.psi;
    Ints moved = iri.gamma;
    moved[m - 1]++;
    moved[z - 1]--;
    out.push_back({{shrunk, moved}, TPoly::t_power((int)p)});
  }
  return out;
}

SymFunc subset_lower(int d, const std::set<int>& V, const IndexedRootIdeal& iri) {
  if (d < 0) throw std::invalid_argument("subset_lower: d must be nonnegative");
  std::vector<int> rows(V.begin(), V.end());
  for (int r : rows)
    if (r < 1 || r > iri.psi.ell())
      throw std::invalid_argument("subset_lower: row out of range");
  SymFunc out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t from) -> void {
    if ((int)pick.size() == d) {
      Ints delta = iri.gamma;
      for (int r : pick) delta[r - 1]--;
      out += catalan_chl({iri.psi, delta});
      return;
    }
    for (size_t p = from; p < rows.size(); ++p) {
      pick.push_back(rows[p]);
      self(self, p + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

MirrorVerdict mirror_predicates(const IndexedRootIdeal& iri, int y, int z, int w,
                                const std::optional<std::set<int>>& V) {
  const RootIdeal& psi = iri.psi;
  const Ints& mu = iri.gamma;
  int ell = psi.ell();
  if (!(1 <= y && y <= z && z <= w && w < ell)) return MirrorVerdict::NotApplicable;

  auto walk = bounce_query(psi, y, w);
  if (!walk) return MirrorVerdict::NotApplicable;
  const auto& path = walk->path;

  if (!structure_predicates(psi, y).ceiling) return MirrorVerdict::NotApplicable;
  if (!structure_predicates(psi, w).wall) return MirrorVerdict::NotApplicable;
  for (size_t p = 0; p + 1 < path.size(); ++p)
    if (!structure_predicates(psi, path[p]).mirror) return MirrorVerdict::NotApplicable;
  if (V) {
    for (int x : path)
      if (V->count(x) != V->count(x + 1)) return MirrorVerdict::NotApplicable;
  }

  bool z_on_path = std::find(path.begin(), path.end(), z) != path.end();
  bool flat_off_z = true, flat_all = true;
  for (int x : path) {
    if (mu[x - 1] != mu[x]) {
      flat_all = false;
      if (x != z) flat_off_z = false;
    }
  }
  if (z_on_path && flat_off_z && mu[z - 1] == mu[z] - 1)
    return MirrorVerdict::MirrorI_zero;
  if (flat_all && (up(psi, y) || down(psi, w + 1)))
    return MirrorVerdict::MirrorII_removable_equal;
  return MirrorVerdict::NotApplicable;
}

}  // namespace cf
