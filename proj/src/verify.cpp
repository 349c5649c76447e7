#include "verify.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "kschur.h"
#include "render.h"
#include "rootcat.h"
#include "vertexops.h"

namespace cf::verify {

namespace {

struct Check {
  long cases = 0;
  long fails = 0;
  void operator()(bool ok) {
    ++cases;
    if (!ok) ++fails;
  }
};

TPoly tp(int d) { return TPoly::t_power(d); }

// all upper order ideals on ell rows: weakly decreasing counts, n_i <= ell-i
std::vector<RootIdeal> all_ideals(int ell) {
  std::vector<RootIdeal> out;
  Ints counts(ell, 0);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == ell) {
      out.push_back(RootIdeal(ell, counts));
      return;
    }
    for (int n = std::min(cap, ell - i - 1); n >= 0; --n) {
      counts[i] = n;
      rec(i + 1, n);
    }
  };
  rec(0, ell - 1);
  return out;
}

std::vector<Ints> box_weights(int ell, int lo, int hi) {
  std::vector<Ints> out;
  Ints g(ell, lo);
  while (true) {
    out.push_back(g);
    int i = 0;
    while (i < ell && g[i] == hi) g[i++] = lo;
    if (i == ell) break;
    g[i]++;
  }
  return out;
}

void gen_partitions(int remaining, int maxpart, int maxlen, Ints& cur,
                    std::vector<Ints>& out) {
  out.push_back(cur);
  if (maxlen == 0) return;
  int top = std::min(remaining, cur.empty() ? maxpart : cur.back());
  for (int p = top; p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, maxpart, maxlen - 1, cur, out);
    cur.pop_back();
  }
}

// every partition with parts <= maxpart, length <= maxlen, size <= maxsize
std::vector<Ints> partitions_box(int maxpart, int maxlen, int maxsize) {
  std::vector<Ints> out;
  Ints cur;
  gen_partitions(maxsize, maxpart, maxlen, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Ints> partitions_of(int n, int maxlen = -1) {
  if (maxlen < 0) maxlen = n;
  std::vector<Ints> all = partitions_box(n, maxlen, n);
  std::vector<Ints> out;
  for (auto& p : all)
    if (sum_of(p) == n) out.push_back(p);
  return out;
}

TPoly coeff_in(const SymFunc& f, const Ints& lam) { return f.coeff(lam); }

Ints plus_one(Ints v) {
  for (int& x : v) x += 1;
  return v;
}

void suite_symfunc(Check& c, const Options& opt) {
  int cap = std::min(opt.size_max, 8);
  // adjointness of the lowering operators against Pieri multiplication
  for (int s = 0; s <= std::min(cap, 6); ++s)
    for (const auto& lam : partitions_of(s))
      for (int d = 0; d <= std::min(3, s); ++d) {
        SymFunc down = e_perp(d, SymFunc::schur(lam));
        SymFunc downh = h_perp(d, SymFunc::schur(lam));
        for (const auto& mu : partitions_of(s - d)) {
          c(coeff_in(down, mu) == coeff_in(mult_e(d, SymFunc::schur(mu)), lam));
          c(coeff_in(downh, mu) == coeff_in(mult_h(d, SymFunc::schur(mu)), lam));
        }
      }
  // the lowering operators commute pairwise
  for (int s = 0; s <= std::min(cap, 6); ++s)
    for (const auto& lam : partitions_of(s)) {
      SymFunc f = SymFunc::schur(lam);
      for (int d = 0; d <= 3; ++d)
        for (int d2 = 0; d2 <= 3; ++d2) {
          c(e_perp(d, e_perp(d2, f)) == e_perp(d2, e_perp(d, f)));
          c(h_perp(d, h_perp(d2, f)) == h_perp(d2, h_perp(d, f)));
          c(e_perp(d, h_perp(d2, f)) == h_perp(d2, e_perp(d, f)));
        }
    }
  // Kostka triangularity through the Hall pairing
  for (int s = 0; s <= std::min(cap, 6); ++s)
    for (const auto& mu : partitions_of(s))
      for (const auto& lam : partitions_of(s)) {
        TPoly v = hall_pair_h(SymFunc::schur(mu), lam);
        if (mu == lam)
          c(v == TPoly(1));
        else if (!dominance_leq(padded(lam, s), padded(mu, s)))
          c(v.is_zero());
        else
          c(true);
      }
  // omega is an involution
  for (int s = 0; s <= cap; ++s)
    for (const auto& lam : partitions_of(s))
      c(omega(omega(SymFunc::schur(lam))) == SymFunc::schur(lam));
}

void suite_vertexops(Check& c, const Options& opt) {
  int deg = std::min(opt.size_max - 2, 5);
  std::vector<Ints> shapes = partitions_box(deg, deg, deg);
  // commutation identity between two raising operators
  for (const auto& lam : shapes) {
    SymFunc f = SymFunc::schur(lam);
    for (int m = -4; m <= 4; ++m) {
      for (int n = m + 1; n <= 4; ++n) {
        SymFunc lhs = jing_b(m, jing_b(n, f));
        SymFunc rhs = jing_b(m + 1, jing_b(n - 1, f)) * tp(1) +
                      jing_b(n, jing_b(m, f)) * tp(1) -
                      jing_b(n - 1, jing_b(m + 1, f));
        c(lhs == rhs);
      }
      c(jing_b(m, jing_b(m + 1, f)) == jing_b(m + 1, jing_b(m, f)) * tp(1));
    }
    // lowering past a raising operator
    for (int m = -3; m <= 3; ++m)
      for (int d = 1; d <= 3; ++d)
        c(e_perp(d, jing_b(m, f)) ==
          jing_b(m, e_perp(d, f)) + jing_b(m - 1, e_perp(d - 1, f)));
  }
  // positivity and the t = 1 principal specialization
  for (int s = 0; s <= std::min(opt.size_max, 6); ++s)
    for (const auto& mu : partitions_of(s)) {
      SymFunc f = chl(mu);
      c(f.schur_positive());
      SymFunc prod = SymFunc::one();
      for (int p : mu) prod = mult_h(p, prod);
      c(f.at_one() == prod);
    }
  // a trailing negative index kills the whole word
  for (const auto& head : box_weights(3, -2, 3))
    for (int m : {-1, -2}) {
      Ints g = head;
      g.push_back(m);
      c(chl(g).is_zero());
    }
}

void suite_catalan(Check& c, const Options&) {
  // the two evaluators agree on the full small-scale box
  for (int ell = 1; ell <= 4; ++ell) {
    auto ideals = all_ideals(ell);
    for (const auto& g : box_weights(ell, -1, 3))
      for (const auto& p : ideals) {
        IndexedRootIdeal x{p, g};
        SymFunc a = catalan_chl(x);
        c(a == catalan_series(x));
        c(catalan_t1(x) == a.at_one());
        if (!a.is_zero()) c(a.homogeneous_degree() == sum_of(g));
      }
  }
  // reflection-invariant ideals force cancellation
  for (int ell = 2; ell <= 4; ++ell) {
    auto ideals = all_ideals(ell);
    for (const auto& p : ideals)
      for (int i = 1; i < ell; ++i) {
        bool fixed = true;
        for (auto [a, b] : p.roots()) {
          int na = a == i ? i + 1 : a == i + 1 ? i : a;
          int nb = b == i ? i + 1 : b == i + 1 ? i : b;
          if (na >= nb || !p.contains(na, nb)) {
            fixed = false;
            break;
          }
        }
        if (!fixed) continue;
        for (const auto& g : box_weights(ell, -1, 2)) {
          Ints flip = g;
          std::swap(flip[i - 1], flip[i]);
          flip[i - 1] -= 1;
          flip[i] += 1;
          c((catalan_chl({p, g}) + catalan_chl({p, flip})).is_zero());
        }
      }
  }
  // lowering the index set matches the lowering operator
  for (int ell = 1; ell <= 3; ++ell) {
    auto ideals = all_ideals(ell);
    std::set<int> full;
    for (int i = 1; i <= ell; ++i) full.insert(i);
    for (const auto& p : ideals)
      for (const auto& g : box_weights(ell, -1, 3))
        for (int d = 0; d <= ell; ++d)
          c(e_perp(d, catalan_chl({p, g})) == subset_lower(d, full, {p, g}));
  }
  // a zero last entry deletes cleanly
  for (int ell = 2; ell <= 4; ++ell) {
    auto ideals = all_ideals(ell);
    for (const auto& p : ideals) {
      Ints hat(ell - 1);
      for (int i = 0; i + 1 < ell; ++i)
        hat[i] = std::max(p.rowcounts()[i] - 1, 0);
      RootIdeal ph(ell - 1, hat);
      for (const auto& head : box_weights(ell - 1, -1, 2)) {
        Ints g = head;
        g.push_back(0);
        c(catalan_chl({p, g}) == catalan_chl({ph, head}));
      }
    }
  }
  // single-root recurrences, both directions
  for (const auto& p : all_ideals(3))
    for (const auto& g : box_weights(3, 0, 2)) {
      IndexedRootIdeal x{p, g};
      SymFunc base = catalan_chl(x);
      for (Root r : addable_roots(p)) {
        auto [u, v] = expand_recurrence(x, r, RootMode::addable);
        c(base == catalan_chl(u.iri) * u.mult + catalan_chl(v.iri) * v.mult);
      }
      for (Root r : removable_roots(p)) {
        auto [u, v] = expand_recurrence(x, r, RootMode::removable);
        c(base == catalan_chl(u.iri) * u.mult + catalan_chl(v.iri) * v.mult);
      }
    }
  // iterated expansion along a downpath
  for (const auto& p : all_ideals(4)) {
    if (p.size() > 4) continue;
    for (const auto& mu : partitions_box(2, 4, 8))
      for (int m = 1; m <= 4; ++m) {
        IndexedRootIdeal x{p, padded(mu, 4)};
        SymFunc total;
        for (const auto& term : downpath_expand(x, m))
          total += catalan_chl(term.iri) * term.mult;
        c(total == catalan_chl(x));
      }
  }
}

void suite_mirror(Check& c, const Options&) {
  for (int ell = 4; ell <= 5; ++ell) {
    auto ideals = all_ideals(ell);
    for (const auto& p : ideals)
      for (const auto& g : box_weights(ell, 0, 2))
        for (int y = 1; y < ell; ++y)
          for (int z = y; z < ell; ++z)
            for (int w = z; w < ell; ++w) {
              IndexedRootIdeal x{p, g};
              MirrorVerdict v = mirror_predicates(x, y, z, w);
              if (v == MirrorVerdict::MirrorI_zero) {
                c(catalan_chl(x).is_zero());
              } else if (v == MirrorVerdict::MirrorII_removable_equal) {
                SymFunc base = catalan_chl(x);
                if (auto uy = up(p, y))
                  c(base == catalan_chl({p.without_root({*uy, y}), g}));
                if (auto dw = down(p, w + 1))
                  c(base == catalan_chl({p.without_root({w + 1, *dw}), g}));
              }
            }
  }
}

void suite_cores(Check& c, const Options& opt) {
  int cap = std::min(opt.size_max - 1, 6);
  for (int n : {4, 5}) {
    int k = n - 1;
    for (const auto& lam : partitions_box(k, cap, cap)) {
      Core kappa = to_core(lam, k);
      c(to_bounded(kappa) == lam);
      c(to_core(to_bounded(kappa), k) == kappa);
      if (lam.empty()) continue;
      int ell = static_cast<int>(lam.size());
      RootIdeal phi = delta_k(KWeight(lam, k));
      for (int z = 1; z <= ell; ++z) {
        auto cov = cover_z(kappa, z);
        CvrResult r = cvr(lam, z, k);
        c(cov.has_value() == r.partition);
        if (!cov) continue;
        c(to_bounded(*cov) == stripped(r.weight));
        std::vector<int> upp = uppath(phi, z);
        c(markings(*cov, kappa) == std::set<int>(upp.begin(), upp.end()));
        for (int m : markings(*cov, kappa)) {
          std::vector<int> path = downpath(phi, m);
          auto it = std::find(path.begin(), path.end(), z);
          if (it == path.end()) {
            c(false);
            continue;
          }
          c(spin({*cov, kappa, m}) ==
            r.bounce + static_cast<int>(it - path.begin()));
        }
      }
    }
  }
}

void suite_kschur(Check& c, const Options& opt) {
  int kmax = std::min(opt.k_max, 3);
  int smax = opt.size_max;
  // dual Pieri rules
  for (int k = 1; k <= kmax; ++k)
    for (const auto& mu : partitions_box(k, 3, smax)) {
      SymFunc f = kschur(mu, k);
      for (int d = 0; d <= 3; ++d) {
        c(e_perp(d, f) == vertical_pieri(mu, k, d).evaluate());
        c(h_perp(d, f) == horizontal_pieri(mu, k, d).evaluate());
      }
      // shift invariance and branching
      int ell = static_cast<int>(mu.size());
      c(e_perp(ell, kschur(plus_one(mu), k + 1)) == f);
      KExpansion b = branch(mu, k);
      bool pos = true;
      for (const auto& [nu, cc] : b.terms()) pos = pos && cc.nonneg();
      c(pos);
      c(b.evaluate() == f);
      // the positive tableau expansion
      SymFunc se = schur_expand(mu, k);
      c(se.schur_positive());
      c(se == f);
      // weight polynomials, over every arrangement of every full weight
      for (const auto& lam : partitions_of(sum_of(mu))) {
        TPoly w = smt_weight_poly(mu, k, lam);
        c(hall_pair_h(f, lam) == w);
        Ints eta = lam;
        std::sort(eta.begin(), eta.end());
        do {
          c(smt_weight_poly(mu, k, eta) == w);
        } while (std::next_permutation(eta.begin(), eta.end()));
      }
    }
  // stability
  for (const auto& mu : partitions_box(4, 4, std::min(smax, 6)))
    c(kschur(mu, std::max(sum_of(mu), 1)) == SymFunc::schur(mu));
  // straightening: lowering any row evaluates to the straightened result
  for (int k = 1; k <= opt.k_max; ++k)
    for (const auto& lam : partitions_box(k, 4, std::min(smax, 8))) {
      Ints pad = padded(lam, std::min(4, static_cast<int>(lam.size()) + 1));
      for (int z = 1; z <= static_cast<int>(pad.size()); ++z) {
        Ints mu = pad;
        mu[z - 1] -= 1;
        c(catalan_chl({delta_k(KWeight(mu, k)), mu}) ==
          straighten(pad, z, k).evaluate());
      }
    }
  // partial restriction against subset lowering
  for (int k = 1; k <= kmax; ++k)
    for (const auto& mu : partitions_box(k, 4, std::min(smax, 5))) {
      if (mu.empty()) continue;
      int ell = static_cast<int>(mu.size());
      IndexedRootIdeal iri{delta_k(KWeight(mu, k)), mu};
      for (int d = 0; d <= 2; ++d) {
        for (int m = 1; m <= ell; ++m) {
          std::set<int> rows;
          for (int i = 1; i <= m; ++i) rows.insert(i);
          c(partial_restriction(mu, k, d, m).evaluate() ==
            subset_lower(d, rows, iri));
        }
        c(partial_restriction(mu, k, d, ell) == vertical_pieri(mu, k, d));
      }
    }
  // strong cover operators: both Pieri sums and the alternating identity
  const int ell = 3;
  auto u_apply = [](const KExpansion& f, int r) {
    KExpansion out(f.k());
    for (const auto& [nu, cc] : f.terms())
      for (const auto& t : enumerate_tableaux(nu, f.k(), {1}, false))
        if (t.chain.front().mark == r)
          out.add_term(t.inside_bounded(), cc * tp(t.spin_total()));
    return out;
  };
  auto tuples = [&](int d, bool strict) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int lo) {
      if (static_cast<int>(pick.size()) == d) {
        out.push_back(pick);
        return;
      }
      for (int i = lo; i <= ell; ++i) {
        pick.push_back(i);
        rec(strict ? i + 1 : i);
        pick.pop_back();
      }
    };
    rec(1);
    if (strict)
      for (auto& v : out) std::reverse(v.begin(), v.end());
    return out;
  };
  auto apply_seq = [&](KExpansion f, const std::vector<int>& idx) {
    for (int r : idx) f = u_apply(f, r);
    return f;
  };
  for (int k = 1; k <= kmax; ++k)
    for (const auto& mu : partitions_box(k, ell, 3 * k)) {
      KExpansion base(k);
      base.add_term(mu, tp(0));
      for (int m = 1; m <= 3; ++m) {
        KExpansion total(k);
        for (int i = 0; i <= m; ++i) {
          KExpansion part(k);
          for (const auto& hidx : tuples(m - i, false))
            for (const auto& eidx : tuples(i, true))
              part += apply_seq(apply_seq(base, hidx), eidx);
          if (i % 2 == 0)
            total += part;
          else
            total -= part;
        }
        c(total.terms().empty());
      }
      for (int d = 0; d <= 3; ++d) {
        KExpansion et(k);
        for (const auto& idx : tuples(d, true)) et += apply_seq(base, idx);
        c(et == vertical_pieri(mu, k, d));
      }
    }
}

void suite_chen(Check& c, const Options& opt) {
  int k = std::min(opt.k_max + 1, 4);
  for (const auto& lam : partitions_box(k, 5, k * 5)) {
    if (lam.empty()) continue;
    SkewShape sk = k_skew(lam, k);
    c(skew_linking_check(sk));
    c(catalan_chl({chen_ideal(sk), lam}) == kschur(lam, k));
  }
}

void suite_basis(Check& c, const Options& opt) {
  for (int k = 2; k <= std::min(opt.k_max, 3); ++k)
    for (const auto& mu : partitions_box(k, 3, 3 * k)) {
      auto got = hl_expand(kschur(mu, k), k, 3);
      c(got.count(mu) == 1 && got.at(mu) == TPoly(1));
      bool dom = true;
      for (const auto& [lam, cc] : got) {
        size_t len = std::max(lam.size(), mu.size());
        dom = dom && dominance_leq(padded(mu, static_cast<int>(len)),
                                   padded(lam, static_cast<int>(len)));
      }
      c(dom);
    }
}

void suite_routes(Check& c, const Options& opt) {
  for (int k = 1; k <= opt.k_max; ++k)
    for (const auto& mu : partitions_box(k, 4, std::min(opt.size_max, 6))) {
      SymFunc via_tab = schur_expand(mu, k);
      SymFunc via_cat = kschur(mu, k);
      c(render_text(via_tab) == render_text(via_cat));
      c(render_json(via_tab) == render_json(via_cat));
      // emitted JSON parses and re-emits unchanged
      std::string j = render_json(via_cat);
      c(nlohmann::json::parse(j).dump() == j);
    }
}

const std::vector<std::pair<std::string,
                            void (*)(Check&, const Options&)>>& registry() {
  static const std::vector<std::pair<std::string,
                                     void (*)(Check&, const Options&)>> r = {
      {"symfunc", suite_symfunc},   {"vertexops", suite_vertexops},
      {"catalan", suite_catalan},   {"mirror", suite_mirror},
      {"cores", suite_cores},       {"kschur", suite_kschur},
      {"chen", suite_chen},         {"basis", suite_basis},
      {"routes", suite_routes},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const Options& opt) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      Check c;
      fn(c, opt);
      return {name, c.cases, c.fails};
    }
  throw std::invalid_argument("verify: unknown suite " + name);
}

std::vector<SuiteResult> run_all(const Options& opt) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) out.push_back(run_suite(name, opt));
  return out;
}

}  // namespace cf::verify
