#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.h"
#include "rootcat.h"
#include "vertexops.h"

using cf::IndexedRootIdeal;
using cf::Ints;
using cf::Root;
using cf::RootIdeal;
using cf::SymFunc;
using cf::TPoly;

static TPoly P(std::vector<int> c) {
  TPoly out;
  for (size_t d = 0; d < c.size(); ++d) out += TPoly::t_power((int)d, c[d]);
  return out;
}

static std::set<Root> as_set(const std::vector<Root>& v) {
  return std::set<Root>(v.begin(), v.end());
}

static RootIdeal from_oracle(const oracle::RootSet& s, int ell) {
  return RootIdeal::from_roots(ell, s);
}

TEST_CASE("row counts describe an upper order ideal") {
  RootIdeal psi(5, {3, 2, 2, 0, 0});
  CHECK(psi.ell() == 5);
  CHECK(psi.size() == 7);
  CHECK(psi.roots() == std::set<Root>{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  CHECK(psi.contains(1, 3));
  CHECK(psi.contains(3, 5));
  CHECK(!psi.contains(2, 3));
  CHECK(!psi.contains(4, 5));
  CHECK(!psi.contains(3, 3));
  CHECK(psi.col_count(3) == 1);
  CHECK(psi.col_count(4) == 3);
  CHECK(psi.col_count(5) == 3);
  CHECK(psi.col_count(1) == 0);

  CHECK(RootIdeal::empty(4).size() == 0);
  CHECK(RootIdeal::full(4).size() == 6);
  CHECK(RootIdeal::full(4).rowcounts() == Ints{3, 2, 1, 0});

  CHECK_THROWS_AS(RootIdeal(5, {2, 3, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RootIdeal(3, {3, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RootIdeal(3, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RootIdeal(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(RootIdeal::from_roots(3, {{1, 2}}), std::invalid_argument);

  for (int ell = 1; ell <= 4; ++ell)
    for (auto& s : oracle::all_ideals(ell)) CHECK(from_oracle(s, ell).roots() == s);
}

TEST_CASE("removable and addable roots match brute force") {
  for (int ell = 1; ell <= 5; ++ell) {
    for (auto& s : oracle::all_ideals(ell)) {
      RootIdeal psi = from_oracle(s, ell);
      CHECK(as_set(cf::removable_roots(psi)) == oracle::removable_brute(s, ell));
      CHECK(as_set(cf::addable_roots(psi)) == oracle::addable_brute(s, ell));
    }
  }

  CHECK(as_set(cf::removable_roots(RootIdeal(5, {3, 2, 2, 0, 0}))) ==
        std::set<Root>{{1, 3}, {3, 4}});
  CHECK(cf::removable_roots(RootIdeal::empty(4)).empty());
  CHECK(as_set(cf::removable_roots(RootIdeal::full(3))) == std::set<Root>{{1, 2}, {2, 3}});
  CHECK(cf::addable_roots(RootIdeal::full(5)).empty());
  CHECK(as_set(cf::addable_roots(RootIdeal::empty(3))) == std::set<Root>{{1, 3}});
  CHECK(as_set(cf::addable_roots(RootIdeal(3, {1, 0, 0}))) == std::set<Root>{{1, 2}, {2, 3}});

  RootIdeal one(3, {1, 0, 0});
  CHECK(one.with_root({2, 3}).rowcounts() == Ints{1, 1, 0});
  CHECK(one.without_root({1, 3}).rowcounts() == Ints{0, 0, 0});
  CHECK_THROWS_AS(one.with_root({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(one.without_root({2, 3}), std::invalid_argument);
}

TEST_CASE("bounce paths and queries") {
  RootIdeal psi(10, {9, 6, 5, 4, 3, 1, 1, 1, 0, 0});

  auto q = cf::bounce_query(psi, 2, 8);
  REQUIRE(q.has_value());
  CHECK(q->path == std::vector<int>{2, 5, 8});
  CHECK(q->bounce == 2);
  CHECK(cf::bounce_query(psi, 1, 10)->bounce == 4);
  CHECK(cf::bounce_query(psi, 1, 10)->path == std::vector<int>{1, 2, 5, 8, 10});
  CHECK(cf::bounce_query(psi, 3, 6)->bounce == 1);
  CHECK(cf::bounce_query(psi, 3, 3)->path == std::vector<int>{3});
  CHECK(cf::bounce_query(psi, 3, 3)->bounce == 0);
  CHECK(!cf::bounce_query(psi, 1, 3).has_value());
  CHECK(!cf::bounce_query(psi, 2, 7).has_value());
  CHECK_THROWS_AS(cf::bounce_query(psi, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(cf::bounce_query(psi, 0, 2), std::invalid_argument);

  CHECK(cf::down(psi, 1) == 2);
  CHECK(cf::down(psi, 2) == 5);
  CHECK(!cf::down(psi, 6).has_value());
  CHECK(cf::up(psi, 10) == 8);
  CHECK(cf::up(psi, 7) == 4);
  CHECK(!cf::up(psi, 9).has_value());
  CHECK(cf::downpath(psi, 3) == std::vector<int>{3, 6});
  CHECK(cf::downpath(psi, 9) == std::vector<int>{9});
  CHECK(cf::uppath(psi, 10) == std::vector<int>{10, 8, 5, 2, 1});
  CHECK(cf::chaindown(psi, 1) == 10);
  CHECK(cf::chainup(psi, 10) == 1);
  CHECK(cf::chainup(psi, 6) == 3);

  // the down steps partition every row set into disjoint paths
  for (int ell = 1; ell <= 5; ++ell) {
    for (auto& s : oracle::all_ideals(ell)) {
      RootIdeal p = from_oracle(s, ell);
      std::vector<int> seen(ell + 1, 0);
      for (int r = 1; r <= ell; ++r) {
        if (cf::up(p, r)) continue;  // not a path head
        for (int x : cf::downpath(p, r)) seen[x]++;
      }
      for (int r = 1; r <= ell; ++r) CHECK(seen[r] == 1);
    }
  }
}

TEST_CASE("walls ceilings and mirrors") {
  RootIdeal psi(10, {9, 6, 5, 4, 3, 1, 1, 1, 0, 0});
  std::set<int> walls{6, 7, 9}, ceilings{2, 3, 8}, mirrors{2, 3, 4};
  for (int idx = 1; idx <= 9; ++idx) {
    auto f = cf::structure_predicates(psi, idx);
    CHECK(f.wall == (walls.count(idx) == 1));
    CHECK(f.ceiling == (ceilings.count(idx) == 1));
    CHECK(f.mirror == (mirrors.count(idx) == 1));
  }

  RootIdeal none = RootIdeal::empty(4);
  for (int idx = 1; idx <= 3; ++idx) {
    auto f = cf::structure_predicates(none, idx);
    CHECK(f.wall);
    CHECK(f.ceiling);
    CHECK(!f.mirror);
  }

  RootIdeal full = RootIdeal::full(4);
  for (int idx = 1; idx <= 3; ++idx) {
    auto f = cf::structure_predicates(full, idx);
    CHECK(!f.wall);
    CHECK(!f.ceiling);
    CHECK(!f.mirror);
  }

  CHECK_THROWS_AS(cf::structure_predicates(psi, 0), std::invalid_argument);
  CHECK_THROWS_AS(cf::structure_predicates(psi, 10), std::invalid_argument);
}

TEST_CASE("chl expansion of catalan functions") {
  RootIdeal psi = RootIdeal::from_roots(4, {{1, 3}, {1, 4}, {2, 4}});
  CHECK(psi.rowcounts() == Ints{2, 1, 0, 0});
  SymFunc got = cf::catalan_chl({psi, {3, 3, 2, 1}});
  SymFunc want;
  want.add_term({3, 3, 2, 1}, P({1}));
  want.add_term({4, 3, 2}, P({0, 1}));
  want.add_term({4, 3, 1, 1}, P({0, 1}));
  want.add_term({4, 4, 1}, P({0, 0, 1}));
  want.add_term({5, 3, 1}, P({0, 0, 1}));
  want.add_term({5, 4}, P({0, 0, 0, 1}));
  CHECK(got == want);

  // the full ideal gives the modified Hall-Littlewood polynomial
  CHECK(cf::catalan_chl({RootIdeal::full(4), {3, 3, 2, 1}}) == cf::chl({3, 3, 2, 1}));
  CHECK(cf::catalan_chl({RootIdeal::full(2), {2, 1}}) == cf::chl({2, 1}));

  // the empty ideal gives a single straightened Schur function
  CHECK(cf::catalan_chl({RootIdeal::empty(3), {3, 1, 2}}).is_zero());
  SymFunc sgn = cf::catalan_chl({RootIdeal::empty(2), {0, 2}});
  SymFunc mwant;
  mwant.add_term({1, 1}, P({-1}));
  CHECK(sgn == mwant);
  CHECK(cf::catalan_chl({RootIdeal::empty(3), {2, 1, 0}}) == SymFunc::schur({2, 1}));
}

TEST_CASE("series evaluator agrees with the chl expansion") {
  RootIdeal psi = RootIdeal::from_roots(4, {{1, 3}, {1, 4}, {2, 4}});
  IndexedRootIdeal iri{psi, {3, 3, 2, 1}};
  CHECK(cf::catalan_series(iri) == cf::catalan_chl(iri));

  SymFunc two = cf::catalan_series({RootIdeal(2, {1, 0}), {1, 1}});
  SymFunc want;
  want.add_term({1, 1}, P({1}));
  want.add_term({2}, P({0, 1}));
  CHECK(two == want);

  for (int ell = 1; ell <= 4; ++ell) {
    std::vector<RootIdeal> ideals;
    for (auto& s : oracle::all_ideals(ell)) ideals.push_back(from_oracle(s, ell));
    Ints g(ell, -1);
    while (true) {
      for (auto& p : ideals) {
        IndexedRootIdeal x{p, g};
        SymFunc a = cf::catalan_chl(x);
        SymFunc b = cf::catalan_series(x);
        CHECK(a == b);
        if (!a.is_zero()) CHECK(a.homogeneous_degree() == cf::sum_of(g));
      }
      int i = 0;
      while (i < ell && g[i] == 3) g[i++] = -1;
      if (i == ell) break;
      g[i]++;
    }
  }
}

TEST_CASE("t equals one evaluator") {
  RootIdeal psi = RootIdeal::from_roots(4, {{1, 3}, {1, 4}, {2, 4}});
  SymFunc got = cf::catalan_t1({psi, {3, 3, 2, 1}});
  SymFunc want;
  for (Ints lam : {Ints{3, 3, 2, 1}, Ints{4, 3, 2}, Ints{4, 3, 1, 1}, Ints{4, 4, 1},
                   Ints{5, 3, 1}, Ints{5, 4}})
    want.add_term(lam, P({1}));
  CHECK(got == want);

  // same thing as a signed sum of h-products
  auto hprod = [](const Ints& v) {
    SymFunc f = SymFunc::one();
    for (int d : v) f = cf::mult_h(d, f);
    return f;
  };
  SymFunc hside = hprod({3, 3, 2, 1}) - hprod({3, 3, 3}) - hprod({4, 2, 2, 1}) + hprod({4, 2, 3});
  CHECK(got == hside);

  CHECK(cf::catalan_t1({RootIdeal::empty(3), {2, 2, 1}}) == SymFunc::schur({2, 2, 1}));

  for (int ell = 1; ell <= 3; ++ell) {
    std::vector<RootIdeal> ideals;
    for (auto& s : oracle::all_ideals(ell)) ideals.push_back(from_oracle(s, ell));
    Ints g(ell, -1);
    while (true) {
      for (auto& p : ideals) {
        IndexedRootIdeal x{p, g};
        CHECK(cf::catalan_t1(x) == cf::catalan_chl(x).at_one());
      }
      int i = 0;
      while (i < ell && g[i] == 2) g[i++] = -1;
      if (i == ell) break;
      g[i]++;
    }
  }
}

TEST_CASE("single root recurrences") {
  auto eval_terms = [](const std::pair<cf::RecurrenceTerm, cf::RecurrenceTerm>& pr) {
    return cf::catalan_chl(pr.first.iri) * pr.first.mult +
           cf::catalan_chl(pr.second.iri) * pr.second.mult;
  };

  for (auto& s : oracle::all_ideals(3)) {
    RootIdeal psi = from_oracle(s, 3);
    Ints g(3, 0);
    while (true) {
      IndexedRootIdeal x{psi, g};
      SymFunc lhs = cf::catalan_chl(x);
      for (Root b : cf::addable_roots(psi))
        CHECK(lhs == eval_terms(cf::expand_recurrence(x, b, cf::RootMode::addable)));
      for (Root a : cf::removable_roots(psi))
        CHECK(lhs == eval_terms(cf::expand_recurrence(x, a, cf::RootMode::removable)));
      int i = 0;
      while (i < 3 && g[i] == 2) g[i++] = 0;
      if (i == 3) break;
      g[i]++;
    }
  }

  IndexedRootIdeal x{RootIdeal(3, {1, 0, 0}), {2, 1, 0}};
  auto pr = cf::expand_recurrence(x, {1, 3}, cf::RootMode::removable);
  CHECK(pr.first.iri.psi == RootIdeal::empty(3));
  CHECK(pr.first.iri.gamma == Ints{2, 1, 0});
  CHECK(pr.first.mult == TPoly(1));
  CHECK(pr.second.iri.psi == RootIdeal(3, {1, 0, 0}));
  CHECK(pr.second.iri.gamma == Ints{3, 1, -1});
  CHECK(pr.second.mult == TPoly::t_power(1));

  CHECK_THROWS_AS(cf::expand_recurrence(x, {1, 2}, cf::RootMode::removable),
                  std::invalid_argument);
  CHECK_THROWS_AS(cf::expand_recurrence(x, {1, 3}, cf::RootMode::addable),
                  std::invalid_argument);
}

TEST_CASE("downpath expansion") {
  IndexedRootIdeal flat{RootIdeal::empty(3), {2, 1, 1}};
  auto terms = cf::downpath_expand(flat, 2);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].iri.psi == RootIdeal::empty(3));
  CHECK(terms[0].iri.gamma == Ints{2, 1, 1});
  CHECK(terms[0].mult == TPoly(1));

  std::vector<Ints> box;  // partitions with parts at most 2, length at most 4
  Ints mu(4, 0);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = 0; d <= c; ++d) box.push_back({a, b, c, d});
  for (auto& s : oracle::all_ideals(4)) {
    if (s.size() > 4) continue;
    RootIdeal psi = from_oracle(s, 4);
    for (auto& m : box) {
      IndexedRootIdeal x{psi, m};
      SymFunc lhs = cf::catalan_chl(x);
      for (int row = 1; row <= 4; ++row) {
        SymFunc rhs;
        for (auto& term : cf::downpath_expand(x, row))
          rhs += cf::catalan_chl(term.iri) * term.mult;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("subset lowering operator") {
  IndexedRootIdeal iri{RootIdeal(3, {2, 0, 0}), {3, 1, 2}};
  CHECK(cf::subset_lower(1, {2, 3}, iri).is_zero());

  SymFunc want;
  want.add_term({3, 1, 1}, P({-1}));
  want.add_term({4, 1}, P({0, -1}));
  CHECK(cf::subset_lower(1, {1, 2}, iri) == want);

  CHECK(cf::subset_lower(0, {1, 2, 3}, iri) == cf::catalan_chl(iri));
  CHECK(cf::subset_lower(4, {1, 2, 3}, iri).is_zero());

  // lowering over every row computes the adjoint of multiplication by e_d
  for (auto& s : oracle::all_ideals(3)) {
    RootIdeal psi = from_oracle(s, 3);
    Ints g(3, 0);
    while (true) {
      IndexedRootIdeal x{psi, g};
      SymFunc f = cf::catalan_chl(x);
      for (int d = 0; d <= 3; ++d)
        CHECK(cf::e_perp(d, f) == cf::subset_lower(d, {1, 2, 3}, x));
      int i = 0;
      while (i < 3 && g[i] == 2) g[i++] = 0;
      if (i == 3) break;
      g[i]++;
    }
  }
}

TEST_CASE("swap symmetric ideals cancel") {
  for (int ell = 2; ell <= 4; ++ell) {
    std::vector<RootIdeal> ideals;
    for (auto& s : oracle::all_ideals(ell)) ideals.push_back(from_oracle(s, ell));
    Ints g(ell, -1);
    while (true) {
      for (auto& p : ideals) {
        for (int i = 1; i < ell; ++i) {
          auto f = cf::structure_predicates(p, i);
          if (!(f.wall && f.ceiling)) continue;  // need the swap to fix the ideal
          Ints h = g;
          std::swap(h[i - 1], h[i]);
          h[i]++;
          h[i - 1]--;
          CHECK((cf::catalan_chl({p, g}) + cf::catalan_chl({p, h})).is_zero());
        }
      }
      int i = 0;
      while (i < ell && g[i] == 2) g[i++] = -1;
      if (i == ell) break;
      g[i]++;
    }
  }
}

TEST_CASE("mirror lemma verdicts") {
  // ceiling + wall + off by one entry forces the function to vanish
  IndexedRootIdeal tog{RootIdeal(5, {4, 1, 1, 0, 0}), {3, 1, 2, 1, 1}};
  CHECK(cf::mirror_predicates(tog, 2, 2, 2) == cf::MirrorVerdict::MirrorI_zero);
  CHECK(cf::catalan_chl(tog).is_zero());

  IndexedRootIdeal small{RootIdeal(3, {2, 0, 0}), {3, 1, 2}};
  CHECK(cf::mirror_predicates(small, 2, 2, 2) == cf::MirrorVerdict::MirrorI_zero);
  CHECK(cf::mirror_predicates(small, 2, 2, 2, std::set<int>{2, 3}) ==
        cf::MirrorVerdict::MirrorI_zero);
  CHECK(cf::mirror_predicates(small, 2, 2, 2, std::set<int>{1, 2}) ==
        cf::MirrorVerdict::NotApplicable);

  // removable roots at the ends of the path leave the function unchanged
  RootIdeal big(6, {5, 3, 2, 1, 1, 0});
  Ints mu{3, 2, 2, 1, 1, 1};
  IndexedRootIdeal mid{big, mu};
  CHECK(cf::mirror_predicates(mid, 2, 2, 4) == cf::MirrorVerdict::MirrorII_removable_equal);
  SymFunc base = cf::catalan_chl(mid);
  CHECK(base == cf::catalan_chl({big.without_root({1, 2}), mu}));
  CHECK(base == cf::catalan_chl({big.without_root({5, 6}), mu}));

  CHECK(cf::mirror_predicates({big.without_root({5, 6}), mu}, 2, 2, 4) ==
        cf::MirrorVerdict::NotApplicable);  // wall is gone
  CHECK(cf::mirror_predicates(mid, 2, 2, 4, std::set<int>{2, 3}) ==
        cf::MirrorVerdict::MirrorII_removable_equal);
  CHECK(cf::mirror_predicates(mid, 2, 2, 4, std::set<int>{2, 3, 4, 5}) ==
        cf::MirrorVerdict::MirrorII_removable_equal);
  CHECK(cf::mirror_predicates(mid, 2, 2, 4, std::set<int>{2, 4}) ==
        cf::MirrorVerdict::NotApplicable);

  // the lowering variants commute with both conclusions
  for (int d = 1; d <= 2; ++d) {
    for (std::set<int> v : {std::set<int>{2, 3}, std::set<int>{2, 3, 4, 5}, std::set<int>{1, 6}}) {
      SymFunc a = cf::subset_lower(d, v, mid);
      CHECK(a == cf::subset_lower(d, v, {big.without_root({1, 2}), mu}));
      CHECK(a == cf::subset_lower(d, v, {big.without_root({5, 6}), mu}));
    }
  }
  CHECK(cf::subset_lower(1, {2, 3}, small).is_zero());
  CHECK(cf::subset_lower(2, {2, 3}, small).is_zero());
}

TEST_CASE("deleting a trailing zero column") {
  for (int ell = 2; ell <= 4; ++ell) {
    std::vector<RootIdeal> ideals;
    for (auto& s : oracle::all_ideals(ell)) ideals.push_back(from_oracle(s, ell));
    Ints g(ell, 0);
    Ints lo(ell, -1);
    lo[ell - 1] = 0;  // last entry pinned to zero
    g = lo;
    while (true) {
      for (auto& p : ideals) {
        Ints hat(ell - 1);
        for (int i = 0; i < ell - 1; ++i) hat[i] = std::max(p.rowcounts()[i] - 1, 0);
        Ints ghat(g.begin(), g.end() - 1);
        CHECK(cf::catalan_chl({p, g}) == cf::catalan_chl({RootIdeal(ell - 1, hat), ghat}));
      }
      int i = 0;
      while (i < ell - 1 && g[i] == 2) g[i++] = -1;
      if (i == ell - 1) break;
      g[i]++;
    }
  }
}
