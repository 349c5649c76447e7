#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "symfunc.h"

namespace cf {

using Root = std::pair<int, int>;  // (row, col), 1-based, row < col

// upper order ideal of the positive roots {(i,j) : 1 <= i < j <= ell},
// ordered by (a,b) <= (c,d) iff a >= c and b <= d; stored as the number
// of roots in each row, so row i occupies columns ell+1-n_i .. ell
class RootIdeal {
public:
  RootIdeal(int ell, Ints rowcounts);
  static RootIdeal empty(int ell);
  static RootIdeal full(int ell);
  static RootIdeal from_roots(int ell, const std::set<Root>& roots);

  int ell() const { return ell_; }
  const Ints& rowcounts() const { return n_; }
  int row_count(int i) const;  // roots in row i
  int col_count(int j) const;  // roots in column j
  bool contains(int i, int j) const;
  std::set<Root> roots() const;
  int size() const;

  RootIdeal with_root(Root r) const;     // must be addable
  RootIdeal without_root(Root r) const;  // must be removable

  bool operator==(const RootIdeal& o) const {
    return ell_ == o.ell_ && n_ == o.n_;
  }
  bool operator<(const RootIdeal& o) const {
    return ell_ != o.ell_ ? ell_ < o.ell_ : n_ < o.n_;
  }

private:
  int ell_;
  Ints n_;
};

// roots whose removal (resp. addition) leaves an upper order ideal
std::vector<Root> removable_roots(const RootIdeal& psi);
std::vector<Root> addable_roots(const RootIdeal& psi);

// bounce graph: x -> j when (x,j) is removable, i -> x when (i,x) is
std::optional<int> down(const RootIdeal& psi, int x);
std::optional<int> up(const RootIdeal& psi, int x);
std::vector<int> downpath(const RootIdeal& psi, int r);  // r, down(r), ...
std::vector<int> uppath(const RootIdeal& psi, int r);    // r, up(r), ...
int chaindown(const RootIdeal& psi, int r);
int chainup(const RootIdeal& psi, int r);

struct BounceResult {
  std::vector<int> path;
  int bounce;  // path length minus one
};

// walk down from a; absent when b is not reached
std::optional<BounceResult> bounce_query(const RootIdeal& psi, int a, int b);

struct StructureFlags {
  bool wall;     // rows idx, idx+1 have equal length
  bool ceiling;  // columns idx, idx+1 have equal length
  bool mirror;   // removable roots (idx,c), (idx+1,c+1) for some c > idx+1
};
StructureFlags structure_predicates(const RootIdeal& psi, int idx);

struct IndexedRootIdeal {
  RootIdeal psi;
  Ints gamma;  // arbitrary integer weight of length psi.ell()
  IndexedRootIdeal(RootIdeal p, Ints g);
};

// expansion of prod over the complement of psi of (1 - t R_{ij}) into
// 2^|complement| signed terms, each a compositional Hall-Littlewood
SymFunc catalan_chl(const IndexedRootIdeal& iri);

// the defining series: sum over multiplicity vectors on psi of
// t^|n| s_{gamma + sum n(a) eps(a)}, straightened term by term
SymFunc catalan_series(const IndexedRootIdeal& iri);

// specialization t = 1 as a signed sum of h-products
SymFunc catalan_t1(const IndexedRootIdeal& iri);

struct RecurrenceTerm {
  IndexedRootIdeal iri;
  TPoly mult;
};

enum class RootMode { addable, removable };

// one-root expansion: the sum of mult * catalan(term) over the returned
// pair reproduces catalan(iri)
std::pair<RecurrenceTerm, RecurrenceTerm> expand_recurrence(
    const IndexedRootIdeal& iri, Root root, RootMode mode);

// iterated expansion along the downpath of row m
std::vector<RecurrenceTerm> downpath_expand(const IndexedRootIdeal& iri, int m);

// sum of catalan_chl(psi; gamma - eps_S) over d-subsets S of V
SymFunc subset_lower(int d, const std::set<int>& V, const IndexedRootIdeal& iri);

enum class MirrorVerdict { MirrorI_zero, MirrorII_removable_equal, NotApplicable };

// checks the hypotheses of the vanishing lemma (with pivot z) and of the
// removable-root equality lemma on rows y..w of one bounce path; when V is
// given, additionally requires V to contain both or neither of x, x+1 for
// every x on the path
MirrorVerdict mirror_predicates(const IndexedRootIdeal& iri, int y, int z, int w,
                                const std::optional<std::set<int>>& V = std::nullopt);

}  // namespace cf
