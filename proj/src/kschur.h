#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cores.h"
#include "rootcat.h"

namespace cf {

// index weight for a graded k-Schur function: entries at most k with
// mu_i - i weakly decreasing, so partitions bounded by k and also many
// nonpartitions (as produced by straightening inputs)
struct KWeight {
  Ints mu;
  int k;

  KWeight(Ints m, int kk);  // validates
  int ell() const { return static_cast<int>(mu.size()); }
};

// finite linear combination of k-Schur functions for one fixed k;
// keys are partitions with trailing zeros stripped
class KExpansion {
public:
  explicit KExpansion(int k) : k_(k) {}

  int k() const { return k_; }
  const std::map<Ints, TPoly>& terms() const { return t_; }
  TPoly coeff(const Ints& mu) const;
  void add_term(const Ints& mu, const TPoly& c);

  KExpansion& operator+=(const KExpansion& o);  // k must agree
  KExpansion& operator-=(const KExpansion& o);
  KExpansion operator*(const TPoly& c) const;
  bool operator==(const KExpansion& o) const {
    return k_ == o.k_ && t_ == o.t_;
  }

  SymFunc evaluate() const;  // sum of coeff * kschur(key, k)

private:
  int k_;
  std::map<Ints, TPoly> t_;
};

// root ideal with row i occupying the columns right of k - mu_i + i
RootIdeal delta_k(const KWeight& kw);

// the graded k-Schur function as a Catalan function
SymFunc kschur(const KWeight& kw);
SymFunc kschur(const Ints& mu, int k);

struct CvrResult {
  Ints weight;     // length ell(lambda)
  bool partition;  // whether weight is a partition
  int bounce;      // h * c
  int c;           // rows on the uppath of z
  int h;           // rows moved besides z
};

// straightening target for s^(k) indexed by lambda - eps_z
CvrResult cvr(const Ints& lambda, int z, int k);

// intervals [x, x+h_x] over the uppath of z; a row set V compatible with
// every one of them (containing it fully or not at all) keeps the
// straightening rule valid under the V-restricted lowering operators
std::vector<std::pair<int, int>> straightening_intervals(const Ints& lambda,
                                                         int z, int k);

// s^(k) indexed by lambda - eps_z rewritten on the k-Schur basis:
// empty when it vanishes, else a single term t^bounce at cvr
KExpansion straighten(const Ints& lambda, int z, int k);

// expansion of e_d-perp (resp. h_d-perp) applied to kschur(mu, k),
// summing t^spin over vertical (resp. horizontal) tableaux of weight (d)
KExpansion vertical_pieri(const Ints& mu, int k, int d);
KExpansion horizontal_pieri(const Ints& mu, int k, int d);

// restriction of the vertical rule to tableaux marked within rows [m],
// and its difference form picking out largest mark exactly m
KExpansion partial_restriction(const Ints& mu, int k, int d, int m);
KExpansion l_restriction(const Ints& mu, int k, int d, int m);

// expansion of kschur(mu, k) on the (k+1)-Schur basis
KExpansion branch(const Ints& mu, int k);

// Schur expansion of kschur(mu, k) as a manifestly positive tableau sum
SymFunc schur_expand(const Ints& mu, int k);

// sum of t^spin over horizontal tableaux of weight eta
TPoly smt_weight_poly(const Ints& mu, int k, const Ints& eta);

// row lengths and column lengths of a skew diagram are both partitions
bool skew_linking_check(const SkewShape& ke);

// root ideal of a skew-linking diagram, removable roots at
// (i, mu_{eta_i} + i) for rows i of the inner shape
RootIdeal chen_ideal(const SkewShape& ke);

// coefficients of f on the basis of compositional Hall-Littlewood
// polynomials indexed by partitions with parts <= k and length <= ell;
// throws when f lies outside their span
std::map<Ints, TPoly> hl_expand(const SymFunc& f, int k, int ell);

}  // namespace cf
