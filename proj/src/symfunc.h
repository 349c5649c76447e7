#pragma once

#include <map>
#include <optional>

#include "partition.h"
#include "tpoly.h"

namespace cf {

// finite linear combination of Schur functions, coefficients in Z[t];
// keys are partitions with trailing zeros stripped
class SymFunc {
public:
  SymFunc() = default;
  static SymFunc zero() { return {}; }
  static SymFunc one();
  static SymFunc schur(const Ints& lambda);
  static SymFunc from_weight(const Ints& gamma);  // straightened s_gamma

  bool is_zero() const { return t_.empty(); }
  const std::map<Ints, TPoly>& terms() const { return t_; }
  TPoly coeff(const Ints& lambda) const;
  void add_term(const Ints& lambda, const TPoly& c);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const TPoly& c) const;
  bool operator==(const SymFunc& o) const { return t_ == o.t_; }

  SymFunc at_one() const;       // specialize t = 1
  bool schur_positive() const;  // every coefficient in N[t]
  std::optional<int> homogeneous_degree() const;  // absent if degrees mix; zero -> 0
  std::map<int, SymFunc> split_by_degree() const;

private:
  std::map<Ints, TPoly> t_;
};

SymFunc mult_h(int d, const SymFunc& f);  // multiply by h_d (h_d = 0 for d < 0)
SymFunc mult_e(int d, const SymFunc& f);
SymFunc e_perp(int d, const SymFunc& f);
SymFunc h_perp(int d, const SymFunc& f);
TPoly hall_pair_h(const SymFunc& f, const Ints& lambda);  // <f, h_lambda>
SymFunc omega(const SymFunc& f);

}  // namespace cf
