#pragma once

#include "partition.h"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cf {

// Partition with no box of hook length exactly n.
class Core {
 public:
  Core(Ints shape, int n);

  const Ints& shape() const { return shape_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(shape_.size()); }
  int row(int r) const;  // 1-based row length, 0 past the end

  bool operator==(const Core& o) const {
    return n_ == o.n_ && shape_ == o.shape_;
  }
  bool operator!=(const Core& o) const { return !(*this == o); }
  bool operator<(const Core& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return shape_ < o.shape_;
  }

 private:
  Ints shape_;  // no trailing zeros
  int n_;
};

// Row r of the result counts the boxes of row r of kappa with hook <= n-1.
Ints to_bounded(const Core& kappa);

// Inverse of to_bounded: the unique n-core (n = k+1) whose bounded
// partition is lambda.  Requires lambda_1 <= k.
Core to_core(const Ints& lambda, int k);

struct SkewShape {
  Ints outer;
  Ints inner;
};

// Boxes of core(lambda) with hook <= k, as the skew shape outer/inner.
// Row lengths of the result equal lambda.
SkewShape k_skew(const Ints& lambda, int k);

// f(z) = kappa_z - z + 1, defined for every z >= 1.
int row_map(const Core& kappa, int z);

// Offset d_i of the boundary word of kappa on the diagonal class i + nZ;
// satisfies d_{i-n} = d_i + 1.
int offset_at(const Core& kappa, int i);

struct OffsetView {
  Core core;
  int lo, hi;            // inclusive window of diagonals
  std::map<int, int> d;  // offsets on the window
};

OffsetView offsets(const Core& kappa);

// Swaps boundary bits p_{r+in} <-> p_{s+in} for all i.  Requires r < s
// and r, s in distinct residue classes mod n.
Core reflect(const Core& kappa, int r, int s);

// The unique strong cover tau => kappa whose southwestmost skew component
// starts in row z, when it exists.
std::optional<Core> cover_z(const Core& kappa, int z);

struct StrongMarkedCover {
  Core tau;
  Core kappa;
  int mark;
};

// Smallest row indices of the connected components of kappa/tau.
std::set<int> markings(const Core& tau, const Core& kappa);

// c*(h-1) + N where c is the number of components of kappa/tau, h their
// common height, and N the number of components entirely below the mark.
int spin(const StrongMarkedCover& cover);

struct StrongMarkedTableau {
  Core outside;
  Ints eta;
  bool vertical = false;
  std::vector<StrongMarkedCover> chain;  // from inside to outside

  Ints inside_bounded() const;
  Ints outside_bounded() const;
  int spin_total() const;
};

// All strong marked tableaux of weight eta with bounded outer shape mu.
// Marks within a block of eta are weakly decreasing, or strictly
// increasing when vertical is set.  Ordered lexicographically by the
// (start row, mark) pairs of the covers read from outside in.
std::vector<StrongMarkedTableau> enumerate_tableaux(const Ints& mu, int k,
                                                    const Ints& eta,
                                                    bool vertical);

}  // namespace cf
