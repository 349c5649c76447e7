#include "tpoly.h"

namespace cf {

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly TPoly::t_power(int d, Int c) {
  TPoly p;
  if (c != 0) {
    p.c_.assign(d + 1, 0);
    p.c_[d] = c;
  }
  return p;
}

int TPoly::low_degree() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return (int)i;
  return -1;
}

Int TPoly::coeff(int d) const {
  if (d < 0 || d >= (int)c_.size()) return 0;
  return c_[d];
}

Int TPoly::at_one() const {
  Int s = 0;
  for (auto& c : c_) s += c;
  return s;
}

bool TPoly::nonneg() const {
  for (auto& c : c_)
    if (c < 0) return false;
  return true;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly TPoly::operator+(const TPoly& o) const {
  TPoly r = *this;
  r += o;
  return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
  TPoly r = *this;
  r -= o;
  return r;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  TPoly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

std::string TPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t d = 0; d < c_.size(); ++d) {
    if (c_[d] == 0) continue;
    Int a = c_[d];
    bool neg = a < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Int mag = neg ? Int(-a) : a;
    if (d == 0) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str() + "*";
      s += d == 1 ? "t" : "t^" + std::to_string(d);
    }
  }
  return s;
}

}  // namespace cf
