#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cf {

using Int = boost::multiprecision::cpp_int;

// polynomial in t over the integers, coefficients stored low degree first
class TPoly {
public:
  TPoly() = default;
  TPoly(int c) : TPoly(Int(c)) {}
  TPoly(const Int& c) {
    if (c != 0) c_.push_back(c);
  }
  static TPoly t_power(int d, Int c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }
  int low_degree() const;
  Int coeff(int d) const;
  Int at_one() const;
  bool nonneg() const;
  const std::vector<Int>& coeffs() const { return c_; }

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator-() const;
  TPoly operator*(const TPoly& o) const;
  bool operator==(const TPoly& o) const { return c_ == o.c_; }

  std::string str() const;

private:
  std::vector<Int> c_;
  void trim();
};

}  // namespace cf
