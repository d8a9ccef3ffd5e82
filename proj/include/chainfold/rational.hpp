// Exact rational scalar for Eigen dense types, plus small vector helpers
// shared by every module.  All arithmetic in this project is exact; nothing
// here may ever round.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainfold {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept in canonical form
// (gcd(num, den) = 1, den > 0).  Deliberately a plain wrapper rather than
// boost::multiprecision::cpp_rational: the wrapper has no greedy template
// constructors, so it coexists with Eigen's expression machinery.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(long n) : num_(n), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  explicit Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    reduce();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_, den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// "p/q" or "p"; the only accepted wire format for rationals.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);

inline bool is_integral(const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_integer()) return false;
  return true;
}

inline bool is_zero(const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

// Unique primitive integer vector on the same ray: positive scaling so that
// entries are coprime integers.  Zero maps to zero.
VecQ primitive(const VecQ& v);

// True iff a = c*b for some rational c > 0 (b nonzero).
bool same_ray(const VecQ& a, const VecQ& b);

// Lexicographic order on coordinates; total order used for all canonical
// sorting of vectors and generator lists.
bool lex_less(const VecQ& a, const VecQ& b);

struct VecQLess {
  bool operator()(const VecQ& a, const VecQ& b) const { return lex_less(a, b); }
};

// Columns of a matrix as vectors, and back.
std::vector<VecQ> columns(const MatQ& m);
MatQ from_columns(int rows, const std::vector<VecQ>& cols);

// Canonical generator matrix: primitive columns, lexicographically sorted,
// exact duplicates removed.
MatQ canonical_columns(int rows, std::vector<VecQ> cols);

}  // namespace chainfold

namespace Eigen {
template <>
struct NumTraits<chainfold::Rat> {
  using Real = chainfold::Rat;
  using NonInteger = chainfold::Rat;
  using Nested = chainfold::Rat;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 30
  };
  static inline Real epsilon() { return chainfold::Rat(0); }
  static inline Real dummy_precision() { return chainfold::Rat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
