#include "chainfold/rational.hpp"

#include <algorithm>
#include <sstream>

namespace chainfold {

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::domain_error("not a rational: '" + s + "'");
  }
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

VecQ primitive(const VecQ& v) {
  BigInt den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    den_lcm = boost::multiprecision::lcm(den_lcm, v[i].den());
  BigInt num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    num_gcd = boost::multiprecision::gcd(num_gcd, v[i].num() * (den_lcm / v[i].den()));
  if (num_gcd == 0) return VecQ::Zero(v.size());
  const Rat scale = Rat(den_lcm, num_gcd);
  VecQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] * scale;
  return out;
}

bool same_ray(const VecQ& a, const VecQ& b) {
  if (is_zero(a) || is_zero(b)) return false;
  return primitive(a) == primitive(b);
}

bool lex_less(const VecQ& a, const VecQ& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

std::vector<VecQ> columns(const MatQ& m) {
  std::vector<VecQ> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

MatQ from_columns(int rows, const std::vector<VecQ>& cols) {
  MatQ m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::domain_error("from_columns: size mismatch");
    m.col(static_cast<Eigen::Index>(j)) = cols[j];
  }
  return m;
}

MatQ canonical_columns(int rows, std::vector<VecQ> cols) {
  for (auto& c : cols) c = primitive(c);
  std::sort(cols.begin(), cols.end(), VecQLess{});
  cols.erase(std::unique(cols.begin(), cols.end(),
                         [](const VecQ& a, const VecQ& b) { return a == b; }),
             cols.end());
  std::erase_if(cols, [](const VecQ& c) { return is_zero(c); });
  return from_columns(rows, cols);
}

}  // namespace chainfold
