#include "chainfold/root_datum.hpp"

#include "chainfold/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chainfold {

namespace {

// Cartan matrix of the named finite series, C[i][j] = <alpha_i, alpha_j^vee>.
MatQ cartan_of_series(const std::string& series, int n) {
  auto tridiagonal = [](int n) {
    MatQ c = MatQ::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      c(i, i) = Rat(2);
      if (i + 1 < n) {
        c(i, i + 1) = Rat(-1);
        c(i + 1, i) = Rat(-1);
      }
    }
    return c;
  };
  if (series == "A") {
    if (n < 1) throw Error::domain("A_n needs n >= 1");
    return tridiagonal(n);
  }
  if (series == "B") {
    if (n < 2) throw Error::domain("B_n needs n >= 2");
    MatQ c = tridiagonal(n);
    c(n - 2, n - 1) = Rat(-2);  // alpha_{n-1} long, alpha_n short
    return c;
  }
  if (series == "C") {
    if (n < 2) throw Error::domain("C_n needs n >= 2");
    MatQ c = tridiagonal(n);
    c(n - 1, n - 2) = Rat(-2);
    return c;
  }
  if (series == "D") {
    if (n < 3) throw Error::domain("D_n needs n >= 3");
    MatQ c = tridiagonal(n);
    c(n - 2, n - 1) = Rat(0);
    c(n - 1, n - 2) = Rat(0);
    c(n - 3, n - 1) = Rat(-1);
    c(n - 1, n - 3) = Rat(-1);
    return c;
  }
  if (series == "G") {
    if (n != 2) throw Error::domain("G series has rank 2 only");
    MatQ c(2, 2);
    c << Rat(2), Rat(-1), Rat(-3), Rat(2);
    return c;
  }
  throw Error::domain("unknown series '" + series + "'");
}

MatQ pad_columns(const MatQ& m, int total_cols) {
  MatQ out = MatQ::Zero(m.rows(), total_cols);
  out.leftCols(m.cols()) = m;
  return out;
}

}  // namespace

RootDatum build_root_datum(const std::string& series, int rank_of_type,
                           Isogeny isogeny, int extra_central_rank) {
  if (extra_central_rank < 0) throw Error::domain("central rank must be >= 0");

  if (series == "torus") {
    RootDatum rd;
    rd.rank = extra_central_rank;
    rd.simple_roots = MatQ(0, rd.rank);
    rd.simple_coroots = MatQ(0, rd.rank);
    rd.label = "torus_" + std::to_string(rd.rank);
    return rd;
  }

  if (isogeny == Isogeny::GeneralLinear) {
    if (series != "A") throw Error::domain("general_linear applies to series A only");
    const int n = rank_of_type + 1;  // GL_n from A_{n-1}
    const int r = n + extra_central_rank;
    const int s = n - 1;
    MatQ roots = MatQ::Zero(s, r), coroots = MatQ::Zero(s, r);
    for (int i = 0; i < s; ++i) {
      roots(i, i) = Rat(1);
      roots(i, i + 1) = Rat(-1);
      coroots(i, i) = Rat(1);
      coroots(i, i + 1) = Rat(-1);
    }
    RootDatum rd{r, roots, coroots, "GL_" + std::to_string(n)};
    validate_root_datum(rd);
    return rd;
  }

  const MatQ c = cartan_of_series(series, rank_of_type);
  const int s = rank_of_type;
  const int r = s + extra_central_rank;
  RootDatum rd;
  rd.rank = r;
  if (isogeny == Isogeny::SimplyConnected) {
    // Lambda = coroot lattice: coroots are standard basis vectors, so the
    // root coordinates are rows of the Cartan matrix.
    rd.simple_coroots = pad_columns(MatQ::Identity(s, s), r);
    rd.simple_roots = pad_columns(c, r);
    rd.label = series + "_" + std::to_string(s) + "_sc";
  } else {
    // Lambda = coweight lattice: fundamental coweights are standard basis
    // vectors, roots are the dual basis, coroots are Cartan columns.
    rd.simple_roots = pad_columns(MatQ::Identity(s, s), r);
    rd.simple_coroots = pad_columns(c.transpose(), r);
    rd.label = series + "_" + std::to_string(s) + "_adj";
  }
  if (extra_central_rank > 0) rd.label += "_z" + std::to_string(extra_central_rank);
  validate_root_datum(rd);
  return rd;
}

RootDatum root_datum_from_matrices(int rank, MatQ simple_roots,
                                   MatQ simple_coroots, std::string label) {
  RootDatum rd{rank, std::move(simple_roots), std::move(simple_coroots),
               std::move(label)};
  validate_root_datum(rd);
  return rd;
}

void validate_root_datum(const RootDatum& rd) {
  const int s = rd.num_simple();
  if (rd.rank < 0) throw Error::domain("root datum: negative rank");
  if (rd.simple_roots.cols() != rd.rank || rd.simple_coroots.cols() != rd.rank ||
      rd.simple_coroots.rows() != s)
    throw Error::domain("root datum: matrix shapes inconsistent with rank");
  if (s > rd.rank) throw Error::domain("root datum: more simple roots than rank");
  if (s == 0) return;

  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < rd.rank; ++j)
      if (!rd.simple_roots(i, j).is_integer() || !rd.simple_coroots(i, j).is_integer())
        throw Error::domain("root datum: roots and coroots must be integral");

  if (rank_exact(rd.simple_roots) != s)
    throw Error::domain("root datum: simple roots not linearly independent");
  if (rank_exact(rd.simple_coroots) != s)
    throw Error::domain("root datum: simple coroots not linearly independent");

  const MatQ c = rd.cartan_matrix();
  for (int i = 0; i < s; ++i) {
    if (c(i, i) != Rat(2)) throw Error::domain("Cartan matrix: diagonal entry not 2");
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      if (c(i, j).sign() > 0)
        throw Error::domain("Cartan matrix: positive off-diagonal entry");
      if (c(i, j).is_zero() != c(j, i).is_zero())
        throw Error::domain("Cartan matrix: zero pattern not symmetric");
    }
  }

  // Symmetrizer d_i > 0 with d_i c_ij = d_j c_ji, found by walking the Dynkin
  // graph componentwise; then D*C must be positive definite (finite type).
  std::vector<Rat> d(static_cast<std::size_t>(s), Rat(0));
  for (int start = 0; start < s; ++start) {
    if (!d[start].is_zero()) continue;
    d[start] = Rat(1);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < s; ++j) {
        if (c(i, j).is_zero() || !d[j].is_zero()) continue;
        d[j] = d[i] * c(i, j) / c(j, i);
        queue.push_back(j);
      }
    }
  }
  MatQ sym(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) sym(i, j) = d[i] * c(i, j);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (sym(i, j) != sym(j, i))
        throw Error::domain("Cartan matrix: not symmetrizable");
  // Leading principal minors all positive.
  for (int k = 1; k <= s; ++k) {
    MatQ mk = sym.topLeftCorner(k, k);
    // Determinant via elimination: product of pivots.
    Rat det(1);
    for (int col = 0; col < k; ++col) {
      int sel = -1;
      for (int row = col; row < k; ++row)
        if (!mk(row, col).is_zero()) {
          sel = row;
          break;
        }
      if (sel < 0) {
        det = Rat(0);
        break;
      }
      if (sel != col) {
        mk.row(sel).swap(mk.row(col));
        det = -det;
      }
      det *= mk(col, col);
      for (int row = col + 1; row < k; ++row) {
        const Rat f = mk(row, col) / mk(col, col);
        for (int j2 = col; j2 < k; ++j2) mk(row, j2) -= f * mk(col, j2);
      }
    }
    if (det.sign() <= 0)
      throw Error::domain("Cartan matrix: symmetrization not positive definite");
  }
}

bool is_dominant(const RootDatum& rd, const VecQ& lam) {
  if (lam.size() != rd.rank) throw Error::domain("is_dominant: dimension mismatch");
  for (int i = 0; i < rd.num_simple(); ++i)
    if (rd.simple_roots.row(i).dot(lam.transpose()).sign() < 0) return false;
  return true;
}

bool is_dominant(const RootDatum& rd, const LatticeVector& lam) {
  if (lam.space != Space::Cochar)
    throw Error::domain("is_dominant: expected a cocharacter vector");
  return is_dominant(rd, lam.coords);
}

bool is_dominant_char(const RootDatum& rd, const VecQ& v) {
  if (v.size() != rd.rank) throw Error::domain("is_dominant_char: dimension mismatch");
  for (int i = 0; i < rd.num_simple(); ++i)
    if (rd.simple_coroots.row(i).dot(v.transpose()).sign() < 0) return false;
  return true;
}

VecQ simple_reflection(const RootDatum& rd, int i, const VecQ& lam) {
  if (i < 0 || i >= rd.num_simple())
    throw Error::domain("simple_reflection: index out of range");
  if (lam.size() != rd.rank)
    throw Error::domain("simple_reflection: dimension mismatch");
  const Rat p = rd.simple_roots.row(i).dot(lam.transpose());
  return lam - p * rd.simple_coroots.row(i).transpose();
}

VecQ act_cochar(const WeylElement& w, const VecQ& lam) { return w.matrix * lam; }
VecQ act_char(const WeylElement& w, const VecQ& v) { return w.char_matrix * v; }

namespace {

WeylElement make_identity(int rank) {
  return WeylElement{{}, MatQ::Identity(rank, rank), MatQ::Identity(rank, rank)};
}

// Reflection matrices: on Lambda, lam -> lam - <alpha_i, lam> alpha_i^vee;
// on V the inverse transpose, v -> v - <v, alpha_i^vee> alpha_i.
WeylElement make_generator(const RootDatum& rd, int i) {
  const int r = rd.rank;
  MatQ m = MatQ::Identity(r, r) -
           rd.simple_coroots.row(i).transpose() * rd.simple_roots.row(i);
  MatQ mc = MatQ::Identity(r, r) -
            rd.simple_roots.row(i).transpose() * rd.simple_coroots.row(i);
  return WeylElement{{i}, std::move(m), std::move(mc)};
}

struct MatQCmp {
  bool operator()(const MatQ& a, const MatQ& b) const {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        if (a(i, j) < b(i, j)) return true;
        if (b(i, j) < a(i, j)) return false;
      }
    return false;
  }
};

}  // namespace

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement out;
  out.word = a.word;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  out.matrix = a.matrix * b.matrix;
  out.char_matrix = a.char_matrix * b.char_matrix;
  return out;
}

WeylElement inverse_element(const WeylElement& w) {
  WeylElement out;
  out.word.assign(w.word.rbegin(), w.word.rend());  // generators are involutions
  out.matrix = inverse_exact(w.matrix);
  out.char_matrix = inverse_exact(w.char_matrix);
  return out;
}

WeylGroup::WeylGroup(const RootDatum& rd, std::size_t cap) {
  const int s = rd.num_simple();
  elements_.push_back(make_identity(rd.rank));
  std::map<MatQ, std::size_t, MatQCmp> seen;
  seen.emplace(elements_[0].matrix, 0);

  std::vector<WeylElement> generators;
  generators.reserve(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) generators.push_back(make_generator(rd, i));

  std::size_t head = 0;
  while (head < elements_.size()) {
    const std::size_t cur = head++;
    for (int i = 0; i < s; ++i) {
      WeylElement next;
      next.matrix = elements_[cur].matrix * generators[i].matrix;
      if (seen.count(next.matrix)) continue;
      next.char_matrix = elements_[cur].char_matrix * generators[i].char_matrix;
      next.word = elements_[cur].word;
      next.word.push_back(i);
      if (elements_.size() >= cap)
        throw Error::domain("Weyl group order exceeds cap " + std::to_string(cap));
      seen.emplace(next.matrix, elements_.size());
      elements_.push_back(std::move(next));
    }
  }
  // The unique longest element is the last one discovered.
  longest_index_ = elements_.size() - 1;
}

const WeylElement& WeylGroup::longest() const { return elements_[longest_index_]; }

std::vector<WeylElement> weyl_group(const RootDatum& rd, std::size_t cap) {
  return WeylGroup(rd, cap).elements();
}

std::pair<VecQ, WeylElement> to_dominant(const RootDatum& rd, const WeylGroup& w,
                                         const VecQ& lam) {
  for (const WeylElement& e : w.elements()) {
    const VecQ image = act_cochar(e, lam);
    if (is_dominant(rd, image)) return {image, e};
  }
  throw std::logic_error("to_dominant: no dominant representative found");
}

std::pair<VecQ, WeylElement> to_dominant(const RootDatum& rd, const VecQ& lam) {
  return to_dominant(rd, WeylGroup(rd), lam);
}

WeylElement longest_element(const RootDatum& rd) { return WeylGroup(rd).longest(); }

std::vector<VecQ> weyl_orbit(const WeylGroup& w, const VecQ& lam) {
  std::vector<VecQ> orbit;
  for (const WeylElement& e : w.elements()) orbit.push_back(act_cochar(e, lam));
  std::sort(orbit.begin(), orbit.end(), VecQLess{});
  orbit.erase(std::unique(orbit.begin(), orbit.end(),
                          [](const VecQ& a, const VecQ& b) { return a == b; }),
              orbit.end());
  return orbit;
}

std::vector<VecQ> weyl_orbit(const RootDatum& rd, const VecQ& lam) {
  return weyl_orbit(WeylGroup(rd), lam);
}

std::vector<VecQ> all_roots(const RootDatum& rd, const WeylGroup& w) {
  std::vector<VecQ> roots;
  for (int i = 0; i < rd.num_simple(); ++i) {
    const VecQ alpha = rd.simple_roots.row(i).transpose();
    for (const WeylElement& e : w.elements()) roots.push_back(act_char(e, alpha));
  }
  std::sort(roots.begin(), roots.end(), VecQLess{});
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](const VecQ& a, const VecQ& b) { return a == b; }),
              roots.end());
  return roots;
}

std::vector<VecQ> positive_roots(const RootDatum& rd, const WeylGroup& w) {
  // Positive = nonnegative rational combination of the simple roots.
  const MatQ basis = rd.simple_roots.transpose();  // columns alpha_i
  std::vector<VecQ> pos;
  for (const VecQ& root : all_roots(rd, w)) {
    const auto coeff = solve_exact(basis, root);
    if (!coeff) continue;
    bool nonneg = true;
    for (Eigen::Index i = 0; i < coeff->size(); ++i)
      if ((*coeff)[i].sign() < 0) {
        nonneg = false;
        break;
      }
    if (nonneg) pos.push_back(root);
  }
  return pos;
}

}  // namespace chainfold
