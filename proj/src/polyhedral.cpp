#include "chainfold/polyhedral.hpp"

#include "chainfold/linalg.hpp"
#include "chainfold/simplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chainfold {

namespace {

// Canonical basis of a linear subspace given spanning vectors (columns):
// reduced row echelon of the span, rows scaled primitive, sorted.
MatQ canonical_subspace_basis(int ambient, const MatQ& spanning) {
  if (spanning.cols() == 0) return MatQ(ambient, 0);
  MatQ rows = spanning.transpose();  // vectors as rows
  // Reduced row echelon form.
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < rows.cols() && row < rows.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = row; i < rows.rows(); ++i)
      if (!rows(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    rows.row(sel).swap(rows.row(row));
    const Rat inv = Rat(1) / rows(row, col);
    rows.row(row) *= inv;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      if (i == row || rows(i, col).is_zero()) continue;
      rows.row(i) -= rows(i, col) * rows.row(row);
    }
    ++row;
  }
  std::vector<VecQ> basis;
  for (Eigen::Index i = 0; i < row; ++i)
    basis.push_back(primitive(rows.row(i).transpose()));
  std::sort(basis.begin(), basis.end(), VecQLess{});
  return from_columns(ambient, basis);
}

struct HRep {
  MatQ facets;     // ambient x f
  MatQ equations;  // ambient x e
};

// Facets and span equations of the cone generated by the given columns.
// Brute force: a facet normal is orthogonal to a (d-1)-dimensional subset of
// generators, lies in the span of the cone, and has all generators on one
// side.
HRep v_to_h(int ambient, const MatQ& gens) {
  HRep out;
  out.equations = canonical_subspace_basis(ambient, kernel_basis(gens.transpose()));
  const int e = static_cast<int>(out.equations.cols());
  const int d = ambient - e;

  std::vector<VecQ> facets;
  if (d > 0) {
    const int m = static_cast<int>(gens.cols());
    const int pick = d - 1;
    std::vector<int> idx(static_cast<std::size_t>(pick));
    // Enumerate all size-(d-1) subsets of generator columns.
    std::vector<int> stack;
    auto process = [&](const std::vector<int>& subset) {
      MatQ m2(pick + e, ambient);
      for (int i = 0; i < pick; ++i) m2.row(i) = gens.col(subset[i]).transpose();
      for (int i = 0; i < e; ++i) m2.row(pick + i) = out.equations.col(i).transpose();
      const MatQ k = kernel_basis(m2);
      if (k.cols() != 1) return;
      const VecQ u = primitive(k.col(0));
      int pos = 0, neg = 0;
      for (Eigen::Index j = 0; j < gens.cols(); ++j) {
        const int s = u.dot(gens.col(j)).sign();
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      if (pos > 0 && neg > 0) return;
      facets.push_back(neg > 0 ? primitive(-u) : u);
    };
    // Iterative subset enumeration (lexicographic).
    std::vector<int> subset(static_cast<std::size_t>(pick));
    if (pick == 0) {
      process({});
    } else if (m >= pick) {
      for (int i = 0; i < pick; ++i) subset[i] = i;
      for (;;) {
        process(subset);
        int i = pick - 1;
        while (i >= 0 && subset[i] == m - pick + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < pick; ++j) subset[j] = subset[j - 1] + 1;
      }
    }
    (void)idx;
    (void)stack;
  }
  std::sort(facets.begin(), facets.end(), VecQLess{});
  facets.erase(std::unique(facets.begin(), facets.end(),
                           [](const VecQ& a, const VecQ& b) { return a == b; }),
               facets.end());
  out.facets = from_columns(ambient, facets);
  return out;
}

MatQ with_negations(const MatQ& ineq, const MatQ& eq) {
  MatQ all(ineq.rows(), ineq.cols() + 2 * eq.cols());
  all.leftCols(ineq.cols()) = ineq;
  all.middleCols(ineq.cols(), eq.cols()) = eq;
  all.rightCols(eq.cols()) = -eq;
  return all;
}

}  // namespace

ConeQ ConeQ::from_generators(int ambient, const MatQ& gens) {
  ConeQ c;
  c.ambient_ = ambient;
  const MatQ canon = canonical_columns(ambient, columns(gens));
  const HRep h = v_to_h(ambient, canon);
  // Mirror: the V-representation of this cone is the H-representation of the
  // cone spanned by its facet normals and (both signs of) its equations.
  const HRep mirror = v_to_h(ambient, with_negations(h.facets, h.equations));
  c.rays_ = mirror.facets;
  c.lineality_ = mirror.equations;
  c.facets_ = h.facets;
  c.equations_ = h.equations;
  c.h_ready_ = true;
  return c;
}

ConeQ ConeQ::from_inequalities(int ambient, const MatQ& ineq_normals,
                               const MatQ& eq_normals) {
  ConeQ c;
  c.ambient_ = ambient;
  const MatQ dual_gens =
      canonical_columns(ambient, columns(with_negations(ineq_normals, eq_normals)));
  const HRep h = v_to_h(ambient, dual_gens);
  c.rays_ = h.facets;
  c.lineality_ = h.equations;
  return c;
}

ConeQ ConeQ::zero_cone(int ambient) {
  return from_generators(ambient, MatQ(ambient, 0));
}

ConeQ ConeQ::full_space(int ambient) {
  return from_inequalities(ambient, MatQ(ambient, 0), MatQ(ambient, 0));
}

int ConeQ::dim() const {
  MatQ all(ambient_, rays_.cols() + lineality_.cols());
  if (rays_.cols() > 0) all.leftCols(rays_.cols()) = rays_;
  if (lineality_.cols() > 0) all.rightCols(lineality_.cols()) = lineality_;
  return rank_exact(all);
}

MatQ ConeQ::generators() const { return with_negations(rays_, lineality_); }

void ConeQ::ensure_h() const {
  if (h_ready_) return;
  const HRep h = v_to_h(ambient_, generators());
  facets_ = h.facets;
  equations_ = h.equations;
  h_ready_ = true;
}

const MatQ& ConeQ::facet_normals() const {
  ensure_h();
  return facets_;
}

const MatQ& ConeQ::span_equations() const {
  ensure_h();
  return equations_;
}

bool ConeQ::contains(const VecQ& x) const {
  if (x.size() != ambient_) throw Error::domain("cone membership: ambient mismatch");
  ensure_h();
  for (Eigen::Index j = 0; j < facets_.cols(); ++j)
    if (facets_.col(j).dot(x).sign() < 0) return false;
  for (Eigen::Index j = 0; j < equations_.cols(); ++j)
    if (!equations_.col(j).dot(x).is_zero()) return false;
  return true;
}

bool ConeQ::contains_cone(const ConeQ& other) const {
  if (other.ambient_ != ambient_)
    throw Error::domain("cone containment: ambient mismatch");
  const MatQ gens = other.generators();
  for (Eigen::Index j = 0; j < gens.cols(); ++j)
    if (!contains(gens.col(j))) return false;
  return true;
}

bool ConeQ::less(const ConeQ& a, const ConeQ& b) {
  const int da = a.dim(), db = b.dim();
  if (da != db) return da < db;
  if (a.rays_.cols() != b.rays_.cols()) return a.rays_.cols() < b.rays_.cols();
  for (Eigen::Index j = 0; j < a.rays_.cols(); ++j) {
    if (lex_less(a.rays_.col(j), b.rays_.col(j))) return true;
    if (lex_less(b.rays_.col(j), a.rays_.col(j))) return false;
  }
  if (a.lineality_.cols() != b.lineality_.cols())
    return a.lineality_.cols() < b.lineality_.cols();
  for (Eigen::Index j = 0; j < a.lineality_.cols(); ++j) {
    if (lex_less(a.lineality_.col(j), b.lineality_.col(j))) return true;
    if (lex_less(b.lineality_.col(j), a.lineality_.col(j))) return false;
  }
  return false;
}

ConeQ dual_cone(const ConeQ& c) {
  c.ensure_h();
  ConeQ d;
  d.ambient_ = c.ambient_;
  d.rays_ = c.facets_;
  d.lineality_ = c.equations_;
  d.facets_ = c.rays_;
  d.equations_ = c.lineality_;
  d.h_ready_ = true;
  return d;
}

ConeQ intersect(const ConeQ& a, const ConeQ& b) {
  if (a.ambient() != b.ambient())
    throw Error::domain("cone intersection: ambient mismatch");
  MatQ ineq(a.ambient(), a.facet_normals().cols() + b.facet_normals().cols());
  if (a.facet_normals().cols() > 0) ineq.leftCols(a.facet_normals().cols()) = a.facet_normals();
  if (b.facet_normals().cols() > 0) ineq.rightCols(b.facet_normals().cols()) = b.facet_normals();
  MatQ eq(a.ambient(), a.span_equations().cols() + b.span_equations().cols());
  if (a.span_equations().cols() > 0) eq.leftCols(a.span_equations().cols()) = a.span_equations();
  if (b.span_equations().cols() > 0) eq.rightCols(b.span_equations().cols()) = b.span_equations();
  return ConeQ::from_inequalities(a.ambient(), ineq, eq);
}

ConeQ apply_matrix(const MatQ& m, const ConeQ& c) {
  return ConeQ::from_generators(static_cast<int>(m.rows()), m * c.generators());
}

std::vector<ConeQ> face_lattice(const ConeQ& c) {
  if (!c.is_pointed())
    throw Error::domain("face_lattice requires a strongly convex cone");
  const MatQ& rays = c.rays();
  const MatQ& facets = c.facet_normals();
  const int k = static_cast<int>(rays.cols());
  const int f = static_cast<int>(facets.cols());

  // tight(i, j) = facet i vanishes on ray j
  std::vector<std::vector<bool>> tight(static_cast<std::size_t>(f),
                                       std::vector<bool>(static_cast<std::size_t>(k)));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < k; ++j)
      tight[i][j] = facets.col(i).dot(rays.col(j)).is_zero();

  std::set<std::vector<bool>> seen;
  std::vector<ConeQ> faces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    std::vector<bool> live(static_cast<std::size_t>(k), true);
    for (int i = 0; i < f; ++i)
      if (mask & (std::uint64_t{1} << i))
        for (int j = 0; j < k; ++j) live[j] = live[j] && tight[i][j];
    if (!seen.insert(live).second) continue;
    std::vector<VecQ> sub;
    for (int j = 0; j < k; ++j)
      if (live[j]) sub.push_back(rays.col(j));
    faces.push_back(ConeQ::from_generators(c.ambient(), from_columns(c.ambient(), sub)));
  }
  std::sort(faces.begin(), faces.end(), ConeQ::less);
  return faces;
}

std::vector<ConeQ> facets_of(const ConeQ& c) {
  const int d = c.dim();
  std::vector<ConeQ> out;
  for (const ConeQ& face : face_lattice(c))
    if (face.dim() == d - 1) out.push_back(face);
  return out;
}

bool is_simplicial(const ConeQ& c) {
  if (!c.is_pointed()) return false;
  return rank_exact(c.rays()) == static_cast<int>(c.rays().cols());
}

bool is_face_of(const ConeQ& face, const ConeQ& cone) {
  if (face.ambient() != cone.ambient()) return false;
  if (!cone.contains_cone(face)) return false;
  if (face == cone) return true;
  // Supporting functional from the relative interior of (dual cone) ∩ face^⊥.
  const ConeQ perp =
      ConeQ::from_inequalities(face.ambient(), MatQ(face.ambient(), 0), face.generators());
  const ConeQ d = intersect(dual_cone(cone), perp);
  VecQ u0 = VecQ::Zero(face.ambient());
  for (Eigen::Index j = 0; j < d.rays().cols(); ++j) u0 += d.rays().col(j);
  MatQ eq(face.ambient(), 1);
  eq.col(0) = u0;
  const ConeQ cut = intersect(cone, ConeQ::from_inequalities(face.ambient(),
                                                             MatQ(face.ambient(), 0), eq));
  return cut == face;
}

// ----------------------------------------------------------------------------

PolyhedronQ::PolyhedronQ(int ambient, std::vector<Halfspace> ineqs)
    : ambient_(ambient), ineqs_(std::move(ineqs)) {
  for (const Halfspace& h : ineqs_)
    if (h.normal.size() != ambient_)
      throw Error::domain("polyhedron: inequality dimension mismatch");
}

void PolyhedronQ::canonicalize() const {
  if (canon_ready_) return;
  canon_ready_ = true;
  empty_ = false;
  facets_.clear();
  implicit_.clear();

  // Primitive-normalize, drop trivial rows, fold parallel constraints.
  std::map<VecQ, Rat, VecQLess> tightest;
  for (const Halfspace& h : ineqs_) {
    if (is_zero(h.normal)) {
      if (h.bound.sign() < 0) {
        empty_ = true;
        return;
      }
      continue;
    }
    const VecQ p = primitive(h.normal);
    // p = s * normal with s > 0; the bound scales by the same factor.
    Rat s;
    for (Eigen::Index i = 0; i < p.size(); ++i)
      if (!h.normal[i].is_zero()) {
        s = p[i] / h.normal[i];
        break;
      }
    const Rat scaled = h.bound * s;
    auto it = tightest.find(p);
    if (it == tightest.end())
      tightest.emplace(p, scaled);
    else if (scaled < it->second)
      it->second = scaled;
  }
  std::vector<Halfspace> rows;
  for (const auto& [n, b] : tightest) rows.push_back({n, b});

  const auto as_lp = [&](const std::vector<Halfspace>& hs, int skip) {
    MatQ a(static_cast<Eigen::Index>(hs.size()) - (skip >= 0 ? 1 : 0), ambient_);
    VecQ b(a.rows());
    Eigen::Index r = 0;
    for (int i = 0; i < static_cast<int>(hs.size()); ++i) {
      if (i == skip) continue;
      a.row(r) = hs[static_cast<std::size_t>(i)].normal.transpose();
      b[r] = hs[static_cast<std::size_t>(i)].bound;
      ++r;
    }
    return std::pair<MatQ, VecQ>(std::move(a), std::move(b));
  };

  {
    auto [a, b] = as_lp(rows, -1);
    if (!lp_feasible(a, b)) {
      empty_ = true;
      return;
    }
  }

  // Implicit equalities: the inequality also holds reversed on all of P.
  std::vector<Halfspace> strict;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto [a, b] = as_lp(rows, -1);
    const LPResult r = solve_lp(a, b, -rows[i].normal);
    if (r.status == LPResult::Status::Optimal && -r.value == rows[i].bound)
      implicit_.push_back(rows[i]);
    else
      strict.push_back(rows[i]);
  }

  // Redundancy among the rest, tested against the shrinking retained system.
  std::vector<Halfspace> kept = strict;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Halfspace> others = implicit_;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    auto [a, b] = as_lp(others, -1);
    const LPResult r = solve_lp(a, b, kept[i].normal);
    if (r.status == LPResult::Status::Optimal && r.value <= kept[i].bound)
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  facets_ = std::move(kept);
}

bool PolyhedronQ::empty() const {
  canonicalize();
  return empty_;
}

const std::vector<Halfspace>& PolyhedronQ::facets() const {
  canonicalize();
  return facets_;
}

const std::vector<Halfspace>& PolyhedronQ::implicit_equalities() const {
  canonicalize();
  return implicit_;
}

bool PolyhedronQ::full_dimensional() const {
  canonicalize();
  return !empty_ && implicit_.empty();
}

ConeQ PolyhedronQ::recession_cone() const {
  canonicalize();
  if (empty_) return ConeQ::zero_cone(ambient_);
  std::vector<VecQ> ineq, eq;
  for (const Halfspace& h : facets_) ineq.push_back(-h.normal);
  for (const Halfspace& h : implicit_) eq.push_back(h.normal);
  return ConeQ::from_inequalities(ambient_, from_columns(ambient_, ineq),
                                  from_columns(ambient_, eq));
}

PolyhedronQ shift(const ConeQ& c, const VecQ& v) {
  if (v.size() != c.ambient()) throw Error::domain("shift: dimension mismatch");
  std::vector<Halfspace> hs;
  const MatQ& facets = c.facet_normals();
  for (Eigen::Index j = 0; j < facets.cols(); ++j)
    hs.push_back({-facets.col(j), -facets.col(j).dot(v)});
  const MatQ& eqs = c.span_equations();
  for (Eigen::Index j = 0; j < eqs.cols(); ++j) {
    hs.push_back({eqs.col(j), eqs.col(j).dot(v)});
    hs.push_back({-eqs.col(j), -eqs.col(j).dot(v)});
  }
  return PolyhedronQ(c.ambient(), std::move(hs));
}

PolyhedronQ intersect_polyhedra(const PolyhedronQ& a, const PolyhedronQ& b) {
  if (a.ambient() != b.ambient())
    throw Error::domain("intersect_polyhedra: ambient mismatch");
  std::vector<Halfspace> hs = a.inequalities();
  hs.insert(hs.end(), b.inequalities().begin(), b.inequalities().end());
  return PolyhedronQ(a.ambient(), std::move(hs));
}

std::vector<VecQ> vertices(const PolyhedronQ& p) {
  if (p.empty()) throw Error::domain("vertices of an empty polyhedron");
  std::vector<Halfspace> all = p.implicit_equalities();
  all.insert(all.end(), p.facets().begin(), p.facets().end());
  const int m = static_cast<int>(all.size());
  const int r = p.ambient();

  std::vector<VecQ> verts;
  std::vector<int> subset(static_cast<std::size_t>(r));
  if (m < r) return verts;
  for (int i = 0; i < r; ++i) subset[i] = i;
  for (;;) {
    MatQ a(r, r);
    VecQ b(r);
    for (int i = 0; i < r; ++i) {
      a.row(i) = all[static_cast<std::size_t>(subset[i])].normal.transpose();
      b[i] = all[static_cast<std::size_t>(subset[i])].bound;
    }
    if (rank_exact(a) == r) {
      const VecQ x = *solve_exact(a, b);
      bool ok = true;
      for (const Halfspace& h : all)
        if (h.normal.dot(x) > h.bound) {
          ok = false;
          break;
        }
      if (ok) verts.push_back(x);
    }
    int i = r - 1;
    while (i >= 0 && subset[i] == m - r + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
  std::sort(verts.begin(), verts.end(), VecQLess{});
  verts.erase(std::unique(verts.begin(), verts.end(),
                          [](const VecQ& a, const VecQ& b) { return a == b; }),
              verts.end());
  return verts;
}

NormalFan normal_fan(const PolyhedronQ& p) {
  if (p.empty()) throw Error::domain("normal_fan of an empty polyhedron");
  if (!p.full_dimensional())
    throw Error::domain("normal_fan of a lower-dimensional polyhedron");
  const std::vector<Halfspace>& facets = p.facets();
  const int r = p.ambient();
  const int f = static_cast<int>(facets.size());

  NormalFan out;
  for (const Halfspace& h : facets) out.rays.push_back(primitive(h.normal));
  std::sort(out.rays.begin(), out.rays.end(), VecQLess{});

  // Lineality of the polyhedron: directions along which every facet is flat.
  MatQ normal_rows(f, r);
  for (int i = 0; i < f; ++i) normal_rows.row(i) = facets[static_cast<std::size_t>(i)].normal.transpose();
  const MatQ lin = kernel_basis(normal_rows);
  const int l = static_cast<int>(lin.cols());
  const int pick = r - l;

  // Minimal faces: rank-r systems of `pick` tight facets plus the lineality
  // complement; each is recorded by its full tight set.
  std::set<std::vector<int>> seen;
  std::vector<ConeQ> max_cones;

  auto try_subset = [&](const std::vector<int>& subset) {
    MatQ a(pick + l, r);
    VecQ b(pick + l);
    for (int i = 0; i < pick; ++i) {
      a.row(i) = facets[static_cast<std::size_t>(subset[i])].normal.transpose();
      b[i] = facets[static_cast<std::size_t>(subset[i])].bound;
    }
    for (int i = 0; i < l; ++i) {
      a.row(pick + i) = lin.col(i).transpose();
      b[pick + i] = Rat(0);
    }
    if (rank_exact(a) != r) return;
    const auto x = solve_exact(a, b);
    if (!x) return;
    std::vector<int> tight_set;
    for (int i = 0; i < f; ++i) {
      const Rat v = facets[static_cast<std::size_t>(i)].normal.dot(*x);
      if (v > facets[static_cast<std::size_t>(i)].bound) return;  // infeasible
      if (v == facets[static_cast<std::size_t>(i)].bound) tight_set.push_back(i);
    }
    if (!seen.insert(tight_set).second) return;
    std::vector<VecQ> gens;
    for (int i : tight_set) gens.push_back(facets[static_cast<std::size_t>(i)].normal);
    max_cones.push_back(ConeQ::from_generators(r, from_columns(r, gens)));
  };

  if (pick == 0) {
    try_subset({});
  } else if (f >= pick) {
    std::vector<int> subset(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i) subset[i] = i;
    for (;;) {
      try_subset(subset);
      int i = pick - 1;
      while (i >= 0 && subset[i] == f - pick + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < pick; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  if (max_cones.empty())
    throw Error::domain("normal_fan: no minimal face found (degenerate input)");
  std::sort(max_cones.begin(), max_cones.end(), ConeQ::less);
  out.max_cones = std::move(max_cones);
  return out;
}

}  // namespace chainfold
