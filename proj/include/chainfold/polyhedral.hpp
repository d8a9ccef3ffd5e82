// Exact rational convex geometry: polyhedral cones with both descriptions
// (generators and facet inequalities), polyhedra as inequality systems,
// dual cones, face lattices, vertex enumeration and normal fans.
//
// Conversion between the two cone descriptions is done by brute-force subset
// enumeration with exact rank checks; at this project's scale (rank <= 4,
// around a dozen defining vectors) that is both fast enough and immune to the
// degeneracies that incremental double-description methods have to dodge.
// Canonical form everywhere: primitive integer vectors, lexicographically
// sorted, so structural equality coincides with set equality.

#pragma once

#include "chainfold/error.hpp"
#include "chainfold/rational.hpp"

#include <optional>
#include <vector>

namespace chainfold {

class ConeQ {
 public:
  ConeQ() = default;

  // Cone generated by the columns of `gens` (redundancy allowed).
  static ConeQ from_generators(int ambient, const MatQ& gens);
  // { x : <n, x> >= 0 for n in ineq columns, <e, x> = 0 for e in eq columns }.
  static ConeQ from_inequalities(int ambient, const MatQ& ineq_normals,
                                 const MatQ& eq_normals);
  static ConeQ zero_cone(int ambient);
  static ConeQ full_space(int ambient);

  int ambient() const { return ambient_; }
  int dim() const;
  bool is_pointed() const { return lineality_.cols() == 0; }
  bool is_zero() const { return rays_.cols() == 0 && lineality_.cols() == 0; }

  // Extreme rays of the pointed part (primitive, sorted); lineality basis.
  const MatQ& rays() const { return rays_; }
  const MatQ& lineality() const { return lineality_; }
  // All generators: rays plus both signs of the lineality basis.
  MatQ generators() const;

  // H-representation (lazily computed, canonical): the cone is
  // { x : <u, x> >= 0 for facet u, <e, x> = 0 for equation e }.
  const MatQ& facet_normals() const;
  const MatQ& span_equations() const;

  bool contains(const VecQ& x) const;
  bool contains_cone(const ConeQ& other) const;

  friend bool operator==(const ConeQ& a, const ConeQ& b) {
    return a.ambient_ == b.ambient_ && a.rays_ == b.rays_ &&
           a.lineality_ == b.lineality_;
  }

  // Deterministic total order (for canonical cone lists).
  static bool less(const ConeQ& a, const ConeQ& b);

 private:
  int ambient_ = 0;
  MatQ rays_;       // ambient x k
  MatQ lineality_;  // ambient x l
  // Lazy H-representation cache; computed idempotently.
  mutable bool h_ready_ = false;
  mutable MatQ facets_;     // ambient x f
  mutable MatQ equations_;  // ambient x e
  void ensure_h() const;
};

ConeQ dual_cone(const ConeQ& c);
ConeQ intersect(const ConeQ& a, const ConeQ& b);
ConeQ apply_matrix(const MatQ& m, const ConeQ& c);

// All faces of a strongly convex cone, {0} and the cone included,
// deterministically ordered by (dimension, rays).
std::vector<ConeQ> face_lattice(const ConeQ& c);

// Facets (codimension-1 faces) of a strongly convex cone.
std::vector<ConeQ> facets_of(const ConeQ& c);

bool is_simplicial(const ConeQ& c);

// Exact face test via a relative-interior supporting functional.
bool is_face_of(const ConeQ& face, const ConeQ& cone);

// ----------------------------------------------------------------------------

struct Halfspace {
  VecQ normal;  // in the dual space
  Rat bound;    // <normal, x> <= bound
};

class PolyhedronQ {
 public:
  PolyhedronQ() = default;
  PolyhedronQ(int ambient, std::vector<Halfspace> ineqs);

  int ambient() const { return ambient_; }
  const std::vector<Halfspace>& inequalities() const { return ineqs_; }

  bool empty() const;
  // Irredundant facet inequalities (canonical); empty polyhedron has none.
  const std::vector<Halfspace>& facets() const;
  // Normals that hold with equality on the whole polyhedron.
  const std::vector<Halfspace>& implicit_equalities() const;
  bool full_dimensional() const;  // affine hull equals the ambient space

  ConeQ recession_cone() const;

 private:
  int ambient_ = 0;
  std::vector<Halfspace> ineqs_;
  mutable bool canon_ready_ = false;
  mutable bool empty_ = false;
  mutable std::vector<Halfspace> facets_;
  mutable std::vector<Halfspace> implicit_;
  void canonicalize() const;
};

// { x + v : x in c }, with c read as a cone in the polyhedron's ambient space.
PolyhedronQ shift(const ConeQ& c, const VecQ& v);

PolyhedronQ intersect_polyhedra(const PolyhedronQ& a, const PolyhedronQ& b);

// Exact vertex set via enumeration of maximal-rank active subsets.
// Throws on an empty polyhedron.
std::vector<VecQ> vertices(const PolyhedronQ& p);

// Outer normal fan: one maximal cone per minimal face of p, rays the
// primitive outward facet normals.  Requires p nonempty and full-dimensional.
struct NormalFan {
  std::vector<ConeQ> max_cones;  // in the dual space
  std::vector<VecQ> rays;        // primitive outward facet normals, sorted
};
NormalFan normal_fan(const PolyhedronQ& p);

}  // namespace chainfold
