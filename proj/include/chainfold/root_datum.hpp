// Root data for split reductive groups, fixed in coordinates: the character
// lattice V and cocharacter lattice Lambda are both Z^r, paired by the
// standard dot product.  Simple roots live in V, simple coroots in Lambda.
// The Weyl group is materialized as an explicit list of matrices acting on
// Lambda, capped in size; everything downstream (orbits, stabilizers,
// dominant representatives) is plain list manipulation.

#pragma once

#include "chainfold/error.hpp"
#include "chainfold/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chainfold {

enum class Space { Cochar, Char };

struct LatticeVector {
  VecQ coords;
  Space space = Space::Cochar;
};

struct RootDatum {
  int rank = 0;        // r = rank of the torus, of V and of Lambda
  MatQ simple_roots;   // s x r, row i = alpha_i in V-coordinates
  MatQ simple_coroots; // s x r, row i = alpha_i^vee in Lambda-coordinates
  std::string label;

  int num_simple() const { return static_cast<int>(simple_roots.rows()); }
  // C[i][j] = <alpha_i, alpha_j^vee>
  MatQ cartan_matrix() const { return simple_roots * simple_coroots.transpose(); }
};

enum class Isogeny { SimplyConnected, Adjoint, GeneralLinear };

// series: "A", "B", "C", "D", "G" (rank 2 only) or "torus".
// Conventions: simply_connected takes Lambda = coroot lattice (coroots are
// standard basis vectors); adjoint takes Lambda = coweight lattice
// (fundamental coweights are standard basis vectors); general_linear builds
// the GL datum on series A with r = rank_of_type + 1.  extra_central_rank
// appends central torus coordinates.
RootDatum build_root_datum(const std::string& series, int rank_of_type,
                           Isogeny isogeny, int extra_central_rank);

// Explicit matrices, validated against the Cartan-matrix invariants
// (diagonal 2, off-diagonal <= 0, positive-definite symmetrization,
// independent roots and coroots).
RootDatum root_datum_from_matrices(int rank, MatQ simple_roots,
                                   MatQ simple_coroots, std::string label);

void validate_root_datum(const RootDatum& rd);  // throws Error::domain

inline Rat pairing(const VecQ& char_vec, const VecQ& cochar_vec) {
  return char_vec.dot(cochar_vec);
}

// <alpha_i, lam> >= 0 for all i (lam in Lambda).
bool is_dominant(const RootDatum& rd, const VecQ& lam);
bool is_dominant(const RootDatum& rd, const LatticeVector& lam);

// <v, alpha_i^vee> >= 0 for all i (v in V).
bool is_dominant_char(const RootDatum& rd, const VecQ& v);

// lam - <alpha_i, lam> alpha_i^vee; i is 0-based.
VecQ simple_reflection(const RootDatum& rd, int i, const VecQ& lam);

struct WeylElement {
  std::vector<int> word;  // simple-reflection indices, product left to right
  MatQ matrix;            // action on Lambda
  MatQ char_matrix;       // action on V = inverse transpose of matrix
};

VecQ act_cochar(const WeylElement& w, const VecQ& lam);
VecQ act_char(const WeylElement& w, const VecQ& v);
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse_element(const WeylElement& w);

inline constexpr std::size_t kDefaultWeylCap = 51840;

// The full Weyl group as a breadth-first closure of the generators:
// identity first, then by word length, deterministic within a level.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const;

 private:
  std::vector<WeylElement> elements_;
  std::size_t longest_index_ = 0;
};

std::vector<WeylElement> weyl_group(const RootDatum& rd,
                                    std::size_t cap = kDefaultWeylCap);

// Unique dominant representative together with the first Weyl element (in
// breadth-first order from the identity) carrying lam onto it.
std::pair<VecQ, WeylElement> to_dominant(const RootDatum& rd, const WeylGroup& w,
                                         const VecQ& lam);
std::pair<VecQ, WeylElement> to_dominant(const RootDatum& rd, const VecQ& lam);

WeylElement longest_element(const RootDatum& rd);

// Full orbit, lexicographically sorted.
std::vector<VecQ> weyl_orbit(const WeylGroup& w, const VecQ& lam);
std::vector<VecQ> weyl_orbit(const RootDatum& rd, const VecQ& lam);

// All roots (V-coordinates): W-saturation of the simple roots.  The positive
// ones are those lying in the nonnegative span of the simple roots.
std::vector<VecQ> all_roots(const RootDatum& rd, const WeylGroup& w);
std::vector<VecQ> positive_roots(const RootDatum& rd, const WeylGroup& w);

}  // namespace chainfold
