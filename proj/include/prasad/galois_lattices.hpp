#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prasad/smith.hpp"

namespace prasad {

using Mat = IntMatrix<long long>;
using Vec = IntVector<long long>;

class InvalidLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Z^r x Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... and d_i >= 2.
struct FiniteAbelianGroup {
  std::vector<std::int64_t> invariant_factors;
  int free_rank = 0;

  bool finite() const { return free_rank == 0; }
  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  std::int64_t order() const;
  // Number of elements killed by m (torsion part only).
  std::int64_t count_killed_by(std::int64_t m) const;
  std::string to_string() const;
  bool operator==(const FiniteAbelianGroup&) const = default;

  static FiniteAbelianGroup cyclic(std::int64_t n);
};

// Cokernel of C : Z^cols -> Z^rows.
FiniteAbelianGroup cokernel(const Mat& C);
FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

// Finite abelian group Z/m_1 x ... x Z/m_k acting on Z^n through commuting matrices.
class GaloisLattice {
 public:
  GaloisLattice(std::vector<int> orders, std::vector<Mat> generators, int rank);
  GaloisLattice(std::vector<int> orders, std::vector<Mat> generators);

  int rank() const { return rank_; }
  const std::vector<int>& orders() const { return orders_; }
  const std::vector<Mat>& generators() const { return gens_; }
  int group_order() const;

  // All group elements, indexed in mixed radix over the generator exponents.
  const std::vector<Mat>& elements() const { return elements_; }
  Mat norm() const;

 private:
  std::vector<int> orders_;
  std::vector<Mat> gens_;
  int rank_ = 0;
  std::vector<Mat> elements_;
};

GaloisLattice direct_sum(const GaloisLattice& a, const GaloisLattice& b);

// Z/B with B <= Z <= Z^n, both given by generating columns.
struct Subquotient {
  Mat numerator;
  Mat denominator;
};

FiniteAbelianGroup structure(const Subquotient& q);
// Kernel of the map src -> dst induced by f : Z^n -> Z^m (f must be well defined).
FiniteAbelianGroup induced_kernel(const Mat& f, const Subquotient& src, const Subquotient& dst);

// Tate cohomology in degree -1 or 0 of the module Z^n / L (L given by G-stable
// generating columns; pass an n x 0 matrix for the lattice itself).
Subquotient tate_subquotient(const GaloisLattice& M, const Mat& L, int degree);
FiniteAbelianGroup tate_cohomology(const GaloisLattice& M, int degree);
FiniteAbelianGroup tate_cohomology(const GaloisLattice& M, const Mat& L, int degree);
// H^1 from the presentation <s_i | s_i^{m_i}, [s_i, s_j]>.
FiniteAbelianGroup group_cohomology_h1(const GaloisLattice& M, const Mat& L);

Mat augmentation_image(const GaloisLattice& M);
FiniteAbelianGroup coinvariants(const GaloisLattice& M);
// tors(M_G) = sat(I_G M) / I_G M
Subquotient coinvariant_torsion(const GaloisLattice& M);

// ---- tori split by a biquadratic K/F with Gal(K/F) = <sigma, tau> ----
// sigma fixes E1, tau fixes E, sigma*tau fixes E2.
enum class DiamondField { F, E, E1, E2, K };
enum class Level { F, E };

std::string to_string(DiamondField f);
// Gal(K/M) as a set of element masks (bit 0 sigma, bit 1 tau).
std::vector<int> galois_subgroup(DiamondField M);
bool contains(DiamondField big, DiamondField small);

struct TorusExpr {
  enum class Kind { gm, u1, res, prod };
  Kind kind = Kind::gm;
  DiamondField over = DiamondField::F;
  DiamondField split = DiamondField::F;  // u1: the quadratic extension L of `over`
  std::vector<TorusExpr> children;

  static TorusExpr gm(DiamondField over = DiamondField::F);
  static TorusExpr u1(DiamondField L, DiamondField over = DiamondField::F);
  static TorusExpr res(DiamondField base, TorusExpr t);
  static TorusExpr prod(std::vector<TorusExpr> factors);

  int rank() const;
  std::string to_string() const;
};

// Lattice with the action of Gal(K/over).
GaloisLattice cocharacter_lattice_over(const TorusExpr& S);
// S over F viewed at level F (Gal(K/F)) or E (Gal(K/E)).
GaloisLattice cocharacter_lattice(const TorusExpr& S, Level level);
FiniteAbelianGroup component_group_dual(const TorusExpr& S, Level level);
// S(F) / Nm_{E/F} S(E)
FiniteAbelianGroup norm_quotient(const TorusExpr& S);

struct TorusVerdict {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
};

TorusVerdict prasad_torus_identity(const TorusExpr& S);

std::vector<TorusExpr> torus_catalog_generators();
// Catalog generators and their products of total rank <= max_rank.
std::vector<TorusExpr> torus_catalog(int max_rank = 3);

}  // namespace prasad
