#pragma once

#include <Eigen/Dense>

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prasad {

class InvalidRootSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sym { asym, sym_ur, sym_r };
enum class Deg { one, two_ur, two_r };

std::string to_string(Sym s);  // "asym", "sym ur", "sym r"
std::string to_string(Deg d);  // "1", "2 ur", "2 r"
Sym sym_from(bool symmetric, bool ramified);
Deg deg_from(int degree, bool ramified);

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  // Z/n_0 x Z/n_1 x ..., element index in mixed radix (first factor fastest).
  static FiniteGroup abelian(const std::vector<int>& orders);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int element_order(int a) const;
  // Sorted elements of the subgroup generated by gens.
  std::vector<int> generated(const std::vector<int>& gens) const;
  std::vector<std::vector<int>> subgroups() const;
  bool is_normal(const std::vector<int>& H) const;

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

using Subgroup = std::vector<int>;  // sorted element indices
using RootVector = Eigen::VectorXi;
using SignedPermMatrix = Eigen::MatrixXi;

// I normal, cyclic, with cyclic quotient: the shape of a tame inertia group.
bool is_tame_inertia(const FiniteGroup& Q, const Subgroup& I);

// Roots in Z^n with a finite quotient Q of the Galois group acting through
// signed permutations. Q_E (index 2) is the image of the Galois group of E, and
// the optional inertia subgroup realizes the fields: for fixed fields
// L' of H' inside L of H, e(L'/L) = |H cap I| / |H' cap I|.
struct TwistedRootSystem {
  std::vector<RootVector> roots;
  FiniteGroup group;
  std::vector<SignedPermMatrix> action;
  std::vector<bool> in_E;
  std::vector<bool> inertia;  // empty: no field realization, every edge reported unramified

  void validate() const;
  int root_index(const RootVector& v) const;  // -1 if absent
  int act(int g, int root) const;
  int negative(int root) const;
  bool in_inertia(int g) const { return !inertia.empty() && inertia[g]; }
  bool E_ramified() const;
  // e of the fixed-field edge H_small -> H_big (H_small inside H_big).
  int ramification(const Subgroup& H_big, const Subgroup& H_small) const;

  // Closure of generating signed permutations; off_E[i] says whether
  // generator i lies outside Q_E. Throws if that does not define an index-2 subgroup.
  static TwistedRootSystem from_generators(std::vector<RootVector> roots,
                                           const std::vector<SignedPermMatrix>& gens,
                                           const std::vector<bool>& off_E);
};

struct OrbitRecord {
  int rep = 0;
  std::vector<int> orbit_F;  // Q-orbit of rep
  std::vector<int> orbit_E;  // Q_E-orbit of rep
  bool symmetric_F = false;
  bool symmetric_E = false;
  bool splits_over_E = false;  // orbit_F is a union of two Q_E-orbits
  Subgroup stab;               // fixes F_alpha
  Subgroup stab_pm;            // fixes F_{+-alpha}
  Subgroup stab_E;             // fixes E_alpha
  Subgroup stab_E_pm;          // fixes E_{+-alpha}
  Sym sym_F = Sym::asym;
  Sym sym_E = Sym::asym;
  Deg deg_EaFa = Deg::one;

  int degree_F_Fa(int group_order) const { return group_order / static_cast<int>(stab.size()); }
};

// One record per orbit of Q x {+-1}.
std::vector<OrbitRecord> classify_orbits(const TwistedRootSystem& R);

// gamma * alpha = gamma . alpha on Q_E and -gamma . alpha off Q_E.
TwistedRootSystem op_twist(const TwistedRootSystem& R);

struct TowerEdge {
  int degree = 1;
  bool ramified = false;
  bool operator==(const TowerEdge&) const = default;
};

struct TowerDescriptor {
  Subgroup F_a, F_pm, E_a, E_pm, F_op;
  TowerEdge Fa_over_Fpm, Ea_over_Fa, Ea_over_Epm, Epm_over_Fpm, Fop_over_Fpm, Ea_over_Fop;
  bool biquadratic = false;  // E_alpha / F_{+-alpha} with distinct F_alpha, E_{+-alpha}
  Sym sym_Fop = Sym::asym;
  Deg deg_EaFop = Deg::one;
};

TowerDescriptor tower_of(const TwistedRootSystem& R, const OrbitRecord& rec);

// Class of a root orbit as indexed in the tables: ([E_a:F_a], /F, /E).
struct ClassKey {
  Deg deg_EaFa = Deg::one;
  Sym sym_F = Sym::asym;
  Sym sym_E = Sym::asym;
  auto operator<=>(const ClassKey&) const = default;
};

std::string to_string(const ClassKey& k);

struct Table5Row {
  ClassKey key;
  Sym sym_Fop = Sym::asym;
  Deg deg_EaFop = Deg::one;
  bool operator==(const Table5Row&) const = default;
};

const std::array<Table5Row, 10>& table5_builtin();

// Orbit of a single pair {+-alpha} induced from H_pm with stabilizer H_a, plus
// a regular-representation block so the action is faithful.
TwistedRootSystem induced_root_system(const FiniteGroup& Q, const Subgroup& H_pm, const Subgroup& H_a,
                                      const std::vector<bool>& in_E, const std::vector<bool>& inertia);

struct Realization {
  TwistedRootSystem system;
  ClassKey key;
  bool ef_ram = false;
  Sym sym_Fop = Sym::asym;
  Deg deg_EaFop = Deg::one;
};

// All induced rank-one orbits over tamely ramified abelian 2-group quotients
// (Q cyclic-by-cyclic, |Q| <= 16), one per distinct (key, ef_ram, op data).
const std::vector<Realization>& realizations();

struct Table5Diff {
  ClassKey key;
  std::string message;
};

// Recomputes alpha^op data for each class from its realizations and compares
// with the built-in Table 5.
std::vector<Table5Diff> table5_check(const std::vector<ClassKey>& classes);

struct GlnOrbitParity {
  int count_orbits = 0;
  int count_sym_orbits = 0;
  bool parity_ok = false;
};

// Roots e_i - e_j of GL_n with Q = Z/2n acting through rotation of the
// coordinates (an unramified cyclic splitting field) and Q_E = 2Z/2n.
TwistedRootSystem gln_root_system(int n);
GlnOrbitParity gln_orbit_parity(int n);

}  // namespace prasad
