#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "prasad/padic_fields.hpp"
#include "prasad/residue_fields.hpp"
#include "prasad/root_orbits.hpp"
#include "prasad/sign.hpp"

namespace prasad {

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Quadratic characters of S(F) attached to one root orbit, all composed with alpha.
enum class Basis : unsigned {
  sgn_units_Ea = 1,     // sgn of k_{E_a}^x
  sgn_units_Fa = 2,     // sgn of k_{F_a}^x
  sgn_norm_one_Ea = 4,  // sgn of k_{E_a}^1
  omega_EaFa = 8,       // omega_{E_a/F_a} after iota_{F_a}
};

inline constexpr std::array<Basis, 4> kAllBases{Basis::sgn_units_Ea, Basis::sgn_units_Fa, Basis::sgn_norm_one_Ea,
                                                Basis::omega_EaFa};

std::string to_string(Basis b);

// Formal product of basis characters; every basis character is quadratic, so
// exponents live in Z/2.
class CharContribution {
 public:
  constexpr CharContribution() = default;
  static constexpr CharContribution trivial() { return {}; }
  static constexpr CharContribution of(Basis b) { return CharContribution(static_cast<unsigned>(b)); }

  constexpr bool is_trivial() const { return mask_ == 0; }
  constexpr bool has(Basis b) const { return (mask_ & static_cast<unsigned>(b)) != 0; }
  constexpr unsigned mask() const { return mask_; }
  std::string to_string() const;  // "1" or factors joined by " * "

  friend constexpr CharContribution operator*(CharContribution a, CharContribution b) {
    return CharContribution(a.mask_ ^ b.mask_);
  }
  CharContribution& operator*=(CharContribution o) {
    mask_ ^= o.mask_;
    return *this;
  }
  constexpr bool operator==(const CharContribution&) const = default;

 private:
  constexpr explicit CharContribution(unsigned m) : mask_(m) {}
  unsigned mask_ = 0;
};

struct RootOrbitConfig {
  Sym sym_F = Sym::asym;
  Sym sym_E = Sym::asym;
  Sym sym_Fop = Sym::asym;
  Deg deg_EaFa = Deg::one;
  Deg deg_EaFaop = Deg::one;
  bool ef_ram = false;
  bool in_phi_half = false;  // alpha in Phi_{r/2}
  bool ord_zero = false;     // gate of the toral-invariant factor

  ClassKey key() const { return {deg_EaFa, sym_F, sym_E}; }
  // Row of the class in the comparison table (1..10).
  int table_class() const;
  std::string to_string() const;
  bool operator==(const RootOrbitConfig&) const = default;
};

// Throws InvalidConfig unless the stored alpha^op data agree with the tower
// lemmas and the invariants on (sym_F, sym_E, deg, ef_ram) hold.
void check_consistent(const RootOrbitConfig& cfg);

// Gate values allowed for a class and E/F type.
std::vector<bool> allowed_phi_half(const ClassKey& key);

// All consistent classes with every allowed gating assignment, sorted.
std::vector<RootOrbitConfig> enumerate_configs();

// Distinct class keys among the enumerated configs.
std::vector<ClassKey> enumerate_classes();

// The configs of one class, with the given E/F type and gates forced.
RootOrbitConfig class_config(const ClassKey& key, bool ef_ram, bool in_phi_half, bool ord_zero);

CharContribution prasad_contribution(const RootOrbitConfig& cfg);
CharContribution kaletha_contribution(const RootOrbitConfig& cfg);
CharContribution hakim_contribution(const RootOrbitConfig& cfg);
CharContribution zeta_contribution(const RootOrbitConfig& cfg);

// sgn of k_{E_a}^x equals sgn of k_{F_a}^x when the residue fields agree.
CharContribution rewrite(CharContribution c, const RootOrbitConfig& cfg);

// (a, b) over E_{+-alpha}, with E_alpha = E_{+-alpha}(sqrt a).
Sign toral_invariant(const LocalFieldDesc& E_pm, SquareClass a, SquareClass b);

enum class Status { symbolic_equal, needs_element_check, mismatch };
std::string to_string(Status s);

struct Verdict {
  CharContribution product;
  CharContribution zeta;
  Status status = Status::mismatch;
  std::string scenario;  // case study that settles a NeedsElementCheck
};

Verdict conjecture_check(const RootOrbitConfig& cfg);

// Residue-level model of the tower for a root orbit over F_{+-alpha} = Q_p.
// A sample is s = pi_{F_a}^v [x] in F_a^x, x in k_{F_a}^x (embedded in F_{p^2});
// alpha(t) = s / tau(s) for symmetric alpha and s otherwise.
struct ResidueSample {
  int valuation = 0;
  QuadraticExtension::Elem unit;
};

class ResidueModel {
 public:
  ResidueModel(const RootOrbitConfig& cfg, int p);

  const RootOrbitConfig& config() const { return cfg_; }
  std::int64_t residue_order_Fa() const;
  std::int64_t residue_order_Ea() const;
  std::vector<ResidueSample> samples() const;
  // alpha(t) as (valuation, residue of the unit part).
  ResidueSample alpha(const ResidueSample& s) const;
  // Throws InvalidConfig when the basis character is undefined on this tower.
  Sign eval(Basis b, const ResidueSample& s) const;
  Sign eval(CharContribution c, const ResidueSample& s) const;

 private:
  RootOrbitConfig cfg_;
  int p_;
  FiniteField kF_;
  QuadraticExtension k2_;
};

// Built-in tables and their regeneration.
struct TableData {
  int number = 0;
  std::string caption;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

const TableData& builtin_table(int number);  // 1..5
TableData regenerate_table(int number);

}  // namespace prasad
