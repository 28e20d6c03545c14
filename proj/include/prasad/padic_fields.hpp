#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prasad/residue_fields.hpp"
#include "prasad/sign.hpp"

namespace prasad {

class NonOddPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidExtension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite tame extension of Q_p described by (p, e, f).
struct LocalFieldDesc {
  int p = 0;
  int e = 1;
  int f = 1;
  std::string label;

  std::int64_t residue_order() const { return ipow(p, f); }
  bool operator==(const LocalFieldDesc& o) const { return p == o.p && e == o.e && f == o.f; }
};

LocalFieldDesc make_base(int p);

// Class in F^x/(F^x)^2 = (valuation mod 2, unit part non-square).
struct SquareClass {
  bool val_odd = false;
  bool unit_nonsquare = false;

  static constexpr SquareClass one() { return {false, false}; }
  static constexpr SquareClass unit() { return {false, true}; }
  static constexpr SquareClass uniformizer() { return {true, false}; }
  static constexpr SquareClass unit_uniformizer() { return {true, true}; }

  bool trivial() const { return !val_odd && !unit_nonsquare; }
  int index() const { return (val_odd ? 2 : 0) + (unit_nonsquare ? 1 : 0); }
  std::string name() const;

  friend SquareClass operator*(SquareClass a, SquareClass b) {
    return {a.val_odd != b.val_odd, a.unit_nonsquare != b.unit_nonsquare};
  }
  bool operator==(const SquareClass&) const = default;
};

std::array<SquareClass, 4> all_square_classes();

// Canonical representative pi^v * [unit]; the unit is an element of k_F.
struct ClassRepresentative {
  SquareClass cls;
  int valuation = 0;
  FiniteField::Elem unit = 1;
};

std::array<ClassRepresentative, 4> square_classes(const LocalFieldDesc& F);

// Class of -1: a unit, non-square iff q = 3 mod 4.
SquareClass minus_one_class(const LocalFieldDesc& F);

Sign hilbert_symbol(const LocalFieldDesc& F, SquareClass a, SquareClass b);

enum class ExtKind { unramified, ramified };

struct QuadExtDesc {
  LocalFieldDesc base;
  SquareClass disc;
  ExtKind kind = ExtKind::unramified;
  std::string label;

  bool ramified() const { return kind == ExtKind::ramified; }
  LocalFieldDesc field() const;
};

QuadExtDesc make_quadratic(const LocalFieldDesc& base, SquareClass disc, std::string label = {});
std::array<QuadExtDesc, 3> quadratic_extensions(const LocalFieldDesc& F);

// t = pi^valuation * [unit] * (principal unit); unit is a nonzero element of k_F.
struct LocalElement {
  int valuation = 0;
  FiniteField::Elem unit = 1;
};

SquareClass class_of(const FiniteField& kF, const LocalElement& t);

// omega_{E/F}(t); kF must be the residue field of E.base.
Sign omega_quadratic(const QuadExtDesc& E, const FiniteField& kF, const LocalElement& t);

// Image of a square class of F in E^x/(E^x)^2, w.r.t. the canonical uniformizer
// of E (pi_F if unramified, sqrt(disc) if ramified).
SquareClass restrict_class(const QuadExtDesc& E, SquareClass c);

struct BiquadraticDiamond {
  LocalFieldDesc base;
  std::array<QuadExtDesc, 3> middle;
  LocalFieldDesc top;
  std::array<bool, 3> lower_ramified{};  // middle[i] / base
  std::array<bool, 3> upper_ramified{};  // top / middle[i]
  int unramified_index() const;
};

BiquadraticDiamond biquadratic_diamond(const QuadExtDesc& E1, const QuadExtDesc& E2);

Sign lambda_unramified(int n);
// lambda of a tower of unramified steps of the given degrees, by the chain rule.
Sign lambda_unramified_tower(const std::vector<int>& degrees);

// One edge of a lambda chain: degree 1 (collapsed) or 2.
struct LambdaEdge {
  int degree = 2;
  bool ramified = false;
};

// lambda(sq_side)^2 / lambda(edge), both edges unramified or trivial.
Sign lambda_ratio(LambdaEdge sq_side, LambdaEdge edge);

// Roles in the diamond over F_{+-alpha}: which middle field is E_{+-alpha}
// and which is F_{alpha^op}; the top is E_alpha.
Sign zeta_lambda_ratio(const BiquadraticDiamond& d, int e_pm_index, int f_op_index);

}  // namespace prasad
