#include "prasad/padic_fields.hpp"

#include <algorithm>
#include <vector>

namespace prasad {

LocalFieldDesc make_base(int p) {
  if (!is_odd_prime(p)) throw NonOddPrime("p = " + std::to_string(p) + " is not an odd prime");
  return {p, 1, 1, "Q" + std::to_string(p)};
}

std::string SquareClass::name() const {
  static const char* names[] = {"1", "u", "pi", "u*pi"};
  return names[index()];
}

std::array<SquareClass, 4> all_square_classes() {
  return {SquareClass::one(), SquareClass::unit(), SquareClass::uniformizer(), SquareClass::unit_uniformizer()};
}

static void check_field(const LocalFieldDesc& F) {
  if (!is_odd_prime(F.p)) throw NonOddPrime("p = " + std::to_string(F.p) + " is not an odd prime");
  if (F.e < 1 || F.f < 1) throw InvalidExtension("e and f must be positive");
}

std::array<ClassRepresentative, 4> square_classes(const LocalFieldDesc& F) {
  check_field(F);
  FiniteField k(F.residue_order());
  FiniteField::Elem u = k.canonical_nonsquare();
  std::array<ClassRepresentative, 4> out;
  for (SquareClass c : all_square_classes())
    out[c.index()] = {c, c.val_odd ? 1 : 0, c.unit_nonsquare ? u : k.one()};
  return out;
}

SquareClass minus_one_class(const LocalFieldDesc& F) {
  return {false, F.residue_order() % 4 == 3};
}

// (pi^a u^x, pi^b u^y) = (-1)^{ab(q-1)/2} (-1)^{xb} (-1)^{ya}
Sign hilbert_symbol(const LocalFieldDesc& F, SquareClass a, SquareClass b) {
  check_field(F);
  long long eps = ((F.residue_order() - 1) / 2) % 2;
  long long e = (a.val_odd && b.val_odd ? eps : 0) + (a.unit_nonsquare && b.val_odd ? 1 : 0) +
                (b.unit_nonsquare && a.val_odd ? 1 : 0);
  return sign_from_parity(e);
}

LocalFieldDesc QuadExtDesc::field() const {
  LocalFieldDesc r = base;
  if (ramified())
    r.e *= 2;
  else
    r.f *= 2;
  r.label = label.empty() ? base.label + "(sqrt " + disc.name() + ")" : label;
  return r;
}

QuadExtDesc make_quadratic(const LocalFieldDesc& base, SquareClass disc, std::string label) {
  check_field(base);
  if (disc.trivial()) throw InvalidExtension("trivial discriminant class");
  return {base, disc, disc.val_odd ? ExtKind::ramified : ExtKind::unramified, std::move(label)};
}

std::array<QuadExtDesc, 3> quadratic_extensions(const LocalFieldDesc& F) {
  return {make_quadratic(F, SquareClass::unit()), make_quadratic(F, SquareClass::uniformizer()),
          make_quadratic(F, SquareClass::unit_uniformizer())};
}

SquareClass class_of(const FiniteField& kF, const LocalElement& t) {
  if (t.unit == 0) throw std::domain_error("unit part must be nonzero");
  return {t.valuation % 2 != 0, !kF.is_square(t.unit)};
}

Sign omega_quadratic(const QuadExtDesc& E, const FiniteField& kF, const LocalElement& t) {
  if (kF.order() != E.base.residue_order()) throw std::invalid_argument("residue field does not match base");
  if (t.unit == 0) throw std::domain_error("unit part must be nonzero");
  if (!E.ramified()) return sign_from_parity(t.valuation);
  // omega(pi) from omega(disc) = omega(-1), disc = pi * u^delta
  std::int64_t half = (kF.order() - 1) / 2;
  Sign omega_minus_one = sign_from_parity(half);
  Sign omega_u = sgn_units(kF, kF.canonical_nonsquare());
  Sign omega_pi = omega_minus_one * (E.disc.unit_nonsquare ? omega_u : Sign::plus);
  Sign r = sgn_units(kF, t.unit);
  if (t.valuation % 2 != 0) r *= omega_pi;
  return r;
}

SquareClass restrict_class(const QuadExtDesc& E, SquareClass c) {
  if (!E.ramified()) return {c.val_odd, false};
  // pi = pi_E^2 u^{-delta}
  bool delta = E.disc.unit_nonsquare;
  return {false, c.unit_nonsquare != (delta && c.val_odd)};
}

int BiquadraticDiamond::unramified_index() const {
  for (int i = 0; i < 3; ++i)
    if (!lower_ramified[i]) return i;
  return -1;
}

BiquadraticDiamond biquadratic_diamond(const QuadExtDesc& E1, const QuadExtDesc& E2) {
  if (!(E1.base == E2.base)) throw InvalidExtension("quadratic extensions over different bases");
  if (E1.disc == E2.disc) throw InvalidExtension("biquadratic diamond needs E1 != E2");
  BiquadraticDiamond d;
  d.base = E1.base;
  d.middle = {E1, E2, make_quadratic(E1.base, E1.disc * E2.disc)};
  int e = 1, f = 1;
  for (const auto& m : d.middle) {
    LocalFieldDesc M = m.field();
    e = std::max(e, M.e / d.base.e);
    f = std::max(f, M.f / d.base.f);
  }
  // [K:F] = 4 = e*f for the top, and e, f <= 2 since the residue and value groups are tame
  if (e * f != 4) throw InvalidExtension("inconsistent diamond");
  d.top = d.base;
  d.top.e *= e;
  d.top.f *= f;
  d.top.label = d.base.label + "(biquad)";
  for (int i = 0; i < 3; ++i) {
    LocalFieldDesc M = d.middle[i].field();
    d.lower_ramified[i] = M.e != d.base.e;
    d.upper_ramified[i] = d.top.e != M.e;
  }
  return d;
}

Sign lambda_unramified(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  return sign_from_parity(n - 1);
}

Sign lambda_unramified_tower(const std::vector<int>& degrees) {
  // lambda_{K/F} = lambda_{K/E} * lambda_{E/F}^{[K:E]}
  Sign r = Sign::plus;
  for (int n : degrees) r = (n % 2 == 0 ? Sign::plus : r) * lambda_unramified(n);
  return r;
}

static Sign lambda_edge(LambdaEdge e) {
  if (e.degree == 1) return Sign::plus;
  if (e.degree != 2) throw InvalidExtension("lambda edges are quadratic or trivial");
  if (e.ramified) throw InvalidExtension("ramified lambda constants are not supported");
  return lambda_unramified(2);
}

Sign lambda_ratio(LambdaEdge sq_side, LambdaEdge edge) {
  Sign s = lambda_edge(sq_side);
  return (s * s) * lambda_edge(edge);
}

Sign zeta_lambda_ratio(const BiquadraticDiamond& d, int e_pm_index, int f_op_index) {
  if (e_pm_index < 0 || e_pm_index > 2 || f_op_index < 0 || f_op_index > 2 || e_pm_index == f_op_index)
    throw InvalidExtension("bad diamond roles");
  if (!d.upper_ramified[e_pm_index] || d.upper_ramified[f_op_index])
    throw InvalidExtension("diamond does not match the E_alpha/E_pm ramified, E_alpha/F_op unramified pattern");
  // lambda_{Fop/F}^2 / lambda_{Ea/Epm} = lambda_{Epm/F}^2 / lambda_{Ea/Fop}
  LambdaEdge sq_side{2, d.lower_ramified[e_pm_index]};
  LambdaEdge edge{2, d.upper_ramified[f_op_index]};
  return lambda_ratio(sq_side, edge);
}

}  // namespace prasad
