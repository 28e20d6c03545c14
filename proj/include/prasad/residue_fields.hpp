#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prasad/sign.hpp"

namespace prasad {

class InvalidFieldOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimePower {
  int p = 0;
  int d = 0;
};

// Returns {p, d} with q = p^d, or throws if q is not an odd prime power.
PrimePower factor_prime_power(std::int64_t q);

bool is_odd_prime(std::int64_t p);

// F_q = F_p[X]/(f) with f primitive. Elements are encoded as base-p digit
// strings of their polynomial-basis coordinates, so F_p sits in [0, p).
class FiniteField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::int64_t kMaxOrder = 10000;

  explicit FiniteField(std::int64_t q);

  std::int64_t order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return d_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::int64_t k) const;

  Elem generator() const { return exp_[1]; }
  std::int64_t log(Elem a) const;
  Elem exp(std::int64_t k) const;

  // Least positive non-residue when q = p, the primitive generator otherwise.
  Elem canonical_nonsquare() const;
  bool is_square(Elem a) const;
  std::vector<Elem> units() const;

  // Schoolbook multiplication mod f, independent of the log tables.
  Elem mul_poly(Elem a, Elem b) const;

 private:
  std::vector<int> digits(Elem a) const;
  Elem encode(const std::vector<int>& c) const;

  int p_ = 0;
  int d_ = 0;
  std::int64_t q_ = 0;
  std::vector<int> modulus_;  // monic, low to high, size d+1
  std::vector<Elem> exp_;
  std::vector<std::int64_t> log_;
  Elem nonsquare_ = 0;
};

// x^{(q-1)/2} for x in F_q^x.
Sign sgn_units(const FiniteField& k, FiniteField::Elem x);

// F_{q^2} = F_q[Y]/(Y^2 - u), u the canonical non-square of F_q.
class QuadraticExtension {
 public:
  struct Elem {
    FiniteField::Elem a = 0;
    FiniteField::Elem b = 0;
    bool operator==(const Elem&) const = default;
  };

  explicit QuadraticExtension(const FiniteField& base);

  const FiniteField& base() const { return base_; }
  std::int64_t order() const { return base_.order() * base_.order(); }

  Elem embed(FiniteField::Elem a) const { return {a, 0}; }
  Elem one() const { return {base_.one(), 0}; }
  Elem add(Elem x, Elem y) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::int64_t k) const;
  Elem frobenius(Elem x) const;
  FiniteField::Elem norm(Elem x) const;
  FiniteField::Elem trace(Elem x) const;
  bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }

  std::vector<Elem> units() const;
  std::vector<Elem> norm_one() const;

 private:
  FiniteField base_;
  FiniteField::Elem u_;
};

// x^{(q^2-1)/2} for x in F_{q^2}^x.
Sign sgn_units(const QuadraticExtension& k2, QuadraticExtension::Elem x);
// x^{(q+1)/2} for x with x^{q+1} = 1.
Sign sgn_norm_one(const QuadraticExtension& k2, QuadraticExtension::Elem x);

// F_{q^n}^x as Z/(q^n - 1), elements given by exponents of a fixed generator.
class CyclicFieldModel {
 public:
  CyclicFieldModel(std::int64_t q, int n);

  std::int64_t base_order() const { return q_; }
  int degree() const { return n_; }
  std::int64_t order() const { return Q_; }
  std::int64_t group_order() const { return Q_ - 1; }

  std::int64_t reduce(std::int64_t m) const;
  std::int64_t mul(std::int64_t x, std::int64_t y) const { return reduce(x + y); }
  std::int64_t pow(std::int64_t x, std::int64_t k) const;
  std::int64_t frobenius(std::int64_t x, int j = 1) const;
  // Norm to F_{q^k}, k | n.
  std::int64_t norm_to(std::int64_t x, int k) const;
  bool in_subfield(std::int64_t x, int k) const;
  // Element of the subfield F_{q^k} given by its exponent in that subfield.
  std::int64_t from_subfield(std::int64_t m, int k) const;

  Sign sgn_units(std::int64_t x) const { return sign_from_parity(x); }
  // Quadratic character of F_{q^k}^x evaluated on x in F_{q^k}.
  Sign sgn_units_sub(std::int64_t x, int k) const;
  // For n = 2k: x^{(q^k+1)/2} on the norm-one subgroup over F_{q^k}.
  Sign sgn_norm_one(std::int64_t x) const;
  bool is_norm_one(std::int64_t x) const;

 private:
  std::int64_t q_;
  int n_;
  std::int64_t Q_;
};

std::int64_t ipow(std::int64_t base, int exp);

}  // namespace prasad
