#include "prasad/residue_fields.hpp"

#include <string>

namespace prasad {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimePower factor_prime_power(std::int64_t q) {
  if (q < 3) throw InvalidFieldOrder("field order " + std::to_string(q) + " is not an odd prime power");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  int d = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++d;
  }
  if (r != 1 || p == 2) throw InvalidFieldOrder("field order " + std::to_string(q) + " is not an odd prime power");
  return {static_cast<int>(p), d};
}

FiniteField::FiniteField(std::int64_t q) : q_(q) {
  if (q > kMaxOrder) throw InvalidFieldOrder("field order " + std::to_string(q) + " exceeds bound");
  PrimePower pp = factor_prime_power(q);
  p_ = pp.p;
  d_ = pp.d;

  // Search monic polynomials of degree d for one with X primitive.
  std::vector<int> f(d_ + 1, 0);
  f[d_] = 1;
  bool found = false;
  for (std::int64_t code = 1; code < q_ && !found; ++code) {
    std::int64_t c = code;
    for (int i = 0; i < d_; ++i) {
      f[i] = static_cast<int>(c % p_);
      c /= p_;
    }
    if (f[0] == 0) continue;
    modulus_ = f;
    std::vector<int> cur(d_, 0);
    cur[0] = 1;
    std::vector<Elem> table;
    table.reserve(q_);
    table.push_back(1);
    bool ok = true;
    for (std::int64_t k = 1; k < q_; ++k) {
      int top = cur[d_ - 1];
      for (int i = d_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < d_; ++i) cur[i] = ((cur[i] - top * f[i]) % p_ + p_) % p_;
      Elem e = encode(cur);
      if (e == 1 && k < q_ - 1) {
        ok = false;
        break;
      }
      if (e == 0) {
        ok = false;
        break;
      }
      table.push_back(e);
    }
    if (ok && table.back() == 1) {
      exp_ = std::move(table);
      found = true;
    }
  }
  if (!found) throw InvalidFieldOrder("no primitive polynomial found");
  log_.assign(q_, -1);
  for (std::int64_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;

  if (d_ == 1) {
    for (Elem a = 2; a < static_cast<Elem>(p_); ++a)
      if (!is_square(a)) {
        nonsquare_ = a;
        break;
      }
  } else {
    nonsquare_ = generator();
  }
}

std::vector<int> FiniteField::digits(Elem a) const {
  std::vector<int> c(d_, 0);
  for (int i = 0; i < d_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

FiniteField::Elem FiniteField::encode(const std::vector<int>& c) const {
  Elem r = 0;
  for (int i = d_ - 1; i >= 0; --i) r = r * p_ + static_cast<Elem>(c[i]);
  return r;
}

FiniteField::Elem FiniteField::from_int(std::int64_t n) const {
  return static_cast<Elem>(((n % p_) + p_) % p_);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (d_ == 1) return (a + b) % p_;
  Elem r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (d_ == 1) return (p_ - a) % p_;
  Elem r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  std::int64_t m = ((log_[a] * (k % (q_ - 1))) % (q_ - 1) + (q_ - 1)) % (q_ - 1);
  return exp_[m];
}

std::int64_t FiniteField::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

FiniteField::Elem FiniteField::exp(std::int64_t k) const { return exp_[((k % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }

FiniteField::Elem FiniteField::canonical_nonsquare() const { return nonsquare_; }

bool FiniteField::is_square(Elem a) const { return a == 0 || log_[a] % 2 == 0; }

std::vector<FiniteField::Elem> FiniteField::units() const {
  std::vector<Elem> r;
  r.reserve(q_ - 1);
  for (Elem a = 1; a < static_cast<Elem>(q_); ++a) r.push_back(a);
  return r;
}

FiniteField::Elem FiniteField::mul_poly(Elem a, Elem b) const {
  std::vector<int> x = digits(a), y = digits(b);
  std::vector<long long> prod(2 * d_, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) prod[i + j] += static_cast<long long>(x[i]) * y[j];
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    long long t = prod[k] % p_;
    prod[k] = 0;
    for (int i = 0; i < d_; ++i) prod[k - d_ + i] -= t * modulus_[i];
  }
  std::vector<int> c(d_);
  for (int i = 0; i < d_; ++i) c[i] = static_cast<int>(((prod[i] % p_) + p_) % p_);
  return encode(c);
}

Sign sgn_units(const FiniteField& k, FiniteField::Elem x) {
  if (x == 0) throw std::domain_error("sgn of zero");
  FiniteField::Elem r = k.pow(x, (k.order() - 1) / 2);
  return r == k.one() ? Sign::plus : Sign::minus;
}

QuadraticExtension::QuadraticExtension(const FiniteField& base) : base_(base), u_(base.canonical_nonsquare()) {}

QuadraticExtension::Elem QuadraticExtension::add(Elem x, Elem y) const {
  return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
}

QuadraticExtension::Elem QuadraticExtension::mul(Elem x, Elem y) const {
  auto& k = base_;
  return {k.add(k.mul(x.a, y.a), k.mul(u_, k.mul(x.b, y.b))), k.add(k.mul(x.a, y.b), k.mul(x.b, y.a))};
}

QuadraticExtension::Elem QuadraticExtension::frobenius(Elem x) const { return {x.a, base_.neg(x.b)}; }

FiniteField::Elem QuadraticExtension::norm(Elem x) const {
  auto& k = base_;
  return k.sub(k.mul(x.a, x.a), k.mul(u_, k.mul(x.b, x.b)));
}

FiniteField::Elem QuadraticExtension::trace(Elem x) const { return base_.add(x.a, x.a); }

QuadraticExtension::Elem QuadraticExtension::inv(Elem x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero");
  FiniteField::Elem n = base_.inv(norm(x));
  Elem c = frobenius(x);
  return {base_.mul(c.a, n), base_.mul(c.b, n)};
}

QuadraticExtension::Elem QuadraticExtension::pow(Elem x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

std::vector<QuadraticExtension::Elem> QuadraticExtension::units() const {
  std::vector<Elem> r;
  auto q = static_cast<FiniteField::Elem>(base_.order());
  for (FiniteField::Elem a = 0; a < q; ++a)
    for (FiniteField::Elem b = 0; b < q; ++b)
      if (a != 0 || b != 0) r.push_back({a, b});
  return r;
}

std::vector<QuadraticExtension::Elem> QuadraticExtension::norm_one() const {
  std::vector<Elem> r;
  for (const Elem& x : units())
    if (norm(x) == base_.one()) r.push_back(x);
  return r;
}

Sign sgn_units(const QuadraticExtension& k2, QuadraticExtension::Elem x) {
  if (k2.is_zero(x)) throw std::domain_error("sgn of zero");
  return k2.pow(x, (k2.order() - 1) / 2) == k2.one() ? Sign::plus : Sign::minus;
}

Sign sgn_norm_one(const QuadraticExtension& k2, QuadraticExtension::Elem x) {
  if (k2.norm(x) != k2.base().one()) throw std::domain_error("element is not of norm one");
  return k2.pow(x, (k2.base().order() + 1) / 2) == k2.one() ? Sign::plus : Sign::minus;
}

CyclicFieldModel::CyclicFieldModel(std::int64_t q, int n) : q_(q), n_(n) {
  factor_prime_power(q);
  if (n < 1) throw InvalidFieldOrder("extension degree must be positive");
  Q_ = 1;
  for (int i = 0; i < n; ++i) {
    if (Q_ > (std::int64_t{1} << 40) / q) throw InvalidFieldOrder("cyclic model too large");
    Q_ *= q;
  }
}

std::int64_t CyclicFieldModel::reduce(std::int64_t m) const {
  std::int64_t g = Q_ - 1;
  return ((m % g) + g) % g;
}

std::int64_t CyclicFieldModel::pow(std::int64_t x, std::int64_t k) const {
  __int128 r = static_cast<__int128>(x) * k;
  return reduce(static_cast<std::int64_t>(r % (Q_ - 1)));
}

std::int64_t CyclicFieldModel::frobenius(std::int64_t x, int j) const {
  return pow(x, ipow(q_, ((j % n_) + n_) % n_));
}

std::int64_t CyclicFieldModel::norm_to(std::int64_t x, int k) const {
  if (k <= 0 || n_ % k != 0) throw std::invalid_argument("subfield degree must divide n");
  return pow(x, (Q_ - 1) / (ipow(q_, k) - 1));
}

bool CyclicFieldModel::in_subfield(std::int64_t x, int k) const {
  if (k <= 0 || n_ % k != 0) return false;
  return reduce(x) % ((Q_ - 1) / (ipow(q_, k) - 1)) == 0;
}

std::int64_t CyclicFieldModel::from_subfield(std::int64_t m, int k) const {
  return pow(m, (Q_ - 1) / (ipow(q_, k) - 1));
}

Sign CyclicFieldModel::sgn_units_sub(std::int64_t x, int k) const {
  if (!in_subfield(x, k)) throw std::domain_error("element not in subfield");
  return sign_from_parity(reduce(x) / ((Q_ - 1) / (ipow(q_, k) - 1)));
}

bool CyclicFieldModel::is_norm_one(std::int64_t x) const {
  if (n_ % 2 != 0) return false;
  return reduce(x) % (ipow(q_, n_ / 2) - 1) == 0;
}

Sign CyclicFieldModel::sgn_norm_one(std::int64_t x) const {
  if (!is_norm_one(x)) throw std::domain_error("element is not of norm one");
  return sign_from_parity(reduce(x) / (ipow(q_, n_ / 2) - 1));
}

}  // namespace prasad
