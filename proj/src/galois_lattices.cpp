#include "prasad/galois_lattices.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prasad {

std::int64_t FiniteAbelianGroup::order() const {
  if (free_rank != 0) throw std::domain_error("infinite group has no order");
  std::int64_t n = 1;
  for (auto d : invariant_factors) n = detail::checked_mul(n, d);
  return n;
}

std::int64_t FiniteAbelianGroup::count_killed_by(std::int64_t m) const {
  std::int64_t n = 1;
  for (auto d : invariant_factors) n *= std::gcd(d, m);
  return n;
}

std::string FiniteAbelianGroup::to_string() const {
  if (trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (auto d : invariant_factors) {
    if (!first) os << " x ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n) {
  FiniteAbelianGroup g;
  if (n > 1) g.invariant_factors.push_back(n);
  return g;
}

FiniteAbelianGroup cokernel(const Mat& C) {
  auto s = smith_normal_form(C);
  FiniteAbelianGroup g;
  for (auto d : s.diagonal())
    if (d > 1) g.invariant_factors.push_back(d);
  g.free_rank = static_cast<int>(C.rows() - s.rank);
  return g;
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  std::vector<std::int64_t> all = a.invariant_factors;
  all.insert(all.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  Mat D = Mat::Zero(all.size(), all.size());
  for (size_t i = 0; i < all.size(); ++i) D(i, i) = all[i];
  FiniteAbelianGroup g = cokernel(D);
  g.free_rank = a.free_rank + b.free_rank;
  return g;
}

static bool is_unimodular(const Mat& g) {
  if (g.rows() != g.cols()) return false;
  auto s = smith_normal_form(g);
  if (s.rank != g.rows()) return false;
  for (auto d : s.diagonal())
    if (d != 1) return false;
  return true;
}

GaloisLattice::GaloisLattice(std::vector<int> orders, std::vector<Mat> generators)
    : GaloisLattice(orders, generators, generators.empty() ? 0 : static_cast<int>(generators.front().rows())) {}

GaloisLattice::GaloisLattice(std::vector<int> orders, std::vector<Mat> generators, int rank)
    : orders_(std::move(orders)), gens_(std::move(generators)), rank_(rank) {
  if (orders_.size() != gens_.size()) throw InvalidLattice("one order per generator required");
  const Mat I = Mat::Identity(rank_, rank_);
  for (size_t i = 0; i < gens_.size(); ++i) {
    const Mat& g = gens_[i];
    if (g.rows() != rank_ || g.cols() != rank_) throw InvalidLattice("generator has wrong shape");
    if (orders_[i] < 1) throw InvalidLattice("generator order must be positive");
    if (!is_unimodular(g)) throw InvalidLattice("generator matrix is not invertible over Z");
    Mat p = I;
    for (int k = 0; k < orders_[i]; ++k) p = p * g;
    if (p != I) throw InvalidLattice("generator does not satisfy its order relation");
    for (size_t j = 0; j < i; ++j)
      if (g * gens_[j] != gens_[j] * g) throw InvalidLattice("generators do not commute");
  }
  elements_.push_back(I);
  for (size_t i = 0; i < gens_.size(); ++i) {
    std::vector<Mat> next;
    Mat p = I;
    for (int k = 0; k < orders_[i]; ++k) {
      for (const Mat& e : elements_) next.push_back(p * e);
      p = p * gens_[i];
    }
    elements_ = std::move(next);
  }
}

int GaloisLattice::group_order() const {
  int n = 1;
  for (int m : orders_) n *= m;
  return n;
}

Mat GaloisLattice::norm() const {
  Mat N = Mat::Zero(rank_, rank_);
  for (const Mat& e : elements_) N += e;
  return N;
}

GaloisLattice direct_sum(const GaloisLattice& a, const GaloisLattice& b) {
  if (a.orders() != b.orders()) throw InvalidLattice("direct sum needs the same group presentation");
  std::vector<Mat> gens;
  const int n = a.rank() + b.rank();
  for (size_t i = 0; i < a.generators().size(); ++i) {
    Mat g = Mat::Zero(n, n);
    g.topLeftCorner(a.rank(), a.rank()) = a.generators()[i];
    g.bottomRightCorner(b.rank(), b.rank()) = b.generators()[i];
    gens.push_back(g);
  }
  return GaloisLattice(a.orders(), gens, n);
}

static Mat hcat(const std::vector<Mat>& blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const Mat& b : blocks) cols += b.cols();
  Mat r(rows, cols);
  Eigen::Index c = 0;
  for (const Mat& b : blocks) {
    r.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return r;
}

FiniteAbelianGroup structure(const Subquotient& q) {
  Mat Zb = lattice_basis(q.numerator);
  const Eigen::Index k = Zb.cols();
  auto s = smith_normal_form(Zb);
  // coordinates of denominator generators in the basis Zb
  Mat C(k, q.denominator.cols());
  for (Eigen::Index j = 0; j < q.denominator.cols(); ++j) {
    Vec c = s.U * q.denominator.col(j);
    Vec y = Vec::Zero(k);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      if (i < s.rank) {
        if (c(i) % s.D(i, i) != 0) throw InvalidLattice("denominator not contained in numerator");
        y(i) = c(i) / s.D(i, i);
      } else if (c(i) != 0) {
        throw InvalidLattice("denominator not contained in numerator");
      }
    }
    C.col(j) = s.V * y;
  }
  return cokernel(C);
}

FiniteAbelianGroup induced_kernel(const Mat& f, const Subquotient& src, const Subquotient& dst) {
  Mat Zb = lattice_basis(src.numerator);
  Mat A = hcat({Mat(f * Zb), Mat(-dst.denominator)}, f.rows());
  Mat K = integer_kernel(A);
  Mat gens = Zb * K.topRows(Zb.cols());
  return structure({hcat({gens, src.denominator}, src.numerator.rows()), src.denominator});
}

Subquotient tate_subquotient(const GaloisLattice& M, const Mat& L, int degree) {
  const int n = M.rank();
  if (L.rows() != n) throw InvalidLattice("relation lattice has wrong shape");
  const Mat I = Mat::Identity(n, n);
  const auto& gens = M.generators();
  const Eigen::Index l = L.cols();
  Subquotient q;
  if (degree == 0) {
    const Eigen::Index r = static_cast<Eigen::Index>(gens.size());
    Mat A = Mat::Zero(n * r, n + r * l);
    for (Eigen::Index i = 0; i < r; ++i) {
      A.block(i * n, 0, n, n) = gens[i] - I;
      A.block(i * n, n + i * l, n, l) = -L;
    }
    Mat num = r == 0 ? I : Mat(integer_kernel(A).topRows(n));
    q.numerator = hcat({num, L}, n);
    q.denominator = hcat({M.norm(), L}, n);
  } else if (degree == -1) {
    Mat A = hcat({M.norm(), Mat(-L)}, n);
    q.numerator = hcat({Mat(integer_kernel(A).topRows(n)), L}, n);
    std::vector<Mat> den;
    for (const Mat& g : gens) den.push_back(g - I);
    den.push_back(L);
    q.denominator = hcat(den, n);
  } else {
    throw std::invalid_argument("Tate cohomology is implemented in degrees -1 and 0");
  }
  return q;
}

FiniteAbelianGroup tate_cohomology(const GaloisLattice& M, const Mat& L, int degree) {
  return structure(tate_subquotient(M, L, degree));
}

FiniteAbelianGroup tate_cohomology(const GaloisLattice& M, int degree) {
  return tate_cohomology(M, Mat(M.rank(), 0), degree);
}

FiniteAbelianGroup group_cohomology_h1(const GaloisLattice& M, const Mat& L) {
  const int n = M.rank();
  const auto& gens = M.generators();
  const Eigen::Index r = static_cast<Eigen::Index>(gens.size());
  const Eigen::Index l = L.cols();
  const Mat I = Mat::Identity(n, n);
  if (r == 0) return {};
  const Eigen::Index npairs = r * (r - 1) / 2;
  const Eigen::Index nrel = r + npairs;
  Mat A = Mat::Zero(n * nrel, n * r + nrel * l);
  Eigen::Index row = 0;
  for (Eigen::Index i = 0; i < r; ++i, ++row) {
    Mat Ni = Mat::Zero(n, n), p = I;
    for (int k = 0; k < M.orders()[i]; ++k) {
      Ni += p;
      p = p * gens[i];
    }
    A.block(row * n, i * n, n, n) = Ni;
    A.block(row * n, n * r + row * l, n, l) = -L;
  }
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = i + 1; j < r; ++j, ++row) {
      A.block(row * n, i * n, n, n) = gens[j] - I;
      A.block(row * n, j * n, n, n) = -(gens[i] - I);
      A.block(row * n, n * r + row * l, n, l) = -L;
    }
  Mat Lr = Mat::Zero(n * r, r * l);
  Mat B = Mat::Zero(n * r, n);
  for (Eigen::Index i = 0; i < r; ++i) {
    Lr.block(i * n, i * l, n, l) = L;
    B.block(i * n, 0, n, n) = gens[i] - I;
  }
  Subquotient q;
  q.numerator = hcat({Mat(integer_kernel(A).topRows(n * r)), Lr}, n * r);
  q.denominator = hcat({B, Lr}, n * r);
  return structure(q);
}

Mat augmentation_image(const GaloisLattice& M) {
  std::vector<Mat> blocks;
  const Mat I = Mat::Identity(M.rank(), M.rank());
  for (const Mat& g : M.generators()) blocks.push_back(g - I);
  return hcat(blocks, M.rank());
}

FiniteAbelianGroup coinvariants(const GaloisLattice& M) { return cokernel(augmentation_image(M)); }

Subquotient coinvariant_torsion(const GaloisLattice& M) {
  Mat aug = augmentation_image(M);
  return {saturation(aug), aug};
}

// ---- tori ----

std::string to_string(DiamondField f) {
  switch (f) {
    case DiamondField::F: return "F";
    case DiamondField::E: return "E";
    case DiamondField::E1: return "E1";
    case DiamondField::E2: return "E2";
    case DiamondField::K: return "K";
  }
  return "?";
}

std::vector<int> galois_subgroup(DiamondField M) {
  switch (M) {
    case DiamondField::F: return {0, 1, 2, 3};
    case DiamondField::E: return {0, 2};
    case DiamondField::E1: return {0, 1};
    case DiamondField::E2: return {0, 3};
    case DiamondField::K: return {0};
  }
  return {};
}

static bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

bool contains(DiamondField big, DiamondField small) { return subset(galois_subgroup(big), galois_subgroup(small)); }

static DiamondField field_of(const std::vector<int>& H) {
  for (DiamondField f : {DiamondField::F, DiamondField::E, DiamondField::E1, DiamondField::E2, DiamondField::K})
    if (galois_subgroup(f) == H) return f;
  throw InvalidLattice("not a subgroup of the diamond");
}

static DiamondField compositum(DiamondField a, DiamondField b) {
  std::vector<int> H;
  for (int x : galois_subgroup(a))
    if (subset({x}, galois_subgroup(b))) H.push_back(x);
  return field_of(H);
}

TorusExpr TorusExpr::gm(DiamondField over) { return {Kind::gm, over, over, {}}; }

TorusExpr TorusExpr::u1(DiamondField L, DiamondField over) {
  if (!contains(L, over) || galois_subgroup(over).size() != 2 * galois_subgroup(L).size())
    throw InvalidLattice("U1 needs a quadratic extension L/" + prasad::to_string(over));
  return {Kind::u1, over, L, {}};
}

TorusExpr TorusExpr::res(DiamondField base, TorusExpr t) {
  if (!contains(t.over, base)) throw InvalidLattice("restriction of scalars needs " + prasad::to_string(base) + " inside " + prasad::to_string(t.over));
  DiamondField top = t.over;
  return {Kind::res, base, top, {std::move(t)}};
}

TorusExpr TorusExpr::prod(std::vector<TorusExpr> factors) {
  if (factors.empty()) throw InvalidLattice("empty product");
  for (const auto& f : factors)
    if (f.over != factors.front().over) throw InvalidLattice("product factors over different fields");
  DiamondField over = factors.front().over;
  return {Kind::prod, over, over, std::move(factors)};
}

int TorusExpr::rank() const {
  switch (kind) {
    case Kind::gm:
    case Kind::u1: return 1;
    case Kind::res:
      return children[0].rank() * static_cast<int>(galois_subgroup(over).size() / galois_subgroup(split).size());
    case Kind::prod: {
      int r = 0;
      for (const auto& c : children) r += c.rank();
      return r;
    }
  }
  return 0;
}

std::string TorusExpr::to_string() const {
  switch (kind) {
    case Kind::gm: return over == DiamondField::F ? "Gm" : "Gm/" + prasad::to_string(over);
    case Kind::u1: return "U1(" + prasad::to_string(split) + "/" + prasad::to_string(over) + ")";
    case Kind::res:
      return "Res_{" + prasad::to_string(split) + "/" + prasad::to_string(over) + "}(" + children[0].to_string() + ")";
    case Kind::prod: {
      std::string s;
      for (size_t i = 0; i < children.size(); ++i) s += (i ? " x " : "") + children[i].to_string();
      return s;
    }
  }
  return "?";
}

namespace {

// Representation of Gal(K/over) indexed by element mask.
struct Rep {
  int rank = 0;
  std::vector<Mat> mats;  // size 4, entries outside the group unused
};

Rep build(const TorusExpr& T) {
  const auto H = galois_subgroup(T.over);
  Rep r;
  r.mats.assign(4, Mat());
  switch (T.kind) {
    case TorusExpr::Kind::gm:
      r.rank = 1;
      for (int h : H) r.mats[h] = Mat::Identity(1, 1);
      break;
    case TorusExpr::Kind::u1: {
      const auto HL = galois_subgroup(T.split);
      r.rank = 1;
      for (int h : H) r.mats[h] = Mat::Constant(1, 1, subset({h}, HL) ? 1 : -1);
      break;
    }
    case TorusExpr::Kind::res: {
      const TorusExpr& c = T.children[0];
      Rep inner = build(c);
      const auto Hc = galois_subgroup(c.over);
      std::vector<int> reps;
      for (int h : H) {
        bool seen = false;
        for (int rep : reps)
          if (subset({h ^ rep}, Hc)) seen = true;
        if (!seen) reps.push_back(h);
      }
      const int m = inner.rank, k = static_cast<int>(reps.size());
      r.rank = m * k;
      for (int h : H) {
        Mat g = Mat::Zero(r.rank, r.rank);
        for (int i = 0; i < k; ++i) {
          int x = h ^ reps[i];
          for (int j = 0; j < k; ++j)
            if (subset({x ^ reps[j]}, Hc)) g.block(j * m, i * m, m, m) = inner.mats[x ^ reps[j]];
        }
        r.mats[h] = g;
      }
      break;
    }
    case TorusExpr::Kind::prod: {
      std::vector<Rep> parts;
      for (const auto& c : T.children) {
        parts.push_back(build(c));
        r.rank += parts.back().rank;
      }
      for (int h : H) {
        Mat g = Mat::Zero(r.rank, r.rank);
        int off = 0;
        for (const Rep& p : parts) {
          g.block(off, off, p.rank, p.rank) = p.mats[h];
          off += p.rank;
        }
        r.mats[h] = g;
      }
      break;
    }
  }
  return r;
}

std::vector<int> generator_masks(DiamondField M) {
  switch (M) {
    case DiamondField::F: return {1, 2};
    case DiamondField::E: return {2};
    case DiamondField::E1: return {1};
    case DiamondField::E2: return {3};
    case DiamondField::K: return {};
  }
  return {};
}

GaloisLattice lattice_for(const Rep& r, DiamondField M) {
  std::vector<int> orders;
  std::vector<Mat> gens;
  for (int h : generator_masks(M)) {
    orders.push_back(2);
    gens.push_back(r.mats[h]);
  }
  return GaloisLattice(orders, gens, r.rank);
}

}  // namespace

GaloisLattice cocharacter_lattice_over(const TorusExpr& S) { return lattice_for(build(S), S.over); }

GaloisLattice cocharacter_lattice(const TorusExpr& S, Level level) {
  if (S.over != DiamondField::F) throw InvalidLattice("torus must be defined over F");
  return lattice_for(build(S), level == Level::F ? DiamondField::F : DiamondField::E);
}

FiniteAbelianGroup component_group_dual(const TorusExpr& S, Level level) {
  return structure(coinvariant_torsion(cocharacter_lattice(S, level)));
}

static FiniteAbelianGroup norm_quotient_over(const TorusExpr& T) {
  const DiamondField M = T.over;
  if (contains(M, DiamondField::E)) return {};
  switch (T.kind) {
    case TorusExpr::Kind::gm: return FiniteAbelianGroup::cyclic(2);
    case TorusExpr::Kind::u1:
      return T.split == compositum(M, DiamondField::E) ? FiniteAbelianGroup{} : FiniteAbelianGroup::cyclic(2);
    case TorusExpr::Kind::res: return norm_quotient_over(T.children[0]);
    case TorusExpr::Kind::prod: {
      FiniteAbelianGroup g;
      for (const auto& c : T.children) g = direct_sum(g, norm_quotient_over(c));
      return g;
    }
  }
  throw Unsupported("torus outside catalog");
}

FiniteAbelianGroup norm_quotient(const TorusExpr& S) {
  if (S.over != DiamondField::F) throw Unsupported("norm quotient is defined for tori over F");
  return norm_quotient_over(S);
}

TorusVerdict prasad_torus_identity(const TorusExpr& S) {
  GaloisLattice XF = cocharacter_lattice(S, Level::F);
  GaloisLattice XE = cocharacter_lattice(S, Level::E);
  const Mat sigma = XF.generators()[0];
  const Mat transfer = Mat::Identity(S.rank(), S.rank()) + sigma;
  const Mat none(S.rank(), 0);
  TorusVerdict v;
  v.lhs = induced_kernel(transfer, tate_subquotient(XF, none, -1), tate_subquotient(XE, none, -1)).order();
  v.rhs = induced_kernel(transfer, coinvariant_torsion(XF), coinvariant_torsion(XE)).order();
  v.equal = v.lhs == v.rhs;
  return v;
}

std::vector<TorusExpr> torus_catalog_generators() {
  using D = DiamondField;
  return {TorusExpr::gm(), TorusExpr::u1(D::E), TorusExpr::u1(D::E1),
          TorusExpr::res(D::F, TorusExpr::u1(D::K, D::E1))};
}

std::vector<TorusExpr> torus_catalog(int max_rank) {
  const auto gens = torus_catalog_generators();
  std::vector<TorusExpr> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t start, int rank) -> void {
    if (!pick.empty()) {
      if (pick.size() == 1) {
        out.push_back(gens[pick[0]]);
      } else {
        std::vector<TorusExpr> f;
        for (int i : pick) f.push_back(gens[i]);
        out.push_back(TorusExpr::prod(f));
      }
    }
    for (size_t i = start; i < gens.size(); ++i) {
      if (rank + gens[i].rank() > max_rank) continue;
      pick.push_back(static_cast<int>(i));
      self(self, i, rank + gens[i].rank());
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace prasad
