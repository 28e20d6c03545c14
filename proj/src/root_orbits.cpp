#include "prasad/root_orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "prasad/padic_fields.hpp"

namespace prasad {

std::string to_string(Sym s) {
  switch (s) {
    case Sym::asym: return "asym";
    case Sym::sym_ur: return "sym ur";
    case Sym::sym_r: return "sym r";
  }
  return "?";
}

std::string to_string(Deg d) {
  switch (d) {
    case Deg::one: return "1";
    case Deg::two_ur: return "2 ur";
    case Deg::two_r: return "2 r";
  }
  return "?";
}

std::string to_string(const ClassKey& k) {
  return "(" + to_string(k.deg_EaFa) + ", " + to_string(k.sym_F) + ", " + to_string(k.sym_E) + ")";
}

Sym sym_from(bool symmetric, bool ramified) {
  if (!symmetric) return Sym::asym;
  return ramified ? Sym::sym_r : Sym::sym_ur;
}

Deg deg_from(int degree, bool ramified) {
  if (degree == 1) return Deg::one;
  if (degree != 2) throw InvalidRootSystem("quadratic step expected");
  return ramified ? Deg::two_r : Deg::two_ur;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : mul_(std::move(table)) {
  const int n = order();
  if (n == 0) throw InvalidRootSystem("empty group");
  for (const auto& row : mul_)
    if (static_cast<int>(row.size()) != n) throw InvalidRootSystem("multiplication table is not square");
  for (int a = 0; a < n; ++a)
    if (mul_[0][a] != a || mul_[a][0] != a) throw InvalidRootSystem("element 0 must be the identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == 0) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0) throw InvalidRootSystem("element without inverse");
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& orders) {
  int n = 1;
  for (int k : orders) n *= k;
  auto digits = [&](int x) {
    std::vector<int> d;
    for (int k : orders) {
      d.push_back(x % k);
      x /= k;
    }
    return d;
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto da = digits(a), db = digits(b);
      int r = 0, radix = 1;
      for (size_t i = 0; i < orders.size(); ++i) {
        r += ((da[i] + db[i]) % orders[i]) * radix;
        radix *= orders[i];
      }
      t[a][b] = r;
    }
  return FiniteGroup(std::move(t));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g : gens) {
      int y = mul(x, g);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < order(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  // every subgroup of the small groups in scope is generated by two elements
  std::set<std::vector<int>> found;
  for (int a = 0; a < order(); ++a)
    for (int b = a; b < order(); ++b) found.insert(generated({a, b}));
  return {found.begin(), found.end()};
}

bool FiniteGroup::is_normal(const std::vector<int>& H) const {
  std::vector<bool> in(order(), false);
  for (int h : H) in[h] = true;
  for (int g = 0; g < order(); ++g)
    for (int h : H)
      if (!in[mul(mul(g, h), inverse(g))]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// TwistedRootSystem

namespace {

bool is_signed_permutation(const SignedPermMatrix& M) {
  if (M.rows() != M.cols()) return false;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    int nz = 0;
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (M(i, j) != 0 && std::abs(M(i, j)) != 1) return false;
      if (M(i, j) != 0) ++nz;
    }
    if (nz != 1) return false;
  }
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    if ((M.col(j).array() != 0).count() != 1) return false;
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subgroup with_mask(const Subgroup& H, const std::vector<bool>& mask) {
  Subgroup out;
  for (int h : H)
    if (mask[h]) out.push_back(h);
  return out;
}

std::vector<bool> mask_of(int n, const Subgroup& H) {
  std::vector<bool> m(n, false);
  for (int h : H) m[h] = true;
  return m;
}

}  // namespace

bool is_tame_inertia(const FiniteGroup& Q, const Subgroup& I) {
  if (I.empty() || I[0] != 0 || Q.generated(I) != I || !Q.is_normal(I)) return false;
  // tame: I cyclic and Q/I cyclic
  bool cyclic_I = false;
  for (int g : I)
    if (Q.element_order(g) == static_cast<int>(I.size())) cyclic_I = true;
  for (int g = 0; g < Q.order(); ++g) {
    Subgroup gen = I;
    gen.push_back(g);
    if (cyclic_I && static_cast<int>(Q.generated(gen).size()) == Q.order()) return true;
  }
  return false;
}

int TwistedRootSystem::root_index(const RootVector& v) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

int TwistedRootSystem::act(int g, int root) const {
  int j = root_index(action[g] * roots[root]);
  if (j < 0) throw InvalidRootSystem("action not closed on the roots");
  return j;
}

int TwistedRootSystem::negative(int root) const {
  int j = root_index(-roots[root]);
  if (j < 0) throw InvalidRootSystem("root system not closed under negation");
  return j;
}

bool TwistedRootSystem::E_ramified() const {
  for (int g = 0; g < group.order(); ++g)
    if (in_inertia(g) && !in_E[g]) return true;
  return false;
}

int TwistedRootSystem::ramification(const Subgroup& H_big, const Subgroup& H_small) const {
  if (inertia.empty()) return 1;
  auto big = with_mask(H_big, inertia).size(), small = with_mask(H_small, inertia).size();
  if (small == 0 || big % small != 0) throw InvalidRootSystem("inconsistent realization");
  return static_cast<int>(big / small);
}

void TwistedRootSystem::validate() const {
  const int n = group.order();
  if (roots.empty()) throw InvalidRootSystem("no roots");
  const auto dim = roots[0].size();
  for (const auto& r : roots) {
    if (r.size() != dim) throw InvalidRootSystem("roots of different ranks");
    if (r.isZero()) throw InvalidRootSystem("zero root");
  }
  for (size_t i = 0; i < roots.size(); ++i) {
    negative(static_cast<int>(i));
    for (size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw InvalidRootSystem("repeated root");
  }
  if (static_cast<int>(action.size()) != n || static_cast<int>(in_E.size()) != n)
    throw InvalidRootSystem("action or Q_E data has the wrong size");
  for (const auto& M : action)
    if (M.rows() != dim || !is_signed_permutation(M)) throw InvalidRootSystem("action is not by signed permutations");
  if (!action[0].isIdentity()) throw InvalidRootSystem("identity must act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (action[group.mul(a, b)] != action[a] * action[b]) throw InvalidRootSystem("action is not a homomorphism");
  for (int g = 0; g < n; ++g)
    for (size_t i = 0; i < roots.size(); ++i) act(g, static_cast<int>(i));
  int e_count = 0;
  for (int a = 0; a < n; ++a) {
    if (in_E[a]) ++e_count;
    for (int b = 0; b < n; ++b)
      if (in_E[group.mul(a, b)] != (in_E[a] == in_E[b])) throw InvalidRootSystem("Q_E is not an index-2 subgroup");
  }
  if (2 * e_count != n) throw InvalidRootSystem("Q_E is not an index-2 subgroup");
  if (!inertia.empty()) {
    if (static_cast<int>(inertia.size()) != n) throw InvalidRootSystem("inertia data has the wrong size");
    Subgroup I;
    for (int g = 0; g < n; ++g)
      if (inertia[g]) I.push_back(g);
    if (!is_tame_inertia(group, I)) throw InvalidRootSystem("inertia data is not a tame inertia subgroup");
  }
}

TwistedRootSystem TwistedRootSystem::from_generators(std::vector<RootVector> roots,
                                                     const std::vector<SignedPermMatrix>& gens,
                                                     const std::vector<bool>& off_E) {
  if (gens.size() != off_E.size()) throw InvalidRootSystem("one Q_E flag per generator");
  if (roots.empty()) throw InvalidRootSystem("no roots");
  const auto dim = roots[0].size();
  std::vector<SignedPermMatrix> elems{SignedPermMatrix::Identity(dim, dim)};
  std::vector<bool> parity{false};
  auto find = [&](const SignedPermMatrix& M) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == M) return static_cast<int>(i);
    return -1;
  };
  for (size_t k = 0; k < elems.size(); ++k)
    for (size_t g = 0; g < gens.size(); ++g) {
      SignedPermMatrix M = elems[k] * gens[g];
      bool par = parity[k] != off_E[g];
      int j = find(M);
      if (j < 0) {
        if (elems.size() > 4096) throw InvalidRootSystem("group too large");
        elems.push_back(M);
        parity.push_back(par);
      } else if (parity[j] != par) {
        throw InvalidRootSystem("Q_E flags do not define a homomorphism");
      }
    }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = find(elems[a] * elems[b]);
  TwistedRootSystem R;
  R.roots = std::move(roots);
  R.group = FiniteGroup(std::move(table));
  R.action = std::move(elems);
  for (bool p : parity) R.in_E.push_back(!p);
  R.validate();
  return R;
}

// ---------------------------------------------------------------------------
// Orbits

namespace {

std::vector<int> orbit(const TwistedRootSystem& R, int root, bool only_E) {
  std::set<int> o;
  for (int g = 0; g < R.group.order(); ++g)
    if (!only_E || R.in_E[g]) o.insert(R.act(g, root));
  return {o.begin(), o.end()};
}

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

}  // namespace

namespace {

std::vector<OrbitRecord> classify_unchecked(const TwistedRootSystem& R) {
  const int n = R.group.order();
  std::vector<bool> done(R.roots.size(), false);
  std::vector<OrbitRecord> out;
  for (size_t a = 0; a < R.roots.size(); ++a) {
    if (done[a]) continue;
    const int alpha = static_cast<int>(a), minus = R.negative(alpha);
    OrbitRecord rec;
    rec.rep = alpha;
    rec.orbit_F = orbit(R, alpha, false);
    rec.orbit_E = orbit(R, alpha, true);
    rec.symmetric_F = contains(rec.orbit_F, minus);
    rec.symmetric_E = contains(rec.orbit_E, minus);
    rec.splits_over_E = rec.orbit_E.size() != rec.orbit_F.size();
    for (int g = 0; g < n; ++g) {
      int img = R.act(g, alpha);
      if (img == alpha) rec.stab.push_back(g);
      if (img == alpha || img == minus) rec.stab_pm.push_back(g);
    }
    rec.stab_E = with_mask(rec.stab, R.in_E);
    rec.stab_E_pm = with_mask(rec.stab_pm, R.in_E);
    rec.sym_F = sym_from(rec.symmetric_F, R.ramification(rec.stab_pm, rec.stab) == 2);
    rec.sym_E = sym_from(rec.symmetric_E, R.ramification(rec.stab_E_pm, rec.stab_E) == 2);
    const int d = static_cast<int>(rec.stab.size() / rec.stab_E.size());
    rec.deg_EaFa = deg_from(d, R.ramification(rec.stab, rec.stab_E) == 2);
    for (int r : rec.orbit_F) done[r] = true;
    for (int r : rec.orbit_F) done[R.negative(r)] = true;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<OrbitRecord> classify_orbits(const TwistedRootSystem& R) {
  R.validate();
  return classify_unchecked(R);
}

TwistedRootSystem op_twist(const TwistedRootSystem& R) {
  TwistedRootSystem T = R;
  for (int g = 0; g < R.group.order(); ++g)
    if (!R.in_E[g]) T.action[g] = -R.action[g];
  return T;
}

TowerDescriptor tower_of(const TwistedRootSystem& R, const OrbitRecord& rec) {
  TowerDescriptor t;
  t.F_a = rec.stab;
  t.F_pm = rec.stab_pm;
  t.E_a = rec.stab_E;
  t.E_pm = rec.stab_E_pm;
  TwistedRootSystem op = op_twist(R);
  for (int g : rec.stab_pm)
    if (op.act(g, rec.rep) == rec.rep) t.F_op.push_back(g);
  auto edge = [&](const Subgroup& big, const Subgroup& small) {
    TowerEdge e;
    if (small.empty() || big.size() % small.size() != 0) throw InvalidRootSystem("inconsistent realization");
    e.degree = static_cast<int>(big.size() / small.size());
    e.ramified = R.ramification(big, small) > 1;
    return e;
  };
  t.Fa_over_Fpm = edge(t.F_pm, t.F_a);
  t.Ea_over_Fa = edge(t.F_a, t.E_a);
  t.Ea_over_Epm = edge(t.E_pm, t.E_a);
  t.Epm_over_Fpm = edge(t.F_pm, t.E_pm);
  t.Fop_over_Fpm = edge(t.F_pm, t.F_op);
  t.Ea_over_Fop = edge(t.F_op, t.E_a);
  t.sym_Fop = sym_from(t.Fop_over_Fpm.degree == 2, t.Fop_over_Fpm.ramified);
  t.deg_EaFop = deg_from(t.Ea_over_Fop.degree, t.Ea_over_Fop.ramified);
  if (intersect(t.F_op, t.E_pm) != t.E_a) throw InvalidRootSystem("inconsistent realization");

  t.biquadratic = t.Fa_over_Fpm.degree == 2 && t.Epm_over_Fpm.degree == 2 && t.F_a != t.E_pm;
  if (t.biquadratic) {
    if (t.F_op == t.F_a || t.F_op == t.E_pm || t.F_op.size() != t.F_a.size())
      throw InvalidRootSystem("alpha^op field is not the third intermediate field");
  }
  if (t.biquadratic && !R.inertia.empty()) {
    // E_alpha / F_{+-alpha} is biquadratic: F_{alpha^op} must be the third
    // intermediate field, with the ramification the local diamond predicts.
    const LocalFieldDesc base = make_base(3);
    SquareClass da = t.Fa_over_Fpm.ramified ? SquareClass::uniformizer() : SquareClass::unit();
    SquareClass db = !t.Epm_over_Fpm.ramified ? SquareClass::unit()
                     : t.Fa_over_Fpm.ramified ? SquareClass::unit_uniformizer()
                                              : SquareClass::uniformizer();
    BiquadraticDiamond d = biquadratic_diamond(make_quadratic(base, da), make_quadratic(base, db));
    if (d.lower_ramified[2] != t.Fop_over_Fpm.ramified || d.upper_ramified[2] != t.Ea_over_Fop.ramified)
      throw InvalidRootSystem("inconsistent realization");
  } else if (t.Ea_over_Fa.degree == 1) {
    // E_alpha = F_alpha: alpha^op sees F_alpha when alpha is symmetric over E,
    // and F_{+-alpha} when only symmetric over F
    const Subgroup& expect = rec.symmetric_E || !rec.symmetric_F ? t.F_a : t.F_pm;
    if (t.F_op != expect) throw InvalidRootSystem("inconsistent realization");
  }
  return t;
}

// ---------------------------------------------------------------------------
// Table 5

const std::array<Table5Row, 10>& table5_builtin() {
  using enum Sym;
  using D = Deg;
  static const std::array<Table5Row, 10> rows{{
      {{D::one, asym, asym}, asym, D::one},
      {{D::two_ur, asym, asym}, sym_ur, D::one},
      {{D::two_r, asym, asym}, sym_r, D::one},
      {{D::one, sym_ur, asym}, asym, D::two_ur},
      {{D::one, sym_ur, sym_ur}, sym_ur, D::one},
      {{D::two_r, sym_ur, sym_ur}, sym_r, D::two_ur},
      {{D::one, sym_r, asym}, asym, D::two_r},
      {{D::one, sym_r, sym_r}, sym_r, D::one},
      {{D::two_ur, sym_r, sym_r}, sym_r, D::two_ur},
      {{D::two_ur, sym_r, sym_ur}, sym_ur, D::two_r},
  }};
  return rows;
}

namespace {

TwistedRootSystem build_induced(const FiniteGroup& Q, const Subgroup& H_pm, const Subgroup& H_a,
                                const std::vector<bool>& in_E, const std::vector<bool>& inertia, bool faithful) {
  const int n = Q.order();
  auto in_pm = mask_of(n, H_pm), in_a = mask_of(n, H_a);
  std::vector<int> reps;
  std::vector<int> coset_of(n, -1);
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : H_pm) coset_of[Q.mul(g, h)] = c;
  }
  const int m = static_cast<int>(reps.size());
  const int extra = faithful ? n : 0;
  TwistedRootSystem R;
  R.group = Q;
  R.in_E = in_E;
  R.inertia = inertia;
  for (int k = 0; k < m; ++k) {
    RootVector v = RootVector::Zero(m + extra);
    v(k) = 1;
    R.roots.push_back(v);
    R.roots.push_back(-v);
  }
  for (int g = 0; g < n; ++g) {
    SignedPermMatrix M = SignedPermMatrix::Zero(m + extra, m + extra);
    for (int k = 0; k < m; ++k) {
      int gc = Q.mul(g, reps[k]);
      int l = coset_of[gc];
      int h = Q.mul(Q.inverse(reps[l]), gc);
      if (!in_pm[h]) throw InvalidRootSystem("coset bookkeeping failed");
      M(l, k) = in_a[h] ? 1 : -1;
    }
    if (faithful)
      for (int x = 0; x < n; ++x) M(m + Q.mul(g, x), m + x) = 1;
    R.action.push_back(M);
  }
  return R;
}

}  // namespace

TwistedRootSystem induced_root_system(const FiniteGroup& Q, const Subgroup& H_pm, const Subgroup& H_a,
                                      const std::vector<bool>& in_E, const std::vector<bool>& inertia) {
  auto R = build_induced(Q, H_pm, H_a, in_E, inertia, true);
  R.validate();
  return R;
}

namespace {

std::vector<Realization> search_realizations() {
  std::vector<Realization> out;
  std::set<std::tuple<ClassKey, bool, Sym, Deg>> seen;
  const std::vector<std::vector<int>> shapes{{2}, {4}, {2, 2}, {8}, {4, 2}, {16}, {8, 2}, {4, 4}};
  for (const auto& shape : shapes) {
    FiniteGroup Q = FiniteGroup::abelian(shape);
    const int n = Q.order();
    auto subs = Q.subgroups();
    for (const auto& QE : subs) {
      if (2 * QE.size() != static_cast<size_t>(n)) continue;
      auto in_E = mask_of(n, QE);
      for (const auto& I : subs) {
        if (!is_tame_inertia(Q, I)) continue;
        auto inertia = mask_of(n, I);
        for (const auto& H_pm : subs)
          for (const auto& H_a : subs) {
            if (H_a.size() != H_pm.size() && 2 * H_a.size() != H_pm.size()) continue;
            if (intersect(H_a, H_pm) != H_a) continue;
            TwistedRootSystem R = build_induced(Q, H_pm, H_a, in_E, inertia, false);
            auto recs = classify_unchecked(R);
            const auto& rec = recs.at(0);
            auto tower = tower_of(R, rec);
            Realization z{R, {rec.deg_EaFa, rec.sym_F, rec.sym_E}, R.E_ramified(), tower.sym_Fop, tower.deg_EaFop};
            if (seen.insert({z.key, z.ef_ram, z.sym_Fop, z.deg_EaFop}).second) out.push_back(std::move(z));
          }
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<Realization>& realizations() {
  static const std::vector<Realization> all = search_realizations();
  return all;
}

std::vector<Table5Diff> table5_check(const std::vector<ClassKey>& classes) {
  std::vector<Table5Diff> diffs;
  const auto& rows = table5_builtin();
  for (const auto& key : classes) {
    auto row = std::find_if(rows.begin(), rows.end(), [&](const Table5Row& r) { return r.key == key; });
    if (row == rows.end()) {
      diffs.push_back({key, "class missing from the built-in table"});
      continue;
    }
    bool realized = false;
    for (const auto& z : realizations()) {
      if (z.key != key) continue;
      realized = true;
      if (z.sym_Fop != row->sym_Fop || z.deg_EaFop != row->deg_EaFop)
        diffs.push_back({key, "alpha^op computed as (" + to_string(z.sym_Fop) + ", " + to_string(z.deg_EaFop) +
                                  "), table has (" + to_string(row->sym_Fop) + ", " + to_string(row->deg_EaFop) +
                                  ")"});
    }
    if (!realized) diffs.push_back({key, "class has no realization"});
  }
  for (const auto& r : rows)
    if (std::find(classes.begin(), classes.end(), r.key) == classes.end())
      diffs.push_back({r.key, "table row not among the enumerated classes"});
  return diffs;
}

// ---------------------------------------------------------------------------
// GL_n

TwistedRootSystem gln_root_system(int n) {
  if (n < 2) throw InvalidRootSystem("GL_n needs n >= 2");
  TwistedRootSystem R;
  R.group = FiniteGroup::abelian({2 * n});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        RootVector v = RootVector::Zero(n);
        v(i) = 1;
        v(j) = -1;
        R.roots.push_back(v);
      }
  for (int g = 0; g < 2 * n; ++g) {
    int shift = g % n;
    SignedPermMatrix M = SignedPermMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) M((i + shift) % n, i) = 1;
    R.action.push_back(M);
    R.in_E.push_back(g % 2 == 0);
  }
  return R;
}

GlnOrbitParity gln_orbit_parity(int n) {
  auto R = gln_root_system(n);
  GlnOrbitParity out;
  for (const auto& rec : classify_orbits(R)) {
    // a record covers alpha's orbit and, when asymmetric, the orbit of -alpha
    out.count_orbits += rec.symmetric_F ? 1 : 2;
    if (rec.symmetric_F) ++out.count_sym_orbits;
  }
  out.parity_ok = (out.count_sym_orbits - (n - 1)) % 2 == 0;
  return out;
}

}  // namespace prasad
