// One PASS/FAIL line per acceptance criterion, with wall time against the limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles/cohomology_oracle.hpp"
#include "oracles/hilbert_oracle.hpp"
#include "oracles/lattice_zoo.hpp"
#include "prasad/case_studies.hpp"
#include "prasad/char_engine.hpp"
#include "prasad/galois_lattices.hpp"
#include "prasad/padic_fields.hpp"
#include "prasad/report.hpp"
#include "prasad/residue_fields.hpp"

using namespace prasad;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

int failures = 0;

void criterion(int number, const std::string& name, double limit_ms, const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  try {
    body();
  } catch (const Failure& f) {
    why = f.what;
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (why.empty() && ms > limit_ms) why = "over time limit";
  if (!why.empty()) ++failures;
  std::printf("%s [%d] %s (%.0f ms, limit %.0f ms)%s%s\n", why.empty() ? "PASS" : "FAIL", number, name.c_str(), ms,
              limit_ms, why.empty() ? "" : ": ", why.c_str());
  std::fflush(stdout);
}

void table_regeneration() {
  Report r = tables_report();
  require(r.ok(), "regenerated tables differ from the built-ins");
  const int expected_rows[] = {3, 10, 3, 10, 10};
  for (int n = 1; n <= 5; ++n) {
    auto t = regenerate_table(n);
    require(static_cast<int>(t.rows.size()) == expected_rows[n - 1], "row count of table " + std::to_string(n));
    require(t.rows == builtin_table(n).rows, "table " + std::to_string(n));
  }
}

void unramified_theorem() {
  int n = 0;
  for (const auto& c : enumerate_configs()) {
    if (c.ef_ram) continue;
    ++n;
    auto v = conjecture_check(c);
    require(v.status == Status::symbolic_equal, "not SymbolicEqual: " + c.to_string());
    require(rewrite(v.product, c) == rewrite(v.zeta, c), "product != zeta: " + c.to_string());
    require(kaletha_contribution(c).is_trivial() && hakim_contribution(c).is_trivial(), "nontrivial sign: " + c.to_string());
  }
  require(n > 0, "no unramified configs");
}

void gl2_identity() {
  for (int p : {3, 5, 7, 13})
    for (auto c : {Gl2Case::odd, Gl2Case::even_a, Gl2Case::even_b}) {
      auto r = verify_gl2(p, c);
      require(r.pass, r.id + " at p=" + std::to_string(p));
      for (const auto& row : r.rows) {
        const auto& v = row.values;  // eps_Kal, eps_HM, omega_Pra, zeta, omega_K/E1
        require(v[0] * v[1] * v[2] == v[3], r.id + " " + row.element);
        if (c == Gl2Case::odd) {
          require(v[3] == Sign::plus, "odd case zeta nontrivial");
          if (row.element == "v=1 x=1") require(v[0] * v[1] == Sign::minus, "odd case uniformizer sign");
        } else {
          require(v[3] == v[4], r.id + " zeta != omega_K/E1 at " + row.element);
        }
      }
    }
}

// x^{(Q-1)/2} = Nm(x)^{(q-1)/2} in F_{q^n} by polynomial arithmetic.
bool odd_norm_identity_poly(int q, int n) {
  FiniteField k(ipow(q, n));
  const std::int64_t Q = k.order();
  for (auto x : k.units()) {
    FiniteField::Elem nm = k.one(), conj = x;
    for (int i = 0; i < n; ++i) {
      nm = k.mul_poly(nm, conj);
      conj = k.pow(conj, q);
    }
    if ((k.pow(x, (Q - 1) / 2) == k.one()) != (k.pow(nm, (q - 1) / 2) == k.one())) return false;
  }
  return true;
}

void small_examples() {
  for (int p : {3, 5, 7}) {
    auto s = verify_sl2(p);
    require(s.pass, "sl2 p=" + std::to_string(p));
    for (int n : {3, 5, 7}) {
      auto r = verify_gln_odd(n, p);
      require(r.pass, r.id + " p=" + std::to_string(p));
      for (const auto& row : r.rows)
        for (Sign v : row.values) require(v == Sign::plus, r.id + " " + row.element);
      if (ipow(p, n) <= FiniteField::kMaxOrder) require(odd_norm_identity_poly(p, n), "norm identity in F_{p^n}");
    }
    for (int n : {3, 5}) {
      auto r = verify_un_odd(n, p);
      require(r.pass, r.id + " p=" + std::to_string(p));
      for (const auto& row : r.rows)
        for (Sign v : row.values) require(v == Sign::plus, r.id + " " + row.element);
    }
  }
}

void torus_identity() {
  auto cat = torus_catalog(3);
  require(!cat.empty(), "empty catalog");
  for (const auto& S : cat) require(prasad_torus_identity(S).equal, S.to_string());
  auto gens = torus_catalog_generators();
  require(norm_quotient(gens[0]) == FiniteAbelianGroup::cyclic(2), "Gm");
  require(norm_quotient(gens[1]).trivial(), "U1(E/F)");
  require(norm_quotient(gens[2]) == FiniteAbelianGroup::cyclic(2), "U1(E1/F)");
}

void same(const FiniteAbelianGroup& g, const oracle::FiniteQuotient& b, long long N, const std::string& what) {
  require(g.finite() && g.order() == b.order(), what + " order");
  for (long long m = 2; m <= 4 * N; m *= 2) require(g.count_killed_by(m) == b.count_killed_by(m), what + " structure");
}

void lattice_oracle() {
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k : {1, 2}) {
      const long long N = k == 1 ? 8 : 4;
      for (const auto& M : oracle::lattice_zoo(n, k)) {
        oracle::TruncatedModule A(M, N);
        const Mat L = N * Mat::Identity(M.rank(), M.rank());
        same(tate_cohomology(M, L, -1), oracle::tate_minus_one(A), N, "H^-1");
        same(tate_cohomology(M, L, 0), oracle::tate_zero(A), N, "H^0");
        same(group_cohomology_h1(M, L), oracle::h1_by_cocycles(A), N, "H^1");
        ++checked;
      }
    }
  require(checked > 0, "empty zoo");
  for (const auto& S : torus_catalog(3))
    for (Level lv : {Level::F, Level::E})
      require(tate_cohomology(cocharacter_lattice(S, lv), -1).order() == component_group_dual(S, lv).order(),
              "Kottwitz " + S.to_string());
}

void hilbert_suite() {
  require(run_suite("hilbert").ok(), "hilbert suite");
  for (int p : {3, 5, 7, 11, 13}) {
    LocalFieldDesc F = make_base(p);
    const long long u = oracle::least_nonresidue(p);
    auto rep = [&](SquareClass c) { return (c.val_odd ? p : 1) * (c.unit_nonsquare ? u : 1); };
    for (auto a : all_square_classes())
      for (auto b : all_square_classes())
        require(to_int(hilbert_symbol(F, a, b)) == oracle::hilbert_by_solutions(p, rep(a), rep(b)),
                "symbol vs conic solutions at p=" + std::to_string(p));
  }
}

}  // namespace

int main() {
  criterion(1, "Table regeneration", 1000, table_regeneration);
  criterion(2, "Unramified theorem", 1000, unramified_theorem);
  criterion(3, "GL2 element-level identity", 5000, gl2_identity);
  criterion(4, "SL2 / GL_n odd / U_n odd", 10000, small_examples);
  criterion(5, "Torus-case Prasad identity", 2000, torus_identity);
  criterion(6, "Lattice oracle", 5000, lattice_oracle);
  criterion(7, "Hilbert-symbol suite", 1000, hilbert_suite);
  return failures == 0 ? 0 : 1;
}
