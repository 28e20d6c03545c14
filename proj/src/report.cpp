#include "prasad/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "prasad/case_studies.hpp"
#include "prasad/galois_lattices.hpp"
#include "prasad/padic_fields.hpp"
#include "prasad/residue_fields.hpp"

namespace prasad {

int Report::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

int Report::failed() const { return static_cast<int>(records.size()) - passed(); }

void Report::canonicalize() {
  std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

void Report::append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records)
    j["records"].push_back({{"id", r.id},
                            {"inputs", r.inputs},
                            {"expected", r.expected},
                            {"got", r.got},
                            {"verdict", r.pass ? "pass" : "fail"}});
  j["summary"] = {{"pass", passed()}, {"fail", failed()}};
  return j;
}

std::string Report::summary_line() const {
  return fmt::format("{}: {} passed, {} failed", suite, passed(), failed());
}

namespace {

const std::vector<int> kDefaultPrimes{3, 5, 7, 11, 13};
const std::vector<int> kSmallPrimes{3, 5, 7};

void check_prime(int p) {
  if (!is_odd_prime(p) || p > 97) throw UsageError(fmt::format("--p {}: expected an odd prime below 100", p));
}

void check_degree(int n, int p) {
  if (n < 3 || n % 2 == 0) throw UsageError(fmt::format("--n {}: expected an odd degree >= 3", n));
  // the residue models enumerate k_{q^n} and embed it in k_{q^{2n}}
  std::int64_t Q = 1;
  for (int i = 0; i < 2 * n; ++i) {
    Q *= p;
    if (Q > (std::int64_t{1} << 40)) throw UsageError(fmt::format("--n {} with --p {} is too large", n, p));
  }
  if (ipow(p, n) > 2'000'000) throw UsageError(fmt::format("--n {} with --p {} is too large", n, p));
}

std::vector<int> primes_or(const SuiteOptions& o, const std::vector<int>& dflt) {
  auto ps = o.primes.empty() ? dflt : o.primes;
  for (int p : ps) check_prime(p);
  return ps;
}

std::string config_id(const RootOrbitConfig& c) {
  return fmt::format("class{:02}/ef_{}/gate{}/ord{}", c.table_class(), c.ef_ram ? "r" : "ur", c.in_phi_half ? 1 : 0,
                     c.ord_zero ? 1 : 0);
}

nlohmann::ordered_json config_inputs(const RootOrbitConfig& c) {
  return {{"class", c.table_class()},
          {"deg_EaFa", to_string(c.deg_EaFa)},
          {"sym_F", to_string(c.sym_F)},
          {"sym_E", to_string(c.sym_E)},
          {"ef", c.ef_ram ? "r" : "ur"},
          {"in_phi_half", c.in_phi_half},
          {"ord_zero", c.ord_zero}};
}

std::string verdict_text(const Verdict& v) {
  return fmt::format("{}; product = {}; zeta = {}", to_string(v.status), v.product.to_string(), v.zeta.to_string());
}

Report suite_unramified() {
  Report r{"unramified", {}};
  for (const auto& c : enumerate_configs()) {
    if (c.ef_ram) continue;
    auto v = conjecture_check(c);
    bool ok = v.status == Status::symbolic_equal && rewrite(v.product, c) == rewrite(v.zeta, c);
    r.records.push_back({"unramified/" + config_id(c), config_inputs(c), "SymbolicEqual; product = zeta", verdict_text(v), ok});
  }
  return r;
}

Report suite_conjecture(const std::vector<int>& primes) {
  Report r{"conjecture", {}};
  for (const auto& c : enumerate_configs()) {
    auto v = conjecture_check(c);
    bool ok = v.status != Status::mismatch;
    std::string got = verdict_text(v);
    if (v.status == Status::needs_element_check) {
      for (int p : primes) ok = ok && resolve_element_check(v, p);
      got += fmt::format("; {} {}", v.scenario, ok ? "holds" : "fails");
    }
    r.records.push_back({"conjecture/" + config_id(c), config_inputs(c), "no Mismatch; element checks hold", got, ok});
  }
  return r;
}

CheckRecord scenario_record(const std::string& id, nlohmann::ordered_json inputs, const ScenarioReport& s) {
  int holds = static_cast<int>(std::count_if(s.rows.begin(), s.rows.end(), [](const EvaluationRow& e) { return e.holds; }));
  std::string got = fmt::format("{}/{} rows hold", holds, s.rows.size());
  if (!s.failures.empty()) got += "; " + s.failures.front();
  inputs["diagram"] = s.diagram;
  return {id, std::move(inputs), "identity holds on every model element", got, s.pass};
}

Report suite_gl2(const std::vector<int>& primes) {
  Report r{"gl2", {}};
  for (int p : primes)
    for (auto c : {Gl2Case::odd, Gl2Case::even_a, Gl2Case::even_b})
      r.records.push_back(scenario_record(fmt::format("gl2/p{:02}/{}", p, to_string(c)), {{"p", p}, {"case", to_string(c)}},
                                          verify_gl2(p, c)));
  return r;
}

Report suite_sl2(const std::vector<int>& primes) {
  Report r{"sl2", {}};
  for (int p : primes) r.records.push_back(scenario_record(fmt::format("sl2/p{:02}", p), {{"p", p}}, verify_sl2(p)));
  return r;
}

template <class F>
Report suite_degree(const std::string& name, const std::vector<int>& ns, const std::vector<int>& primes, F verify) {
  Report r{name, {}};
  for (int n : ns)
    for (int p : primes) {
      check_degree(n, p);
      r.records.push_back(scenario_record(fmt::format("{}/n{}/p{:02}", name, n, p), {{"n", n}, {"p", p}}, verify(n, p)));
    }
  return r;
}

Report suite_torus() {
  Report r{"torus", {}};
  const auto catalog = torus_catalog(3);
  for (size_t i = 0; i < catalog.size(); ++i) {
    const auto& S = catalog[i];
    auto v = prasad_torus_identity(S);
    r.records.push_back({fmt::format("torus/identity/{:03}", i),
                         {{"torus", S.to_string()}, {"rank", S.rank()}},
                         "lhs = rhs",
                         fmt::format("lhs = {}, rhs = {}", v.lhs, v.rhs),
                         v.equal});
  }
  const auto gens = torus_catalog_generators();
  const std::vector<FiniteAbelianGroup> expected{FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup{},
                                                 FiniteAbelianGroup::cyclic(2)};
  for (size_t i = 0; i < expected.size(); ++i) {
    auto got = norm_quotient(gens[i]);
    r.records.push_back({fmt::format("torus/norm_quotient/{}", i), {{"torus", gens[i].to_string()}},
                         expected[i].to_string(), got.to_string(), got == expected[i]});
  }
  return r;
}

Report suite_hilbert(const std::vector<int>& primes) {
  Report r{"hilbert", {}};
  const auto classes = all_square_classes();
  for (int p : primes) {
    LocalFieldDesc F = make_base(p);
    FiniteField kF(p);
    auto rec = [&](const std::string& what, bool ok, std::string detail = "") {
      r.records.push_back({fmt::format("hilbert/p{:02}/{}", p, what), {{"p", p}}, "holds", ok ? "holds" : detail, ok});
    };
    bool sym = true, bil = true, neg = true, nondeg = true;
    for (auto a : classes) {
      bool witness = a.trivial();
      for (auto b : classes) {
        sym = sym && hilbert_symbol(F, a, b) == hilbert_symbol(F, b, a);
        for (auto c : classes) bil = bil && hilbert_symbol(F, a, b * c) == hilbert_symbol(F, a, b) * hilbert_symbol(F, a, c);
        witness = witness || hilbert_symbol(F, a, b) == Sign::minus;
      }
      neg = neg && hilbert_symbol(F, a, minus_one_class(F) * a) == Sign::plus;
      nondeg = nondeg && witness;
    }
    rec("symmetry", sym, "asymmetric pair");
    rec("bilinearity", bil, "not bilinear");
    rec("a_minus_a", neg, "(a, -a) = -1");
    rec("nondegenerate", nondeg, "degenerate class");
    bool omega = true;
    for (const auto& E : quadratic_extensions(F))
      for (int v : {0, 1})
        for (auto x : kF.units()) {
          LocalElement t{v, x};
          omega = omega && omega_quadratic(E, kF, t) == hilbert_symbol(F, class_of(kF, t), E.disc);
        }
    rec("omega_identity", omega, "omega != (t, disc)");
    bool toral = true;
    for (auto a : classes) {
      if (a.trivial()) continue;
      for (auto b : classes) toral = toral && toral_invariant(F, a, b) == hilbert_symbol(F, a, b);
    }
    rec("toral_invariant", toral, "toral invariant != symbol");
  }
  return r;
}

Report dispatch(const std::string& name, const SuiteOptions& o) {
  if (name == "unramified") return suite_unramified();
  if (name == "sl2") return suite_sl2(primes_or(o, kDefaultPrimes));
  if (name == "gl2") return suite_gl2(primes_or(o, kDefaultPrimes));
  if (name == "gln")
    return suite_degree("gln", o.ns.empty() ? std::vector<int>{3, 5, 7} : o.ns, primes_or(o, kSmallPrimes),
                        verify_gln_odd);
  if (name == "un")
    return suite_degree("un", o.ns.empty() ? std::vector<int>{3, 5} : o.ns, primes_or(o, kSmallPrimes), verify_un_odd);
  if (name == "torus") return suite_torus();
  if (name == "hilbert") return suite_hilbert(primes_or(o, kDefaultPrimes));
  if (name == "conjecture") return suite_conjecture(primes_or(o, kSmallPrimes));
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"unramified", "sl2", "gl2", "gln", "un", "torus", "hilbert", "conjecture", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  Report r;
  if (name == "all") {
    r.suite = "all";
    for (const auto& s : suite_names())
      if (s != "all") r.append(dispatch(s, opts));
  } else {
    r = dispatch(name, opts);
  }
  r.canonicalize();
  return r;
}

std::string render_table(const TableData& t) {
  std::vector<size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(t.header);
  for (const auto& row : t.rows) widen(row);
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) s += " | ";
      s += i + 1 == row.size() ? row[i] : fmt::format("{:<{}}", row[i], width[i]);
    }
    return s + "\n";
  };
  std::string out = fmt::format("Table {}. {}\n", t.number, t.caption);
  out += line(t.header);
  size_t total = 0;
  for (size_t w : width) total += w;
  out += std::string(total + 3 * (width.size() - 1), '-') + "\n";
  for (const auto& row : t.rows) out += line(row);
  return out;
}

Report tables_report(std::optional<std::pair<int, int>> inject, std::vector<TableData>* compared) {
  Report r{"tables", {}};
  if (inject && (inject->first < 1 || inject->first > 5))
    throw UsageError(fmt::format("--inject-diff: no table {}", inject->first));
  for (int n = 1; n <= 5; ++n) {
    TableData got = regenerate_table(n);
    const TableData& ref = builtin_table(n);
    if (inject && inject->first == n) {
      int row = inject->second;
      if (row < 1 || row > static_cast<int>(got.rows.size()))
        throw UsageError(fmt::format("--inject-diff: table {} has {} rows", n, got.rows.size()));
      got.rows[row - 1].back() += " (injected)";
    }
    r.records.push_back({fmt::format("table{}/rows", n), {{"table", n}}, std::to_string(ref.rows.size()),
                         std::to_string(got.rows.size()), ref.rows.size() == got.rows.size()});
    auto join = [](const std::vector<std::string>& row) {
      std::string s;
      for (const auto& c : row) s += (s.empty() ? "" : " | ") + c;
      return s;
    };
    for (size_t i = 0; i < std::max(ref.rows.size(), got.rows.size()); ++i) {
      std::string e = i < ref.rows.size() ? join(ref.rows[i]) : "(none)";
      std::string g = i < got.rows.size() ? join(got.rows[i]) : "(none)";
      r.records.push_back({fmt::format("table{}/row{:02}", n, i + 1), {{"table", n}, {"row", i + 1}}, e, g, e == g});
    }
    if (compared) compared->push_back(std::move(got));
  }
  r.canonicalize();
  return r;
}

}  // namespace prasad
