#include "prasad/char_engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace prasad {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::sgn_units_Ea: return "sgn_{k_{E_a}^x} o alpha";
    case Basis::sgn_units_Fa: return "sgn_{k_{F_a}^x} o alpha";
    case Basis::sgn_norm_one_Ea: return "sgn_{k_{E_a}^1} o alpha";
    case Basis::omega_EaFa: return "omega_{E_a/F_a}(iota_{F_a} o alpha)";
  }
  return "?";
}

std::string CharContribution::to_string() const {
  if (is_trivial()) return "1";
  std::string out;
  for (Basis b : kAllBases)
    if (has(b)) out += (out.empty() ? "" : " * ") + prasad::to_string(b);
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::symbolic_equal: return "SymbolicEqual";
    case Status::needs_element_check: return "NeedsElementCheck";
    case Status::mismatch: return "Mismatch";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Configurations

int RootOrbitConfig::table_class() const {
  const auto& rows = table5_builtin();
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].key == key()) return static_cast<int>(i) + 1;
  return 0;
}

std::string RootOrbitConfig::to_string() const {
  return prasad::to_string(key()) + " E/F " + (ef_ram ? "r" : "ur") + " op (" + prasad::to_string(sym_Fop) + ", " +
         prasad::to_string(deg_EaFaop) + ")" + (in_phi_half ? " phi_half" : "") + (ord_zero ? " ord0" : "");
}

void check_consistent(const RootOrbitConfig& cfg) {
  if (cfg.sym_E != Sym::asym && cfg.sym_F == Sym::asym) throw InvalidConfig("symmetric over E but not over F");
  if (!cfg.ef_ram && cfg.deg_EaFa == Deg::two_r) throw InvalidConfig("E/F unramified but E_alpha/F_alpha ramified");
  bool realized = false;
  for (const auto& z : realizations()) {
    if (z.key != cfg.key() || z.ef_ram != cfg.ef_ram) continue;
    realized = true;
    if (z.sym_Fop != cfg.sym_Fop || z.deg_EaFop != cfg.deg_EaFaop)
      throw InvalidConfig("alpha^op data disagree with the tower: " + cfg.to_string());
  }
  if (!realized) throw InvalidConfig("no tower realizes " + cfg.to_string());
  auto gates = allowed_phi_half(cfg.key());
  if (std::find(gates.begin(), gates.end(), cfg.in_phi_half) == gates.end())
    throw InvalidConfig("gate value not allowed for " + cfg.to_string());
}

std::vector<bool> allowed_phi_half(const ClassKey& key) {
  // the quadratic GL_2 diagrams pin the depth parity: E_alpha/F_alpha ramified
  // under an unramified F_alpha/F_{+-alpha} forces odd depth (no Heisenberg
  // quotient), and the diagram with both upper edges unramified forces even depth
  if (key == ClassKey{Deg::two_r, Sym::sym_ur, Sym::sym_ur}) return {false};
  if (key == ClassKey{Deg::two_ur, Sym::sym_r, Sym::sym_ur}) return {true};
  // a ramified symmetric step over E leaves the Heisenberg quotient trivial
  if (key.sym_E == Sym::sym_r) return {false};
  return {false, true};
}

std::vector<RootOrbitConfig> enumerate_configs() {
  std::set<std::tuple<int, bool, Sym, Deg>> seen;
  std::vector<RootOrbitConfig> out;
  for (const auto& z : realizations()) {
    RootOrbitConfig base;
    base.sym_F = z.key.sym_F;
    base.sym_E = z.key.sym_E;
    base.deg_EaFa = z.key.deg_EaFa;
    base.sym_Fop = z.sym_Fop;
    base.deg_EaFaop = z.deg_EaFop;
    base.ef_ram = z.ef_ram;
    if (!seen.insert({base.table_class(), z.ef_ram, z.sym_Fop, z.deg_EaFop}).second) continue;
    for (bool gate : allowed_phi_half(z.key))
      for (bool ord : {false, true}) {
        RootOrbitConfig c = base;
        c.in_phi_half = gate;
        c.ord_zero = ord;
        out.push_back(c);
      }
  }
  std::sort(out.begin(), out.end(), [](const RootOrbitConfig& a, const RootOrbitConfig& b) {
    return std::tuple(a.table_class(), a.ef_ram, a.in_phi_half, a.ord_zero) <
           std::tuple(b.table_class(), b.ef_ram, b.in_phi_half, b.ord_zero);
  });
  return out;
}

std::vector<ClassKey> enumerate_classes() {
  std::vector<ClassKey> out;
  for (const auto& c : enumerate_configs())
    if (out.empty() || out.back() != c.key()) out.push_back(c.key());
  return out;
}

RootOrbitConfig class_config(const ClassKey& key, bool ef_ram, bool in_phi_half, bool ord_zero) {
  for (const auto& z : realizations()) {
    if (z.key != key || z.ef_ram != ef_ram) continue;
    RootOrbitConfig c;
    c.sym_F = key.sym_F;
    c.sym_E = key.sym_E;
    c.deg_EaFa = key.deg_EaFa;
    c.sym_Fop = z.sym_Fop;
    c.deg_EaFaop = z.deg_EaFop;
    c.ef_ram = ef_ram;
    c.in_phi_half = in_phi_half;
    c.ord_zero = ord_zero;
    return c;
  }
  throw InvalidConfig("no tower realizes " + to_string(key) + (ef_ram ? " with E/F ramified" : " with E/F unramified"));
}

// ---------------------------------------------------------------------------
// Contributions

CharContribution prasad_contribution(const RootOrbitConfig& cfg) {
  if (cfg.sym_F == Sym::asym) return CharContribution::trivial();
  // E inside F_alpha: omega_{E F_alpha / F_alpha} is trivial
  if (cfg.deg_EaFa == Deg::one) return CharContribution::trivial();
  return CharContribution::of(Basis::omega_EaFa);
}

CharContribution kaletha_contribution(const RootOrbitConfig& cfg) {
  // the toral-invariant factor (ord_zero) is 1 in every distinguished configuration
  if (!cfg.in_phi_half) return CharContribution::trivial();
  if (cfg.sym_E == Sym::asym) {
    bool ramified_split = cfg.sym_F == Sym::asym && cfg.deg_EaFa == Deg::two_r;
    bool ramified_sym = cfg.sym_F == Sym::sym_r && cfg.deg_EaFa == Deg::one;
    if (ramified_split || ramified_sym) return CharContribution::of(Basis::sgn_units_Ea);
    return CharContribution::trivial();
  }
  if (cfg.sym_E == Sym::sym_ur && cfg.deg_EaFa != Deg::one) return CharContribution::of(Basis::sgn_norm_one_Ea);
  return CharContribution::trivial();
}

CharContribution hakim_contribution(const RootOrbitConfig& cfg) {
  if (cfg.sym_F == Sym::sym_r && cfg.in_phi_half) return CharContribution::of(Basis::sgn_units_Fa);
  return CharContribution::trivial();
}

CharContribution zeta_contribution(const RootOrbitConfig& cfg) {
  if (cfg.sym_Fop != Sym::sym_r) return CharContribution::trivial();
  if (cfg.deg_EaFaop == Deg::one && cfg.sym_E == Sym::asym) return CharContribution::of(Basis::sgn_units_Ea);
  if (cfg.deg_EaFaop == Deg::two_ur && cfg.sym_E != Sym::asym) return CharContribution::of(Basis::omega_EaFa);
  return CharContribution::trivial();
}

CharContribution rewrite(CharContribution c, const RootOrbitConfig& cfg) {
  if (cfg.deg_EaFa != Deg::two_ur && c.has(Basis::sgn_units_Ea))
    c *= CharContribution::of(Basis::sgn_units_Ea) * CharContribution::of(Basis::sgn_units_Fa);
  return c;
}

Sign toral_invariant(const LocalFieldDesc& E_pm, SquareClass a, SquareClass b) {
  if (a.trivial()) throw InvalidExtension("toral invariant needs E_alpha != E_{+-alpha}");
  return hilbert_symbol(E_pm, a, b);
}

Verdict conjecture_check(const RootOrbitConfig& cfg) {
  Verdict v;
  v.product = prasad_contribution(cfg) * kaletha_contribution(cfg) * hakim_contribution(cfg);
  v.zeta = zeta_contribution(cfg);
  if (rewrite(v.product, cfg) == rewrite(v.zeta, cfg)) {
    v.status = Status::symbolic_equal;
    return v;
  }
  const int cls = cfg.table_class();
  if (cls == 3 && !cfg.in_phi_half) {
    // zeta = sgn o alpha on an orbit split by a ramified step: trivial on the
    // image of alpha by the odd-degree norm argument
    v.status = Status::needs_element_check;
    v.scenario = "gln_odd";
  } else if (cls == 10 && cfg.in_phi_half) {
    v.status = Status::needs_element_check;
    v.scenario = "gl2_odd";
  } else {
    v.status = Status::mismatch;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Residue model

ResidueModel::ResidueModel(const RootOrbitConfig& cfg, int p) : cfg_(cfg), p_(p), kF_(p), k2_(kF_) {
  if (!is_odd_prime(p)) throw NonOddPrime("residue model needs an odd prime");
}

std::int64_t ResidueModel::residue_order_Fa() const { return cfg_.sym_F == Sym::sym_ur ? p_ * p_ : p_; }

std::int64_t ResidueModel::residue_order_Ea() const {
  auto q = residue_order_Fa();
  return cfg_.deg_EaFa == Deg::two_ur ? q * q : q;
}

std::vector<ResidueSample> ResidueModel::samples() const {
  std::vector<ResidueSample> out;
  for (int v : {0, 1}) {
    if (residue_order_Fa() == p_) {
      for (auto x : kF_.units()) out.push_back({v, k2_.embed(x)});
    } else {
      for (auto x : k2_.units()) out.push_back({v, x});
    }
  }
  return out;
}

ResidueSample ResidueModel::alpha(const ResidueSample& s) const {
  switch (cfg_.sym_F) {
    case Sym::asym: return s;
    case Sym::sym_ur: return {0, k2_.mul(s.unit, k2_.inv(k2_.frobenius(s.unit)))};
    case Sym::sym_r: return {0, k2_.embed(s.valuation % 2 ? kF_.neg(kF_.one()) : kF_.one())};
  }
  return s;
}

Sign ResidueModel::eval(Basis b, const ResidueSample& s) const {
  const ResidueSample y = alpha(s);
  auto sgn_in = [&](std::int64_t q, const QuadraticExtension::Elem& x) {
    if (q == p_) {
      if (x.b != 0) throw InvalidConfig("element outside the residue field");
      return sgn_units(kF_, x.a);
    }
    if (q == std::int64_t(p_) * p_) return sgn_units(k2_, x);
    throw InvalidConfig("residue field not modeled");
  };
  switch (b) {
    case Basis::sgn_units_Fa: return sgn_in(residue_order_Fa(), y.unit);
    case Basis::sgn_units_Ea: return sgn_in(residue_order_Ea(), y.unit);
    case Basis::sgn_norm_one_Ea:
      if (residue_order_Ea() != std::int64_t(p_) * p_) throw InvalidConfig("norm-one group not modeled");
      return sgn_norm_one(k2_, y.unit);
    case Basis::omega_EaFa: {
      if (cfg_.deg_EaFa == Deg::one) return Sign::plus;
      if (cfg_.deg_EaFa == Deg::two_ur) return sign_from_parity(s.valuation);
      LocalFieldDesc Fa{p_, cfg_.sym_F == Sym::sym_r ? 2 : 1, cfg_.sym_F == Sym::sym_ur ? 2 : 1, "F_a"};
      bool nonsquare = residue_order_Fa() == p_ ? !kF_.is_square(s.unit.a) : sgn_units(k2_, s.unit) == Sign::minus;
      return hilbert_symbol(Fa, SquareClass{s.valuation % 2 != 0, nonsquare}, SquareClass::uniformizer());
    }
  }
  return Sign::plus;
}

Sign ResidueModel::eval(CharContribution c, const ResidueSample& s) const {
  Sign out = Sign::plus;
  for (Basis b : kAllBases)
    if (c.has(b)) out *= eval(b, s);
  return out;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

const std::string kOne = "1";
const std::string kOmega = "omega_{E_a/F_a}(iota_{F_a} o alpha)";
const std::string kSgnEx = "sgn_{k_{E_a}^x} o alpha";
const std::string kSgnE1 = "sgn_{k_{E_a}^1} o alpha";
const std::string kSgnFx = "sgn_{k_{F_a}^x} o alpha";

std::vector<TableData> make_builtin() {
  std::vector<TableData> t(5);
  t[0] = {1, "Prasad's character.", {"/F", "contribution"}, {{"asym", kOne}, {"sym ur", kOmega}, {"sym r", kOmega}}};
  t[1] = {2,
          "Kaletha's character.",
          {"[E_a:F_a]", "/F", "/E", "E/F", "contribution"},
          {{"1", "asym", "asym", "r/ur", kOne},
           {"2 ur", "asym", "asym", "r/ur", kOne},
           {"2 r", "asym", "asym", "r", kSgnEx},
           {"1", "sym ur", "asym", "ur", kOne},
           {"1", "sym ur", "sym ur", "r/ur", kOne},
           {"2 r", "sym ur", "sym ur", "r", kSgnE1},
           {"1", "sym r", "asym", "r", kSgnEx},
           {"1", "sym r", "sym r", "r/ur", kOne},
           {"2 ur", "sym r", "sym r", "r/ur", kOne},
           {"2 ur", "sym r", "sym ur", "r", kSgnE1}}};
  t[2] = {3, "Hakim's character.", {"/F", "contribution"}, {{"asym", kOne}, {"sym ur", kOne}, {"sym r", kSgnFx}}};
  t[3] = {4,
          "The character associated to zeta-data.",
          {"[E_a:F_a^op]", "/F", "/E", "E/F", "contribution"},
          {{"1", "asym", "asym", "r/ur", kOne},
           {"2 ur", "asym", "asym", "r/ur", kOne},
           {"2 r", "asym", "asym", "r", kOne},
           {"1", "sym ur", "asym", "ur", kOne},
           {"1", "sym ur", "sym ur", "r/ur", kOne},
           {"2 r", "sym ur", "sym ur", "r", kOne},
           {"1", "sym r", "asym", "r", kSgnEx},
           {"1", "sym r", "sym r", "r/ur", kOne},
           {"2 ur", "sym r", "sym r", "r/ur", kOmega},
           {"2 ur", "sym r", "sym ur", "r", kOmega}}};
  t[4] = {5, "Comparison between alpha and alpha^op.", {"[E_a:F_a]", "a/F", "a/E", "a^op/F", "E_a/F_a^op"}, {}};
  for (const auto& r : table5_builtin())
    t[4].rows.push_back({to_string(r.key.deg_EaFa), to_string(r.key.sym_F), to_string(r.key.sym_E),
                         to_string(r.sym_Fop), to_string(r.deg_EaFop)});
  return t;
}

std::vector<bool> parse_ef(const std::string& s) {
  if (s == "r/ur") return {true, false};
  if (s == "r") return {true};
  if (s == "ur") return {false};
  throw InvalidConfig("unknown E/F type '" + s + "'");
}

std::string render_ef(const std::vector<bool>& ef) {
  bool r = std::find(ef.begin(), ef.end(), true) != ef.end();
  bool ur = std::find(ef.begin(), ef.end(), false) != ef.end();
  return r && ur ? "r/ur" : r ? "r" : "ur";
}

std::vector<bool> realizable_ef(const ClassKey& key) {
  std::vector<bool> out;
  for (const auto& z : realizations())
    if (z.key == key && std::find(out.begin(), out.end(), z.ef_ram) == out.end()) out.push_back(z.ef_ram);
  return out;
}

using ContributionFn = CharContribution (*)(const RootOrbitConfig&);

// Contribution of a class over every E/F type the table claims; the claim is
// echoed when each claimed type is realizable and all agree, otherwise the
// realizable set is shown with a marker so the row diffs.
std::pair<std::string, std::string> ef_and_contribution(const ClassKey& key, const std::string& claimed, ContributionFn f) {
  auto realizable = realizable_ef(key);
  std::vector<bool> ef;
  try {
    ef = parse_ef(claimed);
  } catch (const InvalidConfig&) {
    ef = realizable;
  }
  std::string contribution;
  bool ok = true;
  for (bool e : ef) {
    if (std::find(realizable.begin(), realizable.end(), e) == realizable.end()) {
      ok = false;
      continue;
    }
    auto c = f(class_config(key, e, true, true)).to_string();
    if (!contribution.empty() && c != contribution) ok = false;
    contribution = c;
  }
  if (contribution.empty()) contribution = f(class_config(key, realizable.at(0), true, true)).to_string();
  return {ok ? claimed : "? " + render_ef(realizable), contribution};
}

const std::vector<std::string>* builtin_row_for(int number, const std::vector<std::string>& prefix) {
  for (const auto& row : builtin_table(number).rows)
    if (std::equal(prefix.begin(), prefix.end(), row.begin())) return &row;
  return nullptr;
}

}  // namespace

const TableData& builtin_table(int number) {
  static const std::vector<TableData> tables = make_builtin();
  if (number < 1 || number > 5) throw std::out_of_range("tables are numbered 1 to 5");
  return tables[number - 1];
}

TableData regenerate_table(int number) {
  const TableData& ref = builtin_table(number);
  TableData t{ref.number, ref.caption, ref.header, {}};
  const auto classes = enumerate_classes();
  // rows of Tables 1 and 3 are indexed by the symmetry over F alone
  auto representative = [&](Sym s, bool prefer_quadratic) {
    for (const auto& k : classes)
      if (k.sym_F == s && (!prefer_quadratic || k.deg_EaFa != Deg::one)) return k;
    for (const auto& k : classes)
      if (k.sym_F == s) return k;
    throw InvalidConfig("no class with symmetry " + to_string(s));
  };
  switch (number) {
    case 1:
    case 3:
      for (Sym s : {Sym::asym, Sym::sym_ur, Sym::sym_r}) {
        ClassKey k = representative(s, number == 1);
        auto f = number == 1 ? prasad_contribution : hakim_contribution;
        t.rows.push_back({to_string(s), f(class_config(k, realizable_ef(k).at(0), true, true)).to_string()});
      }
      break;
    case 2:
      for (const auto& k : classes) {
        std::vector<std::string> prefix{to_string(k.deg_EaFa), to_string(k.sym_F), to_string(k.sym_E)};
        const auto* row = builtin_row_for(2, prefix);
        auto [ef, c] = ef_and_contribution(k, row ? (*row)[3] : "", kaletha_contribution);
        t.rows.push_back({prefix[0], prefix[1], prefix[2], ef, c});
      }
      break;
    case 4:
      // same index tuples as Table 2, read as ([E_a:F_a^op], alpha^op/F, alpha/E)
      for (const auto& k : classes) {
        std::vector<std::string> prefix{to_string(k.deg_EaFa), to_string(k.sym_F), to_string(k.sym_E)};
        const auto* row = builtin_row_for(4, prefix);
        std::optional<ClassKey> target;
        for (const auto& z : realizations())
          if (z.deg_EaFop == k.deg_EaFa && z.sym_Fop == k.sym_F && z.key.sym_E == k.sym_E) target = z.key;
        if (!target) {
          t.rows.push_back({prefix[0], prefix[1], prefix[2], "?", "no class"});
          continue;
        }
        auto [ef, c] = ef_and_contribution(*target, row ? (*row)[3] : "", zeta_contribution);
        t.rows.push_back({prefix[0], prefix[1], prefix[2], ef, c});
      }
      break;
    case 5:
      for (const auto& k : classes) {
        const Realization* z = nullptr;
        for (const auto& r : realizations())
          if (r.key == k) z = &r;
        t.rows.push_back({to_string(k.deg_EaFa), to_string(k.sym_F), to_string(k.sym_E), to_string(z->sym_Fop),
                          to_string(z->deg_EaFop)});
      }
      break;
  }
  return t;
}

}  // namespace prasad
