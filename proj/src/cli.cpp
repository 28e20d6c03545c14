#include "prasad/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <sstream>

#include "prasad/padic_fields.hpp"
#include "prasad/report.hpp"
#include "prasad/residue_fields.hpp"

namespace prasad {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_json(const Report& r, const std::string& path) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << r.to_json().dump(2) << "\n";
  if (!f) throw UsageError("cannot write " + path);
}

std::pair<int, int> parse_inject(const std::string& s) {
  int t = 0, r = 0;
  char colon = 0;
  std::istringstream is(s);
  if (!(is >> t >> colon >> r) || colon != ':' || !is.eof()) throw UsageError("--inject-diff expects TABLE:ROW");
  return {t, r};
}

// Square class of a nonzero integer in Q_p.
SquareClass integer_class(long long a, int p) {
  if (a == 0) throw UsageError("hilbert: arguments must be nonzero");
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  FiniteField k(p);
  return {v % 2 != 0, !k.is_square(k.from_int(a))};
}

void print_records(const Report& r, std::ostream& out, bool failures_only) {
  for (const auto& rec : r.records) {
    if (failures_only && rec.pass) continue;
    out << (rec.pass ? "PASS " : "FAIL ") << rec.id << ": " << rec.got << "\n";
    if (!rec.pass) out << "     expected: " << rec.expected << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character identities for distinguished regular supercuspidal representations"};
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("tables", "Regenerate Tables 1-5 and diff them against the built-in rows");
  std::string inject_arg, tables_json;
  tables->add_option("--inject-diff", inject_arg, "Corrupt TABLE:ROW of the regenerated tables (negative control)");
  tables->add_option("--json", tables_json, "Write a JSON report to PATH");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, verify_json;
  std::vector<int> primes, degrees;
  verify->add_option("suite", suite, "unramified, sl2, gl2, gln, un, torus, hilbert, conjecture or all")->required();
  verify->add_option("--p", primes, "Odd prime(s) to run at");
  verify->add_option("--n", degrees, "Odd degree(s) for gln and un");
  verify->add_option("--json", verify_json, "Write a JSON report to PATH");

  auto* hilbert = app.add_subcommand("hilbert", "Quadratic Hilbert symbol (A, B) over Q_p");
  int hp = 0;
  long long ha = 0, hb = 0;
  hilbert->add_option("--p", hp, "Odd prime")->required();
  hilbert->add_option("A", ha)->required();
  hilbert->add_option("B", hb)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*tables) {
      std::optional<std::pair<int, int>> inject;
      if (!inject_arg.empty()) inject = parse_inject(inject_arg);
      std::vector<TableData> compared;
      Report r = tables_report(inject, &compared);
      for (const auto& t : compared) out << render_table(t) << "\n";
      print_records(r, out, true);
      out << r.summary_line() << "\n";
      write_json(r, tables_json);
      return r.ok() ? kExitPass : kExitFail;
    }
    if (*verify) {
      Report r = run_suite(suite, {primes, degrees});
      print_records(r, out, false);
      out << r.summary_line() << "\n";
      write_json(r, verify_json);
      return r.ok() ? kExitPass : kExitFail;
    }
    if (*hilbert) {
      if (!is_odd_prime(hp)) throw UsageError(fmt::format("hilbert: p = {} is not an odd prime", hp));
      LocalFieldDesc F = make_base(hp);
      out << to_string(hilbert_symbol(F, integer_class(ha, hp), integer_class(hb, hp))) << "\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace prasad
