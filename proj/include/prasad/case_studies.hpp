#pragma once

#include <string>
#include <vector>

#include "prasad/char_engine.hpp"
#include "prasad/padic_fields.hpp"
#include "prasad/residue_fields.hpp"
#include "prasad/sign.hpp"

namespace prasad {

// t = pi_{E_1}^v [x] in E_1^x modulo principal units. The residue x lives in
// k_{E_1}, embedded in F_{p^2} (x in F_p when E_1/F is ramified).
struct TorusElementModel {
  int valuation = 0;
  QuadraticExtension::Elem residue;
};

// Residue of alpha(t) = t / tau(t) for tau the generator of Gal(E_1/F).
// Unramified: x^{1-p}. Ramified with tau(pi) = -pi: (-1)^v.
QuadraticExtension::Elem alpha_eval(const QuadraticExtension& k2, bool E1_ramified, const TorusElementModel& t);

// Elements of E_1^x (v in {0, 1}, all residue units) or of the norm-one group E_1^1.
std::vector<TorusElementModel> torus_elements(const QuadraticExtension& k2, bool E1_ramified);
std::vector<TorusElementModel> norm_one_elements(const QuadraticExtension& k2, bool E1_ramified);

// Nm_{E_1/F}(t) as an element of F; the uniformizer of a ramified E_1 is sqrt(disc).
LocalElement norm_to_base(const QuadExtDesc& E1, const QuadraticExtension& k2, const TorusElementModel& t);

// omega_{L/E_1}(t) for L = E_1(sqrt c), c a square class of E_1.
Sign omega_over(const QuadExtDesc& E1, const QuadraticExtension& k2, SquareClass c, const TorusElementModel& t);

struct EvaluationRow {
  std::string element;
  std::vector<Sign> values;  // one per column
  bool holds = false;
};

struct ScenarioReport {
  std::string id;
  int p = 0;
  std::string diagram;
  std::vector<std::string> columns;
  std::vector<EvaluationRow> rows;
  std::vector<std::string> failures;  // side checks that did not hold
  bool pass = false;

  void finish();  // pass iff every row holds and no side check failed
};

enum class Gl2Case { odd, even_a, even_b };
std::string to_string(Gl2Case c);

// The diamond K = E E_1 over F = Q_p for a GL_2 case.
struct Gl2Diagram {
  QuadExtDesc E1;
  QuadExtDesc E;
  QuadExtDesc E2;  // third intermediate field
  BiquadraticDiamond diamond;
  bool in_phi_half = false;
};

Gl2Diagram gl2_diagram(int p, Gl2Case c);

ScenarioReport verify_gl2(int p, Gl2Case c);
ScenarioReport verify_sl2(int p);
ScenarioReport verify_gln_odd(int n, int p);
ScenarioReport verify_un_odd(int n, int p);

// Settles a NeedsElementCheck verdict at the prime p.
bool resolve_element_check(const Verdict& v, int p);

}  // namespace prasad
