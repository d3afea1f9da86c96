#include "sepcert/table.hpp"

#include <cmath>

#include "sepcert/modulus.hpp"

namespace sepcert {

namespace {

TableEntry exact_entry(std::string name, Rational v) {
  TableEntry e;
  e.name = std::move(name);
  e.exact = true;
  e.lo = e.hi = v.value();
  e.lo_rational = e.hi_rational = v;
  return e;
}

TableEntry bracket_entry(std::string name, Rational lo, Rational hi) {
  TableEntry e;
  e.name = std::move(name);
  e.exact = false;
  e.lo = lo.value();
  e.hi = hi.value();
  e.lo_rational = lo;
  e.hi_rational = hi;
  return e;
}

TableEntry real_bracket(std::string name, double lo, double hi) {
  TableEntry e;
  e.name = std::move(name);
  e.exact = false;
  e.lo = lo;
  e.hi = hi;
  return e;
}

}  // namespace

std::vector<TableEntry> critical_table(const CompositeDims& dims) {
  const int D = dims.total();
  const int n = dims.count();
  std::vector<TableEntry> out;

  const bool qq = (n == 2 && D == 4);
  const bool qt = (n == 2 && ((dims.factor(0) == 2 && dims.factor(1) == 3) ||
                              (dims.factor(0) == 3 && dims.factor(1) == 2)));

  if (n == 2) {
    const Rational L(2, 2 + D);
    out.push_back(exact_entry("L", L));
    out.push_back(exact_entry("min-eigenvalue-threshold", (Rational(1) - L) / Rational(D)));

    // Partial-sum critical values C[k].
    for (int k = 1; k <= D - 1; ++k) {
      const std::string name = "C[" + std::to_string(k) + "]";
      if (k == D - 1) {
        out.push_back(exact_entry(name, Rational(D + 1, D + 2)));
      } else if (qq) {
        if (k == 2)
          out.push_back(exact_entry(name, Rational(2, 3)));
        else
          out.push_back(bracket_entry(name, Rational(1, 3), Rational(1, 2)));
      } else if (qt) {
        if (k == 4)
          out.push_back(exact_entry(name, Rational(3, 4)));
        else if (k == 3)
          out.push_back(bracket_entry(name, Rational(9, 16), Rational(5, 8)));
        else if (k == 2)
          out.push_back(bracket_entry(name, Rational(3, 8), Rational(1, 2)));
        else
          out.push_back(bracket_entry(name, Rational(3, 16), Rational(3, 8)));
      } else {
        out.push_back(bracket_entry(name, Rational(k * (D + 1), (D + 2) * (D - 1)),
                                    Rational(k + 2, D + 2)));
      }
    }

    // Purity.
    if (qq) {
      out.push_back(exact_entry("C_purity", Rational(1, 3)));
    } else if (qt) {
      out.push_back(bracket_entry("C_purity", Rational(1, 5), Rational(7, 32)));
    } else {
      out.push_back(bracket_entry("C_purity", Rational(D * (D + 3), (D - 1) * (D + 2) * (D + 2)),
                                  Rational(D + 8, (D + 2) * (D + 2))));
    }

    if (qq || qt) {
      // Lower bound from minimizing the purity along the two-vertex section
      // t.sigma + (1-t)L.omega + (1-t)(1-L).tau; the minimum sits at t = 0.
      const Rational a = L / Rational(D - 2) + (Rational(1) - L) / Rational(D);
      const Rational c = (Rational(1) - L) / Rational(D);
      const Rational val = Rational(D - 2) * a * a + Rational(2) * c * c;
      TableEntry e = exact_entry("purity-section-lower-bound", val);
      e.exact = false;  // a certified lower bound on C_purity, not C_purity itself
      out.push_back(e);
    }

    // Von Neumann entropy bracket (concave orientation, certified side S >= C_S).
    const double cs_lo = std::log(2.0 + D) - (3.0 / (2.0 + D)) * std::log(3.0);
    const double cs_hi =
        std::log(D + 2.0) - ((D + 1.0) / (D + 2.0)) * std::log((D + 1.0) / (D - 1.0));
    out.push_back(real_bracket("C_entropy", cs_lo, cs_hi));
  } else {
    const LBound L = l_constant(dims);
    out.push_back(real_bracket("L", L.value, 1.0));
    out.push_back(real_bracket("min-eigenvalue-threshold", (1.0 - L.value) / D,
                               (1.0 - L.value) / D));
    for (int k = 1; k <= D - 1; ++k)
      out.push_back(real_bracket("C[" + std::to_string(k) + "]",
                                 k * (L.value / (D - 1.0) + (1.0 - L.value) / D),
                                 k * (1.0 - L.value) / D + L.value));
    out.push_back(real_bracket("C_purity", (D - 1.0 + L.value * L.value) / (D * (D - 1.0)),
                               (L.value * L.value * (D - 1.0) + 1.0) / D));
  }

  return out;
}

}  // namespace sepcert
