#pragma once

// Row j rebuilt from nothing but the prefix R_j(V), for comparison with the
// incremental builder.

#include "collatz/characteristics.hpp"
#include "collatz/trajectory.hpp"

namespace collatz::oracle {

inline TrajectoryRow scratch_row(const ParityVector& v) {
  const auto cs = char_set(v);
  TrajectoryRow r;
  r.j = cs.n;
  r.m = cs.m;
  r.P = cs.P;
  r.c = cs.c;
  r.a = cs.a;
  r.b = cs.b;
  r.N0 = cs.N0;
  r.alpha = cs.alpha;
  r.A = cs.A;
  r.B = cs.B;
  if (cs.m > 0) {
    const Int two_n = pow2(cs.n);
    r.X = cs.X;
    r.K = (*cs.X - cs.N0) / two_n;
    const auto d = xstar_decompose(v);
    r.Xstar = d.Xstar;
    r.Kstar = (d.Xstar - cs.N0) / two_n;
    r.f2 = mod_pow2(cs.B * *cs.a, cs.n);
  }
  return r;
}

/// Empty string when every field agrees, otherwise the first mismatch.
inline std::string row_mismatch(const TrajectoryRow& x, const TrajectoryRow& y) {
  auto cmp = [](const char* name, const auto& a, const auto& b) -> std::string {
    return a == b ? "" : std::string(name);
  };
  for (const auto& s :
       {cmp("j", x.j, y.j), cmp("m", x.m, y.m), cmp("P", x.P, y.P), cmp("c", x.c, y.c),
        cmp("a", x.a, y.a), cmp("b", x.b, y.b), cmp("N0", x.N0, y.N0), cmp("X", x.X, y.X),
        cmp("K", x.K, y.K), cmp("Xstar", x.Xstar, y.Xstar), cmp("Kstar", x.Kstar, y.Kstar),
        cmp("alpha", x.alpha, y.alpha), cmp("A", x.A, y.A), cmp("B", x.B, y.B),
        cmp("f2", x.f2, y.f2)}) {
    if (!s.empty()) return s;
  }
  return "";
}

}  // namespace collatz::oracle
