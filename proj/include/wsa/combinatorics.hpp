#pragma once

// Weight-dependent combinatorics of a triangulation quiver: virtual arrows,
// the admissibility clauses on m*n, and the Q' pattern where a g-3-cycle
// meets a g-2-cycle.

#include <string>
#include <vector>

#include "wsa/check.hpp"
#include "wsa/quiver.hpp"

namespace wsa {

/// Weight m per g-cycle, indexed like tq.g_cycles().cycles().
using Weights = std::vector<int>;

inline int weight_of(const TriangulationQuiver& tq, const Weights& m, ArrowIndex a) {
  return m[tq.g_cycles().cycle_index(a)];
}
inline int mn_of(const TriangulationQuiver& tq, const Weights& m, ArrowIndex a) {
  return weight_of(tq, m, a) * tq.n(a);
}

inline std::vector<bool> classify_virtual(const TriangulationQuiver& tq, const Weights& m) {
  std::vector<bool> v(tq.num_arrows());
  for (int a = 0; a < tq.num_arrows(); ++a) v[a] = mn_of(tq, m, a) == 2;
  return v;
}

struct AssumptionViolation {
  ArrowIndex arrow;
  int clause;  // 1, 2 or 3
  int value;
  int required;
};

inline std::vector<AssumptionViolation> check_assumptions(const TriangulationQuiver& tq, const Weights& m) {
  std::vector<AssumptionViolation> out;
  const auto virt = classify_virtual(tq, m);
  for (int a = 0; a < tq.num_arrows(); ++a) {
    const int value = mn_of(tq, m, a);
    const int b = tq.bar(a);
    if (value < 2) {
      out.push_back({a, 1, value, 2});
    } else if (virt[b] && tq.is_loop(b) && value < 4) {
      out.push_back({a, 3, value, 4});
    } else if (virt[b] && !tq.is_loop(b) && value < 3) {
      out.push_back({a, 2, value, 3});
    }
  }
  return out;
}

inline std::string describe(const TriangulationQuiver& tq, const AssumptionViolation& v) {
  static const char* const clause_text[] = {"", "m*n >= 2", "m*n >= 3 when bar is a virtual non-loop",
                                            "m*n >= 4 when bar is a virtual loop"};
  return "arrow " + tq.arrow_name(v.arrow) + ": clause (" + std::to_string(v.clause) + ") " + clause_text[v.clause] +
         " violated, m*n = " + std::to_string(v.value);
}

/// Structural identities every triangulation quiver satisfies.
inline CheckResult quiver_invariants(const TriangulationQuiver& tq) {
  CheckBuilder b("quiver-invariants");
  b.require(tq.num_arrows() == 2 * tq.num_vertices(), "|Q1| != 2|Q0|");
  for (int a = 0; a < tq.num_arrows(); ++a) {
    const auto& name = tq.arrow_name(a);
    b.require(tq.f(tq.f(tq.f(a))) == a, "f^3 moves " + name);
    b.require(tq.bar(a) != a && tq.bar(tq.bar(a)) == a && tq.source(tq.bar(a)) == tq.source(a), "bar fails at " + name);
    b.require(tq.g(a) == tq.bar(tq.f(a)), "g != bar o f at " + name);
    b.require(tq.f(tq.f(tq.bar(a))) == tq.g_inv(a), "f^2(bar " + name + ") != g^-1(" + name + ")");
  }
  if (tq.num_vertices() >= 3) {
    for (const auto& cycle : tq.g_cycles().cycles()) {
      if (cycle.size() != 3) continue;
      for (int a : cycle) b.require(!tq.is_loop(a), "g-3-cycle through loop " + tq.arrow_name(a));
    }
  }
  return std::move(b).finish();
}

inline CheckResult virtual_facts(const TriangulationQuiver& tq, const Weights& m) {
  CheckBuilder b("virtual-arrow-facts");
  const auto virt = classify_virtual(tq, m);
  for (int a = 0; a < tq.num_arrows(); ++a) {
    const auto& name = tq.arrow_name(a);
    const int partner = tq.f(tq.f(tq.bar(a)));
    b.require(virt[a] == virt[partner], "(1) " + name + " and f^2(bar " + name + ") = " + tq.arrow_name(partner) +
                                            " disagree on virtuality");
    if (virt[a]) b.require(!virt[tq.bar(a)], "(3) " + name + " and its bar " + tq.arrow_name(tq.bar(a)) + " both virtual");
  }
  for (const auto& cycle : tq.f_cycles().cycles()) {
    int count = 0;
    for (int a : cycle) count += virt[a] ? 1 : 0;
    b.require(count <= 1, "(2) f-cycle through " + tq.arrow_name(cycle.front()) + " has " + std::to_string(count) +
                              " virtual arrows");
  }
  return std::move(b).finish();
}

/// One embedded copy of Q'. At the shared vertex the arrow on the g-3-cycle
/// is `abar`, the one on the g-2-cycle is `alpha`.
struct QPrimeHit {
  VertexIndex vertex;
  ArrowIndex abar, alpha, beta, f_beta, f2_beta;
  int short_length;  // g-cycle through beta
  int long_length;   // g-cycle through f(abar)
};

inline std::vector<QPrimeHit> find_qprime_configs(const TriangulationQuiver& tq) {
  std::vector<QPrimeHit> hits;
  for (int v = 0; v < tq.num_vertices(); ++v) {
    const auto& out = tq.out_arrows(v);
    for (int k = 0; k < 2; ++k) {
      const int x = out[k], y = out[1 - k];
      if (tq.n(x) != 3 || tq.n(y) != 2) continue;
      const int beta = tq.g(x);
      hits.push_back({v, x, y, beta, tq.f(beta), tq.f(tq.f(beta)), tq.n(beta), tq.n(tq.f(x))});
    }
  }
  return hits;
}

inline CheckResult qprime_observation(const TriangulationQuiver& tq) {
  CheckBuilder b("qprime-observation");
  for (const auto& h : find_qprime_configs(tq)) {
    const std::string where = "Q' at vertex " + tq.vertex_name(h.vertex) + ": ";
    const int f2alpha = tq.f(tq.f(h.alpha));
    b.require(tq.g(h.beta) == f2alpha && tq.g(f2alpha) == h.abar,
              where + "g-cycle is not (abar beta f^2(alpha))");
    b.require(h.short_length == 3 && h.long_length >= 5 && tq.n(h.f_beta) == h.long_length,
              where + "g-cycle lengths " + std::to_string(h.short_length) + ", " + std::to_string(h.long_length));
    const int fabar = tq.f(h.abar);
    b.require(!(tq.n(h.abar) == 3 && tq.n(fabar) == 3 && tq.n(h.alpha) == 2), where + "n_abar = n_f(abar) = 3, n_alpha = 2");
    b.require(!(tq.n(fabar) == 2 && tq.n(h.abar) == 3 && tq.n(tq.f(h.alpha)) == 3),
              where + "n_f(abar) = 2, n_abar = n_f(alpha) = 3");
  }
  return std::move(b).finish();
}

}  // namespace wsa
