#pragma once

// Built-in presentations. Default parameters are fixed small integers chosen
// off every known degenerate locus over F_101.

#include <string>
#include <utility>
#include <vector>

#include "wsa/presentation.hpp"

namespace wsa {

namespace detail {

struct CycleValue {
  std::string arrow;  // any arrow on the g-cycle
  int m;
  Rational c;
};

inline PresentationData assemble(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                                 const std::vector<std::vector<std::string>>& f, const std::vector<CycleValue>& values,
                                 int m_default = 1) {
  PresentationData d{TriangulationQuiver::build(std::move(vertices), std::move(arrows), f), {}, {}, {}};
  const auto& g = d.quiver.g_cycles();
  d.m.assign(g.size(), m_default);
  d.c.assign(g.size(), Rational(0));
  for (const auto& v : values) {
    const int k = g.cycle_index(d.quiver.arrow(v.arrow));
    d.m[k] = v.m;
    d.c[k] = v.c;
  }
  for (std::size_t k = 0; k < g.size(); ++k)
    if (sgn(d.c[k]) == 0) d.c[k] = Rational(static_cast<long>(k + 2));
  return d;
}

}  // namespace detail

/// Triangle quiver: a virtual loop at each end of a g-4-cycle.
inline PresentationData catalog_triangle() {
  return detail::assemble({"1", "2", "3"},
                          {{"abar", "1", "1"}, {"alpha", "1", "2"}, {"beta", "2", "1"},
                           {"gamma", "2", "3"}, {"delta", "3", "2"}, {"eps", "3", "3"}},
                          {{"abar", "alpha", "beta"}, {"gamma", "eps", "delta"}},
                          {{"abar", 2, Rational(2)}, {"alpha", 1, Rational(3)}, {"eps", 2, Rational(5)}});
}

/// Spherical quiver: two g-4-cycles and two virtual g-2-cycles, m = 1.
inline PresentationData catalog_spherical() {
  return detail::assemble(
      {"1", "2", "3", "4", "5", "6"},
      {{"alpha", "1", "2"}, {"abar", "1", "3"}, {"alpha1", "2", "3"}, {"alpha2", "3", "1"},
       {"abar1", "3", "4"}, {"abar2", "4", "1"}, {"rho", "2", "5"}, {"rho1", "5", "6"},
       {"rho2", "6", "2"}, {"tau", "5", "4"}, {"sigma", "4", "6"}, {"tau2", "6", "5"}},
      {{"alpha", "alpha1", "alpha2"}, {"abar", "abar1", "abar2"}, {"rho", "rho1", "rho2"}, {"tau", "sigma", "tau2"}},
      {{"abar", 1, Rational(2)}, {"alpha", 1, Rational(3)}, {"alpha1", 1, Rational(5)}, {"rho1", 1, Rational(7)}});
}

/// A virtual 2-cycle beside a virtual loop on the far side of a g-7-cycle
/// that passes through a fixed arrow of f.
inline PresentationData catalog_loop_pair() {
  return detail::assemble(
      {"1", "2", "3", "4", "5"},
      {{"kappa", "1", "1"}, {"a", "1", "2"}, {"abar", "2", "3"}, {"c", "3", "1"}, {"b", "2", "4"},
       {"d", "4", "3"}, {"e", "3", "2"}, {"p", "4", "5"}, {"q", "5", "5"}, {"r", "5", "4"}},
      {{"kappa"}, {"a", "abar", "c"}, {"b", "d", "e"}, {"p", "q", "r"}},
      {{"kappa", 1, Rational(2)}, {"abar", 1, Rational(3)}, {"q", 2, Rational(5)}});
}

/// Cyclic quiver on n vertices with a copy of Q' glued at each vertex i
/// (identified with w_i); every cyclic arrow i -> i+1 is split through a new
/// vertex v_i and the arrow y_i: v_i -> v_{i-1} closes the f-triangle
/// (x_i'' x_{i+1}' y_{i+1}).
inline PresentationData generate_glued(int n) {
  if (n < 1) throw Error(ErrorKind::UnknownCatalogEntry, "GLUED(n) needs n >= 1");
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<std::string>> f;
  std::vector<detail::CycleValue> values;
  auto idx = [n](int i) { return std::to_string(((i - 1) % n + n) % n + 1); };
  for (int i = 1; i <= n; ++i) {
    const auto s = idx(i);
    const auto a = "a" + s, b = "b" + s, c = "c" + s, d = "d" + s, w = "w" + s, v = "v" + s;
    for (const auto& x : {a, b, c, d, w, v}) vertices.push_back(x);
    arrows.insert(arrows.end(), {{"abar" + s, a, c}, {"fabar" + s, c, b}, {"f2abar" + s, b, a},
                                 {"alpha" + s, a, b}, {"falpha" + s, b, d}, {"f2alpha" + s, d, a},
                                 {"beta" + s, c, d}, {"fbeta" + s, d, w}, {"f2beta" + s, w, c},
                                 {"x" + s + "p", w, v}, {"x" + s + "pp", v, "w" + idx(i + 1)},
                                 {"y" + s, v, "v" + idx(i - 1)}});
    f.push_back({"abar" + s, "fabar" + s, "f2abar" + s});
    f.push_back({"alpha" + s, "falpha" + s, "f2alpha" + s});
    f.push_back({"beta" + s, "fbeta" + s, "f2beta" + s});
    f.push_back({"x" + s + "pp", "x" + idx(i + 1) + "p", "y" + idx(i + 1)});
    values.push_back({"abar" + s, 1, Rational(2 * i + 1)});
    values.push_back({"alpha" + s, 1, Rational(2 * i + 2)});
  }
  values.push_back({"fabar1", 1, Rational(3, 2)});
  values.push_back({"y1", n == 1 ? 3 : n == 2 ? 2 : 1, Rational(7)});
  return detail::assemble(std::move(vertices), std::move(arrows), f, values);
}

inline std::vector<std::string> catalog_names() { return {"T", "S", "LOOP-PAIR", "GLUED(n)"}; }

inline PresentationData catalog(const std::string& name) {
  if (name == "T") return catalog_triangle();
  if (name == "S") return catalog_spherical();
  if (name == "LOOP-PAIR") return catalog_loop_pair();
  if (name.rfind("GLUED(", 0) == 0 && name.size() > 7 && name.back() == ')') {
    const auto digits = name.substr(6, name.size() - 7);
    if (!digits.empty() && digits.size() <= 3 && digits.find_first_not_of("0123456789") == std::string::npos) {
      const int n = std::stoi(digits);
      if (n >= 1) return generate_glued(n);
    }
  }
  throw Error(ErrorKind::UnknownCatalogEntry, "no catalog entry named '" + name + "'");
}

}  // namespace wsa
