#pragma once

// One check per structural property, run against a built algebra and
// collected into a VerificationReport.

#include <random>
#include <sstream>

#include <json.hpp>

#include "wsa/combinatorics.hpp"
#include "wsa/form.hpp"
#include "wsa/homology.hpp"

namespace wsa {

/// x = lambda y with y != 0, if such lambda exists.
template <class F>
std::optional<typename F::value_type> proportion(const F& field, const Vec<F>& x, const Vec<F>& y) {
  std::optional<std::size_t> lead;
  for (std::size_t k = 0; k < y.size() && !lead; ++k)
    if (!field.is_zero(y[k])) lead = k;
  if (!lead) return std::nullopt;
  const auto lambda = field.div(x[*lead], y[*lead]);
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!field.equal(x[k], field.mul(lambda, y[k]))) return std::nullopt;
  return lambda;
}

template <class F>
bool spans_exactly(const QuotientAlgebra<F>& A, const Subspace<F>& s, const std::vector<Vec<F>>& gens) {
  return s.equals(Subspace<F>::span(A.field(), A.dim(), gens));
}

// ---- exceptional products ----------------------------------------------

/// The outcome for the zeta (or xi) product at one arrow: whether its
/// relation was excepted, whether it vanishes in the algebra, and the scalar
/// lambda with product = lambda A when it does not.
template <class F>
struct ProductOutcome {
  ArrowIndex arrow = -1;
  bool excepted = false;
  bool vanishes = false;
  std::optional<typename F::value_type> lambda;    // observed
  std::optional<typename F::value_type> expected;  // from the identities, when excepted
  ArrowIndex target = -1;                          // the A-path is A_target
};

/// zeta = c_abar c_a A_a if bar(a) virtual; c_abar c_f(abar) c_a A_a if
/// n = mn = 3 for bar(a) and f(bar a) virtual.
template <class F>
ProductOutcome<F> zeta_outcome(const QuotientAlgebra<F>& A, ArrowIndex a) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  const auto& field = A.field();
  ProductOutcome<F> o;
  o.arrow = a;
  o.target = a;
  o.excepted = p.relations().zeta_exception[a].has_value();
  const auto z = A.evaluate(p.zeta_path(a));
  o.vanishes = A.is_zero(z);
  o.lambda = proportion(field, z, A.evaluate(p.A(a)));
  const int ab = q.bar(a);
  if (p.is_virtual(ab)) o.expected = A.scalar(p.c(ab) * p.c(a));
  else if (p.n(ab) == 3 && p.mn(ab) == 3 && p.is_virtual(q.f(ab))) o.expected = A.scalar(p.c(ab) * p.c(q.f(ab)) * p.c(a));
  return o;
}

/// xi = c_f(a) c_abar A_abar if f(a) virtual; c_f(a) c_abar c_a A_a if
/// n = mn = 3 for f(a) and bar(a) virtual.
template <class F>
ProductOutcome<F> xi_outcome(const QuotientAlgebra<F>& A, ArrowIndex a) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  const auto& field = A.field();
  ProductOutcome<F> o;
  o.arrow = a;
  o.excepted = p.relations().xi_exception[a].has_value();
  const int fa = q.f(a);
  const int ab = q.bar(a);
  o.target = p.is_virtual(fa) ? ab : a;
  const auto x = A.evaluate(p.xi_path(a));
  o.vanishes = A.is_zero(x);
  o.lambda = proportion(field, x, A.evaluate(p.A(o.target)));
  if (p.is_virtual(fa)) o.expected = A.scalar(p.c(fa) * p.c(ab));
  else if (p.n(fa) == 3 && p.mn(fa) == 3 && p.is_virtual(ab)) o.expected = A.scalar(p.c(fa) * p.c(ab) * p.c(a));
  return o;
}

template <class F>
std::string outcome_text(const QuotientAlgebra<F>& A, const ProductOutcome<F>& o) {
  const auto& field = A.field();
  std::string s = A.quiver().arrow_name(o.arrow) + (o.excepted ? " excepted" : " generated");
  s += o.vanishes ? ", vanishes" : ", nonzero";
  if (o.lambda) s += ", = " + field.to_string(*o.lambda) + " A_" + A.quiver().arrow_name(o.target);
  if (o.expected) s += ", expected " + field.to_string(*o.expected);
  return s;
}

/// Zero relations at loops: zeta and xi vanish at loops, zeta when f(a) is a loop, xi when
/// g(a) is a loop.
template <class F>
CheckResult check_loop_zero_relations(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  CheckBuilder b("loop-zero-relations");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& name = q.arrow_name(a);
    if (q.is_loop(a) || q.is_loop(q.f(a)))
      b.require(A.is_zero(A.evaluate(p.zeta_path(a))), "zeta at " + name + " = " + path_to_string(q, p.zeta_path(a)) + " is nonzero");
    if (q.is_loop(a) || q.is_loop(q.g(a)))
      b.require(A.is_zero(A.evaluate(p.xi_path(a))), "xi at " + name + " = " + path_to_string(q, p.xi_path(a)) + " is nonzero");
  }
  return std::move(b).finish();
}

template <class F>
CheckResult check_exceptional_identities(const QuotientAlgebra<F>& A, bool zeta) {
  const auto& q = A.quiver();
  CheckBuilder b(zeta ? "exceptional-zeta-identities" : "exceptional-xi-identities");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto o = zeta ? zeta_outcome(A, a) : xi_outcome(A, a);
    if (!o.excepted) continue;
    const bool ok = o.expected && o.lambda && A.field().equal(*o.lambda, *o.expected);
    b.require(ok, outcome_text(A, o));
  }
  return std::move(b).finish();
}

/// A product vanishes iff its relation was generated; an excepted product is
/// a nonzero multiple of its A-path.
template <class F>
CheckResult check_exception_duality(const QuotientAlgebra<F>& A) {
  const auto& q = A.quiver();
  CheckBuilder b("exception-duality");
  for (int a = 0; a < q.num_arrows(); ++a)
    for (const auto& [label, o] : {std::pair{"zeta at ", zeta_outcome(A, a)}, std::pair{"xi at ", xi_outcome(A, a)}}) {
      const bool ok = o.excepted ? (!o.vanishes && o.lambda && !A.field().is_zero(*o.lambda)) : o.vanishes;
      b.require(ok, label + outcome_text(A, o));
    }
  return std::move(b).finish();
}

// ---- products around a virtual arrow -------------------------------

struct NeighbourhoodProduct {
  bool zeta;
  ArrowIndex arrow;
};

/// Every zeta or xi monomial through the virtual arrow bar(a).
inline std::vector<NeighbourhoodProduct> virtual_neighbourhood(const WeightedPresentation& p, ArrowIndex a) {
  const auto& q = p.quiver();
  const int v = q.bar(a);
  std::vector<NeighbourhoodProduct> out;
  auto contains = [&](const Path& path) {
    return std::find(path.arrows.begin(), path.arrows.end(), v) != path.arrows.end();
  };
  for (int x = 0; x < q.num_arrows(); ++x) {
    if (contains(p.zeta_path(x))) out.push_back({true, x});
    if (contains(p.xi_path(x))) out.push_back({false, x});
  }
  return out;
}

/// Six products around a virtual non-loop bar(a), four around a virtual loop;
/// all vanish. In the non-loop case they are the listed ones.
template <class F>
CheckResult check_virtual_neighbourhood(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  CheckBuilder b("virtual-neighbourhood-products");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int ab = q.bar(a);
    if (!p.is_virtual(ab)) continue;
    const auto prods = virtual_neighbourhood(p, a);
    const std::string where = "virtual " + q.arrow_name(ab) + ": ";
    const std::size_t expected = q.is_loop(ab) ? 4 : 6;
    b.require(prods.size() == expected, where + std::to_string(prods.size()) + " products, expected " + std::to_string(expected));
    if (!q.is_loop(ab)) {
      const int fa = q.f(a), f2a = q.f(fa), fab = q.f(ab), f2ab = q.f(fab);
      const int beta = q.g_inv(f2ab);
      const std::vector<std::vector<int>> listed{
          {ab, fab, q.g(fab)}, {f2ab, ab, f2a}, {fa, f2a, ab}, {f2a, ab, fab}, {ab, f2a, a}, {beta, f2ab, ab}};
      for (const auto& l : listed) {
        bool found = false;
        for (const auto& pr : prods) {
          const auto path = pr.zeta ? p.zeta_path(pr.arrow) : p.xi_path(pr.arrow);
          found = found || path.arrows == l;
        }
        b.require(found, where + "listed product " + path_to_string(q, make_path(q, l)) + " is not a zeta/xi monomial");
      }
    }
    for (const auto& pr : prods) {
      const auto path = pr.zeta ? p.zeta_path(pr.arrow) : p.xi_path(pr.arrow);
      b.require(A.is_zero(A.evaluate(path)), where + path_to_string(q, path) + " is nonzero");
    }
  }
  return std::move(b).finish();
}

// ---- second socle and socle structure --------------------------------

/// X J = <B1>, J X = <B2>, and B1, B2 annihilated by J on both sides.
template <class F>
void require_second_socle(CheckBuilder& b, const QuotientAlgebra<F>& A, const std::string& where, ArrowIndex x, ArrowIndex b1,
                          ArrowIndex b2) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  const auto X = A.evaluate(p.A(x));
  const auto B1 = A.evaluate(p.B(b1));
  const auto B2 = A.evaluate(p.B(b2));
  const auto ax = "A_" + q.arrow_name(x);
  b.require(spans_exactly(A, A.right_times_radical(X, 1), {B1}), where + ax + " J != <B_" + q.arrow_name(b1) + ">");
  b.require(spans_exactly(A, A.radical_times_left(X, 1), {B2}), where + "J " + ax + " != <B_" + q.arrow_name(b2) + ">");
  for (const auto& [B, id] : {std::pair{B1, b1}, std::pair{B2, b2}}) {
    b.require(A.right_times_radical(B, 1).dim() == 0, where + "B_" + q.arrow_name(id) + " J != 0");
    b.require(A.radical_times_left(B, 1).dim() == 0, where + "J B_" + q.arrow_name(id) + " != 0");
  }
}

template <class F>
CheckResult check_second_socle(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  CheckBuilder b("second-socle");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int ab = q.bar(a), fa = q.f(a), fab = q.f(ab);
    const auto& name = q.arrow_name(a);
    if (p.is_virtual(ab)) require_second_socle(b, A, "zeta at " + name + " (bar virtual): ", a, a, q.f(fab));
    else if (p.n(ab) == 3 && p.mn(ab) == 3 && p.is_virtual(fab))
      require_second_socle(b, A, "zeta at " + name + " (short cycle): ", a, a, q.f(fab));
    if (p.is_virtual(fa)) require_second_socle(b, A, "xi at " + name + " (f virtual): ", ab, ab, q.f(fa));
    else if (p.n(fa) == 3 && p.mn(fa) == 3 && p.is_virtual(ab))
      require_second_socle(b, A, "xi at " + name + " (short cycle): ", a, a, q.f(fab));
  }
  return std::move(b).finish();
}

template <class F>
CheckResult check_socle_structure(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  CheckBuilder b("socle-structure");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& name = q.arrow_name(a);
    const auto B = A.evaluate(p.B(a));
    b.require(!A.is_zero(B), "B_" + name + " = 0");
    b.require(A.right_times_radical(B, 1).dim() == 0, "B_" + name + " J != 0");
    b.require(A.radical_times_left(B, 1).dim() == 0, "J B_" + name + " != 0");
    const auto ratio = proportion(A.field(), B, A.evaluate(p.B(q.bar(a))));
    b.require(ratio && !A.field().is_zero(*ratio), "B_" + name + " is not a nonzero multiple of B_" + q.arrow_name(q.bar(a)));
    const bool special = p.is_virtual(a) || (p.n(a) == 3 && p.mn(a) == 3 && p.is_virtual(q.f(a)));
    const auto AJ2 = A.right_times_radical(A.evaluate(p.A(a)), 2);
    if (special) b.require(spans_exactly(A, AJ2, {B}), "A_" + name + " J^2 != <B_" + name + ">");
    else b.require(AJ2.dim() == 0, "A_" + name + " J^2 != 0");
  }
  return std::move(b).finish();
}

// ---- extra socle -----------------------------------------------------

/// A vertex with a, bar(a) not virtual, f(a), f(bar a) virtual and
/// m n = 4 on both g-cycles; the extra socle element exists exactly when
/// c_f(a) c_abar c_a c_f(abar) = 1.
struct ExtraSocleSite {
  VertexIndex vertex;
  ArrowIndex alpha;
  Rational product;
  bool degenerate = false;
};

inline std::vector<ExtraSocleSite> extra_socle_sites(const WeightedPresentation& p) {
  const auto& q = p.quiver();
  std::vector<ExtraSocleSite> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    const int a = q.out_arrows(v)[0], ab = q.out_arrows(v)[1];
    if (p.is_virtual(a) || p.is_virtual(ab) || !p.is_virtual(q.f(a)) || !p.is_virtual(q.f(ab))) continue;
    if (p.mn(a) != 4 || p.mn(ab) != 4) continue;
    ExtraSocleSite s{v, a, p.c(q.f(a)) * p.c(ab) * p.c(a) * p.c(q.f(ab))};
    with_field(p.field(), [&](const auto& field) { s.degenerate = field.is_one(field.from_rational(s.product)); });
    out.push_back(s);
  }
  return out;
}

template <class F>
struct ExtraSocleFinding {
  ExtraSocleSite site;
  typename F::value_type a{};  // -c_f(alpha) c_abar
  Vec<F> zeta;                 // alpha g(alpha) + a abar g(abar)
  bool annihilated = false;    // zeta J = 0
  bool outside_b = false;      // zeta not in <B_alpha>
  std::size_t socle_dim = 0;
};

template <class F>
std::vector<ExtraSocleFinding<F>> detect_extra_socle(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  std::vector<ExtraSocleFinding<F>> out;
  for (const auto& site : extra_socle_sites(p)) {
    ExtraSocleFinding<F> f;
    f.site = site;
    const int a = site.alpha, ab = q.bar(a);
    f.a = A.field().neg(A.scalar(p.c(q.f(a)) * p.c(ab)));
    f.zeta = A.add(A.evaluate_arrows({a, q.g(a)}), A.scale(f.a, A.evaluate_arrows({ab, q.g(ab)})));
    f.annihilated = A.right_times_radical(f.zeta, 1).dim() == 0;
    f.outside_b = !Subspace<F>::span(A.field(), A.dim(), {A.evaluate(p.B(a))}).contains(f.zeta);
    f.socle_dim = A.socle_right(site.vertex).size();
    out.push_back(std::move(f));
  }
  return out;
}

/// DEGENERATE sites fail with the witness; regular sites need a 1-dimensional
/// socle, and so does every vertex outside the configuration.
template <class F>
CheckResult check_extra_socle(const QuotientAlgebra<F>& A) {
  const auto& q = A.quiver();
  CheckBuilder b("extra-socle");
  std::vector<char> site(q.num_vertices(), 0);
  for (const auto& f : detect_extra_socle(A)) {
    site[f.site.vertex] = 1;
    const std::string where = "vertex " + q.vertex_name(f.site.vertex) + ": ";
    if (f.site.degenerate) {
      b.fail(where + "DEGENERATE, zeta = " + A.element_to_string(f.zeta) + " with a = " + A.field().to_string(f.a) +
             (f.annihilated ? ", zeta J = 0" : ", zeta J != 0") + (f.outside_b ? ", not in <B>" : ", in <B>"));
    } else {
      b.require(f.socle_dim == 1, where + "regular parameters but socle dimension " + std::to_string(f.socle_dim));
      b.note(where + "REGULAR, product " + rational_to_string(f.site.product));
    }
  }
  for (int v = 0; v < q.num_vertices(); ++v)
    if (!site[v]) {
      const auto d = A.socle_right(v).size();
      b.require(d == 1, "vertex " + q.vertex_name(v) + ": socle dimension " + std::to_string(d) + " outside the configuration");
    }
  return std::move(b).finish();
}

// ---- socle and symmetry ------------------------------------------------

template <class F>
CheckResult check_socle_symmetry(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  CheckBuilder b("socle-symmetry");
  bool candidate = true;
  for (int v = 0; v < q.num_vertices(); ++v) {
    const auto B = A.evaluate(p.B(q.out_arrows(v)[0]));
    const auto right = A.socle_right(v);
    const auto left = A.socle_left(v);
    const auto where = "vertex " + q.vertex_name(v) + ": ";
    b.require(right.size() == 1 && spans_exactly(A, Subspace<F>::span(A.field(), A.dim(), right), {B}),
              where + "right socle has dimension " + std::to_string(right.size()) + " or is not <B>");
    b.require(left.size() == 1 && spans_exactly(A, Subspace<F>::span(A.field(), A.dim(), left), {B}),
              where + "left socle has dimension " + std::to_string(left.size()) + " or is not <B>");
    candidate = candidate && right.size() == 1;
  }
  try {
    const auto form = symmetrizing_form(A);
    b.examined();
    std::size_t support = 0;
    for (const auto& v : form.values) support += !A.field().is_zero(v);
    b.note("symmetric form certified on " + std::to_string(A.dim()) + "x" + std::to_string(A.dim()) + " basis pairs, Gram rank " +
           std::to_string(form.gram_rank) + ", support " + std::to_string(support) + " basis elements");
  } catch (const Error& e) {
    b.fail(e.what());
  }
  return std::move(b).finish();
}

// ---- homology ----------------------------------------------------------

template <class F>
std::string period4_text(const QuotientAlgebra<F>& A, const Period4Report<F>& r) {
  const auto& q = A.quiver();
  std::string s = "vertex " + q.vertex_name(r.vertex) + ": terms";
  for (const auto& t : r.terms) {
    s += " [";
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? " " : "") + q.vertex_name(t[k]);
    s += "]";
  }
  s += " syzygy dims";
  for (const auto& d : r.syzygy_dims) s += " " + dims_to_string(d);
  s += r.periodic() ? ", period 4" : ", not period 4";
  if (r.alpha) s += r.setting_ok() ? ", sequence checks pass" : ", sequence checks fail";
  return s;
}

template <class F>
CheckResult check_period_four(const QuotientAlgebra<F>& A) {
  const auto& q = A.quiver();
  CheckBuilder b("period-four");
  for (int v = 0; v < q.num_vertices(); ++v) {
    const auto r = check_period4(A, v);
    b.require(r.passed(), period4_text(A, r));
  }
  return std::move(b).finish();
}

inline CheckResult check_singular(const WeightedPresentation& p) {
  const auto& q = p.quiver();
  CheckBuilder b("singular-classification");
  for (const auto& s : detect_singular(p)) {
    const auto text = "at " + q.arrow_name(s.alpha) + ": scalar " + rational_to_string(s.scalar);
    if (s.singular) b.fail(std::string(singular_label(s.kind)) + " " + text);
    else {
      b.examined();
      b.note(std::string(s.kind == SingularKind::Triangle ? "triangle" : "spherical") + " configuration REGULAR " + text);
    }
  }
  return std::move(b).finish();
}

/// zeta outcomes on the opposite algebra equal xi outcomes here, arrow x^op
/// matching g^-1(f^2(x)), scalars included.
template <class F>
CheckResult check_opposite_duality(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = p.quiver();
  CheckBuilder b("opposite-duality");
  const auto op = opposite(p);
  const auto Aop = QuotientAlgebra<F>::build(op, A.field(), A.truncation() - 2 >= p.max_mn() ? std::optional<int>(A.truncation()) : std::nullopt);
  const auto& oq = op.quiver();
  b.require(Aop.dim() == A.dim(), "dim Lambda^op = " + std::to_string(Aop.dim()) + " != " + std::to_string(A.dim()));
  for (int x = 0; x < q.num_arrows(); ++x) {
    const int xo = oq.arrow(opposite_arrow_name(q.arrow_name(x)));
    const int z = xi_partner_of_opposite_zeta(q, x);
    const auto zo = zeta_outcome(Aop, xo);
    const auto xi = xi_outcome(A, z);
    const auto& field = A.field();
    auto same = [&](const auto& u, const auto& w) { return u.has_value() == w.has_value() && (!u || field.equal(*u, *w)); };
    b.require(zo.excepted == xi.excepted && zo.vanishes == xi.vanishes && same(zo.lambda, xi.lambda) && same(zo.expected, xi.expected),
              "zeta at " + oq.arrow_name(xo) + " [" + outcome_text(Aop, zo) + "] vs xi at " + q.arrow_name(z) + " [" +
                  outcome_text(A, xi) + "]");
  }
  return std::move(b).finish();
}

template <class F>
CheckResult check_associativity(const QuotientAlgebra<F>& A) {
  CheckBuilder b("associativity");
  const auto bad = A.check_associativity();
  if (bad) b.fail("(b" + std::to_string((*bad)[0]) + " b" + std::to_string((*bad)[1]) + ") b" + std::to_string((*bad)[2]) + " differs");
  else b.examined();
  return std::move(b).finish(A.dim() <= 30 ? "exhaustive over basis triples" : "4000 sampled composable triples");
}

// ---- report ------------------------------------------------------------

inline const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "assumption",           "quiver-invariants",           "virtual-arrow-facts",  "qprime-observation",
      "truncation-stable",    "associativity",               "loop-zero-relations",  "exceptional-zeta-identities",
      "exceptional-xi-identities", "exception-duality",      "exception-clause-equivalence",
      "virtual-neighbourhood-products", "second-socle",       "socle-structure",          "extra-socle",
      "socle-symmetry",       "period-four",                 "singular-classification", "opposite-duality"};
  return ids;
}

struct VerificationReport {
  std::vector<CheckResult> checks;  // in check_ids() order
  std::vector<std::string> labels;  // DEGENERATE, SINGULAR-*, CHECK-FAILURE

  bool verified() const { return labels.empty(); }
  const CheckResult& get(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return c;
    throw Error(ErrorKind::Usage, "no check '" + id + "'");
  }
  std::string classification() const {
    if (verified()) return "VERIFIED WEIGHTED SURFACE ALGEBRA";
    std::string s;
    for (const auto& l : labels) s += (s.empty() ? "" : " ") + l;
    return s;
  }
};

inline void finalize(VerificationReport& r) {
  r.labels.clear();
  for (const auto& c : r.checks) {
    if (!c.failed()) continue;
    if (c.id == "extra-socle") r.labels.push_back("DEGENERATE");
    else if (c.id == "singular-classification") {
      for (const auto& w : c.witnesses)
        for (const char* l : {"SINGULAR-TRIANGLE", "SINGULAR-SPHERICAL"})
          if (w.rfind(l, 0) == 0 && std::find(r.labels.begin(), r.labels.end(), l) == r.labels.end()) r.labels.push_back(l);
    } else if (std::find(r.labels.begin(), r.labels.end(), "CHECK-FAILURE") == r.labels.end()) {
      r.labels.push_back("CHECK-FAILURE");
    }
  }
}

struct VerifyOptions {
  std::optional<int> truncation;
};

/// Runs every check. Input the assumption rejects yields a report whose only
/// failure is `assumption`; everything downstream is not-applicable.
inline VerificationReport verify_all(const PresentationData& data, const VerifyOptions& opts = {}) {
  VerificationReport r;
  std::optional<WeightedPresentation> pres;
  {
    CheckBuilder b("assumption");
    const auto violations = check_assumptions(data.quiver, data.m);
    for (const auto& v : violations) b.fail("AssumptionViolated: " + describe(data.quiver, v));
    if (violations.empty()) {
      try {
        pres = WeightedPresentation::make(data);
        b.examined(data.quiver.num_arrows());
      } catch (const Error& e) {
        b.fail(e.what());
      }
    }
    r.checks.push_back(std::move(b).finish());
  }
  auto skip = [&](std::size_t from) {
    for (std::size_t k = from; k < check_ids().size(); ++k)
      r.checks.push_back(CheckResult{check_ids()[k], CheckStatus::NotApplicable, "not run", {}});
  };
  if (!pres) {
    skip(1);
    finalize(r);
    return r;
  }
  const auto& p = *pres;
  r.checks.push_back(quiver_invariants(p.quiver()));
  r.checks.push_back(virtual_facts(p.quiver(), data.m));
  r.checks.push_back(qprime_observation(p.quiver()));

  with_field(p.field(), [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    std::optional<QuotientAlgebra<F>> built;
    {
      CheckBuilder b("truncation-stable");
      try {
        built.emplace(QuotientAlgebra<F>::build(p, field, opts.truncation));
        b.examined();
        b.note("dimension " + std::to_string(built->dim()) + " stable at truncation " + std::to_string(built->truncation()) +
               " and " + std::to_string(built->truncation() + 1));
      } catch (const Error& e) {
        b.fail(e.what());
      }
      r.checks.push_back(std::move(b).finish());
    }
    if (!built) {
      skip(r.checks.size());
      return;
    }
    const auto& A = *built;
    r.checks.push_back(check_associativity(A));
    r.checks.push_back(check_loop_zero_relations(A));
    r.checks.push_back(check_exceptional_identities(A, true));
    r.checks.push_back(check_exceptional_identities(A, false));
    r.checks.push_back(check_exception_duality(A));
    r.checks.push_back(exception_equivalence(p));
    r.checks.push_back(check_virtual_neighbourhood(A));
    r.checks.push_back(check_second_socle(A));
    r.checks.push_back(check_socle_structure(A));
    r.checks.push_back(check_extra_socle(A));
    r.checks.push_back(check_socle_symmetry(A));
    r.checks.push_back(check_period_four(A));
    r.checks.push_back(check_singular(p));
    r.checks.push_back(check_opposite_duality(A));
  });
  finalize(r);
  return r;
}

inline std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << c.id << ": " << status_name(c.status) << " (" << c.summary << ")\n";
    for (const auto& w : c.witnesses) out << "  " << w << "\n";
  }
  out << "classification: " << r.classification() << "\n";
  return out.str();
}

inline nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["verified"] = r.verified();
  j["classification"] = r.classification();
  j["labels"] = r.labels;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"summary", c.summary}, {"witnesses", c.witnesses}});
  return j;
}

// ---- generic parameters ------------------------------------------------

/// True when c avoids the extra-socle and singular loci.
inline bool parameters_generic(const WeightedPresentation& p) {
  for (const auto& s : extra_socle_sites(p))
    if (s.degenerate) return false;
  for (const auto& s : detect_singular(p))
    if (s.singular) return false;
  return true;
}

/// Redraws every parameter from a mt19937_64 stream until the presentation
/// avoids the known loci. Values lie in [1, p-1], or [1, 100] over Q.
inline PresentationData seeded_parameters(PresentationData d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t top = d.field.characteristic == 0 ? 100 : d.field.characteristic - 1;
  std::uniform_int_distribution<std::uint64_t> pick(1, top);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (auto& c : d.c) c = Rational(static_cast<unsigned long>(pick(rng)));
    if (!check_assumptions(d.quiver, d.m).empty()) return d;
    if (parameters_generic(WeightedPresentation::make(d))) return d;
  }
  throw Error(ErrorKind::InvalidScalar, "no generic parameters found from seed " + std::to_string(seed));
}

}  // namespace wsa
