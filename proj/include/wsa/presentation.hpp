#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wsa/check.hpp"
#include "wsa/combinatorics.hpp"
#include "wsa/errors.hpp"
#include "wsa/field.hpp"
#include "wsa/quiver.hpp"

namespace wsa {

struct Path {
  VertexIndex source = 0;
  VertexIndex target = 0;
  std::vector<ArrowIndex> arrows;

  std::size_t length() const { return arrows.size(); }
  bool stationary() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

inline Path stationary_path(VertexIndex v) { return Path{v, v, {}}; }

inline Path make_path(const TriangulationQuiver& tq, std::vector<ArrowIndex> arrows) {
  if (arrows.empty()) throw Error(ErrorKind::PathIllFormed, "empty arrow sequence without a vertex");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k] < 0 || arrows[k] >= tq.num_arrows())
      throw Error(ErrorKind::PathIllFormed, "arrow index out of range");
    if (k > 0 && tq.target(arrows[k - 1]) != tq.source(arrows[k]))
      throw Error(ErrorKind::PathIllFormed, tq.arrow_name(arrows[k - 1]) + " does not compose with " + tq.arrow_name(arrows[k]));
  }
  return Path{tq.source(arrows.front()), tq.target(arrows.back()), std::move(arrows)};
}

/// Parses "a*b*c" or "e_<vertex>".
inline Path parse_path(const TriangulationQuiver& tq, const std::string& text) {
  if (text.rfind("e_", 0) == 0) {
    auto v = tq.find_vertex(text.substr(2));
    if (v) return stationary_path(*v);
  }
  std::vector<ArrowIndex> arrows;
  std::size_t start = 0;
  while (true) {
    const auto stop = text.find('*', start);
    const auto name = text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    auto a = tq.find_arrow(name);
    if (!a) throw Error(ErrorKind::PathIllFormed, "unknown arrow '" + name + "'");
    arrows.push_back(*a);
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return make_path(tq, std::move(arrows));
}

inline Path concat(const TriangulationQuiver& tq, const Path& p, const Path& q) {
  if (p.target != q.source)
    throw Error(ErrorKind::PathIllFormed, "paths do not compose at " + tq.vertex_name(p.target) + "/" + tq.vertex_name(q.source));
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

inline std::string path_to_string(const TriangulationQuiver& tq, const Path& p) {
  if (p.stationary()) return "e_" + tq.vertex_name(p.source);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += '*';
    s += tq.arrow_name(p.arrows[k]);
  }
  return s;
}

struct Term {
  Rational coeff;
  Path path;
};
using Combination = std::vector<Term>;

/// Raw presentation data as read from a document; nothing about weights or
/// parameters has been checked yet.
struct PresentationData {
  TriangulationQuiver quiver;
  Weights m;                // per g-cycle
  std::vector<Rational> c;  // per g-cycle
  FieldSpec field;
};

enum class ExceptionClause { ZetaF2Virtual, ZetaFBarVirtualShort, XiFVirtual, XiF2VirtualShort };

inline std::string_view clause_text(ExceptionClause c) {
  switch (c) {
    case ExceptionClause::ZetaF2Virtual: return "f^2(a) virtual";
    case ExceptionClause::ZetaFBarVirtualShort: return "f(bar a) virtual and m=1,n=3";
    case ExceptionClause::XiFVirtual: return "f(a) virtual";
    case ExceptionClause::XiF2VirtualShort: return "f^2(a) virtual and m_f(a)=1, n_f(a)=3";
  }
  return "?";
}

struct Type1Relation {
  ArrowIndex arrow;
  Path lhs;        // a f(a)
  Rational coeff;  // c of bar a
  Path rhs;        // A of bar a
};

struct MonomialRelation {
  ArrowIndex arrow;
  Path path;
};

struct ExceptionEntry {
  ArrowIndex arrow;
  bool zeta;  // false means xi
  ExceptionClause clause;
};

struct RelationSet {
  std::vector<Type1Relation> type1;
  std::vector<MonomialRelation> zeta;
  std::vector<MonomialRelation> xi;
  std::vector<ExceptionEntry> exceptions;
  std::vector<std::optional<ExceptionClause>> zeta_exception;  // per arrow
  std::vector<std::optional<ExceptionClause>> xi_exception;    // per arrow
};

/// A validated weighted triangulation quiver: weights are positive, every
/// parameter is a unit in the chosen field and the admissibility clauses hold.
class WeightedPresentation {
 public:
  static WeightedPresentation make(PresentationData data) {
    const auto& tq = data.quiver;
    const auto cycles = tq.g_cycles().size();
    if (data.m.size() != cycles) throw Error(ErrorKind::InvalidWeights, "expected one weight per g-cycle");
    if (data.c.size() != cycles) throw Error(ErrorKind::InvalidDocument, "expected one parameter per g-cycle");
    for (std::size_t k = 0; k < cycles; ++k) {
      const auto& rep = tq.arrow_name(tq.g_cycles().cycles()[k].front());
      if (data.m[k] < 1) throw Error(ErrorKind::InvalidWeights, "weight of g-cycle " + rep + " is " + std::to_string(data.m[k]));
      with_field(data.field, [&](const auto& field) {
        if (field.is_zero(field.from_rational(data.c[k])))
          throw Error(ErrorKind::InvalidScalar, "parameter of g-cycle " + rep + " vanishes in the field");
      });
    }
    const auto violations = check_assumptions(tq, data.m);
    if (!violations.empty()) {
      std::string msg;
      for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + describe(tq, v);
      throw Error(ErrorKind::AssumptionViolated, msg);
    }
    WeightedPresentation p;
    p.data_ = std::move(data);
    p.virtual_ = classify_virtual(p.quiver(), p.data_.m);
    p.relations_ = p.generate_relations();
    return p;
  }

  const PresentationData& data() const { return data_; }
  const TriangulationQuiver& quiver() const { return data_.quiver; }
  const FieldSpec& field() const { return data_.field; }

  int m(ArrowIndex a) const { return weight_of(quiver(), data_.m, a); }
  int n(ArrowIndex a) const { return quiver().n(a); }
  int mn(ArrowIndex a) const { return m(a) * n(a); }
  const Rational& c(ArrowIndex a) const { return data_.c[quiver().g_cycles().cycle_index(a)]; }
  bool is_virtual(ArrowIndex a) const { return virtual_[a]; }
  const std::vector<bool>& virtual_arrows() const { return virtual_; }
  int max_mn() const {
    int best = 0;
    for (int a = 0; a < quiver().num_arrows(); ++a) best = std::max(best, mn(a));
    return best;
  }

  /// a g(a) ... g^{mn-1}(a)
  Path B(ArrowIndex a) const { return g_walk(a, mn(a)); }
  /// B minus its last arrow
  Path A(ArrowIndex a) const { return g_walk(a, mn(a) - 1); }
  /// A minus its first arrow
  Path A_prime(ArrowIndex a) const {
    if (mn(a) - 1 <= 1) return stationary_path(quiver().target(a));
    return g_walk(quiver().g(a), mn(a) - 2);
  }

  Path zeta_path(ArrowIndex a) const {
    const auto& q = quiver();
    return make_path(q, {a, q.f(a), q.g(q.f(a))});
  }
  Path xi_path(ArrowIndex a) const {
    const auto& q = quiver();
    return make_path(q, {a, q.g(a), q.f(q.g(a))});
  }

  const RelationSet& relations() const { return relations_; }

 private:
  Path g_walk(ArrowIndex a, int len) const {
    const auto& q = quiver();
    if (len <= 0) return stationary_path(q.source(a));
    std::vector<ArrowIndex> arrows;
    int x = a;
    for (int k = 0; k < len; ++k) {
      arrows.push_back(x);
      x = q.g(x);
    }
    return make_path(q, std::move(arrows));
  }

  std::optional<ExceptionClause> zeta_clause(ArrowIndex a) const {
    const auto& q = quiver();
    if (is_virtual(q.f(q.f(a)))) return ExceptionClause::ZetaF2Virtual;
    const int b = q.bar(a);
    if (is_virtual(q.f(b)) && m(b) == 1 && n(b) == 3) return ExceptionClause::ZetaFBarVirtualShort;
    return std::nullopt;
  }
  std::optional<ExceptionClause> xi_clause(ArrowIndex a) const {
    const auto& q = quiver();
    if (is_virtual(q.f(a))) return ExceptionClause::XiFVirtual;
    const int fa = q.f(a);
    if (is_virtual(q.f(fa)) && m(fa) == 1 && n(fa) == 3) return ExceptionClause::XiF2VirtualShort;
    return std::nullopt;
  }

  RelationSet generate_relations() const {
    const auto& q = quiver();
    RelationSet r;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const int b = q.bar(a);
      r.type1.push_back({a, make_path(q, {a, q.f(a)}), c(b), A(b)});
      const auto zc = zeta_clause(a);
      const auto xc = xi_clause(a);
      r.zeta_exception.push_back(zc);
      r.xi_exception.push_back(xc);
      if (zc) r.exceptions.push_back({a, true, *zc});
      else r.zeta.push_back({a, zeta_path(a)});
      if (xc) r.exceptions.push_back({a, false, *xc});
      else r.xi.push_back({a, xi_path(a)});
    }
    return r;
  }

  PresentationData data_;
  std::vector<bool> virtual_;
  RelationSet relations_;
};

/// Generator of the ideal as a formal combination; type-1 relations carry
/// two terms, zero relations one.
inline Combination as_combination(const Type1Relation& r) {
  return {{Rational(1), r.lhs}, {Rational(-r.coeff), r.rhs}};
}

/// The exception clauses agree with the hypotheses of the identities for the
/// exceptional products, and f^2(bar a) = g^-1(a) holds arrow-wise.
inline CheckResult exception_equivalence(const WeightedPresentation& p) {
  CheckBuilder b("exception-clause-equivalence");
  const auto& q = p.quiver();
  const auto& rel = p.relations();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& name = q.arrow_name(a);
    const int ab = q.bar(a);
    const int fa = q.f(a);
    b.require(q.f(q.f(ab)) == q.g_inv(a), "f^2(bar " + name + ") != g^-1(" + name + ")");
    b.require(p.is_virtual(q.f(q.f(a))) == p.is_virtual(ab), "f^2(" + name + ") virtual differs from bar virtual");
    const bool zeta_hyp = p.is_virtual(ab) || (p.n(ab) == 3 && p.mn(ab) == 3 && p.is_virtual(q.f(ab)));
    b.require(rel.zeta_exception[a].has_value() == zeta_hyp, "zeta exception at " + name + " disagrees with the scalar identity hypotheses");
    const bool xi_hyp = p.is_virtual(fa) || (p.n(fa) == 3 && p.mn(fa) == 3 && p.is_virtual(ab));
    b.require(rel.xi_exception[a].has_value() == xi_hyp, "xi exception at " + name + " disagrees with the scalar identity hypotheses");
  }
  return std::move(b).finish();
}

struct GabrielQuiver {
  int num_vertices = 0;
  std::vector<ArrowIndex> arrows;
};

inline GabrielQuiver gabriel_quiver(const WeightedPresentation& p) {
  GabrielQuiver g{p.quiver().num_vertices(), {}};
  for (int a = 0; a < p.quiver().num_arrows(); ++a)
    if (!p.is_virtual(a)) g.arrows.push_back(a);
  return g;
}

inline std::string relation_report(const WeightedPresentation& p) {
  const auto& q = p.quiver();
  const auto& rel = p.relations();
  std::ostringstream out;
  for (const auto& r : rel.type1)
    out << "type1 " << q.arrow_name(r.arrow) << ": " << path_to_string(q, r.lhs) << " - (" << rational_to_string(r.coeff)
        << ") " << path_to_string(q, r.rhs) << "\n";
  for (const auto& r : rel.zeta) out << "zeta " << q.arrow_name(r.arrow) << ": " << path_to_string(q, r.path) << "\n";
  for (const auto& r : rel.xi) out << "xi " << q.arrow_name(r.arrow) << ": " << path_to_string(q, r.path) << "\n";
  for (const auto& e : rel.exceptions)
    out << "excepted " << (e.zeta ? "zeta " : "xi ") << q.arrow_name(e.arrow) << ": "
        << path_to_string(q, e.zeta ? p.zeta_path(e.arrow) : p.xi_path(e.arrow)) << " [" << clause_text(e.clause) << "]\n";
  return out.str();
}

inline std::string opposite_arrow_name(const std::string& name) {
  if (name.rfind("op.", 0) == 0) return name.substr(3);
  return "op." + name;
}

/// Reversed quiver with f^op(x^op) = f^2(x)^op; then g^op(x^op) = g^-1(x)^op,
/// so g-cycles correspond and keep their weights and parameters.
inline PresentationData opposite_data(const PresentationData& d) {
  const auto& q = d.quiver;
  std::vector<ArrowSpec> arrows;
  for (int a = 0; a < q.num_arrows(); ++a)
    arrows.push_back({opposite_arrow_name(q.arrow_name(a)), q.vertex_name(q.target(a)), q.vertex_name(q.source(a))});
  std::vector<std::vector<std::string>> f_cycles;
  for (const auto& cyc : q.f_cycles().cycles()) {
    std::vector<std::string> names;
    for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) names.push_back(opposite_arrow_name(q.arrow_name(*it)));
    f_cycles.push_back(std::move(names));
  }
  PresentationData op{TriangulationQuiver::build(q.vertex_names(), std::move(arrows), f_cycles), {}, {}, d.field};
  const auto& oq = op.quiver;
  op.m.resize(oq.g_cycles().size());
  op.c.resize(oq.g_cycles().size());
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int oa = oq.arrow(opposite_arrow_name(q.arrow_name(a)));
    op.m[oq.g_cycles().cycle_index(oa)] = d.m[q.g_cycles().cycle_index(a)];
    op.c[oq.g_cycles().cycle_index(oa)] = d.c[q.g_cycles().cycle_index(a)];
  }
  return op;
}

inline WeightedPresentation opposite(const WeightedPresentation& p) { return WeightedPresentation::make(opposite_data(p.data())); }

/// Arrow of the original quiver whose xi corresponds to the zeta of the
/// opposite arrow x^op.
inline ArrowIndex xi_partner_of_opposite_zeta(const TriangulationQuiver& q, ArrowIndex x) { return q.g_inv(q.f(q.f(x))); }

}  // namespace wsa
