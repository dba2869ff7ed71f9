// Command-line front end. Exit codes: 0 success, 1 check failure or
// degenerate/singular classification, 2 input or usage error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "wsa/wsa.hpp"

namespace {

using namespace wsa;

struct Input {
  std::string file;
  std::string catalog;
  std::optional<std::int64_t> field;
  std::optional<std::uint64_t> seed;
  std::optional<int> truncation;
  std::vector<std::string> sets;
  bool json = false;
  bool dump_basis = false;
  bool dump_table = false;
  std::string vertex;
};

/// "--set c:<arrow>[-cycle]=<value>" or "--set m:<arrow>[-cycle]=<value>";
/// the arrow may be any arrow of the g-cycle.
void apply_set(PresentationData& d, const std::string& arg) {
  const auto colon = arg.find(':');
  const auto eq = arg.find('=');
  if (colon == std::string::npos || eq == std::string::npos || eq < colon)
    throw Error(ErrorKind::Usage, "--set expects c:<arrow>=<value> or m:<arrow>=<value>, got '" + arg + "'");
  const auto kind = arg.substr(0, colon);
  auto arrow = arg.substr(colon + 1, eq - colon - 1);
  const auto value = arg.substr(eq + 1);
  if (arrow.size() > 6 && arrow.ends_with("-cycle")) arrow.resize(arrow.size() - 6);
  const auto a = d.quiver.find_arrow(arrow);
  if (!a) throw Error(ErrorKind::Usage, "--set names unknown arrow '" + arrow + "'");
  const auto k = static_cast<std::size_t>(d.quiver.g_cycles().cycle_index(*a));
  if (kind == "c") {
    d.c[k] = parse_rational(value);
  } else if (kind == "m") {
    try {
      std::size_t used = 0;
      const int m = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      d.m[k] = m;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Usage, "--set m: expects an integer, got '" + value + "'");
    }
  } else {
    throw Error(ErrorKind::Usage, "--set kind must be c or m, got '" + kind + "'");
  }
}

PresentationData load(const Input& in) {
  if (in.file.empty() == in.catalog.empty())
    throw Error(ErrorKind::Usage, "give exactly one of an input file or --catalog");
  std::optional<FieldSpec> field;
  if (in.field) field = FieldSpec::make(*in.field);
  PresentationData d = in.file.empty() ? catalog(in.catalog) : load_document(in.file, field);
  if (field) d.field = *field;
  if (in.seed) d = seeded_parameters(std::move(d), *in.seed);
  for (const auto& s : in.sets) apply_set(d, s);
  return d;
}

VertexIndex vertex_of(const TriangulationQuiver& q, const std::string& name) {
  const auto v = q.find_vertex(name);
  if (!v) throw Error(ErrorKind::Usage, "--vertex names unknown vertex '" + name + "'");
  return *v;
}

std::string cycle_text(const TriangulationQuiver& q, const std::vector<int>& cyc) {
  std::string s = "(";
  for (std::size_t k = 0; k < cyc.size(); ++k) s += (k ? " " : "") + q.arrow_name(cyc[k]);
  return s + ")";
}

int cmd_validate(const Input& in) {
  const auto p = WeightedPresentation::make(load(in));
  std::cout << "valid: " << p.quiver().num_vertices() << " vertices, " << p.quiver().num_arrows() << " arrows, "
            << p.quiver().g_cycles().size() << " g-cycles\n";
  return 0;
}

nlohmann::ordered_json derived_json(const WeightedPresentation& p) {
  const auto& q = p.quiver();
  nlohmann::ordered_json j;
  auto cycles = nlohmann::ordered_json::array();
  for (const auto& cyc : q.g_cycles().cycles()) {
    std::vector<std::string> names;
    for (int a : cyc) names.push_back(q.arrow_name(a));
    cycles.push_back({{"arrows", names}, {"n", cyc.size()}, {"m", p.m(cyc.front())}, {"c", rational_to_string(p.c(cyc.front()))}});
  }
  j["g_cycles"] = cycles;
  std::vector<std::string> virt, gabriel;
  for (int a = 0; a < q.num_arrows(); ++a) (p.is_virtual(a) ? virt : gabriel).push_back(q.arrow_name(a));
  j["virtual_arrows"] = virt;
  j["gabriel_arrows"] = gabriel;
  auto ex = nlohmann::ordered_json::array();
  for (const auto& e : p.relations().exceptions)
    ex.push_back({{"relation", e.zeta ? "zeta" : "xi"},
                  {"arrow", q.arrow_name(e.arrow)},
                  {"path", path_to_string(q, e.zeta ? p.zeta_path(e.arrow) : p.xi_path(e.arrow))},
                  {"clause", clause_text(e.clause)}});
  j["exceptions"] = ex;
  auto hits = nlohmann::ordered_json::array();
  for (const auto& h : find_qprime_configs(q))
    hits.push_back({{"vertex", q.vertex_name(h.vertex)}, {"abar", q.arrow_name(h.abar)}, {"alpha", q.arrow_name(h.alpha)},
                    {"short_length", h.short_length}, {"long_length", h.long_length}});
  j["qprime_hits"] = hits;
  return j;
}

int cmd_info(const Input& in) {
  const auto d = load(in);
  const auto p = WeightedPresentation::make(d);
  const auto& q = p.quiver();
  if (in.json) {
    nlohmann::ordered_json j;
    j["presentation"] = to_json(d);
    j["derived"] = derived_json(p);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "field: " << d.field.characteristic << "\n";
  std::cout << "f-cycles:";
  for (const auto& c : q.f_cycles().cycles()) std::cout << " " << cycle_text(q, c);
  std::cout << "\ng-cycles:\n";
  for (const auto& c : q.g_cycles().cycles())
    std::cout << "  " << cycle_text(q, c) << " n=" << c.size() << " m=" << p.m(c.front()) << " c=" << rational_to_string(p.c(c.front()))
              << "\n";
  std::cout << "virtual:";
  for (int a = 0; a < q.num_arrows(); ++a)
    if (p.is_virtual(a)) std::cout << " " << q.arrow_name(a);
  const auto gq = gabriel_quiver(p);
  std::cout << "\ngabriel quiver: " << gq.num_vertices << " vertices, " << gq.arrows.size() << " arrows:";
  for (int a : gq.arrows) std::cout << " " << q.arrow_name(a);
  std::cout << "\nrelations:\n" << relation_report(p);
  const auto hits = find_qprime_configs(q);
  std::cout << "Q' hits: " << hits.size() << "\n";
  for (const auto& h : hits)
    std::cout << "  vertex " << q.vertex_name(h.vertex) << ": abar=" << q.arrow_name(h.abar) << " alpha=" << q.arrow_name(h.alpha)
              << " beta=" << q.arrow_name(h.beta) << " g-cycle lengths " << h.short_length << ", " << h.long_length << "\n";
  return 0;
}

template <class Fn>
int with_algebra(const Input& in, Fn&& fn) {
  const auto p = WeightedPresentation::make(load(in));
  return with_field(p.field(), [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    const auto A = QuotientAlgebra<F>::build(p, field, in.truncation);
    return fn(A);
  });
}

int cmd_build(const Input& in) {
  return with_algebra(in, [&](const auto& A) {
    const auto& q = A.quiver();
    std::cout << "dimension " << A.dim() << "\n";
    std::cout << "per-vertex";
    for (int v = 0; v < q.num_vertices(); ++v) std::cout << " " << q.vertex_name(v) << ":" << A.right_dim(v);
    std::cout << "\ntruncation " << A.truncation() << " stable at " << A.truncation() + 1 << "\n";
    std::cout << "radical filtration";
    for (int k = 0;; ++k) {
      const auto d = A.radical_power(k).dim();
      std::cout << " " << d;
      if (d == 0) break;
    }
    std::cout << "\n";
    if (in.dump_basis) std::cout << A.dump_basis();
    if (in.dump_table) std::cout << A.dump_table();
    return 0;
  });
}

int cmd_basis(const Input& in) {
  return with_algebra(in, [&](const auto& A) {
    std::cout << A.dump_basis();
    if (in.dump_table) std::cout << A.dump_table();
    return 0;
  });
}

int cmd_socle(const Input& in) {
  return with_algebra(in, [&](const auto& A) {
    const auto& q = A.quiver();
    const auto& p = A.presentation();
    int status = 0;
    for (int v = 0; v < q.num_vertices(); ++v) {
      if (!in.vertex.empty() && v != vertex_of(q, in.vertex)) continue;
      const auto right = A.socle_right(v);
      const auto left = A.socle_left(v);
      std::cout << "vertex " << q.vertex_name(v) << ": right socle dim " << right.size() << ", left socle dim " << left.size() << "\n";
      for (const auto& x : right) std::cout << "  " << A.element_to_string(x) << "\n";
      std::cout << "  B_" << q.arrow_name(q.out_arrows(v)[0]) << " = " << A.element_to_string(A.evaluate(p.B(q.out_arrows(v)[0]))) << "\n";
      if (right.size() != 1) status = 1;
    }
    for (const auto& f : detect_extra_socle(A))
      std::cout << "extra-socle configuration at vertex " << q.vertex_name(f.site.vertex) << ": "
                << (f.site.degenerate ? "DEGENERATE" : "REGULAR") << ", product " << rational_to_string(f.site.product) << "\n";
    return status;
  });
}

int cmd_symmetry(const Input& in) {
  return with_algebra(in, [&](const auto& A) {
    try {
      const auto form = symmetrizing_form(A);
      std::cout << "symmetric: phi(xy) = phi(yx) on all " << A.dim() * A.dim() << " basis pairs, Gram rank " << form.gram_rank << "\n";
      for (std::size_t b = 0; b < A.dim(); ++b)
        if (!A.field().is_zero(form.values[b]))
          std::cout << "  phi(b" << b << " " << path_to_string(A.quiver(), A.basis()[b].path) << ") = " << A.field().to_string(form.values[b])
                    << "\n";
      return 0;
    } catch (const Error& e) {
      std::cout << "not symmetric: " << e.what() << "\n";
      return 1;
    }
  });
}

int cmd_verify(const Input& in) {
  const auto d = load(in);
  VerifyOptions opts;
  opts.truncation = in.truncation;
  const auto r = verify_all(d, opts);
  if (in.json) std::cout << report_json(r).dump(2) << "\n";
  else std::cout << report_text(r);
  // rejected input is an input error even though the report was produced
  if (const auto& a = r.get("assumption"); a.failed()) {
    for (const auto& w : a.witnesses) std::cerr << "error: " << w << "\n";
    return 2;
  }
  return r.verified() ? 0 : 1;
}

int cmd_resolve(const Input& in) {
  return with_algebra(in, [&](const auto& A) {
    const auto& q = A.quiver();
    int status = 0;
    for (int v = 0; v < q.num_vertices(); ++v) {
      if (!in.vertex.empty() && v != vertex_of(q, in.vertex)) continue;
      const auto r = check_period4(A, v);
      std::cout << "S_" << q.vertex_name(v) << "\n";
      for (std::size_t k = 0; k < r.terms.size(); ++k) {
        std::cout << "  P" << k << " =";
        for (int t : r.terms[k]) std::cout << " P_" << q.vertex_name(t);
        std::cout << "\n";
      }
      for (std::size_t k = 0; k < r.syzygy_dims.size(); ++k)
        std::cout << "  dim Omega^" << k + 1 << " = " << dims_to_string(r.syzygy_dims[k]) << "\n";
      if (r.alpha) {
        std::cout << "  setting alpha = " << q.arrow_name(*r.alpha) << ": dim Omega^2 " << (r.omega2_dimension_ok ? "ok" : "wrong")
                  << ", Omega^2 = ann " << (r.omega2_is_annihilator ? "ok" : "wrong") << ", Omega^2 = phi Lambda "
                  << (r.omega2_is_phi_ideal ? "ok" : "wrong") << ", Omega^3 " << (r.omega3_ok ? "ok" : "wrong") << ", terms "
                  << (r.middle_terms_ok ? "ok" : "wrong") << "\n";
      }
      std::cout << "  verdict: " << (r.passed() ? "period 4" : "not period 4") << "\n";
      if (!r.passed()) status = 1;
    }
    for (const auto& s : detect_singular(A.presentation()))
      if (s.singular) std::cout << singular_label(s.kind) << " at " << q.arrow_name(s.alpha) << "\n";
    return status;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify weighted surface algebras"};
  app.require_subcommand(1);
  Input in;
  std::string entry;
  int glued = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", in.file, "quiver document (JSON)");
    sub->add_option("--catalog", in.catalog, "catalog entry: T, S, LOOP-PAIR, GLUED(n)");
    sub->add_option("--field", in.field, "field characteristic (0 or a prime)");
    sub->add_option("--seed", in.seed, "redraw parameters from this seed, avoiding degenerate loci");
    sub->add_option("--set", in.sets, "override c:<arrow>=<value> or m:<arrow>=<value> on a g-cycle");
  };
  auto add_build = [&](CLI::App* sub) {
    add_input(sub);
    sub->add_option("--truncation", in.truncation, "truncation degree D")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a presentation");
  add_input(validate);
  auto* info = app.add_subcommand("info", "cycles, virtual arrows, Gabriel quiver, relations, Q' hits");
  add_input(info);
  info->add_flag("--json", in.json, "emit JSON");
  auto* build = app.add_subcommand("build", "build the quotient algebra");
  add_build(build);
  build->add_flag("--dump-basis", in.dump_basis, "print the basis");
  build->add_flag("--dump-table", in.dump_table, "print the multiplication table");
  auto* basis = app.add_subcommand("basis", "print the basis");
  add_build(basis);
  basis->add_flag("--dump-table", in.dump_table, "also print the multiplication table");
  auto* socle = app.add_subcommand("socle", "socles of the indecomposable projectives");
  add_build(socle);
  socle->add_option("--vertex", in.vertex, "restrict to one vertex");
  auto* symmetry = app.add_subcommand("symmetry", "build and certify the symmetrizing form");
  add_build(symmetry);
  auto* verify = app.add_subcommand("verify", "run every check");
  add_build(verify);
  verify->add_flag("--json", in.json, "emit JSON");
  auto* resolve = app.add_subcommand("resolve", "minimal projective resolutions of simples");
  add_build(resolve);
  resolve->add_option("--vertex", in.vertex, "restrict to one vertex");
  auto* cat = app.add_subcommand("catalog", "list catalog entries or print one as a document");
  cat->add_option("name", entry, "entry to print");
  auto* gen = app.add_subcommand("gen-glued", "print the glued quiver document for n");
  gen->add_option("n", glued, "number of glued copies")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(in);
    if (*info) return cmd_info(in);
    if (*build) return cmd_build(in);
    if (*basis) return cmd_basis(in);
    if (*socle) return cmd_socle(in);
    if (*symmetry) return cmd_symmetry(in);
    if (*verify) return cmd_verify(in);
    if (*resolve) return cmd_resolve(in);
    if (*cat) {
      if (entry.empty()) {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
      } else {
        std::cout << to_document_text(catalog(entry));
      }
      return 0;
    }
    if (*gen) {
      std::cout << to_document_text(generate_glued(glued));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: InvalidDocument: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
