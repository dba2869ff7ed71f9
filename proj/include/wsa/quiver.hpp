#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wsa/errors.hpp"

namespace wsa {

/// Arrows and vertices are addressed by their index in lexicographic order of
/// their identifiers, so every derived ordering is deterministic.
using ArrowIndex = int;
using VertexIndex = int;

struct ArrowSpec {
  std::string id;
  std::string source;
  std::string target;
};

/// Cycles of a permutation, each rotated so its smallest element comes first,
/// listed in order of that element.
class CycleDecomposition {
 public:
  CycleDecomposition() = default;

  static CycleDecomposition of(std::span<const int> perm) {
    CycleDecomposition d;
    d.cycle_of_.assign(perm.size(), -1);
    d.position_.assign(perm.size(), -1);
    for (int start = 0; start < static_cast<int>(perm.size()); ++start) {
      if (d.cycle_of_[start] != -1) continue;
      std::vector<int> cycle;
      int x = start;
      do {
        d.cycle_of_[x] = static_cast<int>(d.cycles_.size());
        d.position_[x] = static_cast<int>(cycle.size());
        cycle.push_back(x);
        x = perm[x];
      } while (x != start);
      d.cycles_.push_back(std::move(cycle));
    }
    return d;
  }

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  std::size_t size() const { return cycles_.size(); }
  int cycle_index(int x) const { return cycle_of_[x]; }
  int position(int x) const { return position_[x]; }
  int length_of(int x) const { return static_cast<int>(cycles_[cycle_of_[x]].size()); }
  /// Smallest element of the cycle containing x.
  int representative(int x) const { return cycles_[cycle_of_[x]].front(); }

 private:
  std::vector<std::vector<int>> cycles_;
  std::vector<int> cycle_of_;
  std::vector<int> position_;
};

/// A connected 2-regular quiver together with a permutation f of its arrows
/// with t(a) = s(f(a)) and f^3 = 1. The involution bar and the permutation
/// g = bar o f are always derived here, never read from input.
class TriangulationQuiver {
 public:
  static TriangulationQuiver build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                                   const std::vector<std::vector<std::string>>& f_cycles) {
    TriangulationQuiver q;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i] == vertices[i - 1])
        throw Error(ErrorKind::InvalidDocument, "duplicate vertex '" + vertices[i] + "'");
    std::sort(arrows.begin(), arrows.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < arrows.size(); ++i)
      if (arrows[i].id == arrows[i - 1].id)
        throw Error(ErrorKind::InvalidDocument, "duplicate arrow '" + arrows[i].id + "'");
    q.vertex_names_ = std::move(vertices);
    for (int v = 0; v < static_cast<int>(q.vertex_names_.size()); ++v) q.vertex_lookup_[q.vertex_names_[v]] = v;

    for (const auto& spec : arrows) {
      const auto s = q.find_vertex(spec.source);
      const auto t = q.find_vertex(spec.target);
      if (!s || !t)
        throw Error(ErrorKind::InvalidDocument, "arrow '" + spec.id + "' uses an unknown vertex");
      q.arrow_lookup_[spec.id] = static_cast<int>(q.arrow_names_.size());
      q.arrow_names_.push_back(spec.id);
      q.source_.push_back(*s);
      q.target_.push_back(*t);
    }
    const int n_arrows = q.num_arrows();

    // f must be a permutation listing each arrow exactly once
    q.f_.assign(n_arrows, -1);
    for (const auto& cycle : f_cycles) {
      if (cycle.empty()) throw Error(ErrorKind::FNotPermutation, "empty cycle in f");
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const auto a = q.find_arrow(cycle[k]);
        if (!a) throw Error(ErrorKind::FNotPermutation, "unknown arrow '" + cycle[k] + "' in f");
        if (q.f_[*a] != -1) throw Error(ErrorKind::FNotPermutation, "arrow '" + cycle[k] + "' appears twice in f");
        const auto next = q.find_arrow(cycle[(k + 1) % cycle.size()]);
        if (!next) throw Error(ErrorKind::FNotPermutation, "unknown arrow '" + cycle[(k + 1) % cycle.size()] + "' in f");
        q.f_[*a] = *next;
      }
    }
    for (int a = 0; a < n_arrows; ++a)
      if (q.f_[a] == -1) throw Error(ErrorKind::FNotPermutation, "arrow '" + q.arrow_names_[a] + "' missing from f");
    {
      std::vector<int> seen(n_arrows, 0);
      for (int a = 0; a < n_arrows; ++a)
        if (seen[q.f_[a]]++) throw Error(ErrorKind::FNotPermutation, "f is not injective at '" + q.arrow_names_[q.f_[a]] + "'");
    }
    for (int a = 0; a < n_arrows; ++a)
      if (q.f_[q.f_[q.f_[a]]] != a)
        throw Error(ErrorKind::FCubeNotIdentity, "f^3 moves arrow '" + q.arrow_names_[a] + "'");
    for (int a = 0; a < n_arrows; ++a)
      if (q.target_[a] != q.source_[q.f_[a]])
        throw Error(ErrorKind::FTargetMismatch, "t(" + q.arrow_names_[a] + ") != s(f(" + q.arrow_names_[a] + ")) = s(" +
                                                    q.arrow_names_[q.f_[a]] + ")");

    const int n_vertices = q.num_vertices();
    std::vector<std::vector<int>> out(n_vertices), in(n_vertices);
    for (int a = 0; a < n_arrows; ++a) {
      out[q.source_[a]].push_back(a);
      in[q.target_[a]].push_back(a);
    }
    for (int v = 0; v < n_vertices; ++v)
      if (out[v].size() != 2 || in[v].size() != 2)
        throw Error(ErrorKind::NotTwoRegular, "vertex '" + q.vertex_names_[v] + "' has out-degree " +
                                                  std::to_string(out[v].size()) + " and in-degree " +
                                                  std::to_string(in[v].size()));
    if (n_vertices < 2) throw Error(ErrorKind::InvalidDocument, "a triangulation quiver needs at least two vertices");
    q.connected_or_throw(out, in);

    for (int v = 0; v < n_vertices; ++v) {
      q.out_.push_back({out[v][0], out[v][1]});
      q.in_.push_back({in[v][0], in[v][1]});
    }
    q.bar_.resize(n_arrows);
    for (int a = 0; a < n_arrows; ++a) {
      const auto& o = q.out_[q.source_[a]];
      q.bar_[a] = o[0] == a ? o[1] : o[0];
    }
    q.g_.resize(n_arrows);
    q.f_inv_.resize(n_arrows);
    q.g_inv_.resize(n_arrows);
    for (int a = 0; a < n_arrows; ++a) {
      q.g_[a] = q.bar_[q.f_[a]];
      q.f_inv_[q.f_[a]] = a;
    }
    for (int a = 0; a < n_arrows; ++a) q.g_inv_[q.g_[a]] = a;
    q.f_cycles_ = CycleDecomposition::of(q.f_);
    q.g_cycles_ = CycleDecomposition::of(q.g_);
    return q;
  }

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_arrows() const { return static_cast<int>(arrow_names_.size()); }

  const std::string& vertex_name(VertexIndex v) const { return vertex_names_[v]; }
  const std::string& arrow_name(ArrowIndex a) const { return arrow_names_[a]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& arrow_names() const { return arrow_names_; }

  std::optional<VertexIndex> find_vertex(const std::string& name) const {
    auto it = vertex_lookup_.find(name);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<ArrowIndex> find_arrow(const std::string& name) const {
    auto it = arrow_lookup_.find(name);
    if (it == arrow_lookup_.end()) return std::nullopt;
    return it->second;
  }
  ArrowIndex arrow(const std::string& name) const {
    auto a = find_arrow(name);
    if (!a) throw Error(ErrorKind::InvalidDocument, "unknown arrow '" + name + "'");
    return *a;
  }
  VertexIndex vertex(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw Error(ErrorKind::InvalidDocument, "unknown vertex '" + name + "'");
    return *v;
  }

  VertexIndex source(ArrowIndex a) const { return source_[a]; }
  VertexIndex target(ArrowIndex a) const { return target_[a]; }
  bool is_loop(ArrowIndex a) const { return source_[a] == target_[a]; }

  ArrowIndex f(ArrowIndex a) const { return f_[a]; }
  ArrowIndex f_inv(ArrowIndex a) const { return f_inv_[a]; }
  ArrowIndex bar(ArrowIndex a) const { return bar_[a]; }
  ArrowIndex g(ArrowIndex a) const { return g_[a]; }
  ArrowIndex g_inv(ArrowIndex a) const { return g_inv_[a]; }
  ArrowIndex g_pow(ArrowIndex a, int k) const {
    const auto& cyc = g_cycles_.cycles()[g_cycles_.cycle_index(a)];
    const int len = static_cast<int>(cyc.size());
    return cyc[((g_cycles_.position(a) + k) % len + len) % len];
  }

  const std::array<int, 2>& out_arrows(VertexIndex v) const { return out_[v]; }
  const std::array<int, 2>& in_arrows(VertexIndex v) const { return in_[v]; }

  const std::vector<int>& f_permutation() const { return f_; }
  const std::vector<int>& g_permutation() const { return g_; }
  const CycleDecomposition& f_cycles() const { return f_cycles_; }
  const CycleDecomposition& g_cycles() const { return g_cycles_; }

  /// Length of the g-cycle through a.
  int n(ArrowIndex a) const { return g_cycles_.length_of(a); }

  std::vector<ArrowSpec> arrow_specs() const {
    std::vector<ArrowSpec> specs;
    for (int a = 0; a < num_arrows(); ++a)
      specs.push_back({arrow_names_[a], vertex_names_[source_[a]], vertex_names_[target_[a]]});
    return specs;
  }

  std::vector<std::vector<std::string>> f_cycle_names() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : f_cycles_.cycles()) {
      std::vector<std::string> names;
      for (int a : c) names.push_back(arrow_names_[a]);
      out.push_back(std::move(names));
    }
    return out;
  }

 private:
  void connected_or_throw(const std::vector<std::vector<int>>& out, const std::vector<std::vector<int>>& in) const {
    const int n = num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a : out[v])
        if (!seen[target_[a]]) seen[target_[a]] = 1, stack.push_back(target_[a]);
      for (int a : in[v])
        if (!seen[source_[a]]) seen[source_[a]] = 1, stack.push_back(source_[a]);
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw Error(ErrorKind::NotConnected, "vertex '" + vertex_names_[v] + "' is not reachable from '" + vertex_names_[0] + "'");
  }

  std::vector<std::string> vertex_names_;
  std::vector<std::string> arrow_names_;
  std::map<std::string, int> vertex_lookup_;
  std::map<std::string, int> arrow_lookup_;
  std::vector<int> source_, target_;
  std::vector<int> f_, f_inv_, bar_, g_, g_inv_;
  std::vector<std::array<int, 2>> out_, in_;
  CycleDecomposition f_cycles_, g_cycles_;
};

}  // namespace wsa
