#pragma once

// The finite-dimensional quotient KQ/I.
//
// Construction works in the monomial algebra M = KQ/(zero relations + paths of
// length >= D), whose basis is the set of paths avoiding every generated zeta
// or xi window. Every element p*r*q with r a type-1 relation is then, inside
// M, either a binomial w - c*w' or a single monomial. The span of such
// vectors is computed exactly with a union-find over monomials that records
// the scalar ratio to the class root: a class dies if it meets a monomial
// relation or closes a cycle with inconsistent ratios, and otherwise
// contributes one basis element, its least monomial.

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "wsa/matrix.hpp"
#include "wsa/presentation.hpp"

namespace wsa {

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

/// Paths of the monomial algebra M, numbered in discovery order (by length).
struct MonomialPaths {
  std::vector<VertexIndex> source, target;
  std::vector<std::vector<ArrowIndex>> arrows;
  std::vector<std::array<int, 2>> right;  // extension by out_arrows(target)[k], or -1

  int size() const { return static_cast<int>(source.size()); }
};

inline MonomialPaths enumerate_monomial_paths(const WeightedPresentation& p, int D) {
  const auto& q = p.quiver();
  const auto& rel = p.relations();
  auto forbidden = [&](int a, int b, int c) {
    return (b == q.f(a) && c == q.g(b) && !rel.zeta_exception[a]) ||
           (b == q.g(a) && c == q.f(b) && !rel.xi_exception[a]);
  };
  MonomialPaths mp;
  for (int v = 0; v < q.num_vertices(); ++v) {
    mp.source.push_back(v);
    mp.target.push_back(v);
    mp.arrows.emplace_back();
    mp.right.push_back({-1, -1});
  }
  for (int id = 0; id < mp.size(); ++id) {
    if (static_cast<int>(mp.arrows[id].size()) + 1 >= D) continue;
    for (int k = 0; k < 2; ++k) {
      const int a = q.out_arrows(mp.target[id])[k];
      std::vector<int> next = mp.arrows[id];
      const std::size_t L = next.size();
      if (L >= 2 && forbidden(next[L - 2], next[L - 1], a)) continue;
      next.push_back(a);
      const int nid = mp.size();
      mp.source.push_back(mp.source[id]);
      mp.target.push_back(q.target(a));
      mp.arrows.push_back(std::move(next));
      mp.right.push_back({-1, -1});
      mp.right[id][k] = nid;
    }
  }
  return mp;
}

inline int arrow_slot(const std::array<int, 2>& arrows, int a) { return arrows[0] == a ? 0 : (arrows[1] == a ? 1 : -1); }

}  // namespace detail

template <class F>
class QuotientAlgebra {
 public:
  using value_type = typename F::value_type;
  using Element = Vec<F>;

  struct BasisElement {
    VertexIndex source;
    VertexIndex target;
    Path path;
    int monomial;  // index into the monomial path table
  };

  /// Builds at D (default max m*n + 2) and at D + 1 and insists on equal
  /// block dimensions.
  static QuotientAlgebra build(const WeightedPresentation& pres, const F& field, std::optional<int> truncation = std::nullopt) {
    const int D = truncation.value_or(pres.max_mn() + 2);
    if (D < 2) throw Error(ErrorKind::TruncationUnstable, "truncation degree must be at least 2");
    auto algebra = build_at(pres, field, D);
    const auto check = build_at(pres, field, D + 1);
    if (algebra.block_dims_ != check.block_dims_)
      throw Error(ErrorKind::TruncationUnstable, "dimension " + std::to_string(algebra.dim()) + " at degree " + std::to_string(D) +
                                                     " but " + std::to_string(check.dim()) + " at degree " + std::to_string(D + 1));
    algebra.stable_ = true;
    return algebra;
  }

  /// Single build at degree D, without the stabilization check.
  static QuotientAlgebra build_at(const WeightedPresentation& pres, const F& field, int D) {
    QuotientAlgebra A;
    A.pres_ = std::make_shared<const WeightedPresentation>(pres);
    A.field_ = field;
    A.truncation_ = D;
    A.paths_ = detail::enumerate_monomial_paths(pres, D);
    A.build_classes();
    A.build_table();
    return A;
  }

  const WeightedPresentation& presentation() const { return *pres_; }
  const TriangulationQuiver& quiver() const { return pres_->quiver(); }
  const F& field() const { return field_; }
  int truncation() const { return truncation_; }
  bool stabilized() const { return stable_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t monomial_count() const { return static_cast<std::size_t>(paths_.size()); }

  /// dim e_i Lambda e_j
  std::size_t block_dim(VertexIndex i, VertexIndex j) const { return block_dims_[i * quiver().num_vertices() + j]; }
  /// dim e_i Lambda
  std::size_t right_dim(VertexIndex i) const {
    std::size_t s = 0;
    for (int j = 0; j < quiver().num_vertices(); ++j) s += block_dim(i, j);
    return s;
  }
  std::vector<std::size_t> indices_from(VertexIndex i) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < dim(); ++b)
      if (basis_[b].source == i) out.push_back(b);
    return out;
  }
  std::vector<std::size_t> indices_to(VertexIndex j) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < dim(); ++b)
      if (basis_[b].target == j) out.push_back(b);
    return out;
  }

  Element zero() const { return zero_vector(field_, dim()); }
  Element basis_vector(std::size_t b) const {
    Element x = zero();
    x[b] = field_.one();
    return x;
  }
  Element unit(VertexIndex v) const { return basis_vector(stationary_basis_[v]); }
  Element one() const {
    Element x = zero();
    for (int v = 0; v < quiver().num_vertices(); ++v) x[stationary_basis_[v]] = field_.one();
    return x;
  }
  bool is_zero(const Element& x) const { return is_zero_vector<F>(field_, x); }

  Element evaluate(const Path& p) const {
    const auto& q = quiver();
    for (std::size_t k = 1; k < p.arrows.size(); ++k)
      if (q.target(p.arrows[k - 1]) != q.source(p.arrows[k])) throw Error(ErrorKind::PathIllFormed, "path does not compose");
    if (!p.arrows.empty() && (q.source(p.arrows.front()) != p.source || q.target(p.arrows.back()) != p.target))
      throw Error(ErrorKind::PathIllFormed, "path endpoints inconsistent");
    const int id = walk_range(p.source, p.arrows, 0, p.arrows.size());
    return id < 0 ? zero() : dense(id);
  }
  Element evaluate(const Combination& c) const {
    Element x = zero();
    for (const auto& t : c) axpy(field_, x, field_.from_rational(t.coeff), evaluate(t.path));
    return x;
  }
  Element evaluate_arrows(const std::vector<ArrowIndex>& arrows) const { return evaluate(make_path(quiver(), arrows)); }
  Element arrow(ArrowIndex a) const { return evaluate_arrows({a}); }
  value_type scalar(const Rational& q) const { return field_.from_rational(q); }

  Element add(Element x, const Element& y) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = field_.add(x[i], y[i]);
    return x;
  }
  Element sub(Element x, const Element& y) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = field_.sub(x[i], y[i]);
    return x;
  }
  Element scale(const value_type& s, Element x) const { return scaled(field_, s, std::move(x)); }

  Element multiply(const Element& x, const Element& y) const {
    Element r = zero();
    const std::size_t n = dim();
    std::vector<std::size_t> ys;
    for (std::size_t j = 0; j < n; ++j)
      if (!field_.is_zero(y[j])) ys.push_back(j);
    for (std::size_t i = 0; i < n; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j : ys) {
        const int id = table_[i * n + j];
        if (id < 0) continue;
        add_normal_form(r, field_.mul(x[i], y[j]), id);
      }
    }
    return r;
  }

  /// x * a for an arrow a, straight from the monomial table.
  Element times_arrow(const Element& x, ArrowIndex a) const {
    Element r = zero();
    const auto& q = quiver();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(x[i]) || basis_[i].target != q.source(a)) continue;
      const int id = walk(basis_[i].monomial, a);
      if (id >= 0) add_normal_form(r, x[i], id);
    }
    return r;
  }
  Element arrow_times(ArrowIndex a, const Element& x) const {
    Element r = zero();
    const auto& q = quiver();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(x[i]) || basis_[i].source != q.target(a)) continue;
      const auto& arrows = basis_[i].path.arrows;
      const int id = walk_range(walk(q.source(a), a), arrows, 0, arrows.size());
      if (id >= 0) add_normal_form(r, x[i], id);
    }
    return r;
  }

  /// Smallest subspace containing `gens` and closed under x -> x*a.
  Subspace<F> right_closure(const std::vector<Element>& gens) const { return closure(gens, true); }
  /// Smallest subspace containing `gens` and closed under x -> a*x.
  Subspace<F> left_closure(const std::vector<Element>& gens) const { return closure(gens, false); }

  /// x Lambda
  Subspace<F> right_ideal(const Element& x) const { return right_closure(idempotent_parts(x, true)); }
  /// Lambda x
  Subspace<F> left_ideal(const Element& x) const { return left_closure(idempotent_parts(x, false)); }
  /// x J^k, k >= 1
  Subspace<F> right_times_radical(const Element& x, int k) const {
    std::vector<Element> gens{x};
    for (int step = 0; step < k; ++step) {
      std::vector<Element> next;
      for (const auto& g : gens)
        for (int a = 0; a < quiver().num_arrows(); ++a) {
          auto y = times_arrow(g, a);
          if (!is_zero(y)) next.push_back(std::move(y));
        }
      gens = std::move(next);
    }
    return right_closure(gens);
  }
  /// J^k x, k >= 1
  Subspace<F> radical_times_left(const Element& x, int k) const {
    std::vector<Element> gens{x};
    for (int step = 0; step < k; ++step) {
      std::vector<Element> next;
      for (const auto& g : gens)
        for (int a = 0; a < quiver().num_arrows(); ++a) {
          auto y = arrow_times(a, g);
          if (!is_zero(y)) next.push_back(std::move(y));
        }
      gens = std::move(next);
    }
    return left_closure(gens);
  }

  /// J^k as a subspace of Lambda; J^0 = Lambda.
  const Subspace<F>& radical_power(int k) const {
    if (k < 0) k = 0;
    while (static_cast<int>(radical_cache_.size()) <= k) {
      const int next = static_cast<int>(radical_cache_.size());
      Subspace<F> s(field_, dim());
      if (next == 0) {
        for (std::size_t b = 0; b < dim(); ++b) s.insert(basis_vector(b));
      } else if (next == 1) {
        for (std::size_t b = 0; b < dim(); ++b)
          if (!basis_[b].path.stationary()) s.insert(basis_vector(b));
      } else {
        const auto& prev = radical_cache_[next - 1];
        for (const auto& x : prev.basis())
          for (int a = 0; a < quiver().num_arrows(); ++a) s.insert(times_arrow(x, a));
      }
      radical_cache_.push_back(std::move(s));
    }
    return radical_cache_[k];
  }

  /// {x in e_i Lambda : x J = 0}
  std::vector<Element> socle_right(VertexIndex i) const { return socle(i, true); }
  /// {x in Lambda e_i : J x = 0}
  std::vector<Element> socle_left(VertexIndex i) const { return socle(i, false); }

  /// Projection onto e_i Lambda e_j.
  Element component(const Element& x, VertexIndex i, VertexIndex j) const {
    Element r = zero();
    for (std::size_t b = 0; b < dim(); ++b)
      if (basis_[b].source == i && basis_[b].target == j) r[b] = x[b];
    return r;
  }

  std::string element_to_string(const Element& x) const {
    std::string s;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (field_.is_zero(x[b])) continue;
      if (!s.empty()) s += " + ";
      s += field_.to_string(x[b]) + "*" + path_to_string(quiver(), basis_[b].path);
    }
    return s.empty() ? "0" : s;
  }

  /// Deterministic listing of the basis, one element per line.
  std::string dump_basis() const {
    std::ostringstream out;
    out << "dimension " << dim() << " truncation " << truncation_ << "\n";
    for (std::size_t b = 0; b < dim(); ++b)
      out << "b" << b << " " << quiver().vertex_name(basis_[b].source) << "->" << quiver().vertex_name(basis_[b].target)
          << " len " << basis_[b].path.length() << " " << path_to_string(quiver(), basis_[b].path) << "\n";
    return out.str();
  }

  /// Nonzero products of basis elements, one per line.
  std::string dump_table() const {
    std::ostringstream out;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int id = table_[i * n + j];
        if (id < 0) continue;
        Element r = zero();
        add_normal_form(r, field_.one(), id);
        if (is_zero(r)) continue;
        out << "b" << i << " * b" << j << " =";
        for (std::size_t k = 0; k < n; ++k)
          if (!field_.is_zero(r[k])) out << " " << field_.to_string(r[k]) << "*b" << k;
        out << "\n";
      }
    return out.str();
  }

  /// Exhaustive below `exhaustive_limit` basis elements, otherwise `samples`
  /// random composable triples. Returns a witness triple on failure.
  std::optional<std::array<std::size_t, 3>> check_associativity(std::size_t exhaustive_limit = 30, std::size_t samples = 4000,
                                                               std::uint64_t seed = 1) const {
    const std::size_t n = dim();
    auto test = [&](std::size_t i, std::size_t j, std::size_t k) {
      const auto lhs = multiply(multiply(basis_vector(i), basis_vector(j)), basis_vector(k));
      const auto rhs = multiply(basis_vector(i), multiply(basis_vector(j), basis_vector(k)));
      return vectors_equal(field_, lhs, rhs);
    };
    if (n <= exhaustive_limit) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!test(i, j, k)) return std::array<std::size_t, 3>{i, j, k};
      return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t i = pick(rng);
      const auto after_i = indices_from(basis_[i].target);
      const std::size_t j = after_i[rng() % after_i.size()];
      const auto after_j = indices_from(basis_[j].target);
      const std::size_t k = after_j[rng() % after_j.size()];
      if (!test(i, j, k)) return std::array<std::size_t, 3>{i, j, k};
    }
    return std::nullopt;
  }

 private:
  int walk(int id, ArrowIndex a) const {
    if (id < 0) return -1;
    const int slot = detail::arrow_slot(quiver().out_arrows(paths_.target[id]), a);
    return slot < 0 ? -1 : paths_.right[id][slot];
  }
  int walk_range(int id, const std::vector<ArrowIndex>& arrows, std::size_t from, std::size_t to) const {
    for (std::size_t k = from; k < to && id >= 0; ++k) id = walk(id, arrows[k]);
    return id;
  }
  int walk_g(int id, ArrowIndex a, int len) const {
    for (int k = 0; k < len && id >= 0; ++k, a = quiver().g(a)) id = walk(id, a);
    return id;
  }

  std::pair<int, value_type> find(int x) {
    value_type r = field_.one();
    int root = x;
    while (parent_[root] != root) {
      r = field_.mul(r, ratio_[root]);
      root = parent_[root];
    }
    value_type acc = r;
    int cur = x;
    while (parent_[cur] != root && parent_[cur] != cur) {
      const int next = parent_[cur];
      const value_type old = ratio_[cur];
      parent_[cur] = root;
      ratio_[cur] = acc;
      acc = field_.div(acc, old);
      cur = next;
    }
    return {root, r};
  }

  void kill(int x) { killed_[find(x).first] = 1; }

  /// Records x = lambda * y; y < 0 stands for a monomial that vanishes in M.
  void relate(int x, const value_type& lambda, int y) {
    if (y < 0) return kill(x);
    const auto [rx, a] = find(x);
    const auto [ry, b] = find(y);
    const value_type lb = field_.mul(lambda, b);
    if (rx == ry) {
      if (!field_.equal(a, lb)) killed_[rx] = 1;
      return;
    }
    parent_[rx] = ry;
    ratio_[rx] = field_.div(lb, a);
    if (killed_[rx]) killed_[ry] = 1;
  }

  void build_classes() {
    const auto& q = quiver();
    const auto& pres = *pres_;
    const int N = paths_.size();
    parent_.resize(N);
    for (int i = 0; i < N; ++i) parent_[i] = i;
    ratio_.assign(N, field_.one());
    killed_.assign(N, 0);
    std::vector<value_type> c(q.num_arrows());
    for (int x = 0; x < q.num_arrows(); ++x) c[x] = field_.from_rational(pres.c(x));
    std::vector<int> prefix;
    for (int w = 0; w < N; ++w) {
      const auto& arr = paths_.arrows[w];
      const std::size_t L = arr.size();
      if (L == 0) continue;
      prefix.assign(L + 1, -1);
      prefix[0] = paths_.source[w];
      for (std::size_t i = 0; i < L; ++i) prefix[i + 1] = walk(prefix[i], arr[i]);
      for (std::size_t i = 0; i < L; ++i) {
        const int x = arr[i];
        const int xb = q.bar(x);
        // w = p x f(x) q = c_{bar x} p A_{bar x} q
        if (i + 1 < L && arr[i + 1] == q.f(x)) {
          const int id = walk_range(walk_g(prefix[i], xb, pres.mn(xb) - 1), arr, i + 2, L);
          relate(w, c[xb], id);
        }
        // w = p A_x q is a multiple of p bar(x) f(bar x) q, which may vanish in M
        const std::size_t len = static_cast<std::size_t>(pres.mn(x) - 1);
        if (i + len > L) continue;
        bool on_walk = true;
        for (std::size_t k = i + 1; k < i + len && on_walk; ++k) on_walk = arr[k] == q.g(arr[k - 1]);
        if (!on_walk) continue;
        const int id = walk_range(walk(walk(prefix[i], xb), q.f(xb)), arr, i + len, L);
        if (id < 0) kill(w);
      }
    }

    // one basis element per surviving class: its least monomial
    auto less = [&](int x, int y) {
      const auto& ax = paths_.arrows[x];
      const auto& ay = paths_.arrows[y];
      if (ax.size() != ay.size()) return ax.size() < ay.size();
      return ax < ay;
    };
    std::vector<int> rep(N, -1);
    std::vector<std::pair<int, value_type>> cls(N);
    for (int x = 0; x < N; ++x) {
      cls[x] = find(x);
      const int root = cls[x].first;
      if (killed_[root]) continue;
      if (rep[root] < 0 || less(x, rep[root])) rep[root] = x;
    }
    std::vector<int> basis_ids;
    for (int x = 0; x < N; ++x)
      if (!killed_[cls[x].first] && rep[cls[x].first] == x) basis_ids.push_back(x);
    std::sort(basis_ids.begin(), basis_ids.end(), [&](int x, int y) {
      if (paths_.source[x] != paths_.source[y]) return paths_.source[x] < paths_.source[y];
      if (paths_.arrows[x] != paths_.arrows[y]) return less(x, y);
      return paths_.target[x] < paths_.target[y];
    });
    const int V = q.num_vertices();
    std::vector<int> basis_index(N, -1);
    basis_.clear();
    for (int id : basis_ids) {
      basis_index[id] = static_cast<int>(basis_.size());
      basis_.push_back({paths_.source[id], paths_.target[id], Path{paths_.source[id], paths_.target[id], paths_.arrows[id]}, id});
    }
    stationary_basis_.assign(V, 0);
    for (int v = 0; v < V; ++v) {
      if (basis_index[v] < 0) throw Error(ErrorKind::TruncationUnstable, "idempotent e_" + q.vertex_name(v) + " vanishes");
      stationary_basis_[v] = basis_index[v];
    }
    block_dims_.assign(V * V, 0);
    for (const auto& e : basis_) ++block_dims_[e.source * V + e.target];

    nf_basis_.assign(N, -1);
    nf_scalar_.assign(N, field_.zero());
    for (int x = 0; x < N; ++x) {
      const auto [root, r] = cls[x];
      if (killed_[root]) continue;
      const int y = rep[root];
      nf_basis_[x] = basis_index[y];
      nf_scalar_[x] = field_.div(r, cls[y].second);
    }
    parent_.clear();
    ratio_.clear();
    killed_.clear();
  }

  void build_table() {
    const std::size_t n = dim();
    table_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (basis_[i].target != basis_[j].source) continue;
        table_[i * n + j] = walk_range(basis_[i].monomial, basis_[j].path.arrows, 0, basis_[j].path.arrows.size());
      }
  }

  void add_normal_form(Element& r, const value_type& s, int id) const {
    const int b = nf_basis_[id];
    if (b >= 0) r[b] = field_.add(r[b], field_.mul(s, nf_scalar_[id]));
  }

  Element dense(int id) const {
    Element x = zero();
    add_normal_form(x, field_.one(), id);
    return x;
  }

  std::vector<Element> idempotent_parts(const Element& x, bool right) const {
    std::vector<Element> parts;
    for (int v = 0; v < quiver().num_vertices(); ++v) {
      Element y = zero();
      for (std::size_t b = 0; b < dim(); ++b)
        if ((right ? basis_[b].target : basis_[b].source) == v) y[b] = x[b];
      if (!is_zero(y)) parts.push_back(std::move(y));
    }
    return parts;
  }

  Subspace<F> closure(const std::vector<Element>& gens, bool right) const {
    Subspace<F> s(field_, dim());
    std::deque<Element> work;
    for (const auto& g : gens)
      if (s.insert(g)) work.push_back(g);
    while (!work.empty()) {
      Element x = std::move(work.front());
      work.pop_front();
      for (int a = 0; a < quiver().num_arrows(); ++a) {
        Element y = right ? times_arrow(x, a) : arrow_times(a, x);
        if (is_zero(y)) continue;
        if (s.insert(y)) work.push_back(std::move(y));
      }
    }
    return s;
  }

  std::vector<Element> socle(VertexIndex i, bool right) const {
    const auto idx = right ? indices_from(i) : indices_to(i);
    const int arrows = quiver().num_arrows();
    std::vector<Element> images;
    for (std::size_t b : idx) {
      Element img;
      img.reserve(arrows * dim());
      for (int a = 0; a < arrows; ++a) {
        const auto y = right ? times_arrow(basis_vector(b), a) : arrow_times(a, basis_vector(b));
        img.insert(img.end(), y.begin(), y.end());
      }
      images.push_back(std::move(img));
    }
    std::vector<Element> out;
    for (const auto& combo : left_kernel(field_, images, arrows * dim())) {
      Element x = zero();
      for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = combo[k];
      out.push_back(std::move(x));
    }
    return out;
  }

  std::shared_ptr<const WeightedPresentation> pres_;  // owned, so algebras outlive their input
  F field_{};
  int truncation_ = 0;
  bool stable_ = false;
  detail::MonomialPaths paths_;
  std::vector<int> parent_;
  std::vector<value_type> ratio_;
  std::vector<char> killed_;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> stationary_basis_;
  std::vector<std::size_t> block_dims_;
  std::vector<int> nf_basis_;            // per monomial: basis index, or -1 if it vanishes
  std::vector<value_type> nf_scalar_;    // monomial = scalar * basis element
  std::vector<int> table_;
  mutable std::deque<Subspace<F>> radical_cache_;  // deque: returned references survive growth
};

}  // namespace wsa
