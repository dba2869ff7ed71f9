#pragma once

// Symmetrizing form. At each vertex i the socle element is s_i = c_a B_a for
// either arrow a at i (c_a B_a = c_abar B_abar) and phi(s_i) = 1. Where an
// exceptional product lands in the socle, phi is also nonzero on the basis
// elements the commutators tie to it.

#include <optional>
#include <string>
#include <vector>

#include "wsa/algebra.hpp"

namespace wsa {

template <class F>
struct SymmetrizingForm {
  using value_type = typename F::value_type;
  std::vector<value_type> values;  // phi on each basis element
  std::size_t gram_rank = 0;

  value_type operator()(const F& field, const Vec<F>& x) const {
    auto s = field.zero();
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!field.is_zero(values[k]) && !field.is_zero(x[k])) s = field.add(s, field.mul(values[k], x[k]));
    return s;
  }
};

namespace detail {

/// Basis elements linked by phi(b_i b_j) = phi(b_j b_i): x ~ ratio * parent.
/// A class is dead when phi must vanish on it.
template <class F>
struct TraceClasses {
  using value_type = typename F::value_type;
  const F& field;
  std::vector<std::size_t> parent;
  std::vector<value_type> ratio;
  std::vector<char> dead;

  TraceClasses(const F& f, std::size_t n) : field(f), parent(n), ratio(n, f.one()), dead(n, 0) {
    for (std::size_t k = 0; k < n; ++k) parent[k] = k;
  }
  std::pair<std::size_t, value_type> find(std::size_t x) {
    if (parent[x] == x) return {x, field.one()};
    auto [root, r] = find(parent[x]);
    parent[x] = root;
    ratio[x] = field.mul(ratio[x], r);
    return {root, ratio[x]};
  }
  // phi(lx * e_x) = phi(ly * e_y)
  void relate(std::size_t x, const value_type& lx, std::size_t y, const value_type& ly) {
    auto [rx, qx] = find(x);
    auto [ry, qy] = find(y);
    const auto u = field.mul(lx, qx);  // phi(lx e_x) = u phi(root x)
    const auto w = field.mul(ly, qy);
    if (rx == ry) {
      if (!field.equal(u, w)) dead[rx] = 1;
      return;
    }
    // root x = (w / u) root y
    parent[rx] = ry;
    ratio[rx] = field.div(w, u);
    if (dead[rx]) dead[ry] = 1;
  }
  void kill(std::size_t x) { dead[find(x).first] = 1; }
};

template <class F>
std::optional<std::pair<std::size_t, typename F::value_type>> single_term(const F& field, const Vec<F>& v) {
  std::optional<std::pair<std::size_t, typename F::value_type>> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!field.is_zero(v[k])) {
      if (out) throw Error(ErrorKind::NotSymmetricCandidate, "product of basis elements is not a monomial");
      out.emplace(k, v[k]);
    }
  return out;
}

}  // namespace detail

/// Builds phi and certifies phi(xy) = phi(yx) on all basis pairs and that the
/// Gram matrix (phi(b b')) has full rank. phi vanishes on commutators, takes
/// the value 1 on s_i, and is zero on every class of basis elements that the
/// commutators leave free and that contains no s_i.
template <class F>
SymmetrizingForm<F> symmetrizing_form(const QuotientAlgebra<F>& A) {
  const auto& p = A.presentation();
  const auto& q = A.quiver();
  const auto& field = A.field();
  const std::size_t n = A.dim();
  SymmetrizingForm<F> form;
  form.values.assign(n, field.zero());

  std::vector<std::pair<std::size_t, typename F::value_type>> socle;  // s_v = value * b
  for (int v = 0; v < q.num_vertices(); ++v) {
    const auto soc = A.socle_right(v);
    if (soc.size() != 1)
      throw Error(ErrorKind::NotSymmetricCandidate,
                  "socle of e_" + q.vertex_name(v) + "Lambda has dimension " + std::to_string(soc.size()));
    const int a = q.out_arrows(v)[0];
    const auto s = detail::single_term(field, A.scale(A.scalar(p.c(a)), A.evaluate(p.B(a))));
    if (!s) throw Error(ErrorKind::NotSymmetricCandidate, "B_" + q.arrow_name(a) + " vanishes");
    socle.push_back(*s);
  }

  detail::TraceClasses<F> tc(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& bi = A.basis()[i];
      const auto& bj = A.basis()[j];
      if (bi.target != bj.source || bj.target != bi.source) continue;
      const auto xy = detail::single_term(field, A.multiply(A.basis_vector(i), A.basis_vector(j)));
      const auto yx = detail::single_term(field, A.multiply(A.basis_vector(j), A.basis_vector(i)));
      if (xy && yx) tc.relate(xy->first, xy->second, yx->first, yx->second);
      else if (xy) tc.kill(xy->first);
      else if (yx) tc.kill(yx->first);
    }

  // phi(root) per class, fixed by the socle elements
  std::vector<std::optional<typename F::value_type>> root_value(n);
  for (int v = 0; v < q.num_vertices(); ++v) {
    const auto [b, coeff] = socle[v];
    const auto [root, r] = tc.find(b);
    if (tc.dead[root])
      throw Error(ErrorKind::FormNotSymmetric, "every symmetric form vanishes on the socle at " + q.vertex_name(v));
    const auto value = field.inv(field.mul(coeff, r));  // phi(coeff r root) = 1
    if (root_value[root] && !field.equal(*root_value[root], value))
      throw Error(ErrorKind::FormNotSymmetric, "socle elements at " + q.vertex_name(v) + " and another vertex force different values");
    root_value[root] = value;
  }
  for (std::size_t b = 0; b < n; ++b) {
    const auto [root, r] = tc.find(b);
    if (!tc.dead[root] && root_value[root]) form.values[b] = field.mul(r, *root_value[root]);
  }

  Matrix<F> gram(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto xy = form(field, A.multiply(A.basis_vector(i), A.basis_vector(j)));
      const auto yx = form(field, A.multiply(A.basis_vector(j), A.basis_vector(i)));
      if (!field.equal(xy, yx))
        throw Error(ErrorKind::FormNotSymmetric, "phi(b" + std::to_string(i) + " b" + std::to_string(j) + ") = " +
                                                     field.to_string(xy) + " but phi(b" + std::to_string(j) + " b" +
                                                     std::to_string(i) + ") = " + field.to_string(yx));
      gram(i, j) = xy;
    }
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n && !any; ++j) any = !field.is_zero(gram(i, j));
    if (!any) throw Error(ErrorKind::FormDegenerate, "phi(b" + std::to_string(i) + " x) = 0 for every basis element x");
  }
  form.gram_rank = rank(field, gram);
  if (form.gram_rank != n)
    throw Error(ErrorKind::FormDegenerate, "Gram matrix has rank " + std::to_string(form.gram_rank) + " < " + std::to_string(n));
  return form;
}

}  // namespace wsa
