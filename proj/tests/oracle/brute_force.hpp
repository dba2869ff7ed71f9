#pragma once

// Independent dimension oracle. Rebuilds the ideal straight from the
// defining relations using nothing but f, bar, g and the per-cycle weights,
// enumerates every path of length < D, spans all two-sided multiples u r v of
// the generators modulo paths of length >= D, and row-reduces densely over
// F_p. Shares no code with the quotient builder.

#include <cstdint>
#include <map>
#include <vector>

#include "wsa/presentation.hpp"

namespace oracle {

struct Poly {
  // path (arrow list) -> coefficient mod p; the empty list never occurs
  std::map<std::vector<int>, std::int64_t> terms;
};

struct Result {
  std::size_t total = 0;
  std::vector<std::size_t> per_vertex;  // dim e_i Lambda
};

class BruteForce {
 public:
  BruteForce(const wsa::PresentationData& d, std::int64_t p) : d_(d), q_(d.quiver), p_(p) {}

  Result dimension(int D) const {
    const int V = q_.num_vertices();
    // paths by (source, target), length 0 .. D-1
    std::vector<std::vector<std::vector<int>>> paths_from(V);
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < q_.num_arrows(); ++a) frontier.push_back({a});
    std::vector<std::vector<int>> all;
    for (int len = 1; len < D; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : frontier) {
        all.push_back(w);
        for (int a = 0; a < q_.num_arrows(); ++a)
          if (q_.source(a) == q_.target(w.back())) {
            auto x = w;
            x.push_back(a);
            next.push_back(std::move(x));
          }
      }
      frontier = std::move(next);
    }
    const auto gens = generators();
    Result r;
    r.per_vertex.assign(V, 0);
    for (int s = 0; s < V; ++s)
      for (int t = 0; t < V; ++t) {
        std::map<std::vector<int>, std::size_t> column;
        for (const auto& w : all)
          if (q_.source(w.front()) == s && q_.target(w.back()) == t) column.emplace(w, column.size());
        const std::size_t paths = column.size() + (s == t ? 1 : 0);
        const std::size_t rank = block_rank(gens, all, column, s, t, D);
        r.per_vertex[s] += paths - rank;
        r.total += paths - rank;
      }
    return r;
  }

 private:
  int cyc(int a) const { return q_.g_cycles().cycle_index(a); }
  int m(int a) const { return d_.m[cyc(a)]; }
  int n(int a) const { return q_.g_cycles().length_of(a); }
  bool virt(int a) const { return m(a) * n(a) == 2; }

  std::int64_t mod(std::int64_t x) const { return ((x % p_) + p_) % p_; }
  std::int64_t inv(std::int64_t x) const {
    std::int64_t r = 1, b = mod(x), e = p_ - 2;
    for (; e; e >>= 1, b = b * b % p_)
      if (e & 1) r = r * b % p_;
    return r;
  }
  std::int64_t scalar(const wsa::Rational& c) const {
    const std::int64_t num = mod(c.get_num().get_si() % p_);
    const std::int64_t den = mod(c.get_den().get_si() % p_);
    return num * inv(den) % p_;
  }

  std::vector<int> g_walk(int a, int len) const {
    std::vector<int> w;
    for (int k = 0; k < len; ++k, a = q_.g(a)) w.push_back(a);
    return w;
  }

  std::vector<Poly> generators() const {
    std::vector<Poly> out;
    for (int a = 0; a < q_.num_arrows(); ++a) {
      const int fa = q_.f(a), b = q_.bar(a);
      Poly t1;
      t1.terms[{a, fa}] = 1;
      const int len = m(b) * n(b) - 1;
      // A of bar a has length >= 1 by the first admissibility clause
      t1.terms[g_walk(b, len)] = mod(-scalar(d_.c[cyc(b)]));
      out.push_back(t1);
      const int ffa = q_.f(fa);
      const int fb = q_.f(b);
      if (!(virt(ffa) || (virt(fb) && m(b) == 1 && n(b) == 3))) {
        Poly z;
        z.terms[{a, fa, q_.g(fa)}] = 1;
        out.push_back(z);
      }
      const int ga = q_.g(a);
      if (!(virt(fa) || (virt(ffa) && m(fa) == 1 && n(fa) == 3))) {
        Poly x;
        x.terms[{a, ga, q_.f(ga)}] = 1;
        out.push_back(x);
      }
    }
    return out;
  }

  std::size_t block_rank(const std::vector<Poly>& gens, const std::vector<std::vector<int>>& all,
                         const std::map<std::vector<int>, std::size_t>& column, int s, int t, int D) const {
    const std::size_t W = column.size();
    std::vector<std::vector<std::int64_t>> echelon;  // rows with leading 1
    std::vector<std::size_t> lead;
    auto absorb = [&](std::vector<std::int64_t> row) {
      for (std::size_t k = 0; k < echelon.size(); ++k)
        if (row[lead[k]]) {
          const auto f = row[lead[k]];
          for (std::size_t j = 0; j < W; ++j) row[j] = mod(row[j] - f * echelon[k][j]);
        }
      std::size_t pv = 0;
      while (pv < W && row[pv] == 0) ++pv;
      if (pv == W) return;
      const auto iv = inv(row[pv]);
      for (auto& x : row) x = x * iv % p_;
      for (std::size_t k = 0; k < echelon.size(); ++k)
        if (echelon[k][pv]) {
          const auto f = echelon[k][pv];
          for (std::size_t j = 0; j < W; ++j) echelon[k][j] = mod(echelon[k][j] - f * row[j]);
        }
      echelon.push_back(std::move(row));
      lead.push_back(pv);
    };
    // left factors: e_s and paths from s; right factors: e_t and paths to t
    std::vector<std::vector<int>> lefts{{}}, rights{{}};
    for (const auto& w : all) {
      if (q_.source(w.front()) == s) lefts.push_back(w);
      if (q_.target(w.back()) == t) rights.push_back(w);
    }
    for (const auto& g : gens) {
      const auto& first = g.terms.begin()->first;
      const int gs = q_.source(first.front()), gt = q_.target(first.back());
      std::size_t shortest = SIZE_MAX;
      for (const auto& [w, c] : g.terms) shortest = std::min(shortest, w.size());
      for (const auto& u : lefts) {
        if ((u.empty() ? s : q_.target(u.back())) != gs) continue;
        for (const auto& v : rights) {
          if ((v.empty() ? t : q_.source(v.front())) != gt) continue;
          if (u.size() + shortest + v.size() >= static_cast<std::size_t>(D)) continue;
          std::vector<std::int64_t> row(W, 0);
          for (const auto& [w, c] : g.terms) {
            if (u.size() + w.size() + v.size() >= static_cast<std::size_t>(D)) continue;
            std::vector<int> x = u;
            x.insert(x.end(), w.begin(), w.end());
            x.insert(x.end(), v.begin(), v.end());
            const auto it = column.find(x);
            row[it->second] = mod(row[it->second] + c);
          }
          absorb(std::move(row));
          if (echelon.size() == W) return W;
        }
      }
    }
    return echelon.size();
  }

  const wsa::PresentationData& d_;
  const wsa::TriangulationQuiver& q_;
  std::int64_t p_;
};

}  // namespace oracle
