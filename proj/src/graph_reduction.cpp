#include "schur/graph_reduction.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace schur {

EdgeColoredClique::EdgeColoredClique(int n_vertices, int k)
    : nv_(n_vertices), k_(k),
      colors_(static_cast<std::size_t>(n_vertices) * n_vertices, 0) {
  if (n_vertices < 2)
    throw std::invalid_argument("EdgeColoredClique: need at least 2 vertices");
  if (k < 1 || k > 255)
    throw std::invalid_argument("EdgeColoredClique: k out of range");
}

int EdgeColoredClique::edge_color(int s, int t) const {
  if (s == t || s < 0 || t < 0 || s >= nv_ || t >= nv_)
    throw std::out_of_range("EdgeColoredClique: bad edge");
  return colors_[static_cast<std::size_t>(s) * nv_ + t];
}

void EdgeColoredClique::set_edge_color(int s, int t, int color) {
  if (s == t || s < 0 || t < 0 || s >= nv_ || t >= nv_)
    throw std::out_of_range("EdgeColoredClique: bad edge");
  if (color < 1 || color > k_)
    throw std::invalid_argument("EdgeColoredClique: color out of range");
  colors_[static_cast<std::size_t>(s) * nv_ + t] = static_cast<std::uint8_t>(color);
  colors_[static_cast<std::size_t>(t) * nv_ + s] = static_cast<std::uint8_t>(color);
}

EdgeColoredClique build_clique(const Coloring& c) {
  if (c.kind() != DomainKind::Interval)
    throw std::invalid_argument("build_clique: coloring must be over an interval");
  const int n = static_cast<int>(c.n());
  EdgeColoredClique g(n + 1, c.k());
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t <= n; ++t)
      g.set_edge_color(s, t, c.color_of(static_cast<std::uint64_t>(t - s)));
  return g;
}

std::vector<std::uint64_t> count_mono_triangles(const EdgeColoredClique& g) {
  const int nv = g.n_vertices();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.k()) + 1, 0);
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      const int cab = g.edge_color(a, b);
      for (int c = b + 1; c < nv; ++c)
        if (g.edge_color(a, c) == cab && g.edge_color(b, c) == cab) ++counts[cab];
    }
  return counts;
}

bool is_monochromatic(const EdgeColoredClique& g, const Triangle& t) {
  return g.edge_color(t.a, t.b) == t.color && g.edge_color(t.a, t.c) == t.color &&
         g.edge_color(t.b, t.c) == t.color;
}

namespace {

// Recursion body works on a vertex subset of g. `banned` < 0 means no color
// is excluded; otherwise triangles of that color are not collected.
void extract_rec(const EdgeColoredClique& g, const std::vector<int>& verts,
                 int k, int banned, Rational* bound,
                 std::set<std::array<int, 3>>* found,
                 std::vector<Triangle>* out) {
  const int n = static_cast<int>(verts.size());
  auto emit = [&](int a, int b, int c, int color) {
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    if (found->insert(key).second)
      out->push_back(Triangle{key[0], key[1], key[2], color});
  };

  if (n < 3) {
    *bound = 0;
    return;
  }
  if (k <= 1) {
    // Induction base: every triangle in a 1-colored complete graph counts.
    *bound = Rational(n) * (n - 1) * (n - 2) / 6;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int cij = g.edge_color(verts[i], verts[j]);
        if (cij == banned) continue;
        for (int l = j + 1; l < n; ++l)
          if (g.edge_color(verts[i], verts[l]) == cij &&
              g.edge_color(verts[j], verts[l]) == cij)
            emit(verts[i], verts[j], verts[l], cij);
      }
    return;
  }

  const SchurConstant prev = schur_constants(k - 1);
  const Rational threshold =
      prev.c1_prime / (Rational(2) * k * k * k) * n * n;

  bool recursed = false;
  for (int si = 0; si < n; ++si) {
    const int s = verts[si];
    // Majority-color neighborhood of s within the subset.
    std::vector<int> count(static_cast<std::size_t>(g.k()) + 1, 0);
    for (int ti = 0; ti < n; ++ti)
      if (ti != si) ++count[g.edge_color(s, verts[ti])];
    int cs = 1;
    for (int c = 2; c <= g.k(); ++c)
      if (count[c] > count[cs]) cs = c;
    std::vector<int> nbhd;
    for (int ti = 0; ti < n; ++ti)
      if (ti != si && g.edge_color(s, verts[ti]) == cs) nbhd.push_back(verts[ti]);

    // Edges of color cs inside the neighborhood close triangles with s.
    std::uint64_t cs_edges = 0;
    for (std::size_t i = 0; i < nbhd.size(); ++i)
      for (std::size_t j = i + 1; j < nbhd.size(); ++j)
        if (g.edge_color(nbhd[i], nbhd[j]) == cs) {
          ++cs_edges;
          if (cs != banned) emit(s, nbhd[i], nbhd[j], cs);
        }

    // Sparse case (ties included): the proof recurses into the
    // neighborhood with the majority color removed.
    if (!recursed && Rational(cs_edges) <= threshold) {
      recursed = true;
      Rational sub_bound = 0;
      extract_rec(g, nbhd, k - 1, cs, &sub_bound, found, out);
      const Rational m = Rational(static_cast<int>(nbhd.size()));
      Rational rec_bound =
          prev.c1_prime * m * m * m - Rational(cs_edges) * n;
      if (rec_bound < 0) rec_bound = 0;
      if (rec_bound > *bound) *bound = rec_bound;
    }
  }
  if (!recursed) {
    // Dense case: every vertex contributes >= threshold triangles, each
    // triangle counted at most three times.
    Rational dense = prev.c1_prime / (Rational(6) * k * k * k) * n * n * n;
    if (dense > *bound) *bound = dense;
  }
}

}  // namespace

PigeonholeResult extract_mono_triangles_pigeonhole(const EdgeColoredClique& g,
                                                   int k) {
  if (k < 1) throw std::invalid_argument("extract_mono_triangles_pigeonhole: k >= 1");
  PigeonholeResult res;
  res.bound = 0;
  std::vector<int> verts(g.n_vertices());
  for (int i = 0; i < g.n_vertices(); ++i) verts[i] = i;
  std::set<std::array<int, 3>> found;
  extract_rec(g, verts, k, /*banned=*/-1, &res.bound, &found, &res.triangles);
  res.bound_vacuous = res.bound < 1;
  for (const auto& t : res.triangles)
    if (!is_monochromatic(g, t))
      throw std::logic_error("pigeonhole extraction produced a bad triangle");
  return res;
}

}  // namespace schur
