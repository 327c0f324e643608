#pragma once

#include <cstdint>
#include <vector>

#include "schur/coloring.hpp"
#include "schur/schur_count.hpp"

namespace schur {

// Complete graph on vertices v_0..v_{nv-1} with k-colored edges.
class EdgeColoredClique {
 public:
  EdgeColoredClique(int n_vertices, int k);

  int n_vertices() const { return nv_; }
  int k() const { return k_; }
  int edge_color(int s, int t) const;
  void set_edge_color(int s, int t, int color);

 private:
  int nv_;
  int k_;
  std::vector<std::uint8_t> colors_;  // flat nv x nv, symmetric
};

// K_{n+1} with edge (v_s, v_t) given the color of t - s.
EdgeColoredClique build_clique(const Coloring& c);

// Exact per-color counts of monochromatic vertex triples, index 1..k.
std::vector<std::uint64_t> count_mono_triangles(const EdgeColoredClique& g);

struct Triangle {
  int a = 0, b = 0, c = 0;
  int color = 0;
};

struct PigeonholeResult {
  std::vector<Triangle> triangles;  // each certified monochromatic
  Rational bound;                   // the recursion's theoretical lower bound
  bool bound_vacuous = false;       // bound < 1 at this scale
};

// The inductive pigeonhole proof run as an algorithm: per-vertex majority
// neighborhoods, the exact rational threshold split (ties take the
// recursion branch), and a certified triangle list.
PigeonholeResult extract_mono_triangles_pigeonhole(const EdgeColoredClique& g,
                                                   int k);

bool is_monochromatic(const EdgeColoredClique& g, const Triangle& t);

}  // namespace schur
