#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schur {

enum class DomainKind { PrimesUpTo, Interval };

// A total k-coloring of either [1, n] or the primes up to n.
// Colors are 1-based; 0 internally marks "not in the domain".
class Coloring {
 public:
  Coloring(DomainKind kind, std::uint64_t n, int k);

  DomainKind kind() const { return kind_; }
  std::uint64_t n() const { return n_; }
  int k() const { return k_; }

  bool in_domain(std::uint64_t x) const {
    return x >= 1 && x <= n_ && colors_[x] != 0;
  }
  // Throws std::out_of_range for x outside the domain.
  int color_of(std::uint64_t x) const;
  void set_color(std::uint64_t x, int color);

  std::vector<std::uint64_t> domain_elements() const;
  std::vector<std::uint64_t> color_class_sizes() const;  // index 1..k
  bool color_used(int color) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  DomainKind kind_;
  std::uint64_t n_;
  int k_;
  std::vector<std::uint8_t> colors_;  // index 1..n; 0 = not in domain
};

Coloring residue_coloring(DomainKind kind, std::uint64_t n, std::uint64_t m,
                          const std::map<std::uint64_t, int>& class_to_color);

// Uniform i.i.d. colors from mt19937_64(seed), color = 1 + next() % k,
// assigned over domain elements in increasing order.
Coloring random_coloring(DomainKind kind, std::uint64_t n, int k,
                         std::uint64_t seed);

Coloring load_coloring(const std::string& path);
void store_coloring(const Coloring& c, const std::string& path);

}  // namespace schur
