#include "schur/coloring.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "schur/primes.hpp"

namespace schur {

Coloring::Coloring(DomainKind kind, std::uint64_t n, int k)
    : kind_(kind), n_(n), k_(k), colors_(n + 1, 0) {
  if (n == 0) throw std::invalid_argument("Coloring: n must be positive");
  if (k < 1 || k > 255) throw std::invalid_argument("Coloring: k out of range");
}

int Coloring::color_of(std::uint64_t x) const {
  if (!in_domain(x))
    throw std::out_of_range("Coloring: element " + std::to_string(x) +
                            " not in domain");
  return colors_[x];
}

void Coloring::set_color(std::uint64_t x, int color) {
  if (x < 1 || x > n_) throw std::out_of_range("Coloring: element out of range");
  if (color < 1 || color > k_)
    throw std::invalid_argument("Coloring: color out of range");
  if (kind_ == DomainKind::PrimesUpTo && !is_prime_u64(x))
    throw std::invalid_argument("Coloring: " + std::to_string(x) +
                                " is not prime");
  colors_[x] = static_cast<std::uint8_t>(color);
}

std::vector<std::uint64_t> Coloring::domain_elements() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x <= n_; ++x)
    if (colors_[x] != 0) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> Coloring::color_class_sizes() const {
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(k_) + 1, 0);
  for (std::uint64_t x = 1; x <= n_; ++x)
    if (colors_[x] != 0) ++sizes[colors_[x]];
  return sizes;
}

bool Coloring::color_used(int color) const {
  for (std::uint64_t x = 1; x <= n_; ++x)
    if (colors_[x] == color) return true;
  return false;
}

namespace {

std::vector<std::uint64_t> domain_of(DomainKind kind, std::uint64_t n) {
  std::vector<std::uint64_t> elems;
  if (kind == DomainKind::Interval) {
    for (std::uint64_t x = 1; x <= n; ++x) elems.push_back(x);
  } else {
    for (std::uint64_t x = 2; x <= n; ++x)
      if (is_prime_u64(x)) elems.push_back(x);
  }
  return elems;
}

}  // namespace

Coloring residue_coloring(DomainKind kind, std::uint64_t n, std::uint64_t m,
                          const std::map<std::uint64_t, int>& class_to_color) {
  if (m == 0) throw std::invalid_argument("residue_coloring: modulus m >= 1");
  int k = 1;
  for (const auto& [r, c] : class_to_color) k = std::max(k, c);
  Coloring c(kind, n, k);
  for (std::uint64_t x : domain_of(kind, n)) {
    auto it = class_to_color.find(x % m);
    if (it == class_to_color.end())
      throw std::invalid_argument("residue_coloring: residue " +
                                  std::to_string(x % m) + " (mod " +
                                  std::to_string(m) + ") uncovered");
    c.set_color(x, it->second);
  }
  return c;
}

Coloring random_coloring(DomainKind kind, std::uint64_t n, int k,
                         std::uint64_t seed) {
  Coloring c(kind, n, k);
  std::mt19937_64 gen(seed);
  for (std::uint64_t x : domain_of(kind, n))
    c.set_color(x, 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(k)));
  return c;
}

void store_coloring(const Coloring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("store_coloring: cannot open " + path);
  out << "k=" << c.k() << " domain="
      << (c.kind() == DomainKind::PrimesUpTo ? "primes" : "interval")
      << " n=" << c.n() << "\n";
  for (std::uint64_t x : c.domain_elements()) out << x << ' ' << c.color_of(x) << "\n";
  if (!out) throw std::runtime_error("store_coloring: write failed for " + path);
}

Coloring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_coloring: cannot open " + path);

  auto fail = [&](int line_no, const std::string& why) {
    throw std::runtime_error("load_coloring: " + path + ":" +
                             std::to_string(line_no) + ": " + why);
  };

  std::string line;
  int line_no = 0;
  // header: k=<int> domain=<primes|interval> n=<int>
  int k = 0;
  std::uint64_t n = 0;
  DomainKind kind = DomainKind::Interval;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;  // blank/comment line
    if (tok.rfind("k=", 0) != 0) fail(line_no, "expected header 'k=... domain=... n=...'");
    std::string dtok, ntok;
    if (!(ss >> dtok >> ntok) || dtok.rfind("domain=", 0) != 0 ||
        ntok.rfind("n=", 0) != 0)
      fail(line_no, "malformed header");
    k = std::stoi(tok.substr(2));
    const std::string d = dtok.substr(7);
    if (d == "primes")
      kind = DomainKind::PrimesUpTo;
    else if (d == "interval")
      kind = DomainKind::Interval;
    else
      fail(line_no, "unknown domain '" + d + "'");
    n = std::stoull(ntok.substr(2));
    have_header = true;
    break;
  }
  if (!have_header) throw std::runtime_error("load_coloring: " + path + ": missing header");

  Coloring c(kind, n, k);
  std::vector<bool> seen(n + 1, false);
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::uint64_t x;
    int color;
    if (!(ss >> x)) continue;
    if (!(ss >> color)) fail(line_no, "missing color");
    std::string extra;
    if (ss >> extra) fail(line_no, "trailing token '" + extra + "'");
    if (x < 1 || x > n) fail(line_no, "element " + std::to_string(x) + " out of range");
    if (seen[x]) fail(line_no, "duplicate element " + std::to_string(x));
    if (color < 1 || color > k) fail(line_no, "color out of range");
    try {
      c.set_color(x, color);
    } catch (const std::exception& e) {
      fail(line_no, e.what());
    }
    seen[x] = true;
  }
  // Totality: the assignment must cover the whole declared domain.
  for (std::uint64_t x = 1; x <= n; ++x) {
    const bool should = (kind == DomainKind::Interval) ? true
                                                       : is_prime_u64(x);
    if (should && !seen[x])
      throw std::runtime_error("load_coloring: " + path + ": element " +
                               std::to_string(x) + " has no color");
  }
  return c;
}

}  // namespace schur
