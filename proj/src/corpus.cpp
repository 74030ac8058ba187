#include "permtree/corpus.hpp"

#include <numeric>
#include <stdexcept>

namespace permtree {

namespace {

Permutation cycle_on(std::size_t n, std::vector<Point> points) {
  if (points.size() < 2) return Permutation(n);
  return Permutation::from_cycles(n, {std::move(points)});
}

std::vector<Point> range(Point from, Point to) {
  std::vector<Point> r(to - from);
  std::iota(r.begin(), r.end(), from);
  return r;
}

std::size_t pow_mod(std::size_t b, std::size_t e, std::size_t m) {
  std::size_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::size_t inverse_mod(std::size_t x, std::size_t p) { return pow_mod(x, p - 2, p); }

}  // namespace

std::size_t primitive_root(std::size_t p) {
  if (p == 2) return 1;
  for (std::size_t a = 2; a < p; ++a) {
    bool ok = true;
    std::size_t phi = p - 1, rest = phi;
    for (std::size_t q = 2; q * q <= rest; ++q) {
      if (rest % q) continue;
      while (rest % q == 0) rest /= q;
      if (pow_mod(a, phi / q, p) == 1) ok = false;
    }
    if (rest > 1 && pow_mod(a, phi / rest, p) == 1) ok = false;
    if (ok) return a;
  }
  throw std::invalid_argument("no primitive root");
}

namespace make {

std::vector<Permutation> symmetric(std::size_t n) {
  if (n <= 1) return {Permutation(n)};
  if (n == 2) return {cycle_on(2, {0, 1})};
  return {cycle_on(n, range(0, static_cast<Point>(n))), cycle_on(n, {0, 1})};
}

std::vector<Permutation> alternating(std::size_t n) {
  if (n <= 2) return {Permutation(n)};
  if (n == 3) return {cycle_on(3, {0, 1, 2})};
  auto long_cycle = n % 2 ? range(0, static_cast<Point>(n)) : range(1, static_cast<Point>(n));
  return {cycle_on(n, {0, 1, 2}), cycle_on(n, std::move(long_cycle))};
}

std::vector<Permutation> cyclic(std::size_t n) { return {cycle_on(n, range(0, static_cast<Point>(n)))}; }

std::vector<Permutation> dihedral(std::size_t n) {
  std::vector<Point> reflect(n);
  for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<Point>((n - i) % n);
  return {cycle_on(n, range(0, static_cast<Point>(n))), Permutation(std::move(reflect))};
}

std::vector<Permutation> affine_line(std::size_t p) {
  std::size_t a = primitive_root(p);
  std::vector<Point> shift(p), scale(p);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>(a * x % p);
  }
  return {Permutation(std::move(shift)), Permutation(std::move(scale))};
}

namespace {

std::vector<Permutation> projective(std::size_t p, bool full) {
  const std::size_t inf = p;
  std::size_t a = primitive_root(p);
  std::size_t mult = full ? a : a * a % p;
  std::vector<Point> shift(p + 1), scale(p + 1), invert(p + 1);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>(mult * x % p);
    invert[x] = static_cast<Point>(x == 0 ? inf : (p - inverse_mod(x, p)) % p);
  }
  shift[inf] = scale[inf] = static_cast<Point>(inf);
  invert[inf] = 0;
  return {Permutation(std::move(shift)), Permutation(std::move(scale)), Permutation(std::move(invert))};
}

}  // namespace

std::vector<Permutation> psl2(std::size_t p) { return projective(p, false); }
std::vector<Permutation> pgl2(std::size_t p) { return projective(p, true); }

std::vector<Permutation> wreath(const std::vector<Permutation>& inner, std::size_t k,
                                const std::vector<Permutation>& outer, std::size_t m) {
  const std::size_t n = k * m;
  std::vector<Permutation> gens;
  for (const auto& g : inner) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t i = 0; i < k; ++i) images[i] = g(static_cast<Point>(i));
    gens.emplace_back(std::move(images));
  }
  for (const auto& h : outer) {
    std::vector<Point> images(n);
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < k; ++i)
        images[b * k + i] = static_cast<Point>(h(static_cast<Point>(b)) * k + i);
    gens.emplace_back(std::move(images));
  }
  return gens;
}

std::vector<Permutation> product_action(const std::vector<Permutation>& g, std::size_t k,
                                        const std::vector<Permutation>& h, std::size_t l) {
  std::vector<Permutation> gens;
  for (const auto& x : g) {
    std::vector<Point> images(k * l);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < l; ++j) images[i * l + j] = static_cast<Point>(x(static_cast<Point>(i)) * l + j);
    gens.emplace_back(std::move(images));
  }
  for (const auto& y : h) {
    std::vector<Point> images(k * l);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < l; ++j) images[i * l + j] = static_cast<Point>(i * l + y(static_cast<Point>(j)));
    gens.emplace_back(std::move(images));
  }
  return gens;
}

std::vector<Permutation> direct_sum(const std::vector<Permutation>& g, std::size_t k,
                                    const std::vector<Permutation>& h, std::size_t l) {
  std::vector<Permutation> gens;
  for (const auto& x : g) {
    std::vector<Point> images(k + l);
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t i = 0; i < k; ++i) images[i] = x(static_cast<Point>(i));
    gens.emplace_back(std::move(images));
  }
  for (const auto& y : h) {
    std::vector<Point> images(k + l);
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t j = 0; j < l; ++j) images[k + j] = static_cast<Point>(k + y(static_cast<Point>(j)));
    gens.emplace_back(std::move(images));
  }
  return gens;
}

std::vector<Permutation> on_pairs(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  int count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) index[i][j] = index[j][i] = count++;
  std::vector<Permutation> result;
  for (const auto& g : gens) {
    std::vector<Point> images(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        images[index[i][j]] = static_cast<Point>(index[g(static_cast<Point>(i))][g(static_cast<Point>(j))]);
    result.emplace_back(std::move(images));
  }
  return result;
}

}  // namespace make

namespace {

NamedGroup named(std::string name, std::size_t degree, std::vector<Permutation> gens) {
  return {std::move(name), PermGroup(degree, std::move(gens))};
}

}  // namespace

std::vector<NamedGroup> transitive_corpus() {
  using namespace make;
  std::vector<NamedGroup> c;
  for (std::size_t n : {5, 6, 7, 8, 9, 10, 12, 16, 24, 40})
    c.push_back(named("C" + std::to_string(n), n, cyclic(n)));
  for (std::size_t n : {5, 6, 8, 9, 10, 12, 20})
    c.push_back(named("D" + std::to_string(n), n, dihedral(n)));
  for (std::size_t n = 5; n <= 8; ++n) {
    c.push_back(named("Sym" + std::to_string(n), n, symmetric(n)));
    c.push_back(named("Alt" + std::to_string(n), n, alternating(n)));
  }
  for (std::size_t p : {5, 7, 11, 13, 17, 23, 31, 37})
    c.push_back(named("AGL1_" + std::to_string(p), p, affine_line(p)));
  for (std::size_t p : {5, 7, 11, 13, 17, 19, 29, 37})
    c.push_back(named("PSL2_" + std::to_string(p), p + 1, psl2(p)));
  for (std::size_t p : {5, 7})
    c.push_back(named("PGL2_" + std::to_string(p), p + 1, pgl2(p)));
  c.push_back(named("S3wrS2", 6, wreath(symmetric(3), 3, symmetric(2), 2)));
  c.push_back(named("C2wrC2wrC2", 8, wreath(wreath(cyclic(2), 2, cyclic(2), 2), 4, cyclic(2), 2)));
  c.push_back(named("C2wrC2wrC2wrC2", 16,
                    wreath(wreath(wreath(cyclic(2), 2, cyclic(2), 2), 4, cyclic(2), 2), 8, cyclic(2), 2)));
  c.push_back(named("S3wrS3", 9, wreath(symmetric(3), 3, symmetric(3), 3)));
  c.push_back(named("A5wrC2", 10, wreath(alternating(5), 5, cyclic(2), 2)));
  c.push_back(named("S5wrC2", 10, wreath(symmetric(5), 5, cyclic(2), 2)));
  c.push_back(named("C2wrA5", 10, wreath(cyclic(2), 2, alternating(5), 5)));
  c.push_back(named("C2wrS5", 10, wreath(cyclic(2), 2, symmetric(5), 5)));
  c.push_back(named("C2wrA6", 12, wreath(cyclic(2), 2, alternating(6), 6)));
  c.push_back(named("C3wrA5", 15, wreath(cyclic(3), 3, alternating(5), 5)));
  c.push_back(named("S4wrS2", 8, wreath(symmetric(4), 4, symmetric(2), 2)));
  c.push_back(named("A4wrC2", 8, wreath(alternating(4), 4, cyclic(2), 2)));
  c.push_back(named("C5wrC2", 10, wreath(cyclic(5), 5, cyclic(2), 2)));
  c.push_back(named("A5xC2_prod", 10, product_action(alternating(5), 5, cyclic(2), 2)));
  c.push_back(named("A5xA5_prod", 25, product_action(alternating(5), 5, alternating(5), 5)));
  c.push_back(named("S3xS3_prod", 9, product_action(symmetric(3), 3, symmetric(3), 3)));
  c.push_back(named("A5xC7_prod", 35, product_action(alternating(5), 5, cyclic(7), 7)));
  c.push_back(named("S5_pairs", 10, on_pairs(symmetric(5), 5)));
  c.push_back(named("A5_pairs", 10, on_pairs(alternating(5), 5)));
  c.push_back(named("S6_pairs", 15, on_pairs(symmetric(6), 6)));
  return c;
}

std::vector<NamedGroup> small_groups() {
  using namespace make;
  std::vector<NamedGroup> c;
  c.push_back(named("C1", 1, {Permutation(1)}));
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8})
    c.push_back(named("C" + std::to_string(n), n, cyclic(n)));
  for (std::size_t n : {3, 4, 5, 6})
    c.push_back(named("D" + std::to_string(n), n, dihedral(n)));
  c.push_back(named("Sym3", 3, symmetric(3)));
  c.push_back(named("Sym4", 4, symmetric(4)));
  c.push_back(named("Alt4", 4, alternating(4)));
  c.push_back(named("V4", 4, {cycle_on(4, {0, 1}), cycle_on(4, {2, 3})}));
  c.push_back(named("C2xC4", 6, direct_sum(cyclic(2), 2, cyclic(4), 4)));
  c.push_back(named("C2^3", 6, direct_sum(cyclic(2), 2, direct_sum(cyclic(2), 2, cyclic(2), 2), 4)));
  c.push_back(named("C3xC3", 6, direct_sum(cyclic(3), 3, cyclic(3), 3)));
  c.push_back(named("S3xC2", 5, direct_sum(symmetric(3), 3, cyclic(2), 2)));
  c.push_back(named("S3xC3", 6, direct_sum(symmetric(3), 3, cyclic(3), 3)));
  c.push_back(named("C2wrC2", 4, wreath(cyclic(2), 2, cyclic(2), 2)));
  c.push_back(named("A4xC2", 6, direct_sum(alternating(4), 4, cyclic(2), 2)));
  return c;
}

}  // namespace permtree
