#include "permtree/domain.hpp"

#include <algorithm>
#include <stdexcept>

namespace permtree {

DomainSubset::DomainSubset(std::size_t parent_degree, std::vector<Point> points)
    : parent_degree_(parent_degree), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (!points_.empty() && points_.back() >= parent_degree_)
    throw std::invalid_argument("domain point exceeds parent degree");
}

DomainSubset DomainSubset::full(std::size_t degree) {
  std::vector<Point> points(degree);
  for (std::size_t i = 0; i < degree; ++i) points[i] = static_cast<Point>(i);
  return DomainSubset(degree, std::move(points));
}

bool DomainSubset::contains(Point p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<bool> DomainSubset::mask() const {
  std::vector<bool> m(parent_degree_, false);
  for (Point p : points_) m[p] = true;
  return m;
}

bool DomainSubset::invariant_under(const std::vector<Permutation>& gens) const {
  auto m = mask();
  for (const auto& g : gens) {
    if (g.degree() != parent_degree_) throw std::invalid_argument("generator degree mismatch");
    for (Point p : points_)
      if (!m[g(p)]) return false;
  }
  return true;
}

std::vector<int> BlockSystem::block_of() const {
  std::vector<int> result(domain.parent_degree(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Point p : blocks[b]) result[p] = static_cast<int>(b);
  return result;
}

}  // namespace permtree
