#include "symforge/constructions.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace symforge {

namespace {

void require_k(int k) {
  if (k < 3) throw std::invalid_argument("family needs k >= 3, got " + std::to_string(k));
  if (k > 30) throw std::invalid_argument("family parameter k too large");
}

}  // namespace

FamilyParams FamilyParams::for_gap(int gap) {
  if (gap < 1) throw std::invalid_argument("requested gap must be positive");
  int k = (gap + 3 + 1) / 2;  // ceil((N + 3) / 2)
  return FamilyParams{k < 3 ? 3 : k};
}

Graph build_family_graph(int k) {
  require_k(k);
  const std::uint32_t u_count = (1U << k) - 2;
  Graph g(u_count + static_cast<std::uint32_t>(k - 1));
  for (std::uint32_t j = 1; j <= u_count; ++j) g.add_edge(family_u(k, j), family_w(k, std::popcount(j)));
  return g;
}

std::int64_t predicted_fix(int k) {
  require_k(k);
  return (std::int64_t{1} << k) - (k + 1);
}

std::int64_t predicted_fxd(int k) {
  require_k(k);
  return (std::int64_t{1} << k) + k - 4;
}

}  // namespace symforge
