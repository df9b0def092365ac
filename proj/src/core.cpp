#include "symforge/core.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace symforge {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("SYMFORGE_MAX_ORDER"); raw != nullptr) {
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end || value == 0)
      throw std::invalid_argument("SYMFORGE_MAX_ORDER must be a positive integer");
    limits.max_order = value;
  }
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_env();
  return limits;
}

std::vector<Vertex> to_vector(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  return out;
}

VertexSet make_set(std::size_t order, const std::vector<Vertex>& members) {
  VertexSet s(order);
  for (Vertex v : members) {
    if (v >= order) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace symforge
