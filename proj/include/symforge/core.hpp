#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace symforge {

using Vertex = std::uint32_t;

/// Dense vertex subset, one bit per vertex id.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Raised when an operation would exceed a configured resource cap
/// (vertex count or automorphism group size). Never a silent truncation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Limits {
  std::size_t max_order = 64;
  std::size_t max_group_order = 2'000'000;

  /// Defaults, with SYMFORGE_MAX_ORDER overriding the vertex cap.
  static Limits from_env();
};

const Limits& default_limits();

std::vector<Vertex> to_vector(const VertexSet& s);
VertexSet make_set(std::size_t order, const std::vector<Vertex>& members);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

bool is_prime(int q);

}  // namespace symforge
