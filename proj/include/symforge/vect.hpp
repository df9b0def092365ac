#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symforge {

/// Support of a vector in basis coordinates: bit i set iff b_{i+1} occurs
/// with a non-zero coefficient.
using Skeleton = std::uint64_t;

/// An n-dimensional space over the prime field GF(q).
struct Space {
  int n;
  int q;

  /// Throws std::invalid_argument unless n >= 2 and q is prime.
  Space(int n, int q);

  /// q^n - 1, the number of non-zero vectors.
  std::uint64_t nonzero_count() const;
  Skeleton full_skeleton() const { return (Skeleton{1} << n) - 1; }

  bool operator==(const Space&) const = default;
};

/// A non-zero vector over GF(q). For q = 2 the coefficients are the
/// skeleton bits and no coefficient array is stored.
class Vect {
 public:
  static Vect from_coeffs(const Space& space, const std::vector<int>& coeffs);
  static Vect basis(const Space& space, int index);
  /// All coefficients 1 on the given support.
  static Vect from_skeleton(const Space& space, Skeleton skeleton);
  /// Digit string with coordinate 0 (the coefficient of b_1) first, e.g. "101".
  static Vect parse(const Space& space, std::string_view text);

  int dim() const { return n_; }
  int field() const { return q_; }
  int coeff(int i) const;
  std::vector<int> coeffs() const;
  Skeleton skeleton() const { return skeleton_; }
  bool in_skeleton(int i) const { return (skeleton_ >> i) & 1U; }
  int tier() const;

  std::string to_string() const;

  /// Coefficient-wise arithmetic mod q. Throws std::domain_error if the
  /// result is the zero vector.
  friend Vect operator+(const Vect& a, const Vect& b);
  friend Vect operator-(const Vect& a, const Vect& b);
  Vect scaled(int c) const;

  bool operator==(const Vect& other) const;
  /// Lexicographic on the coefficient sequence.
  std::strong_ordering operator<=>(const Vect& other) const;

 private:
  Vect(int n, int q, std::vector<int> coeffs);

  int n_ = 0;
  int q_ = 0;
  Skeleton skeleton_ = 0;
  std::vector<int> coeffs_;
};

}  // namespace symforge
