#include "symforge/vect.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "symforge/core.hpp"

namespace symforge {

Space::Space(int n_, int q_) : n(n_), q(q_) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2, got " + std::to_string(n));
  if (n > 63) throw std::invalid_argument("dimension above 63 is not supported");
  if (!is_prime(q)) throw std::invalid_argument("field order must be prime, got " + std::to_string(q));
}

std::uint64_t Space::nonzero_count() const {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (UINT64_MAX - 1) / static_cast<std::uint64_t>(q))
      throw std::overflow_error("q^n does not fit in 64 bits");
    total *= static_cast<std::uint64_t>(q);
  }
  return total - 1;
}

Vect::Vect(int n, int q, std::vector<int> coeffs) : n_(n), q_(q) {
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " coefficients");
  for (int i = 0; i < n; ++i) {
    int& c = coeffs[i];
    c %= q;
    if (c < 0) c += q;
    if (c != 0) skeleton_ |= Skeleton{1} << i;
  }
  if (skeleton_ == 0) throw std::domain_error("the zero vector is not a vertex");
  if (q != 2) coeffs_ = std::move(coeffs);
}

Vect Vect::from_coeffs(const Space& space, const std::vector<int>& coeffs) {
  return Vect(space.n, space.q, coeffs);
}

Vect Vect::basis(const Space& space, int index) {
  if (index < 0 || index >= space.n) throw std::out_of_range("basis index out of range");
  return from_skeleton(space, Skeleton{1} << index);
}

Vect Vect::from_skeleton(const Space& space, Skeleton skeleton) {
  std::vector<int> coeffs(space.n);
  for (int i = 0; i < space.n; ++i) coeffs[i] = static_cast<int>((skeleton >> i) & 1U);
  if (skeleton >> space.n) throw std::invalid_argument("skeleton has bits beyond the dimension");
  return Vect(space.n, space.q, coeffs);
}

Vect Vect::parse(const Space& space, std::string_view text) {
  std::vector<std::string_view> fields;
  if (space.q > 10) {
    for (std::size_t start = 0;;) {
      auto dot = text.find('.', start);
      fields.push_back(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) fields.push_back(text.substr(i, 1));
  }
  if (static_cast<int>(fields.size()) != space.n)
    throw std::invalid_argument("coefficient string '" + std::string(text) + "' has wrong length");
  std::vector<int> coeffs;
  for (auto field : fields) {
    int c = -1;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), c);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || c < 0 || c >= space.q)
      throw std::invalid_argument("bad coefficient '" + std::string(field) + "'");
    coeffs.push_back(c);
  }
  return Vect(space.n, space.q, coeffs);
}

int Vect::coeff(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("coefficient index out of range");
  return q_ == 2 ? static_cast<int>((skeleton_ >> i) & 1U) : coeffs_[i];
}

std::vector<int> Vect::coeffs() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = coeff(i);
  return out;
}

int Vect::tier() const { return std::popcount(skeleton_); }

std::string Vect::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    int c = coeff(i);
    // q > 10 has no single-digit encoding; fall back to dotted decimals.
    if (q_ > 10) {
      if (i) out += '.';
      out += std::to_string(c);
    } else {
      out += static_cast<char>('0' + c);
    }
  }
  return out;
}

namespace {

void require_same_space(const Vect& a, const Vect& b) {
  if (a.dim() != b.dim() || a.field() != b.field())
    throw std::invalid_argument("vectors belong to different spaces");
}

}  // namespace

Vect operator+(const Vect& a, const Vect& b) {
  require_same_space(a, b);
  std::vector<int> c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Vect(a.n_, a.q_, std::move(c));
}

Vect operator-(const Vect& a, const Vect& b) {
  require_same_space(a, b);
  std::vector<int> c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Vect(a.n_, a.q_, std::move(c));
}

Vect Vect::scaled(int c) const {
  std::vector<int> out = coeffs();
  for (int& x : out) x *= c;
  return Vect(n_, q_, std::move(out));
}

bool Vect::operator==(const Vect& other) const {
  return n_ == other.n_ && q_ == other.q_ && skeleton_ == other.skeleton_ && coeffs_ == other.coeffs_;
}

std::strong_ordering Vect::operator<=>(const Vect& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = q_ <=> other.q_; c != 0) return c;
  for (int i = 0; i < n_; ++i)
    if (auto c = coeff(i) <=> other.coeff(i); c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace symforge
