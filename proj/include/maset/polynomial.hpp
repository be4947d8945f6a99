// polynomial.hpp -- dense integer polynomials in the color count n

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace maset {

/// Polynomial with exact 64-bit integer coefficients, stored densely in
/// ascending degree order with no trailing zeros.  Every secret count and
/// every equation weight in the pipeline is one of these; there is no
/// floating point anywhere.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::int64_t> ascending);
  explicit Polynomial(std::vector<std::int64_t> ascending);

  static Polynomial constant(std::int64_t c);
  /// The monomial x - c (handy for building shifted powers).
  static Polynomial x_minus(std::int64_t c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  std::int64_t operator()(std::int64_t x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator+=(std::int64_t c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator+(Polynomial a, std::int64_t c) { return a += c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

  /// Human-readable form in descending powers, e.g. "n^2 - n + 1".
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace maset
