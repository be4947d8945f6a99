#include "maset/polynomial.hpp"

#include <sstream>

namespace maset {

Polynomial::Polynomial(std::initializer_list<std::int64_t> ascending)
    : coeffs_(ascending) {
  trim();
}

Polynomial::Polynomial(std::vector<std::int64_t> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::constant(std::int64_t c) { return Polynomial{c}; }

Polynomial Polynomial::x_minus(std::int64_t c) { return Polynomial{-c, 1}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::operator()(std::int64_t x) const {
  std::int64_t value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    value = value * x + *it;
  return value;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator+=(std::int64_t c) {
  if (c == 0) return *this;
  if (coeffs_.empty()) coeffs_.push_back(0);
  coeffs_[0] += c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    std::int64_t c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || d == 0) os << a;
    if (d >= 1) {
      os << var;
      if (d >= 2) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

}  // namespace maset
