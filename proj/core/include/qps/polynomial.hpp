#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qps {

/// Integer polynomial in x and y, stored sparsely as (i, j) -> a_ij with a_ij != 0.
class BivariatePolynomial {
 public:
  using Exponent = std::pair<int, int>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(std::int64_t c);
  static BivariatePolynomial monomial(int i, int j, std::int64_t c = 1);

  std::int64_t coefficient(int i, int j) const;
  const std::map<Exponent, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Terms in graded reverse lexicographic order (x > y), leading term first.
  std::vector<std::pair<Exponent, std::int64_t>> grevlex_terms() const;

  std::int64_t evaluate(std::int64_t x, std::int64_t y) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// e.g. "x^2 + x + y"
  std::string to_string() const;

  void add_term(int i, int j, std::int64_t c);

 private:
  std::map<Exponent, std::int64_t> terms_;
};

/// Polynomial in t with integer coefficients, coefficient of t^k at index k; no trailing zeros.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<std::int64_t> coefficients);
  /// h_0 = dims[0], h_k = dims[k] - dims[k-1].
  static HilbertPolynomial from_dimensions(const std::vector<std::int64_t>& dims);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  std::int64_t coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t value_at_one() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Space-separated coefficient row, e.g. "1 3 6 10 11 6 1"; "0" for the zero polynomial.
  std::string row() const;
  /// e.g. "1 + 2t + 3t^2 + t^3"
  std::string to_string() const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

}  // namespace qps
