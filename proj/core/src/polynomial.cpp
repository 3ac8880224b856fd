#include "qps/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qps {

BivariatePolynomial BivariatePolynomial::constant(std::int64_t c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, std::int64_t c) {
  BivariatePolynomial p;
  p.add_term(i, j, c);
  return p;
}

void BivariatePolynomial::add_term(int i, int j, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t BivariatePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<BivariatePolynomial::Exponent, std::int64_t>> BivariatePolynomial::grevlex_terms() const {
  std::vector<std::pair<Exponent, std::int64_t>> out(terms_.begin(), terms_.end());
  // higher total degree first; ties: smaller power of the last variable first
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.second < b.first.second;
  });
  return out;
}

std::int64_t BivariatePolynomial::evaluate(std::int64_t x, std::int64_t y) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t v = c;
    for (int k = 0; k < e.first; ++k) v *= x;
    for (int k = 0; k < e.second; ++k) v *= y;
    total += v;
  }
  return total;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

namespace {
void append_power(std::ostringstream& out, char var, int power) {
  if (power == 0) return;
  out << var;
  if (power > 1) out << '^' << power;
}
}  // namespace

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : grevlex_terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = e.first == 0 && e.second == 0;
    if (mag != 1 || constant) out << mag;
    append_power(out, 'x', e.first);
    append_power(out, 'y', e.second);
  }
  return out.str();
}

HilbertPolynomial::HilbertPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertPolynomial HilbertPolynomial::from_dimensions(const std::vector<std::int64_t>& dims) {
  std::vector<std::int64_t> h;
  for (std::size_t k = 0; k < dims.size(); ++k) h.push_back(k == 0 ? dims[0] : dims[k] - dims[k - 1]);
  return HilbertPolynomial(std::move(h));
}

std::int64_t HilbertPolynomial::value_at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

std::string HilbertPolynomial::row() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out << (k ? " " : "") << coeffs_[k];
  return out.str();
}

std::string HilbertPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

}  // namespace qps
