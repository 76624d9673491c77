#include "aslkit/polynomial.hpp"

#include <functional>
#include <numeric>

#include "aslkit/error.hpp"

namespace aslkit {

MultiPoly MultiPoly::constant(std::size_t nvars, const FieldSpec& field, const ExactScalar& c) {
  MultiPoly p(nvars, field);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::linear(const std::vector<ExactScalar>& coeffs, const FieldSpec& field) {
  MultiPoly p(coeffs.size(), field);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e(coeffs.size(), 0);
    e[k] = 1;
    p.add_term(e, coeffs[k]);
  }
  return p;
}

int MultiPoly::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (deg == -1) deg = d;
    else if (deg != d) return -1;
  }
  return deg;
}

ExactScalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar::zero(field_) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const ExactScalar& c) {
  if (e.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "exponent length does not match");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out(nvars_, field_);
  Exponent e(nvars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = a[k] + b[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.to_string();
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (it->first[k] == 0) continue;
      out += "*x" + std::to_string(k + 1);
      if (it->first[k] > 1) out += "^" + std::to_string(it->first[k]);
    }
  }
  return out;
}

std::vector<Exponent> monomial_basis(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == nvars) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace aslkit
