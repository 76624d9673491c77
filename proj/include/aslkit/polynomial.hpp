#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "aslkit/exact.hpp"

namespace aslkit {

using Exponent = std::vector<int>;

// Sparse polynomial in a fixed number of variables over one exact field.
class MultiPoly {
 public:
  MultiPoly(std::size_t nvars, FieldSpec field) : nvars_(nvars), field_(field) {}
  static MultiPoly constant(std::size_t nvars, const FieldSpec& field, const ExactScalar& c);
  // sum_k coeffs[k] * x_k
  static MultiPoly linear(const std::vector<ExactScalar>& coeffs, const FieldSpec& field);

  std::size_t nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }
  const std::map<Exponent, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Common degree of all terms; -1 for the zero polynomial or a mixed-degree one.
  int homogeneous_degree() const;
  ExactScalar coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const ExactScalar& c);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::size_t nvars_;
  FieldSpec field_;
  std::map<Exponent, ExactScalar> terms_;
};

// Exponent vectors of total degree `degree` in graded lexicographic order
// (x_1 > x_2 > ...), i.e. lexicographically decreasing.
std::vector<Exponent> monomial_basis(std::size_t nvars, int degree);

}  // namespace aslkit
