#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aslkit/exact.hpp"
#include "aslkit/polynomial.hpp"
#include "aslkit/report.hpp"
#include "aslkit/veronese.hpp"

namespace aslkit {

struct LinearForm {
  std::vector<ExactScalar> coeffs;  // length n
  bool is_zero() const;
};

// Grid of linear forms l_{i,j}, i in 1..n, j in 1..d, in n variables.
struct FormTableau {
  int n = 0;
  int d = 0;
  FieldSpec field;
  std::vector<std::vector<LinearForm>> forms;  // forms[i-1][j-1]
  bool generic = false;

  const LinearForm& at(int i, int j) const { return forms.at(i - 1).at(j - 1); }
  MultiPoly poly(int i, int j) const;
};

// Builds a tableau from explicit forms and computes its genericity flag.
FormTableau make_tableau(int n, int d, const FieldSpec& field, std::vector<std::vector<LinearForm>> forms);

// Coefficients are drawn from mt19937_64(seed) in the order i, j, k
// (row, column, variable): value rng() mod p over F_p, or (rng() mod 201) - 100
// over the rationals. A non-generic draw is followed by the next draw from the
// same stream, up to 32 draws in total.
FormTableau random_tableau(int n, int d, std::uint64_t seed, const FieldSpec& field);  // GenericityFailed

// All d^n selections l_{1,j_1}, ..., l_{n,j_n} have nonzero determinant.
bool genericity_check(const FormTableau& t);

struct VGen {
  HVector index;
  MultiPoly poly;  // l_{a_1,1} ... l_{a_d,d}
};

struct MGen {
  std::vector<int> index;
  MultiPoly poly;  // l_{i_1,1} ... l_{i_j,j}
};

std::vector<VGen> veronese_generators(const FormTableau& t);
std::vector<MGen> module_generators(const FormTableau& t, int j);  // InvalidArgument unless 1 <= j <= d-1

// Elements a of H_n(d) with a not >= (i_1, ..., i_j, 1, ..., 1), as ids of `h`.
ElementSet ideal_of(const TuplePoset& h, const std::vector<int>& g);

Report verify_msl2(const FormTableau& t, int j);
Report verify_msl1(const FormTableau& t, int j, int m_max);
// Multiplying g_{i_1...i_j} by l_{1,j+1} ... l_{1,d} gives f_{i_1...i_j 1...1}.
Report verify_lift_identity(const FormTableau& t, int j);

// Sum over g of the m-multichains of H_n(d) whose least member lies outside I(g).
std::size_t count_standard_elements(int n, int d, int j, int m);

// Conventions recorded on every module report.
std::vector<std::string> msl_conventions();

// Full module suite: genericity, MSL 2, MSL 1 ranks, the lift identity and
// the standard-element count cross-check.
Report msl_suite(int n, int d, int j, std::uint64_t seed, const FieldSpec& field, int m_max);

}  // namespace aslkit
