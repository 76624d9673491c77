#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace aslkit {

// Either the rationals or a prime field F_p with p > 1000.
struct FieldSpec {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Prime;
  std::uint64_t p = 32003;

  static FieldSpec rational() { return {Kind::Rational, 0}; }
  static FieldSpec prime(std::uint64_t p);  // InvalidField
  // "rational" or "fp:<p>".
  static FieldSpec parse(const std::string& text);  // InvalidField
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

// Exact field element. Both operands of a binary operation must come from
// the same field.
class ExactScalar {
 public:
  ExactScalar() : value_(mpq_class(0)) {}
  static ExactScalar from_int(std::int64_t v, const FieldSpec& f);
  static ExactScalar zero(const FieldSpec& f) { return from_int(0, f); }
  static ExactScalar one(const FieldSpec& f) { return from_int(1, f); }

  bool is_zero() const;
  std::string to_string() const;

  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;  // InvalidArgument on division by zero
  ExactScalar operator-() const;
  bool operator==(const ExactScalar& o) const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const Residue&) const = default;
  };
  explicit ExactScalar(mpq_class q) : value_(std::move(q)) {}
  explicit ExactScalar(Residue r) : value_(r) {}

  std::variant<mpq_class, Residue> value_;
};

inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }

}  // namespace aslkit
