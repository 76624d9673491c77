#include "aslkit/exact.hpp"

#include <charconv>

#include "aslkit/error.hpp"

namespace aslkit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p <= 1000) throw Error(ErrorCode::InvalidField, "prime must exceed 1000", std::to_string(p));
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "modulus is not prime", std::to_string(p));
  return {Kind::Prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational") return rational();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorCode::InvalidField, "cannot read the modulus", text);
    }
    return prime(p);
  }
  throw Error(ErrorCode::InvalidField, "expected 'rational' or 'fp:<p>'", text);
}

std::string FieldSpec::to_string() const { return kind == Kind::Rational ? "rational" : "fp:" + std::to_string(p); }

ExactScalar ExactScalar::from_int(std::int64_t v, const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::Rational) return ExactScalar(mpq_class(static_cast<long>(v)));
  const auto p = static_cast<std::int64_t>(f.p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return ExactScalar(Residue{static_cast<std::uint64_t>(r), f.p});
}

bool ExactScalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).v == 0;
}

std::string ExactScalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).v);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  if (auto q = std::get_if<mpq_class>(&value_)) return ExactScalar(mpq_class(*q + std::get<mpq_class>(o.value_)));
  const auto& a = std::get<Residue>(value_);
  const auto& b = std::get<Residue>(o.value_);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return ExactScalar(Residue{s, a.p});
}

ExactScalar ExactScalar::operator-() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return ExactScalar(mpq_class(-*q));
  const auto& a = std::get<Residue>(value_);
  return ExactScalar(Residue{a.v == 0 ? 0 : a.p - a.v, a.p});
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  if (auto q = std::get_if<mpq_class>(&value_)) return ExactScalar(mpq_class(*q * std::get<mpq_class>(o.value_)));
  const auto& a = std::get<Residue>(value_);
  const auto& b = std::get<Residue>(o.value_);
  return ExactScalar(Residue{mulmod(a.v, b.v, a.p), a.p});
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (auto q = std::get_if<mpq_class>(&value_)) return ExactScalar(mpq_class(*q / std::get<mpq_class>(o.value_)));
  const auto& a = std::get<Residue>(value_);
  const auto& b = std::get<Residue>(o.value_);
  return ExactScalar(Residue{mulmod(a.v, powmod(b.v, a.p - 2, a.p), a.p), a.p});
}

bool ExactScalar::operator==(const ExactScalar& o) const { return value_ == o.value_; }

}  // namespace aslkit
