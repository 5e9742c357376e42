#include "factorlab/rational.hpp"

#include <charconv>
#include <numeric>

#include "factorlab/error.hpp"

namespace factorlab {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw ContractViolation("rational " + std::to_string(num) + "/" + std::to_string(den) +
                            " is not a non-negative fraction");
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  auto read = [&](std::size_t from, std::size_t to) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + from, text.data() + to, value);
    if (ec != std::errc{} || ptr != text.data() + to || from == to) {
      throw ParseError("rational: expected integer in '" + text + "'", from);
    }
    return value;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(read(0, text.size()));
  std::int64_t num = read(0, slash);
  std::int64_t den = read(slash + 1, text.size());
  if (den <= 0) throw ParseError("rational: denominator must be positive", slash + 1);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (infinite_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.infinite_ || b.infinite_) return Rational::infinity();
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

}  // namespace factorlab
