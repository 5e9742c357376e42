#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace factorlab {

/// Exact non-negative rational in lowest terms, or +infinity.
///
/// Toughness values are compared with cross-multiplication only; there is no
/// conversion to floating point anywhere in the comparison path.
class Rational {
public:
  constexpr Rational() noexcept = default;
  /// Throws ContractViolation on a negative numerator or non-positive denominator.
  Rational(std::int64_t num, std::int64_t den = 1);

  static constexpr Rational infinity() noexcept {
    Rational r;
    r.infinite_ = true;
    return r;
  }

  /// Accepts "7/6", "3", "inf".
  static Rational parse(const std::string& text);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_infinite() const noexcept { return infinite_; }

  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

}  // namespace factorlab
