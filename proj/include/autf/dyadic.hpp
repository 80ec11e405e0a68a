#pragma once

// Exact arithmetic in Z[1/2].
//
// A Dyadic is numerator / 2^exponent with exponent >= 0 and the numerator
// odd whenever exponent > 0, so every value has exactly one representation.
// Numerators that fit in 64 bits are stored inline; larger ones spill to a
// heap-allocated cpp_int. The invariant "fits in int64 => stored inline" is
// maintained by every constructor, which keeps equality and hashing
// representation-independent.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace autf {

using BigInt = boost::multiprecision::cpp_int;

// An exact power of two, 2^exponent. Used for slopes.
struct PowerOfTwo {
  int exponent = 0;

  friend auto operator<=>(const PowerOfTwo&, const PowerOfTwo&) = default;
};

class Dyadic {
 public:
  Dyadic() noexcept = default;
  Dyadic(std::int64_t n) noexcept : small_(n) {}  // NOLINT: integers convert
  Dyadic(int n) noexcept : small_(n) {}           // NOLINT

  Dyadic(const Dyadic& other);
  Dyadic(Dyadic&& other) noexcept = default;
  Dyadic& operator=(const Dyadic& other);
  Dyadic& operator=(Dyadic&& other) noexcept = default;
  ~Dyadic() = default;

  // numerator * 2^(-exponent); a negative exponent multiplies.
  static Dyadic from_parts(const BigInt& numerator, std::int64_t exponent);
  static Dyadic from_parts(std::int64_t numerator, std::int64_t exponent);
  static Dyadic pow2(int k);  // 2^k

  // Grammar: INT | INT "/2^" UINT. In strict mode only the canonical
  // spelling produced by to_string() is accepted.
  static Dyadic parse(std::string_view text, bool strict = true);
  std::string to_string() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
  Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }

  // Exact multiplication by 2^p.exponent.
  Dyadic operator*(PowerOfTwo p) const;
  Dyadic scaled(int k) const { return *this * PowerOfTwo{k}; }

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept;

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_integer() const noexcept { return exp_ == 0; }
  std::uint32_t exponent() const noexcept { return exp_; }
  BigInt numerator() const;

  // Greatest integer <= *this, and least integer >= *this.
  Dyadic floor() const;
  Dyadic ceil() const;
  // The value as int64 if it is an integer that fits.
  std::optional<std::int64_t> to_int64() const;
  // Integer value; throws std::overflow_error when not an integer in range.
  std::int64_t as_int64() const;

  // 2-adic valuation (numerator's trailing zeros minus exponent) and the
  // odd part; undefined for zero.
  std::int64_t valuation() const;
  BigInt odd_part() const;
  // floor(log2(*this)) for a positive value.
  std::int64_t floor_log2() const;

  std::size_t hash() const noexcept;

  // Bytes owned beyond sizeof(Dyadic); used for memory accounting.
  std::size_t heap_bytes() const noexcept;

 private:
  static Dyadic from_int128(__int128 n, std::uint32_t exponent);
  static Dyadic normalized(BigInt n, std::uint64_t exponent);

  std::int64_t small_ = 0;
  std::uint32_t exp_ = 0;
  std::unique_ptr<BigInt> big_;  // set iff the numerator needs > 64 bits
};

// If hi = 2^k * lo for some integer k (both non-zero, same sign), returns k.
std::optional<PowerOfTwo> power_ratio(const Dyadic& hi, const Dyadic& lo);

enum class ArithOp { add, sub, mul };
Dyadic arith(const Dyadic& a, const Dyadic& b, ArithOp op);

struct CompareFloor {
  std::strong_ordering order;
  Dyadic floor;  // floor of the first argument
  bool is_integer;
};
CompareFloor compare_floor(const Dyadic& a, const Dyadic& b);

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

struct DyadicHash {
  std::size_t operator()(const Dyadic& d) const noexcept { return d.hash(); }
};

}  // namespace autf
