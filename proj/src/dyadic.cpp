#include "autf/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "autf/errors.hpp"

namespace autf {

namespace {

constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();

bool fits_int64(__int128 v) { return v >= kInt64Min && v <= kInt64Max; }

BigInt to_big(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 mag =
      neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(mag >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-r) : r;
}

unsigned ctz64(std::int64_t v) {
  return static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(v)));
}

// floor(n / 2^e) for a BigInt numerator.
BigInt floor_shift(const BigInt& n, std::uint64_t e) {
  if (n >= 0) return n >> e;
  BigInt m = -n;
  BigInt q = m >> e;
  if ((q << e) != m) q += 1;
  return -q;
}

}  // namespace

Dyadic::Dyadic(const Dyadic& other) : small_(other.small_), exp_(other.exp_) {
  if (other.big_) big_ = std::make_unique<BigInt>(*other.big_);
}

Dyadic& Dyadic::operator=(const Dyadic& other) {
  if (this != &other) {
    small_ = other.small_;
    exp_ = other.exp_;
    big_ = other.big_ ? std::make_unique<BigInt>(*other.big_) : nullptr;
  }
  return *this;
}

Dyadic Dyadic::normalized(BigInt n, std::uint64_t e) {
  Dyadic d;
  if (n == 0) return d;
  if (e > 0) {
    std::uint64_t tz = boost::multiprecision::lsb(n < 0 ? BigInt(-n) : n);
    std::uint64_t s = std::min(tz, e);
    if (s > 0) {
      n >>= s;  // exact: the low s bits are zero
      e -= s;
    }
  }
  if (e > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("dyadic exponent out of range");
  }
  d.exp_ = static_cast<std::uint32_t>(e);
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    d.small_ = static_cast<std::int64_t>(n);
  } else {
    d.big_ = std::make_unique<BigInt>(std::move(n));
  }
  return d;
}

Dyadic Dyadic::from_int128(__int128 n, std::uint32_t e) {
  if (n == 0) return {};
  if (e > 0) {
    unsigned __int128 mag = n < 0 ? static_cast<unsigned __int128>(-(n + 1)) + 1
                                  : static_cast<unsigned __int128>(n);
    unsigned tz = 0;
    std::uint64_t lo = static_cast<std::uint64_t>(mag);
    tz = lo != 0 ? static_cast<unsigned>(std::countr_zero(lo))
                 : 64 + static_cast<unsigned>(std::countr_zero(
                            static_cast<std::uint64_t>(mag >> 64)));
    unsigned s = std::min<unsigned>(tz, e);
    n >>= s;
    e -= s;
  }
  if (!fits_int64(n)) return normalized(to_big(n), e);
  Dyadic d;
  d.small_ = static_cast<std::int64_t>(n);
  d.exp_ = e;
  return d;
}

Dyadic Dyadic::from_parts(const BigInt& numerator, std::int64_t exponent) {
  if (exponent >= 0) return normalized(numerator, static_cast<std::uint64_t>(exponent));
  return normalized(numerator << static_cast<std::uint64_t>(-exponent), 0);
}

Dyadic Dyadic::from_parts(std::int64_t numerator, std::int64_t exponent) {
  if (exponent >= 0 && exponent <= std::numeric_limits<std::uint32_t>::max()) {
    return from_int128(numerator, static_cast<std::uint32_t>(exponent));
  }
  return from_parts(BigInt(numerator), exponent);
}

Dyadic Dyadic::pow2(int k) {
  if (k >= 0 && k < 62) return Dyadic(std::int64_t{1} << k);
  return from_parts(BigInt(1), -static_cast<std::int64_t>(k));
}

BigInt Dyadic::numerator() const { return big_ ? *big_ : BigInt(small_); }

int Dyadic::sign() const noexcept {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

Dyadic Dyadic::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) {
    Dyadic d;
    d.small_ = -small_;
    d.exp_ = exp_;
    return d;
  }
  return normalized(-numerator(), exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (!a.big_ && !b.big_) {
    std::uint32_t e = std::max(a.exp_, b.exp_);
    std::uint32_t da = e - a.exp_;
    std::uint32_t db = e - b.exp_;
    if (da <= 62 && db <= 62) {
      __int128 na = static_cast<__int128>(a.small_) << da;
      __int128 nb = static_cast<__int128>(b.small_) << db;
      return Dyadic::from_int128(na + nb, e);
    }
  }
  std::uint32_t e = std::max(a.exp_, b.exp_);
  BigInt na = a.numerator() << (e - a.exp_);
  BigInt nb = b.numerator() << (e - b.exp_);
  return Dyadic::normalized(na + nb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  std::uint64_t e = std::uint64_t{a.exp_} + b.exp_;
  if (!a.big_ && !b.big_ && e <= std::numeric_limits<std::uint32_t>::max()) {
    return Dyadic::from_int128(static_cast<__int128>(a.small_) * b.small_,
                               static_cast<std::uint32_t>(e));
  }
  return Dyadic::normalized(a.numerator() * b.numerator(), e);
}

Dyadic Dyadic::operator*(PowerOfTwo p) const {
  if (is_zero() || p.exponent == 0) return *this;
  if (p.exponent < 0) {
    std::uint64_t e = std::uint64_t{exp_} + static_cast<std::uint64_t>(-std::int64_t{p.exponent});
    if (!big_ && e <= std::numeric_limits<std::uint32_t>::max()) {
      return from_int128(small_, static_cast<std::uint32_t>(e));
    }
    return normalized(numerator(), e);
  }
  auto up = static_cast<std::uint32_t>(p.exponent);
  if (up <= exp_) {
    Dyadic d(*this);
    d.exp_ = exp_ - up;
    return d;
  }
  std::uint32_t shift = up - exp_;
  if (!big_ && shift <= 62) {
    return from_int128(static_cast<__int128>(small_) << shift, 0);
  }
  return normalized(numerator() << shift, 0);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (!a.big_ && !b.big_) {
    if (a.exp_ == b.exp_) return a.small_ <=> b.small_;
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa <=> sb;
    std::uint32_t e = std::max(a.exp_, b.exp_);
    std::uint32_t da = e - a.exp_, db = e - b.exp_;
    if (da <= 62 && db <= 62) {
      __int128 na = static_cast<__int128>(a.small_) << da;
      __int128 nb = static_cast<__int128>(b.small_) << db;
      return na <=> nb;
    }
  }
  std::uint32_t e = std::max(a.exp_, b.exp_);
  BigInt na = a.numerator() << (e - a.exp_);
  BigInt nb = b.numerator() << (e - b.exp_);
  int c = na.compare(nb);
  return c <=> 0;
}

bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
  if (a.exp_ != b.exp_) return false;
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value fitting int64 is never stored big
}

Dyadic Dyadic::floor() const {
  if (exp_ == 0) return *this;
  if (!big_) {
    if (exp_ >= 63) return Dyadic(small_ < 0 ? -1 : 0);
    return Dyadic(small_ >> exp_);  // arithmetic shift rounds down
  }
  return normalized(floor_shift(*big_, exp_), 0);
}

Dyadic Dyadic::ceil() const {
  if (exp_ == 0) return *this;
  return floor() + Dyadic(1);
}

std::optional<std::int64_t> Dyadic::to_int64() const {
  if (exp_ != 0 || big_) return std::nullopt;
  return small_;
}

std::int64_t Dyadic::as_int64() const {
  auto v = to_int64();
  if (!v) throw std::overflow_error("dyadic " + to_string() + " is not a 64-bit integer");
  return *v;
}

std::int64_t Dyadic::valuation() const {
  if (!big_) return static_cast<std::int64_t>(ctz64(small_)) - exp_;
  BigInt m = *big_ < 0 ? BigInt(-*big_) : *big_;
  return static_cast<std::int64_t>(boost::multiprecision::lsb(m)) - exp_;
}

std::int64_t Dyadic::floor_log2() const {
  if (sign() <= 0) throw std::domain_error("floor_log2 of a non-positive dyadic");
  std::int64_t msb = big_ ? static_cast<std::int64_t>(boost::multiprecision::msb(*big_))
                          : 63 - __builtin_clzll(static_cast<unsigned long long>(small_));
  return msb - exp_;
}

BigInt Dyadic::odd_part() const {
  BigInt n = numerator();
  if (n < 0) n = -n;
  if (n == 0) return n;
  return n >> boost::multiprecision::lsb(n);
}

std::optional<PowerOfTwo> power_ratio(const Dyadic& hi, const Dyadic& lo) {
  if (hi.is_zero() || lo.is_zero() || hi.sign() != lo.sign()) return std::nullopt;
  std::int64_t k = hi.valuation() - lo.valuation();
  // hi = lo * 2^k iff lo scaled by 2^k equals hi.
  if (k < std::numeric_limits<int>::min() || k > std::numeric_limits<int>::max()) {
    return std::nullopt;
  }
  PowerOfTwo p{static_cast<int>(k)};
  if (lo * p == hi) return p;
  return std::nullopt;
}

std::size_t Dyadic::hash() const noexcept {
  std::size_t h = big_ ? boost::multiprecision::hash_value(*big_)
                       : std::hash<std::int64_t>{}(small_);
  return h ^ (std::size_t{exp_} * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t Dyadic::heap_bytes() const noexcept {
  if (!big_) return 0;
  return sizeof(BigInt) + boost::multiprecision::msb(abs(*big_)) / 8 + 8;
}

std::string Dyadic::to_string() const {
  std::string n = big_ ? big_->str() : std::to_string(small_);
  if (exp_ == 0) return n;
  return n + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text, bool strict) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  std::size_t digits_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == digits_begin) throw ParseError("expected digit in dyadic", i);
  std::string_view digits = text.substr(digits_begin, i - digits_begin);
  if (strict && digits.size() > 1 && digits[0] == '0') {
    throw ParseError("leading zero in dyadic numerator", digits_begin);
  }
  BigInt num{std::string(digits)};
  if (neg) num = -num;
  if (strict && neg && num == 0) throw ParseError("negative zero", 0);

  std::uint64_t exp = 0;
  bool has_exp = false;
  if (i < text.size()) {
    if (text.substr(i, 3) != "/2^") throw ParseError("expected '/2^'", i);
    i += 3;
    std::size_t eb = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == eb) throw ParseError("expected exponent digits", i);
    if (i - eb > 9) throw ParseError("exponent too large", eb);
    if (strict && i - eb > 1 && text[eb] == '0') {
      throw ParseError("leading zero in exponent", eb);
    }
    exp = std::stoull(std::string(text.substr(eb, i - eb)));
    has_exp = true;
    if (i != text.size()) throw ParseError("trailing characters after dyadic", i);
  }
  if (strict && has_exp && (exp == 0 || num == 0 || (num & 1) == 0)) {
    throw ParseError("non-normalized dyadic '" + std::string(text) + "'", 0);
  }
  return normalized(std::move(num), exp);
}

Dyadic arith(const Dyadic& a, const Dyadic& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

CompareFloor compare_floor(const Dyadic& a, const Dyadic& b) {
  return {a <=> b, a.floor(), a.is_integer()};
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

}  // namespace autf
