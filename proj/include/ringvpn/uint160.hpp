#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringvpn {

// Unsigned 160-bit integer with wrapping (mod 2^160) arithmetic. This is the
// coordinate type of the ring address space: node identifiers, DHT key
// addresses and ring distances are all Uint160 values.
//
// Limbs are little-endian; the top limb keeps only its low 32 bits.
class Uint160 {
 public:
  static constexpr int kBits = 160;
  static constexpr std::uint64_t kHiMask = 0xffffffffull;

  constexpr Uint160() = default;
  constexpr explicit Uint160(std::uint64_t low) : w_{low, 0, 0} {}
  constexpr Uint160(std::uint64_t hi32, std::uint64_t mid, std::uint64_t lo)
      : w_{lo, mid, hi32 & kHiMask} {}

  static constexpr Uint160 zero() { return Uint160(); }
  static constexpr Uint160 one() { return Uint160(1); }

  static constexpr Uint160 max_value() {
    return Uint160(kHiMask, ~0ull, ~0ull);
  }

  // 2^e, e in [0, 160)
  static Uint160 pow2(int e) {
    if (e < 0 || e >= kBits) throw std::out_of_range("Uint160::pow2 exponent");
    Uint160 r;
    r.w_[e / 64] = 1ull << (e % 64);
    return r;
  }

  // Big-endian byte order, as produced by the hash functions.
  static Uint160 from_bytes(std::span<const std::uint8_t> be20) {
    if (be20.size() != 20) throw std::invalid_argument("Uint160 needs 20 bytes");
    Uint160 r;
    for (int limb = 0; limb < 3; ++limb) {
      const int bytes = limb == 2 ? 4 : 8;
      std::uint64_t v = 0;
      // limb 0 holds the last 8 bytes, limb 2 the first 4
      const int start = limb == 0 ? 12 : (limb == 1 ? 4 : 0);
      for (int i = 0; i < bytes; ++i) v = (v << 8) | be20[start + i];
      r.w_[limb] = v;
    }
    return r;
  }

  std::array<std::uint8_t, 20> to_bytes() const {
    std::array<std::uint8_t, 20> out{};
    for (int i = 0; i < 4; ++i) out[i] = std::uint8_t(w_[2] >> (8 * (3 - i)));
    for (int i = 0; i < 8; ++i) out[4 + i] = std::uint8_t(w_[1] >> (8 * (7 - i)));
    for (int i = 0; i < 8; ++i) out[12 + i] = std::uint8_t(w_[0] >> (8 * (7 - i)));
    return out;
  }

  static Uint160 from_hex(std::string_view hex) {
    if (hex.size() > 40) throw std::invalid_argument("Uint160 hex too long");
    std::array<std::uint8_t, 20> bytes{};
    // right-align: missing leading digits are zero
    int nibble = 39;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, --nibble) {
      const char c = *it;
      std::uint8_t v;
      if (c >= '0' && c <= '9') v = std::uint8_t(c - '0');
      else if (c >= 'a' && c <= 'f') v = std::uint8_t(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v = std::uint8_t(c - 'A' + 10);
      else throw std::invalid_argument("Uint160 bad hex digit");
      bytes[nibble / 2] |= std::uint8_t(nibble % 2 ? v : v << 4);
    }
    return from_bytes(bytes);
  }

  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    const auto bytes = to_bytes();
    std::string s(40, '0');
    for (int i = 0; i < 20; ++i) {
      s[2 * i] = digits[bytes[i] >> 4];
      s[2 * i + 1] = digits[bytes[i] & 0xf];
    }
    return s;
  }

  friend Uint160 operator+(const Uint160& a, const Uint160& b) {
    Uint160 r;
    unsigned __int128 carry = 0;
    for (int i = 0; i < 3; ++i) {
      unsigned __int128 s = carry;
      s += a.w_[i];
      s += b.w_[i];
      r.w_[i] = std::uint64_t(s);
      carry = s >> 64;
    }
    r.w_[2] &= kHiMask;
    return r;
  }

  friend Uint160 operator-(const Uint160& a, const Uint160& b) {
    Uint160 r;
    std::uint64_t borrow = 0;
    for (int i = 0; i < 3; ++i) {
      const std::uint64_t bi = b.w_[i] + borrow;
      const bool overflowed = bi < b.w_[i];
      borrow = (a.w_[i] < bi || overflowed) ? 1 : 0;
      r.w_[i] = a.w_[i] - bi;
    }
    r.w_[2] &= kHiMask;
    return r;
  }

  Uint160 operator<<(int n) const {
    if (n <= 0) return *this;
    if (n >= kBits) return zero();
    Uint160 r;
    const int limb = n / 64, bit = n % 64;
    for (int i = 2; i >= 0; --i) {
      std::uint64_t v = 0;
      if (i - limb >= 0) v = w_[i - limb] << bit;
      if (bit && i - limb - 1 >= 0) v |= w_[i - limb - 1] >> (64 - bit);
      r.w_[i] = v;
    }
    r.w_[2] &= kHiMask;
    return r;
  }

  Uint160 operator>>(int n) const {
    if (n <= 0) return *this;
    if (n >= kBits) return zero();
    Uint160 r;
    const int limb = n / 64, bit = n % 64;
    for (int i = 0; i < 3; ++i) {
      std::uint64_t v = 0;
      if (i + limb < 3) v = w_[i + limb] >> bit;
      if (bit && i + limb + 1 < 3) v |= w_[i + limb + 1] << (64 - bit);
      r.w_[i] = v;
    }
    return r;
  }

  std::strong_ordering operator<=>(const Uint160& o) const {
    for (int i = 2; i >= 0; --i) {
      if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const Uint160&) const = default;

  bool is_zero() const { return w_[0] == 0 && w_[1] == 0 && w_[2] == 0; }

  // Index of the highest set bit, -1 for zero.
  int top_bit() const {
    for (int i = 2; i >= 0; --i) {
      if (w_[i]) return i * 64 + 63 - __builtin_clzll(w_[i]);
    }
    return -1;
  }

  std::uint64_t low64() const { return w_[0]; }
  std::uint8_t top_byte() const { return std::uint8_t(w_[2] >> 24); }

  // log2 of the value as a double (exact to ~2^-52); -inf for zero.
  double log2() const {
    const int tb = top_bit();
    if (tb < 0) return -std::numeric_limits<double>::infinity();
    // assemble the top (up to) 53 bits as a double mantissa
    const int shift = tb > 52 ? tb - 52 : 0;
    const Uint160 m = *this >> shift;
    const double mant = double(m.w_[0]);  // fits: tb-shift <= 52
    return std::log2(mant) + double(shift);
  }

  // round(2^x) for x in [0, 160); clamps to [1, max].
  static Uint160 from_log2(double x) {
    if (!(x > 0.0)) return one();
    if (x >= double(kBits)) return max_value();
    const int e = int(std::floor(x));
    const double frac = x - double(e);
    // 52-bit mantissa of 2^frac
    const auto mant = std::uint64_t(std::llround(std::ldexp(std::exp2(frac), 52)));
    Uint160 m(mant);
    if (e >= 52) return m << (e - 52);
    return m >> (52 - e);
  }

 private:
  std::array<std::uint64_t, 3> w_{0, 0, 0};
};

}  // namespace ringvpn
