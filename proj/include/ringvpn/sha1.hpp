#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>

namespace ringvpn {

// SHA-1 (FIPS 180-1). 160-bit output matches the ring address width, so one
// hash serves both node-id derivation and DHT key placement. Used here for
// placement and the deterministic test MAC scheme, not for adversarial
// collision resistance.
class Sha1 {
 public:
  using Digest = std::array<std::uint8_t, 20>;

  Sha1() { reset(); }

  void reset() {
    h_ = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
    len_ = 0;
    buf_fill_ = 0;
  }

  void update(std::span<const std::uint8_t> data) {
    len_ += data.size();
    for (std::uint8_t b : data) {
      buf_[buf_fill_++] = b;
      if (buf_fill_ == 64) {
        process_block();
        buf_fill_ = 0;
      }
    }
  }

  void update(std::string_view s) {
    update(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  }

  Digest finish() {
    const std::uint64_t bit_len = len_ * 8;
    const std::uint8_t pad = 0x80;
    update(std::span<const std::uint8_t>(&pad, 1));
    const std::uint8_t z = 0;
    while (buf_fill_ != 56) update(std::span<const std::uint8_t>(&z, 1));
    std::array<std::uint8_t, 8> lenb;
    for (int i = 0; i < 8; ++i) lenb[i] = std::uint8_t(bit_len >> (8 * (7 - i)));
    update(lenb);
    Digest d;
    for (int i = 0; i < 5; ++i) {
      d[4 * i] = std::uint8_t(h_[i] >> 24);
      d[4 * i + 1] = std::uint8_t(h_[i] >> 16);
      d[4 * i + 2] = std::uint8_t(h_[i] >> 8);
      d[4 * i + 3] = std::uint8_t(h_[i]);
    }
    return d;
  }

  static Digest hash(std::string_view s) {
    Sha1 h;
    h.update(s);
    return h.finish();
  }

  static Digest hash(std::span<const std::uint8_t> data) {
    Sha1 h;
    h.update(data);
    return h.finish();
  }

 private:
  static std::uint32_t rol(std::uint32_t v, int n) {
    return (v << n) | (v >> (32 - n));
  }

  void process_block() {
    std::uint32_t w[80];
    for (int i = 0; i < 16; ++i) {
      w[i] = (std::uint32_t(buf_[4 * i]) << 24) |
             (std::uint32_t(buf_[4 * i + 1]) << 16) |
             (std::uint32_t(buf_[4 * i + 2]) << 8) |
             std::uint32_t(buf_[4 * i + 3]);
    }
    for (int i = 16; i < 80; ++i)
      w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

    std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) {
        f = (b & c) | (~b & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const std::uint32_t t = rol(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rol(b, 30);
      b = a;
      a = t;
    }
    h_[0] += a;
    h_[1] += b;
    h_[2] += c;
    h_[3] += d;
    h_[4] += e;
  }

  std::array<std::uint32_t, 5> h_;
  std::uint8_t buf_[64];
  std::size_t buf_fill_ = 0;
  std::uint64_t len_ = 0;
};

inline std::string sha1_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  const auto d = Sha1::hash(s);
  std::string out(40, '0');
  for (int i = 0; i < 20; ++i) {
    out[2 * i] = digits[d[i] >> 4];
    out[2 * i + 1] = digits[d[i] & 0xf];
  }
  return out;
}

}  // namespace ringvpn
