#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "ringvpn/rng.hpp"
#include "ringvpn/sha1.hpp"
#include "ringvpn/uint160.hpp"

namespace ringvpn {

// A point on the ring; DHT keys hash to one, messages are routed toward one.
using RingAddress = Uint160;

// 160-bit node identifier on the ring.
struct NodeId {
  Uint160 bits;

  constexpr NodeId() = default;
  constexpr explicit NodeId(Uint160 b) : bits(b) {}

  auto operator<=>(const NodeId&) const = default;

  std::string to_hex() const { return bits.to_hex(); }
  static NodeId from_hex(std::string_view h) { return NodeId(Uint160::from_hex(h)); }
  std::string short_hex() const { return bits.to_hex().substr(0, 8); }
};

enum class Direction { Left, Right };

// Derive a node id from a 64-bit seed. Hashing stands in for the
// cryptographically strong generator: deterministic per seed, uniform on the
// ring, and collision-free in practice at 160 bits.
inline NodeId new_node_id(std::uint64_t rng_seed) {
  std::uint8_t buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = std::uint8_t(rng_seed >> (8 * i));
  Sha1 h;
  h.update("node-id:");
  h.update(std::span<const std::uint8_t>(buf, 8));
  return NodeId(Uint160::from_bytes(h.finish()));
}

inline Uint160 ring_distance(const Uint160& a, const Uint160& b, Direction dir) {
  return dir == Direction::Right ? b - a : a - b;
}

inline Uint160 ring_distance(const NodeId& a, const NodeId& b, Direction dir) {
  return ring_distance(a.bits, b.bits, dir);
}

inline Uint160 dist_right(const Uint160& a, const Uint160& b) { return b - a; }
inline Uint160 dist_left(const Uint160& a, const Uint160& b) { return a - b; }

// Undirected ring distance: min of the two directed distances.
inline Uint160 ring_distance_min(const Uint160& a, const Uint160& b) {
  const Uint160 r = b - a;
  const Uint160 l = a - b;
  return r < l ? r : l;
}

// Strict ordering of nodes by closeness to an address. The closest node under
// this order owns the address (DHT placement, greedy delivery). Undirected
// distance decides; exact-midpoint ties go to the successor side (smaller
// right-distance from the address), then to the lower id.
inline bool closer_to(const RingAddress& addr, const NodeId& x, const NodeId& y) {
  const Uint160 mx = ring_distance_min(x.bits, addr);
  const Uint160 my = ring_distance_min(y.bits, addr);
  if (mx != my) return mx < my;
  const Uint160 rx = dist_right(addr, x.bits);
  const Uint160 ry = dist_right(addr, y.bits);
  if (rx != ry) return rx < ry;
  return x < y;
}

// Harmonic shortcut target: self + 2^(160*u) with u uniform in
// [log2(2^160 / n_estimate) / 160, 1], i.e. log-distance uniform between one
// expected neighbor gap and the full ring. n_estimate == 1 degenerates to the
// whole ring.
inline RingAddress select_shortcut_target(const NodeId& self, double n_estimate,
                                          Rng& rng) {
  if (n_estimate < 1.0) n_estimate = 1.0;
  const double hi = double(Uint160::kBits);
  double lo = hi - std::log2(n_estimate);
  if (n_estimate <= 1.0) lo = 0.0;  // degenerate: any distance
  const double x = lo + rng.uniform() * (hi - lo);
  const Uint160 d = Uint160::from_log2(x);
  return self.bits + d;
}

}  // namespace ringvpn

template <>
struct std::hash<ringvpn::NodeId> {
  std::size_t operator()(const ringvpn::NodeId& id) const noexcept {
    return std::size_t(id.bits.low64());
  }
};
