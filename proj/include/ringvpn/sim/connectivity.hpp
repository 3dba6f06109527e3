#pragma once

#include <map>
#include <set>
#include <utility>

#include "ringvpn/overlay/node_id.hpp"

namespace ringvpn::sim {

enum class NatKind { Public, ConeNat, SymmetricNat, FirewallBlocked };

// Whether a direct transport link between two endpoints can come up.
// Deterministic stand-in for the STUN handshake outcome:
//   - a firewall-blocked endpoint never connects
//   - explicitly blocked pairs never connect
//   - public reaches everything else; cone<->cone traverses;
//     symmetric<->symmetric and cone<->symmetric do not.
class ConnectivityPolicy {
 public:
  void set_kind(const NodeId& n, NatKind k) { kinds_[n] = k; }

  NatKind kind(const NodeId& n) const {
    const auto it = kinds_.find(n);
    return it == kinds_.end() ? NatKind::Public : it->second;
  }

  void block_pair(const NodeId& a, const NodeId& b) {
    blocked_.insert(ordered(a, b));
  }

  void unblock_pair(const NodeId& a, const NodeId& b) {
    blocked_.erase(ordered(a, b));
  }

  bool pair_blocked(const NodeId& a, const NodeId& b) const {
    return blocked_.count(ordered(a, b)) != 0;
  }

  bool can_connect(const NodeId& a, const NodeId& b) const {
    const NatKind ka = kind(a), kb = kind(b);
    if (ka == NatKind::FirewallBlocked || kb == NatKind::FirewallBlocked)
      return false;
    if (pair_blocked(a, b)) return false;
    if (ka == NatKind::Public || kb == NatKind::Public) return true;
    return ka == NatKind::ConeNat && kb == NatKind::ConeNat;
  }

 private:
  static std::pair<NodeId, NodeId> ordered(const NodeId& a, const NodeId& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  std::map<NodeId, NatKind> kinds_;
  std::set<std::pair<NodeId, NodeId>> blocked_;
};

}  // namespace ringvpn::sim
