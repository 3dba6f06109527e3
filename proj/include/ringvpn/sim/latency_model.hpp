#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringvpn/rng.hpp"

namespace ringvpn::sim {

// All-to-all RTT matrix (milliseconds). Two accepted file formats:
//
//   A (matrix):  line 1 is N, then N lines of N whitespace-separated floats
//                in milliseconds.
//   B (triples): lines "i j rtt_us" with 0-based indices and RTT in
//                microseconds; size inferred from the largest index.
//
// Either format may be gzip-compressed; plain files read the same way.
// Repair pipeline after parse: negative/missing entries become invalid; an
// invalid (i,j) with a valid mirror (j,i) takes the mirrored value; remaining
// invalid entries take the row median over valid entries (global median if a
// row has none); the matrix is then symmetrized by averaging and the diagonal
// forced to zero.
class LatencyModel {
 public:
  LatencyModel() = default;

  static LatencyModel load(const std::string& path);

  // 2-D Euclidean placement with mild pairwise noise; fallback when no
  // measured dataset is available.
  static LatencyModel synthetic(int n, std::uint64_t seed);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  double rtt_ms(int i, int j) const { return rtt_[std::size_t(i) * n_ + j]; }

  // direct access for tests
  const std::vector<double>& raw() const { return rtt_; }

 private:
  void repair_and_symmetrize();

  int n_ = 0;
  std::vector<double> rtt_;
};

}  // namespace ringvpn::sim
