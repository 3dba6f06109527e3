#include "ringvpn/sim/latency_model.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ringvpn/errors.hpp"

namespace ringvpn::sim {

namespace {

constexpr double kInvalid = std::numeric_limits<double>::quiet_NaN();

bool valid(double v) { return !std::isnan(v) && v >= 0.0; }

// gzread handles both gzip and plain files
std::vector<std::string> read_lines(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) throw ParseError("cannot open dataset file: " + path, 0);
  std::string content;
  char buf[1 << 16];
  int n;
  while ((n = gzread(f, buf, sizeof(buf))) > 0) content.append(buf, std::size_t(n));
  const bool bad = n < 0;
  gzclose(f);
  if (bad) throw ParseError("read error on dataset file: " + path, 0);
  std::vector<std::string> lines;
  std::string cur;
  for (char c : content) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& t, int line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad numeric token '" + t + "'", line_no);
  }
}

long parse_index(const std::string& t, int line_no) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(t, &pos);
    if (pos != t.size() || v < 0) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad index token '" + t + "'", line_no);
  }
}

}  // namespace

LatencyModel LatencyModel::load(const std::string& path) {
  const auto lines = read_lines(path);

  // first non-empty, non-comment line decides the format
  std::size_t first = 0;
  while (first < lines.size() &&
         (lines[first].empty() || lines[first][0] == '#'))
    ++first;
  if (first >= lines.size()) throw ParseError("empty dataset file", 0);

  LatencyModel m;
  const auto head = tokens_of(lines[first]);

  if (head.size() == 1) {
    // format A: N then N full rows
    const long n = parse_index(head[0], int(first) + 1);
    if (n <= 0) throw DimensionError("matrix size must be positive");
    m.n_ = int(n);
    m.rtt_.assign(std::size_t(n) * n, kInvalid);
    std::size_t row = 0;
    for (std::size_t li = first + 1; li < lines.size() && row < std::size_t(n); ++li) {
      if (lines[li].empty() || lines[li][0] == '#') continue;
      const auto toks = tokens_of(lines[li]);
      if (long(toks.size()) != n)
        throw DimensionError("row " + std::to_string(row) + " has " +
                             std::to_string(toks.size()) + " entries, expected " +
                             std::to_string(n));
      for (long j = 0; j < n; ++j)
        m.rtt_[row * n + j] = parse_double(toks[std::size_t(j)], int(li) + 1);
      ++row;
    }
    if (row != std::size_t(n))
      throw DimensionError("expected " + std::to_string(n) + " rows, found " +
                           std::to_string(row));
  } else if (head.size() == 3) {
    // format B: "i j rtt_us" triples, microseconds
    long max_idx = -1;
    struct Triple {
      long i, j;
      double ms;
    };
    std::vector<Triple> triples;
    for (std::size_t li = first; li < lines.size(); ++li) {
      if (lines[li].empty() || lines[li][0] == '#') continue;
      const auto toks = tokens_of(lines[li]);
      if (toks.size() != 3)
        throw ParseError("expected 'i j rtt_us' triple", int(li) + 1);
      const long i = parse_index(toks[0], int(li) + 1);
      const long j = parse_index(toks[1], int(li) + 1);
      const double us = parse_double(toks[2], int(li) + 1);
      triples.push_back({i, j, us / 1000.0});
      max_idx = std::max({max_idx, i, j});
    }
    if (max_idx < 0) throw ParseError("no triples in dataset file", 0);
    m.n_ = int(max_idx) + 1;
    m.rtt_.assign(std::size_t(m.n_) * m.n_, kInvalid);
    for (const auto& t : triples)
      m.rtt_[std::size_t(t.i) * m.n_ + t.j] = t.ms < 0 ? kInvalid : t.ms;
  } else {
    throw ParseError("unrecognized dataset header", int(first) + 1);
  }

  // negatives from format A become invalid before repair
  for (auto& v : m.rtt_)
    if (!std::isnan(v) && v < 0.0) v = kInvalid;

  m.repair_and_symmetrize();
  return m;
}

void LatencyModel::repair_and_symmetrize() {
  const std::size_t n = std::size_t(n_);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return rtt_[i * n + j]; };

  // mirror valid values into invalid slots first
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!valid(at(i, j)) && valid(at(j, i))) at(i, j) = at(j, i);
      if (!valid(at(j, i)) && valid(at(i, j))) at(j, i) = at(i, j);
    }
  }

  // global median over valid off-diagonal entries, for rows with nothing valid
  std::vector<double> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && valid(at(i, j))) all.push_back(at(i, j));
  double global_median = 50.0;
  if (!all.empty()) {
    std::sort(all.begin(), all.end());
    global_median = all[all.size() / 2];
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row_valid;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && valid(at(i, j))) row_valid.push_back(at(i, j));
    double med = global_median;
    if (!row_valid.empty()) {
      std::sort(row_valid.begin(), row_valid.end());
      med = row_valid[row_valid.size() / 2];
    }
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !valid(at(i, j))) at(i, j) = med;
  }

  for (std::size_t i = 0; i < n; ++i) {
    at(i, i) = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = (at(i, j) + at(j, i)) / 2.0;
      at(i, j) = avg;
      at(j, i) = avg;
    }
  }
}

LatencyModel LatencyModel::synthetic(int n, std::uint64_t seed) {
  if (n <= 0) throw DimensionError("synthetic size must be positive");
  LatencyModel m;
  m.n_ = n;
  m.rtt_.assign(std::size_t(n) * n, 0.0);
  Rng rng(seed ^ 0x5e11a7e11edull);

  // hosts on a 2-D plane, ~continental RTT scale
  std::vector<double> x(std::size_t(n)), y(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    x[std::size_t(i)] = rng.uniform() * 240.0;
    y[std::size_t(i)] = rng.uniform() * 240.0;
  }
  // multiplicative noise kept small so path averages stay metric-like
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = x[std::size_t(i)] - x[std::size_t(j)];
      const double dy = y[std::size_t(i)] - y[std::size_t(j)];
      const double base = std::sqrt(dx * dx + dy * dy);
      const double noisy = std::max(1.0, base * (1.0 + 0.04 * rng.uniform()));
      m.rtt_[std::size_t(i) * n + j] = noisy;
      m.rtt_[std::size_t(j) * n + i] = noisy;
    }
  }
  return m;
}

}  // namespace ringvpn::sim
