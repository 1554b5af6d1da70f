#include "ccm/graph.hpp"

#include <algorithm>

namespace ccm {

Graph::Graph(uint32_t n, std::vector<int> covariate)
    : n_(n),
      max_edges_(num_dyads(n)),
      words_per_row_((n + 63) / 64),
      rows_(static_cast<size_t>(n) * ((n + 63) / 64), 0),
      present_((static_cast<size_t>(num_dyads(n)) + 63) / 64 + 1, 0),
      degree_(n, 0),
      edge_pos_(static_cast<size_t>(num_dyads(n)), -1),
      covariate_(std::move(covariate)) {
  if (n_ < 1) throw UsageError("graph needs at least one node");
  if (!covariate_.empty()) {
    if (covariate_.size() != n_)
      throw UsageError("covariate length " + std::to_string(covariate_.size()) +
                       " != node count " + std::to_string(n_));
    int max_label = 0;
    for (int c : covariate_) {
      if (c < 0) throw UsageError("covariate labels must be >= 0");
      max_label = std::max(max_label, c);
    }
    groups_ = max_label + 1;
  }
}

Graph Graph::complete(uint32_t n, std::vector<int> covariate) {
  Graph g(n, std::move(covariate));
  for (uint32_t v = 1; v < n; ++v)
    for (uint32_t u = 0; u < v; ++u) g.toggle(Dyad(u, v));
  return g;
}

bool Graph::toggle(const Dyad& d) {
  check_node(d.v);  // d.u < d.v by construction
  const int64_t idx = dyad_index(d);
  const bool was_present = test_bit(present_, idx);
  flip_bit(present_, idx);
  rows_[static_cast<size_t>(d.u) * words_per_row_ + d.v / 64] ^= 1ULL << (d.v & 63);
  rows_[static_cast<size_t>(d.v) * words_per_row_ + d.u / 64] ^= 1ULL << (d.u & 63);
  if (was_present) {
    const int32_t pos = edge_pos_[static_cast<size_t>(idx)];
    const uint32_t last = edges_.back();
    edges_[static_cast<size_t>(pos)] = last;
    edge_pos_[last] = pos;
    edges_.pop_back();
    edge_pos_[static_cast<size_t>(idx)] = -1;
    --degree_[d.u];
    --degree_[d.v];
    --m_;
  } else {
    edge_pos_[static_cast<size_t>(idx)] = static_cast<int32_t>(edges_.size());
    edges_.push_back(static_cast<uint32_t>(idx));
    ++degree_[d.u];
    ++degree_[d.v];
    ++m_;
  }
  return was_present;
}

Dyad Graph::uniform_edge(Rng& rng) const {
  if (m_ == 0) throw UsageError("uniform_edge: graph has no edges");
  return dyad_from_index(edges_[rng.bounded(static_cast<uint64_t>(m_))]);
}

Dyad Graph::uniform_nonedge(Rng& rng) const {
  const int64_t absent = max_edges_ - m_;
  if (absent <= 0) throw UsageError("uniform_nonedge: graph is complete");
  if (density() < 0.9) {
    for (;;) {
      const auto idx = static_cast<int64_t>(rng.bounded(static_cast<uint64_t>(max_edges_)));
      if (!test_bit(present_, idx)) return dyad_from_index(idx);
    }
  }
  // Select the t-th absent dyad by popcount word skipping.
  int64_t t = static_cast<int64_t>(rng.bounded(static_cast<uint64_t>(absent)));
  const size_t full_words = static_cast<size_t>(max_edges_) / 64;
  for (size_t w = 0;; ++w) {
    uint64_t zeros = ~present_[w];
    if (w == full_words) zeros &= (1ULL << (max_edges_ & 63)) - 1;
    const int count = std::popcount(zeros);
    if (t < count) {
      for (int j = 0; j < t; ++j) zeros &= zeros - 1;
      return dyad_from_index(static_cast<int64_t>(w) * 64 + std::countr_zero(zeros));
    }
    t -= count;
  }
}

std::vector<Dyad> Graph::sorted_edges() const {
  std::vector<uint32_t> slots = edges_;
  std::sort(slots.begin(), slots.end());
  std::vector<Dyad> out;
  out.reserve(slots.size());
  for (uint32_t s : slots) out.push_back(dyad_from_index(s));
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_ || covariate_ != other.covariate_) return false;
  return present_ == other.present_;
}

uint64_t Graph::fingerprint() const {
  uint64_t h = 0x243f6a8885a308d3ULL ^ (static_cast<uint64_t>(n_) << 32) ^
               static_cast<uint64_t>(m_);
  for (uint64_t w : present_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

}  // namespace ccm
