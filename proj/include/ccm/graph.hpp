#pragma once

// Mutable simple undirected graph with dense integer node labels, O(1) edge
// queries, incremental degree/covariate bookkeeping and uniform edge /
// non-edge selection for toggle proposals. Adjacency is kept as per-node bit
// rows (neighbor sets, iterated in ascending order) plus a flat presence
// bitset indexed by dyad, plus a compact edge array for O(1) uniform picks.

#include <bit>
#include <cstdint>
#include <vector>

#include "ccm/common.hpp"
#include "ccm/rng.hpp"

namespace ccm {

class Graph {
 public:
  explicit Graph(uint32_t n, std::vector<int> covariate = {});

  static Graph complete(uint32_t n, std::vector<int> covariate = {});

  uint32_t node_count() const { return n_; }
  int64_t edge_count() const { return m_; }
  int64_t max_edges() const { return max_edges_; }
  double density() const {
    return max_edges_ == 0 ? 0.0 : static_cast<double>(m_) / static_cast<double>(max_edges_);
  }

  bool has_edge(uint32_t u, uint32_t v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    return test_bit(present_, dyad_index(Dyad(u, v)));
  }
  bool has_edge(const Dyad& d) const { return has_edge(d.u, d.v); }

  int degree(uint32_t u) const {
    check_node(u);
    return degree_[u];
  }

  bool has_covariates() const { return !covariate_.empty(); }
  int covariate(uint32_t u) const {
    check_node(u);
    if (covariate_.empty()) throw UsageError("graph has no covariates");
    return covariate_[u];
  }
  // Number of distinct covariate groups (max label + 1); 0 when unset.
  int group_count() const { return groups_; }
  const std::vector<int>& covariates() const { return covariate_; }

  // Flips the edge state of d. Returns true if the edge was present before
  // (i.e. this call removed it). Toggling twice restores the graph.
  bool toggle(const Dyad& d);

  // Uniform over existing edges; requires m > 0.
  Dyad uniform_edge(Rng& rng) const;
  // Uniform over absent dyads; requires m < M. Rejection sampling below
  // density 0.9, complement (t-th zero bit) selection above.
  Dyad uniform_nonedge(Rng& rng) const;

  // Ascending neighbor iteration.
  template <class F>
  void for_neighbors(uint32_t u, F&& f) const {
    const uint64_t* row = rows_.data() + static_cast<size_t>(u) * words_per_row_;
    for (uint32_t w = 0; w < words_per_row_; ++w) {
      uint64_t bits = row[w];
      while (bits != 0) {
        f(static_cast<uint32_t>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  int64_t common_neighbors(uint32_t u, uint32_t v) const {
    const uint64_t* a = rows_.data() + static_cast<size_t>(u) * words_per_row_;
    const uint64_t* b = rows_.data() + static_cast<size_t>(v) * words_per_row_;
    int64_t count = 0;
    for (uint32_t w = 0; w < words_per_row_; ++w) count += std::popcount(a[w] & b[w]);
    return count;
  }

  // Dyad indices of current edges, arbitrary order.
  const std::vector<uint32_t>& edge_slots() const { return edges_; }
  // Edges as (u,v) pairs sorted by dyad index (ascending u within v).
  std::vector<Dyad> sorted_edges() const;

  // Same node count, edge set and covariates.
  bool operator==(const Graph& other) const;

  // State hash for cheap no-mutation checks.
  uint64_t fingerprint() const;

 private:
  void check_node(uint32_t u) const {
    if (u >= n_) throw UsageError("node index " + std::to_string(u) + " out of range [0," +
                                  std::to_string(n_) + ")");
  }
  static bool test_bit(const std::vector<uint64_t>& bits, int64_t i) {
    return (bits[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  static void flip_bit(std::vector<uint64_t>& bits, int64_t i) {
    bits[static_cast<size_t>(i >> 6)] ^= (1ULL << (i & 63));
  }

  uint32_t n_;
  int64_t max_edges_;
  int64_t m_ = 0;
  uint32_t words_per_row_;
  std::vector<uint64_t> rows_;      // n x words adjacency bits
  std::vector<uint64_t> present_;   // M bits, dyad-indexed
  std::vector<int32_t> degree_;
  std::vector<uint32_t> edges_;     // dyad indices of present edges
  std::vector<int32_t> edge_pos_;   // dyad index -> position in edges_, -1 if absent
  std::vector<int> covariate_;
  int groups_ = 0;
};

}  // namespace ccm
