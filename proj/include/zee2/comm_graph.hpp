#pragma once

// Commutation graphs: vertices are the elements of (Z_2)^n, edges join pairs
// whose basis elements anticommute.

#include <cstdint>
#include <string>
#include <vector>

#include "zee2/gf2.hpp"
#include "zee2/twist.hpp"

namespace zee2 {

class CommGraph {
 public:
  /// Edge (x,y) iff beta(x,y) = 1. Requires n <= 12.
  static CommGraph of(const TwistSpec& spec);
  static CommGraph edgeless(int n);

  int arity() const { return n_; }
  std::uint32_t vertex_count() const { return std::uint32_t{1} << n_; }

  bool edge(std::uint32_t x, std::uint32_t y) const {
    return ((rows_[x][y >> 6] >> (y & 63)) & 1) != 0;
  }
  int degree(std::uint32_t x) const;
  std::uint64_t edge_count() const;

  /// Isolated vertices (homogeneous central elements), ascending by mask.
  std::vector<std::uint32_t> singletons() const;

  /// Symmetric difference of the edge sets.
  CommGraph superpose(const CommGraph& other) const;

  /// Graphviz rendering: undirected graph, nodes labeled by bit strings with
  /// coordinate 1 leftmost, nodes and edges ordered by mask value.
  std::string to_dot() const;

  bool operator==(const CommGraph&) const = default;

 private:
  explicit CommGraph(int n);

  int n_;
  std::vector<std::vector<std::uint64_t>> rows_;  // bitset per vertex
};

}  // namespace zee2
