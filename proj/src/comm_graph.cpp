#include "zee2/comm_graph.hpp"

#include <stdexcept>

namespace zee2 {

CommGraph::CommGraph(int n) : n_(n) {
  if (n < 1 || n > Cochain2::kDenseArityCap)
    throw std::invalid_argument("CommGraph: arity out of range");
  const std::uint32_t count = std::uint32_t{1} << n;
  rows_.assign(count, std::vector<std::uint64_t>((count + 63) / 64, 0));
}

CommGraph CommGraph::of(const TwistSpec& spec) {
  CommGraph g(spec.arity());
  const std::uint32_t count = g.vertex_count();
  for (std::uint32_t x = 0; x < count; ++x)
    for (std::uint32_t y = x + 1; y < count; ++y)
      if (spec.beta(x, y)) {
        g.rows_[x][y >> 6] ^= std::uint64_t{1} << (y & 63);
        g.rows_[y][x >> 6] ^= std::uint64_t{1} << (x & 63);
      }
  return g;
}

CommGraph CommGraph::edgeless(int n) { return CommGraph(n); }

int CommGraph::degree(std::uint32_t x) const {
  int d = 0;
  for (std::uint64_t w : rows_[x]) d += std::popcount(w);
  return d;
}

std::uint64_t CommGraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::uint32_t x = 0; x < vertex_count(); ++x)
    total += static_cast<std::uint64_t>(degree(x));
  return total / 2;
}

std::vector<std::uint32_t> CommGraph::singletons() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < vertex_count(); ++x)
    if (degree(x) == 0) out.push_back(x);
  return out;
}

CommGraph CommGraph::superpose(const CommGraph& other) const {
  if (n_ != other.n_) throw std::invalid_argument("superpose: arity mismatch");
  CommGraph g(n_);
  for (std::uint32_t x = 0; x < vertex_count(); ++x)
    for (std::size_t w = 0; w < rows_[x].size(); ++w)
      g.rows_[x][w] = rows_[x][w] ^ other.rows_[x][w];
  return g;
}

std::string CommGraph::to_dot() const {
  std::string out = "graph commutation {\n";
  for (std::uint32_t x = 0; x < vertex_count(); ++x)
    out += "  n" + std::to_string(x) + " [label=\"" + to_bit_string(x, n_) + "\"];\n";
  for (std::uint32_t x = 0; x < vertex_count(); ++x)
    for (std::uint32_t y = x + 1; y < vertex_count(); ++y)
      if (edge(x, y))
        out += "  n" + std::to_string(x) + " -- n" + std::to_string(y) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace zee2
