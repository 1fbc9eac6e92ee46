#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pctrees/pcm.hpp"

namespace pctrees {

using BigCount = boost::multiprecision::cpp_int;

/// Default refusal threshold for explicit tree enumeration.
inline constexpr std::uint64_t kDefaultTreeCap = 1'000'000;

/// Undirected edge with u < v (zero-based vertices).
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph whose vertices are the alternatives of a
/// comparison matrix. Edges are kept sorted lexicographically.
class ComparisonGraph {
 public:
  /// Throws std::invalid_argument on self-loops, duplicates, or out-of-range vertices.
  ComparisonGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<std::size_t> degrees() const;
  bool has_edge(std::size_t a, std::size_t b) const;

  friend bool operator==(const ComparisonGraph&, const ComparisonGraph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// n - 1 edges, sorted, forming a connected acyclic subgraph.
struct SpanningTree {
  std::vector<Edge> edges;

  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

std::string to_string(const SpanningTree& tree);

struct RootedEdge {
  std::size_t parent;
  std::size_t child;
};

/// Tree edges in breadth-first order from `root`, each oriented away from it.
/// Throws std::invalid_argument if the edges do not span vertices 0..n-1 as a tree.
std::vector<RootedEdge> root_tree(const SpanningTree& tree, std::size_t n, std::size_t root = 0);

template <class T>
ComparisonGraph build_graph(const PairwiseMatrix<T>& pcm) {
  std::vector<Edge> edges;
  const auto n = pcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pcm.has(i, j)) edges.push_back({i, j});
    }
  }
  return ComparisonGraph(n, std::move(edges));
}

bool is_connected(const ComparisonGraph& g);

/// True iff `tree` has n - 1 edges of `g` and connects every vertex.
bool is_spanning_tree_of(const SpanningTree& tree, const ComparisonGraph& g);

/// Standard Laplacian: degree on the diagonal, -1 for adjacent pairs, 0 otherwise.
std::vector<std::vector<long long>> laplacian(const ComparisonGraph& g);

/// Exact count from the determinant of a Laplacian cofactor (Bareiss
/// fraction-free elimination). Returns 0 for a disconnected graph.
BigCount count_trees_exact(const ComparisonGraph& g);

/// (1/n) * product of the nonzero-index Laplacian eigenvalues.
double count_trees_spectral(const ComparisonGraph& g);

/// binom(e - k, n - k - 1) where k is the number of degree-1 vertices.
/// Throws NotConnectedError for a disconnected graph.
BigCount tree_count_upper_bound(const ComparisonGraph& g);

/// Visits every spanning tree once in lexicographic order of the sorted edge
/// lists. No cap is applied. Throws NotConnectedError.
void for_each_spanning_tree(const ComparisonGraph& g, const std::function<void(const SpanningTree&)>& visit);

/// Collects all spanning trees in lexicographic order. Throws
/// TooManyTreesError when the exact count exceeds `cap`.
std::vector<SpanningTree> enumerate_spanning_trees(const ComparisonGraph& g, std::uint64_t cap = kDefaultTreeCap);

}  // namespace pctrees
