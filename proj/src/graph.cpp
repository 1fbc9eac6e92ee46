#include "pctrees/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "pctrees/error.hpp"

namespace pctrees {

namespace {

// Union-find without path compression; copied by value at each branch of
// the enumeration, which keeps backtracking trivial.
struct Components {
  std::vector<std::size_t> parent;
  std::size_t count;

  explicit Components(std::size_t n) : parent(n), count(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    --count;
    return true;
  }
};

class TreeEnumerator {
 public:
  TreeEnumerator(const ComparisonGraph& g, const std::function<void(const SpanningTree&)>& visit)
      : edges_(g.edges()), n_(g.vertex_count()), visit_(visit) {
    current_.edges.reserve(n_ > 0 ? n_ - 1 : 0);
  }

  void run() { recurse(0, Components(n_)); }

 private:
  // Include-first branching over the sorted edge list emits trees in
  // lexicographic order. Contraction only joins distinct components and
  // deletion only happens while the remaining edges still span, so every
  // leaf of the recursion is a spanning tree.
  void recurse(std::size_t k, const Components& comps) {
    if (current_.edges.size() + 1 == n_ || n_ <= 1) {
      visit_(current_);
      return;
    }
    if (k == edges_.size()) return;

    const Edge& e = edges_[k];
    if (comps.find(e.u) != comps.find(e.v)) {
      Components contracted = comps;
      contracted.unite(e.u, e.v);
      current_.edges.push_back(e);
      recurse(k + 1, contracted);
      current_.edges.pop_back();
    }
    if (spans_without(k, comps)) recurse(k + 1, comps);
  }

  bool spans_without(std::size_t k, Components comps) const {
    for (std::size_t i = k + 1; i < edges_.size() && comps.count > 1; ++i) comps.unite(edges_[i].u, edges_[i].v);
    return comps.count == 1;
  }

  const std::vector<Edge>& edges_;
  std::size_t n_;
  const std::function<void(const SpanningTree&)>& visit_;
  SpanningTree current_;
};

BigCount binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace

ComparisonGraph::ComparisonGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n_) throw std::invalid_argument("edge vertex " + std::to_string(e.v + 1) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge in comparison graph");
  }
}

std::vector<std::size_t> ComparisonGraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool ComparisonGraph::has_edge(std::size_t a, std::size_t b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string to_string(const SpanningTree& tree) {
  std::string out = "{";
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    if (i > 0) out += ",";
    out += "{" + std::to_string(tree.edges[i].u + 1) + "," + std::to_string(tree.edges[i].v + 1) + "}";
  }
  return out + "}";
}

bool is_connected(const ComparisonGraph& g) {
  if (g.vertex_count() <= 1) return true;
  Components comps(g.vertex_count());
  for (const auto& e : g.edges()) comps.unite(e.u, e.v);
  return comps.count == 1;
}

bool is_spanning_tree_of(const SpanningTree& tree, const ComparisonGraph& g) {
  const auto n = g.vertex_count();
  if (tree.edges.size() + 1 != n) return false;
  Components comps(n);
  for (const auto& e : tree.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (!comps.unite(e.u, e.v)) return false;
  }
  return comps.count == 1;
}

std::vector<RootedEdge> root_tree(const SpanningTree& tree, std::size_t n, std::size_t root) {
  if (root >= n || tree.edges.size() + 1 != n) {
    throw std::invalid_argument("tree with " + std::to_string(tree.edges.size()) + " edges cannot span " + std::to_string(n) + " vertices");
  }
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : tree.edges) {
    if (e.v >= n) throw std::invalid_argument("tree edge vertex out of range");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<RootedEdge> order;
  order.reserve(n - 1);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{root};
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto p = queue[head];
    for (auto c : adj[p]) {
      if (seen[c]) continue;
      seen[c] = true;
      order.push_back({p, c});
      queue.push_back(c);
    }
  }
  if (order.size() + 1 != n) throw std::invalid_argument("tree edges do not connect every vertex");
  return order;
}

std::vector<std::vector<long long>> laplacian(const ComparisonGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<long long>> lap(n, std::vector<long long>(n, 0));
  for (const auto& e : g.edges()) {
    lap[e.u][e.v] = -1;
    lap[e.v][e.u] = -1;
    ++lap[e.u][e.u];
    ++lap[e.v][e.v];
  }
  return lap;
}

BigCount count_trees_exact(const ComparisonGraph& g) {
  const auto n = g.vertex_count();
  if (n <= 1) return 1;
  const auto lap = laplacian(g);

  // Cofactor obtained by deleting the last row and column.
  const std::size_t m = n - 1;
  std::vector<std::vector<BigCount>> a(m, std::vector<BigCount>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = lap[i][j];

  int sign = 1;
  BigCount prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && a[pivot][k] == 0) ++pivot;
      if (pivot == m) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigCount det = a[m - 1][m - 1];
  return sign < 0 ? BigCount(-det) : det;
}

double count_trees_spectral(const ComparisonGraph& g) {
  const auto n = g.vertex_count();
  if (n <= 1) return 1.0;
  const auto lap = laplacian(g);
  Eigen::MatrixXd mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(lap[i][j]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& eig = solver.eigenvalues();  // ascending

  // The algebraic connectivity is numerically zero for disconnected graphs.
  if (eig(1) < 1e-9 * std::max(1.0, eig(static_cast<Eigen::Index>(n) - 1))) return 0.0;
  double product = 1.0;
  for (Eigen::Index k = 1; k < static_cast<Eigen::Index>(n); ++k) product *= eig(k);
  return product / static_cast<double>(n);
}

BigCount tree_count_upper_bound(const ComparisonGraph& g) {
  if (!is_connected(g)) throw NotConnectedError("comparison graph is not connected");
  const auto deg = g.degrees();
  const auto leaves = static_cast<long long>(std::count(deg.begin(), deg.end(), std::size_t{1}));
  const auto n = static_cast<long long>(g.vertex_count());
  const auto e = static_cast<long long>(g.edge_count());
  // Two vertices joined by one edge are both leaves; the single tree is the graph.
  if (n - leaves - 1 < 0) return 1;
  return binomial(e - leaves, n - leaves - 1);
}

void for_each_spanning_tree(const ComparisonGraph& g, const std::function<void(const SpanningTree&)>& visit) {
  if (!is_connected(g)) throw NotConnectedError("comparison graph is not connected; no spanning tree exists");
  TreeEnumerator(g, visit).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const ComparisonGraph& g, std::uint64_t cap) {
  if (!is_connected(g)) throw NotConnectedError("comparison graph is not connected; no spanning tree exists");
  const BigCount count = count_trees_exact(g);
  if (count > cap) {
    throw TooManyTreesError(count.str(), tree_count_upper_bound(g).str(), cap);
  }
  std::vector<SpanningTree> trees;
  trees.reserve(static_cast<std::size_t>(count));
  for_each_spanning_tree(g, [&](const SpanningTree& t) { trees.push_back(t); });
  return trees;
}

}  // namespace pctrees
