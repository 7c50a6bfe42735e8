#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsent {

struct DagNode {
  std::string name;
  bool observed = true;
  int cardinality = 2;
};

// Canonical conditional-independence statement X ⊥ Y | Z.
// X and Y are each sorted and the pair is ordered so that X <= Y
// lexicographically; Z is sorted.
struct CiStatement {
  std::vector<std::string> x, y, z;
  bool operator==(const CiStatement&) const = default;
  bool operator<(const CiStatement& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

class Dag {
 public:
  // Enumeration over all 4-way node partitions is exponential; refuse above this.
  static constexpr int kMaxEnumerationNodes = 8;

  Dag(std::vector<DagNode> nodes, std::vector<std::pair<std::string, std::string>> edges);

  // Built-in structures: "bell", "triangle", "common-cause-3".
  static Dag builtin(std::string_view name);

  const std::vector<DagNode>& nodes() const { return nodes_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int index_of(std::string_view name) const;  // -1 if unknown
  int index_of_checked(std::string_view name) const;

  const std::vector<int>& parents(int node) const { return parents_[static_cast<size_t>(node)]; }
  const std::vector<int>& children(int node) const { return children_[static_cast<size_t>(node)]; }
  std::vector<int> descendants(int node) const;
  // All nodes except the node itself, its descendants and its parents
  // (the parents appear as the conditioning set of the Markov statement).
  std::vector<int> non_descendants(int node) const;

  bool d_separated(const std::vector<std::string>& x, const std::vector<std::string>& y,
                   const std::vector<std::string>& z) const;
  bool d_separated_idx(std::uint32_t x, std::uint32_t y, std::uint32_t z) const;

  // One statement per node with a non-empty second argument (Markov condition).
  std::vector<CiStatement> markov_ci_list() const;

  // Every canonical d-separated triple; deterministic order, deduplicated.
  std::vector<CiStatement> enumerate_ci_statements() const;

  std::vector<std::string> names_of(std::uint32_t mask) const;

 private:
  std::vector<DagNode> nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> parents_, children_;
};

// 1/2 (4^n - 2*3^n + 2^n): distinct CI triples of an n-node edgeless DAG.
std::int64_t ci_count_upper_bound(int n);

}  // namespace tsent
