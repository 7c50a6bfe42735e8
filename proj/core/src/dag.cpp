#include "tsent/dag.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tsent {

Dag::Dag(std::vector<DagNode> nodes, std::vector<std::pair<std::string, std::string>> edges)
    : nodes_(std::move(nodes)) {
  std::set<std::string> seen;
  for (const auto& n : nodes_) {
    if (n.cardinality < 1) throw std::invalid_argument("node cardinality must be >= 1");
    if (!seen.insert(n.name).second)
      throw std::invalid_argument("duplicate node name: " + n.name);
  }
  parents_.resize(nodes_.size());
  children_.resize(nodes_.size());
  std::set<std::pair<int, int>> edge_set;
  for (const auto& [p, c] : edges) {
    int pi = index_of_checked(p), ci = index_of_checked(c);
    if (pi == ci) throw std::invalid_argument("self-loop on " + p);
    if (!edge_set.insert({pi, ci}).second)
      throw std::invalid_argument("duplicate edge " + p + " -> " + c);
    edges_.emplace_back(pi, ci);
    parents_[static_cast<size_t>(ci)].push_back(pi);
    children_[static_cast<size_t>(pi)].push_back(ci);
  }
  for (auto& v : parents_) std::sort(v.begin(), v.end());
  for (auto& v : children_) std::sort(v.begin(), v.end());

  // Kahn's algorithm; leftover nodes mean a cycle.
  std::vector<int> indeg(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i)
    indeg[i] = static_cast<int>(parents_[i].size());
  std::vector<int> queue;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
  size_t done = 0;
  while (!queue.empty()) {
    int n = queue.back();
    queue.pop_back();
    ++done;
    for (int c : children_[static_cast<size_t>(n)])
      if (--indeg[static_cast<size_t>(c)] == 0) queue.push_back(c);
  }
  if (done != nodes_.size()) throw std::invalid_argument("graph has a directed cycle");
}

Dag Dag::builtin(std::string_view name) {
  if (name == "bell") {
    return Dag({{"A", true, 2},
                {"B", true, 2},
                {"L", false, 2},
                {"X", true, 2},
                {"Y", true, 2}},
               {{"A", "X"}, {"L", "X"}, {"L", "Y"}, {"B", "Y"}});
  }
  if (name == "triangle") {
    return Dag({{"A", false, 2},
                {"B", false, 2},
                {"C", false, 2},
                {"X", true, 2},
                {"Y", true, 2},
                {"Z", true, 2}},
               {{"B", "X"}, {"C", "X"}, {"A", "Y"}, {"C", "Y"}, {"A", "Z"}, {"B", "Z"}});
  }
  if (name == "common-cause-3") {
    return Dag({{"X", true, 2}, {"Y", true, 2}, {"Z", false, 2}},
               {{"Z", "X"}, {"Z", "Y"}});
  }
  throw std::invalid_argument("unknown builtin DAG: " + std::string(name));
}

int Dag::index_of(std::string_view name) const {
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].name == name) return static_cast<int>(i);
  return -1;
}

int Dag::index_of_checked(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw std::invalid_argument("unknown node: " + std::string(name));
  return i;
}

std::vector<int> Dag::descendants(int node) const {
  std::vector<bool> vis(nodes_.size(), false);
  std::vector<int> stack{node}, out;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    for (int c : children_[static_cast<size_t>(n)]) {
      if (!vis[static_cast<size_t>(c)]) {
        vis[static_cast<size_t>(c)] = true;
        out.push_back(c);
        stack.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Dag::non_descendants(int node) const {
  std::vector<bool> excl(nodes_.size(), false);
  excl[static_cast<size_t>(node)] = true;
  for (int d : descendants(node)) excl[static_cast<size_t>(d)] = true;
  for (int p : parents(node)) excl[static_cast<size_t>(p)] = true;
  std::vector<int> out;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (!excl[i]) out.push_back(static_cast<int>(i));
  return out;
}

namespace {
std::uint32_t to_mask(const Dag& dag, const std::vector<std::string>& names) {
  std::uint32_t m = 0;
  for (const auto& n : names) m |= std::uint32_t{1} << dag.index_of_checked(n);
  return m;
}
}  // namespace

bool Dag::d_separated(const std::vector<std::string>& x, const std::vector<std::string>& y,
                      const std::vector<std::string>& z) const {
  std::uint32_t xm = to_mask(*this, x), ym = to_mask(*this, y), zm = to_mask(*this, z);
  if (xm == 0 || ym == 0) throw std::invalid_argument("d-separation: X, Y must be non-empty");
  if ((xm & ym) || (xm & zm) || (ym & zm))
    throw std::invalid_argument("d-separation: sets must be disjoint");
  return d_separated_idx(xm, ym, zm);
}

// Separation in the moral graph of the ancestral set of X∪Y∪Z is equivalent
// to d-separation (Lauritzen et al.).
bool Dag::d_separated_idx(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
  const auto n = nodes_.size();
  std::uint32_t anc = x | y | z;
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t i = 0; i < n; ++i) {
      if (!(anc & (std::uint32_t{1} << i))) continue;
      for (int p : parents_[i]) {
        std::uint32_t bit = std::uint32_t{1} << p;
        if (!(anc & bit)) {
          anc |= bit;
          grew = true;
        }
      }
    }
  }

  // adjacency of the moralized ancestral graph
  std::vector<std::uint32_t> adj(n, 0);
  auto in_anc = [&](size_t i) { return (anc >> i) & 1u; };
  for (size_t c = 0; c < n; ++c) {
    if (!in_anc(c)) continue;
    const auto& ps = parents_[c];
    for (size_t a = 0; a < ps.size(); ++a) {
      auto pa = static_cast<size_t>(ps[a]);
      if (!in_anc(pa)) continue;
      adj[c] |= std::uint32_t{1} << pa;
      adj[pa] |= std::uint32_t{1} << c;
      for (size_t b = a + 1; b < ps.size(); ++b) {
        auto pb = static_cast<size_t>(ps[b]);
        if (!in_anc(pb)) continue;
        adj[pa] |= std::uint32_t{1} << pb;
        adj[pb] |= std::uint32_t{1} << pa;
      }
    }
  }

  std::uint32_t reach = x, frontier = x;
  while (frontier) {
    std::uint32_t next = 0;
    for (size_t i = 0; i < n; ++i)
      if (frontier & (std::uint32_t{1} << i)) next |= adj[i];
    next &= anc & ~z & ~reach;  // conditioning nodes block
    reach |= next;
    frontier = next;
  }
  return (reach & y) == 0;
}

std::vector<std::string> Dag::names_of(std::uint32_t mask) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) out.push_back(nodes_[i].name);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CiStatement> Dag::markov_ci_list() const {
  std::vector<CiStatement> out;
  for (int i = 0; i < node_count(); ++i) {
    auto nd = non_descendants(i);
    if (nd.empty()) continue;  // dropped with a notice by callers that care
    CiStatement st;
    st.x = {nodes_[static_cast<size_t>(i)].name};
    for (int j : nd) st.y.push_back(nodes_[static_cast<size_t>(j)].name);
    for (int p : parents(i)) st.z.push_back(nodes_[static_cast<size_t>(p)].name);
    std::sort(st.y.begin(), st.y.end());
    std::sort(st.z.begin(), st.z.end());
    if (st.y < st.x) std::swap(st.x, st.y);
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<CiStatement> Dag::enumerate_ci_statements() const {
  const int n = node_count();
  if (n > kMaxEnumerationNodes)
    throw std::invalid_argument("CI enumeration capped at 8 nodes");
  std::set<CiStatement> found;

  // Assign each node to X / Y / Z / rest.
  std::vector<int> assign(static_cast<size_t>(n), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::uint32_t x = 0, y = 0, z = 0;
    for (int i = 0; i < n; ++i) {
      switch (c & 3) {
        case 0: x |= std::uint32_t{1} << i; break;
        case 1: y |= std::uint32_t{1} << i; break;
        case 2: z |= std::uint32_t{1} << i; break;
        default: break;
      }
      c >>= 2;
    }
    if (!x || !y) continue;
    if (x > y) std::swap(x, y);  // canonical: unordered (X,Y) pair
    CiStatement st{names_of(x), names_of(y), names_of(z)};
    if (st.y < st.x) std::swap(st.x, st.y);
    if (found.count(st)) continue;
    if (d_separated_idx(x, y, z)) found.insert(std::move(st));
  }
  return {found.begin(), found.end()};
}

std::int64_t ci_count_upper_bound(int n) {
  if (n < 2) throw std::invalid_argument("ci_count_upper_bound requires n >= 2");
  auto ipow = [](std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  return (ipow(4, n) - 2 * ipow(3, n) + ipow(2, n)) / 2;
}

}  // namespace tsent
