#include "votemap/gs_tree.hpp"

#include "votemap/error.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace votemap {

GSTree::GSTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw StructureError("empty tree");
  std::size_t leaves = 0;
  for (const auto& n : nodes_) {
    if (n.leaf) {
      ++leaves;
      if (!n.children.empty()) throw StructureError("leaf with children");
    } else if (n.children.size() < 2) {
      throw StructureError("internal node with fewer than two children");
    }
  }
  m_ = leaves;
  std::vector<bool> visited(nodes_.size(), false);
  std::vector<bool> seen_candidate(m_, false);
  leaf_counts_.assign(nodes_.size(), 0);
  // Iterative post-order from the root.
  std::vector<std::pair<std::size_t, bool>> stack{{0, false}};
  visited[0] = true;
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (n.leaf) {
      if (n.candidate >= m_ || seen_candidate[n.candidate])
        throw StructureError("leaf labels must be exactly the candidates 1..m");
      seen_candidate[n.candidate] = true;
      leaf_counts_[id] = 1;
      continue;
    }
    if (expanded) {
      std::size_t total = 0;
      for (auto c : n.children) total += leaf_counts_[c];
      leaf_counts_[id] = total;
      continue;
    }
    stack.push_back({id, true});
    for (auto c : n.children) {
      if (c >= nodes_.size() || visited[c]) throw StructureError("node reachable twice or out of range");
      visited[c] = true;
      stack.push_back({c, false});
    }
  }
  for (bool v : visited)
    if (!v) throw StructureError("node unreachable from the root");
}

GSTree GSTree::flat(std::size_t m) {
  if (m == 0) throw StructureError("tree needs at least one candidate");
  if (m == 1) return GSTree({Node{true, 0, {}}});
  std::vector<Node> nodes(1);
  for (std::size_t c = 0; c < m; ++c) {
    nodes[0].children.push_back(nodes.size());
    nodes.push_back(Node{true, c, {}});
  }
  return GSTree(std::move(nodes));
}

GSTree GSTree::balanced(std::size_t m) {
  if (m == 0 || (m & (m - 1)) != 0)
    throw StructureError("balanced tree needs a power-of-two candidate count, got " + std::to_string(m));
  std::vector<Node> nodes;
  std::function<std::size_t(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) {
    const std::size_t id = nodes.size();
    if (hi - lo == 1) {
      nodes.push_back(Node{true, lo, {}});
      return id;
    }
    nodes.push_back(Node{});
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t left = build(lo, mid);
    const std::size_t right = build(mid, hi);
    nodes[id].children = {left, right};
    return id;
  };
  build(0, m);
  return GSTree(std::move(nodes));
}

GSTree GSTree::caterpillar(std::size_t m) {
  if (m == 0) throw StructureError("tree needs at least one candidate");
  if (m == 1) return GSTree({Node{true, 0, {}}});
  std::vector<Node> nodes;
  std::size_t spine = 0;
  nodes.push_back(Node{});
  for (std::size_t j = 0; j + 2 < m; ++j) {
    const std::size_t leaf = nodes.size();
    nodes.push_back(Node{true, j, {}});
    const std::size_t next = nodes.size();
    nodes.push_back(Node{});
    nodes[spine].children = {leaf, next};
    spine = next;
  }
  const std::size_t a = nodes.size();
  nodes.push_back(Node{true, m - 2, {}});
  const std::size_t b = nodes.size();
  nodes.push_back(Node{true, m - 1, {}});
  nodes[spine].children = {a, b};
  return GSTree(std::move(nodes));
}

GSTree GSTree::parse(const std::string& text) {
  std::vector<Node> nodes;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  std::function<std::size_t()> parse_node = [&]() -> std::size_t {
    skip();
    if (pos >= text.size()) throw StructureError("unexpected end of tree description");
    const std::size_t id = nodes.size();
    if (text[pos] == '(') {
      ++pos;
      nodes.push_back(Node{});
      std::vector<std::size_t> children;
      for (;;) {
        skip();
        if (pos >= text.size()) throw StructureError("unbalanced parentheses in tree description");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        children.push_back(parse_node());
      }
      nodes[id].children = std::move(children);
      return id;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw StructureError(std::string("unexpected character '") + text[pos] + "' in tree description");
    std::size_t label = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      label = label * 10 + static_cast<std::size_t>(text[pos++] - '0');
    if (label == 0) throw StructureError("candidate labels are 1-based");
    nodes.push_back(Node{true, label - 1, {}});
    return id;
  };
  parse_node();
  skip();
  if (pos != text.size()) throw StructureError("trailing characters after tree description");
  return GSTree(std::move(nodes));
}

std::string GSTree::to_string() const {
  std::ostringstream out;
  std::function<void(std::size_t)> emit = [&](std::size_t id) {
    const Node& n = nodes_[id];
    if (n.leaf) {
      out << n.candidate + 1;
      return;
    }
    out << '(';
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      if (k) out << ' ';
      emit(n.children[k]);
    }
    out << ')';
  };
  emit(0);
  return out.str();
}

Ranking GSTree::frontier() const {
  std::vector<Candidate> order;
  order.reserve(m_);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (n.leaf) {
      order.push_back(n.candidate);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return Ranking(std::move(order));
}

}  // namespace votemap
