#pragma once

#include "votemap/ranking.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace votemap {

// Rooted ordered tree whose leaves are the candidates 0..m-1. Internal nodes
// have at least two children. Node 0 is the root.
class GSTree {
 public:
  struct Node {
    bool leaf = false;
    Candidate candidate = 0;         // leaves only
    std::vector<std::size_t> children;  // internal nodes only, left to right
  };

  // Throws StructureError unless the nodes form a valid tree with leaf set
  // exactly {0..m-1}.
  explicit GSTree(std::vector<Node> nodes);

  static GSTree flat(std::size_t m);
  // m must be a power of two.
  static GSTree balanced(std::size_t m);
  // CP(c1..cm): x_j has c_j on the left and x_{j+1} on the right.
  static GSTree caterpillar(std::size_t m);

  // Nested parentheses with 1-based candidate labels, e.g. "((1 2) (3 4))".
  static GSTree parse(const std::string& text);
  std::string to_string() const;

  std::size_t candidates() const noexcept { return m_; }
  std::size_t internal_nodes() const noexcept { return nodes_.size() - m_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& node(std::size_t id) const { return nodes_[id]; }
  std::size_t leaf_count(std::size_t id) const { return leaf_counts_[id]; }

  Ranking frontier() const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::size_t> leaf_counts_;
  std::size_t m_ = 0;
};

}  // namespace votemap
