#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gltm/rng.hpp"

namespace gltm {

using NodeId = std::size_t;

// Undirected edge stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Natural label order: all-digit labels compare numerically and sort before
// the rest, everything else compares lexicographically. Gives "2" < "10".
bool label_less(std::string_view a, std::string_view b);

// Unrooted leaf-labelled tree with no degree-2 inner nodes.
//
// Construction canonicalizes: leaves get ids 0..m-1 in label_less order and
// inner nodes are numbered m.. in preorder from leaf 0, children ordered by
// the smallest leaf id below them. Two trees are isomorphic (as leaf-labelled
// trees) exactly when they compare equal.
class Tree {
 public:
  // `node_labels[v]` is the label of raw node v, empty for unlabelled nodes.
  // Unlabelled nodes of degree 1 are pruned and unlabelled nodes of degree 2
  // are spliced out. Throws DomainError if the graph is not a tree, labels
  // repeat, or a labelled node is not a leaf.
  Tree(std::vector<std::string> node_labels,
       const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::size_t leaf_count() const { return labels_.size(); }
  std::size_t node_count() const { return adjacency_.size(); }
  bool is_leaf(NodeId v) const { return v < labels_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId leaf) const;
  NodeId leaf_id(std::string_view label) const;  // throws DomainError
  std::optional<NodeId> find_leaf(std::string_view label) const;

  const std::vector<NodeId>& neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  // Rooted view from leaf 0, used for traversal order and serialization.
  std::optional<NodeId> parent(NodeId v) const;
  const std::vector<NodeId>& children(NodeId v) const;
  NodeId subtree_min_leaf(NodeId v) const { return subtree_min_.at(v); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_index(NodeId a, NodeId b) const;  // throws if not adjacent
  std::vector<std::size_t> internal_edges() const;
  // Leaves on the side of edge `e` away from leaf 0.
  std::vector<bool> leaf_split(std::size_t e) const;

  // Edge indices along the unique path, in order from u to v.
  std::vector<std::size_t> path_edges(NodeId u, NodeId v) const;

  bool is_binary() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  void check_node(NodeId v) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::optional<NodeId>> parent_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::size_t> depth_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> subtree_min_;
};

// Split ij|kl of four distinct leaf labels. Canonical form sorts each pair
// with label_less and puts the pair holding the smaller label first, so
// Quartet(i,j,k,l) == Quartet(l,k,j,i).
class Quartet {
 public:
  Quartet(std::string i, std::string j, std::string k, std::string l);

  // Accepts "12|34" (single-character labels) or "a,b|c,d".
  static Quartet parse(std::string_view text);

  const std::array<std::string, 4>& leaves() const { return leaves_; }
  std::pair<const std::string&, const std::string&> left() const {
    return {leaves_[0], leaves_[1]};
  }
  std::pair<const std::string&, const std::string&> right() const {
    return {leaves_[2], leaves_[3]};
  }

  // Inverse of parse: "ij|kl" when every label is one character, else "i,j|k,l".
  std::string to_string() const;

  friend bool operator==(const Quartet&, const Quartet&) = default;
  friend bool operator<(const Quartet& a, const Quartet& b);

 private:
  std::array<std::string, 4> leaves_;
};

enum class QuartetSetKind { determining, testing, arbitrary };

class QuartetSet {
 public:
  QuartetSet() = default;
  // Throws DomainError on duplicate quartets.
  explicit QuartetSet(std::vector<Quartet> quartets,
                      QuartetSetKind kind = QuartetSetKind::arbitrary);

  // Appends unless already present; returns whether it was added.
  bool insert(Quartet q);
  bool contains(const Quartet& q) const;

  std::size_t size() const { return quartets_.size(); }
  bool empty() const { return quartets_.empty(); }
  const Quartet& operator[](std::size_t i) const { return quartets_[i]; }
  auto begin() const { return quartets_.begin(); }
  auto end() const { return quartets_.end(); }
  const std::vector<Quartet>& quartets() const { return quartets_; }
  QuartetSetKind kind() const { return kind_; }

 private:
  std::vector<Quartet> quartets_;
  QuartetSetKind kind_ = QuartetSetKind::arbitrary;
};

// ph(i,j) and ph(k,l) share no edge.
bool displays(const Tree& t, const Quartet& q);

// Every quartet of t, scanning 4-subsets in leaf order.
QuartetSet quartets_of(const Tree& t);

// One quartet per internal edge built from the closest leaf in each of the
// four hanging subtrees. Size m - 3; determines t. Binary trees only.
QuartetSet minimal_determining_quartets(const Tree& t);

// Greedy algebraically independent subset of quartets_of(t) of size
// C(m,2) - (2m - 3), selected by rank increase of the tetrad Jacobian at a
// fixed generic model point.
QuartetSet testing_quartets(const Tree& t);

// (2m-5)!! for m >= 3.
std::size_t binary_tree_count(std::size_t m);

// All leaf-labelled binary trees on `labels` by stepwise leaf insertion.
std::vector<Tree> enumerate_binary_trees(const std::vector<std::string>& labels,
                                         std::size_t cap = 10);

// Uniform random binary topology (random edge chosen at each insertion).
Tree random_binary_tree(const std::vector<std::string>& labels, Rng& rng);

// Labels "1".."m".
std::vector<std::string> numbered_labels(std::size_t m);

}  // namespace gltm
