#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "avgindep/graph.hpp"

namespace avgindep {

inline constexpr int kMaxTreeOrder = 18;
inline constexpr int kMaxLabelledOrder = 7;

/// Every free tree on n vertices exactly once, in a fixed order.
///
/// Trees are produced as canonical level sequences of centre-rooted trees
/// (constant amortised time per tree) and converted to Graph values with
/// vertices numbered in preorder.
class FreeTrees {
 public:
  /// RangeError unless 1 <= n <= 18.
  explicit FreeTrees(int n);

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Graph& operator*() const { return current_; }
    const Graph* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }
    /// Level sequence of the current tree (root at level 0).
    const std::vector<int>& levels() const { return layout_; }

   private:
    friend class FreeTrees;
    explicit iterator(int n);
    void load();

    int n_ = 0;
    bool done_ = true;
    std::vector<int> layout_;
    Graph current_;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  int order() const { return n_; }

 private:
  int n_;
};

inline FreeTrees enumerate_trees(int n) { return FreeTrees(n); }
std::vector<Graph> all_trees(int n);

/// Tree with vertices 0..k-1 from a level sequence (preorder depths).
Graph tree_from_levels(const std::vector<int>& levels);

/// Isomorphism-invariant string for a tree: the parenthesised encoding of
/// the tree rooted at its centre (the smaller of the two encodings for a
/// bicentral tree).
std::string tree_canonical_form(const Graph& tree);

/// All 2^(n(n-1)/2) labelled graphs on n vertices; edge (i, j), i < j, in
/// lexicographic position p corresponds to bit p of the index.
class LabelledGraphs {
 public:
  /// RangeError unless 1 <= n <= 7.
  explicit LabelledGraphs(int n);

  std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
  Graph at(std::uint64_t index) const;
  int order() const { return n_; }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    Graph operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    void operator++(int) { ++index_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }
    std::uint64_t index() const { return index_; }

   private:
    friend class LabelledGraphs;
    iterator(const LabelledGraphs* owner, std::uint64_t index)
        : owner_(owner), index_(index) {}
    const LabelledGraphs* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  int n_;
  std::vector<Edge> pairs_;
};

inline LabelledGraphs enumerate_graphs(int n) { return LabelledGraphs(n); }

}  // namespace avgindep
