#include "avgindep/tree_enum.hpp"

#include <algorithm>

namespace avgindep {

namespace {

// Level-sequence successor functions for free trees (Wright, Richmond,
// Odlyzko and McKay). A layout is the preorder depth sequence of a rooted
// tree; the generator walks the centre-rooted canonical ones.

// First child subtree of the root (levels shifted up by one) and the rest
// of the tree with the root kept.
void split_tree(const std::vector<int>& layout, std::vector<int>& left,
                std::vector<int>& rest) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.assign(1, 0);
  rest.insert(rest.end(), layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end());
}

// Next rooted level sequence, modifying from position p onwards; false when
// the sequence is exhausted.
bool next_rooted_tree(std::vector<int>& layout, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (std::size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

bool next_rooted_tree(std::vector<int>& layout) {
  std::size_t p = layout.size() - 1;
  while (layout[p] == 1) --p;
  return next_rooted_tree(layout, p);
}

// Moves `layout` forward to the first valid (centre-rooted canonical)
// sequence at or after it; false when none remain.
bool next_free_tree(std::vector<int>& layout) {
  std::vector<int> left, rest;
  for (;;) {
    split_tree(layout, left, rest);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size())
        valid = false;
      else if (left.size() == rest.size() && left > rest)
        valid = false;
    }
    if (valid) return true;

    const std::size_t p = left.size();
    const int old_at_p = layout[p];
    if (!next_rooted_tree(layout, p)) return false;
    if (old_at_p > 2) {
      split_tree(layout, left, rest);
      const int new_left_height = *std::max_element(left.begin(), left.end());
      const auto len = static_cast<std::size_t>(new_left_height) + 1;
      for (std::size_t i = 0; i < len; ++i)
        layout[layout.size() - len + i] = static_cast<int>(i) + 1;
    }
  }
}

}  // namespace

FreeTrees::FreeTrees(int n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder)
    throw RangeError("tree enumeration needs 1 <= n <= 18, got " + std::to_string(n));
}

FreeTrees::iterator::iterator(int n) : n_(n), done_(false) {
  if (n == 1) {
    layout_ = {0};
  } else {
    for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
    if (!next_free_tree(layout_)) {
      done_ = true;
      return;
    }
  }
  load();
}

void FreeTrees::iterator::load() { current_ = tree_from_levels(layout_); }

FreeTrees::iterator& FreeTrees::iterator::operator++() {
  if (done_) return *this;
  if (n_ == 1 || !next_rooted_tree(layout_) || !next_free_tree(layout_)) {
    done_ = true;
    return *this;
  }
  load();
  return *this;
}

std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  for (const Graph& t : FreeTrees(n)) out.push_back(t);
  return out;
}

Graph tree_from_levels(const std::vector<int>& levels) {
  const int k = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level(levels.size() + 1, -1);
  for (int i = 0; i < k; ++i) {
    const int lv = levels[static_cast<std::size_t>(i)];
    if (lv > 0) edges.emplace_back(last_at_level[static_cast<std::size_t>(lv - 1)], i);
    last_at_level[static_cast<std::size_t>(lv)] = i;
  }
  return Graph(k, edges);
}

namespace {

std::string encode_rooted(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (VertexMask m = t.neighbours(v); m != 0; m &= m - 1) {
    const Vertex c = lowest(m);
    if (c != parent) children.push_back(encode_rooted(t, c, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("canonical form needs a tree");
  VertexMask left = tree.present();
  std::array<int, kMaxVertices> deg{};
  for (VertexMask m = left; m != 0; m &= m - 1) deg[lowest(m)] = tree.degree(lowest(m));
  while (popcount(left) > 2) {
    VertexMask leaves = 0;
    for (VertexMask m = left; m != 0; m &= m - 1)
      if (deg[lowest(m)] <= 1) leaves |= bit(lowest(m));
    for (VertexMask m = leaves; m != 0; m &= m - 1)
      for (VertexMask nb = tree.neighbours(lowest(m)) & left & ~leaves; nb != 0; nb &= nb - 1)
        --deg[lowest(nb)];
    left &= ~leaves;
  }
  std::string best;
  for (VertexMask m = left; m != 0; m &= m - 1) {
    std::string enc = encode_rooted(tree, lowest(m), -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

LabelledGraphs::LabelledGraphs(int n) : n_(n) {
  if (n < 1 || n > kMaxLabelledOrder)
    throw RangeError("labelled graph enumeration needs 1 <= n <= 7, got " +
                        std::to_string(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

Graph LabelledGraphs::at(std::uint64_t index) const {
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < pairs_.size(); ++p)
    if (index & (std::uint64_t{1} << p)) edges.push_back(pairs_[p]);
  return Graph(n_, edges);
}

}  // namespace avgindep
