#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace autf::detail {

// Explicit node structure of a tree given by leaf depths. Node 0 is the root.
struct Nodes {
  std::vector<int> parent;
  std::vector<char> is_left;
  std::vector<std::uint16_t> depth;
  std::vector<std::uint32_t> first_leaf;
  std::vector<int> leaf_node;

  explicit Nodes(const std::vector<std::uint16_t>& d) {
    std::size_t n = d.size();
    parent.reserve(2 * n);
    leaf_node.resize(n);
    add(-1, false, 0, 0);
    if (n == 1) {
      leaf_node[0] = 0;
      return;
    }
    // Open internal nodes with how many children they already have.
    std::vector<std::pair<int, int>> open{{0, 0}};
    for (std::size_t li = 0; li < n; ++li) {
      for (;;) {
        auto& [top, filled] = open.back();
        int child_depth = depth[top] + 1;
        bool left = filled == 0;
        ++filled;
        int id = add(top, left, child_depth, static_cast<std::uint32_t>(li));
        if (child_depth == d[li]) {
          leaf_node[li] = id;
          while (!open.empty() && open.back().second == 2) open.pop_back();
          break;
        }
        open.emplace_back(id, 0);
      }
    }
  }

  int add(int p, bool left, int dep, std::uint32_t fl) {
    parent.push_back(p);
    is_left.push_back(left);
    depth.push_back(static_cast<std::uint16_t>(dep));
    first_leaf.push_back(fl);
    return static_cast<int>(parent.size()) - 1;
  }
};

}  // namespace autf::detail
