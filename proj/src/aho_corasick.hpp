#pragma once

#include <cstddef>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

namespace sandhi {

// Multi-pattern matcher over code points. Reports (end position, pattern id) for every occurrence.
class AhoCorasick {
 public:
  explicit AhoCorasick(const std::vector<std::u32string>& patterns) {
    nodes_.emplace_back();
    for (std::size_t id = 0; id < patterns.size(); ++id) {
      int cur = 0;
      for (char32_t c : patterns[id]) {
        auto it = nodes_[cur].next.find(c);
        if (it == nodes_[cur].next.end()) {
          nodes_.emplace_back();
          int n = static_cast<int>(nodes_.size()) - 1;
          nodes_[cur].next.emplace(c, n);
          cur = n;
        } else {
          cur = it->second;
        }
      }
      nodes_[cur].out.push_back(id);
    }
    std::queue<int> q;
    for (auto& [c, n] : nodes_[0].next) {
      nodes_[n].fail = 0;
      q.push(n);
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto& [c, n] : nodes_[v].next) {
        int f = nodes_[v].fail;
        while (f && !nodes_[f].next.count(c)) f = nodes_[f].fail;
        auto it = nodes_[f].next.find(c);
        nodes_[n].fail = (it != nodes_[f].next.end() && it->second != n) ? it->second : 0;
        nodes_[n].dict = nodes_[nodes_[n].fail].out.empty() ? nodes_[nodes_[n].fail].dict : nodes_[n].fail;
        q.push(n);
      }
    }
  }

  template <class F>
  void scan(std::u32string_view text, F on_match) const {
    int cur = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char32_t c = text[i];
      while (cur && !nodes_[cur].next.count(c)) cur = nodes_[cur].fail;
      auto it = nodes_[cur].next.find(c);
      cur = it == nodes_[cur].next.end() ? 0 : it->second;
      for (int n = cur; n; n = nodes_[n].dict)
        for (std::size_t id : nodes_[n].out) on_match(i + 1, id);
    }
  }

 private:
  struct Node {
    std::unordered_map<char32_t, int> next;
    int fail = 0;
    int dict = 0;  // nearest suffix node that ends a pattern
    std::vector<std::size_t> out;
  };
  std::vector<Node> nodes_;
};

}  // namespace sandhi
