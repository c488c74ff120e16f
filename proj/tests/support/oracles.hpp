// Copyright 2026 The usg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Independent reference implementations for tests. Sets are sorted
// vectors, graphs are adjacency matrices and every search is plain
// enumeration, so nothing here shares code with the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

namespace usg::testing {

using Set = std::vector<int>;

inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<Set> combinations(int n, int k) {
  std::vector<Set> out;
  Set cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int e = next; e <= n; ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline int intersection_count(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return static_cast<int>(out.size());
}

struct BruteGraph {
  int n = 0, k = 0, t = 0;
  std::vector<Set> verts;
  std::vector<std::vector<char>> adj;

  int order() const { return static_cast<int>(verts.size()); }
  int edges() const {
    int m = 0;
    for (int i = 0; i < order(); ++i)
      for (int j = i + 1; j < order(); ++j) m += adj[i][j];
    return m;
  }
};

inline BruteGraph brute_graph(int n, int k, int t) {
  BruteGraph g{n, k, t, combinations(n, k), {}};
  const int v = g.order();
  g.adj.assign(v, std::vector<char>(v, 0));
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      g.adj[i][j] = i != j && intersection_count(g.verts[i], g.verts[j]) == t;
    }
  }
  return g;
}

inline std::vector<std::vector<int>> brute_components(
    const BruteGraph& g, const std::vector<char>& removed) {
  std::vector<int> label(g.order(), -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.order(); ++s) {
    if (removed[s] || label[s] >= 0) continue;
    std::vector<int> comp;
    std::vector<int> todo{s};
    label[s] = static_cast<int>(comps.size());
    while (!todo.empty()) {
      const int u = todo.back();
      todo.pop_back();
      comp.push_back(u);
      for (int w = 0; w < g.order(); ++w) {
        if (g.adj[u][w] && !removed[w] && label[w] < 0) {
          label[w] = label[s];
          todo.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

// Calls fn(chosen) for every size-s subset of `pool`; stops when fn is false.
inline bool for_each_choice(const std::vector<int>& pool, int s,
                            const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t next) {
    if (static_cast<int>(cur.size()) == s) return fn(cur);
    for (std::size_t i = next; i < pool.size(); ++i) {
      if (pool.size() - i < static_cast<std::size_t>(s) - cur.size()) break;
      cur.push_back(pool[i]);
      if (!rec(i + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(0);
}

inline std::vector<char> mask_of(const BruteGraph& g, const std::vector<int>& s) {
  std::vector<char> m(g.order(), 0);
  for (int v : s) m[v] = 1;
  return m;
}

// Smallest vertex set avoiding s and t that separates them.
inline int brute_local_connectivity(const BruteGraph& g, int s, int t) {
  std::vector<int> pool;
  for (int v = 0; v < g.order(); ++v)
    if (v != s && v != t) pool.push_back(v);
  for (int size = 0; size <= static_cast<int>(pool.size()); ++size) {
    bool found = false;
    for_each_choice(pool, size, [&](const std::vector<int>& cut) {
      const auto comps = brute_components(g, mask_of(g, cut));
      for (const auto& c : comps) {
        const bool hs = std::binary_search(c.begin(), c.end(), s);
        const bool ht = std::binary_search(c.begin(), c.end(), t);
        if (hs != ht) found = true;
      }
      return !found;
    });
    if (found) return size;
  }
  return -1;
}

// κ by enumeration; complete graphs give |V|-1.
inline int brute_connectivity(const BruteGraph& g) {
  std::vector<int> pool(g.order());
  for (int v = 0; v < g.order(); ++v) pool[v] = v;
  for (int size = 0; size + 2 <= g.order(); ++size) {
    bool found = false;
    for_each_choice(pool, size, [&](const std::vector<int>& cut) {
      found = brute_components(g, mask_of(g, cut)).size() >= 2;
      return !found;
    });
    if (found) return size;
  }
  return g.order() - 1;
}

struct BruteSuper {
  std::optional<int> size;            // empty: no super vertex-cut
  std::vector<std::vector<int>> all;  // every minimum super cut
};

inline bool brute_is_super(const BruteGraph& g, const std::vector<int>& cut) {
  const auto comps = brute_components(g, mask_of(g, cut));
  if (comps.size() < 2) return false;
  for (const auto& c : comps)
    if (c.size() < 2) return false;
  return true;
}

inline BruteSuper brute_super_connectivity(const BruteGraph& g,
                                           bool collect_all = false) {
  std::vector<int> pool(g.order());
  for (int v = 0; v < g.order(); ++v) pool[v] = v;
  BruteSuper out;
  for (int size = 0; size + 4 <= g.order(); ++size) {
    for_each_choice(pool, size, [&](const std::vector<int>& cut) {
      if (brute_is_super(g, cut)) {
        out.size = size;
        out.all.push_back(cut);
        return collect_all;
      }
      return true;
    });
    if (out.size) return out;
  }
  return out;
}

}  // namespace usg::testing
