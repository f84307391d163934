// Copyright 2026 The ncgkit Authors
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

#include "oracles/oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

Profile from_library(const ncg::StrategyProfile& s) {
  Profile p;
  p.n = s.size();
  p.buys.assign(p.n, std::vector<bool>(p.n, false));
  for (const auto& [u, v] : s.purchase_list()) p.buys[u][v] = true;
  return p;
}

Adjacency adjacency(const Profile& p) {
  Adjacency adj(p.n, std::vector<bool>(p.n, false));
  for (int u = 0; u < p.n; ++u) {
    for (int v = 0; v < p.n; ++v) {
      if (p.buys[u][v]) adj[u][v] = adj[v][u] = true;
    }
  }
  return adj;
}

Distances floyd_warshall(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  Distances d(n, std::vector<long long>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

std::optional<Rational> player_cost(const Profile& p, const Rational& alpha, int u) {
  const auto d = floyd_warshall(adjacency(p));
  long long sum = 0;
  for (int v = 0; v < p.n; ++v) {
    if (d[u][v] >= kInf) return std::nullopt;
    sum += d[u][v];
  }
  long long bought = 0;
  for (int v = 0; v < p.n; ++v) bought += p.buys[u][v] ? 1 : 0;
  return alpha * bought + Rational(sum);
}

std::optional<Rational> social_cost(const Profile& p, const Rational& alpha) {
  Rational total(0);
  for (int u = 0; u < p.n; ++u) {
    auto c = player_cost(p, alpha, u);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

Rational optimum(int n, const Rational& alpha) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::optional<Rational> best;
  for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
    Adjacency adj(n, std::vector<bool>(n, false));
    long long m = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1UL) {
        adj[pairs[i].first][pairs[i].second] = adj[pairs[i].second][pairs[i].first] = true;
        ++m;
      }
    }
    const auto d = floyd_warshall(adj);
    long long sum = 0;
    bool connected = true;
    for (int i = 0; i < n && connected; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][j] >= kInf) {
          connected = false;
          break;
        }
        sum += d[i][j];
      }
    }
    if (!connected) continue;
    const Rational c = alpha * m + Rational(sum);
    if (!best || c < *best) best = c;
  }
  return *best;
}

namespace {

bool less_cost(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// Calls f with p modified so that u's purchases are given by `mask` over the
// other players (bit i stands for the i-th other player).
template <typename F>
void for_each_strategy(const Profile& p, int u, bool only_add, F&& f) {
  std::vector<int> others;
  for (int v = 0; v < p.n; ++v) {
    if (v != u) others.push_back(v);
  }
  for (unsigned long mask = 0; mask < (1UL << others.size()); ++mask) {
    Profile q = p;
    bool keeps_all = true;
    for (std::size_t i = 0; i < others.size(); ++i) {
      const bool buy = (mask >> i) & 1UL;
      if (p.buys[u][others[i]] && !buy) keeps_all = false;
      q.buys[u][others[i]] = buy;
    }
    if (only_add && !keeps_all) continue;
    f(q);
  }
}

bool stable(const Profile& p, const Rational& alpha, bool only_add) {
  for (int u = 0; u < p.n; ++u) {
    const auto current = player_cost(p, alpha, u);
    bool improves = false;
    for_each_strategy(p, u, only_add, [&](const Profile& q) {
      if (less_cost(player_cost(q, alpha, u), current)) improves = true;
    });
    if (improves) return false;
  }
  return true;
}

}  // namespace

bool is_nash(const Profile& p, const Rational& alpha) { return stable(p, alpha, false); }
bool is_buying_nash(const Profile& p, const Rational& alpha) { return stable(p, alpha, true); }

std::optional<Rational> best_cost(const Profile& p, const Rational& alpha, int u) {
  std::optional<Rational> best = player_cost(p, alpha, u);
  for_each_strategy(p, u, false, [&](const Profile& q) {
    const auto c = player_cost(q, alpha, u);
    if (less_cost(c, best)) best = c;
  });
  return best;
}

ASets a_sets(const Adjacency& adj, int v, const std::vector<int>& targets, int u) {
  const int n = static_cast<int>(adj.size());
  const auto d = floyd_warshall(adj);
  ASets out;
  out.a_i.resize(targets.size());
  for (int z = 0; z < n; ++z) {
    if (z == v || d[z][u] >= kInf) continue;
    // Enumerate all shortest z-u paths.
    std::vector<std::vector<int>> paths;
    std::vector<int> path{z};
    std::function<void(int)> walk = [&](int x) {
      if (x == u) {
        paths.push_back(path);
        return;
      }
      for (int y = 0; y < n; ++y) {
        if (adj[x][y] && d[y][u] == d[x][u] - 1) {
          path.push_back(y);
          walk(y);
          path.pop_back();
        }
      }
    };
    walk(z);
    bool all = true;
    std::set<int> preds;
    for (const auto& p : paths) {
      auto it = std::find(p.begin(), p.end(), v);
      if (it == p.end() || it == p.begin()) {
        all = false;
        break;
      }
      const int pred = *(it - 1);
      if (std::find(targets.begin(), targets.end(), pred) == targets.end()) {
        all = false;
        break;
      }
      preds.insert(pred);
    }
    if (!all || paths.empty()) continue;
    out.a.insert(z);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (preds.count(targets[i])) out.a_i[i].insert(z);
    }
  }
  return out;
}

int component_count(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> label(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (adj[x][y] && label[y] < 0) {
          label[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

std::set<int> cut_vertices(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const int base = component_count(adj);
  std::set<int> out;
  for (int v = 0; v < n; ++v) {
    // Deleting v: isolate it and discount its own singleton component.
    Adjacency cut = adj;
    for (int w = 0; w < n; ++w) cut[v][w] = cut[w][v] = false;
    if (component_count(cut) - 1 > base) out.insert(v);
  }
  return out;
}

std::set<std::pair<int, int>> bridges(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const int base = component_count(adj);
  std::set<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      Adjacency cut = adj;
      cut[a][b] = cut[b][a] = false;
      if (component_count(cut) > base) out.emplace(a, b);
    }
  }
  return out;
}

int independence_number(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    bool independent = true;
    for (int a = 0; a < n && independent; ++a) {
      if (!((mask >> a) & 1UL)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (((mask >> b) & 1UL) && adj[a][b]) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = std::max(best, __builtin_popcountl(mask));
  }
  return best;
}

}  // namespace oracle
