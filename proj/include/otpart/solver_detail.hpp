#pragma once

#include <stdexcept>
#include <vector>

namespace otpart::detail {

template <class T>
struct TransportationResult {
  std::vector<std::vector<long long>> flow;  // sources x targets
  std::vector<T> pot_source;                 // feasible duals: alpha_i = pot_source[i]
  std::vector<T> pot_target;                 // beta_j = pot_target[j]
  T total_cost{};
};

/// Dense successive-shortest-paths with node potentials on the complete
/// bipartite transportation instance. Supplies and demands are positive
/// integers with equal totals; costs are nonnegative. Works over any
/// ordered additive cost type; with Rational costs every comparison is
/// exact, so the optimum and the duals are exact.
///
/// Invariant maintained between augmentations: the reduced cost
/// c[i][j] - pi[i] + pi[S+j] is nonnegative, and zero on every arc
/// carrying flow. At termination alpha_i = pi[i], beta_j = -pi[S+j]
/// satisfy alpha_i + beta_j <= c[i][j] with equality on the support.
template <class T>
TransportationResult<T> solve_transportation(
    const std::vector<long long>& supply, const std::vector<long long>& demand,
    const std::vector<std::vector<T>>& cost) {
  const int ns = static_cast<int>(supply.size());
  const int nt = static_cast<int>(demand.size());
  if (ns == 0 || nt == 0) throw std::invalid_argument("empty transportation instance");
  long long total_supply = 0, total_demand = 0;
  for (long long s : supply) {
    if (s <= 0) throw std::invalid_argument("supplies must be positive");
    total_supply += s;
  }
  for (long long d : demand) {
    if (d <= 0) throw std::invalid_argument("demands must be positive");
    total_demand += d;
  }
  if (total_supply != total_demand)
    throw std::invalid_argument("transportation totals differ");

  const int nodes = ns + nt;
  std::vector<T> pi(nodes, T{});
  std::vector<std::vector<long long>> flow(ns, std::vector<long long>(nt, 0));
  std::vector<long long> rem_supply = supply;
  std::vector<long long> rem_demand = demand;
  long long remaining = total_supply;

  auto clamp = [](T v) { return v < T{} ? T{} : v; };

  std::vector<T> dist(nodes, T{});
  std::vector<char> reached(nodes, 0);
  std::vector<char> settled(nodes, 0);
  std::vector<int> parent(nodes, -1);

  while (remaining > 0) {
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(settled.begin(), settled.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < ns; ++i) {
      if (rem_supply[i] > 0) {
        dist[i] = T{};
        reached[i] = 1;
      }
    }

    // Dense Dijkstra over reduced lengths, run to exhaustion so the
    // capped potential update below stays valid.
    for (;;) {
      int w = -1;
      for (int v = 0; v < nodes; ++v)
        if (reached[v] && !settled[v] && (w < 0 || dist[v] < dist[w])) w = v;
      if (w < 0) break;
      settled[w] = 1;
      if (w < ns) {
        for (int j = 0; j < nt; ++j) {
          const int z = ns + j;
          if (settled[z]) continue;
          T nd = dist[w] + clamp(cost[w][j] - pi[w] + pi[z]);
          if (!reached[z] || nd < dist[z]) {
            dist[z] = nd;
            reached[z] = 1;
            parent[z] = w;
          }
        }
      } else {
        const int j = w - ns;
        for (int i = 0; i < ns; ++i) {
          if (settled[i] || flow[i][j] == 0) continue;
          T nd = dist[w] + clamp(pi[i] - pi[w] - cost[i][j]);
          if (!reached[i] || nd < dist[i]) {
            dist[i] = nd;
            reached[i] = 1;
            parent[i] = w;
          }
        }
      }
    }

    int best = -1;
    for (int j = 0; j < nt; ++j) {
      const int z = ns + j;
      if (rem_demand[j] > 0 && reached[z] && (best < 0 || dist[z] < dist[best]))
        best = z;
    }
    if (best < 0) throw std::logic_error("transportation: no augmenting path");
    const T dstar = dist[best];

    for (int v = 0; v < nodes; ++v) {
      T m = (reached[v] && dist[v] < dstar) ? dist[v] : dstar;
      pi[v] = pi[v] - m;
    }

    // Walk back to the origin source, collect the bottleneck.
    long long bottleneck = rem_demand[best - ns];
    int v = best;
    while (parent[v] >= 0) {
      int u = parent[v];
      if (u < ns) {
        // forward arc u -> v, unbounded capacity
      } else {
        int j = u - ns;
        if (flow[v][j] < bottleneck) bottleneck = flow[v][j];
      }
      v = u;
    }
    if (rem_supply[v] < bottleneck) bottleneck = rem_supply[v];

    int z = best;
    while (parent[z] >= 0) {
      int u = parent[z];
      if (u < ns)
        flow[u][z - ns] += bottleneck;
      else
        flow[z][u - ns] -= bottleneck;
      z = u;
    }
    rem_supply[v] -= bottleneck;
    rem_demand[best - ns] -= bottleneck;
    remaining -= bottleneck;
  }

  TransportationResult<T> out;
  out.flow = std::move(flow);
  out.pot_source.assign(pi.begin(), pi.begin() + ns);
  out.pot_target.resize(nt);
  for (int j = 0; j < nt; ++j) out.pot_target[j] = T{} - pi[ns + j];
  T total{};
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j)
      if (out.flow[i][j] > 0) total = total + cost[i][j] * T(out.flow[i][j]);
  out.total_cost = total;
  return out;
}

}  // namespace otpart::detail
