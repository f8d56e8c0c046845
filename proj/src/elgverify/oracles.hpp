#pragma once

// Independent reference computations used to cross-check the closed-form
// implementations. Each oracle takes its own route to the quantity under
// test: curve crossings are counted on the flat square torus, the distance
// supremum is taken over a sampled slope circle, and the glued-space metric
// is recomputed as shortest paths on an anchor graph.

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "elg/foliation.hpp"
#include "elg/rational.hpp"
#include "elg/slope_search.hpp"
#include "elg/teichmuller.hpp"
#include "elg/walsh.hpp"

namespace elg::oracle {

/// Counts transverse crossings of the straight-line representatives of two
/// integer curve classes on the unit square torus. Straight representatives
/// are in minimal position, so this is the geometric intersection number,
/// obtained without the determinant shortcut: for every deck translate
/// (m, n) the 2x2 linear system is solved exactly and solutions are counted
/// in the fundamental domain of parameters.
inline long long lattice_crossings(long long p1, long long q1, long long p2, long long q2) {
  long long det = p1 * q2 - q1 * p2;
  if (det == 0) return 0;  // parallel leaves never cross transversally
  long long bound_m = std::abs(p1) + std::abs(p2) + 1;
  long long bound_n = std::abs(q1) + std::abs(q2) + 1;
  auto in_unit = [](long long num, long long den) {
    // is num/den in [0, 1)?
    return den > 0 ? (num >= 0 && num < den) : (num <= 0 && num > den);
  };
  long long count = 0;
  for (long long m = -bound_m; m <= bound_m; ++m) {
    for (long long n = -bound_n; n <= bound_n; ++n) {
      // t p1 - s p2 = m, t q1 - s q2 = n  =>  t = (n p2 - m q2)/det, s = (n p1 - m q1)/det
      long long tn = n * p2 - m * q2;
      long long sn = n * p1 - m * q1;
      if (in_unit(tn, det) && in_unit(sn, det)) ++count;
    }
  }
  return count;
}

/// Distance by direct maximization of the extremal-length ratio over the
/// slope circle; checks the pencil-eigenvalue route.
inline double grid_sup_distance(const TeichPoint& t1, const TeichPoint& t2, int samples) {
  auto ratio = [&](double theta) {
    MF f = slope_direction(theta);
    return extremal_length(t1, f) / extremal_length(t2, f);
  };
  return 0.5 * std::log(maximize_on_slopes(ratio, samples).value);
}

/// Shortest paths in the line-with-frames space recomputed on an explicit
/// anchor graph with exact rational weights: line anchors at every frame
/// corner, arc anchors at frame corners, and the two query points spliced
/// in. Dijkstra over this graph is exhaustive over routings, so agreement
/// certifies the closed-form case analysis.
class WalshGraph {
public:
  Rational distance(const WalshPointQ& a, const WalshPointQ& b) {
    adj_.clear();
    line_nodes_.clear();
    frame_nodes_.clear();

    long long reach = 2;
    auto absorb = [&reach](const WalshPointQ& p) {
      if (p.on_line) {
        long long c = (std::abs(p.line_pos.num()) + p.line_pos.den() - 1) / p.line_pos.den();
        reach = std::max(reach, c + 2);
      } else {
        reach = std::max(reach, p.n + 2);
      }
    };
    absorb(a);
    absorb(b);

    std::set<Rational> line_positions;
    for (long long n = 1; n <= reach; ++n) {
      line_positions.insert(Rational(-n));
      line_positions.insert(Rational(n));
    }
    line_positions.insert(Rational(0));
    if (a.on_line) line_positions.insert(a.line_pos);
    if (b.on_line) line_positions.insert(b.line_pos);

    for (const Rational& s : line_positions) line_nodes_[s] = new_node();
    std::vector<Rational> sorted(line_positions.begin(), line_positions.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      add_edge(line_nodes_[sorted[i - 1]], line_nodes_[sorted[i]],
               sorted[i] - sorted[i - 1]);

    for (long long n = 1; n <= reach; ++n) {
      std::set<Rational> arcs{Rational(0), Rational(n), Rational(3 * n), Rational(4 * n)};
      if (!a.on_line && a.n == n) arcs.insert(a.arc);
      if (!b.on_line && b.n == n) arcs.insert(b.arc);
      std::vector<Rational> order(arcs.begin(), arcs.end());
      std::vector<int> ids(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] == Rational(0))
          ids[i] = line_nodes_.at(Rational(-n));
        else if (order[i] == Rational(4 * n))
          ids[i] = line_nodes_.at(Rational(n));
        else
          ids[i] = new_node();
        frame_nodes_[{n, order[i]}] = ids[i];
      }
      for (std::size_t i = 1; i < order.size(); ++i)
        add_edge(ids[i - 1], ids[i], order[i] - order[i - 1]);
    }

    int src = locate(a), dst = locate(b);
    return dijkstra(src, dst);
  }

private:
  int new_node() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  void add_edge(int u, int v, const Rational& w) {
    adj_[u].push_back({v, w});
    adj_[v].push_back({u, w});
  }
  int locate(const WalshPointQ& p) const {
    return p.on_line ? line_nodes_.at(p.line_pos) : frame_nodes_.at({p.n, p.arc});
  }

  Rational dijkstra(int src, int dst) const {
    const std::size_t n = adj_.size();
    std::vector<Rational> dist(n);
    std::vector<bool> reached(n, false), done(n, false);
    dist[src] = Rational(0);
    reached[src] = true;
    for (;;) {
      int u = -1;
      for (std::size_t i = 0; i < n; ++i)
        if (reached[i] && !done[i] && (u < 0 || dist[i] < dist[u])) u = static_cast<int>(i);
      if (u < 0) break;
      if (u == dst) return dist[u];
      done[u] = true;
      for (const auto& [v, w] : adj_[u]) {
        Rational cand = dist[u] + w;
        if (!reached[v] || cand < dist[v]) {
          dist[v] = cand;
          reached[v] = true;
        }
      }
    }
    return dist[dst];
  }

  std::vector<std::vector<std::pair<int, Rational>>> adj_;
  std::map<Rational, int> line_nodes_;
  std::map<std::pair<long long, Rational>, int> frame_nodes_;
};

inline Rational walsh_dijkstra(const WalshPointQ& a, const WalshPointQ& b) {
  WalshGraph g;
  return g.distance(a, b);
}

}  // namespace elg::oracle
