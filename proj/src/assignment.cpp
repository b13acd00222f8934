#include "mwvote/assignment.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace mwvote {
namespace {

// Successive shortest paths with edge-list Bellman-Ford, for the small graphs here.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes, std::size_t edge_hint = 0) : nodes_(static_cast<std::size_t>(nodes)) {
    edges_.reserve(2 * edge_hint);
  }

  int add_edge(int from, int to, int cap, Score cost) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({from, to, cap, cost});
    edges_.push_back({to, from, 0, -cost});
    return id;
  }

  int flow_on(int edge) const { return edges_[static_cast<std::size_t>(edge ^ 1)].cap; }

  /// Pushes up to `limit` units from s to t; returns units pushed.
  int run(int s, int t, int limit) {
    constexpr Score kInf = std::numeric_limits<Score>::max() / 4;
    int pushed = 0;
    std::vector<Score> dist(nodes_);
    std::vector<int> via(nodes_);
    while (pushed < limit) {
      std::fill(dist.begin(), dist.end(), kInf);
      dist[static_cast<std::size_t>(s)] = 0;
      for (std::size_t round = 0; round < nodes_; ++round) {
        bool changed = false;
        for (std::size_t id = 0; id < edges_.size(); ++id) {
          const Edge& ed = edges_[id];
          if (ed.cap <= 0) continue;
          const Score du = dist[static_cast<std::size_t>(ed.from)];
          if (du == kInf || du + ed.cost >= dist[static_cast<std::size_t>(ed.to)]) continue;
          dist[static_cast<std::size_t>(ed.to)] = du + ed.cost;
          via[static_cast<std::size_t>(ed.to)] = static_cast<int>(id);
          changed = true;
        }
        if (!changed) break;
      }
      if (dist[static_cast<std::size_t>(t)] == kInf) break;
      for (int v = t; v != s;) {
        const int id = via[static_cast<std::size_t>(v)];
        edges_[static_cast<std::size_t>(id)].cap -= 1;
        edges_[static_cast<std::size_t>(id ^ 1)].cap += 1;
        v = edges_[static_cast<std::size_t>(id)].from;
      }
      ++pushed;
    }
    return pushed;
  }

 private:
  struct Edge {
    int from;
    int to;
    int cap;
    Score cost;
  };
  std::size_t nodes_;
  std::vector<Edge> edges_;
};

// Assignment of rows to columns using only entries >= threshold, respecting
// the floor/ceil window, maximizing the total of the used entries. Empty when
// infeasible.
std::vector<int> balanced_flow(std::span<const Score> sat, int n, int k, Score threshold) {
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  Score total = 1;
  for (Score s : sat) total += s;
  const Score big = total;
  const int src = n + k;
  const int sink = n + k + 1;
  MinCostFlow g(n + k + 2, static_cast<std::size_t>(n) * (k + 1) + 2 * static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) g.add_edge(src, v, 1, 0);
  std::vector<int> arc(static_cast<std::size_t>(n) * k, -1);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < k; ++j) {
      const Score s = sat[static_cast<std::size_t>(v) * k + j];
      if (s >= threshold) arc[static_cast<std::size_t>(v) * k + j] = g.add_edge(v, n + j, 1, -s);
    }
  std::vector<int> mandatory(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    mandatory[static_cast<std::size_t>(j)] = g.add_edge(n + j, sink, lo, -big);
    if (hi > lo) g.add_edge(n + j, sink, hi - lo, 0);
  }
  if (g.run(src, sink, n) < n) return {};
  for (int j = 0; j < k; ++j)
    if (g.flow_on(mandatory[static_cast<std::size_t>(j)]) < lo) return {};
  std::vector<int> column(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < k; ++j) {
      const int id = arc[static_cast<std::size_t>(v) * k + j];
      if (id >= 0 && g.flow_on(id) > 0) column[static_cast<std::size_t>(v)] = j;
    }
  return column;
}

// Feasibility of the window using only entries >= threshold, by augmenting
// paths: columns are first filled to floor(n/k), then allowed up to
// ceil(n/k). Augmenting never lowers the flow on a column-to-sink arc, so the
// first phase's lower bounds survive the second. Empty when infeasible.
std::vector<int> threshold_assignment(std::span<const Score> sat, int n, int k, Score threshold) {
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  std::vector<int> column(static_cast<std::size_t>(n), -1);
  std::vector<int> load(static_cast<std::size_t>(k), 0);
  std::vector<char> seen_col(static_cast<std::size_t>(k));
  int cap = lo;
  // Depth-first search from column j for a way to free one unit of it, or
  // from an unassigned voter, moving voters between columns.
  std::function<bool(int)> place = [&](int v) -> bool {
    for (int j = 0; j < k; ++j) {
      if (sat[static_cast<std::size_t>(v) * k + j] < threshold || seen_col[static_cast<std::size_t>(j)]) continue;
      seen_col[static_cast<std::size_t>(j)] = 1;
      if (load[static_cast<std::size_t>(j)] < cap) {
        ++load[static_cast<std::size_t>(j)];
        column[static_cast<std::size_t>(v)] = j;
        return true;
      }
      for (int u = 0; u < n; ++u) {
        if (column[static_cast<std::size_t>(u)] != j) continue;
        column[static_cast<std::size_t>(u)] = -1;
        --load[static_cast<std::size_t>(j)];
        if (place(u)) {
          ++load[static_cast<std::size_t>(j)];
          column[static_cast<std::size_t>(v)] = j;
          return true;
        }
        ++load[static_cast<std::size_t>(j)];
        column[static_cast<std::size_t>(u)] = j;
      }
    }
    return false;
  };
  int placed = 0;
  for (const int target : {k * lo, n}) {
    for (int v = 0; v < n && placed < target; ++v) {
      if (column[static_cast<std::size_t>(v)] >= 0) continue;
      std::fill(seen_col.begin(), seen_col.end(), 0);
      if (place(v)) ++placed;
    }
    if (placed < target) return {};
    cap = hi;
  }
  return column;
}

}  // namespace

Committee Assignment::image() const {
  std::uint64_t mask = 0;
  for (CandidateId c : rep) mask |= std::uint64_t{1} << c;
  return Committee::from_mask(mask);
}

std::vector<int> Assignment::load(int m) const {
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (CandidateId c : rep) ++out[static_cast<std::size_t>(c)];
  return out;
}

Score assignment_value(const Election& e, const Assignment& a, const SatisfactionFunction& alpha,
                       Aggregation mode) {
  if (static_cast<int>(a.rep.size()) != e.num_voters())
    throw DomainError("assignment must cover every voter");
  Score total = 0;
  Score worst = std::numeric_limits<Score>::max();
  for (int v = 0; v < e.num_voters(); ++v) {
    const CandidateId c = a.rep[static_cast<std::size_t>(v)];
    if (c < 0 || c >= e.num_candidates()) throw DomainError("assignment names an unknown candidate");
    const Score s = alpha(e.position(v, c));
    total += s;
    worst = std::min(worst, s);
  }
  return mode == Aggregation::Utilitarian ? total : worst;
}

AssignmentResult cc_assignment(const Election& e, const Committee& w, const SatisfactionFunction& alpha,
                               Aggregation mode) {
  if (w.empty()) throw DomainError("committee must be non-empty");
  if (alpha.size() != e.num_candidates()) throw DomainError("satisfaction table length must equal m");
  const auto members = w.members();
  if (members.back() >= e.num_candidates()) throw DomainError("committee member is not a candidate");
  AssignmentResult out;
  out.assignment.rep.resize(static_cast<std::size_t>(e.num_voters()));
  for (int v = 0; v < e.num_voters(); ++v) {
    CandidateId best = members.front();
    for (CandidateId c : members)
      if (e.position(v, c) < e.position(v, best)) best = c;
    out.assignment.rep[static_cast<std::size_t>(v)] = best;
  }
  out.value = assignment_value(e, out.assignment, alpha, mode);
  return out;
}

BalancedSolution solve_balanced_assignment(std::span<const Score> sat, int n, int k, Aggregation mode) {
  if (n < 1 || k < 1) throw DomainError("balanced assignment needs n >= 1 and k >= 1");
  if (k > n) throw DomainError("balanced assignment is infeasible when k > n");
  if (sat.size() != static_cast<std::size_t>(n) * k) throw DomainError("satisfaction matrix has the wrong size");

  BalancedSolution out;
  if (mode == Aggregation::Utilitarian) {
    out.column = balanced_flow(sat, n, k, std::numeric_limits<Score>::min());
  } else {
    std::vector<Score> values(sat.begin(), sat.end());
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    // Feasibility only shrinks as the threshold rises; find the largest feasible value.
    std::size_t lo = 0;
    std::size_t hi = values.size() - 1;
    std::vector<int> best = threshold_assignment(sat, n, k, values[hi]);
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      std::vector<int> col = threshold_assignment(sat, n, k, values[mid]);
      if (col.empty()) {
        lo = mid + 1;
      } else {
        best = std::move(col);
        hi = mid;
      }
    }
    out.column = std::move(best);
  }
  if (out.column.empty()) throw DomainError("no balanced assignment exists");
  Score total = 0;
  Score worst = std::numeric_limits<Score>::max();
  for (int v = 0; v < n; ++v) {
    const Score s = sat[static_cast<std::size_t>(v) * k + out.column[static_cast<std::size_t>(v)]];
    total += s;
    worst = std::min(worst, s);
  }
  out.value = mode == Aggregation::Utilitarian ? total : worst;
  return out;
}

AssignmentResult monroe_optimal_assignment(const Election& e, const Committee& w,
                                           const SatisfactionFunction& alpha, Aggregation mode) {
  if (w.empty()) throw DomainError("committee must be non-empty");
  if (alpha.size() != e.num_candidates()) throw DomainError("satisfaction table length must equal m");
  const auto members = w.members();
  if (members.back() >= e.num_candidates()) throw DomainError("committee member is not a candidate");
  const int n = e.num_voters();
  const int k = static_cast<int>(members.size());
  if (k > n) throw DomainError("Monroe assignment needs k <= n");
  std::vector<Score> sat(static_cast<std::size_t>(n) * k);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < k; ++j)
      sat[static_cast<std::size_t>(v) * k + j] = alpha(e.position(v, members[static_cast<std::size_t>(j)]));
  const BalancedSolution sol = solve_balanced_assignment(sat, n, k, mode);
  AssignmentResult out;
  out.value = sol.value;
  out.assignment.rep.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    out.assignment.rep[static_cast<std::size_t>(v)] = members[static_cast<std::size_t>(sol.column[static_cast<std::size_t>(v)])];
  return out;
}

}  // namespace mwvote
