#include "coincide/relation.hpp"

#include "coincide/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace coincide {

PointSet make_point_set(std::vector<PointId> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

FiniteRelation::FiniteRelation(std::size_t ground_size, std::span<const Edge> edges)
    : FiniteRelation(AllowEmpty{}, ground_size, std::vector<Edge>(edges.begin(), edges.end())) {
  if (edges_.empty())
    throw InputError("relation must contain at least one edge");
}

FiniteRelation::FiniteRelation(AllowEmpty, std::size_t ground_size, std::vector<Edge> edges)
    : n_(ground_size), edges_(std::move(edges)) {
  if (n_ == 0)
    throw InputError("relation ground set must be nonempty");
  for (const auto& [x, y] : edges_) {
    if (x >= n_ || y >= n_)
      throw InputError("relation edge (" + std::to_string(x) + "," + std::to_string(y) +
                       ") out of range for ground set of size " + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  matrix_.assign(n_ * n_, 0);
  succ_.resize(n_);
  for (const auto& [x, y] : edges_) {
    matrix_[x * n_ + y] = 1;
    succ_[x].push_back(y); // edges_ sorted, so successor lists come out sorted
  }
}

std::optional<PointId> Restriction::local_index(PointId x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x)
    return std::nullopt;
  return static_cast<PointId>(it - members.begin());
}

FiniteRelation inverse(const FiniteRelation& r) {
  std::vector<Edge> out;
  out.reserve(r.edges().size());
  for (const auto& [x, y] : r.edges())
    out.emplace_back(y, x);
  return FiniteRelation(FiniteRelation::AllowEmpty{}, r.ground_size(), std::move(out));
}

FiniteRelation symmetric_closure(const FiniteRelation& r) {
  std::vector<Edge> out = r.edges();
  for (const auto& [x, y] : r.edges())
    out.emplace_back(y, x);
  return FiniteRelation(FiniteRelation::AllowEmpty{}, r.ground_size(), std::move(out));
}

Restriction restrict(const FiniteRelation& r, std::span<const PointId> e) {
  if (e.empty())
    throw DomainError("empty restriction domain");
  PointSet members = make_point_set({e.begin(), e.end()});
  if (members.back() >= r.ground_size())
    throw DomainError("restriction member " + std::to_string(members.back()) + " out of range");

  std::vector<Edge> local;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (r.contains(members[i], members[j]))
        local.emplace_back(i, j);
  FiniteRelation rel(FiniteRelation::AllowEmpty{}, members.size(), std::move(local));
  return Restriction{std::move(rel), std::move(members)};
}

bool comparative(const FiniteRelation& r, PointId x, PointId y) {
  return r.contains(x, y) || r.contains(y, x);
}

RelationClass classify(const FiniteRelation& r) {
  const std::size_t n = r.ground_size();
  RelationClass c;
  c.reflexive = true;
  c.irreflexive = true;
  for (PointId x = 0; x < n; ++x) {
    if (r.contains(x, x))
      c.irreflexive = false;
    else
      c.reflexive = false;
  }

  c.symmetric = true;
  c.antisymmetric = true;
  for (const auto& [x, y] : r.edges()) {
    if (!r.contains(y, x))
      c.symmetric = false;
    else if (x != y)
      c.antisymmetric = false;
  }

  c.transitive = true;
  for (const auto& [x, y] : r.edges()) {
    for (PointId z : r.successors(y)) {
      if (!r.contains(x, z)) {
        c.transitive = false;
        break;
      }
    }
    if (!c.transitive)
      break;
  }

  c.complete = true;
  c.weakly_complete = true;
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (comparative(r, x, y))
        continue;
      c.complete = false;
      if (x != y)
        c.weakly_complete = false;
    }
  }

  c.preorder = c.reflexive && c.transitive;
  c.partial_order = c.preorder && c.antisymmetric;
  c.equivalence = c.preorder && c.symmetric;
  c.tolerance = c.reflexive && c.symmetric;
  c.strict_order = c.irreflexive && c.transitive;
  c.near_order = c.antisymmetric && c.transitive;
  c.pseudo_order = c.reflexive && c.antisymmetric;
  c.total_order = c.complete && c.partial_order;
  return c;
}

std::optional<Edge> fg_closed_violation(const FiniteRelation& r, const MapTable& f, const MapTable& g) {
  const std::size_t n = r.ground_size();
  if (f.size() != n || g.size() != n)
    throw DomainError("map tables must have one entry per point");
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      if (r.contains(g[x], g[y]) && !r.contains(f[x], f[y]))
        return Edge{x, y};
  return std::nullopt;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Breadth-first distances from every point *to* `target` (reverse edges).
std::vector<std::size_t> distances_to(const FiniteRelation& r, PointId target) {
  const std::size_t n = r.ground_size();
  std::vector<std::vector<PointId>> pred(n);
  for (const auto& [x, y] : r.edges())
    pred[y].push_back(x);
  std::vector<std::size_t> dist(n, kUnreached);
  std::deque<PointId> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    PointId v = queue.front();
    queue.pop_front();
    for (PointId u : pred[v]) {
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::vector<char> reachable_from(const FiniteRelation& r, PointId source) {
  std::vector<char> seen(r.ground_size(), 0);
  std::deque<PointId> queue;
  // Paths have length >= 1, so the source itself is reached only via a cycle.
  for (PointId w : r.successors(source)) {
    if (!seen[w]) {
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    PointId v = queue.front();
    queue.pop_front();
    for (PointId w : r.successors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

void check_point(const FiniteRelation& r, PointId x) {
  if (x >= r.ground_size())
    throw DomainError("point " + std::to_string(x) + " out of range");
}

} // namespace

std::optional<Path> find_path(const FiniteRelation& r, PointId x, PointId y) {
  check_point(r, x);
  check_point(r, y);
  const auto dist = distances_to(r, y);

  // First step: the smallest successor minimising the remaining distance.
  std::size_t best = kUnreached;
  PointId next = 0;
  for (PointId w : r.successors(x)) {
    if (dist[w] < best) {
      best = dist[w];
      next = w;
    }
  }
  if (best == kUnreached)
    return std::nullopt;

  Path path{{x, next}};
  PointId cur = next;
  while (dist[cur] != 0) {
    for (PointId w : r.successors(cur)) {
      if (dist[w] + 1 == dist[cur]) {
        cur = w;
        break;
      }
    }
    path.nodes.push_back(cur);
  }
  return path;
}

std::optional<Edge> connectivity_violation(const FiniteRelation& r, std::span<const PointId> e) {
  const PointSet members = make_point_set({e.begin(), e.end()});
  for (PointId x : members) {
    check_point(r, x);
    const auto seen = reachable_from(r, x);
    for (PointId y : members)
      if (y != x && !seen[y])
        return Edge{x, y};
  }
  return std::nullopt;
}

std::optional<Edge> directedness_violation(const FiniteRelation& r, std::span<const PointId> e) {
  const PointSet members = make_point_set({e.begin(), e.end()});
  for (PointId x : members) {
    check_point(r, x);
    for (PointId y : members) {
      const auto sx = r.successors(x);
      const bool dominated = std::any_of(sx.begin(), sx.end(), [&](PointId z) { return r.contains(y, z); });
      if (!dominated)
        return Edge{x, y};
    }
  }
  return std::nullopt;
}

FiniteRelation universal_relation(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * n);
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      edges.emplace_back(x, y);
  return FiniteRelation(n, edges);
}

FiniteRelation relation_from_comparator(std::size_t n,
                                        const std::function<bool(PointId, PointId)>& less_equal) {
  std::vector<Edge> edges;
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      if (less_equal(x, y))
        edges.emplace_back(x, y);
  return FiniteRelation(n, edges);
}

FiniteRelation symmetric_closure_of(std::size_t n, std::span<const Edge> edges) {
  return symmetric_closure(FiniteRelation(n, edges));
}

} // namespace coincide
