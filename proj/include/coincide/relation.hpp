#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coincide {

/// Index of a point in a finite ground set {0, ..., n-1}.
using PointId = std::size_t;
using Edge = std::pair<PointId, PointId>;

/// A self-map of a finite ground set, stored as its value table.
using MapTable = std::vector<PointId>;

/// Sorted, duplicate-free subset of a ground set.
using PointSet = std::vector<PointId>;

/// Sorts and deduplicates `points`.
PointSet make_point_set(std::vector<PointId> points);

struct Restriction;

/// Binary relation over an indexed finite ground set, stored as an explicit
/// edge set. Relations built from user edges are nonempty; relations derived
/// by restriction may be empty.
class FiniteRelation {
public:
  /// Throws InputError if `ground_size` is 0, an endpoint is out of range or
  /// `edges` is empty. Duplicate edges are merged.
  FiniteRelation(std::size_t ground_size, std::span<const Edge> edges);
  FiniteRelation(std::size_t ground_size, std::initializer_list<Edge> edges)
      : FiniteRelation(ground_size, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t ground_size() const noexcept { return n_; }
  /// Edges in lexicographic order.
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] bool empty() const noexcept { return edges_.empty(); }
  [[nodiscard]] bool contains(PointId x, PointId y) const noexcept {
    return x < n_ && y < n_ && matrix_[x * n_ + y] != 0;
  }
  /// Successors of `x` in increasing order.
  [[nodiscard]] std::span<const PointId> successors(PointId x) const { return succ_.at(x); }

  friend bool operator==(const FiniteRelation& a, const FiniteRelation& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  struct AllowEmpty {};
  FiniteRelation(AllowEmpty, std::size_t ground_size, std::vector<Edge> edges);

  friend FiniteRelation inverse(const FiniteRelation& r);
  friend FiniteRelation symmetric_closure(const FiniteRelation& r);
  friend Restriction restrict(const FiniteRelation& r, std::span<const PointId> e);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> matrix_;
  std::vector<std::vector<PointId>> succ_;
};

struct RelationClass {
  bool reflexive = false;
  bool irreflexive = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool complete = false;
  bool weakly_complete = false;

  bool preorder = false;
  bool partial_order = false;
  bool equivalence = false;
  bool tolerance = false;
  bool strict_order = false;
  bool near_order = false;
  bool pseudo_order = false;
  bool total_order = false;

  friend bool operator==(const RelationClass&, const RelationClass&) = default;
};

/// A walk z_0, ..., z_k (k >= 1) along edges of a relation. Nodes may repeat.
struct Path {
  std::vector<PointId> nodes;
  [[nodiscard]] std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// R restricted to E and re-indexed over E: point i of `relation` is
/// `members[i]` of the original ground set.
struct Restriction {
  FiniteRelation relation;
  PointSet members;

  /// Index of original point `x` inside the restriction, if it is a member.
  [[nodiscard]] std::optional<PointId> local_index(PointId x) const;
};

FiniteRelation inverse(const FiniteRelation& r);
FiniteRelation symmetric_closure(const FiniteRelation& r);

/// Throws DomainError("empty restriction domain") when `e` is empty and
/// DomainError when a member is out of range.
Restriction restrict(const FiniteRelation& r, std::span<const PointId> e);

/// [x, y] in R: (x, y) in R or (y, x) in R.
bool comparative(const FiniteRelation& r, PointId x, PointId y);

RelationClass classify(const FiniteRelation& r);

/// First (x, y) in row-major scan with (gx, gy) in R but (fx, fy) not in R.
/// An empty result means R is (f, g)-closed.
std::optional<Edge> fg_closed_violation(const FiniteRelation& r, const MapTable& f, const MapTable& g);
inline bool is_fg_closed(const FiniteRelation& r, const MapTable& f, const MapTable& g) {
  return !fg_closed_violation(r, f, g).has_value();
}

/// Shortest directed path of length >= 1 from x to y; among shortest paths
/// the lexicographically smallest node sequence. For x == y this is the
/// shortest cycle through x.
std::optional<Path> find_path(const FiniteRelation& r, PointId x, PointId y);

/// First ordered pair (x, y) of distinct members of `e` with no path from x
/// to y. Equal pairs need no path.
std::optional<Edge> connectivity_violation(const FiniteRelation& r, std::span<const PointId> e);
inline bool is_connected(const FiniteRelation& r, std::span<const PointId> e) {
  return !connectivity_violation(r, e).has_value();
}

/// First pair (x, y) of members of `e` (x == y included) without a common
/// successor z in the ground set.
std::optional<Edge> directedness_violation(const FiniteRelation& r, std::span<const PointId> e);
inline bool is_directed(const FiniteRelation& r, std::span<const PointId> e) {
  return !directedness_violation(r, e).has_value();
}

FiniteRelation universal_relation(std::size_t n);
/// {(x, y) : less_equal(x, y)} for a caller-supplied preorder on indices.
FiniteRelation relation_from_comparator(std::size_t n,
                                        const std::function<bool(PointId, PointId)>& less_equal);
FiniteRelation symmetric_closure_of(std::size_t n, std::span<const Edge> edges);

} // namespace coincide
