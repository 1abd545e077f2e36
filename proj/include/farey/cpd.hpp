#pragma once

#include <vector>

#include "farey/geom.hpp"

namespace farey {

/// Strictly convex counterclockwise polygon boundary: an n-periodic vertex
/// sequence (n >= 3) where every vertex lies strictly to the left of every
/// directed edge. Instances only exist through validate(), so holding a Cpd
/// is proof the convexity conditions hold.
class Cpd {
 public:
  /// Runs the full O(n^2) strict determinant check: for every p and every
  /// q != p, p+1 (mod n), det(A_p->A_{p+1}, A_p->A_q) > 0.
  /// Throws TooFewVertices (n < 3) or NotConvexDirect on the first failure.
  static Cpd validate(std::vector<Pt> points);

  int size() const { return static_cast<int>(pts_.size()); }
  const std::vector<Pt>& vertices() const { return pts_; }

  /// Cyclic access; any integer index is reduced mod n.
  const Pt& vertex(int k) const { return pts_[wrap(k)]; }
  /// Edge vector A_k -> A_{k+1}.
  Vec2 edge(int k) const { return vertex(k + 1) - vertex(k); }

  friend bool operator==(const Cpd& a, const Cpd& b) { return a.pts_ == b.pts_; }

 private:
  explicit Cpd(std::vector<Pt> pts) : pts_(std::move(pts)) {}
  int wrap(int k) const {
    const int n = size();
    int r = k % n;
    return r < 0 ? r + n : r;
  }
  std::vector<Pt> pts_;
};

using QuadrantPattern = std::vector<QuadrantSet>;

/// Deletes vertex `index`; the remainder is again a Cpd (revalidated, and an
/// InternalInvariantViolation if that ever fails). Throws TooFewVertices for
/// triangles and IndexOutOfRange on a bad index.
Cpd reduce(const Cpd& c, int index);

/// True iff the diagonals [A_0, A_k] and [A_{n-1}, A_1] cross transversally.
/// Requires n >= 4 and 2 <= k <= n-2 (IndexOutOfRange otherwise). Holds for
/// every Cpd; exercised as a property test.
bool diagonals_cross(const Cpd& c, int k);

/// Closed-quadrant sets of the n edge vectors A_k -> A_{k+1}.
QuadrantPattern edge_quadrants(const Cpd& c);

/// True iff no two cyclically consecutive edge vectors share a quadrant.
bool no_consecutive_same_quadrant(const Cpd& c);

/// Instance check of the bound "no consecutive same quadrant implies n <= 4":
/// true iff the antecedent fails or the vertex count is at most 4.
bool check_n_le_4(const Cpd& c);

}  // namespace farey
