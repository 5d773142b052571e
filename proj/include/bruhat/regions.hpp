#pragma once

// The element families x_n, theta(m,n), theta(m,n)s and s0 theta(m,n)s, the
// partition of W \ {id} into their G-orbits, and the convex-hexagon
// description of the lower intervals below theta(m,n).

#include <optional>
#include <string>
#include <vector>

#include "bruhat/weyl.hpp"

namespace bruhat {

struct ThetaIndex {
  int m = 0;
  int n = 0;
  friend bool operator==(const ThetaIndex&, const ThetaIndex&) = default;
};

/// x_n = 123...n in label-mod-3 notation. Throws for n < 1.
Element x_chain(int n);
/// theta(m,n) = 1 2 ... (2m+2) (2m+1) ... (2m-2n+1), of length 2m+2n+3.
Element theta(ThetaIndex idx);
/// The unique right ascent of theta(m,n).
Generator s_mn(ThetaIndex idx);
/// theta(m,n) s_{m,n}.
Element theta1(ThetaIndex idx);
/// s0 theta(m,n) s_{m,n}.
Element theta2(ThetaIndex idx);

enum class RegionKind { Identity, X, Theta, Theta1, Theta2 };
std::string to_string(RegionKind kind);
RegionKind region_kind_from_string(const std::string& name);

struct RegionTag {
  RegionKind kind = RegionKind::Identity;
  Symmetry tau;
  ThetaIndex params;  // Theta, Theta1, Theta2
  int chain_len = 0;  // X

  /// tau applied to the canonical family member.
  Element reconstruct() const;
  friend bool operator==(const RegionTag&, const RegionTag&) = default;
};

/// The canonical member of a family (tau ignored).
Element family_member(const RegionTag& tag);

/// Classification with the first symmetry, in symmetry_group() order, that
/// carries a canonical family member onto w.
RegionTag classify(const Element& w);

/// Every (kind, symmetry, parameters) triple matching w. Used to check that
/// the four regions are disjoint.
std::vector<RegionTag> region_memberships(const Element& w);

// ---------------------------------------------------------------------------
// Geometry of lower intervals.

/// The six centroids of the alcoves of W_f theta(p,q), W_f = <s1, s2>.
std::vector<LatticePoint> theta_hexagon_vertices(ThetaIndex idx);

/// Whether the centroid of w's alcove lies in the closed convex hull of the
/// hexagon vertices. Agrees with bruhat_leq(w, theta(idx)).
bool in_theta_lower(const Element& w, ThetaIndex idx);

/// Members of theta(p,q)'s lower interval (found geometrically) whose
/// alcove has a side on the boundary of the region.
std::vector<Element> boundary_set(ThetaIndex idx);

/// theta(m-1,n)v ∩ theta(m,n-1)v == theta(m-1,n-1)s v, by enumeration.
/// Requires m, n >= 1.
bool intersection_check(int m, int n);

} // namespace bruhat
