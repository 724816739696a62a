#pragma once

#include "theta/graph.hpp"
#include "theta/intmatrix.hpp"
#include "theta/intpoly.hpp"
#include "theta/quotient.hpp"

namespace theta {

/// Two hub vertices joined by internally disjoint paths of lengths a <= b <= c
/// (b >= 2 to stay simple). Vertices: a+b+c-1, edges: a+b+c.
SimpleGraph theta_hat(int a, int b, int c);

/// theta_hat(2,2,2) with hubs v1, v3 and middles u1, v2, w1, plus s pendants
/// at u1 and t pendants at v3; embedded as the negative part of K_n.
/// Vertex layout: v1=0, v2=1, v3=2, u1=3, w1=4, pendants at u1, pendants at
/// v3, filler.
SignedCompleteGraph theta1(int n, int s, int t);

/// theta_hat(1,2,2) (two triangles sharing edge v1v2) with k-5 pendants at
/// v2, embedded in K_n. Vertex layout: v1=0, v2=1, u1=2, w1=3, pendants,
/// filler.
SignedCompleteGraph theta2(int n, int k);

/// The 7-block partition behind the theta1 quotient (requires s, t >= 1 so no
/// block is empty) and the 5-block theta2 partition (requires k >= 6, n > k-1).
SpecialPartition theta1_partition(int n, int s, int t);
SpecialPartition theta2_partition(int n, int k);

/// Quotient matrices transcribed row for row (u = n-k+1).
IntMatrix quotient_theta1_matrix(int n, int s, int t);
IntMatrix quotient_theta2_matrix(int n, int k);

/// Degree-7 factor of charpoly(K_n, theta1(s,t)): charpoly = (x+1)^{n-7} F.
IntPoly F_poly(int n, int k, int s);
/// Degree-5 factor of charpoly(K_n, theta2(0,k-5)): charpoly = (x+1)^{n-5} P.
IntPoly P_poly(int n, int k);

// Difference polynomials and their splits. p = p1 + p2 = P1 + P2 with
// charpoly(theta1(s-1,t+1)) - charpoly(theta1(s,t)) = 8 (x+1)^{n-7} p,
// and (in u = n-k+1):
// charpoly(theta2) - charpoly(theta1(0,k-6)) = -8 (x+1)^{n-7} s_poly,
// charpoly(theta2) - charpoly(theta1(k-6,0)) = -16 (x+1)^{n-7} S_poly.
IntPoly p_poly(int s, int t, int u);
IntPoly p1_poly(int s, int t, int u);
IntPoly p2_poly(int s, int t, int u);
IntPoly P1cap_poly(int s, int t, int u);
IntPoly P2cap_poly(int s, int t, int u);
IntPoly s_poly(int n, int k);
IntPoly s1_poly(int n, int k);
IntPoly s2_poly(int n, int k);
IntPoly Scap_poly(int n, int k);
IntPoly S1cap_poly(int n, int k);
IntPoly S2cap_poly(int n, int k);

}  // namespace theta
