#pragma once

#include <array>
#include <vector>

#include "chull/curve.hpp"
#include "chull/groebner.hpp"
#include "chull/polynomial.hpp"

namespace chull {

/// Q[xp0, xp1, xq0, xq1]: parameters of two points p, q on the curve.
const RingPtr& pair_ring();
/// Q[a, b, c] with a = xp0 xq0, b = xp1 xq1, c = xp0 xq1 + xp1 xq0.
const RingPtr& invariant_ring();
/// Q[u01, u02, u03, u12, u13, u23].
const RingPtr& plucker_ring();
/// Q[x, y, z], affine chart (1 : x : y : z).
const RingPtr& space_ring();

/// Rewrites a symmetric bihomogeneous polynomial of bidegree (m, m) in the
/// invariants a, b, c. Throws NotSymmetric, NotInInvariantRing.
Polynomial symmetrize(const Polynomial& f);

struct SecantCoordinates {
  /// u01, u02, u03, u12, u13, u23 over invariant_ring().
  std::array<Polynomial, 6> u;
  int degree = 0;

  /// u01 u23 - u02 u13 + u03 u12, identically zero.
  Polynomial plucker() const;
};

SecantCoordinates secant_coordinates(const ProjectiveCurve& c);

/// Phi(a, b, c) of degree 2(d-3), canonical. Throws ZeroDeterminant.
Polynomial stationary_form(const ProjectiveCurve& c);

/// Interpolation finds the reduced surface equation from points on secant
/// lines modulo primes and lifts it to Q; it does not see multiplicities.
enum class EdgeRoute { Grassmannian, Direct, Interpolation };

enum class ComponentStatus {
  Done,
  /// Elimination ideal was not principal; `surface` holds the gcd of its
  /// generators and `ideal` the full ideal.
  NonPrincipal,
  /// Groebner budget ran out; only phi_factor is set.
  ResourceLimit,
};

struct EdgeComponent {
  Polynomial phi_factor;
  Polynomial surface;
  int degree = 0;
  /// Raw elimination generator before taking the squarefree part.
  int raw_degree = 0;
  bool reduced = true;
  ComponentStatus status = ComponentStatus::Done;
  Ideal ideal;
};

struct EdgeOptions {
  EdgeRoute route = EdgeRoute::Grassmannian;
  GroebnerOptions groebner;
  unsigned threads = 1;
  /// Eliminate modulo primes and lift the result to Q; the lift is checked
  /// against one further prime.
  bool modular = false;
  unsigned max_primes = 200;
};

/// Ideal of the image of {phi_factor = 0} in the Grassmannian.
Ideal grassmannian_image(const SecantCoordinates& sc, const Polynomial& phi_factor,
                         const GroebnerOptions& options = {});

/// Surface swept by the secant lines over {phi_factor = 0}.
EdgeComponent edge_component(const SecantCoordinates& sc, const Polynomial& phi_factor,
                             const EdgeOptions& options = {});

/// Factors Phi and runs edge_component on each distinct factor. Components
/// are ordered as the factors of Phi.
std::vector<EdgeComponent> edge_components(const ProjectiveCurve& c, const EdgeOptions& options = {});

/// resultant_t(det(Q1 + t Q2), (Q1 + t Q2)(1, x, y, z)), canonical, over
/// space_ring(). Throws DegeneratePencil unless the determinant has degree 4.
Polynomial pencil_edge_surface(const QuadricPencilSpec& p);

}  // namespace chull
