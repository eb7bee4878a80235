#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gr24adj/matrix.hpp"
#include "gr24adj/multipoly.hpp"
#include "gr24adj/rat.hpp"

namespace gr24 {

// Plucker coordinates of Gr(2,4) in the fixed order p12, p13, p23, p14, p24, p34.
inline constexpr std::size_t kNV = 6;
enum PluckerVar : int { P12 = 0, P13 = 1, P23 = 2, P14 = 3, P24 = 4, P34 = 5 };
extern const std::array<std::string, kNV> kVarNames;

// The four coordinate hyperplanes supporting facets of the nonnegative part,
// and the two that meet it in codimension two.
inline constexpr std::array<int, 4> kFacetCoords = {P12, P23, P34, P14};
inline constexpr std::array<int, 2> kNonFacetCoords = {P13, P24};

MultiPoly<Rat> plucker_quadric();
// Symmetric matrix Q with qq(x) = x^T Q x.
Mat<Rat> plucker_quadric_matrix();
std::vector<Rat> coordinate_vertex(int var);

// Projective linear subspace of P^5 cut out by linear equations (RREF rows).
struct LinearSubspace {
  Mat<Rat> eqs;  // in RREF; 0 rows = all of P^5

  std::size_t corank() const { return eqs.rows; }
  int dim() const { return 5 - static_cast<int>(eqs.rows); }
  // Canonical spanning points (nullspace basis of the equations).
  std::vector<std::vector<Rat>> basis() const;
  bool contains_point(const std::vector<Rat>& x) const;
  bool contains_subspace(const LinearSubspace& other) const;
  bool operator==(const LinearSubspace& o) const { return eqs == o.eqs; }
};

LinearSubspace subspace_from_rows(const std::vector<std::vector<Rat>>& rows);
LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b);
// An ambient linear form restricting to the given functional on s.basis().
std::vector<Rat> pullback_functional(const LinearSubspace& s, const std::vector<Rat>& u);

enum class CompKind {
  Point,
  PointPair,  // two points conjugate over a quadratic extension
  Line,
  Conic,
  Plane,
  QuadricSurface,
  P3,
  Quadric3Fold,      // hyperplane section of Gr, used as a facet closure
  DegenerateDouble,  // non-reduced rank-1 restriction: invalid input marker
};

std::string kind_name(CompKind k);

struct Parametrization {
  enum class Space { ProjLine, BiProjLine, ProjPlane };
  Space space;
  std::vector<MultiPoly<Rat>> coords;  // six homogeneous forms in the parameters
  std::size_t nparams() const { return space == Space::ProjLine ? 2 : (space == Space::BiProjLine ? 4 : 3); }
};

// One irreducible component of (linear span) ∩ Gr(2,4).
struct Component {
  CompKind kind;
  LinearSubspace ambient;
  // Gram matrix of the restricted Plucker quadric in ambient.basis()
  // coordinates, normalized; empty when the span lies inside Gr.
  std::optional<Mat<Rat>> quad;

  int dim() const;
  int degree() const;
  std::string key() const;

  // Point kind only.
  std::vector<Rat> point_coords() const;
  // PointPair kind only: minimal polynomial of the pair on the canonical
  // line parameter t -> basis()[0] + t basis()[1] (roots may be at infinity
  // only if the leading coefficient vanishes; normalization avoids that).
  UniPoly<Rat> pair_minpoly() const;
};

// Decompose span ∩ Gr(2,4) into irreducible components, classifying by the
// rank of the restricted quadric.
std::vector<Component> decompose_linear_cap_quadric(const LinearSubspace& span);

// The eight positroid planes: one coordinate from each complementary pair.
std::vector<LinearSubspace> positroid_planes();

enum class FacetMeet { Meets, MissesPositive, MissesNegative };
FacetMeet facet_meets_positive_cell(const std::vector<Rat>& h, int facet_coord);

// Exact membership and containment tests.
bool component_contains_point(const Component& c, const std::vector<Rat>& x);
bool component_subset(const Component& inner, const Component& outer);

// Rational parametrization when one is available (always for linear kinds
// and the coordinate-pair Segre surfaces; for conics and other surfaces a
// rational point search is attempted).
std::optional<Parametrization> parametrize(const Component& c);

// Express x as coefficients in s.basis(); empty when x is not in s.
std::optional<std::vector<Rat>> span_coordinates(const LinearSubspace& s,
                                                 const std::vector<Rat>& x);

// Rational point on the projective conic {G = 0} (3x3 Gram), small search.
std::optional<std::vector<Rat>> rational_point_on_conic(const Mat<Rat>& G);
// Rational point on a quadric of any rank >= 1 given by Gram matrix.
std::optional<std::vector<Rat>> rational_point_on_quadric(const Mat<Rat>& G);

}  // namespace gr24
