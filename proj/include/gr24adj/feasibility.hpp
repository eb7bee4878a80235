#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gr24adj/matrix.hpp"
#include "gr24adj/rat.hpp"
#include "gr24adj/unipoly.hpp"

namespace gr24 {

// Exact decision procedures for sign conditions on linear spans and quadrics.
// Everything here works in coordinates of the ambient span, over the rationals.

struct LinFeas {
  bool feasible = false;
  std::vector<Rat> witness;  // strict interior point when feasible
};

// Is there x with row . x > 0 for every row? (homogeneous, so any positive
// scaling of the witness works too)
LinFeas strict_feasible(const std::vector<std::vector<Rat>>& rows, std::size_t dim);

// Generators of the closed cone {x : row . x >= 0}: extreme-ray candidates
// from maximal active sets together with a spanning set of the lineality
// space. Redundant generators are harmless for the uses below.
std::vector<std::vector<Rat>> cone_generators(const std::vector<std::vector<Rat>>& rows,
                                              std::size_t dim);

// Certificate for a point of {q = 0} inside the open cone {rows > 0}.
struct QFeas {
  bool feasible = false;
  std::string reason;  // for infeasible: which sign-definiteness was proved
  // Witness: either an exact rational point, or a bracketing segment
  // [seg_neg, seg_pos] inside the open cone with q < 0 and q > 0 at its ends.
  std::optional<std::vector<Rat>> point;
  std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> bracket;
};

// Does the quadric {x^T M x = 0} meet the open polyhedral cone {rows.x > 0}?
// M is symmetric (dim x dim); a zero M means the quadric is the whole space.
QFeas quadric_strict_feasible(const Mat<Rat>& M, const std::vector<std::vector<Rat>>& rows);

// Minimum of l^T G l over the standard simplex {l >= 0, sum l = 1}, exact.
// Used to decide sign-definiteness of a quadratic form on a cone.
Rat simplex_quadratic_min(const Mat<Rat>& G);

}  // namespace gr24
