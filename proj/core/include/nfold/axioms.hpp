#pragma once

#include <vector>

#include "nfold/geometry.hpp"
#include "nfold/polynomial.hpp"
#include "nfold/trace.hpp"

namespace nfold {

/// One instance of a single-fold elementary operation.
///
/// Required arity per operation id:
///   1: points {P, Q}            5: points {P}, lines {r}
///   2: lines  {r, s}            6: points {P, Q}, lines {r}
///   3: lines  {r}               7: points {P, Q}, lines {r, s}
///   4: points {P, Q}            8: points {P}, lines {r, s}
struct AxiomInstance {
  int op_id = 0;
  std::vector<Point> points;
  std::vector<Line> lines;
};

enum class Multiplicity { finite, infinite, empty };

struct AxiomSolution {
  std::vector<Line> folds;  // sorted by (angle, offset); empty unless finite
  Multiplicity multiplicity_class = Multiplicity::empty;
};

struct SolutionCount {
  Multiplicity multiplicity_class = Multiplicity::empty;
  int count = 0;  // meaningful only for the finite/empty classes

  bool is_infinite() const { return multiplicity_class == Multiplicity::infinite; }
};

/// Solve one elementary operation, returning every admissible fold line.
///
/// Degenerate inputs that Table-style wording would exclude are given definite
/// answers instead of errors where the geometry admits one:
///   - op 6 with P == Q: infinite when P lies on r, empty otherwise; with P on
///     r (P != Q) the image point X == P yields the fold through P and Q.
///   - op 8 with the image locus of P coincident with r: infinite; parallel
///     and disjoint: empty.
/// Arity mismatches and identity-forcing inputs (op 1/4 with P == Q, op 7 with
/// both pairs coincident) throw invalid_input.
AxiomSolution solve_axiom(const AxiomInstance& inst, const Tolerance& tol = {});

/// Number of admissible folds: 0..3 or the infinite class.
SolutionCount count_solutions(const AxiomInstance& inst, const Tolerance& tol = {});

/// The cubic in the fold slope whose real roots give the non-vertical op-7
/// folds (common tangents of the two focus/directrix parabolas).  Exposed so
/// the solution count can be cross-checked against a root oracle.  Returned
/// highest-degree-first with exact zero leading terms when the instance
/// degenerates below cubic (the Polynomial is trimmed accordingly).
std::vector<double> op7_slope_cubic(const AxiomInstance& inst);

/// Residual of a candidate fold against the incidence constraints of an
/// instance (max over the operation's constraints).  Used by solve_axiom to
/// validate candidates and by tests as the sweep-oracle objective.
double axiom_residual(const AxiomInstance& inst, const Line& fold);

/// Wrap a solved instance as a verifiable trace.  Each admissible fold is an
/// alternative, so it becomes its own step carrying the operation's canonical
/// incidence constraints.
FoldTrace axiom_solution_trace(const AxiomInstance& inst, const AxiomSolution& sol);

}  // namespace nfold
