#pragma once

#include <memory>
#include <string>
#include <vector>

#include "measkit/report.hpp"
#include "measkit/space.hpp"
#include "measkit/xreal.hpp"

namespace measkit {

enum class MeasureKind { FiniteTable, Counting, Dirac, LebesgueR, Restricted, Trace, Tensor, Lebesgue2 };

/// Immutable measure on one of the supported spaces.
class Measure {
 public:
  // Point weights on a finite space; mu(A) is the sum over A. Weights must be
  // nonnegative (PreconditionFailed otherwise).
  static Measure table(const MeasurableSpace& space, std::vector<XReal> weights);
  // Same without validation; lets tests feed faulty tables to the verifiers.
  static Measure table_unchecked(const MeasurableSpace& space, std::vector<XReal> weights);
  static Measure zero(const MeasurableSpace& space);
  // card(A n Y). Y need not be measurable; on the line Y is an interval set
  // and any non-degenerate component makes the count infinite.
  static Measure counting(const MeasurableSpace& space, const MeasurableSet& y);
  static Measure dirac(const MeasurableSpace& space, const Point& at);
  static Measure lebesgue();
  static Measure lebesgue2();
  // A -> base(A n Y) on the base space; Y must be measurable.
  static Measure restricted(const Measure& base, const MeasurableSet& y);
  // base restricted to the trace sigma-algebra on Y; lives on the trace space.
  static Measure trace(const Measure& base, const MeasurableSet& y);

  MeasureKind kind() const;
  const MeasurableSpace& space() const;
  const std::vector<XReal>& weights() const;
  const MeasurableSet& subset() const;  // Y of counting/restricted/trace
  const Point& point() const;           // Dirac atom
  const Measure& base() const;
  const Measure& left() const;
  const Measure& right() const;

  std::string describe() const;

  friend Measure tensor_measure(const Measure& left, const Measure& right);

 private:
  struct Node;
  explicit Measure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Evaluates mu(A); NotMeasurable when A is outside the space's sigma-algebra.
XReal measure(const Measure& mu, const MeasurableSet& a);

// Product measure: finite x finite evaluated through sections,
// mu(A) = sum over atoms B of the left sigma-algebra of
// right(section at B) * left(B); or Lebesgue x Lebesgue giving area.
// UnsupportedFactorKinds otherwise.
Measure tensor_measure(const Measure& left, const Measure& right);

struct MeasureFlags {
  bool finite = false;
  bool sigma_finite = false;
  bool diffuse = false;
};

MeasureFlags classify(const Measure& mu);

// Nonnegativity, null empty set, finite additivity on the disjointified
// samples, monotonicity on nested pairs, finite Boole inequality, and the
// pseudopartition identity. Failing checks carry a counterexample.
VerificationReport verify_measure_axioms(const Measure& mu, const std::vector<MeasurableSet>& samples);

// Agreement on a pi-system generating the sigma-algebra (and containing a
// finite pseudopartition of mu1-finite parts) forces agreement everywhere.
// Each violated hypothesis throws HypothesisFailed; the return value is
// whether mu1 == mu2 on the whole sigma-algebra.
bool verify_uniqueness_pi_system(const MeasurableSpace& space, const SubsetFamily& generators,
                                 const Measure& mu1, const Measure& mu2);

// Negligible: contained in a measurable null set (finite spaces).
bool is_negligible(const Measure& mu, Mask a);

// Finite-space set disjointification generalised to measurable sets.
std::vector<MeasurableSet> disjointify(const std::vector<MeasurableSet>& sets);

}  // namespace measkit
