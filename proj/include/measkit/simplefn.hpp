#pragma once

#include <vector>

#include "measkit/measures.hpp"
#include "measkit/space.hpp"
#include "measkit/xreal.hpp"

namespace measkit {

enum class Repr { Simple, Disjoint, Canonical };
const char* repr_name(Repr r);

struct Term {
  Rational coef;
  MeasurableSet support;
};

/// Finite linear combination of indicators of measurable sets.
///
/// Disjoint: supports pairwise disjoint, nonempty, covering the space.
/// Canonical: Disjoint with strictly increasing coefficients, so each
/// support is the full preimage of its coefficient.
class SimpleFn {
 public:
  // Supports must be measurable (NotMeasurable); the claimed representation
  // is validated (PreconditionFailed).
  SimpleFn(MeasurableSpace space, std::vector<Term> terms, Repr repr = Repr::Simple);

  static SimpleFn zero(const MeasurableSpace& space);
  static SimpleFn constant(const MeasurableSpace& space, const Rational& c);
  static SimpleFn indicator(const MeasurableSpace& space, const MeasurableSet& a, const Rational& c = 1);

  const MeasurableSpace& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  Repr repr() const { return repr_; }

  Rational eval(const Point& x) const;
  // All attained values are >= 0.
  bool nonneg() const;
  Rational min_value() const;
  Rational max_value() const;
  // Finite endpoints of the supports (line functions only).
  std::vector<Rational> breakpoints() const;

 private:
  MeasurableSpace space_;
  std::vector<Term> terms_;
  Repr repr_;
};

SimpleFn canonicalize(const SimpleFn& f);
// Common refinement of the supports; the parts carry the summed coefficient.
SimpleFn to_disjoint(const SimpleFn& f);

enum class CombineOp { Add, Mul };
// Pairwise intersections of the two disjoint representations, with empty
// intersections dropped. SpaceMismatch when the spaces differ.
SimpleFn combine(CombineOp op, const SimpleFn& f, const SimpleFn& g);
SimpleFn scale(const Rational& a, const SimpleFn& f);
inline SimpleFn operator+(const SimpleFn& f, const SimpleFn& g) { return combine(CombineOp::Add, f, g); }
inline SimpleFn operator*(const SimpleFn& f, const SimpleFn& g) { return combine(CombineOp::Mul, f, g); }
SimpleFn restrict_to(const SimpleFn& f, const MeasurableSet& a);

// Sum over the canonical representation of y * mu(f^-1(y)); NegativeValue
// when f takes a negative value.
XReal integral_sf_plus(const SimpleFn& f, const Measure& mu);
// Sum of coef * mu(support) over the terms as given.
XReal integral_by_terms(const SimpleFn& f, const Measure& mu);
XReal integral_over_subset(const SimpleFn& f, const Measure& mu, const MeasurableSet& a);
// Closed forms: sum of f over a finite Y, and f(a).
XReal integral_counting(const SimpleFn& f, Mask y);
XReal integral_dirac(const SimpleFn& f, const Point& a);

}  // namespace measkit
