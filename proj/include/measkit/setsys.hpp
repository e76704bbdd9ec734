#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace measkit {

using Mask = std::uint32_t;

/// Finite set X = {0, ..., n-1}, 1 <= n <= 24, with optional element labels.
/// (A labelled universe may be empty; that only happens for traces on the
/// empty set.)
/// Subsets of X are n-bit masks.
class FiniteUniverse {
 public:
  static constexpr int kMaxSize = 24;

  FiniteUniverse() : FiniteUniverse(1) {}
  explicit FiniteUniverse(int size);
  explicit FiniteUniverse(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return (Mask{1} << size()) - 1; }
  bool contains(Mask m) const { return (m & ~full()) == 0; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  // Index of a label, or -1.
  int index_of(const std::string& label) const;

  friend bool operator==(const FiniteUniverse&, const FiniteUniverse&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A deduplicated family of subsets, members sorted by mask value.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  SubsetFamily(FiniteUniverse universe, std::vector<Mask> members);

  static SubsetFamily power_set(const FiniteUniverse& universe);

  const FiniteUniverse& universe() const { return universe_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask m) const;
  // Every member of this family is a member of other.
  bool subset_of(const SubsetFamily& other) const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  FiniteUniverse universe_;
  std::vector<Mask> members_;
};

enum class SystemKind { PiSystem, SetAlgebra, LambdaSystem, MonotoneClass, SigmaAlgebra };

const char* system_kind_name(SystemKind kind);

struct SystemCheck {
  bool ok = true;
  std::string violated_axiom;
  std::vector<Mask> witnesses;
};

// Countable axioms are checked in their finite form: on a finite universe a
// countable union equals a finite sub-union and monotone chains stabilize.
SystemCheck is_system(SystemKind kind, const SubsetFamily& family);

// Smallest family of the given kind containing the generators, computed by a
// worklist closure. PiSystem requires nonempty generators (EmptyGenerators).
SubsetFamily generate(SystemKind kind, const SubsetFamily& generators);

// B0 = A0, B(k+1) = A(k+1) minus the union of the previous B's.
std::vector<Mask> disjointify(const std::vector<Mask>& sets);

// Finite disjoint unions of the generators. Requires X in G, closure under
// intersection, and complements splitting into two disjoint generators.
SubsetFamily explicit_algebra(const SubsetFamily& generators);

// Atoms of a sigma-algebra: its minimal nonempty members, in mask order.
std::vector<Mask> atoms(const SubsetFamily& sigma);

// Compress a mask living inside Y to a mask over a |Y|-point universe, and
// back again.
Mask compress_mask(Mask m, Mask y);
Mask expand_mask(Mask m, Mask y);

/// {A n Y : A in family} over the universe Y (|Y| points, labels carried).
SubsetFamily trace_family(const SubsetFamily& family, Mask y);

/// Universe X1 x X2 with element (i, j) at index i * |X2| + j.
FiniteUniverse product_universe(const FiniteUniverse& left, const FiniteUniverse& right);
Mask rectangle(const FiniteUniverse& left, const FiniteUniverse& right, Mask a, Mask b);
// The family of rectangles A1 x A2.
SubsetFamily rectangles(const SubsetFamily& left, const SubsetFamily& right);
// Sigma-algebra generated by rectangles; both inputs must be sigma-algebras.
SubsetFamily product_sigma(const SubsetFamily& left, const SubsetFamily& right);

struct EnumerationReport {
  int universe_size = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_witnesses;
};

// Every pi-system on an n-point universe (n <= 4): lambda closure equals
// sigma closure.
EnumerationReport verify_dynkin(int universe_size);
// Every set algebra on an n-point universe (n <= 4): monotone-class closure
// equals sigma closure, and the algebra is already a sigma-algebra.
EnumerationReport verify_monotone_class(int universe_size);

std::string format_mask(const FiniteUniverse& universe, Mask m);
std::string format_family(const SubsetFamily& family);

}  // namespace measkit
