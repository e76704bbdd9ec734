#include "measkit/setsys.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "measkit/error.hpp"

namespace measkit {

FiniteUniverse::FiniteUniverse(int size) {
  if (size < 1 || size > kMaxSize)
    fail(ErrorCode::PreconditionFailed,
         "universe size " + std::to_string(size) + " outside [1, 24]");
  labels_.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) labels_.push_back("e" + std::to_string(i));
}

FiniteUniverse::FiniteUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
  // An empty carrier only arises as the trace on the empty set.
  if (size() > kMaxSize)
    fail(ErrorCode::PreconditionFailed,
         "universe size " + std::to_string(labels_.size()) + " exceeds 24");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::PreconditionFailed, "duplicate universe label");
}

int FiniteUniverse::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

SubsetFamily::SubsetFamily(FiniteUniverse universe, std::vector<Mask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  for (Mask m : members_)
    if (!universe_.contains(m))
      fail(ErrorCode::PreconditionFailed, "mask " + std::to_string(m) + " exceeds the universe");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SubsetFamily SubsetFamily::power_set(const FiniteUniverse& universe) {
  std::vector<Mask> all;
  all.reserve(std::size_t{1} << universe.size());
  for (Mask m = 0;; ++m) {
    all.push_back(m);
    if (m == universe.full()) break;
  }
  return SubsetFamily(universe, std::move(all));
}

bool SubsetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

bool SubsetFamily::subset_of(const SubsetFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

const char* system_kind_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::PiSystem: return "pi-system";
    case SystemKind::SetAlgebra: return "set algebra";
    case SystemKind::LambdaSystem: return "lambda-system";
    case SystemKind::MonotoneClass: return "monotone class";
    case SystemKind::SigmaAlgebra: return "sigma-algebra";
  }
  return "?";
}

namespace {

SystemCheck violation(std::string axiom, std::vector<Mask> witnesses) {
  return SystemCheck{false, std::move(axiom), std::move(witnesses)};
}

// Checks a binary closure axiom over all ordered pairs (a, b) for which
// `applies` holds.
std::optional<SystemCheck> check_pairs(const SubsetFamily& f, const std::string& axiom,
                                       const std::function<bool(Mask, Mask)>& applies,
                                       const std::function<Mask(Mask, Mask)>& op) {
  for (Mask a : f.members())
    for (Mask b : f.members())
      if (applies(a, b) && !f.contains(op(a, b))) return violation(axiom, {a, b});
  return std::nullopt;
}

std::optional<SystemCheck> check_complement(const SubsetFamily& f) {
  Mask full = f.universe().full();
  for (Mask a : f.members())
    if (!f.contains(full & ~a)) return violation("closed under complement", {a});
  return std::nullopt;
}

bool always(Mask, Mask) { return true; }
bool disjoint(Mask a, Mask b) { return (a & b) == 0; }
bool nested(Mask a, Mask b) { return (a & ~b) == 0; }
Mask meet(Mask a, Mask b) { return a & b; }
Mask join(Mask a, Mask b) { return a | b; }

}  // namespace

SystemCheck is_system(SystemKind kind, const SubsetFamily& f) {
  Mask full = f.universe().full();
  switch (kind) {
    case SystemKind::PiSystem:
      if (f.empty()) return violation("nonempty", {});
      if (auto v = check_pairs(f, "closed under intersection", always, meet)) return *v;
      return {};
    case SystemKind::SetAlgebra:
    case SystemKind::SigmaAlgebra:
      if (!f.contains(0)) return violation("contains the empty set", {});
      if (auto v = check_complement(f)) return *v;
      if (auto v = check_pairs(f,
                               kind == SystemKind::SetAlgebra ? "closed under finite union"
                                                              : "closed under countable union",
                               always, join))
        return *v;
      return {};
    case SystemKind::LambdaSystem:
      if (!f.contains(full)) return violation("contains the full set", {});
      if (auto v = check_complement(f)) return *v;
      if (auto v = check_pairs(f, "closed under countable disjoint union", disjoint, join))
        return *v;
      return {};
    case SystemKind::MonotoneClass:
      if (auto v = check_pairs(f, "closed under monotone union", nested, join)) return *v;
      if (auto v = check_pairs(f, "closed under monotone intersection", nested, meet)) return *v;
      return {};
  }
  return {};
}

SubsetFamily generate(SystemKind kind, const SubsetFamily& generators) {
  const FiniteUniverse& u = generators.universe();
  const Mask full = u.full();
  if (kind == SystemKind::PiSystem && generators.empty())
    fail(ErrorCode::EmptyGenerators, "a generated pi-system needs a nonempty generator family");
  if (kind == SystemKind::MonotoneClass) return generators;

  std::vector<bool> seen(std::size_t{1} << u.size(), false);
  std::vector<Mask> members;
  std::deque<Mask> work;
  auto add = [&](Mask m) {
    if (seen[m]) return;
    seen[m] = true;
    members.push_back(m);
    work.push_back(m);
  };
  for (Mask g : generators.members()) add(g);
  if (kind == SystemKind::SetAlgebra || kind == SystemKind::SigmaAlgebra) add(0);
  if (kind == SystemKind::LambdaSystem) add(full);

  while (!work.empty()) {
    Mask s = work.front();
    work.pop_front();
    if (kind != SystemKind::PiSystem) add(full & ~s);
    // members may grow while we scan; newly added sets pair with s when popped.
    for (std::size_t i = 0; i < members.size(); ++i) {
      Mask t = members[i];
      switch (kind) {
        case SystemKind::PiSystem: add(s & t); break;
        case SystemKind::SetAlgebra:
        case SystemKind::SigmaAlgebra: add(s | t); break;
        case SystemKind::LambdaSystem:
          if ((s & t) == 0) add(s | t);
          break;
        case SystemKind::MonotoneClass: break;
      }
    }
  }
  return SubsetFamily(u, std::move(members));
}

std::vector<Mask> disjointify(const std::vector<Mask>& sets) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  Mask covered = 0;
  for (Mask a : sets) {
    out.push_back(a & ~covered);
    covered |= a;
  }
  return out;
}

SubsetFamily explicit_algebra(const SubsetFamily& g) {
  const Mask full = g.universe().full();
  if (!g.contains(full)) fail(ErrorCode::PreconditionFailed, "generators must contain the full set");
  if (auto v = check_pairs(g, "", always, meet))
    fail(ErrorCode::PreconditionFailed,
         "generators must be closed under intersection; witness " +
             format_mask(g.universe(), v->witnesses[0]) + ", " +
             format_mask(g.universe(), v->witnesses[1]));
  for (Mask a : g.members()) {
    Mask c = full & ~a;
    bool split = false;
    for (Mask b1 : g.members()) {
      if ((b1 & ~c) != 0) continue;
      if (g.contains(c & ~b1)) {
        split = true;
        break;
      }
    }
    if (!split)
      fail(ErrorCode::PreconditionFailed,
           "complement of " + format_mask(g.universe(), a) +
               " is not a disjoint union of two generators");
  }

  std::vector<bool> seen(std::size_t{1} << g.universe().size(), false);
  std::vector<Mask> unions;
  std::deque<Mask> work;
  for (Mask m : g.members()) {
    if (!seen[m]) {
      seen[m] = true;
      unions.push_back(m);
      work.push_back(m);
    }
  }
  while (!work.empty()) {
    Mask s = work.front();
    work.pop_front();
    for (Mask t : g.members()) {
      if ((s & t) != 0) continue;
      Mask u = s | t;
      if (!seen[u]) {
        seen[u] = true;
        unions.push_back(u);
        work.push_back(u);
      }
    }
  }
  return SubsetFamily(g.universe(), std::move(unions));
}

std::vector<Mask> atoms(const SubsetFamily& sigma) {
  const int n = sigma.universe().size();
  std::vector<Mask> out;
  for (int x = 0; x < n; ++x) {
    Mask atom = sigma.universe().full();
    for (Mask m : sigma.members())
      if (m >> x & 1u) atom &= m;
    if (atom >> x & 1u) out.push_back(atom);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Mask compress_mask(Mask m, Mask y) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(y >> i & 1u)) continue;
    if (m >> i & 1u) out |= Mask{1} << k;
    ++k;
  }
  return out;
}

Mask expand_mask(Mask m, Mask y) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(y >> i & 1u)) continue;
    if (m >> k & 1u) out |= Mask{1} << i;
    ++k;
  }
  return out;
}

SubsetFamily trace_family(const SubsetFamily& family, Mask y) {
  const FiniteUniverse& u = family.universe();
  if (!u.contains(y)) fail(ErrorCode::PreconditionFailed, "trace set exceeds the universe");
  std::vector<std::string> labels;
  for (int i = 0; i < u.size(); ++i)
    if (y >> i & 1u) labels.push_back(u.label(i));
  std::vector<Mask> members;
  members.reserve(family.size());
  for (Mask a : family.members()) members.push_back(compress_mask(a & y, y));
  return SubsetFamily(FiniteUniverse(std::move(labels)), std::move(members));
}

FiniteUniverse product_universe(const FiniteUniverse& left, const FiniteUniverse& right) {
  if (left.size() * right.size() > FiniteUniverse::kMaxSize)
    fail(ErrorCode::PreconditionFailed, "product universe exceeds 24 points");
  std::vector<std::string> labels;
  for (const auto& a : left.labels())
    for (const auto& b : right.labels()) labels.push_back("(" + a + "," + b + ")");
  return FiniteUniverse(std::move(labels));
}

Mask rectangle(const FiniteUniverse& left, const FiniteUniverse& right, Mask a, Mask b) {
  const int n2 = right.size();
  Mask out = 0;
  for (int i = 0; i < left.size(); ++i)
    if (a >> i & 1u) out |= b << (i * n2);
  return out;
}

SubsetFamily rectangles(const SubsetFamily& left, const SubsetFamily& right) {
  FiniteUniverse u = product_universe(left.universe(), right.universe());
  std::vector<Mask> members;
  for (Mask a : left.members())
    for (Mask b : right.members())
      members.push_back(rectangle(left.universe(), right.universe(), a, b));
  return SubsetFamily(std::move(u), std::move(members));
}

SubsetFamily product_sigma(const SubsetFamily& left, const SubsetFamily& right) {
  if (!is_system(SystemKind::SigmaAlgebra, left).ok)
    fail(ErrorCode::PreconditionFailed, "left factor is not a sigma-algebra");
  if (!is_system(SystemKind::SigmaAlgebra, right).ok)
    fail(ErrorCode::PreconditionFailed, "right factor is not a sigma-algebra");
  return generate(SystemKind::SigmaAlgebra, rectangles(left, right));
}

namespace {

// Enumerates every family of subsets of an n-point universe, n <= 4, and
// hands the families accepted by `keep` to `check`.
EnumerationReport enumerate_families(int n, SystemKind kind,
                                     const std::function<std::string(const SubsetFamily&)>& check) {
  if (n < 1 || n > 4)
    fail(ErrorCode::PreconditionFailed, "exhaustive verifiers support universe sizes 1..4");
  FiniteUniverse u(n);
  const unsigned subsets = 1u << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  EnumerationReport report;
  report.universe_size = n;
  std::vector<Mask> members;
  for (std::uint64_t code = 0; code < families; ++code) {
    members.clear();
    for (unsigned s = 0; s < subsets; ++s)
      if (code >> s & 1u) members.push_back(s);
    SubsetFamily fam(u, members);
    if (!is_system(kind, fam).ok) continue;
    ++report.cases;
    std::string witness = check(fam);
    if (!witness.empty()) {
      ++report.failures;
      if (report.failure_witnesses.size() < 8) report.failure_witnesses.push_back(witness);
    }
  }
  return report;
}

}  // namespace

EnumerationReport verify_dynkin(int universe_size) {
  return enumerate_families(universe_size, SystemKind::PiSystem, [](const SubsetFamily& pi) {
    SubsetFamily lambda = generate(SystemKind::LambdaSystem, pi);
    SubsetFamily sigma = generate(SystemKind::SigmaAlgebra, pi);
    return lambda == sigma ? std::string() : format_family(pi);
  });
}

EnumerationReport verify_monotone_class(int universe_size) {
  return enumerate_families(universe_size, SystemKind::SetAlgebra, [](const SubsetFamily& alg) {
    SubsetFamily mono = generate(SystemKind::MonotoneClass, alg);
    SubsetFamily sigma = generate(SystemKind::SigmaAlgebra, alg);
    bool ok = mono == sigma && is_system(SystemKind::SigmaAlgebra, alg).ok;
    return ok ? std::string() : format_family(alg);
  });
}

std::string format_mask(const FiniteUniverse& universe, Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < universe.size(); ++i) {
    if (!(m >> i & 1u)) continue;
    if (!first) s += ",";
    s += universe.label(i);
    first = false;
  }
  return s + "}";
}

std::string format_family(const SubsetFamily& family) {
  std::string s = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) s += ", ";
    s += format_mask(family.universe(), family.members()[i]);
  }
  return s + "}";
}

}  // namespace measkit
