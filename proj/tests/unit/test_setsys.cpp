#include <doctest.h>

#include "measkit/setsys.hpp"
#include "measkit/error.hpp"
#include "../support/oracles.hpp"

using namespace measkit;

namespace {

oracle::Kind to_oracle(SystemKind k) {
  switch (k) {
    case SystemKind::PiSystem: return oracle::Kind::Pi;
    case SystemKind::SetAlgebra: return oracle::Kind::Algebra;
    case SystemKind::LambdaSystem: return oracle::Kind::Lambda;
    case SystemKind::MonotoneClass: return oracle::Kind::Monotone;
    case SystemKind::SigmaAlgebra: return oracle::Kind::Sigma;
  }
  return oracle::Kind::Sigma;
}

const SystemKind kAllKinds[] = {SystemKind::PiSystem, SystemKind::SetAlgebra, SystemKind::LambdaSystem,
                                SystemKind::MonotoneClass, SystemKind::SigmaAlgebra};

SubsetFamily family(int n, oracle::FamilyBits bits) {
  std::vector<Mask> ms;
  for (auto s : oracle::members(bits, n)) ms.push_back(s);
  return SubsetFamily(FiniteUniverse(n), ms);
}

}  // namespace

TEST_CASE("subset families are sorted and deduplicated") {
  SubsetFamily f(FiniteUniverse(3), {5, 1, 5, 0});
  CHECK(f.members() == std::vector<Mask>{0, 1, 5});
  CHECK(f.contains(5));
  CHECK_FALSE(f.contains(2));
  CHECK_THROWS_AS(SubsetFamily(FiniteUniverse(2), {4}), Error);
  CHECK(SubsetFamily::power_set(FiniteUniverse(3)).size() == 8);
}

TEST_CASE("system predicates agree with the bitset oracle on every family of a 3-point set") {
  for (oracle::FamilyBits bits = 0; bits < 256; ++bits) {
    SubsetFamily f = family(3, bits);
    for (SystemKind k : kAllKinds) {
      bool expected = oracle::closed(bits, 3, to_oracle(k));
      SystemCheck c = is_system(k, f);
      CHECK_MESSAGE(c.ok == expected, system_kind_name(k), " on ", format_family(f));
      if (!c.ok) CHECK_FALSE(c.violated_axiom.empty());
    }
  }
}

TEST_CASE("generated families equal the intersection of all qualifying families") {
  for (int n = 1; n <= 3; ++n) {
    const oracle::FamilyBits all = (oracle::FamilyBits{1} << (1 << n)) - 1;
    for (oracle::FamilyBits g = 0; g <= all; ++g) {
      for (SystemKind k : kAllKinds) {
        if (k == SystemKind::PiSystem && g == 0) continue;
        SubsetFamily out = generate(k, family(n, g));
        CHECK(out == family(n, oracle::brute_generated(g, n, to_oracle(k))));
      }
    }
  }
}

TEST_CASE("generated families are fixpoints and match the saturation oracle on five points") {
  oracle::Rng rng(485);
  for (int i = 0; i < 60; ++i) {
    oracle::FamilyBits g = 0;
    int count = static_cast<int>(rng.range(1, 4));
    for (int j = 0; j < count; ++j) g |= oracle::FamilyBits{1} << rng.range(0, 31);
    for (SystemKind k : kAllKinds) {
      SubsetFamily out = generate(k, family(5, g));
      CHECK(out == family(5, oracle::naive_closure(g, 5, to_oracle(k))));
      CHECK(generate(k, out) == out);
      CHECK(is_system(k, out).ok);
    }
  }
}

TEST_CASE("an empty generator family has no generated pi-system") {
  try {
    (void)generate(SystemKind::PiSystem, SubsetFamily(FiniteUniverse(2), {}));
    FAIL("expected EmptyGenerators");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyGenerators);
  }
  CHECK(generate(SystemKind::SigmaAlgebra, SubsetFamily(FiniteUniverse(2), {})).members() ==
        std::vector<Mask>{0, 3});
}

TEST_CASE("one generator on three points gives a four-member sigma-algebra") {
  SubsetFamily s = generate(SystemKind::SigmaAlgebra, SubsetFamily(FiniteUniverse(3), {0b001}));
  CHECK(s.members() == std::vector<Mask>{0b000, 0b001, 0b110, 0b111});
}

TEST_CASE("disjointify keeps unions and makes parts disjoint") {
  oracle::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Mask> sets;
    for (int j = 0; j < 5; ++j) sets.push_back(static_cast<Mask>(rng.range(0, 63)));
    std::vector<Mask> d = disjointify(sets);
    REQUIRE(d.size() == sets.size());
    Mask u1 = 0, u2 = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      CHECK((d[j] & ~sets[j]) == 0);
      CHECK((d[j] & u2) == 0);
      u1 |= sets[j];
      u2 |= d[j];
      CHECK(u1 == u2);
    }
  }
}

TEST_CASE("explicit algebra of a semi-ring") {
  SubsetFamily g(FiniteUniverse(4), {0b0000, 0b1111, 0b0001, 0b0010, 0b1100});
  SubsetFamily alg = explicit_algebra(g);
  CHECK(is_system(SystemKind::SetAlgebra, alg).ok);
  CHECK(alg == generate(SystemKind::SetAlgebra, g));
  CHECK(alg.size() == 8);
}

TEST_CASE("atoms, traces and products") {
  SubsetFamily s = generate(SystemKind::SigmaAlgebra, SubsetFamily(FiniteUniverse(4), {0b0011, 0b0100}));
  CHECK(atoms(s) == std::vector<Mask>{0b0011, 0b0100, 0b1000});
  CHECK(compress_mask(0b1010, 0b1110) == 0b101);
  CHECK(expand_mask(0b101, 0b1110) == 0b1010);
  SubsetFamily t = trace_family(s, 0b0110);
  CHECK(t.universe().size() == 2);
  CHECK(t.members() == std::vector<Mask>{0, 1, 2, 3});

  FiniteUniverse a(std::vector<std::string>{"x", "y"});
  FiniteUniverse b(std::vector<std::string>{"p", "q", "r"});
  FiniteUniverse ab = product_universe(a, b);
  CHECK(ab.size() == 6);
  CHECK(ab.label(4) == "(y,q)");
  Mask r = rectangle(a, b, 0b10, 0b101);
  CHECK(r == ((Mask{1} << 3) | (Mask{1} << 5)));
  SubsetFamily ps = product_sigma(SubsetFamily::power_set(a), SubsetFamily::power_set(b));
  CHECK(ps.size() == 64);
}

TEST_CASE("enumeration reports for the pi-lambda and monotone class theorems") {
  for (int n = 1; n <= 3; ++n) {
    EnumerationReport d = verify_dynkin(n);
    CHECK(d.failures == 0);
    std::size_t expected = 0;
    const oracle::FamilyBits all = (oracle::FamilyBits{1} << (1 << n)) - 1;
    for (oracle::FamilyBits f = 1; f <= all; ++f)
      if (oracle::closed(f, n, oracle::Kind::Pi)) ++expected;
    CHECK(d.cases == expected);
    EnumerationReport m = verify_monotone_class(n);
    CHECK(m.failures == 0);
  }
  CHECK(verify_monotone_class(3).cases == 5);
}

TEST_CASE("format helpers use labels") {
  FiniteUniverse u(std::vector<std::string>{"a", "b", "c"});
  CHECK(format_mask(u, 0b101) == "{a,c}");
  CHECK(format_mask(u, 0) == "{}");
}
