#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "rahecke/errors.hpp"
#include "rahecke/ktheory.hpp"
#include "rahecke/presentations.hpp"

using namespace rahecke;
namespace p = rahecke::presentations;

namespace {

std::shared_ptr<const CoxeterSystem> shared(CoxeterSystem s) { return std::make_shared<const CoxeterSystem>(std::move(s)); }

Clique mask(std::initializer_list<GeneratorId> ids) {
  Clique c = 0;
  for (GeneratorId s : ids) c |= Clique{1} << s;
  return c;
}

Rational R(const char* s) { return parse_rational(s); }

// Subset scan over all 2^rank generator sets.
std::vector<Clique> brute_cliques(const CoxeterSystem& sys) {
  std::vector<Clique> out;
  for (Clique c = 0; c < (Clique{1} << sys.rank()); ++c) {
    bool ok = true;
    for (GeneratorId s = 0; s < sys.rank(); ++s) {
      for (GeneratorId t = s + 1; t < sys.rank(); ++t) {
        if ((c >> s & 1) && (c >> t & 1) && !sys.commute(s, t)) ok = false;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

// Plain Gaussian elimination over Q with row swaps.
Rational gauss_det(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

// Sum over C inside D of prod_{C} 1/(r + 1/r) prod_{D \ C} 1/(1 + r^2) T_C.
HeckeElem closed_form_projection(const ContextPtr& ctx, Clique d) {
  const CoxeterSystem& sys = ctx->system();
  HeckeElem out(ctx);
  for (Clique c = d;; c = (c - 1) & d) {
    Rational coef = 1;
    Word w;
    for (GeneratorId s = 0; s < sys.rank(); ++s) {
      if (!(d >> s & 1)) continue;
      Rational r = ctx->q_sqrt(s);
      if (c >> s & 1) {
        coef /= r + 1 / r;
        w.push_back(s);
      } else {
        coef /= 1 + r * r;
      }
    }
    out.add_term(sys.normalize(w), coef);
    if (c == 0) break;
  }
  return out;
}

struct Fixture : ::testing::Test {
  std::shared_ptr<const CoxeterSystem> pent = shared(p::pentagon());
  std::shared_ptr<const CoxeterSystem> free3 = shared(p::free_product(3));
  std::shared_ptr<const CoxeterSystem> one = shared(CoxeterSystem::from_labels({"s"}, {}));
  std::shared_ptr<const CoxeterSystem> k2 = shared(p::complete(2));
  std::shared_ptr<const CoxeterSystem> k3 = shared(p::complete(3));
  std::shared_ptr<const CoxeterSystem> c4 = shared(p::cycle(4));

  std::vector<ContextPtr> contexts() const {
    return {ParamContext::iwahori_uniform(pent, 2),
            ParamContext::iwahori(pent, {R("2"), R("3/2"), R("2"), R("3/2"), R("2")}),
            ParamContext::iwahori_uniform(free3, R("1/3")),
            ParamContext::iwahori_uniform(one, 2),
            ParamContext::iwahori(k2, {R("2"), R("3/2")}),
            ParamContext::iwahori(k3, {R("1"), R("5/2"), R("2/7")}),
            ParamContext::iwahori_uniform(c4, R("3"))};
  }
};

}  // namespace

TEST_F(Fixture, CliqueEnumerationExamples) {
  EXPECT_EQ(enumerate_cliques(*free3), (std::vector<Clique>{0, mask({0}), mask({1}), mask({2})}));
  EXPECT_EQ(enumerate_cliques(*pent).size(), 11u);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(enumerate_cliques(p::complete(n)).size(), std::size_t{1} << n);
}

TEST_F(Fixture, CliqueEnumerationMatchesSubsetScanAndOrder) {
  for (const auto& sys : {p::pentagon(), p::cycle(4), p::cycle(6), p::path(5), p::complete(4), p::free_product(4)}) {
    auto got = enumerate_cliques(sys);
    auto want = brute_cliques(sys);
    std::sort(want.begin(), want.end(), [](Clique a, Clique b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa < pb;
      return letters_of(a) < letters_of(b);
    });
    EXPECT_EQ(got, want);
  }
}

TEST_F(Fixture, CliqueClasses) {
  EXPECT_TRUE(clique_to_class(*pent, 0).rep.is_identity());
  EXPECT_EQ(clique_to_class(*pent, mask({2})), pent->conj_class_id(pent->generator(2)));
  std::set<ConjClassId> seen;
  for (Clique c : enumerate_cliques(*pent)) {
    EXPECT_TRUE(seen.insert(clique_to_class(*pent, c)).second);
    EXPECT_EQ(clique_to_class(*pent, c).rep.length(), static_cast<std::size_t>(std::popcount(c)));
  }
}

TEST_F(Fixture, ChiOneExamples) {
  auto q1 = ParamContext::iwahori_uniform(one, 1);
  HeckeElem want1(q1);
  want1.add_term(one->generator(0), R("1/2"));
  want1.add_term(one->identity(), R("1/2"));
  EXPECT_EQ(chi_one(q1, 0), want1);

  auto q4 = ParamContext::iwahori_uniform(one, 2);
  HeckeElem want4(q4);
  want4.add_term(one->generator(0), R("2/5"));
  want4.add_term(one->identity(), R("1/5"));
  EXPECT_EQ(chi_one(q4, 0), want4);
  EXPECT_EQ(mul(want4, want4), want4);
}

TEST_F(Fixture, ChiOneIdempotentSelfAdjoint) {
  for (const auto& ctx : contexts()) {
    for (GeneratorId s = 0; s < ctx->system().rank(); ++s) {
      HeckeElem c = chi_one(ctx, s);
      EXPECT_EQ(mul(c, c), c);
      EXPECT_EQ(star(c), c);
    }
  }
}

TEST_F(Fixture, ProjectionExamples) {
  auto ctx = ParamContext::iwahori_uniform(k2, 2);
  EXPECT_EQ(projection_p(ctx, 0), HeckeElem::scalar(ctx, 1));
  HeckeElem want(ctx);
  want.add_term(k2->parse("ab"), R("4/25"));
  want.add_term(k2->parse("a"), R("2/25"));
  want.add_term(k2->parse("b"), R("2/25"));
  want.add_term(k2->identity(), R("1/25"));
  EXPECT_EQ(projection_p(ctx, mask({0, 1})), want);
  EXPECT_EQ(projection_p(ctx, mask({0})), chi_one(ctx, 0));
}

TEST_F(Fixture, ProjectionMatchesClosedFormAndIsAProjection) {
  for (const auto& ctx : contexts()) {
    for (Clique c : enumerate_cliques(ctx->system())) {
      HeckeElem pc = projection_p(ctx, c);
      EXPECT_EQ(pc, closed_form_projection(ctx, c));
      EXPECT_EQ(mul(pc, pc), pc);
      EXPECT_EQ(star(pc), pc);
    }
  }
}

TEST_F(Fixture, ProjectionOrderIndependent) {
  for (const auto& ctx : contexts()) {
    for (Clique c : enumerate_cliques(ctx->system())) {
      auto letters = letters_of(c);
      HeckeElem ref = projection_p(ctx, c);
      do {
        HeckeElem acc = HeckeElem::scalar(ctx, 1);
        for (GeneratorId s : letters) acc = mul(acc, chi_one(ctx, s));
        EXPECT_EQ(acc, ref);
      } while (std::next_permutation(letters.begin(), letters.end()));
    }
  }
}

TEST_F(Fixture, ProjectionErrors) {
  auto ctx = ParamContext::iwahori_uniform(pent, 2);
  EXPECT_THROW(projection_p(ctx, mask({0, 1, 2})), InputError);
  EXPECT_THROW(projection_p(ctx, mask({0, 2})), InputError);  // a and c do not commute on the pentagon
  auto generic = ParamContext::generic_uniform(pent, 2, 3);
  EXPECT_THROW(chi_one(generic, 0), UnsupportedParameter);
  EXPECT_THROW(projection_p(generic, mask({0})), UnsupportedParameter);
  EXPECT_THROW(pairing_matrix(generic), UnsupportedParameter);
}

TEST_F(Fixture, PairingEntryExamples) {
  auto ctx = ParamContext::iwahori_uniform(k2, 2);
  EXPECT_EQ(pairing_closed_form(ctx, 0, 0), 1);
  EXPECT_EQ(pairing_closed_form(ctx, mask({0}), mask({0, 1})), R("2/25"));
  EXPECT_EQ(pairing_closed_form(ctx, mask({0, 1}), mask({0})), 0);
  TraceEngine te(ctx);
  EXPECT_EQ(te.trace(projection_p(ctx, mask({0, 1})), clique_to_class(*k2, mask({0}))), R("2/25"));
}

TEST_F(Fixture, OneGeneratorMatrix) {
  auto ctx = ParamContext::iwahori_uniform(one, 2);
  PairingMatrix m = pairing_matrix(ctx);
  EXPECT_EQ(m.entries, (RationalMatrix{{R("1"), R("1/5")}, {R("0"), R("2/5")}}));
  auto rep = pairing_nondegeneracy(m);
  EXPECT_TRUE(rep.inclusion_triangular);
  EXPECT_TRUE(rep.diagonal_nonzero);
  EXPECT_EQ(rep.determinant, R("2/5"));
  EXPECT_TRUE(rep.nondegenerate);
}

TEST_F(Fixture, CompleteGraphMatrix) {
  auto ctx = ParamContext::iwahori(k2, {R("2"), R("3/2")});
  PairingMatrix m = pairing_matrix(ctx);
  ASSERT_EQ(m.entries.size(), 4u);
  auto rep = pairing_nondegeneracy(m);
  EXPECT_TRUE(rep.inclusion_triangular);
  EXPECT_TRUE(rep.nondegenerate);
  // 1/(r + 1/r) for r = 2 and r = 3/2.
  EXPECT_EQ(m.entries[3][3], R("2/5") * R("6/13"));
  EXPECT_EQ(rep.determinant, R("2/5") * R("6/13") * R("2/5") * R("6/13"));
}

TEST_F(Fixture, PairingPathsTriangularityAndDeterminant) {
  for (const auto& ctx : contexts()) {
    PairingMatrix m = pairing_matrix(ctx);  // throws if the two paths disagree
    TraceEngine te(ctx);
    const auto& cl = m.cliques;
    Rational diag = 1;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      for (std::size_t j = 0; j < cl.size(); ++j) {
        EXPECT_EQ(m.entries[i][j], te.trace(projection_p(ctx, cl[j]), clique_to_class(ctx->system(), cl[i])));
        if (m.entries[i][j] != 0) EXPECT_EQ(cl[i] & ~cl[j], 0u);
      }
      Rational expect_diag = 1;
      for (GeneratorId s : letters_of(cl[i])) expect_diag /= ctx->q_sqrt(s) + 1 / ctx->q_sqrt(s);
      EXPECT_EQ(m.entries[i][i], expect_diag);
      diag *= expect_diag;
    }
    auto rep = pairing_nondegeneracy(m);
    EXPECT_TRUE(rep.nondegenerate);
    EXPECT_EQ(rep.determinant, gauss_det(m.entries));
    EXPECT_EQ(rep.determinant, diag);
  }
}

TEST_F(Fixture, PentagonDeterminantNonzero) {
  auto ctx = ParamContext::iwahori_uniform(pent, 2);
  auto rep = pairing_nondegeneracy(pairing_matrix(ctx));
  EXPECT_EQ(pairing_matrix(ctx).entries.size(), 11u);
  EXPECT_NE(rep.determinant, 0);
  EXPECT_TRUE(rep.nondegenerate);
}

TEST_F(Fixture, ExactDeterminantVsGauss) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      RationalMatrix m(n, std::vector<Rational>(n));
      for (auto& row : m) {
        for (auto& x : row) x = (rng() % 3 == 0) ? Rational(0) : oracle::small_rational(rng);
      }
      EXPECT_EQ(exact_determinant(m), gauss_det(m));
    }
  }
  RationalMatrix singular{{R("1/2"), R("1")}, {R("1"), R("2")}};
  EXPECT_EQ(exact_determinant(singular), 0);
  EXPECT_EQ(exact_determinant({}), 1);
  EXPECT_THROW(exact_determinant({{R("1"), R("2")}}), InputError);
}

TEST_F(Fixture, NondegeneracyDetectsBadMatrices) {
  PairingMatrix m{{0, 1}, {{R("1"), R("1/5")}, {R("1/3"), R("2/5")}}};
  EXPECT_FALSE(pairing_nondegeneracy(m).inclusion_triangular);
  PairingMatrix z{{0, 1}, {{R("1"), R("1/5")}, {R("0"), R("0")}}};
  auto rep = pairing_nondegeneracy(z);
  EXPECT_FALSE(rep.diagonal_nonzero);
  EXPECT_FALSE(rep.nondegenerate);
}

TEST_F(Fixture, InfiniteOrderClassesVanishOnProjections) {
  auto ctx = ParamContext::iwahori_uniform(pent, 2);
  TraceEngine te(ctx);
  for (Clique c : enumerate_cliques(*pent)) {
    for (const auto& [cls, v] : te.cocentre_image(projection_p(ctx, c))) {
      EXPECT_LE(cls.rep.length(), 2u);
      EXPECT_NE(v, 0);
    }
  }
}
