#include "rahecke/ktheory.hpp"

#include <algorithm>
#include <bit>

#include "rahecke/errors.hpp"

namespace rahecke {

std::vector<Clique> enumerate_cliques(const CoxeterSystem& sys) {
  std::vector<Clique> out{0};
  // Extend each clique only by generators larger than its maximum, so every
  // clique is produced once.
  std::vector<Clique> frontier{0};
  while (!frontier.empty()) {
    std::vector<Clique> next;
    for (Clique c : frontier) {
      std::size_t start = c == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(c));
      LetterMask allowed = sys.all_letters();
      for (GeneratorId t : letters_of(c)) allowed &= sys.commuting_mask(t);
      for (std::size_t s = start; s < sys.rank(); ++s) {
        if ((allowed >> s) & 1U) next.push_back(c | (LetterMask{1} << s));
      }
    }
    auto lex = [](Clique a, Clique b) { return letters_of(a) < letters_of(b); };
    std::sort(next.begin(), next.end(), lex);
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

namespace {

void require_iwahori(const ContextPtr& ctx) {
  if (!ctx->is_iwahori()) throw UnsupportedParameter("clique projections need Iwahori parameters");
}

bool is_clique(const CoxeterSystem& sys, Clique c) {
  for (GeneratorId s : letters_of(c)) {
    if ((c & ~(LetterMask{1} << s) & ~sys.commuting_mask(s)) != 0) return false;
  }
  return true;
}

}  // namespace

HeckeElem chi_one(const ContextPtr& ctx, GeneratorId s) {
  require_iwahori(ctx);
  const Rational& r = ctx->q_sqrt(s);
  HeckeElem out = HeckeElem::basis(ctx, ctx->system().generator(s), 1 / (r + 1 / r));
  out.add_term(Elem{}, 1 / (1 + r * r));
  return out;
}

HeckeElem projection_p(const ContextPtr& ctx, Clique c) {
  require_iwahori(ctx);
  if (!is_clique(ctx->system(), c)) throw InputError("generator set is not a clique of the commutation graph");
  HeckeElem out = HeckeElem::scalar(ctx, 1);
  for (GeneratorId s : letters_of(c)) out = mul(out, chi_one(ctx, s));
  return out;
}

ConjClassId clique_to_class(const CoxeterSystem& sys, Clique c) {
  auto letters = letters_of(c);
  return sys.conj_class_id(sys.normalize(letters));
}

Rational pairing_closed_form(const ContextPtr& ctx, Clique c, Clique d) {
  require_iwahori(ctx);
  if ((c & ~d) != 0) return 0;
  Rational v = 1;
  for (GeneratorId s : letters_of(c)) {
    const Rational& r = ctx->q_sqrt(s);
    v /= r + 1 / r;
  }
  for (GeneratorId s : letters_of(d & ~c)) {
    const Rational& r = ctx->q_sqrt(s);
    v /= 1 + r * r;
  }
  return v;
}

PairingMatrix pairing_matrix(const ContextPtr& ctx) {
  require_iwahori(ctx);
  const CoxeterSystem& sys = ctx->system();
  TraceEngine traces(ctx);
  PairingMatrix m;
  m.cliques = enumerate_cliques(sys);
  const std::size_t n = m.cliques.size();
  std::vector<ConjClassId> classes;
  for (Clique c : m.cliques) classes.push_back(clique_to_class(sys, c));
  m.entries.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    CocentreVector image = traces.cocentre_image(projection_p(ctx, m.cliques[j]));
    for (std::size_t i = 0; i < n; ++i) {
      auto it = image.find(classes[i]);
      Rational via_trace = it == image.end() ? Rational(0) : it->second;
      Rational closed = pairing_closed_form(ctx, m.cliques[i], m.cliques[j]);
      if (via_trace != closed) {
        throw TheoremCheckFailure("pairing entry (" + sys.format(classes[i].rep) + ", " +
                                  sys.format(sys.normalize(letters_of(m.cliques[j]))) + "): trace gives " +
                                  to_string(via_trace) + ", closed form gives " + to_string(closed));
      }
      m.entries[i][j] = via_trace;
    }
  }
  return m;
}

NondegeneracyReport pairing_nondegeneracy(const PairingMatrix& m) {
  NondegeneracyReport rep;
  const std::size_t n = m.cliques.size();
  rep.inclusion_triangular = true;
  rep.diagonal_nonzero = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(m.entries[i][i]) == 0) rep.diagonal_nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      bool included = (m.cliques[i] & ~m.cliques[j]) == 0;
      if (!included && sgn(m.entries[i][j]) != 0) rep.inclusion_triangular = false;
    }
  }
  rep.determinant = exact_determinant(m.entries);
  rep.nondegenerate = sgn(rep.determinant) != 0;
  return rep;
}

Rational exact_determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("determinant of a non-square matrix");
    mpz_class l = 1;
    for (const Rational& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

}  // namespace rahecke
