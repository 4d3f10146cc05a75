#include "regal/gadget.hpp"

#include <algorithm>

#include "regal/errors.hpp"
#include "regal/qfactor.hpp"

namespace regal {

TrinomialGadget make_gadget(const Rat& y) {
  TrinomialGadget g;
  g.y = y;
  BiPoly X = BiPoly::X();
  BiPoly a = BiPoly::T() - BiPoly({QPoly::constant(y)});  // T - y
  g.poly = X * X * X + a * X + a;

  // symbolic discriminant identity
  g.disc = bipoly_discriminant_X(g.poly);
  QPoly ty = QPoly::variable() - QPoly::constant(y);
  QPoly expect = -(ty * ty * (ty * rat(4) + QPoly::constant(rat(27))));
  if (g.disc != expect)
    fail("InternalError", "trinomial discriminant identity failed");

  // separability over Q(T): disc is a nonzero polynomial
  if (g.disc.is_zero()) fail("InternalError", "trinomial family inseparable");

  // irreducibility witness over Q(T)
  auto w = is_irreducible_over_QT(g.poly);
  if (!w.irreducible || !w.witness_t)
    fail("InternalError", "trinomial gadget unexpectedly reducible");
  g.irreducibility_witness = *w.witness_t;

  // Galois group S3: disc is a non-square in Q(T) because the factor
  // 4(T-y)+27 occurs with odd multiplicity
  auto parts = squarefree_decomposition(g.disc);
  bool odd_part = false;
  for (const auto& [p, m] : parts)
    if (m % 2 == 1 && p.degree() >= 1) odd_part = true;
  if (!odd_part) fail("InternalError", "trinomial discriminant is a square");
  g.s3_certified = true;
  return g;
}

std::vector<Rat> branch_points(const TrinomialGadget& g) {
  // disc = -(T-y)^2 (4(T-y)+27): roots y and y - 27/4
  std::vector<Rat> pts = {g.y, g.y - rat(27, 4)};
  // cross-check against the actual polynomial roots
  for (const Rat& p : pts)
    if (g.disc.eval(p) != 0) fail("InternalError", "branch point is not a disc root");
  std::sort(pts.begin(), pts.end());
  return pts;
}

DistinctnessCertificate gadget_distinctness(const Rat& y1, const Rat& y2) {
  if (y1 == y2) fail("EqualParameters", "distinctness needs y1 != y2");
  TrinomialGadget g1 = make_gadget(y1), g2 = make_gadget(y2);
  DistinctnessCertificate cert;
  cert.loci1 = branch_points(g1);
  cert.loci2 = branch_points(g2);
  if (cert.loci1 != cert.loci2) {
    cert.distinct = true;
    cert.method = "branch-loci";
    return cert;
  }
  // same branch loci: separate by a specialization where exactly one cubic
  // is irreducible over Q
  for (std::size_t i = 0; i < 400; ++i) {
    Rat t = Rat(canonical_int(i));
    QPoly f1 = g1.poly.eval_T(t), f2 = g2.poly.eval_T(t);
    if (f1.degree() != 3 || f2.degree() != 3) continue;
    bool i1 = is_irreducible_over_Q(f1), i2 = is_irreducible_over_Q(f2);
    if (i1 != i2) {
      cert.distinct = true;
      cert.method = "specialization";
      cert.witness_t = t;
      return cert;
    }
  }
  fail("BudgetExhausted", "no distinctness certificate found within budget");
}

}  // namespace regal
