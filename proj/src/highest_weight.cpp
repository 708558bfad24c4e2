#include "bbc/highest_weight.hpp"

#include <unordered_map>

#include "bbc/elementary.hpp"

namespace bbc {

BLambdaModel blambda_model(DatumPtr datum, const std::vector<int>& base, Weight lambda) {
  if (auto bad = datum->dominance_violation(lambda))
    throw NotDominantError("weight " + lambda.repr(*datum) + " is not dominant: <h_" + datum->name(*bad) +
                               ", lambda> < 0",
                           *bad);
  BLambdaModel M;
  M.datum = datum;
  M.binfty = sequence_crystal(datum, base);
  auto T = shift_crystal(datum, lambda);
  auto C = cutoff_crystal(datum);
  M.structure = tensor(tensor(M.binfty, T), C);
  M.top = Elem::pair(Elem::pair(M.binfty->vacuum(), T->token()), C->token());
  M.lambda = std::move(lambda);
  return M;
}

LabelledGraph build_blambda(const BLambdaModel& M, long long budget) {
  return explore(*M.structure, {M.top}, budget);
}

std::optional<Elem> pi_lambda_map(const Elem& b) { return b.left().left(); }

PiLambdaReport pi_lambda(const BLambdaModel& M, const LabelledGraph& G_lambda, const SeqCrystal& S_inf,
                         const LabelledGraph& G_inf) {
  PiLambdaReport report;
  const CartanDatum& d = *M.datum;
  const Crystal& S_l = *M.structure;

  report.top_to_vacuum = *pi_lambda_map(M.top) == S_inf.vacuum();

  std::unordered_map<Elem, Elem, ElemHash> image_seen;
  for (const auto& node : G_lambda.nodes) {
    const Elem& b = node.elem;
    const Elem p = *pi_lambda_map(b);

    if (!G_inf.contains(p)) report.image_missing.push_back(b.repr(d) + " -> " + p.repr(d));
    auto [it, inserted] = image_seen.emplace(p, b);
    if (!inserted)
      report.injectivity.push_back(b.repr(d) + " and " + it->second.repr(d) + " share image " + p.repr(d));

    // (iv) wt(pi b) = wt(b) - lambda, eps preserved.
    if (S_inf.wt(p) != node.wt - M.lambda)
      report.wt_shift.push_back(b.repr(d) + ": wt " + S_inf.wt(p).repr(d) + " vs " +
                                (node.wt - M.lambda).repr(d));
    for (int i = 0; i < d.rank(); ++i)
      if (S_inf.eps(i, p) != node.eps[static_cast<size_t>(i)])
        report.eps_mismatch.push_back(b.repr(d) + ": eps_" + d.name(i) + " " + S_inf.eps(i, p).str() + " vs " +
                                      node.eps[static_cast<size_t>(i)].str());

    for (const auto& [i, l] : d.operators(G_lambda.budget)) {
      std::string tag = "(" + d.name(i) + "," + std::to_string(l) + ") at " + b.repr(d);
      // (ii) pi(f b) = f(pi b) whenever f(b) != 0 in B(lambda).
      auto fb = S_l.f(i, l, b);
      if (fb) {
        auto fp = S_inf.f(i, l, p);
        if (!fp || !(*pi_lambda_map(*fb) == *fp)) report.f_commute.push_back(tag);
      }
      // (iii) pi(e b) = e(pi b) with null propagation on both sides.
      auto eb = S_l.e(i, l, b);
      auto ep = S_inf.e(i, l, p);
      if (eb.has_value() != ep.has_value())
        report.e_commute.push_back(tag + (eb ? ": non-null vs null" : ": null vs non-null"));
      else if (eb && !(*pi_lambda_map(*eb) == *ep))
        report.e_commute.push_back(tag + ": images disagree");
    }
  }
  return report;
}

SumEmbeddingReport hw_sum_embedding(DatumPtr datum, const std::vector<int>& base, const Weight& lambda,
                                    const Weight& mu, long long budget) {
  SumEmbeddingReport report;
  BLambdaModel M_sum = blambda_model(datum, base, lambda + mu);
  BLambdaModel M_l = blambda_model(datum, base, lambda);
  BLambdaModel M_m = blambda_model(datum, base, mu);

  LabelledGraph G_sum = build_blambda(M_sum, budget);
  auto S_pair = tensor(M_l.structure, M_m.structure);
  LabelledGraph G_pair = explore(*S_pair, {Elem::pair(M_l.top, M_m.top)}, budget);

  report.iso = sync_isomorphism(*M_sum.structure, G_sum, *S_pair, G_pair);

  auto lookup = [fwd = &report.iso.fwd](const Elem& x) -> std::optional<Elem> {
    auto it = fwd->find(x);
    if (it == fwd->end()) return std::nullopt;
    return it->second;
  };
  report.morphism = check_strict_morphism(lookup, *M_sum.structure, G_sum, *S_pair, &G_pair);
  return report;
}

}  // namespace bbc
