#pragma once

#include "bbc/sequence.hpp"
#include "bbc/tensor.hpp"

namespace bbc {

// B(lambda) realized as the connected component of the vacuum tensor
// (0)_i (x) t_lambda (x) c inside B(inf) (x) T_lambda (x) C, bracketed as
// (B(inf) (x) T_lambda) (x) C.
struct BLambdaModel {
  DatumPtr datum;
  std::shared_ptr<const SeqCrystal> binfty;
  CrystalPtr structure;
  Elem top;  // the highest weight element v_lambda
  Weight lambda;
};

// Throws NotDominantError when lambda is not dominant.
BLambdaModel blambda_model(DatumPtr datum, const std::vector<int>& base, Weight lambda);

LabelledGraph build_blambda(const BLambdaModel& M, long long budget);

// The projection b = b_inf (x) t_lambda (x) c -> b_inf and its expected
// behaviour: the top maps to the vacuum, it commutes with f wherever
// f(b) != 0, it commutes with e with null propagation, it shifts wt by
// -lambda while preserving eps, and it is injective.
struct PiLambdaReport {
  bool top_to_vacuum = false;
  std::vector<std::string> f_commute;    // clause (ii)
  std::vector<std::string> e_commute;    // clause (iii)
  std::vector<std::string> wt_shift;     // clause (iv), weights
  std::vector<std::string> eps_mismatch; // clause (iv), eps
  std::vector<std::string> injectivity;
  std::vector<std::string> image_missing;
  bool ok() const {
    return top_to_vacuum && f_commute.empty() && e_commute.empty() && wt_shift.empty() &&
           eps_mismatch.empty() && injectivity.empty() && image_missing.empty();
  }
};

PiLambdaReport pi_lambda(const BLambdaModel& M, const LabelledGraph& G_lambda, const SeqCrystal& S_inf,
                         const LabelledGraph& G_inf);

// The projection underlying pi_lambda, usable as an ElemMap.
std::optional<Elem> pi_lambda_map(const Elem& b);

// Checks that B(lambda + mu) is carried onto the component of
// v_lambda (x) v_mu inside B(lambda) (x) B(mu) by the synchronized
// traversal, and that the resulting bijection is a strict embedding.
struct SumEmbeddingReport {
  IsoReport iso;
  MorphismReport morphism;
  bool ok() const { return iso.ok() && morphism.embedding_ok(); }
};

SumEmbeddingReport hw_sum_embedding(DatumPtr datum, const std::vector<int>& base, const Weight& lambda,
                                    const Weight& mu, long long budget);

}  // namespace bbc
