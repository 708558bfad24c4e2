#include "doctest.h"

#include "bbc/highest_weight.hpp"
#include "test_data.hpp"

using namespace bbc;

TEST_CASE("the highest weight component of a rank-1 real datum is a chain") {
  auto d = testdata::rank1_real();
  BLambdaModel M = blambda_model(d, {0}, Weight::fundamental(0, 2));
  LabelledGraph G = build_blambda(M, 4);
  CHECK(G.nodes.size() == 3);
  CHECK(G.edges.size() == 2);

  auto hw = highest_weight_elements(*M.structure, G);
  REQUIRE(hw.size() == 1);
  CHECK(hw.front() == M.top);
  CHECK(weight_multiplicities(G)[Weight::fundamental(0, 2)] == 1);
  CHECK(check_axioms(*M.structure, G).ok());
}

TEST_CASE("an isotropic highest weight with zero pairing dies immediately") {
  auto d = testdata::rank1_iso();
  BLambdaModel M = blambda_model(d, {0}, Weight());
  LabelledGraph G = build_blambda(M, 4);
  CHECK(G.nodes.size() == 1);
  CHECK(G.edges.empty());
}

TEST_CASE("budget zero keeps only the top") {
  auto d = testdata::a2();
  BLambdaModel M = blambda_model(d, testdata::natural_base(d), Weight::fundamental(0) + Weight::fundamental(1));
  CHECK(build_blambda(M, 0).nodes.size() == 1);
}

TEST_CASE("non-dominant weights are rejected with the violating index") {
  auto d = testdata::a2();
  try {
    blambda_model(d, testdata::natural_base(d), Weight::fundamental(0) - Weight::fundamental(1, 2));
    FAIL("expected NotDominantError");
  } catch (const NotDominantError& ex) {
    CHECK(ex.index() == 1);
  }
}

TEST_CASE("rank-1 real component sizes are pairing plus one") {
  auto d = testdata::rank1_real();
  for (long long n = 0; n <= 5; ++n) {
    BLambdaModel M = blambda_model(d, {0}, Weight::fundamental(0, n));
    LabelledGraph G = build_blambda(M, n == 0 ? 1 : n);
    CHECK(static_cast<long long>(G.nodes.size()) == n + 1);
  }
}

TEST_CASE("rank-2 type A component sizes match the closed-form dimensions") {
  auto d = testdata::a2();
  // dim V(a,b) = (a+1)(b+1)(a+b+2)/2; the lowest weight sits at depth 2(a+b).
  auto dim = [](long long a, long long b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; };
  for (auto [a, b] : std::vector<std::pair<long long, long long>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}, {2, 2}}) {
    BLambdaModel M =
        blambda_model(d, testdata::natural_base(d), Weight::fundamental(0, a) + Weight::fundamental(1, b));
    LabelledGraph G = build_blambda(M, 2 * (a + b));
    CAPTURE(a);
    CAPTURE(b);
    CHECK(static_cast<long long>(G.nodes.size()) == dim(a, b));
  }
}

TEST_CASE("the projection to the vacuum component satisfies all clauses") {
  SUBCASE("rank-1 real, pairing 2") {
    auto d = testdata::rank1_real();
    BLambdaModel M = blambda_model(d, {0}, Weight::fundamental(0, 2));
    LabelledGraph Gl = build_blambda(M, 4);
    LabelledGraph Ginf = build_binfty(*M.binfty, 4);
    PiLambdaReport r = pi_lambda(M, Gl, *M.binfty, Ginf);
    CHECK(r.ok());
    CHECK(r.top_to_vacuum);

    // The images are the first three chain nodes.
    for (long long k = 0; k <= 2; ++k) {
      Elem image = M.binfty->make(k == 0 ? std::vector<std::pair<long long, Elem>>{}
                                         : std::vector<std::pair<long long, Elem>>{{1, Elem::real(0, k)}});
      CHECK(Ginf.contains(image));
    }

    // At the bottom of the chain f vanishes in B(lambda) but not in the
    // vacuum component; clause (ii) is conditional, so the report is clean.
    Elem bottom = Elem::pair(Elem::pair(M.binfty->make({{1, Elem::real(0, 2)}}), Elem::t_token(M.lambda)),
                             Elem::c_token());
    REQUIRE(Gl.contains(bottom));
    CHECK_FALSE(M.structure->f(0, 1, bottom).has_value());
    CHECK(M.binfty->f(0, 1, *pi_lambda_map(bottom)).has_value());
  }
  SUBCASE("rank-2 type A") {
    auto d = testdata::a2();
    BLambdaModel M =
        blambda_model(d, testdata::natural_base(d), Weight::fundamental(0) + Weight::fundamental(1));
    LabelledGraph Gl = build_blambda(M, 4);
    LabelledGraph Ginf = build_binfty(*M.binfty, 4);
    CHECK(pi_lambda(M, Gl, *M.binfty, Ginf).ok());
  }
  SUBCASE("mixed real/isotropic") {
    auto d = testdata::mixed_ri();
    BLambdaModel M =
        blambda_model(d, testdata::natural_base(d), Weight::fundamental(0) + Weight::fundamental(1, 2));
    LabelledGraph Gl = build_blambda(M, 4);
    LabelledGraph Ginf = build_binfty(*M.binfty, 4);
    CHECK(pi_lambda(M, Gl, *M.binfty, Ginf).ok());
  }
  SUBCASE("rank-3 mixed") {
    auto d = testdata::rank3_mixed();
    BLambdaModel M = blambda_model(
        d, testdata::natural_base(d),
        Weight::fundamental(0) + Weight::fundamental(1) + Weight::fundamental(2));
    LabelledGraph Gl = build_blambda(M, 4);
    LabelledGraph Ginf = build_binfty(*M.binfty, 4);
    CHECK(pi_lambda(M, Gl, *M.binfty, Ginf).ok());
  }
}

TEST_CASE("the projection is not a crystal embedding: the weight shifts") {
  auto d = testdata::a2();
  BLambdaModel M = blambda_model(d, testdata::natural_base(d), Weight::fundamental(0));
  LabelledGraph Gl = build_blambda(M, 3);
  LabelledGraph Ginf = build_binfty(*M.binfty, 3);
  MorphismReport r = check_strict_morphism(pi_lambda_map, *M.structure, Gl, *M.binfty, &Ginf);
  CHECK_FALSE(r.wt_mismatch.empty());
  CHECK(r.injective());
}

TEST_CASE("B(lambda+mu) embeds as the component of the tensor of tops") {
  SUBCASE("rank-1 real, pairings 1 and 1") {
    auto d = testdata::rank1_real();
    SumEmbeddingReport r = hw_sum_embedding(d, {0}, Weight::fundamental(0), Weight::fundamental(0), 3);
    CHECK(r.ok());
    CHECK(r.iso.fwd.size() == 3);

    // The full tensor square has a fourth element outside the component.
    BLambdaModel Ml = blambda_model(d, {0}, Weight::fundamental(0));
    auto S_pair = tensor(Ml.structure, Ml.structure);
    LabelledGraph G_pair = explore(*S_pair, {Elem::pair(Ml.top, Ml.top)}, 3);
    Elem lowered_top = *Ml.structure->f(0, 1, Ml.top);
    CHECK_FALSE(G_pair.contains(Elem::pair(Ml.top, lowered_top)));
  }
  SUBCASE("rank-2 type A, fundamental weights") {
    auto d = testdata::a2();
    SumEmbeddingReport r = hw_sum_embedding(d, testdata::natural_base(d), Weight::fundamental(0),
                                            Weight::fundamental(1), 4);
    CHECK(r.ok());

    // The tensor of tops is a highest weight element of the product window.
    BLambdaModel Ml = blambda_model(d, testdata::natural_base(d), Weight::fundamental(0));
    BLambdaModel Mm = blambda_model(d, testdata::natural_base(d), Weight::fundamental(1));
    auto S_pair = tensor(Ml.structure, Mm.structure);
    Elem seed = Elem::pair(Ml.top, Mm.top);
    LabelledGraph G_pair = explore(*S_pair, {seed}, 3);
    auto hw = highest_weight_elements(*S_pair, G_pair);
    bool found = false;
    for (const auto& x : hw) found |= (x == seed);
    CHECK(found);
    CHECK(weight_multiplicities(G_pair)[Weight::fundamental(0) + Weight::fundamental(1)] == 1);
  }
  SUBCASE("mixed real/isotropic") {
    auto d = testdata::mixed_ri();
    SumEmbeddingReport r = hw_sum_embedding(d, testdata::natural_base(d),
                                            Weight::fundamental(0) + Weight::fundamental(1),
                                            Weight::fundamental(1), 4);
    CHECK(r.ok());
  }
  SUBCASE("zero left factor") {
    auto d = testdata::mixed_ri();
    SumEmbeddingReport r =
        hw_sum_embedding(d, testdata::natural_base(d), Weight(),
                         Weight::fundamental(0) + Weight::fundamental(1), 3);
    CHECK(r.ok());
  }
}

TEST_CASE("the integrability cutoff emerges from the tensor rules") {
  for (const auto& d : {testdata::mixed_ri(), testdata::rank3_mixed()}) {
    Weight lambda;
    bool has_noniso = false;
    for (int i = 0; i < d->rank(); ++i) {
      lambda += Weight::fundamental(i, 2);
      has_noniso |= d->classify(i) == IndexClass::ImaginaryNonIsotropic;
    }
    BLambdaModel M = blambda_model(d, testdata::natural_base(d), lambda);
    LabelledGraph G = build_blambda(M, 4);
    CHECK(is_normal(*M.structure, G).normal);
    int asserted = 0;
    for (const auto& node : G.nodes) {
      for (int i = 0; i < d->rank(); ++i) {
        if (!d->imaginary(i)) continue;
        if (M.structure->eps(i, node.elem) != ExtInt(0)) continue;
        long long pairing = d->pairing(i, node.wt);
        for (long long l = 1; l <= 4; ++l) {
          if (0 < pairing && pairing <= -l * d->a(i, i)) {
            CAPTURE(node.elem.repr(*d));
            CHECK_FALSE(M.structure->e(i, l, node.elem).has_value());
            ++asserted;
          }
        }
      }
    }
    // The band 0 < <h_i,wt> <= -l a_ii is empty for isotropic indices.
    if (has_noniso) CHECK(asserted > 0);
  }
}

TEST_CASE("explored highest weight components satisfy the axioms and stay connected") {
  for (const auto& d : {testdata::a2(), testdata::mixed_ri(), testdata::rank3_mixed()}) {
    Weight lambda;
    for (int i = 0; i < d->rank(); ++i) lambda += Weight::fundamental(i);
    BLambdaModel M = blambda_model(d, testdata::natural_base(d), lambda);
    LabelledGraph G = build_blambda(M, 3);
    CHECK(check_axioms(*M.structure, G).ok());
    auto hw = highest_weight_elements(*M.structure, G);
    REQUIRE(hw.size() == 1);
    CHECK(hw.front() == M.top);
    CHECK(weight_multiplicities(G)[lambda] == 1);
  }
}
