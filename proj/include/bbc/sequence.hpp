#pragma once

#include "bbc/checks.hpp"
#include "bbc/crystal.hpp"
#include "bbc/graph.hpp"

namespace bbc {

// The infinite index sequence (i_1, i_2, ...) described by a finite base
// repeated cyclically. Every index of the datum must occur in the base, so
// each occurs infinitely often in the sequence.
class IndexSequence {
 public:
  IndexSequence(const CartanDatum& d, std::vector<int> base);

  int at(long long k) const;  // k >= 1
  const std::vector<int>& base() const { return base_; }
  // Rotation starting at the first occurrence of i.
  IndexSequence rotated_to(const CartanDatum& d, int i) const;
  // The sequence with position 1 dropped; base rotates by one.
  IndexSequence shifted(const CartanDatum& d) const;

 private:
  std::vector<int> base_;
};

// The sequence crystal: elements are finitely supported sequences of
// elementary elements, position k living in B_{i_k}. B(inf) is realized as
// the connected component of the vacuum.
class SeqCrystal final : public Crystal {
 public:
  SeqCrystal(DatumPtr datum, IndexSequence seq);

  const IndexSequence& sequence() const { return seq_; }
  // (0)_i: every position trivial.
  Elem vacuum() const { return Elem::seq({}); }
  // Builds a canonical element from (position, entry) support pairs;
  // validates that each entry matches the kind and home of its position.
  Elem make(const std::vector<std::pair<long long, Elem>>& support) const;

  Weight wt(const Elem& b) const override;
  ExtInt eps(int i, const Elem& b) const override;
  ExtInt phi(int i, const Elem& b) const override;
  std::optional<Elem> e(int i, long long l, const Elem& b) const override;
  std::optional<Elem> f(int i, long long l, const Elem& b) const override;
  std::string describe() const override;

 private:
  long long first_beyond(long long n, int i) const;
  // Smallest position k with i_k = i whose tail sum vanishes (imaginary i).
  long long select_insert_position(int i, const std::vector<Elem>& entries) const;
  Elem entry_at(long long k, const std::vector<Elem>& entries) const;

  IndexSequence seq_;
};

std::shared_ptr<const SeqCrystal> sequence_crystal(DatumPtr datum, std::vector<int> base);

// The component of the vacuum explored downward; this is the B(inf)
// truncation (raising closure adds nothing above a highest weight element).
LabelledGraph build_binfty(const SeqCrystal& S, long long budget);

// Realizes the crystal embedding B(inf) -> B(inf) (x) B_i by detaching the
// position-1 component after rotating the sequence to start at i, and runs
// the strict-morphism checks against the generic tensor structure.
struct PsiReport {
  MorphismReport morphism;
  bool vacuum_image_ok = false;
  bool ok() const { return vacuum_image_ok && morphism.embedding_ok(); }
};

PsiReport psi_embedding(DatumPtr datum, const std::vector<int>& base, int i, long long budget);

// Label-synchronized comparison of the vacuum components over two different
// sequences; executable content of the uniqueness of B(inf).
IsoReport sequence_independence(DatumPtr datum, const std::vector<int>& base1, const std::vector<int>& base2,
                                long long budget);

}  // namespace bbc
