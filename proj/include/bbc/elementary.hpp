#pragma once

#include "bbc/crystal.hpp"

namespace bbc {

// The elementary crystal B_i. Carrier depends on the class of i:
// real: counters (l), l >= 0; imaginary non-isotropic: compositions;
// isotropic: partitions.
class ElementaryCrystal final : public Crystal {
 public:
  ElementaryCrystal(DatumPtr datum, int index);

  int index() const { return index_; }
  // (0)_i, the highest weight element of B_i.
  Elem identity() const;

  Weight wt(const Elem& b) const override;
  ExtInt eps(int i, const Elem& b) const override;
  ExtInt phi(int i, const Elem& b) const override;
  std::optional<Elem> e(int i, long long l, const Elem& b) const override;
  std::optional<Elem> f(int i, long long l, const Elem& b) const override;
  std::string describe() const override;

 private:
  void check_carrier(const Elem& b) const;
  int index_;
};

// T_lambda = { t_lambda }: shifts weights by lambda, annihilated by all
// operators, eps = phi = -inf.
class ShiftCrystal final : public Crystal {
 public:
  ShiftCrystal(DatumPtr datum, Weight lambda);

  const Weight& lambda() const { return lambda_; }
  Elem token() const { return Elem::t_token(lambda_); }

  Weight wt(const Elem& b) const override;
  ExtInt eps(int i, const Elem& b) const override;
  ExtInt phi(int i, const Elem& b) const override;
  std::optional<Elem> e(int i, long long l, const Elem& b) const override;
  std::optional<Elem> f(int i, long long l, const Elem& b) const override;
  std::string describe() const override;

 private:
  Weight lambda_;
};

// C = { c }: wt = 0, eps = phi = 0, all operators vanish. Tensoring with C
// on the right cuts lowering off at phi = 0.
class CutoffCrystal final : public Crystal {
 public:
  explicit CutoffCrystal(DatumPtr datum);

  Elem token() const { return Elem::c_token(); }

  Weight wt(const Elem& b) const override;
  ExtInt eps(int i, const Elem& b) const override;
  ExtInt phi(int i, const Elem& b) const override;
  std::optional<Elem> e(int i, long long l, const Elem& b) const override;
  std::optional<Elem> f(int i, long long l, const Elem& b) const override;
  std::string describe() const override;
};

std::shared_ptr<const ElementaryCrystal> elementary(DatumPtr datum, int index);
std::shared_ptr<const ShiftCrystal> shift_crystal(DatumPtr datum, Weight lambda);
std::shared_ptr<const CutoffCrystal> cutoff_crystal(DatumPtr datum);

}  // namespace bbc
