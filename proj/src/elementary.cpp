#include "bbc/elementary.hpp"

#include <algorithm>
#include <cassert>

namespace bbc {

ElementaryCrystal::ElementaryCrystal(DatumPtr datum, int index) : Crystal(std::move(datum)), index_(index) {
  this->datum().classify(index_);  // throws UnknownIndexError for bad positions
}

Elem ElementaryCrystal::identity() const { return trivial_elem(datum(), index_); }

void ElementaryCrystal::check_carrier(const Elem& b) const {
  switch (datum().classify(index_)) {
    case IndexClass::Real:
      assert(b.kind() == Elem::Kind::Real);
      break;
    case IndexClass::ImaginaryNonIsotropic:
      assert(b.kind() == Elem::Kind::Comp);
      break;
    case IndexClass::Isotropic:
      assert(b.kind() == Elem::Kind::Part);
      break;
  }
  assert(b.home() == index_);
  (void)b;
}

Weight ElementaryCrystal::wt(const Elem& b) const {
  check_carrier(b);
  return Weight::alpha(index_, -b.total());
}

ExtInt ElementaryCrystal::eps(int i, const Elem& b) const {
  check_carrier(b);
  if (i != index_) {
    datum().classify(i);
    return ExtInt::neg_inf();
  }
  switch (datum().classify(index_)) {
    case IndexClass::Real:
      return b.real_value();
    case IndexClass::ImaginaryNonIsotropic:
    case IndexClass::Isotropic:
      return 0;
  }
  throw BbcError("unreachable");
}

ExtInt ElementaryCrystal::phi(int i, const Elem& b) const {
  check_carrier(b);
  if (i != index_) {
    datum().classify(i);
    return ExtInt::neg_inf();
  }
  switch (datum().classify(index_)) {
    case IndexClass::Real:
      return -b.real_value();
    case IndexClass::ImaginaryNonIsotropic:
      return -b.total() * datum().a(index_, index_);
    case IndexClass::Isotropic:
      return 0;
  }
  throw BbcError("unreachable");
}

std::optional<Elem> ElementaryCrystal::e(int i, long long l, const Elem& b) const {
  require_op(i, l);
  check_carrier(b);
  if (i != index_) return std::nullopt;
  switch (datum().classify(index_)) {
    case IndexClass::Real: {
      long long n = b.real_value();
      if (n == 0) return std::nullopt;
      return Elem::real(index_, n - 1);
    }
    case IndexClass::ImaginaryNonIsotropic: {
      const auto& parts = b.parts();
      if (parts.empty() || parts.front() != l) return std::nullopt;
      return Elem::comp(index_, {parts.begin() + 1, parts.end()});
    }
    case IndexClass::Isotropic: {
      auto parts = b.parts();
      auto it = std::find(parts.begin(), parts.end(), l);
      if (it == parts.end()) return std::nullopt;
      parts.erase(it);
      return Elem::part(index_, std::move(parts));
    }
  }
  throw BbcError("unreachable");
}

std::optional<Elem> ElementaryCrystal::f(int i, long long l, const Elem& b) const {
  require_op(i, l);
  check_carrier(b);
  if (i != index_) return std::nullopt;
  switch (datum().classify(index_)) {
    case IndexClass::Real:
      return Elem::real(index_, b.real_value() + 1);
    case IndexClass::ImaginaryNonIsotropic: {
      std::vector<long long> parts;
      parts.reserve(b.parts().size() + 1);
      parts.push_back(l);
      parts.insert(parts.end(), b.parts().begin(), b.parts().end());
      return Elem::comp(index_, std::move(parts));
    }
    case IndexClass::Isotropic: {
      auto parts = b.parts();
      parts.push_back(l);
      return Elem::part(index_, std::move(parts));
    }
  }
  throw BbcError("unreachable");
}

std::string ElementaryCrystal::describe() const { return "B_" + datum().name(index_); }

ShiftCrystal::ShiftCrystal(DatumPtr datum, Weight lambda) : Crystal(std::move(datum)), lambda_(std::move(lambda)) {}

Weight ShiftCrystal::wt(const Elem& b) const {
  assert(b.kind() == Elem::Kind::TToken);
  return b.t_weight();
}

ExtInt ShiftCrystal::eps(int i, const Elem&) const {
  datum().classify(i);
  return ExtInt::neg_inf();
}

ExtInt ShiftCrystal::phi(int i, const Elem&) const {
  datum().classify(i);
  return ExtInt::neg_inf();
}

std::optional<Elem> ShiftCrystal::e(int i, long long l, const Elem&) const {
  require_op(i, l);
  return std::nullopt;
}

std::optional<Elem> ShiftCrystal::f(int i, long long l, const Elem&) const {
  require_op(i, l);
  return std::nullopt;
}

std::string ShiftCrystal::describe() const { return "T[" + lambda_.repr(datum()) + "]"; }

CutoffCrystal::CutoffCrystal(DatumPtr datum) : Crystal(std::move(datum)) {}

Weight CutoffCrystal::wt(const Elem& b) const {
  assert(b.kind() == Elem::Kind::CToken);
  (void)b;
  return Weight();
}

ExtInt CutoffCrystal::eps(int i, const Elem&) const {
  datum().classify(i);
  return 0;
}

ExtInt CutoffCrystal::phi(int i, const Elem&) const {
  datum().classify(i);
  return 0;
}

std::optional<Elem> CutoffCrystal::e(int i, long long l, const Elem&) const {
  require_op(i, l);
  return std::nullopt;
}

std::optional<Elem> CutoffCrystal::f(int i, long long l, const Elem&) const {
  require_op(i, l);
  return std::nullopt;
}

std::string CutoffCrystal::describe() const { return "C"; }

std::shared_ptr<const ElementaryCrystal> elementary(DatumPtr datum, int index) {
  return std::make_shared<const ElementaryCrystal>(std::move(datum), index);
}

std::shared_ptr<const ShiftCrystal> shift_crystal(DatumPtr datum, Weight lambda) {
  return std::make_shared<const ShiftCrystal>(std::move(datum), std::move(lambda));
}

std::shared_ptr<const CutoffCrystal> cutoff_crystal(DatumPtr datum) {
  return std::make_shared<const CutoffCrystal>(std::move(datum));
}

}  // namespace bbc
