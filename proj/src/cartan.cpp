#include "bbc/cartan.hpp"

#include <cstdlib>
#include <sstream>

namespace bbc {

std::string CartanViolation::describe() const {
  std::ostringstream os;
  switch (rule) {
    case Rule::BadShape:
      os << "BadShape: matrix must be square with one symmetrizer per row";
      break;
    case Rule::NonPositiveSymmetrizer:
      os << "NonPositiveSymmetrizer at " << i;
      break;
    case Rule::OddDiagonal:
      os << "OddDiagonal at (" << i << "," << j << ")";
      break;
    case Rule::PositiveDiagonalNotTwo:
      os << "PositiveDiagonalNotTwo at (" << i << "," << j << ")";
      break;
    case Rule::PositiveOffDiagonal:
      os << "PositiveOffDiagonal at (" << i << "," << j << ")";
      break;
    case Rule::NotSymmetrizable:
      os << "NotSymmetrizable at (" << i << "," << j << ")";
      break;
  }
  return os.str();
}

namespace {
std::string join_violations(const std::vector<CartanViolation>& vs) {
  std::string s = "invalid Borcherds-Cartan datum:";
  for (const auto& v : vs) s += " " + v.describe() + ";";
  return s;
}
}  // namespace

CartanError::CartanError(std::vector<CartanViolation> violations)
    : BbcError(join_violations(violations)), violations_(std::move(violations)) {}

void Weight::add_to(std::map<int, long long>& m, int i, long long c) {
  if (c == 0) return;
  auto [it, inserted] = m.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

Weight Weight::fundamental(int i, long long c) {
  Weight w;
  add_to(w.lam_, i, c);
  return w;
}

Weight Weight::alpha(int i, long long c) {
  Weight w;
  add_to(w.rt_, i, c);
  return w;
}

long long Weight::lam(int i) const {
  auto it = lam_.find(i);
  return it == lam_.end() ? 0 : it->second;
}

long long Weight::rt(int i) const {
  auto it = rt_.find(i);
  return it == rt_.end() ? 0 : it->second;
}

Weight& Weight::operator+=(const Weight& o) {
  for (const auto& [i, c] : o.lam_) add_to(lam_, i, c);
  for (const auto& [i, c] : o.rt_) add_to(rt_, i, c);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (const auto& [i, c] : o.lam_) add_to(lam_, i, -c);
  for (const auto& [i, c] : o.rt_) add_to(rt_, i, -c);
  return *this;
}

Weight Weight::operator+(const Weight& o) const {
  Weight w = *this;
  w += o;
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  Weight w = *this;
  w -= o;
  return w;
}

Weight Weight::operator-() const {
  Weight w;
  for (const auto& [i, c] : lam_) w.lam_.emplace(i, -c);
  for (const auto& [i, c] : rt_) w.rt_.emplace(i, -c);
  return w;
}

Weight Weight::operator*(long long k) const {
  Weight w;
  if (k == 0) return w;
  for (const auto& [i, c] : lam_) w.lam_.emplace(i, c * k);
  for (const auto& [i, c] : rt_) w.rt_.emplace(i, c * k);
  return w;
}

Weight Weight::plus_alpha(int i, long long k) const {
  Weight w = *this;
  add_to(w.rt_, i, k);
  return w;
}

long long Weight::rt_coeff_sum() const {
  long long s = 0;
  for (const auto& [i, c] : rt_) s += c;
  return s;
}

std::string Weight::repr(const CartanDatum& d) const {
  std::string s;
  auto term = [&s](long long c, const std::string& sym) {
    if (s.empty()) {
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += std::to_string(c);
    } else {
      s += (c < 0 ? "-" : "+");
      long long m = c < 0 ? -c : c;
      if (m != 1) s += std::to_string(m);
    }
    s += sym;
  };
  for (const auto& [i, c] : lam_) term(c, "Λ[" + d.name(i) + "]");
  for (const auto& [i, c] : rt_) term(c, "α[" + d.name(i) + "]");
  return s.empty() ? "0" : s;
}

std::vector<CartanViolation> CartanDatum::violations(const Matrix& a, const std::vector<long long>& sym) {
  std::vector<CartanViolation> out;
  const int n = static_cast<int>(a.size());
  bool square = static_cast<int>(sym.size()) == n;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) square = false;
  if (!square) {
    out.push_back({CartanViolation::Rule::BadShape, 0, 0});
    return out;
  }
  for (int i = 0; i < n; ++i)
    if (sym[i] <= 0) out.push_back({CartanViolation::Rule::NonPositiveSymmetrizer, i, i});
  for (int i = 0; i < n; ++i) {
    long long d = a[i][i];
    if (d % 2 != 0)
      out.push_back({CartanViolation::Rule::OddDiagonal, i, i});
    else if (d > 0 && d != 2)
      out.push_back({CartanViolation::Rule::PositiveDiagonalNotTwo, i, i});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a[i][j] > 0) out.push_back({CartanViolation::Rule::PositiveOffDiagonal, i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sym[i] * a[i][j] != sym[j] * a[j][i]) out.push_back({CartanViolation::Rule::NotSymmetrizable, i, j});
  return out;
}

CartanDatum::CartanDatum(std::vector<std::string> names, Matrix a, std::vector<long long> sym)
    : names_(std::move(names)), a_(std::move(a)), sym_(std::move(sym)) {}

std::shared_ptr<const CartanDatum> CartanDatum::validate(std::vector<std::string> names, Matrix a,
                                                         std::vector<long long> sym) {
  auto vs = violations(a, sym);
  if (!vs.empty()) throw CartanError(std::move(vs));
  if (names.size() != a.size()) throw CartanError({{CartanViolation::Rule::BadShape, 0, 0}});
  return std::shared_ptr<const CartanDatum>(new CartanDatum(std::move(names), std::move(a), std::move(sym)));
}

std::shared_ptr<const CartanDatum> CartanDatum::validate(Matrix a, std::vector<long long> sym) {
  std::vector<std::string> names;
  names.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) names.push_back(std::to_string(i + 1));
  return validate(std::move(names), std::move(a), std::move(sym));
}

void CartanDatum::check_index(int i) const {
  if (i < 0 || i >= rank()) throw UnknownIndexError("unknown index position " + std::to_string(i));
}

long long CartanDatum::a(int i, int j) const {
  check_index(i);
  check_index(j);
  return a_[i][j];
}

long long CartanDatum::sym(int i) const {
  check_index(i);
  return sym_[i];
}

const std::string& CartanDatum::name(int i) const {
  check_index(i);
  return names_[i];
}

std::optional<int> CartanDatum::index_of(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

IndexClass CartanDatum::classify(int i) const {
  check_index(i);
  long long d = a_[i][i];
  if (d == 2) return IndexClass::Real;
  if (d == 0) return IndexClass::Isotropic;
  return IndexClass::ImaginaryNonIsotropic;
}

long long CartanDatum::pairing(int j, const Weight& w) const {
  check_index(j);
  long long v = w.lam(j);
  for (const auto& [i, c] : w.rt_terms()) {
    check_index(i);
    v += c * a_[j][i];
  }
  return v;
}

std::optional<int> CartanDatum::dominance_violation(const Weight& w) const {
  for (int i = 0; i < rank(); ++i)
    if (pairing(i, w) < 0) return i;
  return std::nullopt;
}

std::vector<std::pair<int, long long>> CartanDatum::operators(long long lmax) const {
  std::vector<std::pair<int, long long>> ops;
  for (int i = 0; i < rank(); ++i) {
    if (real(i)) {
      if (lmax >= 1) ops.emplace_back(i, 1);
    } else {
      for (long long l = 1; l <= lmax; ++l) ops.emplace_back(i, l);
    }
  }
  return ops;
}

}  // namespace bbc
