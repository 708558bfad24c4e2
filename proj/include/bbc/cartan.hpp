#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bbc {

class BbcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIndexError : public BbcError {
 public:
  using BbcError::BbcError;
};

// Raised when a lowering/raising operator (i,l) is outside I^infinity,
// i.e. l != 1 for a real index or l < 1.
class BadOperatorError : public BbcError {
 public:
  using BbcError::BbcError;
};

class NotDominantError : public BbcError {
 public:
  NotDominantError(std::string msg, int index) : BbcError(std::move(msg)), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class InterfaceViolationError : public BbcError {
 public:
  using BbcError::BbcError;
};

class ConfigError : public BbcError {
 public:
  ConfigError(std::string msg, std::string field) : BbcError(std::move(msg)), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class IndexClass { Real, ImaginaryNonIsotropic, Isotropic };

struct CartanViolation {
  enum class Rule {
    BadShape,
    NonPositiveSymmetrizer,
    OddDiagonal,
    PositiveDiagonalNotTwo,
    PositiveOffDiagonal,
    NotSymmetrizable,
  };
  Rule rule;
  int i = 0;
  int j = 0;
  std::string describe() const;
};

class CartanError : public BbcError {
 public:
  explicit CartanError(std::vector<CartanViolation> violations);
  const std::vector<CartanViolation>& violations() const { return violations_; }

 private:
  std::vector<CartanViolation> violations_;
};

class CartanDatum;

// An element of the weight lattice P, stored as a fundamental-weight part
// plus a simple-root part with zero coefficients dropped.
class Weight {
 public:
  Weight() = default;
  static Weight fundamental(int i, long long c = 1);
  static Weight alpha(int i, long long c = 1);

  long long lam(int i) const;
  long long rt(int i) const;
  const std::map<int, long long>& lam_terms() const { return lam_; }
  const std::map<int, long long>& rt_terms() const { return rt_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(long long k) const;
  // w + k*alpha_i
  Weight plus_alpha(int i, long long k) const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.lam_ == b.lam_ && a.rt_ == b.rt_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.lam_ != b.lam_) return a.lam_ < b.lam_;
    return a.rt_ < b.rt_;
  }

  bool zero() const { return lam_.empty() && rt_.empty(); }
  bool root_only() const { return lam_.empty(); }
  // Signed sum of the root-part coefficients; ht(beta) for w = beta in Q+.
  long long rt_coeff_sum() const;

  std::string repr(const CartanDatum& d) const;

 private:
  std::map<int, long long> lam_, rt_;
  static void add_to(std::map<int, long long>& m, int i, long long c);
};

// A validated even symmetrizable Borcherds-Cartan matrix with symmetrizers.
// Immutable after construction; freely shareable between threads.
class CartanDatum {
 public:
  using Matrix = std::vector<std::vector<long long>>;

  // Lists every broken invariant; empty means the input is a valid datum.
  static std::vector<CartanViolation> violations(const Matrix& a, const std::vector<long long>& sym);

  // Throws CartanError carrying the full violation list on invalid input.
  static std::shared_ptr<const CartanDatum> validate(std::vector<std::string> names, Matrix a,
                                                     std::vector<long long> sym);
  static std::shared_ptr<const CartanDatum> validate(Matrix a, std::vector<long long> sym);

  int rank() const { return static_cast<int>(names_.size()); }
  long long a(int i, int j) const;
  long long sym(int i) const;
  const std::string& name(int i) const;
  std::optional<int> index_of(std::string_view name) const;

  IndexClass classify(int i) const;
  bool real(int i) const { return classify(i) == IndexClass::Real; }
  bool imaginary(int i) const { return classify(i) != IndexClass::Real; }
  bool isotropic(int i) const { return classify(i) == IndexClass::Isotropic; }

  // <h_j, w> = lam_j + sum_i rt_i * a_{j,i}
  long long pairing(int j, const Weight& w) const;
  bool dominant(const Weight& w) const { return !dominance_violation(w).has_value(); }
  std::optional<int> dominance_violation(const Weight& w) const;

  // The operator index set I^infinity truncated at l <= lmax for imaginary
  // indices; real indices contribute (i,1) only.
  std::vector<std::pair<int, long long>> operators(long long lmax) const;

 private:
  CartanDatum(std::vector<std::string> names, Matrix a, std::vector<long long> sym);
  void check_index(int i) const;

  std::vector<std::string> names_;
  Matrix a_;
  std::vector<long long> sym_;
};

using DatumPtr = std::shared_ptr<const CartanDatum>;

}  // namespace bbc
