#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ixc/errors.hpp"

namespace ixc {

bool is_prime(uint32_t n);

/// Prime field GF(q), 2 <= q < 2^31.
struct Field {
  uint32_t q = 2;

  /// Validating constructor; throws InvariantError unless q is prime.
  static Field of(uint32_t q);

  friend bool operator==(const Field& a, const Field& b) { return a.q == b.q; }
  friend bool operator!=(const Field& a, const Field& b) { return a.q != b.q; }
};

uint32_t fadd(Field f, uint32_t a, uint32_t b);
uint32_t fsub(Field f, uint32_t a, uint32_t b);
uint32_t fmul(Field f, uint32_t a, uint32_t b);
uint32_t fneg(Field f, uint32_t a);
uint32_t finv(Field f, uint32_t a);  // a != 0

/// Column vector over GF(q) with fixed length 1..4. Coordinates are kept
/// reduced mod q by the code that builds them.
class FVector {
 public:
  FVector() = default;
  FVector(std::initializer_list<uint32_t> cs);
  static FVector zero(int len);

  int size() const { return len_; }
  uint32_t operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  void set(int i, uint32_t v) { c_[static_cast<size_t>(i)] = v; }
  bool is_zero() const;

  friend bool operator==(const FVector& a, const FVector& b) {
    return a.len_ == b.len_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FVector& a, const FVector& b) { return !(a == b); }
  friend bool operator<(const FVector& a, const FVector& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.c_ < b.c_;
  }

 private:
  uint8_t len_ = 0;
  std::array<uint32_t, 4> c_{};
};

FVector add(Field f, const FVector& a, const FVector& b);
FVector scale(Field f, uint32_t s, const FVector& v);

/// Renders as "(a,b,c) over GF(q)".
std::string to_string(const FVector& v, Field f);

/// Subspace of GF(q)^len held as a canonical reduced-row-echelon basis, so
/// equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field f, int len);

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return len_; }
  Field field() const { return f_; }
  const std::vector<FVector>& basis() const { return rows_; }

  bool contains(const FVector& v) const;
  /// Adds v to the span; returns true iff the dimension grew.
  bool extend(const FVector& v);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.f_ == b.f_ && a.len_ == b.len_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field f_{};
  uint8_t len_ = 0;
  std::vector<FVector> rows_;  // RREF, sorted by pivot column

  FVector reduce(FVector v) const;
  friend Subspace span_of(Field, int, std::span<const FVector>);
};

/// Span of a vector list; an empty list gives the zero subspace.
Subspace span_of(Field f, int len, std::span<const FVector> vectors);
bool in_span(const FVector& v, const Subspace& s);
/// Subspace intersection via double-width elimination.
Subspace intersect(const Subspace& a, const Subspace& b);

std::string to_string(const Subspace& s);

/// Deterministic splitmix64 stream. All randomized code takes an explicit
/// Rng so identical seeds reproduce identical runs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}
  uint64_t next();
  /// Uniform in [0, n), unbiased via rejection. n >= 1.
  uint64_t below(uint64_t n);

 private:
  uint64_t s_;
};

/// Stable combiner for deriving per-retry / per-policy seeds.
uint64_t mix_seed(uint64_t a, uint64_t b);

FVector random_vector(Field f, int len, Rng& rng);
FVector random_nonzero_vector(Field f, int len, Rng& rng);
/// Uniform over the nonzero vectors of s; throws ZeroSubspace if dim(s)=0.
FVector sample_nonzero(const Subspace& s, Rng& rng);

}  // namespace ixc
