#include "ixc/gf.hpp"

#include <algorithm>
#include <sstream>

namespace ixc {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::of(uint32_t q) {
  if (!is_prime(q) || q >= (1u << 31))
    throw InvariantError("field order must be a prime below 2^31, got " + std::to_string(q));
  return Field{q};
}

uint32_t fadd(Field f, uint32_t a, uint32_t b) {
  uint64_t s = static_cast<uint64_t>(a) + b;
  if (s >= f.q) s -= f.q;
  return static_cast<uint32_t>(s);
}

uint32_t fsub(Field f, uint32_t a, uint32_t b) {
  return a >= b ? a - b : static_cast<uint32_t>(a + static_cast<uint64_t>(f.q) - b);
}

uint32_t fmul(Field f, uint32_t a, uint32_t b) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % f.q);
}

uint32_t fneg(Field f, uint32_t a) { return a == 0 ? 0 : f.q - a; }

uint32_t finv(Field f, uint32_t a) {
  if (a == 0) throw InvariantError("finv(0)");
  // Extended Euclid on (q, a).
  int64_t t = 0, new_t = 1;
  int64_t r = f.q, new_r = a;
  while (new_r != 0) {
    int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += f.q;
  return static_cast<uint32_t>(t);
}

FVector::FVector(std::initializer_list<uint32_t> cs) {
  if (cs.size() < 1 || cs.size() > 4)
    throw DimensionMismatch("vector length must be 1..4, got " + std::to_string(cs.size()));
  len_ = static_cast<uint8_t>(cs.size());
  size_t i = 0;
  for (uint32_t c : cs) c_[i++] = c;
}

FVector FVector::zero(int len) {
  if (len < 1 || len > 4)
    throw DimensionMismatch("vector length must be 1..4, got " + std::to_string(len));
  FVector v;
  v.len_ = static_cast<uint8_t>(len);
  return v;
}

bool FVector::is_zero() const {
  for (int i = 0; i < len_; ++i)
    if (c_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

FVector add(Field f, const FVector& a, const FVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: mixed vector lengths");
  FVector r = FVector::zero(a.size());
  for (int i = 0; i < a.size(); ++i) r.set(i, fadd(f, a[i], b[i]));
  return r;
}

FVector scale(Field f, uint32_t s, const FVector& v) {
  FVector r = FVector::zero(v.size());
  for (int i = 0; i < v.size(); ++i) r.set(i, fmul(f, s, v[i]));
  return r;
}

std::string to_string(const FVector& v, Field f) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ") over GF(" << f.q << ')';
  return os.str();
}

namespace {

int pivot_col(const FVector& v) {
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return -1;
}

}  // namespace

Subspace Subspace::zero(Field f, int len) {
  if (len < 1 || len > 4)
    throw DimensionMismatch("ambient dimension must be 1..4, got " + std::to_string(len));
  Subspace s;
  s.f_ = f;
  s.len_ = static_cast<uint8_t>(len);
  return s;
}

FVector Subspace::reduce(FVector v) const {
  for (const FVector& row : rows_) {
    int p = pivot_col(row);
    if (v[p] != 0) {
      // row has pivot 1, so subtract v[p] * row.
      FVector scaled = scale(f_, v[p], row);
      for (int i = 0; i < v.size(); ++i) v.set(i, fsub(f_, v[i], scaled[i]));
    }
  }
  return v;
}

bool Subspace::contains(const FVector& v) const {
  if (v.size() != len_) throw DimensionMismatch("contains: vector/ambient length mismatch");
  return reduce(v).is_zero();
}

bool Subspace::extend(const FVector& v) {
  if (v.size() != len_) throw DimensionMismatch("extend: vector/ambient length mismatch");
  FVector r = reduce(v);
  int p = pivot_col(r);
  if (p < 0) return false;
  // Normalize pivot to 1, then clear that column in existing rows.
  r = scale(f_, finv(f_, r[p]), r);
  for (FVector& row : rows_) {
    if (row[p] != 0) {
      FVector scaled = scale(f_, row[p], r);
      for (int i = 0; i < len_; ++i) row.set(i, fsub(f_, row[i], scaled[i]));
    }
  }
  rows_.push_back(r);
  std::sort(rows_.begin(), rows_.end(), [](const FVector& a, const FVector& b) {
    return pivot_col(a) < pivot_col(b);
  });
  return true;
}

Subspace span_of(Field f, int len, std::span<const FVector> vectors) {
  Subspace s = Subspace::zero(f, len);
  for (const FVector& v : vectors) s.extend(v);
  return s;
}

bool in_span(const FVector& v, const Subspace& s) { return s.contains(v); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field() || a.ambient() != b.ambient())
    throw DimensionMismatch("intersect: mismatched spaces");
  Field f = a.field();
  int len = a.ambient();
  // Zassenhaus: eliminate rows of the block matrix [A|A; B|0]; rows whose
  // left half vanished carry the intersection in the right half.
  struct Wide {
    std::array<uint32_t, 8> c{};
  };
  std::vector<Wide> rows;
  for (const FVector& v : a.basis()) {
    Wide w;
    for (int i = 0; i < len; ++i) {
      w.c[static_cast<size_t>(i)] = v[i];
      w.c[static_cast<size_t>(len + i)] = v[i];
    }
    rows.push_back(w);
  }
  for (const FVector& v : b.basis()) {
    Wide w;
    for (int i = 0; i < len; ++i) w.c[static_cast<size_t>(i)] = v[i];
    rows.push_back(w);
  }
  int width = 2 * len;
  size_t rank = 0;
  for (int col = 0; col < width && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv].c[static_cast<size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    uint32_t inv = finv(f, rows[rank].c[static_cast<size_t>(col)]);
    for (int i = col; i < width; ++i)
      rows[rank].c[static_cast<size_t>(i)] = fmul(f, inv, rows[rank].c[static_cast<size_t>(i)]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      uint32_t factor = rows[r].c[static_cast<size_t>(col)];
      if (factor == 0) continue;
      for (int i = col; i < width; ++i)
        rows[r].c[static_cast<size_t>(i)] =
            fsub(f, rows[r].c[static_cast<size_t>(i)], fmul(f, factor, rows[rank].c[static_cast<size_t>(i)]));
    }
    ++rank;
  }
  Subspace out = Subspace::zero(f, len);
  for (const Wide& w : rows) {
    bool left_zero = true;
    for (int i = 0; i < len; ++i)
      if (w.c[static_cast<size_t>(i)] != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    FVector v = FVector::zero(len);
    bool nonzero = false;
    for (int i = 0; i < len; ++i) {
      v.set(i, w.c[static_cast<size_t>(len + i)]);
      nonzero |= v[i] != 0;
    }
    if (nonzero) out.extend(v);
  }
  return out;
}

std::string to_string(const Subspace& s) {
  std::ostringstream os;
  os << "span{";
  for (size_t i = 0; i < s.basis().size(); ++i) {
    if (i) os << ", ";
    const FVector& v = s.basis()[i];
    os << '(';
    for (int j = 0; j < v.size(); ++j) {
      if (j) os << ',';
      os << v[j];
    }
    os << ')';
  }
  os << "} in GF(" << s.field().q << ")^" << s.ambient();
  return os.str();
}

uint64_t Rng::next() {
  s_ += 0x9E3779B97f4A7C15ULL;
  uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw InvariantError("Rng::below(0)");
  if (n == 1) return 0;
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t z = a ^ (b + 0x9E3779B97f4A7C15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FVector random_vector(Field f, int len, Rng& rng) {
  FVector v = FVector::zero(len);
  for (int i = 0; i < len; ++i) v.set(i, static_cast<uint32_t>(rng.below(f.q)));
  return v;
}

FVector random_nonzero_vector(Field f, int len, Rng& rng) {
  for (;;) {
    FVector v = random_vector(f, len, rng);
    if (!v.is_zero()) return v;
  }
}

FVector sample_nonzero(const Subspace& s, Rng& rng) {
  if (s.dim() == 0) throw ZeroSubspace("sample_nonzero on the zero subspace");
  Field f = s.field();
  for (;;) {
    FVector acc = FVector::zero(s.ambient());
    bool any = false;
    for (const FVector& row : s.basis()) {
      uint32_t c = static_cast<uint32_t>(rng.below(f.q));
      if (c == 0) continue;
      any = true;
      acc = add(f, acc, scale(f, c, row));
    }
    if (any && !acc.is_zero()) return acc;
  }
}

}  // namespace ixc
