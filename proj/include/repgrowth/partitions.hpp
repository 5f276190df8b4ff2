#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/bounds.hpp"

namespace repgrowth {

/// Weakly decreasing positive parts. The empty partition is the partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// "3,2,1"; the empty string gives the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  /// Part i (1-based), 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  Partition conjugate() const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// First part value occurring at least p times, if any (p = 0: never).
std::optional<int> repeating_part(const Partition& lambda, int p);
bool is_p_regular(const Partition& lambda, int p);

/// p(n) by the pentagonal-number recurrence.
mpz_class partition_count(int n);
/// p(0..n).
std::vector<mpz_class> partition_counts(int n);

struct PartitionBoundResult {
  mpz_class exact;
  Certificate certificate;  // p(n) < exp(pi sqrt(2n/3))
};
PartitionBoundResult partition_bound(int n, PrecisionPolicy policy = {});

/// k(r,s): tuples x in N^r with sum min(i, r+1-i) x_i = s.
mpz_class k_count(int r, int s);
/// k(r,0..smax).
std::vector<mpz_class> k_counts(int r, int smax);
/// sum_{s=0}^N k(r,s).
mpz_class k_sum(int r, int N);

struct KSumBoundResult {
  mpz_class majorant;       // sum_{s<=N} (p*p)(s), bounds k_sum(r,N) for every r
  Certificate certificate;  // majorant < (N+1)(N+2)/2 exp(2 pi sqrt(N/3)), or <= when N = 0
  bool strict = true;
  std::string note;
};
KSumBoundResult k_sum_bound(int N, PrecisionPolicy policy = {});

/// Restartable stream of the p-regular partitions of n in lexicographically
/// descending order.
class PRegularPartitions {
 public:
  PRegularPartitions(int n, int p);
  std::optional<Partition> next();
  void reset();
  std::vector<Partition> all();

 private:
  bool advance();
  int n_, p_;
  std::vector<int> cur_;
  bool started_ = false, done_ = false;
};

std::vector<Partition> p_regular_partitions(int n, int p);

/// Mullineux image. p = 0 is conjugation, p = 2 the identity; for odd p the
/// image is computed from the Mullineux symbol (p-rim stripping).
Partition mullineux(const Partition& lambda, int p);

struct MullineuxSymbol {
  std::vector<int> rim_sizes;  // a_i
  std::vector<int> lengths;    // r_i
};
/// Strip successive p-rims. Requires p odd prime (or any p >= 2 as a rim size).
MullineuxSymbol mullineux_symbol(const Partition& lambda, int p);
/// Inverse of mullineux_symbol over p-regular partitions.
Partition from_mullineux_symbol(const MullineuxSymbol& symbol, int p);

/// max(lambda_1, (lambda^M)_1); lambda_1 when p = 2.
int m_p(const Partition& lambda, int p);

/// 2^{e/2}, kept exact.
struct Sqrt2Power {
  int exponent = 0;
  mpz_class squared() const;  // 2^e
  Interval value(mpfr_prec_t prec) const;
  /// x >= 2^{e/2}, decided by squaring.
  bool at_most(const mpz_class& x) const;
};

/// 2^{(r - m_p(lambda))/2} for lambda of r >= 5.
Sqrt2Power bound3_value(const Partition& lambda, int p);

/// n! / prod(hooks).
mpz_class hook_length_dim(const Partition& lambda);

enum class SymGroup { S, A, cover };
SymGroup parse_sym_group(const std::string& s);
const char* sym_group_name(SymGroup g);

/// R_n bound for S_r, A_r or their covers with the case arithmetic as checks.
BoundReport sym_rn_bound(int r, const mpz_class& n, int p, SymGroup group, PrecisionPolicy policy = {});

}  // namespace repgrowth
