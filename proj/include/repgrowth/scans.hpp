#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "repgrowth/dominance.hpp"

namespace repgrowth {

/// Tally of an exhaustive property scan. `applied` counts inputs on which a
/// property's hypothesis held and the property was checked.
struct ScanStats {
  std::size_t inputs = 0;
  std::size_t applied = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what);
  bool ok() const { return failures == 0; }
  std::string summary() const;
};

/// Calls f on every dominant weight of the given rank whose coefficient sum
/// is at most max_sum.
void for_each_weight_with_sum(int rank, int max_sum, const std::function<void(const Weight&)>& f);
/// Calls f on every weight with 0 <= a_i <= max_coeff.
void for_each_weight_in_box(int rank, int max_coeff, const std::function<void(const Weight&)>& f);

/// All witness engines on type A, ranks 1..max_rank, coefficient sum <= max_sum.
/// Checks the chain, the stated postcondition, and that an engine rejects
/// exactly the inputs failing its hypothesis.
ScanStats scan_witness_lemmas(int max_rank, int max_sum);

/// N(lambda) <= saturated orbit sum on restricted weights of type A with
/// ranks 1..max_rank, and orbit * stabilizer = |W| over every saturated set met.
ScanStats scan_bounds_consistency(int max_rank, int p, std::size_t cap);

/// orbit * stabilizer = |W| on weights with coefficients <= max_coeff, for
/// every family and rank up to max_rank (exceptional types at their ranks).
ScanStats scan_orbit_stabilizer(int max_rank, int max_coeff);

/// sum_{j=m}^r C(r,j) <= (r+1)!/(m+1)! for 0 <= m <= r <= max_r.
ScanStats scan_char2(int max_r);

/// Mullineux is an involution preserving p-regularity, n <= max_n.
ScanStats scan_mullineux(int max_n, const std::vector<int>& primes);

/// At p = 0 (and p > n) the Mullineux map is conjugation, n <= max_n.
ScanStats scan_mullineux_conjugation(int max_n);

/// hook_length_dim(lambda) >= 2^{(n - m_0(lambda))/2} for lo <= n <= hi.
ScanStats scan_bound3_hook(int lo, int hi);

/// #{p-regular lambda of r : r - m_p(lambda) <= n0} <= 2 sum_{j<=n0} p(j).
ScanStats scan_sym1_counting(int max_r, const std::vector<int>& primes);

}  // namespace repgrowth
