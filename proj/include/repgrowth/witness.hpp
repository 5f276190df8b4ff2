#pragma once

#include <vector>

#include "repgrowth/dominance.hpp"

namespace repgrowth {

/// Output of the constructive dominance lemmas: a weight below the input
/// together with the certificate.
struct WitnessResult {
  Weight mu;
  WitnessChain chain;
};

/// k = floor((r-1)/2), so that r is 2k+1 or 2k+2.
int middle_index(int rank);

/// Requires sum_{i<=m} i a_i > m. Returns mu with [mu] = [lambda], lambda >= mu,
/// b_i = a_i for i >= m+2 and b_{m+1} > a_{m+1}.
///
/// Follows the induction on m - j, j the last nonzero index <= m: a_j >= 2
/// subtracts alpha_j, a_j = 1 subtracts alpha_i + ... + alpha_j for the
/// largest i < j with a_i >= 1. Steps with j < m push the mass one slot right
/// and repeat.
WitnessResult incr_witness(const RootDatum& datum, const Weight& lambda, int m);

/// Requires a_{k+1} >= 2m+1 (r odd) or a_{k+1} + a_{k+2} >= 2m+3 (r even).
/// Returns mu with b_i > 0 for k-m+1 <= i <= r-k+m.
WitnessResult middle_witness(const RootDatum& datum, const Weight& lambda, int m);

/// Requires [lambda] >= 2m(k+1)+2k+1 (r odd) or (2m+2)(k+1)+2k+1 (r even).
/// Same window conclusion as middle_witness.
WitnessResult m_good_witness(const RootDatum& datum, const Weight& lambda, int m);

/// Requires [lambda] >= 2k+1. Returns mu with [mu] = [lambda] and b_i > 0 for
/// i = k+1 or i = r-k.
WitnessResult middle2_witness(const RootDatum& datum, const Weight& lambda);

/// Requires 2[lambda] >= r^2+2r-2. Returns a good mu below lambda.
WitnessResult good_witness(const RootDatum& datum, const Weight& lambda);

/// The window [k-m+1, r-k+m] (1-based, inclusive).
std::pair<int, int> middle_window(int rank, int m);

/// Threshold on [lambda] for m_good_witness.
std::int64_t m_good_threshold(int rank, int m);

struct A5Family {
  Weight mu;     // below lambda0 with b_3 >= 25
  Weight gamma;  // mu - 5(alpha_2 + 3 alpha_3 + alpha_4), all c_i >= 5
  std::vector<WitnessResult> members;  // gamma - delta for delta = sum d_i alpha_i, d_i in {0,1,2}
  mpz_class orbit_total;               // sum of W-orbit lengths over members
};

/// Builds the 3^5 good weights below a dominant lambda0 of A5. Throws
/// PreconditionError when no weight below lambda0 with b_3 >= 25 is found by
/// the incr-driven search (guaranteed to succeed once [lambda0] >= 77).
A5Family a5_good_family(const RootDatum& datum, const Weight& lambda0);

}  // namespace repgrowth
