#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/rootdata.hpp"

namespace repgrowth {

/// Certificate that source - target = sum k_i alpha_i with every k_i >= 0.
struct WitnessChain {
  Weight source;
  Weight target;
  std::vector<std::int64_t> root_coeffs;

  /// Recomputes source - sum k_i alpha_i and checks nonnegativity.
  bool verify(const RootDatum& datum) const;
  /// True when some k_i > 0.
  bool is_strict() const;
};

/// Signals that an enumeration outgrew its cap. Never silently truncated.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap) : std::runtime_error("saturated set exceeds cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// [lambda] = sum min(i, r+1-i) a_i for type A.
std::int64_t bracket(const RootDatum& datum, const Weight& w);

/// Exact solve of cartan * k = lambda - mu. Present iff k is a nonnegative
/// integer vector; lambda dominates itself with k = 0. Pass strict = true to
/// additionally require lambda != mu.
std::optional<WitnessChain> dominance_witness(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                                              bool strict = false);

/// |W| for the datum.
mpz_class weyl_group_order(const RootDatum& datum);
mpz_class weyl_group_order(Family family, int rank);

/// Order of the parabolic subgroup generated by reflections in the simple
/// roots with a_i = 0.
mpz_class weyl_stabilizer_order(const RootDatum& datum, const Weight& w);

mpz_class orbit_length(const RootDatum& datum, const Weight& w);

struct SaturatedEntry {
  Weight weight;
  WitnessChain chain;
};

/// All dominant mu with lambda >= mu, each carrying its witness. Ordered by
/// height of lambda - mu, then by descending coefficient vector. Throws
/// CapExceeded once more than `cap` weights are found.
std::vector<SaturatedEntry> saturated_dominant_set(const RootDatum& datum, const Weight& lambda, std::size_t cap);

/// Positive roots in simple-root coordinates, ordered by height.
std::vector<std::vector<std::int64_t>> positive_roots(const RootDatum& datum);

/// Every coefficient strictly positive.
bool is_good(const Weight& w);

}  // namespace repgrowth
