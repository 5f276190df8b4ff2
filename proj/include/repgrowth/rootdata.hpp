#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace repgrowth {

/// Raised when an operation's hypothesis fails. The message names the
/// violated condition so callers can surface it verbatim.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(const std::string& s);

/// Throws PreconditionError unless (family, rank) names a simple root system.
void validate_family_rank(Family family, int rank);

/// Coefficients in the fundamental-weight basis.
struct Weight {
  std::vector<std::int64_t> coeffs;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

  int rank() const { return static_cast<int>(coeffs.size()); }
  std::int64_t operator[](int i) const { return coeffs[i]; }  // 0-based
  std::int64_t& operator[](int i) { return coeffs[i]; }

  bool is_dominant() const;
  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Immutable Cartan data for one simple root system.
///
/// Node numbering is Bourbaki's throughout:
///   A_r  chain 1-2-...-r
///   B_r  chain, alpha_r short (double bond r-1 => r)
///   C_r  chain, alpha_r long (double bond r-1 <= r)
///   D_r  chain 1-...-(r-2), with r-1 and r both attached to r-2
///   E_r  chain 1-3-4-5-...-r, with 2 attached to 4
///   F_4  1-2=>3-4, alpha_1 and alpha_2 long
///   G_2  alpha_1 short, alpha_2 long
///
/// cartan(j, i) is the coefficient of varpi_j in alpha_i, so column i of the
/// matrix is the simple root alpha_i written in fundamental weights.
class RootDatum {
 public:
  static RootDatum make(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const;

  /// 0-based entry access.
  int cartan(int row, int col) const { return cartan_[row * rank_ + col]; }
  const std::vector<int>& highest_root_coeffs() const { return highest_root_; }

  /// Determinant of the Cartan matrix (index of the root lattice in the
  /// weight lattice).
  std::int64_t determinant() const { return det_; }

  /// det * cartan^{-1}; an integer matrix, 0-based.
  std::int64_t scaled_inverse(int row, int col) const { return inv_scaled_[row * rank_ + col]; }

  /// True when the system has two root lengths (B, C, F, G).
  bool has_two_root_lengths() const;

  /// Whether alpha_i and alpha_j are joined in the Dynkin diagram (0-based).
  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }

  /// The highest root alpha_0 = sum n_i alpha_i in the fundamental-weight basis.
  Weight highest_root_weight() const;

  /// The unique simple root (1-based index) joined to -alpha_0 in the
  /// extended diagram, when there is exactly one.
  std::optional<int> extended_node() const;

  /// lambda - sum k_i alpha_i, computed in the fundamental-weight basis.
  Weight subtract_roots(const Weight& lambda, const std::vector<std::int64_t>& root_coeffs) const;

  /// Throws PreconditionError unless w has this datum's rank.
  void check_weight(const Weight& w) const;

 private:
  RootDatum() = default;
  void compute_inverse();

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<int> cartan_;
  std::vector<int> highest_root_;
  std::int64_t det_ = 0;
  std::vector<std::int64_t> inv_scaled_;
};

/// Column i (1-based) of the Cartan matrix as a weight.
Weight simple_root_as_weight(const RootDatum& datum, int i);

/// The highest-root coefficient vector n_i.
std::vector<int> highest_root_coeffs(const RootDatum& datum);

/// p = 0 admits every dominant weight; p > 0 requires 0 <= a_i <= p-1.
bool is_restricted(const Weight& w, int p);

bool is_prime(std::int64_t n);

}  // namespace repgrowth
