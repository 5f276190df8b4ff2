#include "repgrowth/witness.hpp"

#include <algorithm>

namespace repgrowth {

namespace {

// Mutable chain under construction: current weight plus accumulated root
// coefficients from the original lambda.
struct Walk {
  const RootDatum& datum;
  Weight start;
  Weight cur;
  std::vector<std::int64_t> k;

  Walk(const RootDatum& d, const Weight& lambda) : datum(d), start(lambda), cur(lambda), k(d.rank(), 0) {}

  // Subtract c * (alpha_lo + ... + alpha_hi), 1-based inclusive.
  void subtract_run(int lo, int hi, std::int64_t c = 1) {
    std::vector<std::int64_t> step(datum.rank(), 0);
    for (int i = lo; i <= hi; ++i) step[i - 1] = c;
    subtract(step);
  }

  void subtract(const std::vector<std::int64_t>& step) {
    cur = datum.subtract_roots(cur, step);
    for (int i = 0; i < datum.rank(); ++i) k[i] += step[i];
  }

  void absorb(const WitnessResult& inner) {
    for (int i = 0; i < datum.rank(); ++i) k[i] += inner.chain.root_coeffs[i];
    cur = inner.mu;
  }

  WitnessResult result() const { return {cur, WitnessChain{start, cur, k}}; }
};

Weight reversed(const Weight& w) {
  Weight out = w;
  std::reverse(out.coeffs.begin(), out.coeffs.end());
  return out;
}

WitnessResult mirror(const WitnessResult& r, const Weight& original) {
  WitnessResult out;
  out.mu = reversed(r.mu);
  auto k = r.chain.root_coeffs;
  std::reverse(k.begin(), k.end());
  out.chain = WitnessChain{original, out.mu, std::move(k)};
  return out;
}

void require_window_lemma_input(const RootDatum& datum, const Weight& lambda, const char* op) {
  if (datum.family() != Family::A) throw PreconditionError(std::string(op) + " is defined for type A only");
  datum.check_weight(lambda);
  if (!lambda.is_dominant()) throw PreconditionError(std::string(op) + ": weight " + lambda.str() + " is not dominant");
}

void require_m_range(int rank, int m, const char* op) {
  const int k = middle_index(rank);
  if (k < 1) {
    throw PreconditionError(std::string(op) + ": rank " + std::to_string(rank) +
                            " too small (k = floor((r-1)/2) = 0, so 1 <= m <= k is empty)");
  }
  if (m < 1 || m > k) {
    throw PreconditionError(std::string(op) + ": need 1 <= m <= k = " + std::to_string(k) + ", got m = " +
                            std::to_string(m));
  }
}

std::int64_t left_mass(const Weight& w, int upto) {
  std::int64_t s = 0;
  for (int i = 1; i <= upto; ++i) s += i * w[i - 1];
  return s;
}

WitnessResult incr_unchecked(const RootDatum& datum, const Weight& lambda, int m) {
  Walk walk(datum, lambda);
  while (true) {
    const Weight& a = walk.cur;
    int j = m;
    while (j >= 1 && a[j - 1] == 0) --j;
    auto last_positive_before = [&](int bound) {
      int i = bound - 1;
      while (i >= 1 && a[i - 1] == 0) --i;
      if (i < 1) throw std::logic_error("incr_witness: invariant sum i*a_i > m lost");
      return i;
    };
    if (a[j - 1] >= 2) {
      walk.subtract_run(j, j);
    } else {
      int i = last_positive_before(j);
      walk.subtract_run(i, j);
    }
    if (j == m) return walk.result();
  }
}

bool middle_hypothesis(const Weight& a, int rank, int m) {
  const int k = middle_index(rank);
  if (rank == 2 * k + 1) return a[k] >= 2 * m + 1;
  return a[k] + a[k + 1] >= 2 * m + 3;
}

// Middle lemma without the 1 <= m range check; m = 0 is used by good_witness
// on ranks 1 and 2.
WitnessResult middle_unchecked(const RootDatum& datum, const Weight& lambda, int m) {
  const int r = datum.rank();
  const int k = middle_index(r);
  Walk walk(datum, lambda);
  if (r == 2 * k + 1) {
    // beta = sum_{t=0}^{m-1} (m-t)(alpha_{k+1-t} + ... + alpha_{k+1+t})
    for (int t = 0; t < m; ++t) walk.subtract_run(k + 1 - t, k + 1 + t, m - t);
    return walk.result();
  }
  const Weight& a = walk.cur;
  if (a[k + 1] <= m) {
    // Rebalance into slot k+2: nu = lambda - sum_{t<s} (s-t) alpha_{k+1-t}.
    std::int64_t s = m + 1 - a[k + 1];
    for (std::int64_t t = 0; t < s; ++t) walk.subtract_run(k + 1 - t, k + 1 - t, s - t);
  } else if (a[k] <= m) {
    std::int64_t s = m + 1 - a[k];
    for (std::int64_t t = 0; t < s; ++t) walk.subtract_run(k + 2 + t, k + 2 + t, s - t);
  }
  // beta = sum_{t=0}^{m-1} (m-t)(alpha_{k+1-t} + ... + alpha_{k+2+t})
  for (int t = 0; t < m; ++t) walk.subtract_run(k + 1 - t, k + 2 + t, m - t);
  return walk.result();
}

WitnessResult m_good_unchecked(const RootDatum& datum, const Weight& lambda, int m) {
  const int r = datum.rank();
  const int k = middle_index(r);
  Walk walk(datum, lambda);
  // Each incr step strictly raises t = a_{k+1} (+ a_{k+2}) and preserves
  // [lambda], so the loop ends once the middle hypothesis is met.
  while (!middle_hypothesis(walk.cur, r, m)) {
    const Weight& a = walk.cur;
    const std::int64_t left = left_mass(a, k);
    const std::int64_t right = left_mass(reversed(a), k);
    if (left > k) {
      walk.absorb(incr_unchecked(datum, a, k));
    } else if (right > k) {
      walk.absorb(mirror(incr_unchecked(datum, reversed(a), k), a));
    } else {
      throw std::logic_error("m_good_witness: threshold invariant lost");
    }
  }
  walk.absorb(middle_unchecked(datum, walk.cur, m));
  return walk.result();
}

}  // namespace

int middle_index(int rank) { return (rank - 1) / 2; }

std::pair<int, int> middle_window(int rank, int m) {
  const int k = middle_index(rank);
  return {k - m + 1, rank - k + m};
}

std::int64_t m_good_threshold(int rank, int m) {
  const std::int64_t k = middle_index(rank);
  if (rank == 2 * k + 1) return 2 * m * (k + 1) + 2 * k + 1;
  return (2 * m + 2) * (k + 1) + 2 * k + 1;
}

WitnessResult incr_witness(const RootDatum& datum, const Weight& lambda, int m) {
  require_window_lemma_input(datum, lambda, "incr_witness");
  require_m_range(datum.rank(), m, "incr_witness");
  const std::int64_t s = left_mass(lambda, m);
  if (s <= m) {
    throw PreconditionError("incr_witness: hypothesis \"sum_{i=1}^m i*a_i > m\" violated (sum = " +
                            std::to_string(s) + ", m = " + std::to_string(m) + ")");
  }
  return incr_unchecked(datum, lambda, m);
}

WitnessResult middle_witness(const RootDatum& datum, const Weight& lambda, int m) {
  require_window_lemma_input(datum, lambda, "middle_witness");
  require_m_range(datum.rank(), m, "middle_witness");
  if (!middle_hypothesis(lambda, datum.rank(), m)) {
    const int k = middle_index(datum.rank());
    if (datum.rank() % 2 == 1) {
      throw PreconditionError("middle_witness: hypothesis \"a_{k+1} >= 2m+1\" violated (a_{k+1} = " +
                              std::to_string(lambda[k]) + ", 2m+1 = " + std::to_string(2 * m + 1) + ")");
    }
    throw PreconditionError("middle_witness: hypothesis \"a_{k+1}+a_{k+2} >= 2m+3\" violated (sum = " +
                            std::to_string(lambda[k] + lambda[k + 1]) + ", 2m+3 = " + std::to_string(2 * m + 3) +
                            ")");
  }
  return middle_unchecked(datum, lambda, m);
}

WitnessResult m_good_witness(const RootDatum& datum, const Weight& lambda, int m) {
  require_window_lemma_input(datum, lambda, "m_good_witness");
  require_m_range(datum.rank(), m, "m_good_witness");
  const std::int64_t level = bracket(datum, lambda);
  const std::int64_t threshold = m_good_threshold(datum.rank(), m);
  if (level < threshold) {
    throw PreconditionError("m_good_witness: hypothesis \"[lambda] >= " +
                            std::string(datum.rank() % 2 ? "2m(k+1)+2k+1" : "(2m+2)(k+1)+2k+1") +
                            "\" violated ([lambda] = " + std::to_string(level) + " < " + std::to_string(threshold) +
                            ")");
  }
  return m_good_unchecked(datum, lambda, m);
}

WitnessResult middle2_witness(const RootDatum& datum, const Weight& lambda) {
  require_window_lemma_input(datum, lambda, "middle2_witness");
  const int r = datum.rank();
  const int k = middle_index(r);
  const std::int64_t level = bracket(datum, lambda);
  if (level < 2 * k + 1) {
    throw PreconditionError("middle2_witness: hypothesis \"[lambda] >= 2k+1\" violated ([lambda] = " +
                            std::to_string(level) + " < " + std::to_string(2 * k + 1) + ")");
  }
  if (lambda[k] > 0 || lambda[r - k - 1] > 0) {
    return {lambda, WitnessChain{lambda, lambda, std::vector<std::int64_t>(r, 0)}};
  }
  // Both middle coefficients vanish, so k >= 1 and one outer side carries
  // mass >= k+1.
  if (left_mass(lambda, k) > k) return incr_unchecked(datum, lambda, k);
  return mirror(incr_unchecked(datum, reversed(lambda), k), lambda);
}

WitnessResult good_witness(const RootDatum& datum, const Weight& lambda) {
  require_window_lemma_input(datum, lambda, "good_witness");
  const std::int64_t r = datum.rank();
  const std::int64_t level = bracket(datum, lambda);
  if (2 * level < r * r + 2 * r - 2) {
    throw PreconditionError("good_witness: hypothesis \"[lambda] >= (r^2+2r-2)/2\" violated ([lambda] = " +
                            std::to_string(level) + ", (r^2+2r-2)/2 = " + std::to_string(r * r + 2 * r - 2) +
                            "/2)");
  }
  return m_good_unchecked(datum, lambda, middle_index(datum.rank()));
}

A5Family a5_good_family(const RootDatum& datum, const Weight& lambda0) {
  if (datum.family() != Family::A || datum.rank() != 5) throw PreconditionError("a5_good_family requires type A5");
  require_window_lemma_input(datum, lambda0, "a5_good_family");
  Walk walk(datum, lambda0);
  while (walk.cur[2] < 25) {
    const Weight& a = walk.cur;
    if (a[0] + 2 * a[1] >= 3) {
      walk.absorb(incr_unchecked(datum, a, 2));
    } else if (a[4] + 2 * a[3] >= 3) {
      walk.absorb(mirror(incr_unchecked(datum, reversed(a), 2), a));
    } else {
      throw PreconditionError("a5_good_family: no dominant mu below lambda0 with b_3 >= 25 found (search stopped at " +
                              a.str() + ", [lambda0] = " + std::to_string(bracket(datum, lambda0)) + ")");
    }
  }
  A5Family fam;
  fam.mu = walk.cur;
  // beta = alpha_2 + 3 alpha_3 + alpha_4 = 5 varpi_3 - sum varpi_i
  walk.subtract({0, 5, 15, 5, 0});
  fam.gamma = walk.cur;
  const auto gamma_k = walk.k;
  fam.orbit_total = 0;
  for (int code = 0; code < 243; ++code) {
    std::vector<std::int64_t> d(5);
    int c = code;
    for (int i = 4; i >= 0; --i) {
      d[i] = c % 3;
      c /= 3;
    }
    Weight member = datum.subtract_roots(fam.gamma, d);
    auto k = gamma_k;
    for (int i = 0; i < 5; ++i) k[i] += d[i];
    fam.orbit_total += orbit_length(datum, member);
    fam.members.push_back({member, WitnessChain{lambda0, member, std::move(k)}});
  }
  return fam;
}

}  // namespace repgrowth
