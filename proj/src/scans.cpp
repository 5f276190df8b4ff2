#include "repgrowth/scans.hpp"

#include <map>

#include "repgrowth/bounds.hpp"
#include "repgrowth/partitions.hpp"
#include "repgrowth/witness.hpp"

namespace repgrowth {

void ScanStats::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

std::string ScanStats::summary() const {
  std::string s = std::to_string(inputs) + " inputs, " + std::to_string(applied) + " checks, " +
                  std::to_string(failures) + " failures";
  if (failures) s += "; first: " + first_failure;
  return s;
}

namespace {

void weights_rec(Weight& w, int i, int budget, const std::function<void(const Weight&)>& f) {
  if (i == w.rank()) {
    f(w);
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    w.coeffs[i] = v;
    weights_rec(w, i + 1, budget - v, f);
  }
  w.coeffs[i] = 0;
}

void box_rec(Weight& w, int i, int max_coeff, const std::function<void(const Weight&)>& f) {
  if (i == w.rank()) {
    f(w);
    return;
  }
  for (int v = 0; v <= max_coeff; ++v) {
    w.coeffs[i] = v;
    box_rec(w, i + 1, max_coeff, f);
  }
  w.coeffs[i] = 0;
}

}  // namespace

void for_each_weight_with_sum(int rank, int max_sum, const std::function<void(const Weight&)>& f) {
  Weight w = Weight::zero(rank);
  weights_rec(w, 0, max_sum, f);
}

void for_each_weight_in_box(int rank, int max_coeff, const std::function<void(const Weight&)>& f) {
  Weight w = Weight::zero(rank);
  box_rec(w, 0, max_coeff, f);
}

// ---------------------------------------------------------------------------

namespace {

// Common checks on an engine result: chain ties lambda to mu, mu dominant.
bool chain_ok(const RootDatum& datum, const Weight& lambda, const WitnessResult& res) {
  return res.chain.verify(datum) && res.chain.source == lambda && res.chain.target == res.mu && res.mu.is_dominant();
}

template <class Engine, class Post>
void run_engine(ScanStats& st, const std::string& name, const Weight& lambda, bool hypothesis, Engine engine,
                Post post) {
  ++st.applied;
  try {
    WitnessResult res = engine();
    if (!hypothesis) {
      st.fail(name + " accepted " + lambda.str() + " outside its hypothesis");
    } else if (!post(res)) {
      st.fail(name + " postcondition failed on " + lambda.str() + " -> " + res.mu.str());
    }
  } catch (const PreconditionError& e) {
    if (hypothesis) st.fail(name + " rejected " + lambda.str() + ": " + e.what());
  } catch (const std::exception& e) {
    st.fail(name + " raised on " + lambda.str() + ": " + e.what());
  }
}

}  // namespace

ScanStats scan_witness_lemmas(int max_rank, int max_sum) {
  ScanStats st;
  for (int r = 1; r <= max_rank; ++r) {
    const RootDatum datum = RootDatum::make(Family::A, r);
    const int k = middle_index(r);
    for_each_weight_with_sum(r, max_sum, [&](const Weight& lam) {
      ++st.inputs;
      const auto br = bracket(datum, lam);
      for (int m = 1; m <= k; ++m) {
        std::int64_t left = 0;
        for (int i = 1; i <= m; ++i) left += i * lam[i - 1];
        run_engine(st, "incr(m=" + std::to_string(m) + ")", lam, left > m,
                   [&] { return incr_witness(datum, lam, m); },
                   [&](const WitnessResult& res) {
                     if (!chain_ok(datum, lam, res) || bracket(datum, res.mu) != br) return false;
                     for (int i = m + 2; i <= r; ++i)
                       if (res.mu[i - 1] != lam[i - 1]) return false;
                     return res.mu[m] > lam[m];
                   });

        const bool mid_hyp = r % 2 == 1 ? lam[k] >= 2 * m + 1 : lam[k] + lam[k + 1] >= 2 * m + 3;
        const auto [lo, hi] = middle_window(r, m);
        auto window_ok = [&, lo = lo, hi = hi](const WitnessResult& res) {
          if (!chain_ok(datum, lam, res)) return false;
          for (int i = lo; i <= hi; ++i)
            if (res.mu[i - 1] <= 0) return false;
          return true;
        };
        run_engine(st, "middle(m=" + std::to_string(m) + ")", lam, mid_hyp,
                   [&] { return middle_witness(datum, lam, m); }, window_ok);
        run_engine(st, "m-good(m=" + std::to_string(m) + ")", lam, br >= m_good_threshold(r, m),
                   [&] { return m_good_witness(datum, lam, m); }, window_ok);
      }
      run_engine(st, "middle2", lam, br >= 2 * k + 1, [&] { return middle2_witness(datum, lam); },
                 [&](const WitnessResult& res) {
                   return chain_ok(datum, lam, res) && bracket(datum, res.mu) == br &&
                          (res.mu[k] > 0 || res.mu[r - k - 1] > 0);
                 });
      run_engine(st, "good", lam, 2 * br >= std::int64_t(r) * r + 2 * r - 2,
                 [&] { return good_witness(datum, lam); },
                 [&](const WitnessResult& res) { return chain_ok(datum, lam, res) && is_good(res.mu); });
    });
  }
  return st;
}

ScanStats scan_bounds_consistency(int max_rank, int p, std::size_t cap) {
  ScanStats st;
  for (int r = 1; r <= max_rank; ++r) {
    const RootDatum datum = RootDatum::make(Family::A, r);
    const mpz_class w_order = weyl_group_order(datum);
    for_each_weight_in_box(r, p - 1, [&](const Weight& lam) {
      ++st.inputs;
      ++st.applied;
      const auto sat = saturated_dominant_set(datum, lam, cap);
      mpz_class total = 0;
      for (const auto& e : sat) {
        const mpz_class orb = orbit_length(datum, e.weight);
        if (orb * weyl_stabilizer_order(datum, e.weight) != w_order) st.fail("orbit*stabilizer at " + e.weight.str());
        if (!e.chain.verify(datum)) st.fail("saturated-set chain at " + e.weight.str());
        total += orb;
      }
      const mpz_class n = n_lambda(datum, lam);
      if (n > total) st.fail("N(lambda) = " + n.get_str() + " > " + total.get_str() + " at " + lam.str());
    });
  }
  return st;
}

ScanStats scan_orbit_stabilizer(int max_rank, int max_coeff) {
  ScanStats st;
  std::vector<std::pair<Family, int>> types;
  for (int r = 1; r <= max_rank; ++r) types.emplace_back(Family::A, r);
  for (int r = 2; r <= max_rank; ++r) types.emplace_back(Family::B, r), types.emplace_back(Family::C, r);
  for (int r = 3; r <= max_rank; ++r) types.emplace_back(Family::D, r);
  types.insert(types.end(), {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}});
  for (auto [fam, r] : types) {
    const RootDatum datum = RootDatum::make(fam, r);
    const mpz_class order = weyl_group_order(datum);
    for_each_weight_in_box(r, max_coeff, [&](const Weight& w) {
      ++st.inputs;
      ++st.applied;
      if (orbit_length(datum, w) * weyl_stabilizer_order(datum, w) != order)
        st.fail(datum.label() + " at " + w.str());
    });
  }
  return st;
}

ScanStats scan_char2(int max_r) {
  ScanStats st;
  for (int r = 0; r <= max_r; ++r)
    for (int m = 0; m <= r; ++m) {
      ++st.inputs;
      ++st.applied;
      auto [a, b] = char2_counts(r, m);
      if (a > b) st.fail("r = " + std::to_string(r) + ", m = " + std::to_string(m));
    }
  return st;
}

ScanStats scan_mullineux(int max_n, const std::vector<int>& primes) {
  ScanStats st;
  for (int p : primes)
    for (int n = 0; n <= max_n; ++n)
      for (const auto& lam : p_regular_partitions(n, p)) {
        ++st.inputs;
        ++st.applied;
        const std::string where = "p = " + std::to_string(p) + ", " + lam.str();
        try {
          const Partition img = mullineux(lam, p);
          if (img.size() != n || !is_p_regular(img, p)) st.fail("image not p-regular at " + where);
          else if (mullineux(img, p) != lam) st.fail("not an involution at " + where);
          else if (m_p(lam, p) != m_p(img, p)) st.fail("m_p not symmetric at " + where);
        } catch (const std::exception& e) {
          st.fail(where + ": " + e.what());
        }
      }
  return st;
}

ScanStats scan_mullineux_conjugation(int max_n) {
  ScanStats st;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& lam : p_regular_partitions(n, 0)) {
      ++st.inputs;
      ++st.applied;
      if (mullineux(lam, 0) != lam.conjugate()) st.fail("p = 0 at " + lam.str());
      // a prime above n leaves every partition regular and behaves like p = 0
      int big = n + 1;
      while (!is_prime(big)) ++big;
      if (big > 2 && mullineux(lam, big) != lam.conjugate())
        st.fail("p = " + std::to_string(big) + " at " + lam.str());
    }
  return st;
}

ScanStats scan_bound3_hook(int lo, int hi) {
  ScanStats st;
  for (int n = lo; n <= hi; ++n)
    for (const auto& lam : p_regular_partitions(n, 0)) {
      ++st.inputs;
      ++st.applied;
      if (!bound3_value(lam, 0).at_most(hook_length_dim(lam))) st.fail(lam.str());
    }
  return st;
}

ScanStats scan_sym1_counting(int max_r, const std::vector<int>& primes) {
  ScanStats st;
  const auto pc = partition_counts(max_r);
  for (int p : primes)
    for (int r = 5; r <= max_r; ++r) {
      std::map<int, std::size_t> by_defect;  // r - m_p -> count
      for (const auto& lam : p_regular_partitions(r, p)) ++by_defect[r - m_p(lam, p)];
      std::size_t running = 0;
      mpz_class psum = 0;
      for (int n0 = 0; n0 <= r; ++n0) {
        ++st.inputs;
        ++st.applied;
        running += by_defect.count(n0) ? by_defect[n0] : 0;
        psum += pc[n0];
        if (mpz_class(static_cast<unsigned long>(running)) > 2 * psum)
          st.fail("p = " + std::to_string(p) + ", r = " + std::to_string(r) + ", n0 = " + std::to_string(n0));
      }
    }
  return st;
}

}  // namespace repgrowth
