#include "repgrowth/dominance.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace repgrowth {

namespace {

void require_type_a(const RootDatum& datum, const char* op) {
  if (datum.family() != Family::A) throw PreconditionError(std::string(op) + " is defined for type A only");
}

void require_dominant(const Weight& w, const char* op) {
  if (!w.is_dominant()) throw PreconditionError(std::string(op) + ": weight " + w.str() + " is not dominant");
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Weyl group order of a connected sub-diagram of the datum's Dynkin diagram.
mpz_class component_order(const RootDatum& datum, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return 2;
  auto bond = [&](int a, int b) {
    return std::max(std::abs(datum.cartan(a, b)), std::abs(datum.cartan(b, a)));
  };
  std::map<int, std::vector<int>> nbrs;
  int max_bond = 1;
  for (int a : nodes) {
    for (int b : nodes) {
      if (datum.adjacent(a, b)) {
        nbrs[a].push_back(b);
        max_bond = std::max(max_bond, bond(a, b));
      }
    }
  }
  if (max_bond == 3) return 12;  // G2

  int branch = -1;
  for (int a : nodes)
    if (nbrs[a].size() == 3) branch = a;
  if (branch >= 0) {
    std::vector<int> arms;
    for (int start : nbrs[branch]) {
      int len = 0, prev = branch, cur = start;
      while (true) {
        ++len;
        int next = -1;
        for (int b : nbrs[cur])
          if (b != prev) next = b;
        if (next < 0) break;
        prev = cur;
        cur = next;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      mpz_class two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k - 1);
      return two_pow * factorial(k);  // D_k
    }
    if (arms == std::vector<int>{1, 2, 2}) return 51840;
    if (arms == std::vector<int>{1, 2, 3}) return 2903040;
    if (arms == std::vector<int>{1, 2, 4}) return 696729600;
    throw std::logic_error("unrecognized branched sub-diagram");
  }

  if (max_bond == 2) {
    if (k == 4) {
      // F4 has its double bond in the middle of the chain.
      int end = -1;
      for (int a : nodes)
        if (nbrs[a].size() == 1) end = a;
      int prev = -1, cur = end, pos = 0, double_pos = -1;
      while (true) {
        int next = -1;
        for (int b : nbrs[cur])
          if (b != prev) next = b;
        if (next < 0) break;
        if (bond(cur, next) == 2) double_pos = pos;
        prev = cur;
        cur = next;
        ++pos;
      }
      if (double_pos == 1) return 1152;
    }
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k);
    return two_pow * factorial(k);  // B_k / C_k
  }
  return factorial(k + 1);  // A_k
}

std::int64_t height(const std::vector<std::int64_t>& k) {
  std::int64_t h = 0;
  for (auto x : k) h += x;
  return h;
}

}  // namespace

bool WitnessChain::verify(const RootDatum& datum) const {
  if (source.rank() != datum.rank() || target.rank() != datum.rank()) return false;
  if (static_cast<int>(root_coeffs.size()) != datum.rank()) return false;
  for (auto k : root_coeffs)
    if (k < 0) return false;
  return datum.subtract_roots(source, root_coeffs) == target;
}

bool WitnessChain::is_strict() const {
  for (auto k : root_coeffs)
    if (k > 0) return true;
  return false;
}

std::int64_t bracket(const RootDatum& datum, const Weight& w) {
  require_type_a(datum, "bracket");
  datum.check_weight(w);
  require_dominant(w, "bracket");
  const int r = datum.rank();
  std::int64_t s = 0;
  for (int i = 1; i <= r; ++i) s += std::min(i, r + 1 - i) * w[i - 1];
  return s;
}

std::optional<WitnessChain> dominance_witness(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                                              bool strict) {
  datum.check_weight(lambda);
  datum.check_weight(mu);
  const int r = datum.rank();
  const std::int64_t det = datum.determinant();
  std::vector<std::int64_t> k(r);
  for (int i = 0; i < r; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < r; ++j) acc += static_cast<__int128>(datum.scaled_inverse(i, j)) * (lambda[j] - mu[j]);
    if (acc % det != 0) return std::nullopt;
    acc /= det;
    if (acc < 0) return std::nullopt;
    k[i] = static_cast<std::int64_t>(acc);
  }
  WitnessChain chain{lambda, mu, std::move(k)};
  if (strict && !chain.is_strict()) return std::nullopt;
  return chain;
}

mpz_class weyl_group_order(Family family, int rank) {
  validate_family_rank(family, rank);
  switch (family) {
    case Family::A:
      return factorial(rank + 1);
    case Family::B:
    case Family::C: {
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), 2, rank);
      return t * factorial(rank);
    }
    case Family::D: {
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), 2, rank - 1);
      return t * factorial(rank);
    }
    case Family::E:
      return rank == 6 ? mpz_class(51840) : rank == 7 ? mpz_class(2903040) : mpz_class(696729600);
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

mpz_class weyl_group_order(const RootDatum& datum) { return weyl_group_order(datum.family(), datum.rank()); }

mpz_class weyl_stabilizer_order(const RootDatum& datum, const Weight& w) {
  datum.check_weight(w);
  require_dominant(w, "weyl_stabilizer_order");
  const int r = datum.rank();
  std::vector<bool> seen(r, false);
  mpz_class order = 1;
  for (int s = 0; s < r; ++s) {
    if (w[s] != 0 || seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      comp.push_back(a);
      for (int b = 0; b < r; ++b) {
        if (!seen[b] && w[b] == 0 && datum.adjacent(a, b)) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    order *= component_order(datum, comp);
  }
  return order;
}

mpz_class orbit_length(const RootDatum& datum, const Weight& w) {
  mpz_class stab = weyl_stabilizer_order(datum, w);
  return weyl_group_order(datum) / stab;
}

std::vector<std::vector<std::int64_t>> positive_roots(const RootDatum& datum) {
  const int r = datum.rank();
  std::set<std::vector<std::int64_t>> known;
  std::vector<std::vector<std::int64_t>> layer, all;
  for (int i = 0; i < r; ++i) {
    std::vector<std::int64_t> e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (int i = 0; i < r; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
        int p = 0;
        while (true) {
          auto down = beta;
          down[i] -= p + 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (int k = 0; k < r; ++k) pairing += beta[k] * datum.cartan(i, k);
        if (p - pairing > 0) {
          auto up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return all;
}

std::vector<SaturatedEntry> saturated_dominant_set(const RootDatum& datum, const Weight& lambda, std::size_t cap) {
  datum.check_weight(lambda);
  require_dominant(lambda, "saturated_dominant_set");
  if (cap == 0) throw PreconditionError("saturated_dominant_set: cap must be positive");
  const int r = datum.rank();
  const auto roots = positive_roots(datum);
  // Each dominant mu < lambda is reached from a dominant weight by removing
  // one positive root while staying dominant and above mu.
  std::map<Weight, std::vector<std::int64_t>> found;
  std::deque<Weight> queue;
  found.emplace(lambda, std::vector<std::int64_t>(r, 0));
  queue.push_back(lambda);
  while (!queue.empty()) {
    Weight nu = queue.front();
    queue.pop_front();
    const auto k_nu = found.at(nu);
    for (const auto& beta : roots) {
      Weight mu = datum.subtract_roots(nu, beta);
      if (!mu.is_dominant() || found.count(mu)) continue;
      if (found.size() >= cap) throw CapExceeded(cap);
      auto k = k_nu;
      for (int i = 0; i < r; ++i) k[i] += beta[i];
      found.emplace(mu, std::move(k));
      queue.push_back(mu);
    }
  }
  std::vector<SaturatedEntry> out;
  out.reserve(found.size());
  for (auto& [mu, k] : found) out.push_back({mu, WitnessChain{lambda, mu, k}});
  std::sort(out.begin(), out.end(), [](const SaturatedEntry& a, const SaturatedEntry& b) {
    auto ha = height(a.chain.root_coeffs), hb = height(b.chain.root_coeffs);
    if (ha != hb) return ha < hb;
    return a.weight > b.weight;
  });
  return out;
}

bool is_good(const Weight& w) {
  for (auto a : w.coeffs)
    if (a <= 0) return false;
  return true;
}

}  // namespace repgrowth
