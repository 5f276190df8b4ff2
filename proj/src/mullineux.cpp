#include <functional>

#include "repgrowth/partitions.hpp"

namespace repgrowth {

namespace {

struct Stripped {
  Partition rest;
  int rim_size = 0;
};

// Remove the p-rim: p-segments along the rim, each new segment starting at
// the rightmost node of the row below the previous segment's last node.
Stripped strip_p_rim(const Partition& lam, int p) {
  const int l = lam.length();
  std::vector<int> row_of;  // rim sequence, by row
  std::vector<int> row_start(l + 2, 0);
  for (int i = 1; i <= l; ++i) {
    row_start[i] = static_cast<int>(row_of.size());
    const int lo = std::max(lam.part(i + 1), 1);
    for (int c = lam.part(i); c >= lo; --c) row_of.push_back(i);
  }
  std::vector<int> removed(l + 1, 0);
  int total = 0;
  int cur = 0;
  const int len = static_cast<int>(row_of.size());
  while (cur < len) {
    const int end = std::min(cur + p, len);
    for (int t = cur; t < end; ++t) ++removed[row_of[t]];
    total += end - cur;
    const int last_row = row_of[end - 1];
    if (last_row >= l) break;
    cur = row_start[last_row + 1];
  }
  std::vector<int> parts;
  for (int i = 1; i <= l; ++i)
    if (lam.part(i) - removed[i] > 0) parts.push_back(lam.part(i) - removed[i]);
  std::sort(parts.rbegin(), parts.rend());
  return {Partition(std::move(parts)), total};
}

void check_regular(const Partition& lambda, int p) {
  if (auto part = repeating_part(lambda, p)) {
    throw PreconditionError("partition " + lambda.str() + " is not " + std::to_string(p) + "-regular: part " +
                            std::to_string(*part) + " repeats at least " + std::to_string(p) + " times");
  }
}

}  // namespace

MullineuxSymbol mullineux_symbol(const Partition& lambda, int p) {
  if (p < 2) throw PreconditionError("mullineux_symbol: need p >= 2");
  MullineuxSymbol sym;
  Partition cur = lambda;
  while (cur.size() > 0) {
    auto s = strip_p_rim(cur, p);
    sym.rim_sizes.push_back(s.rim_size);
    sym.lengths.push_back(cur.length());
    cur = std::move(s.rest);
  }
  return sym;
}

Partition from_mullineux_symbol(const MullineuxSymbol& symbol, int p) {
  if (symbol.rim_sizes.size() != symbol.lengths.size())
    throw PreconditionError("from_mullineux_symbol: column count mismatch");
  Partition mu;
  for (std::size_t idx = symbol.rim_sizes.size(); idx-- > 0;) {
    const int a = symbol.rim_sizes[idx];
    const int r = symbol.lengths[idx];
    if (a <= 0 || r < mu.length() || r > mu.length() + a) throw PreconditionError("from_mullineux_symbol: invalid symbol");
    // Rows of nu satisfy mu_i <= nu_i <= mu_{i-1} + 1 (the added nodes lie on the rim).
    std::vector<int> nu(r, 0);
    std::optional<Partition> found;
    std::function<void(int, int)> dfs = [&](int i, int budget) {
      if (found) return;
      if (i > r) {
        if (budget != 0) return;
        Partition cand(nu);
        if (!is_p_regular(cand, p)) return;
        auto s = strip_p_rim(cand, p);
        if (s.rim_size == a && s.rest == mu) found = cand;
        return;
      }
      const int lo = std::max(mu.part(i), 1);
      int hi = i == 1 ? mu.part(1) + budget : std::min(mu.part(i - 1) + 1, nu[i - 2]);
      hi = std::min(hi, mu.part(i) + budget);
      for (int v = hi; v >= lo; --v) {
        nu[i - 1] = v;
        dfs(i + 1, budget - (v - mu.part(i)));
        if (found) return;
      }
    };
    dfs(1, a);
    if (!found) throw PreconditionError("from_mullineux_symbol: no partition has this symbol");
    mu = *found;
  }
  return mu;
}

Partition mullineux(const Partition& lambda, int p) {
  if (p != 0 && !is_prime(p)) throw PreconditionError("mullineux: p must be 0 or prime");
  check_regular(lambda, p);
  if (p == 0) return lambda.conjugate();
  if (p == 2) return lambda;
  MullineuxSymbol sym = mullineux_symbol(lambda, p);
  for (std::size_t i = 0; i < sym.rim_sizes.size(); ++i) {
    const int a = sym.rim_sizes[i];
    sym.lengths[i] = a - sym.lengths[i] + (a % p == 0 ? 0 : 1);
  }
  return from_mullineux_symbol(sym, p);
}

}  // namespace repgrowth
