#include "repgrowth/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace repgrowth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad partition part '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("bad partition part '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out(first(), 0);
  for (int c = 1; c <= first(); ++c)
    for (int v : parts_)
      if (v >= c) ++out[c - 1];
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

std::optional<int> repeating_part(const Partition& lambda, int p) {
  if (p <= 0) return std::nullopt;
  const auto& v = lambda.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (static_cast<int>(j - i) >= p) return v[i];
    i = j;
  }
  return std::nullopt;
}

bool is_p_regular(const Partition& lambda, int p) { return !repeating_part(lambda, p).has_value(); }

// ---------------------------------------------------------------------------

std::vector<mpz_class> partition_counts(int n) {
  if (n < 0) throw PreconditionError("partition_count: need n >= 0");
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      mpz_class term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    p[m] = acc;
  }
  return p;
}

mpz_class partition_count(int n) { return partition_counts(n).back(); }

PartitionBoundResult partition_bound(int n, PrecisionPolicy policy) {
  if (n < 1) throw PreconditionError("partition_bound: need n >= 1");
  PartitionBoundResult res;
  res.exact = partition_count(n);
  res.certificate = certify(
      Relation::less,
      [&](mpfr_prec_t prec) {
        Interval arg = Interval::pi(prec) * sqrt(Interval::from_mpq(mpq_class(2 * n, 3), prec));
        return std::make_pair(Interval::from_mpz(res.exact, prec), exp(arg));
      },
      policy);
  return res;
}

std::vector<mpz_class> k_counts(int r, int smax) {
  if (r < 1) throw PreconditionError("k_count: need r >= 1");
  if (smax < 0) throw PreconditionError("k_count: need s >= 0");
  std::vector<mpz_class> c(smax + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= r; ++i) {
    const int w = std::min(i, r + 1 - i);
    for (int s = w; s <= smax; ++s) c[s] += c[s - w];
  }
  return c;
}

mpz_class k_count(int r, int s) { return k_counts(r, s).back(); }

mpz_class k_sum(int r, int N) {
  mpz_class total = 0;
  for (const auto& v : k_counts(r, N)) total += v;
  return total;
}

KSumBoundResult k_sum_bound(int N, PrecisionPolicy policy) {
  if (N < 0) throw PreconditionError("k_sum_bound: need N >= 0");
  // Each weight value j occurs at most twice among min(i, r+1-i), so the
  // coefficients of prod_j (1 - x^j)^{-2} dominate k(r, s) for every r.
  std::vector<mpz_class> c(N + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= N; ++j)
    for (int pass = 0; pass < 2; ++pass)
      for (int s = j; s <= N; ++s) c[s] += c[s - j];
  KSumBoundResult res;
  for (const auto& v : c) res.majorant += v;
  res.strict = N > 0;
  if (!res.strict) res.note = "N = 0: both sides equal 1; only the non-strict inequality holds";
  res.certificate = certify(
      res.strict ? Relation::less : Relation::less_equal,
      [&](mpfr_prec_t prec) {
        Interval lead = Interval::from_int(long(N + 1) * (N + 2) / 2, prec);
        Interval e = exp(Interval::from_int(2, prec) * Interval::pi(prec) *
                         sqrt(Interval::from_mpq(mpq_class(N, 3), prec)));
        return std::make_pair(Interval::from_mpz(res.majorant, prec), lead * e);
      },
      policy);
  return res;
}

// ---------------------------------------------------------------------------

PRegularPartitions::PRegularPartitions(int n, int p) : n_(n), p_(p) {
  if (n < 0) throw PreconditionError("p_regular_partitions: need n >= 0");
  if (p != 0 && !is_prime(p)) throw PreconditionError("p_regular_partitions: p must be 0 or prime");
}

void PRegularPartitions::reset() {
  started_ = false;
  done_ = false;
  cur_.clear();
}

// Next partition of n in lexicographically descending order.
bool PRegularPartitions::advance() {
  if (!started_) {
    started_ = true;
    cur_.clear();
    if (n_ > 0) cur_.push_back(n_);
    return true;
  }
  int rem = 0;
  while (!cur_.empty() && cur_.back() == 1) {
    cur_.pop_back();
    ++rem;
  }
  if (cur_.empty()) return false;
  const int x = --cur_.back();
  ++rem;
  while (rem >= x) {
    cur_.push_back(x);
    rem -= x;
  }
  if (rem > 0) cur_.push_back(rem);
  return true;
}

std::optional<Partition> PRegularPartitions::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    Partition lam(cur_);
    if (is_p_regular(lam, p_)) return lam;
  }
  return std::nullopt;
}

std::vector<Partition> PRegularPartitions::all() {
  reset();
  std::vector<Partition> out;
  while (auto lam = next()) out.push_back(std::move(*lam));
  reset();
  return out;
}

std::vector<Partition> p_regular_partitions(int n, int p) { return PRegularPartitions(n, p).all(); }

int m_p(const Partition& lambda, int p) {
  if (!is_p_regular(lambda, p)) {
    throw PreconditionError("m_p: partition " + lambda.str() + " is not " + std::to_string(p) + "-regular");
  }
  if (p == 2) return lambda.first();
  return std::max(lambda.first(), mullineux(lambda, p).first());
}

mpz_class Sqrt2Power::squared() const {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return v;
}

Interval Sqrt2Power::value(mpfr_prec_t prec) const {
  return pow(Interval::from_int(2, prec), mpq_class(exponent, 2));
}

bool Sqrt2Power::at_most(const mpz_class& x) const { return x >= 0 && x * x >= squared(); }

Sqrt2Power bound3_value(const Partition& lambda, int p) {
  if (lambda.size() < 5) throw PreconditionError("bound3: need |lambda| >= 5");
  return Sqrt2Power{lambda.size() - m_p(lambda, p)};
}

mpz_class hook_length_dim(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  mpz_class hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) hooks *= static_cast<unsigned long>(lambda.part(i) - j + conj.part(j) - i + 1);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), lambda.size());
  return f / hooks;
}

// ---------------------------------------------------------------------------

SymGroup parse_sym_group(const std::string& s) {
  if (s == "S") return SymGroup::S;
  if (s == "A") return SymGroup::A;
  if (s == "cover") return SymGroup::cover;
  throw PreconditionError("unknown group '" + s + "' (expected S, A or cover)");
}

const char* sym_group_name(SymGroup g) {
  switch (g) {
    case SymGroup::S: return "S";
    case SymGroup::A: return "A";
    case SymGroup::cover: return "cover";
  }
  return "S";
}

namespace {

// b(n) = n^{5/2}/12.32
Interval b_value(const mpz_class& n, mpfr_prec_t prec) {
  return pow(Interval::from_mpz(n, prec), mpq_class(5, 2)) / Interval::from_mpq(mpq_class(1232, 100), prec);
}

CheckResult from_certificate(std::string id, std::string statement, const Certificate& c) {
  return {std::move(id), std::move(statement), c.verdict,
          "[" + c.lhs.hi_string(12) + "] vs [" + c.rhs.lo_string(12) + "] at " + std::to_string(c.precision) +
              " bits"};
}

}  // namespace

BoundReport sym_rn_bound(int r, const mpz_class& n, int p, SymGroup group, PrecisionPolicy policy) {
  if (r < 5) throw PreconditionError("sym_rn_bound: need r >= 5");
  if (n < 1) throw PreconditionError("sym_rn_bound: need n >= 1");
  if (p != 0 && !is_prime(p)) throw PreconditionError("sym_rn_bound: p must be 0 or prime");
  const mpfr_prec_t prec = policy.start;
  BoundReport rep;
  rep.name = "sym_rn_upper";
  rep.inputs = {{"group", sym_group_name(group)}, {"r", std::to_string(r)}, {"n", n.get_str()}, {"p", std::to_string(p)}};
  rep.value = n == 1 ? Quantity::of(mpz_class(1), "n^(5/2)")
                     : Quantity::of(pow(Interval::from_mpz(n, prec), mpq_class(5, 2)), "n^(5/2)");

  if (n >= 2 && group == SymGroup::S)
    rep.alternatives.emplace_back("f5", Quantity::of(f_value(FName::f5, n, prec), "4 log2(n) exp(2 pi sqrt(log2(n)/3))"));

  if (n == 1) {
    rep.guard_detail = "n = 1";
    return rep;
  }
  if (r <= 12) {
    rep.guard_detail = "r <= 12";
    rep.assumptions.push_back("r <= 12: Brauer character tables (JLPW atlas)");
    return rep;
  }
  if (n < 11) {
    rep.guard_detail = "n < 11 <= r - 2: at most the two linear characters";
    rep.assumptions.push_back("smallest nontrivial projective degree of A_r is at least r - 2");
    return rep;
  }
  mpz_class cutoff;
  mpz_ui_pow_ui(cutoff.get_mpz_t(), 2, (r - 3) / 2);
  if (n >= cutoff) {
    rep.guard_detail = "n >= 2^floor((r-3)/2): all irreducibles counted";
    const mpz_class pr = partition_count(r);
    auto cert = certify(
        Relation::less,
        [&](mpfr_prec_t pr2) {
          return std::make_pair(Interval::from_mpz(4 * pr, pr2), pow(Interval::from_mpz(n, pr2), mpq_class(5, 2)));
        },
        policy);
    rep.checks.push_back(from_certificate("sym.all_irr", "4 p(r) < n^2.5", cert));
  } else {
    rep.guard_detail = "n < 2^floor((r-3)/2): projective modules factor through S_r or A_r";
    if (group == SymGroup::cover) rep.assumptions.push_back("small projective degrees are linear (published classification)");
    if (group == SymGroup::S || group == SymGroup::cover) {
      rep.alternatives.emplace_back("b", Quantity::of(b_value(n, prec), "n^(5/2)/12.32"));
      if (n >= 1503) {
        auto cert = certify(
            Relation::less,
            [&](mpfr_prec_t pr2) { return std::make_pair(f_value(FName::f5, n, pr2), b_value(n, pr2)); }, policy);
        rep.checks.push_back(from_certificate("sym.f5_below_b", "f5(n) < b(n)", cert));
      } else {
        struct Step {
          long lo, r_max;
        };
        for (Step s : {Step{677, 60}, Step{172, 39}, Step{53, 21}}) {
          if (n >= s.lo) {
            const mpz_class pv = partition_count(static_cast<int>(s.r_max));
            auto cert = certify(
                Relation::less,
                [&](mpfr_prec_t pr2) {
                  return std::make_pair(Interval::from_mpz(pv, pr2), b_value(mpz_class(s.lo), pr2));
                },
                policy);
            rep.checks.push_back(from_certificate("sym.p" + std::to_string(s.r_max),
                                                  "p(" + std::to_string(s.r_max) + ") < b(" + std::to_string(s.lo) + ")",
                                                  cert));
            break;
          }
        }
        if (n < 53) rep.assumptions.push_back("n < (r^2-5r+2)/2: at most 4 modules (James)");
      }
    }
    if (group == SymGroup::A || group == SymGroup::cover) {
      auto cert = certify(
          Relation::less,
          [&](mpfr_prec_t pr2) {
            return std::make_pair(b_value(n, pr2) + Interval::from_int(2, pr2) * b_value(2 * n, pr2),
                                  pow(Interval::from_mpz(n, pr2), mpq_class(5, 2)));
          },
          policy);
      rep.checks.push_back(from_certificate("sym.alt_combination", "b(n) + 2 b(2n) < n^2.5", cert));
    }
  }
  for (const auto& c : rep.checks)
    if (c.verdict == Verdict::fails) rep.valid = false;
  return rep;
}

}  // namespace repgrowth
