#include "repgrowth/rootdata.hpp"

#include <sstream>

namespace repgrowth {

char family_letter(Family f) {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return letters[static_cast<int>(f)];
}

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    char c = s[0];
    if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw PreconditionError("unknown root system family '" + s + "'");
}

void validate_family_rank(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw PreconditionError(std::string("no simple root system of type ") + family_letter(family) +
                            std::to_string(rank));
  }
}

bool Weight::is_dominant() const {
  for (auto a : coeffs)
    if (a < 0) return false;
  return true;
}

bool Weight::is_zero() const {
  for (auto a : coeffs)
    if (a != 0) return false;
  return true;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  os << ')';
  return os.str();
}

namespace {

// Dynkin edge between 1-based nodes; `bond` > 1 marks a multiple bond with
// `a` the long end.
struct Edge {
  int a, b, bond;
};

std::vector<Edge> dynkin_edges(Family family, int r) {
  std::vector<Edge> edges;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edges.push_back({i, i + 1, 1});
  };
  switch (family) {
    case Family::A:
      chain(1, r);
      break;
    case Family::B:
      chain(1, r - 1);
      edges.push_back({r - 1, r, 2});
      break;
    case Family::C:
      chain(1, r - 1);
      edges.push_back({r, r - 1, 2});
      break;
    case Family::D:
      chain(1, r - 1);
      edges.push_back({r - 2, r, 1});
      break;
    case Family::E:
      edges.push_back({1, 3, 1});
      chain(3, r);
      edges.push_back({2, 4, 1});
      break;
    case Family::F:
      edges.push_back({1, 2, 1});
      edges.push_back({2, 3, 2});
      edges.push_back({3, 4, 1});
      break;
    case Family::G:
      edges.push_back({2, 1, 3});
      break;
  }
  return edges;
}

std::vector<int> highest_root_table(Family family, int r) {
  switch (family) {
    case Family::A:
      return std::vector<int>(r, 1);
    case Family::B: {
      std::vector<int> n(r, 2);
      n[0] = 1;
      return n;
    }
    case Family::C: {
      std::vector<int> n(r, 2);
      n[r - 1] = 1;
      return n;
    }
    case Family::D: {
      if (r == 3) return {1, 1, 1};
      std::vector<int> n(r, 2);
      n[0] = n[r - 2] = n[r - 1] = 1;
      return n;
    }
    case Family::E:
      if (r == 6) return {1, 2, 2, 3, 2, 1};
      if (r == 7) return {2, 2, 3, 4, 3, 2, 1};
      return {2, 3, 4, 6, 5, 4, 3, 2};
    case Family::F:
      return {2, 3, 4, 2};
    case Family::G:
      return {3, 2};
  }
  return {};
}

}  // namespace

RootDatum RootDatum::make(Family family, int rank) {
  validate_family_rank(family, rank);
  RootDatum d;
  d.family_ = family;
  d.rank_ = rank;
  d.cartan_.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) d.cartan_[i * rank + i] = 2;
  for (const Edge& e : dynkin_edges(family, rank)) {
    int lng = e.a - 1, shrt = e.b - 1;
    // <alpha_long, alpha_short^vee> = -bond sits in row `short`, column `long`.
    d.cartan_[shrt * rank + lng] = -e.bond;
    d.cartan_[lng * rank + shrt] = -1;
  }
  d.highest_root_ = highest_root_table(family, rank);
  d.compute_inverse();
  return d;
}

void RootDatum::compute_inverse() {
  const int r = rank_;
  std::vector<mpq_class> m(r * 2 * r);
  const int w = 2 * r;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i * w + j] = cartan(i, j);
    m[i * w + r + i] = 1;
  }
  mpq_class det = 1;
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (piv < r && m[piv * w + col] == 0) ++piv;
    if (piv == r) throw std::logic_error("singular Cartan matrix");
    if (piv != col) {
      for (int j = 0; j < w; ++j) std::swap(m[piv * w + j], m[col * w + j]);
      det = -det;
    }
    mpq_class p = m[col * w + col];
    det *= p;
    for (int j = 0; j < w; ++j) m[col * w + j] /= p;
    for (int i = 0; i < r; ++i) {
      if (i == col || m[i * w + col] == 0) continue;
      mpq_class f = m[i * w + col];
      for (int j = 0; j < w; ++j) m[i * w + j] -= f * m[col * w + j];
    }
  }
  if (det.get_den() != 1 || !det.get_num().fits_slong_p()) throw std::logic_error("bad Cartan determinant");
  det_ = det.get_num().get_si();
  inv_scaled_.assign(r * r, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      mpq_class v = m[i * w + r + j] * det_;
      if (v.get_den() != 1) throw std::logic_error("adjugate not integral");
      inv_scaled_[i * r + j] = v.get_num().get_si();
    }
  }
}

std::string RootDatum::label() const { return family_letter(family_) + std::to_string(rank_); }

bool RootDatum::has_two_root_lengths() const {
  return family_ == Family::B || family_ == Family::C || family_ == Family::F || family_ == Family::G;
}

Weight RootDatum::highest_root_weight() const {
  std::vector<std::int64_t> k(highest_root_.begin(), highest_root_.end());
  Weight zero = Weight::zero(rank_);
  Weight neg = subtract_roots(zero, k);
  for (auto& a : neg.coeffs) a = -a;
  return neg;
}

std::optional<int> RootDatum::extended_node() const {
  Weight h = highest_root_weight();
  std::optional<int> node;
  for (int i = 0; i < rank_; ++i) {
    if (h[i] == 0) continue;
    if (node) return std::nullopt;
    node = i + 1;
  }
  return node;
}

Weight RootDatum::subtract_roots(const Weight& lambda, const std::vector<std::int64_t>& root_coeffs) const {
  check_weight(lambda);
  if (static_cast<int>(root_coeffs.size()) != rank_)
    throw PreconditionError("root coefficient vector has wrong length");
  Weight out = lambda;
  for (int col = 0; col < rank_; ++col) {
    std::int64_t k = root_coeffs[col];
    if (k == 0) continue;
    for (int row = 0; row < rank_; ++row) out[row] -= k * cartan(row, col);
  }
  return out;
}

void RootDatum::check_weight(const Weight& w) const {
  if (w.rank() != rank_) {
    throw PreconditionError("weight " + w.str() + " has length " + std::to_string(w.rank()) +
                            ", expected rank " + std::to_string(rank_));
  }
}

Weight simple_root_as_weight(const RootDatum& datum, int i) {
  if (i < 1 || i > datum.rank()) {
    throw PreconditionError("simple root index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(datum.rank()));
  }
  Weight w = Weight::zero(datum.rank());
  for (int row = 0; row < datum.rank(); ++row) w[row] = datum.cartan(row, i - 1);
  return w;
}

std::vector<int> highest_root_coeffs(const RootDatum& datum) { return datum.highest_root_coeffs(); }

bool is_restricted(const Weight& w, int p) {
  for (auto a : w.coeffs) {
    if (a < 0) return false;
    if (p > 0 && a > p - 1) return false;
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace repgrowth
