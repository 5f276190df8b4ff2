#include "repgrowth/commands.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "CLI11.hpp"

namespace repgrowth {

namespace {

mpz_class parse_n(const std::string& s) {
  mpz_class n;
  if (s.empty() || s[0] == '-' || s[0] == '+' || n.set_str(s, 10) != 0)
    throw PreconditionError("--n must be a positive integer, got '" + s + "'");
  return n;
}

std::string quantity_text(const Quantity& q) {
  switch (q.kind) {
    case QuantityKind::exact: return q.exact.get_str();
    case QuantityKind::interval: return "[" + q.interval->lo_string(12) + ", " + q.interval->hi_string(12) + "]";
    case QuantityKind::external: return "external";
  }
  return {};
}

Json bracket_transcript(const RootDatum& datum, const Weight& lambda, const WitnessResult& res) {
  Json t;
  t["chain_verified"] = res.chain.verify(datum) && res.chain.source == lambda && res.chain.target == res.mu;
  t["mu_dominant"] = res.mu.is_dominant();
  t["bracket_lambda"] = bracket(datum, lambda);
  t["bracket_mu"] = bracket(datum, res.mu);
  return t;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  std::vector<std::int64_t> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::int64_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc() || ptr != last)
      throw PreconditionError("bad weight '" + text + "': expected comma-separated integers");
    c.push_back(v);
    pos = end + 1;
  }
  return Weight(std::move(c));
}

Table flatten(const Json& j) {
  Table t{{"field", "value"}, {}};
  std::function<void(const Json&, const std::string&)> rec = [&](const Json& v, const std::string& path) {
    if (v.is_object()) {
      if (v.empty()) t.rows.push_back({path, "{}"});
      for (const auto& [k, x] : v.items()) rec(x, path.empty() ? k : path + "." + k);
    } else if (v.is_array()) {
      if (v.empty()) t.rows.push_back({path, "[]"});
      for (std::size_t i = 0; i < v.size(); ++i) rec(v[i], path + "[" + std::to_string(i) + "]");
    } else {
      t.rows.push_back({path, v.is_string() ? v.get<std::string>() : v.dump()});
    }
  };
  rec(j, "");
  return t;
}

// ---------------------------------------------------------------------------

CommandResult cmd_bound(const BoundArgs& a) {
  const Family f = parse_family(a.family);
  validate_family_rank(f, a.rank);
  BoundReport rep = rn_upper(f, a.rank, parse_n(a.n), a.p, a.policy);
  CommandResult out;
  out.json = to_json(rep);
  out.table = flatten(out.json);
  out.exit_code = rep.valid ? 0 : 1;
  return out;
}

CommandResult cmd_sym_bound(const SymBoundArgs& a) {
  BoundReport rep = sym_rn_bound(a.r, parse_n(a.n), a.p, parse_sym_group(a.group), a.policy);
  CommandResult out;
  out.json = to_json(rep);
  out.table = flatten(out.json);
  out.exit_code = rep.valid ? 0 : 1;
  return out;
}

CommandResult cmd_witness(const WitnessArgs& a) {
  const RootDatum datum = RootDatum::make(Family::A, a.rank);
  const Weight lambda = parse_weight(a.weight);
  datum.check_weight(lambda);
  const bool takes_m = a.engine == "incr" || a.engine == "middle" || a.engine == "m-good";
  if (takes_m && !a.m) throw PreconditionError("witness " + a.engine + " needs --m");
  if (!takes_m && a.m) throw PreconditionError("witness " + a.engine + " takes no --m");

  CommandResult out;
  Json& j = out.json;
  j["engine"] = a.engine;
  j["family"] = "A";
  j["rank"] = a.rank;
  if (a.m) j["m"] = *a.m;
  j["lambda"] = to_json(lambda);

  if (a.engine == "a5") {
    A5Family fam = a5_good_family(datum, lambda);
    bool all_ok = true;
    Json members = Json::array();
    for (const auto& m : fam.members) {
      const bool ok = m.chain.verify(datum) && m.chain.source == lambda && is_good(m.mu);
      all_ok = all_ok && ok;
      members.push_back({{"mu", to_json(m.mu)}, {"chain", to_json(m.chain)}, {"verified", ok}});
    }
    j["mu"] = to_json(fam.mu);
    j["gamma"] = to_json(fam.gamma);
    j["members"] = members;
    j["orbit_total"] = Json{{"kind", "exact"}, {"value", fam.orbit_total.get_str()}, {"text", "sum of |W mu| over members"}};
    j["transcript"] = {{"members", fam.members.size()}, {"all_verified", all_ok}};
    out.exit_code = all_ok ? 0 : 1;
    out.table = flatten(j);
    return out;
  }

  WitnessResult res;
  Json post;
  if (a.engine == "incr") {
    res = incr_witness(datum, lambda, *a.m);
    bool tail = true;
    for (int i = *a.m + 2; i <= a.rank; ++i) tail = tail && res.mu[i - 1] == lambda[i - 1];
    post["statement"] = "[mu] = [lambda], b_i = a_i for i >= m+2, b_{m+1} > a_{m+1}";
    post["holds"] = bracket(datum, res.mu) == bracket(datum, lambda) && tail && res.mu[*a.m] > lambda[*a.m];
  } else if (a.engine == "middle" || a.engine == "m-good") {
    res = a.engine == "middle" ? middle_witness(datum, lambda, *a.m) : m_good_witness(datum, lambda, *a.m);
    const auto [lo, hi] = middle_window(a.rank, *a.m);
    bool ok = true;
    for (int i = lo; i <= hi; ++i) ok = ok && res.mu[i - 1] > 0;
    post["statement"] = "b_i > 0 for " + std::to_string(lo) + " <= i <= " + std::to_string(hi);
    post["holds"] = ok;
  } else if (a.engine == "middle2") {
    res = middle2_witness(datum, lambda);
    const int k = middle_index(a.rank);
    const std::string b1 = "b_" + std::to_string(k + 1) + " > 0";
    const std::string b2 = "b_" + std::to_string(a.rank - k) + " > 0";
    post["statement"] = "[mu] = [lambda] and " + (k + 1 == a.rank - k ? b1 : "(" + b1 + " or " + b2 + ")");
    post["holds"] = bracket(datum, res.mu) == bracket(datum, lambda) && (res.mu[k] > 0 || res.mu[a.rank - k - 1] > 0);
  } else if (a.engine == "good") {
    res = good_witness(datum, lambda);
    post["statement"] = "every b_i > 0";
    post["holds"] = is_good(res.mu);
  } else {
    throw PreconditionError("unknown witness engine '" + a.engine + "'");
  }
  j["mu"] = to_json(res.mu);
  j["chain"] = to_json(res.chain);
  Json t = bracket_transcript(datum, lambda, res);
  t["postcondition"] = post;
  const bool ok = t["chain_verified"].get<bool>() && t["mu_dominant"].get<bool>() && post["holds"].get<bool>();
  j["transcript"] = t;
  out.exit_code = ok ? 0 : 1;
  out.table = flatten(j);
  return out;
}

CommandResult cmd_enumerate(const EnumerateArgs& a) {
  const Family f = parse_family(a.family);
  validate_family_rank(f, a.rank);
  if (!is_prime(a.p)) throw PreconditionError("--p must be prime, got " + std::to_string(a.p));
  if (a.n_max < 0) throw PreconditionError("--n-max must be >= 0");
  if (a.bound != "nlambda" && a.bound != "premet")
    throw PreconditionError("--bound must be nlambda or premet, got '" + a.bound + "'");
  const RootDatum datum = RootDatum::make(f, a.rank);
  if (a.bound == "nlambda" && f != Family::A) throw PreconditionError("--bound nlambda is defined for type A only");

  // Lower bound per restricted weight; nullopt when the saturated set
  // outgrew the cap, in which case the bound exceeds the cap.
  std::vector<std::optional<mpz_class>> lows;
  std::string guard;
  if (a.n_max > 0) {
    std::vector<std::int64_t> c(a.rank, 0);
    while (true) {
      const Weight w(c);
      if (a.bound == "nlambda") {
        lows.emplace_back(n_lambda(datum, w));
      } else {
        try {
          BoundReport rep = premet_lower(datum, w, a.p, a.cap);
          if (!rep.valid && guard.empty()) guard = rep.guard_detail;
          lows.emplace_back(rep.value.exact);
        } catch (const CapExceeded&) {
          lows.emplace_back(std::nullopt);
        }
      }
      int i = 0;
      while (i < a.rank && ++c[i] == a.p) c[i++] = 0;
      if (i == a.rank) break;
    }
  }

  CommandResult out;
  Json& j = out.json;
  j["family"] = std::string(1, family_letter(f));
  j["rank"] = a.rank;
  j["p"] = a.p;
  j["bound"] = a.bound;
  j["n_max"] = a.n_max;
  j["cap"] = a.cap;
  j["weights"] = lows.size();
  if (!guard.empty()) j["guard"] = guard;
  out.table.columns = {"n", "count", "theorem_bound", "margin", "status"};
  Json rows = Json::array();
  bool unresolved = false;
  for (int n = 1; n <= a.n_max; ++n) {
    std::size_t count = 0, open = 0;
    for (const auto& v : lows) {
      if (!v) {
        if (mpz_class(n) > mpz_class(static_cast<unsigned long>(a.cap))) ++open;
      } else if (*v <= n) {
        ++count;
      }
    }
    const std::string status = open ? "cap exceeded: " + std::to_string(open) + " weights unresolved" : "ok";
    unresolved = unresolved || open;
    BoundReport th = rn_upper(f, a.rank, n, a.p, a.policy);
    Quantity margin;
    const mpz_class cnt(static_cast<unsigned long>(count));
    if (th.value.kind == QuantityKind::exact) {
      margin = Quantity::of(th.value.exact - cnt, "theorem bound - count");
    } else {
      const mpfr_prec_t prec = th.value.interval->precision();
      margin = Quantity::of(*th.value.interval - Interval::from_mpz(cnt, prec), "theorem bound - count");
    }
    rows.push_back({{"n", n},
                    {"count", {{"kind", "exact"}, {"value", cnt.get_str()}, {"text", "restricted lambda with bound <= n"}}},
                    {"theorem_bound", to_json(th.value)},
                    {"margin", to_json(margin)},
                    {"status", status}});
    out.table.rows.push_back({std::to_string(n), cnt.get_str(), quantity_text(th.value), quantity_text(margin), status});
  }
  j["rows"] = rows;
  out.exit_code = unresolved ? 2 : 0;
  return out;
}

CommandResult cmd_verify(const VerifyArgs& a) {
  VerificationSuite s = run_suite(a.suite, a.scale, a.policy, a.cap);
  CommandResult out;
  out.json = to_json(s);
  out.table.columns = {"id", "anchor", "verdict", "detail"};
  for (const auto& c : s.checks) out.table.rows.push_back({c.id, c.anchor, suite_verdict_name(c.verdict), c.detail});
  out.exit_code = suite_exit_code(s);
  return out;
}

CommandResult cmd_mullineux(const MullineuxArgs& a) {
  const Partition lam = Partition::parse(a.partition);
  const Partition img = mullineux(lam, a.p);
  const bool back = mullineux(img, a.p) == lam;
  CommandResult out;
  Json& j = out.json;
  j["p"] = a.p;
  j["input"] = to_json(lam);
  j["image"] = to_json(img);
  j["text"] = img.str();
  j["involution_check"] = back;
  if (a.p > 0 && lam.size() > 0) j["m_p"] = m_p(lam, a.p);
  out.table = flatten(j);
  out.exit_code = back ? 0 : 1;
  return out;
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation growth bounds, witnesses and verification suites"};
  app.require_subcommand(1);
  std::string format = "json";
  int prec = 256;
  std::size_t cap = 10'000'000;
  std::string scale = "desk";
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto add_prec = [&](CLI::App* sub) {
    sub->add_option("--prec", prec, "starting precision in bits (<= 1024)")->check(CLI::Range(16, 1024));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  BoundArgs bound;
  auto* sb = app.add_subcommand("bound", "upper bound on R_n for a simple algebraic group");
  sb->add_option("--family", bound.family)->required();
  sb->add_option("--rank", bound.rank)->required();
  sb->add_option("--n", bound.n)->required();
  sb->add_option("--p", bound.p)->required();
  add_prec(sb);
  add_format(sb);

  SymBoundArgs sym;
  auto* ss = app.add_subcommand("sym-bound", "upper bound on R_n for S_r, A_r or their double covers");
  ss->add_option("--r", sym.r)->required();
  ss->add_option("--n", sym.n)->required();
  ss->add_option("--p", sym.p)->required();
  ss->add_option("--group", sym.group)->check(CLI::IsMember({"S", "A", "cover"}));
  add_prec(ss);
  add_format(ss);

  WitnessArgs wit;
  int m = 0;
  auto* sw = app.add_subcommand("witness", "dominance witnesses in type A");
  sw->add_option("engine", wit.engine)->required()->check(CLI::IsMember({"incr", "middle", "m-good", "middle2", "good", "a5"}));
  sw->add_option("--rank", wit.rank)->required();
  sw->add_option("--weight", wit.weight)->required();
  auto* m_opt = sw->add_option("--m", m);
  add_format(sw);

  EnumerateArgs en;
  auto* se = app.add_subcommand("enumerate", "count restricted weights by a dimension lower bound");
  se->add_option("--family", en.family)->required();
  se->add_option("--rank", en.rank)->required();
  se->add_option("--p", en.p)->required();
  se->add_option("--n-max", en.n_max)->required();
  se->add_option("--bound", en.bound)->check(CLI::IsMember({"nlambda", "premet"}));
  se->add_option("--cap", cap);
  add_prec(se);
  add_format(se);

  VerifyArgs ver;
  auto* sv = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> ids = suite_ids();
  ids.push_back("all");
  sv->add_option("--suite", ver.suite)->required()->check(CLI::IsMember(ids));
  sv->add_option("--scale", scale)->check(CLI::IsMember({"desk", "extended"}));
  sv->add_option("--cap", cap);
  add_prec(sv);
  add_format(sv);

  MullineuxArgs mul;
  auto* sm = app.add_subcommand("mullineux", "Mullineux image of a p-regular partition");
  sm->add_option("--p", mul.p)->required();
  sm->add_option("--partition", mul.partition)->required();
  add_format(sm);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const PrecisionPolicy policy{prec, 1024};
  CommandResult res;
  try {
    if (*sb) {
      bound.policy = policy;
      res = cmd_bound(bound);
    } else if (*ss) {
      sym.policy = policy;
      res = cmd_sym_bound(sym);
    } else if (*sw) {
      if (*m_opt) wit.m = m;
      res = cmd_witness(wit);
    } else if (*se) {
      en.cap = cap;
      en.policy = policy;
      res = cmd_enumerate(en);
    } else if (*sv) {
      ver.scale = parse_scale(scale);
      ver.policy = policy;
      ver.cap = cap;
      res = cmd_verify(ver);
    } else {
      res = cmd_mullineux(mul);
    }
  } catch (const PreconditionError& e) {
    Json j = {{"error", {{"kind", "precondition"}, {"message", e.what()}}}};
    if (format == "csv") out << write_csv(flatten(j));
    else out << j.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  if (format == "csv") out << write_csv(res.table);
  else out << res.json.dump(2) << '\n';
  return res.exit_code;
}

}  // namespace repgrowth
