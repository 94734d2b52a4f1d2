// famindex: enumeration, X-sets, ρ tables, orders, verification and the
// precuspidal count report from the command line.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "famindex/errors.hpp"
#include "famindex/f2spaces.hpp"
#include "famindex/inductive.hpp"
#include "famindex/verify.hpp"

using namespace famindex;
using nlohmann::json;

namespace {

constexpr int kMaxEnumD = 14;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A table in either output format; json cells keep their types.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void print(const std::string& format, std::ostream& os) const {
    if (format == "json") {
      json out = json::array();
      for (const auto& r : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
        out.push_back(obj);
      }
      os << out.dump(1) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "\t" : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << '\t';
        if (r[i].is_string())
          os << r[i].get<std::string>();
        else
          os << r[i].dump();
      }
      os << '\n';
    }
  }
};

json indices(Word w) { return bit_indices(w); }

json basis_json(const F2Subspace& s) {
  json out = json::array();
  for (Word w : s.basis()) out.push_back(indices(w));
  return out;
}

void check_cap(int value, int cap, bool force, const std::string& what) {
  if (value <= cap) return;
  if (!force) throw UsageError(what + " = " + std::to_string(value) + " exceeds the cap " + std::to_string(cap) + " (use --force)");
  std::cerr << "warning: " << what << " = " << value << " is above " << cap << "; this may take a long time\n";
}

AObject parse_tag(const std::string& tag) {
  try {
    return AObject::parse(tag);
  } catch (const UnknownTag& e) {
    throw UsageError(e.what());
  }
}

// ---- enum ----

Table cmd_enum(const std::string& kind, int d) {
  Table t;
  const bool odd_only = kind == "cf-prime" || kind == "occ-prime";
  if (d < 0 || (odd_only && d % 2 == 0)) throw UsageError(kind + " needs " + (odd_only ? "odd " : "") + "D >= 0");
  if (kind == "cf") {
    t.columns = {"basis", "intervals", "epsilon"};
    for (const auto& e : enum_cf(d)) {
      const IntervalBasis ib = interval_basis_of(e);
      json iv = json::array();
      for (const auto& [a, b] : ib.intervals) iv.push_back({a, b});
      t.rows.push_back({basis_json(e), iv, indices(epsilon(ib).bits())});
    }
  } else if (kind == "occ" || kind == "occ-prime") {
    t.columns = {"small", "large"};
    for (const auto& p : kind == "occ" ? enum_occ(d) : enum_occ_prime(d))
      t.rows.push_back({basis_json(p.small), basis_json(p.large)});
  } else if (kind == "cf-prime") {
    t.columns = {"basis", "epsilon"};
    for (const auto& e : enum_cf_prime(d)) t.rows.push_back({basis_json(e), indices(epsilon_prime(e, d).bits())});
  } else if (kind == "zero-v") {
    t.columns = {"x", "u"};
    for (const auto& x : zero_v_set(d)) t.rows.push_back({indices(x.bits()), u_invariant(x)});
  } else {
    throw UsageError("unknown kind " + kind);
  }
  return t;
}

// ---- xgamma ----

Table cmd_xgamma(const AObject& g, const std::string& variant, const GammaSets& gs) {
  Table t;
  if (variant == "x" || variant == "barx") {
    t.columns = {"index", "pair", "quotient"};
    std::vector<XEntry> xs;
    try {
      xs = variant == "x" ? gs.x_set(g) : gs.bar_x_set(g);
    } catch (const TrivialGroup&) {
    }
    for (const auto& e : xs) t.rows.push_back({e.index, pair_string(g, e.pair), e.quotient.tag()});
    return t;
  }
  if (variant != "X" && variant != "barX") throw UsageError("unknown variant " + variant);
  t.columns = {"index", "pair"};
  const auto listed = listing_order(g, variant == "X" ? gs.big_x(g) : gs.bar_big_x(g));
  for (std::size_t i = 0; i < listed.size(); ++i) t.rows.push_back({static_cast<int>(i), pair_string(g, listed[i])});
  return t;
}

// ---- rho / order ----

std::string squash(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 3, "⊆") == 0) {
      out += ',';
      i += 3;
    } else {
      if (s[i] != ' ') out += s[i];
      ++i;
    }
  }
  return out;
}

// "#k" picks the k-th pair in listing order; otherwise the printed pair, with
// "," or "⊆" between the two sides.
std::size_t select_pair(const AObject& g, const std::vector<SubgroupPair>& listed, const std::string& sel) {
  if (!sel.empty() && sel[0] == '#') {
    const auto k = std::stoul(sel.substr(1));
    if (k >= listed.size()) throw UsageError("pair index " + sel + " out of range");
    return k;
  }
  std::string want = squash(sel);
  if (want.empty() || want[0] != '(') want = "(" + want + ")";
  for (std::size_t i = 0; i < listed.size(); ++i)
    if (squash(pair_string(g, listed[i])) == want) return i;
  throw UsageError("no pair " + sel + " in X of " + g.tag());
}

Table cmd_rho(const AObject& g, const std::string& sel, bool bar, const MGamma& mg) {
  const auto& gs = mg.gammasets();
  const auto listed = listing_order(g, bar ? gs.bar_big_x(g) : gs.big_x(g));
  Table t;
  t.columns = {"pair", "m", "coefficient"};
  std::vector<std::size_t> which;
  if (sel == "all") {
    for (std::size_t i = 0; i < listed.size(); ++i) which.push_back(i);
  } else {
    which.push_back(select_pair(g, listed, sel));
  }
  const auto& pairs = m_space(g).pairs();
  for (std::size_t i : which) {
    const MVector v = mg.rho(g, listed[i]);
    for (const auto& [idx, c] : v) {
      json coeff = to_string(c);
      if (c.is_rational() && c.rational().get_den() == 1 && c.rational().get_num().fits_slong_p())
        coeff = c.rational().get_num().get_si();
      t.rows.push_back({pair_string(g, listed[i]), mpair_string(g, pairs[idx]), coeff});
    }
  }
  return t;
}

Table cmd_order(const AObject& g, bool bar, const MGamma& mg) {
  const RhoFamily& f = mg.family(g, bar, g.is_vector() ? false : true);
  const auto j = bijection_j(f);
  const PartialOrder po = partial_order(f, j);
  const auto& pairs = m_space(g).pairs();
  Table t;
  t.columns = {"below", "above", "below_pair", "above_pair"};
  for (const auto& [a, b] : po.covers) {
    t.rows.push_back({mpair_string(g, pairs[po.elements[a]]), mpair_string(g, pairs[po.elements[b]]),
                      pair_string(g, f.pairs[j[a]]), pair_string(g, f.pairs[j[b]])});
  }
  return t;
}

// ---- precuspidal ----

std::string host_name(const std::string& host, std::optional<int> k) {
  if (!k) return host;
  if (host == "B" || host == "C") return host + std::to_string(*k * *k + *k);
  if (host == "D") return "D" + std::to_string(*k * *k);
  throw UsageError("--k applies to the B, C and D series only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"famindex: families of subspaces, X-sets and new bases"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "tsv";
  app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  bool force = false;
  app.add_flag("--force", force, "lift the size caps (prints a cost warning)");

  auto* en = app.add_subcommand("enum", "enumerate a family");
  std::string en_kind;
  int en_d = 0;
  en->add_option("kind", en_kind, "cf | occ | cf-prime | occ-prime | zero-v")->required();
  en->add_option("--d", en_d, "D")->required();

  auto* xg = app.add_subcommand("xgamma", "x / x-bar / X / X-bar of an object");
  std::string xg_tag, xg_variant = "X";
  std::string bar_reading = "s2";
  xg->add_option("gamma", xg_tag, "S1 .. S5, S2', S3', V<D>, V'<D>")->required();
  xg->add_option("--variant", xg_variant, "x | barx | X | barX");
  xg->add_option("--bar-reading", bar_reading)->check(CLI::IsMember({"s2", "vprime"}));

  auto* rh = app.add_subcommand("rho", "ρ of a pair of X (or 'all')");
  std::string rh_tag, rh_sel;
  bool rh_bar = false;
  rh->add_option("gamma", rh_tag)->required();
  rh->add_option("pair", rh_sel, "(small,large), #index or all")->required();
  rh->add_flag("--bar", rh_bar, "take the pair from X-bar");

  auto* od = app.add_subcommand("order", "Hasse covers of the order on M_0");
  std::string od_tag;
  bool od_bar = false;
  od->add_option("gamma", od_tag)->required();
  od->add_flag("--bar", od_bar, "use X-bar");

  auto* vf = app.add_subcommand("verify", "run the invariant suite");
  std::vector<std::string> vf_modules;
  int vf_max_d = 12, vf_rho_d = 8;
  vf->add_option("modules", vf_modules, "all, or any of f2spaces inductive gammasets mgamma precuspidal");
  vf->add_option("--bar-reading", bar_reading)->check(CLI::IsMember({"s2", "vprime"}));
  vf->add_option("--max-d", vf_max_d, "bound for the enumerative checks");
  vf->add_option("--rho-max-d", vf_rho_d, "bound for vector kinds in the ρ checks");

  auto* pc = app.add_subcommand("precuspidal", "count consistency for a cuspidal host");
  std::string pc_host;
  std::optional<int> pc_k;
  int rank_cap = 7;
  pc->add_option("host", pc_host, "E8, F4, ... or B/C/D with --k")->required();
  pc->add_option("--k", pc_k, "series parameter");
  pc->add_option("--rank-cap", rank_cap, "largest rank for the Weyl orbit walk");
  pc->add_option("--bar-reading", bar_reading)->check(CLI::IsMember({"s2", "vprime"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  GammaConfig gcfg;
  gcfg.bar_reading = bar_reading == "vprime" ? BarReading::VPrime : BarReading::S2;

  try {
    if (*en) {
      check_cap(en_d, kMaxEnumD, force, "D");
      cmd_enum(en_kind, en_d).print(format, std::cout);
      return 0;
    }
    if (*xg) {
      const AObject g = parse_tag(xg_tag);
      if (g.is_vector()) check_cap(g.n, kMaxEnumD, force, "D");
      const GammaSets gs(gcfg);
      cmd_xgamma(g, xg_variant, gs).print(format, std::cout);
      return 0;
    }
    if (*rh || *od) {
      const AObject g = parse_tag(*rh ? rh_tag : od_tag);
      if (g.is_vector()) check_cap(g.n, 10, force, "D");
      const GammaSets gs(gcfg);
      const MGamma mg(gs);
      (*rh ? cmd_rho(g, rh_sel, rh_bar, mg) : cmd_order(g, od_bar, mg)).print(format, std::cout);
      return 0;
    }
    if (*vf) {
      check_cap(vf_max_d, kMaxEnumD, force, "--max-d");
      check_cap(vf_rho_d, 10, force, "--rho-max-d");
      VerifyOptions opt;
      opt.gamma = gcfg;
      opt.max_d = vf_max_d;
      opt.rho_max_d = vf_rho_d;
      for (const auto& m : vf_modules) {
        if (m == "all") continue;
        static const std::set<std::string> known{"f2spaces", "inductive", "gammasets", "mgamma", "precuspidal"};
        if (!known.count(m)) throw UsageError("unknown module " + m);
        opt.modules.push_back(m);
      }
      const VerificationReport r = verify(opt);
      std::cout << (format == "json" ? report_json(r) + "\n" : report_tsv(r));
      return r.ok() ? 0 : 1;
    }
    if (*pc) {
      check_cap(rank_cap, 7, force, "--rank-cap");
      const std::string host = host_name(pc_host, pc_k);
      const GammaSets gs(gcfg);
      PrecuspidalRecord rec;
      try {
        rec = ci_table(PrecuspidalData::standard(), host);
      } catch (const UnknownHost&) {
        if (!pc_k) throw;
        rec = ci_formula(pc_host[0], *pc_k);
      }
      VerificationReport r;
      for (const auto& c : consistency_check(rec, gs, rank_cap).checks)
        r.checks.push_back({c.id, c.pass ? CheckStatus::Pass : CheckStatus::Fail, c.detail, 0.0});
      const auto h = hypothesis_report(rec, gs, rank_cap);
      for (const auto& c : h.candidates)
        r.checks.push_back({host + "/hypothesis/" + c.gamma_c, CheckStatus::Info,
                            std::string(c.pass ? "matches" : "differs") + ": |x| = " + std::to_string(c.x) +
                                ", |bar x| = " + std::to_string(c.bar_x) + ", orbits " + std::to_string(h.orbits) +
                                "/" + std::to_string(h.bar_orbits),
                            0.0});
      std::cout << (format == "json" ? report_json(r) + "\n" : report_tsv(r));
      return r.ok() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "famindex: " << e.what() << '\n';
    return 2;
  } catch (const UnknownTag& e) {
    std::cerr << "famindex: " << e.what() << '\n';
    return 2;
  } catch (const UnknownHost& e) {
    std::cerr << "famindex: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "famindex: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
