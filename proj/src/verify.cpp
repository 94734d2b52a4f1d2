#include "famindex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "famindex/errors.hpp"
#include "famindex/f2spaces.hpp"
#include "famindex/inductive.hpp"

namespace famindex {

namespace {

using nlohmann::json;
using Result = std::pair<bool, std::string>;

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

class Runner {
 public:
  Runner(VerificationReport& r, const std::vector<std::string>& modules) : report_(r), modules_(modules) {}

  bool wants(const std::string& module) const {
    return modules_.empty() || std::find(modules_.begin(), modules_.end(), module) != modules_.end();
  }

  void run(const std::string& id, const std::function<Result()>& fn, bool informative = false) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    c.id = id;
    try {
      auto [ok, detail] = fn();
      c.status = informative ? CheckStatus::Info : (ok ? CheckStatus::Pass : CheckStatus::Fail);
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.status = informative ? CheckStatus::Info : CheckStatus::Fail;
      c.detail = std::string("raised ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(c));
  }

  std::size_t size() const { return report_.checks.size(); }
  // work done outside run() that belongs to check `index`
  void charge(std::size_t index, double seconds) {
    if (index < report_.checks.size()) report_.checks[index].seconds += seconds;
  }

 private:
  VerificationReport& report_;
  const std::vector<std::string>& modules_;
};

std::string at_d(int d) { return "first mismatch at D=" + std::to_string(d); }

// ---- f2spaces / inductive ----

void f2_checks(Runner& run, int max_d) {
  const int odd_max = max_d % 2 ? max_d : max_d - 1;
  run.run("f2spaces.count.zero-v", [&]() -> Result {
    for (int d = 0; d <= max_d + 1; ++d) {
      const long long want = d % 2 == 0 ? binomial(d + 1, d / 2) : binomial(d + 1, (d + 1) / 2);
      if (static_cast<long long>(zero_v_set(d).size()) != want || zero_v_count(d) != want) return {false, at_d(d)};
    }
    return {true, "D <= " + std::to_string(max_d + 1)};
  });
  run.run("f2spaces.epsilon-in-E", [&]() -> Result {
    for (int d = 0; d <= max_d - 1; ++d)
      for (const auto& e : enum_cf(d))
        if (!e.contains(epsilon(e))) return {false, at_d(d)};
    return {true, "D <= " + std::to_string(max_d - 1)};
  });
  run.run("f2spaces.theta", [&]() -> Result {
    for (int d = 1; d <= odd_max; d += 2)
      for (const auto& x : zero_v_set(d)) {
        const auto t = theta(x, d);
        if (t == x || u_invariant(t) != 0 || theta(t, d) != x) return {false, at_d(d)};
      }
    return {true, "odd D <= " + std::to_string(odd_max)};
  });
  run.run("f2spaces.u-xi", [&]() -> Result {
    for (Word m = 0; m < (Word{1} << max_d); ++m) {
      const F2Vector x(m << 1);
      if (u_invariant(x) != -u_tilde(xi(x)))
        return {false, "u(x) = " + std::to_string(u_invariant(x)) + " but -u~(xi(x)) = " +
                           std::to_string(-u_tilde(xi(x))) + " at x = " + to_string(x)};
    }
    return {true, "D <= " + std::to_string(max_d)};
  });
  run.run("f2spaces.u-xi-scaled", [&]() -> Result {
    for (Word m = 0; m < (Word{1} << max_d); ++m) {
      const F2Vector x(m << 1);
      if (u_tilde(xi(x)) != -2 * u_invariant(x)) return {false, "at x = " + to_string(x)};
    }
    return {true, "u~(xi(x)) = -2 u(x), same zero set, D <= " + std::to_string(max_d)};
  });
  run.run("f2spaces.isotropic", [&]() -> Result {
    for (int d = 0; d <= max_d; ++d)
      for (const auto& e : enum_cf(d)) {
        const auto& b = e.basis();
        for (Word x : b)
          for (Word y : b)
            if (symplectic_bits(x, y) != 0) return {false, at_d(d)};
      }
    return {true, "D <= " + std::to_string(max_d)};
  });
}

void inductive_checks(Runner& run, int max_d) {
  const int odd_max = max_d % 2 ? max_d - 2 : max_d - 1;
  run.run("inductive.count.cf", [&]() -> Result {
    for (int d = 0; d <= max_d + 1; ++d) {
      const long long want = d % 2 == 0 ? binomial(d + 1, d / 2) : binomial(d + 1, (d + 1) / 2);
      if (static_cast<long long>(enum_cf(d).size()) != want) return {false, at_d(d)};
    }
    return {true, "D <= " + std::to_string(max_d + 1)};
  });
  run.run("inductive.count.cf-prime", [&]() -> Result {
    for (int d = 1; d <= odd_max; d += 2)
      if (2 * static_cast<long long>(enum_cf_prime(d).size()) != binomial(d + 1, (d + 1) / 2)) return {false, at_d(d)};
    return {true, "odd D <= " + std::to_string(odd_max)};
  });
  run.run("inductive.interval-equivalence", [&]() -> Result {
    long mismatches = 0;
    for (int d = 0; d <= max_d; ++d) {
      std::set<F2Subspace> spans;
      for (const auto& sys : interval_systems(d)) spans.insert(span_of(sys));
      const auto& fam = enum_cf(d);
      const std::set<F2Subspace> got(fam.begin(), fam.end());
      std::vector<F2Subspace> diff;
      std::set_symmetric_difference(got.begin(), got.end(), spans.begin(), spans.end(), std::back_inserter(diff));
      mismatches += static_cast<long>(diff.size());
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches, D <= " + std::to_string(max_d)};
  });
  run.run("inductive.bijection.epsilon", [&]() -> Result {
    for (int d = 0; d <= max_d - 1; ++d) {
      std::set<F2Vector> img;
      for (const auto& e : enum_cf(d)) img.insert(epsilon(e));
      const auto z = zero_v_set(d);
      if (img.size() != enum_cf(d).size() || img != std::set<F2Vector>(z.begin(), z.end())) return {false, at_d(d)};
    }
    return {true, "onto u^-1(0), D <= " + std::to_string(max_d - 1)};
  });
  run.run("inductive.bijection.pi", [&]() -> Result {
    for (int d = 0; d <= max_d - 1; ++d) {
      std::set<SubspacePair> img;
      for (const auto& e : enum_cf(d)) img.insert(pi_map(e, d));
      const auto& occ = enum_occ(d);
      if (img.size() != enum_cf(d).size() || img != std::set<SubspacePair>(occ.begin(), occ.end()))
        return {false, at_d(d)};
    }
    return {true, "onto occ, D <= " + std::to_string(max_d - 1)};
  });
  run.run("inductive.bijection.lambda-prime", [&]() -> Result {
    for (int d = 1; d <= odd_max; d += 2) {
      std::set<SubspacePair> img;
      for (const auto& e : enum_cf(d - 1)) img.insert(lambda_prime(lambda_map(e, d), d));
      const auto& occ = enum_occ_prime(d);
      if (img.size() != enum_cf(d - 1).size() || img != std::set<SubspacePair>(occ.begin(), occ.end()))
        return {false, at_d(d)};
    }
    return {true, "onto occ', odd D <= " + std::to_string(odd_max)};
  });
  run.run("inductive.bijection.epsilon-prime", [&]() -> Result {
    for (int d = 1; d <= odd_max; d += 2) {
      std::set<F2Vector> img;
      for (const auto& e : enum_cf(d - 1)) img.insert(epsilon_prime(lambda_map(e, d), d));
      const auto z = zero_vprime_set(d);
      if (img.size() != enum_cf(d - 1).size() || img != std::set<F2Vector>(z.begin(), z.end()))
        return {false, at_d(d)};
    }
    return {true, "odd D <= " + std::to_string(odd_max)};
  });
  run.run("inductive.eta-in-large", [&]() -> Result {
    for (int d = 1; d <= odd_max; d += 2)
      for (const auto& p : enum_occ(d))
        if (!p.large.contains(eta_bits(d))) return {false, at_d(d)};
    return {true, "odd D <= " + std::to_string(odd_max)};
  });
}

// ---- gammasets ----

const std::vector<const char*>& symmetric_tags() {
  static const std::vector<const char*> t{"S1", "S2", "S3", "S2'", "S3'", "S4", "S5"};
  return t;
}

void gamma_checks(Runner& run, const GammaSets& gs, const GoldenX& golden) {
  for (const auto& [tag, names] : golden.lists) {
    const AObject g = AObject::parse(tag);
    run.run("gammasets.golden." + tag, [&]() -> Result {
      std::set<SubgroupPair> want;
      for (const auto& [s, l] : names) want.insert(named_pair(g, s, l));
      const auto& got = gs.big_x(g);
      const bool ok = want.size() == names.size() && std::set<SubgroupPair>(got.begin(), got.end()) == want &&
                      got.size() == want.size();
      return {ok, "|X| = " + std::to_string(got.size()) + ", listed " + std::to_string(names.size())};
    });
    run.run("gammasets.listing." + tag, [&]() -> Result {
      const auto listed = listing_order(g, gs.big_x(g));
      if (listed.size() != names.size()) return {false, "sizes differ"};
      for (std::size_t i = 0; i < names.size(); ++i)
        if (listed[i] != named_pair(g, names[i].first, names[i].second))
          return {false, "position " + std::to_string(i) + " is " + pair_string(g, listed[i])};
      return {true, "listing order as given"};
    });
  }
  run.run("gammasets.bar.S4-size", [&]() -> Result {
    const auto n = gs.bar_big_x(AObject::sym(4)).size();
    return {n == 12, "|bar X(S4)| = " + std::to_string(n)};
  });
  for (const char* tag : symmetric_tags()) {
    const AObject g = AObject::parse(tag);
    if (!g.anomalous()) continue;
    run.run(std::string("gammasets.bar.anomalous.") + tag, [&]() -> Result {
      std::set<SubgroupPair> want(gs.big_x(g).begin(), gs.big_x(g).end());
      const auto base = named_pair(g, "S1", "S1");
      const bool fresh = want.insert(base).second;
      const auto& got = gs.bar_big_x(g);
      const bool ok = fresh && got.size() == want.size() && std::set<SubgroupPair>(got.begin(), got.end()) == want;
      return {ok, "bar X = X + (S1 ⊆ S1): " + std::to_string(got.size()) + " pairs"};
    });
  }
}

// ---- mgamma ----

void mgamma_checks(Runner& run, const MGamma& mg, int rho_max_d) {
  std::vector<AObject> objects;
  for (const char* t : symmetric_tags()) objects.push_back(AObject::parse(t));
  for (int d = 2; d <= rho_max_d; d += 2) objects.push_back(AObject::vec(d));
  for (int d = 3; d <= rho_max_d; d += 2) objects.push_back(AObject::vec_prime(d));

  for (const AObject& g : objects) {
    const std::string tag = g.tag();
    const RhoFamily* fam = nullptr;
    run.run("mgamma.rank." + tag, [&]() -> Result {
      fam = &mg.family(g, false, true);
      const int r = rho_rank(*fam);
      return {r == static_cast<int>(fam->pairs.size()),
              "rank " + std::to_string(r) + " of " + std::to_string(fam->pairs.size()) + " in dim " +
                  std::to_string(m_space(g).size())};
    });
    if (!fam) continue;
    run.run("mgamma.integral." + tag, [&]() -> Result {
      return {fam->integral && fam->nonnegative, fam->integral ? "coefficients in N" : "non-integral coefficient"};
    });
    run.run("mgamma.m0." + tag, [&]() -> Result {
      return {fam->m_zero.size() == fam->pairs.size(),
              "|M0| = " + std::to_string(fam->m_zero.size()) + ", |X| = " + std::to_string(fam->pairs.size())};
    });
    std::vector<int> j;
    run.run("mgamma.j." + tag, [&]() -> Result {
      j = bijection_j(*fam);
      return {true, "unique"};
    });
    if (j.empty() && !fam->m_zero.empty()) continue;
    if (g.is_vector()) {
      run.run("mgamma.j-epsilon." + tag, [&]() -> Result {
        return {vector_j_matches_epsilon(*fam, j), "j against the inverse of epsilon"};
      });
    }
    run.run("mgamma.order." + tag, [&]() -> Result {
      const PartialOrder po = partial_order(*fam, j);
      return {true, std::to_string(po.covers.size()) + " covers"};
    });
    run.run("mgamma.tower." + tag, [&]() -> Result { return {mg.tower_consistent(g), "ss through quotients"}; });
  }
  // the bar variant is reported, not asserted
  for (const char* t : symmetric_tags()) {
    const AObject g = AObject::parse(t);
    run.run(
        std::string("mgamma.bar.") + t,
        [&]() -> Result {
          const RhoFamily& f = mg.family(g, true, true);
          std::string detail = "rank " + std::to_string(rho_rank(f)) + " of " + std::to_string(f.pairs.size()) +
                               ", |M0| = " + std::to_string(f.m_zero.size());
          try {
            const auto j = bijection_j(f);
            partial_order(f, j);
            detail += ", j and order exist";
          } catch (const Error& e) {
            detail += std::string(", ") + e.what();
          }
          return {true, detail};
        },
        true);
  }
}

// ---- precuspidal ----

void precuspidal_checks(Runner& run, const GammaSets& gs, const PrecuspidalData& data, int rank_cap) {
  run.run("precuspidal.data", [&]() -> Result {
    return {data.version == 1 && !data.records.empty(), std::to_string(data.records.size()) + " records"};
  });
  for (const auto& r : data.records) {
    HostReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      rep = consistency_check(r, gs, rank_cap);
    } catch (const std::exception& e) {
      run.run("precuspidal." + r.host + "/error", [&]() -> Result { return {false, e.what()}; });
      continue;
    }
    const std::size_t first = run.size();
    for (const auto& c : rep.checks)
      run.run("precuspidal." + c.id, [&]() -> Result { return {c.pass, c.detail}; });
    run.charge(first, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    run.run(
        "precuspidal." + r.host + "/hypotheses",
        [&]() -> Result {
          const auto h = hypothesis_report(r, gs, rank_cap);
          std::string detail = "orbits " + std::to_string(h.orbits) + "/" + std::to_string(h.bar_orbits) + "; matching:";
          for (const auto& c : h.candidates)
            if (c.pass) detail += " " + c.gamma_c;
          return {true, detail};
        },
        true);
  }
  run.run("precuspidal.orbit.D4-A2", [&]() -> Result {
    const CartanDiagram d = cartan_diagram("D4");
    const auto subsets = realize_subsets(d, {{"A2", 0, 3}})[0];
    const int n = weyl_orbit_count(d, subsets, rank_cap);
    return {subsets.size() == 3 && n == 1, std::to_string(subsets.size()) + " subsets, " + std::to_string(n) + " orbit(s)"};
  });
  run.run("precuspidal.orbit.E6-D5", [&]() -> Result {
    const CartanDiagram d = cartan_diagram("E6");
    const auto subsets = realize_subsets(d, {{"D5", 0, 2}})[0];
    const int n = weyl_orbit_count(d, subsets, rank_cap);
    return {subsets.size() == 2 && n == 1, std::to_string(subsets.size()) + " subsets, " + std::to_string(n) + " orbit(s)"};
  });
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
  }
  return "?";
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Pass; }));
}
int VerificationReport::failed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; }));
}
int VerificationReport::info() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Info; }));
}

std::vector<const Check*> VerificationReport::select(const std::string& prefix) const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (c.id.compare(0, prefix.size(), prefix) == 0) out.push_back(&c);
  return out;
}

GoldenX GoldenX::from_json(const std::string& text) {
  const json doc = json::parse(text);
  GoldenX g;
  for (const auto& [tag, list] : doc.at("lists").items()) {
    std::vector<std::pair<std::string, std::string>> names;
    for (const auto& p : list) names.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    g.lists.emplace_back(tag, std::move(names));
  }
  return g;
}

const GoldenX& GoldenX::standard() {
  static const GoldenX g = [] {
    const char* env = std::getenv("FAMINDEX_DATA");
    const std::string path = std::string(env ? env : FAMINDEX_DATA_DIR) + "/golden_x_v1.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
  }();
  return g;
}

VerificationReport verify(const VerifyOptions& opt) {
  VerificationReport report;
  Runner run(report, opt.modules);
  const PrecuspidalData& data = opt.data ? *opt.data : PrecuspidalData::standard();
  const GoldenX& golden = opt.golden ? *opt.golden : GoldenX::standard();

  if (run.wants("f2spaces")) f2_checks(run, opt.max_d);
  if (run.wants("inductive")) inductive_checks(run, opt.max_d);
  if (!run.wants("gammasets") && !run.wants("mgamma") && !run.wants("precuspidal")) return report;

  const GammaSets gs(opt.gamma);
  if (run.wants("gammasets")) gamma_checks(run, gs, golden);
  if (run.wants("mgamma")) {
    const MGamma mg(gs, opt.ss);
    mgamma_checks(run, mg, opt.rho_max_d);
  }
  if (run.wants("precuspidal")) precuspidal_checks(run, gs, data, opt.rank_cap);
  return report;
}

std::string report_json(const VerificationReport& r) {
  json doc;
  doc["checks"] = json::array();
  for (const auto& c : r.checks) doc["checks"].push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
  doc["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}, {"info", r.info()}};
  return doc.dump(1);
}

std::string report_tsv(const VerificationReport& r) {
  std::ostringstream out;
  out << "id\tstatus\tdetail\n";
  for (const auto& c : r.checks) out << c.id << '\t' << to_string(c.status) << '\t' << c.detail << '\n';
  out << "# pass " << r.passed() << " fail " << r.failed() << " info " << r.info() << '\n';
  return out.str();
}

}  // namespace famindex
