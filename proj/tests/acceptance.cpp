// Acceptance run: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gpea/axioms.hpp"
#include "gpea/center.hpp"
#include "gpea/corpus.hpp"
#include "gpea/cover.hpp"
#include "gpea/exocenter.hpp"
#include "gpea/laws.hpp"
#include "gpea/typetheory.hpp"
#include "oracles.hpp"

using namespace gpea;

namespace {

constexpr double kKernelSeconds = 10;
constexpr double kExocenterSeconds = 60;
constexpr double kCenterSeconds = 30;
constexpr double kCoverSeconds = 30;
constexpr double kTypeSeconds = 300;
constexpr std::size_t kCorpusOrder = 4;
constexpr std::size_t kOracleOrder = 4;

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// The registered ids from `first` through `last`, in suite order.
std::vector<std::string> id_range(const std::string& first, const std::string& last) {
  std::vector<std::string> out;
  bool on = false;
  for (const auto& l : law_registry()) {
    on = on || l.id == first;
    if (on) out.push_back(l.id);
    if (l.id == last) break;
  }
  return out;
}

/// Runs laws over the corpus; a sampled result fails unless allowed.
Outcome run_laws(const std::vector<NamedModel>& models, const std::vector<std::string>& ids, bool allow_sampled) {
  std::size_t checks = 0, sampled = 0;
  for (const auto& m : models) {
    for (const auto& r : verify_laws(m.model, m.id, ids)) {
      ++checks;
      if (!r.pass) return {false, r.law_id + " fails on " + r.model_id + ": " + r.witness};
      if (!r.exhaustive) {
        if (!allow_sampled) return {false, r.law_id + " was sampled on " + r.model_id};
        ++sampled;
      }
    }
  }
  std::string d = std::to_string(ids.size()) + " laws, " + std::to_string(checks) + " checks";
  if (sampled) d += ", " + std::to_string(sampled) + " sampled on models above 8 elements";
  return {true, d};
}

Outcome exocenter_oracle(const std::vector<NamedModel>& models) {
  std::size_t n_models = 0;
  for (const auto& m : models) {
    if (m.model.size() > kOracleOrder) continue;
    ++n_models;
    std::vector<std::vector<Element>> lib;
    for (const auto& p : exocenter(m.model)) lib.push_back(p.values());
    std::sort(lib.begin(), lib.end());
    if (lib != oracle::exocenter(m.model)) return {false, "exocenter differs from table search on " + m.id};
  }
  return {true, std::to_string(n_models) + " models checked against all n^n tables"};
}

Outcome center_checks(const std::vector<NamedModel>& models) {
  for (const auto& m : models) {
    if (central_elements(m.model) != central_elements_by_splitting(m.model)) {
      return {false, "center definitions differ on " + m.id};
    }
    const auto [h, k] = centerless_split(m.model);
    if (central_elements(k) != ElementSet{0}) return {false, "second factor has nonzero center on " + m.id};
  }
  return {true, ""};
}

Outcome cover_checks(const std::vector<NamedModel>& models) {
  for (const auto& m : models) {
    const FiniteGpea& e = m.model;
    const CoverSystem covers(e);
    if (!is_hull_system(e, covers.as_tables())) return {false, "covers are not a hull system on " + m.id};
    const CogpeaCertificate cert = is_cogpea(e, covers);
    if (!cert.holds) return {false, "not COGPEA on " + m.id + ": " + cert.failure};
    ElementSet invariant;
    for (Element x = 0; x < e.size(); ++x) {
      bool inv = true;
      for (Element f = 0; f < e.size() && inv; ++f) inv = e.meet(x, f) == covers.gamma(x)(f);
      if (inv) invariant.insert(x);
    }
    if (invariant != central_elements(e)) return {false, "invariant elements differ from the center on " + m.id};
  }
  return {true, ""};
}

Outcome closure_oracle(const std::vector<NamedModel>& models) {
  std::size_t n_models = 0, n_sets = 0;
  for (const auto& m : models) {
    const FiniteGpea& e = m.model;
    if (e.size() > kOracleOrder) continue;
    ++n_models;
    const CoverSystem covers(e);
    const auto gamma = oracle::covers(e, oracle::exocenter(e));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << e.size()); ++bits) {
      ElementSet q;
      for (Element x = 0; x < e.size(); ++x) {
        if (bits >> x & 1) q.insert(x);
      }
      ++n_sets;
      if (closure_gamma(e, covers, q) != oracle::family_closure(e, gamma, q)) {
        return {false, "closure differs on " + m.id + " for Q=" + e.format(q)};
      }
    }
  }
  return {true, std::to_string(n_models) + " models, " + std::to_string(n_sets) + " sets"};
}

SumTable table(std::size_t n, const std::vector<std::array<Element, 3>>& sums) {
  SumTable t(n);
  t.fill_zero_sums();
  for (const auto& [a, b, c] : sums) t.set(a, b, c);
  return t;
}

/// The first witness under `tag` must exhibit the failure when re-checked
/// on the raw table.
bool witnessed(const SumTable& t, const std::string& tag) {
  const auto v = check_gpea(t).first(tag);
  if (!v) return false;
  const auto& w = v->witness;
  if (tag == "GPEA4") return w.size() == 2 && (w[0] || w[1]) && t.get(w[0], w[1]) == Element{0};
  if (tag == "GPEA3") {
    if (w.size() != 3 || w[1] == w[2]) return false;
    const auto l1 = t.get(w[0], w[1]), l2 = t.get(w[0], w[2]);
    const auto r1 = t.get(w[1], w[0]), r2 = t.get(w[2], w[0]);
    return (l1 && l1 == l2) || (r1 && r1 == r2);
  }
  if (tag == "GPEA1") {
    if (w.size() != 3) return false;
    const auto ab = t.get(w[0], w[1]), bc = t.get(w[1], w[2]);
    const auto left = ab ? t.get(*ab, w[2]) : std::nullopt;
    const auto right = bc ? t.get(w[0], *bc) : std::nullopt;
    return left != right;
  }
  return false;
}

Outcome negative_controls() {
  if (!witnessed(table(2, {{1, 1, 0}}), "GPEA4")) return {false, "positivity break not tagged GPEA4"};
  if (!witnessed(table(3, {{1, 1, 2}, {1, 2, 2}}), "GPEA3")) return {false, "cancellation break not tagged GPEA3"};
  if (!witnessed(table(4, {{1, 1, 2}, {1, 2, 3}}), "GPEA1")) return {false, "associativity break not tagged GPEA1"};
  const FiniteGpea v3 = model_v3();
  const ElementSet s{0, 1};
  if (!is_ideal(v3, s)) return {false, "{0,a} is not an ideal of V3"};
  if (central_ideal_complement(v3, s)) return {false, "V3 ideal {0,a} has a complement"};
  return {true, ""};
}

std::pair<int, std::string> run_command(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Outcome determinism() {
  const std::string cmd = std::string(GPEA_CLI_PATH) + " --format machine laws --corpus 4";
  const auto a = run_command(cmd);
  const auto b = run_command(cmd);
  if (a.first != 0 || b.first != 0) return {false, "exit status " + std::to_string(a.first) + "/" + std::to_string(b.first)};
  if (a.second.empty() || a.second != b.second) return {false, "outputs differ"};
  return {true, std::to_string(a.second.size()) + " identical bytes"};
}

bool all_ok = true;

void criterion(int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && limit > 0 && secs > limit) o = {false, "took longer than " + std::to_string(limit) + " s"};
  all_ok = all_ok && o.ok;
  std::ostringstream line;
  line.precision(3);
  line << 'C' << id << ' ' << (o.ok ? "PASS" : "FAIL") << ' ' << name << " (" << std::fixed << secs << " s";
  if (limit > 0) line << " of " << limit << " s";
  line << ')';
  if (!o.detail.empty()) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
}

Outcome both(const Outcome& a, const Outcome& b) {
  if (!a.ok) return a;
  if (!b.ok) return b;
  return {true, a.detail + (b.detail.empty() ? "" : "; " + b.detail)};
}

}  // namespace

int main() {
  const auto models = corpus(kCorpusOrder);
  std::cout << "corpus: " << models.size() << " models" << std::endl;

  criterion(1, "axiom kernel laws", kKernelSeconds,
            [&] { return run_laws(models, id_range("gpea", "DirSumNormal"), false); });
  criterion(2, "exocenter laws and table-search agreement", kExocenterSeconds, [&] {
    return both(run_laws(models, id_range("piprime", "PtwisePi.iii"), false), exocenter_oracle(models));
  });
  criterion(3, "center laws and both center definitions", kCenterSeconds, [&] {
    return both(run_laws(models, id_range("CentProp.i", "centerless.iii"), false), center_checks(models));
  });
  criterion(4, "cover laws, hull system, invariants, COGPEA", kCoverSeconds, [&] {
    return both(run_laws(models, id_range("ExoCenCover", "disjointgammasbei"), false), cover_checks(models));
  });
  criterion(5, "type theory laws", kTypeSeconds,
            [&] { return run_laws(models, id_range("fourclosures", "I-II-III.uniqueness"), true); });
  criterion(6, "closure against family enumeration", 0, [&] { return closure_oracle(models); });
  criterion(7, "negative controls", 0, [] { return negative_controls(); });
  criterion(8, "machine output is byte-identical across runs", 0, [] { return determinism(); });

  std::cout << (all_ok ? "all criteria pass" : "some criteria fail") << std::endl;
  return all_ok ? 0 : 1;
}
