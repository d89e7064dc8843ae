#include "gpea/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

#include "gpea/axioms.hpp"
#include "gpea/center.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/cover.hpp"
#include "gpea/errors.hpp"
#include "gpea/exocenter.hpp"
#include "gpea/laws.hpp"
#include "gpea/model_file.hpp"
#include "gpea/typetheory.hpp"

namespace gpea {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

/// key=value records in machine mode, aligned "key: value" lines otherwise.
class Report {
 public:
  Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}
  bool machine() const { return machine_; }

  void field(const std::string& key, const std::string& value) {
    if (machine_) {
      out_ << key << '=' << value << '\n';
    } else {
      out_ << key << ": " << value << '\n';
    }
  }
  template <typename T>
  void field(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    field(key, s.str());
  }
  /// One record of several pairs; text mode prints the values after a title.
  void record(const std::string& title, const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (machine_) {
      out_ << title;
      for (const auto& [k, v] : pairs) out_ << ' ' << k << '=' << v;
    } else {
      out_ << title << ':';
      for (const auto& [k, v] : pairs) out_ << "  " << k << ' ' << v;
    }
    out_ << '\n';
  }
  void line(const std::string& text) {
    if (!machine_) out_ << text << '\n';
  }

 private:
  std::ostream& out_;
  bool machine_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string values_of(const FiniteGpea& e, const ExoMap& m) {
  std::string s;
  for (Element x = 0; x < m.size(); ++x) s += (x ? "," : "") + e.name(m(x));
  return s;
}

/// "0", "1" or "pi{image}".
std::string map_name(const FiniteGpea& e, const Exocenter& g, std::size_t i) {
  if (i == g.zero()) return "0";
  if (i == g.one()) return "1";
  return "pi" + e.format(g[i].image());
}

FiniteGpea load(const std::string& path) { return parse_model(read_text_file(path)); }

struct Globals {
  std::string format = "text";
  bool seedless = false;
  unsigned jobs = 0;
};

int cmd_validate(const std::string& path, Report& r) {
  const ParsedModel p = parse_table(read_text_file(path));
  const ViolationReport v = check_gpea(p.table);
  if (!v.empty()) {
    r.field("status", "invalid");
    for (const auto& x : v.violations()) {
      std::string w;
      for (Element a : x.witness) w += (w.empty() ? "" : ",") + std::to_string(a);
      r.record("violation", {{"axiom", x.tag}, {"witness", "(" + w + ")"}});
    }
    return kExitInvalidModel;
  }
  const FiniteGpea e(p.table, p.labels);
  r.field("status", "valid");
  r.field("size", e.size());
  return kExitOk;
}

int cmd_info(const FiniteGpea& e, Report& r) {
  const CoverSystem covers(e);
  const auto top = e.top();
  r.field("size", e.size());
  r.field("top", top ? e.name(*top) : "none");
  r.field("pea", yes_no(top.has_value()));
  r.field("commutative", yes_no(is_commutative(e)));
  r.field("atoms", e.format(e.atoms()));
  r.field("center", e.format(central_elements(e)));
  r.field("center_unit", e.name(center_unit(e)));
  r.field("exocenter_size", covers.gex().size());
  r.field("covers", covers.theta().size());
  r.field("canonical", "");
  std::istringstream body(serialize_model(e));
  for (std::string l; std::getline(body, l);) r.line("  " + l);
  return kExitOk;
}

int cmd_exocenter(const FiniteGpea& e, Report& r) {
  const Exocenter g(e);
  r.field("maps", g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.record("map", {{"name", map_name(e, g, i)},
                     {"image", e.format(g[i].image())},
                     {"values", values_of(e, g[i])},
                     {"complement", map_name(e, g, g.complement(i))}});
  }
  return kExitOk;
}

int cmd_center(const FiniteGpea& e, Report& r) {
  const CenterData c = center(e);
  r.field("center", e.format(c.gamma_set));
  r.field("unit", e.name(c.unit));
  for (const auto& [x, p] : c.pi_of) r.record("pi_c", {{"c", e.name(x)}, {"image", e.format(p.image())}});
  return kExitOk;
}

int cmd_covers(const FiniteGpea& e, Report& r) {
  const CoverSystem covers(e);
  for (Element x = 0; x < e.size(); ++x) {
    r.record("cover", {{"e", e.name(x)}, {"gamma", map_name(e, covers.gex(), covers.gamma_index(x))}});
  }
  std::string theta;
  for (std::size_t i : covers.theta()) theta += (theta.empty() ? "" : ",") + map_name(e, covers.gex(), i);
  r.field("theta", "[" + theta + "]");
  const CogpeaCertificate cert = is_cogpea(e, covers);
  r.field("cogpea", yes_no(cert.holds));
  r.field("orthogonal_families", cert.families.size());
  if (!cert.holds) r.field("failure", cert.failure);
  return kExitOk;
}

int cmd_tdclose(const FiniteGpea& e, const std::string& spec, const std::string& op, Report& r) {
  const CoverSystem covers(e);
  const ElementSet q = parse_set_spec(e, spec);
  ElementSet out;
  if (op == "gamma") {
    out = closure_gamma(e, covers, q);
  } else if (op == "image") {
    out = gamma_image(covers, q);
  } else if (op == "down") {
    out = downset(e, q);
  } else if (op == "prime") {
    out = disjoint_complement(e, q);
  } else if (op == "doubleprime") {
    out = double_complement(e, q);
  } else {
    throw UsageError("unknown --op " + op);
  }
  r.field("Q", e.format(q));
  r.field("result", e.format(out));
  r.field("td", yes_no(is_td(e, covers, out)));
  r.field("std", yes_no(is_std(e, covers, out)));
  return kExitOk;
}

ElementSet td_input(const FiniteGpea& e, const CoverSystem& covers, const std::string& name, const std::string& spec,
                    bool close, Report& r) {
  ElementSet k = parse_set_spec(e, spec);
  if (!is_td(e, covers, k)) {
    if (!close) throw UsageError(name + "=" + e.format(k) + " is not type determining (use --close)");
    const ElementSet c = td_generated(e, covers, k);
    r.field(name + "_closed_from", e.format(k));
    k = c;
  }
  return k;
}

void report_context(const FiniteGpea& e, const CoverSystem& covers, const std::string& name, const TdContext& t,
                    Report& r) {
  const auto& g = covers.gex();
  r.field(name, e.format(t.k));
  r.field(name + "_tilde", e.format(t.k_tilde));
  r.field(name + "_star", e.name(t.k_star));
  r.field(name + "_tilde_star", e.name(t.k_tilde_star));
  r.field("gamma_" + name, map_name(e, g, t.gamma_k));
  r.field("gamma_" + name + "_tilde", map_name(e, g, t.gamma_k_tilde));
}

int cmd_decompose(const FiniteGpea& e, const std::string& kspec, const std::string& fspec, bool close, Report& r) {
  const CoverSystem covers(e);
  const auto& g = covers.gex();
  const ElementSet zc = central_elements(e);
  const TdContext k = td_context(e, covers, zc, td_input(e, covers, "K", kspec, close, r));
  report_context(e, covers, "K", k, r);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const TypeFlags f = classify(covers, k, i);
    r.record("flags", {{"map", map_name(e, g, i)},
                       {"type_K", yes_no(f.type_k)},
                       {"locally_type_K", yes_no(f.locally_type_k)},
                       {"purely_non_K", yes_no(f.purely_non_k)},
                       {"properly_non_K", yes_no(f.properly_non_k)}});
  }
  const Fundamental fd = fundamental_decomposition(covers, k);
  r.field("fundamental", "(" + map_name(e, g, fd.pi1) + "," + map_name(e, g, fd.pi2) + "," + map_name(e, g, fd.pi3) + ")");
  if (fspec.empty()) return kExitOk;
  const TdContext f = td_context(e, covers, zc, td_input(e, covers, "F", fspec, close, r));
  if (!k.k.subset_of(f.k)) throw UsageError("K is not contained in F");
  report_context(e, covers, "F", f, r);
  const DecompositionReport d = type_i_ii_iii(covers, k, f);
  r.field("pi_I", map_name(e, g, d.pi_i));
  r.field("pi_II", map_name(e, g, d.pi_ii));
  r.field("pi_III", map_name(e, g, d.pi_iii));
  r.field("pi_I_F", map_name(e, g, d.pi_i_f));
  r.field("pi_I_notF", map_name(e, g, d.pi_i_not_f));
  r.field("pi_II_F", map_name(e, g, d.pi_ii_f));
  r.field("pi_II_notF", map_name(e, g, d.pi_ii_not_f));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.field("tau_" + std::to_string(i + 1) + std::to_string(j + 1), map_name(e, g, d.tau[i][j]));
    }
  }
  return kExitOk;
}

int cmd_enumerate(std::size_t order, std::size_t cap, Report& r, std::ostream& out) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= order; ++n) {
    const auto models = enumerate_gpeas(n, cap);
    total += models.size();
    r.record("order", {{"n", std::to_string(n)}, {"classes", std::to_string(models.size())}});
    for (std::size_t k = 0; k < models.size(); ++k) {
      const std::string id = "enum-" + std::to_string(n) + "-" + std::to_string(k + 1);
      if (r.machine()) {
        std::string sums;
        std::istringstream body(serialize_model(models[k]));
        for (std::string l; std::getline(body, l);) {
          if (l.rfind("sum ", 0) == 0) sums += (sums.empty() ? "" : ";") + l.substr(4);
        }
        out << "model id=" << id << " commutative=" << yes_no(is_commutative(models[k])) << " sums=" << sums << '\n';
      } else {
        out << "# " << id << (is_commutative(models[k]) ? "" : " (non-commutative)") << '\n'
            << serialize_model(models[k]);
      }
    }
  }
  r.field("total", total);
  return kExitOk;
}

int cmd_laws(const std::vector<NamedModel>& models, const std::vector<std::string>& selection, const Globals& gl,
             Report& r, std::ostream& out) {
  for (const auto& id : selection) {
    const auto& reg = law_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const LawInfo& l) { return l.id == id; })) {
      throw UsageError("unknown law id " + id);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<LawResult>> results(models.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < models.size();) results[i] = verify_laws(models[i].model, models[i].id, selection);
  };
  unsigned jobs = gl.jobs ? gl.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, models.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t checks = 0, failed = 0, sampled = 0;
  for (const auto& per_model : results) {
    for (const auto& x : per_model) {
      ++checks;
      failed += !x.pass;
      sampled += !x.exhaustive;
      if (r.machine()) {
        out << "law=" << x.law_id << " model=" << x.model_id << " result=" << (x.pass ? "pass" : "fail")
            << " exhaustive=" << (x.exhaustive ? 1 : 0);
        if (!x.pass) out << " witness=" << x.witness;
        out << '\n';
      } else if (!x.pass) {
        out << "FAIL " << x.law_id << " on " << x.model_id << ": " << x.witness << '\n';
      }
    }
  }
  r.record("summary", {{"models", std::to_string(models.size())},
                       {"checks", std::to_string(checks)},
                       {"failed", std::to_string(failed)},
                       {"sampled", std::to_string(sampled)}});
  if (!gl.seedless && !r.machine()) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "elapsed: " << secs << " s\n";
  }
  return failed ? kExitLawFailure : kExitOk;
}

}  // namespace

ElementSet parse_set_spec(const FiniteGpea& e, const std::string& spec) {
  if (spec == "all") return e.all();
  if (spec == "center") return central_elements(e);
  if (spec == "atoms") return e.atoms();
  if (spec == "pea-class:commutative") return tdset_from_pea_class(e, is_commutative);
  if (spec == "pea-class:boolean") return tdset_from_pea_class(e, is_boolean_lattice);
  ElementSet out;
  if (spec.rfind("list:", 0) == 0) {
    for (const auto& w : split(spec.substr(5), ',')) {
      if (w.empty()) continue;
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(w, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != w.size() || v >= e.size()) throw UsageError("bad element index in set spec: " + w);
      out.insert(static_cast<Element>(v));
    }
    return out;
  }
  if (spec.rfind("labels:", 0) == 0) {
    for (const auto& w : split(spec.substr(7), ',')) {
      if (w.empty()) continue;
      bool found = false;
      for (Element x = 0; x < e.size() && !found; ++x) {
        if (e.name(x) == w) {
          out.insert(x);
          found = true;
        }
      }
      if (!found) throw UsageError("unknown label in set spec: " + w);
    }
    return out;
  }
  throw UsageError("unknown set spec: " + spec);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite generalized pseudoeffect algebra toolkit", "gpea"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--seedless", gl.seedless, "Omit run-dependent output such as timings");
  app.add_option("--jobs", gl.jobs, "Worker threads for the law suite (0: one per core)");

  std::string file, qspec, op, kspec, fspec;
  bool close = false;
  std::size_t order = 0, cap = kDefaultEnumerationCap, corpus_order = 0;
  std::vector<std::string> law_ids;

  auto* validate = app.add_subcommand("validate", "Check a model file against the axioms");
  validate->add_option("file", file)->required();
  auto* info = app.add_subcommand("info", "Summary of a model");
  info->add_option("file", file)->required();
  auto* exo = app.add_subcommand("exocenter", "List the exocenter maps");
  exo->add_option("file", file)->required();
  auto* cen = app.add_subcommand("center", "Central elements and their maps");
  cen->add_option("file", file)->required();
  auto* cov = app.add_subcommand("covers", "Exocentral covers and orthocompleteness");
  cov->add_option("file", file)->required();
  auto* td = app.add_subcommand("tdclose", "Apply a closure operator to a set");
  td->add_option("file", file)->required();
  td->add_option("--Q", qspec, "Set spec")->required();
  td->add_option("--op", op, "Closure")->required()->check(
      CLI::IsMember({"gamma", "image", "down", "prime", "doubleprime"}));
  auto* dec = app.add_subcommand("decompose", "Type decomposition for TD sets K (and F)");
  dec->add_option("file", file)->required();
  dec->add_option("--K", kspec, "Set spec for K")->required();
  dec->add_option("--F", fspec, "Set spec for F, containing K");
  dec->add_flag("--close", close, "Replace a non-TD set by the TD set it generates");
  auto* en = app.add_subcommand("enumerate", "One model per isomorphism class up to an order");
  en->add_option("--order", order, "Largest order")->required()->check(CLI::PositiveNumber);
  en->add_option("--cap", cap, "Order cap (at most " + std::to_string(kMaxEnumerationOrder) + ")");
  auto* laws = app.add_subcommand("laws", "Run the law suite on a model or the corpus");
  auto* laws_file = laws->add_option("file", file);
  auto* laws_corpus = laws->add_option("--corpus", corpus_order, "Enumerated order bound for the corpus");
  laws_file->excludes(laws_corpus);
  laws->add_option("--law", law_ids, "Law ids (comma separated)")->delimiter(',');

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report r(out, gl.format == "machine");
  try {
    if (*validate) return cmd_validate(file, r);
    if (*en) return cmd_enumerate(order, cap, r, out);
    if (*laws) {
      std::vector<NamedModel> models;
      if (*laws_corpus) {
        models = corpus(corpus_order);
      } else if (!file.empty()) {
        models.push_back({std::filesystem::path(file).stem().string(), load(file)});
      } else {
        throw UsageError("laws needs a model file or --corpus");
      }
      return cmd_laws(models, law_ids, gl, r, out);
    }
    const FiniteGpea e = load(file);
    if (*info) return cmd_info(e, r);
    if (*exo) return cmd_exocenter(e, r);
    if (*cen) return cmd_center(e, r);
    if (*cov) return cmd_covers(e, r);
    if (*td) return cmd_tdclose(e, qspec, op, r);
    if (*dec) return cmd_decompose(e, kspec, fspec, close, r);
  } catch (const InvalidModel& e) {
    err << "invalid model:\n" << e.report().render();
    return kExitInvalidModel;
  } catch (const ModelSyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitInvalidModel;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gpea
