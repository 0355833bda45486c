#include "symq/cli.hpp"

#include <CLI11.hpp>

#include "symq/associated.hpp"
#include "symq/corpus.hpp"
#include "symq/errors.hpp"
#include "symq/homology.hpp"
#include "symq/json_io.hpp"
#include "symq/snf.hpp"
#include "symq/todd_coxeter.hpp"
#include "symq/util.hpp"

namespace symq {

namespace {

constexpr int kDefaultBound = 10000;
constexpr long long kDefaultMatrixBudget = 1000000;

const char* kBoundCaveat =
    "coset bound exceeded: the group was not shown finite within the "
    "budget; this is not evidence of infiniteness";

struct ReportContext {
  std::string command;
  Json inputs = Json::object();
  std::vector<std::string> warnings;

  void record_input(const std::string& path, const std::string& bytes) {
    inputs[path] = "fnv1a:" + fnv1a64_hex(bytes);
  }
};

/// Loads and validates, recording the input digest first so that even a
/// failing run reports what it read.
QuandleTable load_quandle(ReportContext& ctx, const std::string& path) {
  const std::string bytes = read_file(path);
  ctx.record_input(path, bytes);
  Json j = Json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON in " + path);
  return quandle_from_json(j);
}

Permutation load_rho(ReportContext& ctx, const std::string& path,
                     const QuandleTable& q) {
  const std::string bytes = read_file(path);
  ctx.record_input(path, bytes);
  Json j = Json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON in " + path);
  return involution_from_json(j, q);
}

Presentation load_presentation(ReportContext& ctx, const std::string& path) {
  const std::string bytes = read_file(path);
  ctx.record_input(path, bytes);
  return parse_presentation(bytes);
}

Json classes_json(const SymClassData& data) {
  Json j;
  j["orbits"] = data.orbits;
  j["classes"] = data.classes;
  j["reps"] = data.reps;
  j["lambda1"] = data.lambda1;
  j["lambda2"] = data.lambda2;
  j["trichotomy_reps"] = data.trichotomy_reps;
  return j;
}

Json pair_list(const std::vector<std::pair<int, int>>& pairs) {
  Json j = Json::array();
  for (const auto& [x, y] : pairs) j.push_back(Json::array({x, y}));
  return j;
}

struct CommandSettings {
  std::string quandle_path;
  std::string rho_path;
  std::string presentation_path;
  int bound = kDefaultBound;
  long long matrix_budget = kDefaultMatrixBudget;
  int basepoint = 0;
  int enumerate_order = 1;
  int enumerate_limit = 5;
  int corpus_max_size = 4;
  int corpus_finiteness_bound = 100000;
  int corpus_trials = 100;
};

Json run_check(ReportContext& ctx, const CommandSettings& s) {
  const QuandleTable q = load_quandle(ctx, s.quandle_path);
  Json result;
  result["valid"] = true;
  result["involutive"] = is_involutive(q);
  result["connected"] = is_connected(q);
  result["orbits"] = static_cast<int>(orbits(q).size());
  if (!s.rho_path.empty()) {
    load_rho(ctx, s.rho_path, q);
    result["rho_good"] = true;
  }
  return result;
}

Json run_goodinv(ReportContext& ctx, const CommandSettings& s) {
  const QuandleTable q = load_quandle(ctx, s.quandle_path);
  const auto involutions = enumerate_good_involutions(q);
  Json list = Json::array();
  for (const Permutation& rho : involutions) list.push_back(rho.images);
  Json result;
  result["count"] = static_cast<int>(involutions.size());
  result["involutions"] = list;
  return result;
}

Json run_classes(ReportContext& ctx, const CommandSettings& s) {
  const QuandleTable q = load_quandle(ctx, s.quandle_path);
  const Permutation rho = load_rho(ctx, s.rho_path, q);
  const SymClassData data = sym_classes(q, rho);
  Json result = classes_json(data);
  const TrichotomyAssignment t = orbit_trichotomy_check(q, rho, data);
  result["trichotomy_cases"] = t.kase;
  result["trichotomy_ok"] = t.ok;
  return result;
}

Json run_ab(ReportContext& ctx, const CommandSettings& s) {
  const QuandleTable q = load_quandle(ctx, s.quandle_path);
  Json result;
  result["quandle"] = quandle_to_json(q);
  const AbCheck asq = asq_abelianization_check(q);
  if (s.rho_path.empty()) {
    result["rho"] = nullptr;
    result["orbits"] = static_cast<int>(orbits(q).size());
    result["lambda1"] = nullptr;
    result["lambda2"] = nullptr;
    result["asq_ab"] = to_json(asq.invariants);
    result["symas_ab"] = nullptr;
    result["kernel_rank"] = nullptr;
    result["identity_holds"] = nullptr;
    result["asq_pass"] = asq.pass;
    result["symas_pass"] = nullptr;
    return result;
  }
  const Permutation rho = load_rho(ctx, s.rho_path, q);
  const CentralKernelReport report = central_kernel_report(q, rho);
  const AbCheck symas = symas_abelianization_check(q, rho);
  result["rho"] = rho.images;
  result["orbits"] = report.orbit_count;
  result["lambda1"] = report.lambda1_count;
  result["lambda2"] = report.lambda2_count;
  result["asq_ab"] = to_json(report.asq_ab);
  result["symas_ab"] = to_json(report.symas_ab);
  result["kernel_rank"] = report.kernel_rank;
  result["identity_holds"] = report.identity_holds;
  result["asq_pass"] = asq.pass;
  result["symas_pass"] = symas.pass;
  return result;
}

Json run_order(ReportContext& ctx, const CommandSettings& s) {
  const QuandleTable q = load_quandle(ctx, s.quandle_path);
  const Permutation rho = load_rho(ctx, s.rho_path, q);
  const auto tc = todd_coxeter(symas_presentation(q, rho), {}, s.bound);
  Json result;
  if (tc.bound_exceeded) {
    result["order"] = nullptr;
    result["bound_exceeded"] = true;
    ctx.warnings.push_back(kBoundCaveat);
  } else {
    result["order"] = tc.table.count;
    result["bound_exceeded"] = false;
  }
  return result;
}

Json run_embed(ReportContext& ctx, const CommandSettings& s) {
  const QuandleTable q = load_quandle(ctx, s.quandle_path);
  const Permutation rho = load_rho(ctx, s.rho_path, q);
  const EmbeddabilityVerdict v = embeddability(q, rho, s.bound);
  Json result;
  result["status"] = to_string(v.status);
  result["method"] = v.method;
  result["witness"] = v.witness
                          ? Json(Json::array({v.witness->first, v.witness->second}))
                          : Json(nullptr);
  if (v.method == "abelianization-certificate") {
    result["separated_pairs"] = pair_list(v.separated_pairs);
    result["certificate_separates_all"] = v.certificate_separates_all;
    if (v.status == Embeddability::Unknown) ctx.warnings.push_back(kBoundCaveat);
  }
  return result;
}

Json run_h2(ReportContext& ctx, const CommandSettings& s) {
  const QuandleTable q = load_quandle(ctx, s.quandle_path);
  Json result;
  result["h2_chain"] = to_json(h2_chain(q, s.matrix_budget));
  if (s.rho_path.empty()) {
    result["h2_group"] = nullptr;
    result["agree"] = nullptr;
    return result;
  }
  const Permutation rho = load_rho(ctx, s.rho_path, q);
  const H2GroupResult g = h2_group_formula(q, rho, s.basepoint, s.bound);
  if (g.bound_exceeded) {
    result["h2_group"] = nullptr;
    result["agree"] = nullptr;
    ctx.warnings.push_back(kBoundCaveat);
    return result;
  }
  Json gj = to_json(g.invariants);
  gj["group_order"] = g.group_order;
  gj["stabilizer_order"] = g.stabilizer_order;
  gj["derived_order"] = g.derived_order;
  gj["intersection_order"] = g.intersection_order;
  result["h2_group"] = gj;
  result["agree"] = g.invariants == h2_chain(q, s.matrix_budget);
  return result;
}

Json run_covering(ReportContext& ctx, const CommandSettings& s) {
  const Presentation p = load_presentation(ctx, s.presentation_path);
  const CoveringReport r = covering_group_check(p, s.bound);
  Json result;
  result["group_order"] = r.group_order ? Json(*r.group_order) : Json(nullptr);
  result["quandle_size"] =
      r.quandle_size ? Json(*r.quandle_size) : Json(nullptr);
  result["symas_order"] = r.symas_order ? Json(*r.symas_order) : Json(nullptr);
  result["quandle_avoids_identity"] = r.quandle_avoids_identity;
  result["quandle_generates"] = r.quandle_generates;
  result["is_covering"] = to_string(r.is_covering);
  if (!r.group_order || !r.symas_order) ctx.warnings.push_back(kBoundCaveat);
  return result;
}

Json run_wirtinger(ReportContext& ctx, const CommandSettings& s) {
  const Presentation p = load_presentation(ctx, s.presentation_path);
  const WirtingerClassification c = classify_wirtinger(p);
  Json relators = Json::array();
  for (std::size_t i = 0; i < c.relator_tags.size(); ++i) {
    Json r;
    r["index"] = static_cast<int>(i);
    r["tag"] = to_string(c.relator_tags[i]);
    r["empty"] = static_cast<bool>(c.empty_after_reduction[i]);
    relators.push_back(r);
  }
  Json result;
  result["relators"] = relators;
  result["overall"] = to_string(c.overall);
  return result;
}

Json run_enumerate(ReportContext&, const CommandSettings& s) {
  const auto quandles = enumerate_quandles(s.enumerate_order, s.enumerate_limit);
  Json list = Json::array();
  for (const QuandleTable& q : quandles) list.push_back(quandle_to_json(q));
  Json result;
  result["order"] = s.enumerate_order;
  result["count"] = static_cast<int>(quandles.size());
  result["quandles"] = list;
  return result;
}

Json run_corpus(ReportContext&, const CommandSettings& s) {
  SweepOptions opt;
  opt.max_size = s.corpus_max_size;
  opt.tc_bound = s.bound;
  opt.finiteness_bound = s.corpus_finiteness_bound;
  opt.matrix_budget = s.matrix_budget;
  opt.snf_trials = s.corpus_trials;
  const SweepReport report = run_sweep(opt);
  Json criteria = Json::array();
  for (const auto& c : report.criteria) {
    Json cj;
    cj["id"] = c.id;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["details"] = c.details;
    criteria.push_back(cj);
  }
  Json result;
  result["quandles"] = report.quandle_count;
  result["pairs"] = report.pair_count;
  result["criteria"] = criteria;
  result["all_pass"] = report.all_pass;
  return result;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const UnknownGeneratorError*>(&e)) return "UnknownGenerator";
  if (dynamic_cast<const ParseError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const FormatError*>(&e)) return "FormatError";
  if (dynamic_cast<const AxiomError*>(&e)) return "AxiomViolation";
  if (dynamic_cast<const InvolutionError*>(&e)) return "InvolutionViolation";
  if (dynamic_cast<const NotClosedError*>(&e)) return "NotClosed";
  if (dynamic_cast<const ContainsIdentityError*>(&e)) return "ContainsIdentity";
  if (dynamic_cast<const NotConnectedError*>(&e)) return "NotConnected";
  if (dynamic_cast<const NotTwistedWirtingerError*>(&e))
    return "NotTwistedWirtinger";
  if (dynamic_cast<const NotRegularError*>(&e)) return "NotRegular";
  if (dynamic_cast<const LimitExceededError*>(&e)) return "LimitExceeded";
  if (dynamic_cast<const SizeLimitError*>(&e)) return "SizeLimit";
  if (dynamic_cast<const Error*>(&e)) return "DomainError";
  return "InternalError";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"invariants of finite quandles and symmetric quandles"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");

  CommandSettings s;

  auto add_bound = [&](CLI::App* cmd) {
    cmd->add_option("--bound", s.bound, "coset enumeration budget")
        ->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check", "validate a quandle file");
  check->add_option("quandle", s.quandle_path)->required();
  check->add_option("--rho", s.rho_path, "involution file to validate too");

  CLI::App* goodinv =
      app.add_subcommand("goodinv", "list all good involutions");
  goodinv->add_option("quandle", s.quandle_path)->required();

  CLI::App* classes =
      app.add_subcommand("classes", "orbits, ~ classes and the lambda split");
  classes->add_option("quandle", s.quandle_path)->required();
  classes->add_option("--rho", s.rho_path)->required();

  CLI::App* ab = app.add_subcommand("ab", "abelianization report");
  ab->add_option("quandle", s.quandle_path)->required();
  ab->add_option("--rho", s.rho_path);

  CLI::App* order =
      app.add_subcommand("order", "coset-enumerate the symmetric associated group");
  order->add_option("quandle", s.quandle_path)->required();
  order->add_option("--rho", s.rho_path)->required();
  add_bound(order);

  CLI::App* embed = app.add_subcommand("embed", "embeddability verdict");
  embed->add_option("quandle", s.quandle_path)->required();
  embed->add_option("--rho", s.rho_path)->required();
  add_bound(embed);

  CLI::App* h2 = app.add_subcommand("h2", "second quandle homology");
  h2->add_option("quandle", s.quandle_path)->required();
  h2->add_option("--rho", s.rho_path);
  h2->add_option("--basepoint", s.basepoint)->capture_default_str();
  h2->add_option("--max-entries", s.matrix_budget)->capture_default_str();
  add_bound(h2);

  CLI::App* covering =
      app.add_subcommand("covering", "covering-group check of a presentation");
  covering->add_option("presentation", s.presentation_path)->required();
  add_bound(covering);

  CLI::App* wirtinger =
      app.add_subcommand("wirtinger", "classify relator shapes");
  wirtinger->add_option("presentation", s.presentation_path)->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "quandles of an order, up to isomorphism");
  enumerate->add_option("order", s.enumerate_order)->required();
  enumerate->add_option("--limit", s.enumerate_limit)->capture_default_str();

  CLI::App* corpus =
      app.add_subcommand("corpus", "full verification sweep with a summary");
  corpus->add_option("--max-size", s.corpus_max_size)->capture_default_str();
  corpus->add_option("--finiteness-bound", s.corpus_finiteness_bound)
      ->capture_default_str();
  corpus->add_option("--trials", s.corpus_trials)->capture_default_str();
  corpus->add_option("--max-entries", s.matrix_budget)->capture_default_str();
  add_bound(corpus);

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  ReportContext ctx;
  Json report;
  try {
    Json result;
    if (*check) {
      ctx.command = "check";
      result = run_check(ctx, s);
    } else if (*goodinv) {
      ctx.command = "goodinv";
      result = run_goodinv(ctx, s);
    } else if (*classes) {
      ctx.command = "classes";
      result = run_classes(ctx, s);
    } else if (*ab) {
      ctx.command = "ab";
      result = run_ab(ctx, s);
    } else if (*order) {
      ctx.command = "order";
      result = run_order(ctx, s);
    } else if (*embed) {
      ctx.command = "embed";
      result = run_embed(ctx, s);
    } else if (*h2) {
      ctx.command = "h2";
      result = run_h2(ctx, s);
    } else if (*covering) {
      ctx.command = "covering";
      result = run_covering(ctx, s);
    } else if (*wirtinger) {
      ctx.command = "wirtinger";
      result = run_wirtinger(ctx, s);
    } else if (*enumerate) {
      ctx.command = "enumerate";
      result = run_enumerate(ctx, s);
    } else if (*corpus) {
      ctx.command = "corpus";
      result = run_corpus(ctx, s);
    }
    report["command"] = ctx.command;
    report["inputs"] = ctx.inputs;
    report["result"] = result;
    report["warnings"] = ctx.warnings;
    out << report.dump(pretty ? 2 : -1) << "\n";
    return 0;
  } catch (const std::exception& e) {
    report["command"] = ctx.command;
    report["inputs"] = ctx.inputs;
    Json ej;
    ej["kind"] = error_kind(e);
    ej["message"] = e.what();
    report["error"] = ej;
    out << report.dump(pretty ? 2 : -1) << "\n";
    return 1;
  }
}

}  // namespace symq
