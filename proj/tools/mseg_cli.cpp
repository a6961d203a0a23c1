// mseg: command-line front end over the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mseg/mseg.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Failure {
  mseg_status status;
  std::string message;
};

void check(mseg_status s) {
  if (s != MSEG_OK) throw Failure{s, mseg_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  mseg_string_free(s);
  return out;
}

struct MsDeleter {
  void operator()(mseg_multiseg* m) const { mseg_free(m); }
};
struct VerdictDeleter {
  void operator()(mseg_verdict* v) const { mseg_verdict_free(v); }
};
struct ReportsDeleter {
  void operator()(mseg_reports* r) const { mseg_reports_free(r); }
};
using Ms = std::unique_ptr<mseg_multiseg, MsDeleter>;
using VerdictPtr = std::unique_ptr<mseg_verdict, VerdictDeleter>;
using ReportsPtr = std::unique_ptr<mseg_reports, ReportsDeleter>;

Ms parse(const std::string& text) {
  mseg_multiseg* m = nullptr;
  check(mseg_parse(text.c_str(), &m));
  return Ms(m);
}

std::string format(const mseg_multiseg* m) {
  char* s = nullptr;
  check(mseg_format(m, &s));
  return take(s);
}

struct Globals {
  std::uint64_t prime = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool certify = false;
  std::string fmt = "text";
  bool exit_code_verdict = false;

  mseg_rank_config config() const {
    mseg_rank_config c;
    mseg_rank_config_default(&c);
    c.prime = prime;
    c.trials = trials;
    c.seed = seed;
    c.certify = certify ? 1 : 0;
    return c;
  }
};

// Result record shared by every command; rendered as JSON or text.
struct Result {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<bool> verdict;
  bool certified = false;
  int trials = 0;
  std::string bound = "0/1";
  json witness = nullptr;
  json outputs = json::object();
  std::vector<std::string> text;  // body lines for text mode
};

Result verdict_result(const std::string& command, std::vector<std::string> inputs,
                      mseg_verdict* v) {
  Result r;
  r.command = command;
  r.inputs = std::move(inputs);
  r.verdict = mseg_verdict_holds(v) != 0;
  r.certified = mseg_verdict_certified(v) != 0;
  r.trials = mseg_verdict_trials(v);
  char* b = nullptr;
  check(mseg_verdict_bound(v, &b));
  r.bound = take(b);

  r.text.push_back(std::string("verdict: ") + (*r.verdict ? "true" : "false"));
  r.text.push_back(std::string("certified: ") + (r.certified ? "true" : "false"));
  r.text.push_back("trials: " + std::to_string(r.trials));
  r.text.push_back("false_verdict_bound: " + r.bound);
  if (*r.verdict) {
    r.witness = json::object();
    std::string line = "witness:";
    for (std::size_t k = 0; k < mseg_verdict_witness_size(v); ++k) {
      char* key = nullptr;
      char* val = nullptr;
      check(mseg_verdict_witness_entry(v, k, &key, &val));
      const std::string ks = take(key), vs = take(val);
      r.witness[ks] = std::stoll(vs);
      line += " " + ks + "=" + vs;
    }
    r.text.push_back(line);
  }
  return r;
}

json bool_or_null(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

void emit(const Result& r, const Globals& g) {
  if (g.fmt == "json") {
    json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["verdict"] = bool_or_null(r.verdict);
    j["certified"] = r.certified;
    j["trials"] = r.trials;
    j["false_verdict_bound"] = r.bound;
    j["witness"] = r.witness;
    j["prime"] = g.prime;
    j["seed"] = g.seed;
    j["outputs"] = r.outputs;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) std::cout << line << "\n";
  }
}

int exit_code(const Result& r, const Globals& g) {
  if (!g.exit_code_verdict || !r.verdict) return kExitOk;
  return *r.verdict ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multisegment combinatorics and geometric irreducibility criteria"};
  app.require_subcommand(1);

  Globals g;
  {
    mseg_rank_config d;
    mseg_rank_config_default(&d);
    g.prime = d.prime;
    g.trials = d.trials;
    g.seed = d.seed;
  }
  app.add_option("--prime", g.prime, "Prime modulus for randomized rank tests");
  app.add_option("--trials", g.trials, "Random evaluations before answering false");
  app.add_option("--seed", g.seed, "Seed of the coefficient stream");
  app.add_flag("--certify", g.certify, "Confirm true verdicts by exact rational rank");
  app.add_option("--format", g.fmt, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--exit-code-verdict", g.exit_code_verdict, "Exit 0 iff the verdict is true");

  std::string arg1, arg2;
  std::string rho;

  auto* check_cmd = app.add_subcommand("check", "Decide GLS, LC, IG or LI");
  check_cmd->require_subcommand(1);
  auto* gls = check_cmd->add_subcommand("gls", "GLS(m)");
  gls->add_option("m", arg1, "Multisegment")->required();
  std::vector<CLI::App*> pair_checks;
  for (const char* name : {"lc", "ig", "li"}) {
    auto* sub = check_cmd->add_subcommand(name, std::string(name) + "(m, m2)");
    sub->add_option("m", arg1, "First multisegment")->required();
    sub->add_option("m2", arg2, "Second multisegment")->required();
    pair_checks.push_back(sub);
  }

  auto* mw = app.add_subcommand("mw", "MW involution m^#");
  mw->add_option("m", arg1, "Multisegment")->required();
  auto* reduce = app.add_subcommand("reduce", "One MW step: m^- and Delta(m)");
  reduce->add_option("m", arg1, "Multisegment")->required();
  auto* deriv = app.add_subcommand("derivative", "rho-derivative, multiplicity and socle");
  deriv->add_option("--rho", rho, "Cuspidal point L:K or K")->required();
  deriv->add_option("m", arg1, "Multisegment")->required();
  auto* ladder = app.add_subcommand("ladder", "Is m a ladder");
  ladder->add_option("m", arg1, "Multisegment")->required();
  auto* sli = app.add_subcommand("sli", "No segment of m precedes one of m2");
  sli->add_option("m", arg1, "First multisegment")->required();
  sli->add_option("m2", arg2, "Second multisegment")->required();

  mseg_gen_params gp;
  mseg_gen_params_default(&gp);
  std::size_t instances = 200;
  std::size_t max_attempts = 0;
  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "Run a property suite");
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_option("--trials,--instances", instances, "Hypothesis-satisfying instances wanted");
  suite->add_option("--seed", gp.seed, "Generator seed");
  suite->add_option("--max-segments", gp.max_segments, "Segments per generated multisegment");
  suite->add_option("--range", gp.coord_range, "Coordinates lie in [-R, R]");
  suite->add_option("--max-length", gp.max_length, "Longest generated segment");
  suite->add_option("--lines", gp.lines, "Number of lines");
  suite->add_option("--max-attempts", max_attempts, "Instance budget (default 100 per wanted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const mseg_rank_config cfg = g.config();
    Result r;

    if (*gls) {
      Ms m = parse(arg1);
      mseg_verdict* v = nullptr;
      check(mseg_check_gls(m.get(), &cfg, &v));
      VerdictPtr hold(v);
      r = verdict_result("check gls", {format(m.get())}, v);
    } else if (*check_cmd) {
      CLI::App* which = nullptr;
      for (auto* sub : pair_checks)
        if (*sub) which = sub;
      Ms m = parse(arg1);
      Ms m2 = parse(arg2);
      mseg_verdict* v = nullptr;
      const std::string name = which->get_name();
      if (name == "lc") check(mseg_check_lc(m.get(), m2.get(), &cfg, &v));
      if (name == "ig") check(mseg_check_ig(m.get(), m2.get(), &cfg, &v));
      if (name == "li") check(mseg_check_li(m.get(), m2.get(), &cfg, &v));
      VerdictPtr hold(v);
      r = verdict_result("check " + name, {format(m.get()), format(m2.get())}, v);
    } else if (*mw) {
      Ms m = parse(arg1);
      mseg_multiseg* out = nullptr;
      check(mseg_mw_dual(m.get(), &out));
      Ms hold(out);
      r.command = "mw";
      r.inputs = {format(m.get())};
      r.outputs["mw"] = format(out);
      r.text = {format(out)};
    } else if (*reduce) {
      Ms m = parse(arg1);
      mseg_multiseg* delta = nullptr;
      mseg_multiseg* red = nullptr;
      check(mseg_mw_step(m.get(), &delta, &red));
      Ms h1(delta), h2(red);
      r.command = "reduce";
      r.inputs = {format(m.get())};
      r.outputs["reduced"] = format(red);
      r.outputs["delta"] = format(delta);
      r.text = {"reduced: " + format(red), "delta: " + format(delta)};
    } else if (*deriv) {
      Ms m = parse(arg1);
      std::size_t mu = 0;
      mseg_multiseg* d = nullptr;
      mseg_multiseg* soc = nullptr;
      check(mseg_derivative(m.get(), rho.c_str(), &mu, &d, &soc));
      Ms h1(d), h2(soc);
      r.command = "derivative";
      r.inputs = {format(m.get())};
      r.outputs["rho"] = rho;
      r.outputs["mu"] = mu;
      r.outputs["derivative"] = format(d);
      r.outputs["soc"] = format(soc);
      r.text = {"mu: " + std::to_string(mu), "derivative: " + format(d), "soc: " + format(soc)};
    } else if (*ladder || *sli) {
      Ms m = parse(arg1);
      int flag = 0;
      r.inputs = {format(m.get())};
      if (*ladder) {
        check(mseg_is_ladder(m.get(), &flag));
        r.command = "ladder";
      } else {
        Ms m2 = parse(arg2);
        check(mseg_sli_sufficient(m.get(), m2.get(), &flag));
        r.command = "sli";
        r.inputs.push_back(format(m2.get()));
      }
      r.verdict = flag != 0;
      r.certified = true;
      r.text = {flag ? "true" : "false"};
    } else if (*suite) {
      mseg_reports* raw = nullptr;
      check(mseg_run_suite(suite_name.c_str(), &gp, &cfg, instances,
                           max_attempts ? max_attempts : 100 * instances + 100, &raw));
      ReportsPtr reps(raw);
      r.command = "suite " + suite_name;
      bool all_pass = true;
      json list = json::array();
      for (std::size_t k = 0; k < mseg_reports_count(raw); ++k) {
        json rep;
        rep["name"] = mseg_report_name(raw, k);
        rep["instances_generated"] = mseg_report_generated(raw, k);
        rep["hypothesis_satisfied"] = mseg_report_satisfied(raw, k);
        char* b = nullptr;
        check(mseg_report_bound(raw, k, &b));
        rep["false_verdict_bound"] = take(b);
        json viols = json::array();
        const std::size_t nv = mseg_report_violation_count(raw, k);
        all_pass = all_pass && nv == 0;
        r.text.push_back(std::string(mseg_report_name(raw, k)) + ": " + (nv ? "FAIL" : "PASS") +
                         " generated=" + std::to_string(mseg_report_generated(raw, k)) +
                         " satisfied=" + std::to_string(mseg_report_satisfied(raw, k)) +
                         " violations=" + std::to_string(nv) +
                         " bound=" + rep["false_verdict_bound"].get<std::string>());
        for (std::size_t v = 0; v < nv; ++v) {
          char* detail = nullptr;
          char* inputs = nullptr;
          int spurious = 0;
          check(mseg_report_violation(raw, k, v, &detail, &inputs, &spurious));
          json vj;
          vj["inputs"] = take(inputs);
          vj["detail"] = take(detail);
          vj["possibly_spurious"] = spurious != 0;
          r.text.push_back("  " + vj["inputs"].get<std::string>() + ": " +
                           vj["detail"].get<std::string>() + (spurious ? " (possibly spurious)" : ""));
          viols.push_back(std::move(vj));
        }
        rep["violations"] = std::move(viols);
        list.push_back(std::move(rep));
      }
      r.verdict = all_pass;
      r.certified = false;
      r.outputs["reports"] = std::move(list);
    }

    emit(r, g);
    return exit_code(r, g);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.status == MSEG_ERR_INTERNAL ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
