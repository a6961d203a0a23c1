#include "mseg/mseg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mseg/combinatorics.hpp"
#include "mseg/conditions.hpp"
#include "mseg/error.hpp"
#include "mseg/harness.hpp"
#include "mseg/notation.hpp"

struct mseg_multiseg {
  mseg::Multisegment value;
};

struct mseg_verdict {
  mseg::Verdict value;
  std::vector<std::pair<std::string, std::string>> entries;
};

struct mseg_reports {
  std::vector<mseg::PropertyReport> value;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_error_pos = 0;

mseg_status status_of(mseg::ErrorCode c) {
  using mseg::ErrorCode;
  switch (c) {
    case ErrorCode::EmptySegment: return MSEG_ERR_EMPTY_SEGMENT;
    case ErrorCode::EmptyMultisegment: return MSEG_ERR_EMPTY_MULTISEGMENT;
    case ErrorCode::PreconditionViolated: return MSEG_ERR_PRECONDITION;
    case ErrorCode::InvalidMatching: return MSEG_ERR_INVALID_MATCHING;
    case ErrorCode::TooLarge: return MSEG_ERR_TOO_LARGE;
    case ErrorCode::SupportMismatch: return MSEG_ERR_SUPPORT_MISMATCH;
    case ErrorCode::NotApplicable: return MSEG_ERR_NOT_APPLICABLE;
    case ErrorCode::InvalidConfig: return MSEG_ERR_INVALID_CONFIG;
    case ErrorCode::ParseError: return MSEG_ERR_PARSE;
  }
  return MSEG_ERR_INTERNAL;
}

template <class F>
mseg_status guarded(F&& f) {
  try {
    f();
    g_error.clear();
    return MSEG_OK;
  } catch (const mseg::ParseError& e) {
    g_error = e.what();
    g_error_pos = e.position();
    return MSEG_ERR_PARSE;
  } catch (const mseg::Error& e) {
    g_error = e.what();
    return status_of(e.code());
  } catch (const std::out_of_range& e) {
    g_error = e.what();
    return MSEG_ERR_UNKNOWN_SUITE;
  } catch (const std::exception& e) {
    g_error = e.what();
    return MSEG_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return MSEG_ERR_INTERNAL;
  }
}

mseg_status null_arg() {
  g_error = "null argument";
  return MSEG_ERR_NULL_ARG;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mseg_multiseg* wrap(mseg::Multisegment m) { return new mseg_multiseg{std::move(m)}; }

mseg::RankConfig to_cfg(const mseg_rank_config* c) {
  mseg::RankConfig cfg;
  if (c) {
    cfg.prime = c->prime;
    cfg.trials = c->trials;
    cfg.seed = c->seed;
    cfg.certify = c->certify != 0;
  }
  return cfg;
}

std::string bound_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void add_entries(std::vector<std::pair<std::string, std::string>>& out, const mseg::Witness& w,
                 const std::string& prefix) {
  for (const auto& p : w.lam.support)
    out.emplace_back(prefix + mseg::to_string(p), w.lam.at(p).get_str());
  if (w.lam2)
    for (const auto& p : w.lam2->support)
      out.emplace_back(prefix + mseg::to_string(p) + "'", w.lam2->at(p).get_str());
}

mseg_verdict* wrap(mseg::Verdict v) {
  auto* out = new mseg_verdict{std::move(v), {}};
  if (out->value.witness) add_entries(out->entries, *out->value.witness, "");
  if (out->value.converse_witness) add_entries(out->entries, *out->value.converse_witness, "rev");
  return out;
}

template <class F>
mseg_status verdict_call(const mseg_multiseg* m, const mseg_multiseg* m2,
                         const mseg_rank_config* cfg, mseg_verdict** out, F&& f) {
  if (!m || !m2 || !out) return null_arg();
  return guarded([&] { *out = wrap(f(m->value, m2->value, to_cfg(cfg))); });
}

const mseg::PropertyReport* report_at(const mseg_reports* r, std::size_t k) {
  if (!r || k >= r->value.size()) return nullptr;
  return &r->value[k];
}

}  // namespace

extern "C" {

const char* mseg_status_name(mseg_status s) {
  switch (s) {
    case MSEG_OK: return "ok";
    case MSEG_ERR_NULL_ARG: return "null argument";
    case MSEG_ERR_PARSE: return "parse error";
    case MSEG_ERR_EMPTY_SEGMENT: return "empty segment";
    case MSEG_ERR_EMPTY_MULTISEGMENT: return "empty multisegment";
    case MSEG_ERR_PRECONDITION: return "precondition violated";
    case MSEG_ERR_NOT_APPLICABLE: return "not applicable";
    case MSEG_ERR_INVALID_CONFIG: return "invalid configuration";
    case MSEG_ERR_TOO_LARGE: return "too large";
    case MSEG_ERR_SUPPORT_MISMATCH: return "support mismatch";
    case MSEG_ERR_INVALID_MATCHING: return "invalid matching";
    case MSEG_ERR_UNKNOWN_SUITE: return "unknown suite";
    case MSEG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mseg_last_error(void) { return g_error.c_str(); }
size_t mseg_last_error_position(void) { return g_error_pos; }

void mseg_string_free(char* s) { std::free(s); }

mseg_status mseg_parse(const char* text, mseg_multiseg** out) {
  if (!text || !out) return null_arg();
  return guarded([&] { *out = wrap(mseg::parse_mseg(text)); });
}

void mseg_free(mseg_multiseg* m) { delete m; }

mseg_status mseg_format(const mseg_multiseg* m, char** out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = dup(mseg::format(m->value)); });
}

size_t mseg_size(const mseg_multiseg* m) { return m ? m->value.size() : 0; }

mseg_status mseg_add(const mseg_multiseg* a, const mseg_multiseg* b, mseg_multiseg** out) {
  if (!a || !b || !out) return null_arg();
  return guarded([&] { *out = wrap(mseg::ms_add(a->value, b->value)); });
}

mseg_status mseg_dual(const mseg_multiseg* m, mseg_multiseg** out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = wrap(mseg::ms_dual(m->value)); });
}

mseg_status mseg_is_ladder(const mseg_multiseg* m, int* out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = mseg::is_ladder(m->value) ? 1 : 0; });
}

mseg_status mseg_sli_sufficient(const mseg_multiseg* m, const mseg_multiseg* m2, int* out) {
  if (!m || !m2 || !out) return null_arg();
  return guarded([&] { *out = mseg::sli_sufficient(m->value, m2->value) ? 1 : 0; });
}

mseg_status mseg_mw_dual(const mseg_multiseg* m, mseg_multiseg** out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = wrap(mseg::mw_dual(m->value)); });
}

mseg_status mseg_mw_step(const mseg_multiseg* m, mseg_multiseg** delta, mseg_multiseg** reduced) {
  if (!m || !delta || !reduced) return null_arg();
  return guarded([&] {
    auto step = mseg::mw_step(m->value);
    *delta = wrap(mseg::Multisegment{step.delta});
    *reduced = wrap(std::move(step.reduced));
  });
}

mseg_status mseg_derivative(const mseg_multiseg* m, const char* rho, size_t* mu,
                            mseg_multiseg** derived, mseg_multiseg** soc) {
  if (!m || !rho) return null_arg();
  return guarded([&] {
    const auto point = mseg::parse_point(rho);
    auto d = mseg::derivative(m->value, point);
    auto s = mseg::soc_cuspidal(m->value, point);
    if (mu) *mu = d.mu;
    if (derived) *derived = wrap(std::move(d.derived));
    if (soc) *soc = wrap(std::move(s));
  });
}

void mseg_rank_config_default(mseg_rank_config* cfg) {
  if (!cfg) return;
  const mseg::RankConfig d;
  *cfg = {d.prime, d.trials, d.seed, d.certify ? 1 : 0};
}

mseg_status mseg_check_gls(const mseg_multiseg* m, const mseg_rank_config* cfg, mseg_verdict** out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = wrap(mseg::check_gls(m->value, to_cfg(cfg))); });
}

mseg_status mseg_check_lc(const mseg_multiseg* m, const mseg_multiseg* m2,
                          const mseg_rank_config* cfg, mseg_verdict** out) {
  return verdict_call(m, m2, cfg, out, [](auto& a, auto& b, auto c) { return mseg::check_lc(a, b, c); });
}

mseg_status mseg_check_ig(const mseg_multiseg* m, const mseg_multiseg* m2,
                          const mseg_rank_config* cfg, mseg_verdict** out) {
  return verdict_call(m, m2, cfg, out, [](auto& a, auto& b, auto c) { return mseg::check_ig(a, b, c); });
}

mseg_status mseg_check_li(const mseg_multiseg* m, const mseg_multiseg* m2,
                          const mseg_rank_config* cfg, mseg_verdict** out) {
  return verdict_call(m, m2, cfg, out,
                      [](auto& a, auto& b, auto c) { return mseg::li_for_good(a, b, c); });
}

void mseg_verdict_free(mseg_verdict* v) { delete v; }
int mseg_verdict_holds(const mseg_verdict* v) { return v && v->value.holds ? 1 : 0; }
int mseg_verdict_certified(const mseg_verdict* v) { return v && v->value.certified ? 1 : 0; }
int mseg_verdict_trials(const mseg_verdict* v) { return v ? v->value.trials_run : 0; }

mseg_status mseg_verdict_bound(const mseg_verdict* v, char** out) {
  if (!v || !out) return null_arg();
  return guarded([&] { *out = dup(bound_string(v->value.false_verdict_bound)); });
}

size_t mseg_verdict_witness_size(const mseg_verdict* v) { return v ? v->entries.size() : 0; }

mseg_status mseg_verdict_witness_entry(const mseg_verdict* v, size_t k, char** key, char** value) {
  if (!v || !key || !value) return null_arg();
  return guarded([&] {
    if (k >= v->entries.size())
      throw mseg::Error(mseg::ErrorCode::PreconditionViolated, "witness index out of range");
    const auto& e = v->entries[k];
    *key = dup(e.first);
    *value = dup(e.second);
  });
}

void mseg_gen_params_default(mseg_gen_params* p) {
  if (!p) return;
  const mseg::GenParams d;
  *p = {d.max_segments, d.coord_range, d.max_length, d.lines, d.seed};
}

size_t mseg_suite_count(void) { return mseg::suite_names().size(); }

const char* mseg_suite_name(size_t k) {
  static const std::vector<std::string> names = mseg::suite_names();
  return k < names.size() ? names[k].c_str() : nullptr;
}

mseg_status mseg_run_suite(const char* name, const mseg_gen_params* p, const mseg_rank_config* cfg,
                           size_t target, size_t max_attempts, mseg_reports** out) {
  if (!name || !out) return null_arg();
  return guarded([&] {
    mseg::GenParams gp;
    if (p) gp = {p->max_segments, p->coord_range, p->max_length, p->lines, p->seed};
    *out = new mseg_reports{mseg::run_suite(name, gp, to_cfg(cfg), {target, max_attempts})};
  });
}

void mseg_reports_free(mseg_reports* r) { delete r; }
size_t mseg_reports_count(const mseg_reports* r) { return r ? r->value.size() : 0; }

const char* mseg_report_name(const mseg_reports* r, size_t k) {
  const auto* rep = report_at(r, k);
  return rep ? rep->name.c_str() : nullptr;
}

size_t mseg_report_generated(const mseg_reports* r, size_t k) {
  const auto* rep = report_at(r, k);
  return rep ? rep->instances_generated : 0;
}

size_t mseg_report_satisfied(const mseg_reports* r, size_t k) {
  const auto* rep = report_at(r, k);
  return rep ? rep->hypothesis_satisfied : 0;
}

size_t mseg_report_violation_count(const mseg_reports* r, size_t k) {
  const auto* rep = report_at(r, k);
  return rep ? rep->violations.size() : 0;
}

mseg_status mseg_report_violation(const mseg_reports* r, size_t k, size_t v, char** detail,
                                  char** inputs, int* possibly_spurious) {
  const auto* rep = report_at(r, k);
  if (!rep || !detail || !inputs) return null_arg();
  return guarded([&] {
    if (v >= rep->violations.size())
      throw mseg::Error(mseg::ErrorCode::PreconditionViolated, "violation index out of range");
    const auto& viol = rep->violations[v];
    std::string joined;
    for (const auto& m : viol.inputs) {
      if (!joined.empty()) joined += '|';
      joined += mseg::format(m);
    }
    *detail = dup(viol.detail);
    *inputs = dup(joined);
    if (possibly_spurious) *possibly_spurious = viol.possibly_spurious ? 1 : 0;
  });
}

mseg_status mseg_report_bound(const mseg_reports* r, size_t k, char** out) {
  const auto* rep = report_at(r, k);
  if (!rep || !out) return null_arg();
  return guarded([&] { *out = dup(bound_string(rep->false_verdict_bound)); });
}

}  // extern "C"
