#include <doctest.h>

#include <cstring>
#include <string>

#include "mseg/mseg.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  mseg_string_free(s);
  return out;
}

mseg_multiseg* parse(const char* text) {
  mseg_multiseg* m = nullptr;
  REQUIRE(mseg_parse(text, &m) == MSEG_OK);
  return m;
}

std::string fmt(const mseg_multiseg* m) {
  char* s = nullptr;
  REQUIRE(mseg_format(m, &s) == MSEG_OK);
  return take(s);
}

}  // namespace

TEST_CASE("parse, format and free") {
  mseg_multiseg* m = parse("[0,1]+[1,2]");
  CHECK(mseg_size(m) == 2);
  CHECK(fmt(m) == "[1,2]+[0,1]");
  mseg_multiseg* d = nullptr;
  REQUIRE(mseg_dual(m, &d) == MSEG_OK);
  CHECK(fmt(d) == "[-1,0]+[-2,-1]");
  mseg_multiseg* s = nullptr;
  REQUIRE(mseg_add(m, d, &s) == MSEG_OK);
  CHECK(mseg_size(s) == 4);
  int ladder = -1;
  REQUIRE(mseg_is_ladder(m, &ladder) == MSEG_OK);
  CHECK(ladder == 1);
  mseg_free(s);
  mseg_free(d);
  mseg_free(m);
  mseg_free(nullptr);
}

TEST_CASE("errors map to status codes") {
  mseg_multiseg* m = nullptr;
  CHECK(mseg_parse("[1,2", &m) == MSEG_ERR_PARSE);
  CHECK(m == nullptr);
  CHECK(mseg_last_error_position() == 4);
  CHECK(std::strlen(mseg_last_error()) > 0);
  CHECK(mseg_parse("[2,1]", &m) == MSEG_ERR_EMPTY_SEGMENT);
  CHECK(mseg_parse(nullptr, &m) == MSEG_ERR_NULL_ARG);
  CHECK(mseg_parse("[0,0]", nullptr) == MSEG_ERR_NULL_ARG);
  CHECK(std::string(mseg_status_name(MSEG_ERR_NOT_APPLICABLE)) == "not applicable");

  mseg_multiseg* z = parse("0");
  mseg_multiseg* a = nullptr;
  mseg_multiseg* b = nullptr;
  CHECK(mseg_mw_step(z, &a, &b) == MSEG_ERR_EMPTY_MULTISEGMENT);
  mseg_free(z);

  mseg_rank_config cfg;
  mseg_rank_config_default(&cfg);
  cfg.prime = 10;
  mseg_verdict* v = nullptr;
  mseg_multiseg* x = parse("[0,1]");
  CHECK(mseg_check_gls(x, &cfg, &v) == MSEG_ERR_INVALID_CONFIG);
  mseg_rank_config_default(&cfg);
  mseg_multiseg* y = parse("[0,1]+[0,2]");
  CHECK(mseg_check_li(y, y, &cfg, &v) == MSEG_ERR_NOT_APPLICABLE);
  CHECK(v == nullptr);
  mseg_free(x);
  mseg_free(y);

  mseg_reports* r = nullptr;
  mseg_gen_params p;
  mseg_gen_params_default(&p);
  CHECK(mseg_run_suite("nope", &p, &cfg, 10, 100, &r) == MSEG_ERR_UNKNOWN_SUITE);
}

TEST_CASE("MW step and involution") {
  mseg_multiseg* m = parse("[0,0]+[1,1]");
  mseg_multiseg* mw = nullptr;
  REQUIRE(mseg_mw_dual(m, &mw) == MSEG_OK);
  CHECK(fmt(mw) == "[0,1]");
  mseg_multiseg* delta = nullptr;
  mseg_multiseg* red = nullptr;
  REQUIRE(mseg_mw_step(m, &delta, &red) == MSEG_OK);
  CHECK(fmt(delta) == "[0,1]");
  CHECK(fmt(red) == "0");
  mseg_free(red);
  mseg_free(delta);
  mseg_free(mw);
  mseg_free(m);
}

TEST_CASE("derivative") {
  mseg_multiseg* m = parse("[0,1]+[0,2]");
  size_t mu = 0;
  mseg_multiseg* der = nullptr;
  mseg_multiseg* soc = nullptr;
  REQUIRE(mseg_derivative(m, "0", &mu, &der, &soc) == MSEG_OK);
  CHECK(mu == 2);
  CHECK(fmt(der) == "[1,2]+[1,1]");
  CHECK(mseg_size(soc) == 3);
  CHECK(mseg_derivative(m, "0:", &mu, nullptr, nullptr) == MSEG_ERR_PARSE);
  mseg_free(der);
  mseg_free(soc);
  mseg_free(m);
}

TEST_CASE("verdicts") {
  mseg_rank_config cfg;
  mseg_rank_config_default(&cfg);
  CHECK(cfg.prime == 2305843009213693951ull);
  CHECK(cfg.trials == 8);

  mseg_multiseg* lec = parse("[1,2]+[-1,1]+[0,0]+[-2,-1]");
  mseg_verdict* v = nullptr;
  REQUIRE(mseg_check_gls(lec, &cfg, &v) == MSEG_OK);
  CHECK(mseg_verdict_holds(v) == 0);
  CHECK(mseg_verdict_certified(v) == 0);
  CHECK(mseg_verdict_trials(v) == 8);
  CHECK(mseg_verdict_witness_size(v) == 0);
  char* bound = nullptr;
  REQUIRE(mseg_verdict_bound(v, &bound) == MSEG_OK);
  CHECK(take(bound) != "0");
  mseg_verdict_free(v);

  REQUIRE(mseg_check_lc(lec, lec, &cfg, &v) == MSEG_OK);
  CHECK(mseg_verdict_holds(v) == 1);
  // four X pairs on each side
  CHECK(mseg_verdict_witness_size(v) == 8);
  char* key = nullptr;
  char* val = nullptr;
  REQUIRE(mseg_verdict_witness_entry(v, 0, &key, &val) == MSEG_OK);
  CHECK(take(key).front() == '(');
  CHECK_FALSE(take(val).empty());
  CHECK(mseg_verdict_witness_entry(v, 8, &key, &val) == MSEG_ERR_PRECONDITION);
  mseg_verdict_free(v);

  cfg.certify = 1;
  REQUIRE(mseg_check_lc(lec, lec, &cfg, &v) == MSEG_OK);
  CHECK(mseg_verdict_holds(v) == 1);
  CHECK(mseg_verdict_certified(v) == 1);
  mseg_verdict_free(v);

  mseg_multiseg* a = parse("[1,2]");
  mseg_multiseg* b = parse("[0,1]");
  REQUIRE(mseg_check_ig(a, b, &cfg, &v) == MSEG_OK);
  CHECK(mseg_verdict_holds(v) == 0);
  mseg_verdict_free(v);
  REQUIRE(mseg_check_li(a, b, &cfg, &v) == MSEG_OK);
  CHECK(mseg_verdict_holds(v) == 1);
  mseg_verdict_free(v);
  mseg_free(a);
  mseg_free(b);
  mseg_free(lec);
}

TEST_CASE("suites through the C interface") {
  REQUIRE(mseg_suite_count() > 7);
  CHECK(mseg_suite_name(mseg_suite_count()) == nullptr);
  mseg_gen_params p;
  mseg_gen_params_default(&p);
  mseg_rank_config cfg;
  mseg_rank_config_default(&cfg);
  for (size_t k = 0; k < mseg_suite_count(); ++k) {
    const char* name = mseg_suite_name(k);
    CAPTURE(name);
    mseg_reports* r = nullptr;
    REQUIRE(mseg_run_suite(name, &p, &cfg, 10, 5000, &r) == MSEG_OK);
    REQUIRE(mseg_reports_count(r) >= 1);
    for (size_t i = 0; i < mseg_reports_count(r); ++i) {
      CHECK(mseg_report_violation_count(r, i) == 0);
      CHECK(mseg_report_satisfied(r, i) >= 10);
      CHECK(mseg_report_generated(r, i) >= mseg_report_satisfied(r, i));
      char* bound = nullptr;
      REQUIRE(mseg_report_bound(r, i, &bound) == MSEG_OK);
      mseg_string_free(bound);
    }
    mseg_reports_free(r);
  }
}
