#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinterp/verify.hpp"

using namespace qinterp;

TEST_CASE("every lemma suite passes on seeded instances") {
  VerifyOptions opt;
  opt.trials = 25;
  opt.seed = 20240811;
  for (const std::string& id : lemma_ids()) {
    CAPTURE(id);
    VerifyReport rep = run_lemma(id, opt);
    CHECK(rep.failures == 0);
    if (rep.failures != 0) MESSAGE(id, ": ", rep.first_failure);
  }
}

TEST_CASE("verify output is deterministic for a fixed seed") {
  VerifyOptions opt;
  opt.trials = 10;
  opt.seed = 99;
  VerifyReport a = run_lemma("S2.holland", opt);
  VerifyReport b = run_lemma("S2.holland", opt);
  CHECK(a.lines == b.lines);
  CHECK_THROWS_AS(run_lemma("L9.9", opt), Error);
}
