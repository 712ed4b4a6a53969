// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eiszeta/verify.hpp"

using namespace eiszeta;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

std::string summary(const CheckReport& r) {
  return std::to_string(r.count(Status::PASS)) + " pass, " + std::to_string(r.count(Status::FAIL)) + " fail, " +
         std::to_string(r.count(Status::FLAGGED)) + " flagged";
}

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& it : r.items)
    if (it.status == Status::FAIL) out += "\n      FAIL " + it.subject + ": " + it.witness.dump();
  return out;
}

Outcome no_failures(const CheckReport& r) { return {!r.failed(), summary(r) + failures(r)}; }

bool has_flagged(const CheckReport& r, const std::string& needle) {
  for (const auto& it : r.items)
    if (it.subject.find(needle) != std::string::npos && it.status == Status::FLAGGED) return true;
  return false;
}

}  // namespace

int main() {
  const VerifyConfig cfg;
  std::vector<Criterion> criteria{
      {1, "published Eisenstein polynomials (type II, l = 8, 12)", 1.0,
       [] { return no_failures(check_published_eisenstein()); }},
      {2, "published zeta polynomials (type II, q = 2)", 1.0, [] { return no_failures(check_published_zeta()); }},
      {3, "closed Eisenstein forms equal the group average, l <= 40; vanishing to l <= 41", 30.0,
       [&] { return no_failures(check_closed_forms(cfg)); }},
      {4, "zeta linear = series = closed form, l <= 40, plus 50 random enumerators", 60.0,
       [&] {
         CheckReport r = check_zeta_routes(cfg);
         std::size_t randoms = 0;
         for (const auto& it : r.items) randoms += it.subject.rfind("random", 0) == 0;
         Outcome o = no_failures(r);
         o.ok = o.ok && randoms == 50;
         return o;
       }},
      {5, "RHA: root radii within 1e-9 of 1/sqrt(q), all types, l <= 40", 30.0,
       [&] { return no_failures(check_rha(cfg)); }},
      {6, "interlacing (arc containment), steps 2/8/4/2, l <= 38; type III step 3 flagged", 30.0,
       [&] {
         CheckReport r = check_interlacing(cfg);
         Outcome o = no_failures(r);
         bool vacuous = false;
         for (const auto& it : r.items)
           vacuous = vacuous || (it.status == Status::FLAGGED && it.witness.value("step", 0) == 3);
         o.ok = o.ok && vacuous;
         return o;
       }},
      {7, "p-integrality of tilde, zeta and theta images at l = 2(p-1), p in {5,7,11,13}", 120.0,
       [&] { return no_failures(check_integrality(cfg)); }},
      {8, "p = 3 discrepancies recorded as FLAGGED", 5.0,
       [] {
         CheckReport r = check_discrepancies();
         Outcome o = no_failures(r);
         for (const char* s : {"type I p=3 residue", "type IV p=3 residue", "type I p=3 l=4 zeta",
                               "type IV p=3 l=4 zeta"})
           if (!has_flagged(r, s)) {
             o.ok = false;
             o.detail += "\n      not FLAGGED: " + std::string(s);
           }
         return o;
       }},
      {9, "psi_{p-1} p-integral to 200 terms; psi_4 = 1 + 240q + 2160q^2 + ...", 10.0,
       [&] { return no_failures(check_eisenstein_series(cfg)); }},
      {10, "group closures |G_I|=16, |G_II|=192, |G_III|=48, |G_IV|=12 with exhaustive axioms", 5.0,
       [] { return no_failures(check_groups()); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string("error ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.time_limit;
    bool ok = o.ok && in_time;
    failed += !ok;
    std::printf("%s C%-2d %s [%.2fs / %.0fs] %s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, c.time_limit,
                o.detail.c_str());
    if (!in_time) std::printf("      time limit exceeded\n");
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
