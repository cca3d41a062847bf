// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "idemfact/certificate.hpp"
#include "idemfact/factorization.hpp"
#include "idemfact/instances.hpp"
#include "idemfact/oracle.hpp"
#include "support.hpp"

using namespace idemfact;

namespace {

  struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string const& why) {
      if (ok) {
        detail = why;
      }
      ok = false;
    }
  };

  // Partial idempotents checked against their totalizations (criterion 7).
  struct TotalizationTally {
    std::size_t checked = 0;
    Outcome outcome;
  };

  bool certificate_ok(FactorizationReport const& report) {
    auto const l = rank_endo(report.input);
    auto const c = verify_factorization(report.input, report.factors);
    return c.product_matches && c.all_idempotent && c.ranks_equal
           && c.factor_bound_ok && report.factors.size() <= factor_bound(l)
           && c == report.checks;
  }

  void check_totalizations(FactorizationReport const& report,
                           TotalizationTally&         tally) {
    if (!report.trace) {
      return;
    }
    auto const& alg = report.input.algebra();
    auto check      = [&](PartialEndomorphism const& pe) {
      auto const total = totalize(pe);
      ++tally.checked;
      if (!is_idempotent(total)) {
        tally.outcome.fail("totalized map not idempotent");
      }
      for (std::size_t j = 0; j < pe.domain_basis().size(); ++j) {
        if (total.apply(pe.domain_basis()[j]) != pe.images()[j]) {
          tally.outcome.fail("totalized map does not restrict to the partial");
        }
      }
      if (!same_closure(alg, image_basis(total), pe.image_basis())) {
        tally.outcome.fail("totalized map changed the image");
      }
    };
    for (auto const& pe : report.trace->exchange_factors) {
      check(pe);
    }
    for (auto const& pe : report.trace->gadget_factors) {
      check(pe);
    }
  }

  // Factorizes every map, checking the certificate and totalizations.
  Outcome run_suite(std::vector<Endomorphism> const& maps,
                    TotalizationTally&               tally,
                    std::string*                     documents = nullptr) {
    Outcome outcome;
    for (auto const& a : maps) {
      try {
        auto const report = factorize(a);
        if (!certificate_ok(report)) {
          outcome.fail("certificate check failed for " + a.algebra().name()
                       + " [" + format_endo(a) + "]");
        }
        check_totalizations(report, tally);
        if (documents != nullptr) {
          *documents += cli::to_json(cli::document_from_report(report));
        }
      } catch (std::exception const& e) {
        outcome.fail(a.algebra().name() + " [" + format_endo(a)
                     + "]: " + e.what());
      }
    }
    return outcome;
  }

  std::vector<Endomorphism> all_singular(Algebra const& alg) {
    std::vector<Endomorphism> out;
    for (auto const& a : enumerate_endomorphisms(alg, true)) {
      out.push_back(a);
    }
    return out;
  }

  std::vector<Endomorphism> exhaustive_transformations() {
    std::vector<Endomorphism> maps;
    for (std::size_t n = 2; n <= 4; ++n) {
      auto more = all_singular(Algebra::finite_set(n));
      maps.insert(maps.end(), more.begin(), more.end());
    }
    return maps;
  }

  int failures = 0;

  void report_line(int                          id,
                   char const*                  name,
                   double                       limit_seconds,
                   std::function<Outcome()> const& body) {
    auto const start   = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (std::exception const& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (limit_seconds > 0 && seconds > limit_seconds) {
      outcome.fail("took " + std::to_string(seconds) + " s, limit "
                   + std::to_string(limit_seconds) + " s");
    }
    if (!outcome.ok) {
      ++failures;
    }
    std::printf("[%s] %d. %s (%.2f s)%s%s\n",
                outcome.ok ? "PASS" : "FAIL",
                id,
                name,
                seconds,
                outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }

}  // namespace

int main() {
  TotalizationTally tally;
  std::string first_run;

  report_line(1, "exhaustive transformation suite T_2, T_3, T_4", 5.0, [&] {
    auto const maps = exhaustive_transformations();
    Outcome outcome;
    if (maps.size() != 2 + 21 + 232) {
      outcome.fail("expected 255 singular maps, enumerated "
                   + std::to_string(maps.size()));
    }
    auto const suite = run_suite(maps, tally, &first_run);
    if (!suite.ok) {
      outcome.fail(suite.detail);
    }
    outcome.detail = outcome.ok ? std::to_string(maps.size()) + " maps"
                                : outcome.detail;
    return outcome;
  });

  report_line(2, "1000 random singular transformations of T_6", 10.0, [&] {
    std::mt19937_64 rng(0x5eed2026);
    auto const alg = Algebra::finite_set(6);
    std::vector<Endomorphism> maps;
    for (int i = 0; i < 1000; ++i) {
      maps.push_back(test::random_singular(alg, rng));
    }
    return run_suite(maps, tally);
  });

  report_line(3, "exhaustive matrix suite GF(2)^2, GF(2)^3, GF(3)^2", 30.0, [&] {
    Outcome outcome;
    std::vector<std::pair<Algebra, std::size_t>> const suites{
        {Algebra::vector_space(2, 2), 10},
        {Algebra::vector_space(2, 3), 344},
        {Algebra::vector_space(3, 2), 33}};
    for (auto const& [alg, expected] : suites) {
      auto const maps = all_singular(alg);
      if (maps.size() != expected) {
        outcome.fail(alg.name() + ": expected " + std::to_string(expected)
                     + " singular maps, got " + std::to_string(maps.size()));
      }
      auto const suite = run_suite(maps, tally);
      if (!suite.ok) {
        outcome.fail(suite.detail);
      }
    }
    return outcome;
  });

  report_line(4, "oracle concordance on T_3 and GF(2)^2", 30.0, [] {
    Outcome outcome;
    for (auto const& alg :
         {Algebra::finite_set(3), Algebra::vector_space(2, 2)}) {
      for (auto const& a : all_singular(alg)) {
        auto const verdict = oracle::idempotent_generated(a);
        if (verdict != oracle::Verdict::reachable) {
          outcome.fail(alg.name() + " [" + format_endo(a) + "] "
                       + oracle::to_string(verdict));
        }
      }
    }
    return outcome;
  });

  report_line(5, "greedy basis chain vs shortest chain", 60.0, [] {
    Outcome outcome;
    std::size_t pairs       = 0;
    std::size_t non_minimal = 0;
    auto check_algebra = [&](Algebra const& alg, std::size_t max_l) {
      auto const universe = static_cast<std::uint32_t>(alg.universe_size());
      std::vector<ElementSet> sets;
      test::for_each_subset(universe, max_l, [&](ElementSet const& s) {
        if (!s.empty() && s.size() < alg.rank() && is_independent(alg, s)) {
          sets.push_back(s);
        }
      });
      for (auto const& from : sets) {
        for (auto const& to : sets) {
          if (from.size() != to.size()) {
            continue;
          }
          ++pairs;
          std::size_t const l = from.size();
          auto const chain    = basis_chain(alg, from, to);
          auto const& cs      = chain.sets;
          bool valid = cs.front() == from && cs.back().same_members(to);
          for (std::size_t i = 0; valid && i < cs.size(); ++i) {
            valid = cs[i].size() == l && is_independent(alg, cs[i]);
            if (valid && i + 1 < cs.size()) {
              valid = cs[i].difference(cs[i + 1]).size() <= 1
                      && cs[i + 1].intersection(to).size()
                             == cs[i].intersection(to).size() + 1;
            }
          }
          auto const shortest = oracle::shortest_chain_length(alg, from, to);
          non_minimal += chain.steps() > shortest ? 1 : 0;
          if (!valid || chain.steps() < shortest || chain.steps() > l) {
            outcome.fail(alg.name() + ": bad chain, greedy "
                         + std::to_string(chain.steps()) + " shortest "
                         + std::to_string(shortest));
          }
        }
      }
    };
    for (std::size_t n = 2; n <= 5; ++n) {
      check_algebra(Algebra::finite_set(n), 3);
    }
    check_algebra(Algebra::vector_space(2, 3), 2);
    if (outcome.ok) {
      outcome.detail = std::to_string(pairs) + " pairs, "
                       + std::to_string(non_minimal) + " greedy chains longer than shortest";
    }
    return outcome;
  });

  report_line(6, "transposition decomposition and three-idempotent gadget", 5.0, [] {
    Outcome outcome;
    for (std::uint32_t k = 1; k <= 5; ++k) {
      std::vector<std::uint32_t> images(k);
      std::iota(images.begin(), images.end(), 0);
      auto const carrier = test::set_of(images);
      do {
        Permutation const f(carrier, test::set_of(images).elements());
        auto const ts = perm_to_transpositions(f);
        for (auto x : carrier) {
          ElementId u = x;
          for (auto const& t : ts) {
            u = u == t.first ? t.second : (u == t.second ? t.first : u);
          }
          if (u != f.apply(x)) {
            outcome.fail("Sym(" + std::to_string(k) + ") recomposition");
          }
        }
      } while (std::next_permutation(images.begin(), images.end()));
    }
    auto const T5 = Algebra::finite_set(5);
    test::for_each_subset(5, 4, [&](ElementSet const& carrier) {
      if (carrier.size() < 2) {
        return;
      }
      for (auto x : carrier) {
        for (auto y : carrier) {
          if (x == y) {
            continue;
          }
          auto const gadget = transposition_idempotents(T5, carrier, x, y);
          for (auto const& pe : gadget) {
            if (!pe.is_idempotent()) {
              outcome.fail("gadget factor not idempotent");
            }
          }
          for (auto b : carrier) {
            ElementId u = b;
            for (auto const& pe : gadget) {
              u = pe.apply(u);
            }
            if (u != (b == x ? y : (b == y ? x : b))) {
              outcome.fail("gadget composite is not the transposition");
            }
          }
        }
      }
    });
    return outcome;
  });

  report_line(7, "totalization of every emitted partial idempotent", 0, [&] {
    Outcome outcome = tally.outcome;
    if (tally.checked == 0) {
      outcome.fail("no partial idempotents were checked");
    }
    if (outcome.ok) {
      outcome.detail = std::to_string(tally.checked) + " partials";
    }
    return outcome;
  });

  report_line(8, "determinism of structured output", 0, [&] {
    Outcome outcome;
    TotalizationTally scratch;
    std::string second_run;
    run_suite(exhaustive_transformations(), scratch, &second_run);
    if (first_run.empty() || first_run != second_run) {
      outcome.fail("structured outputs differ between runs");
    }
    return outcome;
  });

  std::printf("%s: %d criteria failed\n",
              failures == 0 ? "ACCEPTED" : "REJECTED",
              failures);
  return failures == 0 ? 0 : 1;
}
