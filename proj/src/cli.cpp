#include "idemfact/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "idemfact/certificate.hpp"
#include "idemfact/error.hpp"
#include "idemfact/factorization.hpp"
#include "idemfact/instances.hpp"
#include "idemfact/oracle.hpp"

namespace idemfact::cli {

  namespace {

    struct Options {
      std::string algebra;
      std::size_t n   = 0;
      std::uint32_t p = 0;
      std::size_t dim = 0;
      std::string map;
      std::string matrix;
      std::string factors;
      std::string certificate;
      std::uint64_t max_states = oracle::Budget{}.max_bfs_states;
      bool json  = false;
      bool quiet = false;
    };

    // Usage problem on the command line; maps to exit code 2.
    struct UsageError : Error {
      using Error::Error;
    };

    Algebra algebra_from(Options const& opts) {
      if (opts.algebra == "set") {
        if (opts.n == 0) {
          throw UsageError("--algebra set requires --n");
        }
        return Algebra::finite_set(opts.n);
      }
      if (opts.algebra == "vec") {
        if (opts.p == 0 || opts.dim == 0) {
          throw UsageError("--algebra vec requires --p and --dim");
        }
        return Algebra::vector_space(opts.p, opts.dim);
      }
      throw UsageError("--algebra (set | vec) is required");
    }

    std::string const& input_text(Options const& opts, Algebra const& alg) {
      if (alg.is_finite_set()) {
        if (opts.map.empty()) {
          throw UsageError("--algebra set requires --map \"<images>\"");
        }
        return opts.map;
      }
      if (opts.matrix.empty()) {
        throw UsageError("--algebra vec requires --matrix \"<rows>\"");
      }
      return opts.matrix;
    }

    std::vector<std::string> split_factors(std::string const& text) {
      std::vector<std::string> blocks;
      std::size_t begin = 0;
      while (true) {
        auto const end = text.find('|', begin);
        blocks.push_back(text.substr(begin, end - begin));
        if (end == std::string::npos) {
          break;
        }
        begin = end + 1;
      }
      return blocks;
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    std::string checks_line(FactorizationChecks const& c) {
      return "checks: product_matches=" + yes_no(c.product_matches)
             + " all_idempotent=" + yes_no(c.all_idempotent)
             + " ranks_equal=" + yes_no(c.ranks_equal)
             + " factor_bound_ok=" + yes_no(c.factor_bound_ok);
    }

    std::string failed_checks(FactorizationChecks const& c) {
      std::string out;
      auto add = [&out](bool ok, char const* name) {
        if (!ok) {
          out += out.empty() ? "" : ", ";
          out += name;
        }
      };
      add(c.product_matches, "product_matches");
      add(c.all_idempotent, "all_idempotent");
      add(c.ranks_equal, "ranks_equal");
      add(c.factor_bound_ok, "factor_bound_ok");
      return out;
    }

    void print(OutputDocument const& doc, Options const& opts, std::ostream& out) {
      if (opts.json) {
        if (opts.quiet) {
          OutputDocument slim{doc.algebra, doc.input, doc.rank};
          slim.checks = doc.checks;
          slim.oracle = doc.oracle;
          out << to_json(slim);
        } else {
          out << to_json(doc);
        }
        return;
      }
      if (!opts.quiet) {
        out << "algebra: " << doc.algebra.name() << "\n";
        out << "input:   " << doc.input << "\n";
        out << "rank:    " << doc.rank << "\n";
        if (doc.factors) {
          out << "factors (application order):\n";
          for (std::size_t i = 0; i < doc.factors->size(); ++i) {
            out << "  [" << i + 1 << "] " << (*doc.factors)[i] << "\n";
          }
        }
        if (doc.stats) {
          auto show = [](std::optional<std::size_t> const& v) {
            return v ? std::to_string(*v) : std::string("-");
          };
          out << "stats:   chain_length=" << show(doc.stats->chain_length)
              << " transposition_count="
              << show(doc.stats->transposition_count)
              << " factor_count=" << doc.stats->factor_count << "\n";
        }
      }
      if (doc.checks) {
        out << checks_line(*doc.checks) << "\n";
      }
      if (doc.oracle) {
        out << "oracle: " << oracle::to_string(*doc.oracle) << "\n";
      }
    }

    int finish_checks(FactorizationChecks const& checks, std::ostream& err) {
      if (checks.all()) {
        return success;
      }
      err << "error: certificate check failed: " << failed_checks(checks)
          << "\n";
      return check_failed;
    }

    int cmd_factorize(Options const& opts, std::ostream& out, std::ostream& err) {
      auto const alg = algebra_from(opts);
      auto const a   = parse_endo(alg, input_text(opts, alg));
      auto const report = factorize(a);
      print(document_from_report(report), opts, out);
      return finish_checks(report.checks, err);
    }

    int cmd_verify(Options const& opts,
                   std::istream&  in,
                   std::ostream&  out,
                   std::ostream&  err) {
      std::optional<OutputDocument> embedded;
      std::optional<Algebra> alg;
      std::string input;
      std::vector<std::string> blocks;
      if (!opts.certificate.empty()) {
        std::string text;
        if (opts.certificate == "-") {
          text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
          std::ifstream file(opts.certificate);
          if (!file) {
            throw UsageError("cannot read certificate '" + opts.certificate
                             + "'");
          }
          text.assign(std::istreambuf_iterator<char>(file), {});
        }
        embedded = parse_document(text);
        if (!embedded->factors) {
          throw MalformedInput(0, "certificate has no factors");
        }
        alg    = embedded->algebra;
        input  = embedded->input;
        blocks = *embedded->factors;
      } else {
        alg   = algebra_from(opts);
        input = input_text(opts, *alg);
        if (opts.factors.empty()) {
          throw UsageError("verify requires --factors or --certificate");
        }
        blocks = split_factors(opts.factors);
      }

      auto const a = parse_endo(*alg, input);
      if (!is_singular(a)) {
        throw NotSingular("input is an automorphism");
      }
      std::vector<Endomorphism> factors;
      for (auto const& block : blocks) {
        factors.push_back(parse_endo(*alg, block));
      }
      auto const checks = verify_factorization(a, factors);

      OutputDocument doc{*alg, format_endo(a), rank_endo(a)};
      doc.factors.emplace();
      for (auto const& f : factors) {
        doc.factors->push_back(format_endo(f));
      }
      doc.checks = checks;
      doc.stats  = DocumentStats{std::nullopt, std::nullopt, factors.size()};
      print(doc, opts, out);

      if (embedded && embedded->checks && !(*embedded->checks == checks)) {
        err << "error: checks recorded in the certificate disagree with the "
               "recomputed checks\n";
        return check_failed;
      }
      return finish_checks(checks, err);
    }

    int cmd_oracle(Options const& opts, std::ostream& out, std::ostream& err) {
      auto const alg = algebra_from(opts);
      auto const a   = parse_endo(alg, input_text(opts, alg));
      if (!is_singular(a)) {
        throw NotSingular("input is an automorphism");
      }
      oracle::Budget budget;
      budget.max_bfs_states = opts.max_states;
      auto const verdict    = oracle::idempotent_generated(a, budget);

      OutputDocument doc{alg, format_endo(a), rank_endo(a)};
      doc.oracle = verdict;
      print(doc, opts, out);
      switch (verdict) {
        case oracle::Verdict::reachable:
          return success;
        case oracle::Verdict::unreachable:
          err << "error: input is not a product of idempotents of its rank\n";
          return check_failed;
        case oracle::Verdict::indeterminate:
          err << "oracle: search budget exhausted\n";
          return indeterminate;
      }
      return indeterminate;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    Options opts;
    CLI::App app{"Factorize singular endomorphisms of finite-set and "
                 "GF(p)^d algebras into idempotents of the same rank",
                 "idemfact"};
    app.require_subcommand(1);
    app.add_option("--algebra", opts.algebra, "set | vec")
        ->check(CLI::IsMember({"set", "vec"}));
    app.add_option("--n", opts.n, "size of the finite set")
        ->check(CLI::PositiveNumber);
    app.add_option("--p", opts.p, "prime modulus")->check(CLI::PositiveNumber);
    app.add_option("--dim", opts.dim, "dimension of the vector space")
        ->check(CLI::PositiveNumber);
    app.add_option("--map", opts.map, "finite-set map, e.g. \"1 1 2 2\"");
    app.add_option("--matrix", opts.matrix, "matrix rows, e.g. \"0 1; 0 0\"");
    app.add_flag("--json", opts.json, "emit the certificate as JSON");
    app.add_flag("--quiet", opts.quiet, "print the checks only");

    auto* factorize_cmd = app.add_subcommand(
        "factorize", "factorize the input into idempotents");
    auto* verify_cmd = app.add_subcommand(
        "verify", "check a factor list against the input");
    verify_cmd
        ->add_option("--factors",
                     opts.factors,
                     "factors in application order, separated by '|'");
    verify_cmd->add_option("--certificate",
                           opts.certificate,
                           "JSON certificate file ('-' for stdin)");
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "decide idempotent generation by breadth-first search");
    oracle_cmd->add_option("--max-states",
                           opts.max_states,
                           "search budget (distinct products)");
    for (auto* sub : {factorize_cmd, verify_cmd, oracle_cmd}) {
      sub->fallthrough();
    }

    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? success : malformed_input;
    }

    try {
      if (*factorize_cmd) {
        return cmd_factorize(opts, out, err);
      }
      if (*verify_cmd) {
        return cmd_verify(opts, in, out, err);
      }
      return cmd_oracle(opts, out, err);
    } catch (NotSingular const& e) {
      err << "error: " << e.what() << "\n";
      return not_singular;
    } catch (InvariantViolation const& e) {
      err << "error: internal invariant violated in stage '" << e.stage()
          << "': " << e.what() << "\n";
      return check_failed;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return malformed_input;
    } catch (MalformedInput const& e) {
      err << "error: " << e.what() << "\n";
      return malformed_input;
    } catch (InvalidAlgebra const& e) {
      err << "error: " << e.what() << "\n";
      return malformed_input;
    } catch (InvalidElement const& e) {
      err << "error: " << e.what() << "\n";
      return malformed_input;
    } catch (AlgebraMismatch const& e) {
      err << "error: " << e.what() << "\n";
      return malformed_input;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return check_failed;
    }
  }

}  // namespace idemfact::cli
