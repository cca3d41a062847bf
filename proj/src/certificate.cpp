#include "idemfact/certificate.hpp"

#include <json.hpp>

#include "idemfact/error.hpp"
#include "idemfact/instances.hpp"

namespace idemfact::cli {

  using json = nlohmann::ordered_json;

  namespace {

    json algebra_json(Algebra const& alg) {
      json j;
      if (alg.is_finite_set()) {
        j["kind"] = "set";
        j["n"]    = alg.rank();
      } else {
        j["kind"] = "vec";
        j["p"]    = alg.modulus();
        j["dim"]  = alg.rank();
      }
      return j;
    }

    Algebra algebra_from_json(json const& j) {
      auto const kind = j.at("kind").get<std::string>();
      if (kind == "set") {
        return Algebra::finite_set(j.at("n").get<std::size_t>());
      }
      if (kind == "vec") {
        return Algebra::vector_space(j.at("p").get<std::uint32_t>(),
                                     j.at("dim").get<std::size_t>());
      }
      throw MalformedInput(0, "unknown algebra kind '" + kind + "'");
    }

    json optional_size(std::optional<std::size_t> const& v) {
      return v ? json(*v) : json(nullptr);
    }

  }  // namespace

  OutputDocument document_from_report(FactorizationReport const& report) {
    OutputDocument doc{report.input.algebra(),
                       format_endo(report.input),
                       report.rank,
                       std::vector<std::string>{},
                       report.checks,
                       DocumentStats{report.chain_length,
                                     report.transposition_count,
                                     report.factors.size()},
                       std::nullopt};
    for (auto const& f : report.factors) {
      doc.factors->push_back(format_endo(f));
    }
    return doc;
  }

  std::string to_json(OutputDocument const& doc) {
    json j;
    j["algebra"] = algebra_json(doc.algebra);
    j["input"]   = doc.input;
    j["rank"]    = doc.rank;
    if (doc.factors) {
      j["factors"] = *doc.factors;
    }
    if (doc.checks) {
      j["checks"] = json{{"product_matches", doc.checks->product_matches},
                         {"all_idempotent", doc.checks->all_idempotent},
                         {"ranks_equal", doc.checks->ranks_equal},
                         {"factor_bound_ok", doc.checks->factor_bound_ok}};
    }
    if (doc.stats) {
      j["stats"]
          = json{{"chain_length", optional_size(doc.stats->chain_length)},
                 {"transposition_count",
                  optional_size(doc.stats->transposition_count)},
                 {"factor_count", doc.stats->factor_count}};
    }
    if (doc.oracle) {
      json reachable;
      switch (*doc.oracle) {
        case oracle::Verdict::reachable:
          reachable = true;
          break;
        case oracle::Verdict::unreachable:
          reachable = false;
          break;
        case oracle::Verdict::indeterminate:
          reachable = "indeterminate";
          break;
      }
      j["oracle"] = json{{"reachable", reachable}};
    }
    return j.dump(2) + "\n";
  }

  OutputDocument parse_document(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw MalformedInput(e.byte, "certificate is not valid JSON");
    }
    try {
      OutputDocument doc{algebra_from_json(j.at("algebra")),
                         j.at("input").get<std::string>(),
                         j.at("rank").get<std::size_t>()};
      if (j.contains("factors")) {
        doc.factors = j["factors"].get<std::vector<std::string>>();
      }
      if (j.contains("checks")) {
        auto const& c = j["checks"];
        doc.checks    = FactorizationChecks{
            c.at("product_matches").get<bool>(),
            c.at("all_idempotent").get<bool>(),
            c.at("ranks_equal").get<bool>(),
            c.at("factor_bound_ok").get<bool>()};
      }
      if (j.contains("stats")) {
        auto const& s = j["stats"];
        auto opt      = [&s](char const* key) -> std::optional<std::size_t> {
          if (s.at(key).is_null()) {
            return std::nullopt;
          }
          return s.at(key).get<std::size_t>();
        };
        doc.stats = DocumentStats{opt("chain_length"),
                                  opt("transposition_count"),
                                  s.at("factor_count").get<std::size_t>()};
      }
      if (j.contains("oracle")) {
        auto const& r = j["oracle"].at("reachable");
        if (r.is_boolean()) {
          doc.oracle = r.get<bool>() ? oracle::Verdict::reachable
                                     : oracle::Verdict::unreachable;
        } else {
          doc.oracle = oracle::Verdict::indeterminate;
        }
      }
      return doc;
    } catch (json::exception const& e) {
      throw MalformedInput(0, std::string("bad certificate: ") + e.what());
    } catch (InvalidAlgebra const& e) {
      throw MalformedInput(0, e.what());
    }
  }

}  // namespace idemfact::cli
