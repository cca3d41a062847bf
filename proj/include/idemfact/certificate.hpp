#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idemfact/algebra.hpp"
#include "idemfact/factorization.hpp"
#include "idemfact/oracle.hpp"

namespace idemfact::cli {

  struct DocumentStats {
    std::optional<std::size_t> chain_length;
    std::optional<std::size_t> transposition_count;
    std::size_t factor_count = 0;

    friend bool operator==(DocumentStats const&, DocumentStats const&)
        = default;
  };

  //! The self-contained certificate written by `--json`.
  //!
  //! Schema, keys in this order; absent members are omitted:
  //!   algebra  {"kind": "set", "n": N} | {"kind": "vec", "p": P, "dim": D}
  //!   input    endomorphism text
  //!   rank     integer
  //!   factors  [endomorphism text, ...] in application order
  //!   checks   {"product_matches", "all_idempotent", "ranks_equal",
  //!             "factor_bound_ok"} booleans
  //!   stats    {"chain_length", "transposition_count", "factor_count"},
  //!            the first two null when the factors were not produced here
  //!   oracle   {"reachable": true | false | "indeterminate"}
  struct OutputDocument {
    Algebra algebra;
    std::string input;
    std::size_t rank = 0;
    std::optional<std::vector<std::string>> factors{};
    std::optional<FactorizationChecks> checks{};
    std::optional<DocumentStats> stats{};
    std::optional<oracle::Verdict> oracle{};
  };

  [[nodiscard]] OutputDocument document_from_report(
      FactorizationReport const& report);

  //! Pretty-printed JSON, two-space indent, trailing newline.
  [[nodiscard]] std::string to_json(OutputDocument const& doc);

  //! Throws MalformedInput on anything that is not a certificate.
  [[nodiscard]] OutputDocument parse_document(std::string_view text);

}  // namespace idemfact::cli
