#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idemfact/algebra.hpp"
#include "idemfact/endomorphism.hpp"

// Brute-force cross checks. Nothing here goes through the factorization
// pipeline: reachability is decided by breadth-first search over products of
// idempotents, chain lengths by search over all independent l-sets, spans by
// exhaustive enumeration of linear combinations.

namespace idemfact::oracle {

  struct Budget {
    std::uint64_t max_universe   = std::uint64_t{1} << 12;
    std::uint64_t max_endos      = std::uint64_t{1} << 24;
    std::uint64_t max_bfs_states = std::uint64_t{1} << 22;
  };

  enum class Verdict { reachable, unreachable, indeterminate };

  [[nodiscard]] char const* to_string(Verdict v) noexcept;

  //! All idempotents of rank exactly r. Throws BudgetExceeded.
  [[nodiscard]] std::vector<Endomorphism>
  enumerate_idempotents(Algebra const& alg,
                        std::size_t    r,
                        Budget const&  budget = {});

  //! Whether a is a product of singular idempotents of rank rank(a).
  //! Automorphisms are reported unreachable; running out of budget gives
  //! indeterminate, never unreachable.
  [[nodiscard]] Verdict idempotent_generated(Endomorphism const& a,
                                             Budget const& budget = {});

  //! Least n with (from, to) in rho^n, by search over independent sets of
  //! size |from|. Throws BudgetExceeded.
  [[nodiscard]] std::size_t shortest_chain_length(Algebra const&    alg,
                                                  ElementSet const& from,
                                                  ElementSet const& to,
                                                  Budget const& budget = {});

  //! <s> for a vector space, by closing {0} under adding members of s.
  //! Result in ascending code order.
  [[nodiscard]] ElementSet span_enumeration_check(Algebra const&    alg,
                                                  ElementSet const& s,
                                                  Budget const& budget = {});

}  // namespace idemfact::oracle
