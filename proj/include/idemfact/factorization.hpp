#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "idemfact/algebra.hpp"
#include "idemfact/endomorphism.hpp"

// Factorization of a singular endomorphism a of rank l into idempotents of
// rank l. The pipeline is
//
//   a = e . a|<E>                      retraction e onto <E>, a injective on E
//     = e . h . phi                    h: exchange idempotents carrying E to Ea
//                                      phi: permutation of Ea induced by a
//     = e . h . g_1 ... g_3t           each transposition of phi realized by
//                                      three idempotents through a free point
//
// and every partial idempotent is finally extended to a total one with the
// same image. All choices are the canonically smallest candidate, so the
// output is reproducible byte for byte.

namespace idemfact {

  namespace stage {
    inline constexpr char const* retraction    = "retraction";
    inline constexpr char const* basis_chain   = "basis-chain";
    inline constexpr char const* exchange      = "exchange";
    inline constexpr char const* permutation   = "induced-permutation";
    inline constexpr char const* transposition = "transposition-gadget";
    inline constexpr char const* totalization  = "totalization";
    inline constexpr char const* assembly      = "assembly";
  }  // namespace stage

  //! Output of the first step: an idempotent e with e a = a, rank(e) =
  //! rank(a) and image <E>, where a is injective on <E>.
  struct Retraction {
    Endomorphism idempotent;
    ElementSet basis;
  };

  //! E = E_1, E_2, ..., E_n = Ea with consecutive sets differing in at most
  //! one element.
  struct BasisChain {
    std::vector<ElementSet> sets;

    [[nodiscard]] std::size_t steps() const noexcept {
      return sets.empty() ? 0 : sets.size() - 1;
    }
  };

  //! A bijection of a finite carrier set.
  class Permutation {
   public:
    //! images[i] is the image of carrier[i]. Throws PreconditionViolation
    //! unless this is a bijection of the carrier.
    Permutation(ElementSet carrier, std::vector<ElementId> images);

    static Permutation identity(ElementSet carrier);

    [[nodiscard]] ElementSet const& carrier() const noexcept {
      return _carrier;
    }
    [[nodiscard]] std::vector<ElementId> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] ElementId apply(ElementId x) const;
    [[nodiscard]] bool is_identity() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    ElementSet _carrier;
    std::vector<ElementId> _images;
  };

  struct Transposition {
    ElementId first;
    ElementId second;

    friend bool operator==(Transposition, Transposition) = default;
  };

  struct FactorizationChecks {
    bool product_matches = false;
    bool all_idempotent  = false;
    bool ranks_equal     = false;
    bool factor_bound_ok = false;

    [[nodiscard]] bool all() const noexcept {
      return product_matches && all_idempotent && ranks_equal
             && factor_bound_ok;
    }
    friend bool operator==(FactorizationChecks const&,
                           FactorizationChecks const&) = default;
  };

  //! Intermediate values of a pipeline run (absent for the zero map).
  struct FactorizationTrace {
    Retraction retraction;
    ElementSet image_set;  // Ea
    BasisChain chain;
    std::vector<PartialEndomorphism> exchange_factors;
    Permutation permutation;
    std::vector<Transposition> transpositions;
    std::vector<PartialEndomorphism> gadget_factors;
  };

  struct FactorizationReport {
    Endomorphism input;
    std::size_t rank;
    //! In application order: input == product(factors).
    std::vector<Endomorphism> factors;
    //! Number of sets in the basis chain.
    std::size_t chain_length;
    std::size_t transposition_count;
    FactorizationChecks checks;
    std::optional<FactorizationTrace> trace;
  };

  //! Upper bound max(1, 5 l) on the number of factors.
  [[nodiscard]] constexpr std::size_t factor_bound(std::size_t rank) noexcept {
    return rank == 0 ? 1 : 5 * rank;
  }

  [[nodiscard]] Retraction initial_idempotent(Endomorphism const& a);

  [[nodiscard]] BasisChain basis_chain(Algebra const&    alg,
                                       ElementSet const& from,
                                       ElementSet const& to);

  //! One or two partial idempotents whose composite carries `from` onto
  //! `to`, two sets of equal size differing in exactly one element.
  [[nodiscard]] std::vector<PartialEndomorphism>
  exchange_idempotents(Algebra const&    alg,
                       ElementSet const& from,
                       ElementSet const& to);

  //! The permutation f of Ea with (x h) f = x a for x in E, where h is the
  //! composite of chain_factors.
  [[nodiscard]] Permutation
  induced_permutation(ElementSet const&                       basis,
                      std::vector<PartialEndomorphism> const& chain_factors,
                      Endomorphism const&                     a);

  //! Transpositions whose left-to-right product is f.
  [[nodiscard]] std::vector<Transposition>
  perm_to_transpositions(Permutation const& f);

  //! Three partial idempotents on <carrier + z>, z the smallest element
  //! outside <carrier>, whose composite restricted to carrier swaps x and y.
  [[nodiscard]] std::vector<PartialEndomorphism>
  transposition_idempotents(Algebra const&    alg,
                            ElementSet const& carrier,
                            ElementId         x,
                            ElementId         y);

  //! Total idempotent agreeing with pe on its domain and with the same image.
  [[nodiscard]] Endomorphism totalize(PartialEndomorphism const& pe);

  //! Throws NotSingular for automorphisms, InvariantViolation on a failed
  //! internal check.
  [[nodiscard]] FactorizationReport factorize(Endomorphism const& a);

  //! Recomputes the certificate checks from scratch.
  [[nodiscard]] FactorizationChecks
  verify_factorization(Endomorphism const&              a,
                       std::vector<Endomorphism> const& factors);

}  // namespace idemfact
