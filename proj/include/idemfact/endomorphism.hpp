#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idemfact/algebra.hpp"

namespace idemfact {

  //! A total endomorphism, stored as the images of the canonical basis.
  //!
  //! For a finite set this is the full image table. For GF(p)^d entry i is
  //! row i of the matrix M with x -> xM, so applying a list of maps left to
  //! right is the same as multiplying their matrices in list order.
  class Endomorphism {
   public:
    Endomorphism(Algebra alg, std::vector<ElementId> basis_images);

    static Endomorphism identity(Algebra const& alg);
    static Endomorphism from_table(Algebra const&                    alg,
                                   std::vector<std::uint32_t> const& table);
    static Endomorphism
    from_matrix(Algebra const&                                 alg,
                std::vector<std::vector<std::uint32_t>> const& rows);

    [[nodiscard]] Algebra const& algebra() const noexcept {
      return _alg;
    }
    [[nodiscard]] std::vector<ElementId> const& basis_images() const noexcept {
      return _images;
    }

    [[nodiscard]] ElementId apply(ElementId x) const;

    //! Image table over the canonical basis as raw codes.
    [[nodiscard]] std::vector<std::uint32_t> table() const;
    //! Coefficient rows (vector-space kind).
    [[nodiscard]] std::vector<std::vector<std::uint32_t>> matrix() const;

    friend bool operator==(Endomorphism const&, Endomorphism const&) = default;

   private:
    Algebra _alg;
    std::vector<ElementId> _images;
  };

  //! x -> (x first) second.
  [[nodiscard]] Endomorphism compose(Endomorphism const& first,
                                     Endomorphism const& second);
  //! Left-to-right product of a nonempty list.
  [[nodiscard]] Endomorphism product(std::vector<Endomorphism> const& factors);

  [[nodiscard]] bool is_idempotent(Endomorphism const& a);
  [[nodiscard]] std::size_t rank_endo(Endomorphism const& a);

  //! Independent spanning set of the image. Finite sets: the image points in
  //! ascending order. Vector spaces: images of the canonical basis vectors,
  //! scanned in order, keeping those outside the span of the ones kept.
  [[nodiscard]] ElementSet image_basis(Endomorphism const& a);

  //! Set-image {x a : x in s}, in the order of s (duplicates dropped).
  [[nodiscard]] ElementSet map_set(Endomorphism const& a, ElementSet const& s);

  //! A structure-preserving map defined on <B0>, given by the images of the
  //! independent set B0.
  class PartialEndomorphism {
   public:
    PartialEndomorphism(Algebra                alg,
                        ElementSet             domain_basis,
                        std::vector<ElementId> images);

    [[nodiscard]] Algebra const& algebra() const noexcept {
      return _domain.algebra();
    }
    [[nodiscard]] ElementSet const& domain_basis() const noexcept {
      return _domain.generators();
    }
    [[nodiscard]] std::vector<ElementId> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] bool in_domain(ElementId x) const;
    //! Throws DomainError for x outside <B0>.
    [[nodiscard]] ElementId apply(ElementId x) const;

    [[nodiscard]] ElementSet image_basis() const;
    [[nodiscard]] std::size_t rank() const;

    //! True iff the image lies in the domain and is fixed pointwise.
    [[nodiscard]] bool is_idempotent() const;

    //! Whether <image> is contained in the domain of other.
    [[nodiscard]] bool image_within_domain_of(
        PartialEndomorphism const& other) const;

   private:
    Span _domain;
    std::vector<ElementId> _images;
  };

  [[nodiscard]] ElementId apply_partial(PartialEndomorphism const& pe,
                                        ElementId                  x);

}  // namespace idemfact
