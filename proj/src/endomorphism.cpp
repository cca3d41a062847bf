#include "idemfact/endomorphism.hpp"

#include <algorithm>

#include "idemfact/error.hpp"

namespace idemfact {

  Endomorphism::Endomorphism(Algebra alg, std::vector<ElementId> basis_images)
      : _alg(std::move(alg)), _images(std::move(basis_images)) {
    if (_images.size() != _alg.rank()) {
      throw PreconditionViolation("endomorphism of " + _alg.name() + " needs "
                                  + std::to_string(_alg.rank())
                                  + " basis images, got "
                                  + std::to_string(_images.size()));
    }
    for (auto x : _images) {
      _alg.check(x);
    }
  }

  Endomorphism Endomorphism::identity(Algebra const& alg) {
    return Endomorphism(alg, alg.canonical_basis().elements());
  }

  Endomorphism
  Endomorphism::from_table(Algebra const&                    alg,
                           std::vector<std::uint32_t> const& table) {
    if (!alg.is_finite_set()) {
      throw AlgebraMismatch("from_table requires a finite-set algebra");
    }
    std::vector<ElementId> images;
    images.reserve(table.size());
    for (auto c : table) {
      images.push_back(ElementId{c});
    }
    return Endomorphism(alg, std::move(images));
  }

  Endomorphism Endomorphism::from_matrix(
      Algebra const&                                 alg,
      std::vector<std::vector<std::uint32_t>> const& rows) {
    if (!alg.is_vector_space()) {
      throw AlgebraMismatch("from_matrix requires a vector-space algebra");
    }
    std::vector<ElementId> images;
    images.reserve(rows.size());
    for (auto const& row : rows) {
      images.push_back(alg.from_coordinates(row));
    }
    return Endomorphism(alg, std::move(images));
  }

  ElementId Endomorphism::apply(ElementId x) const {
    _alg.check(x);
    if (_alg.is_finite_set()) {
      return _images[x.code];
    }
    std::uint32_t const p = _alg.modulus();
    auto const coords     = _alg.coordinates(x);
    std::vector<std::uint32_t> acc(_alg.rank(), 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0) {
        continue;
      }
      auto const row = _alg.coordinates(_images[i]);
      for (std::size_t j = 0; j < acc.size(); ++j) {
        acc[j] = (acc[j] + coords[i] * row[j]) % p;
      }
    }
    return _alg.from_coordinates(acc);
  }

  std::vector<std::uint32_t> Endomorphism::table() const {
    std::vector<std::uint32_t> result;
    result.reserve(_images.size());
    for (auto x : _images) {
      result.push_back(x.code);
    }
    return result;
  }

  std::vector<std::vector<std::uint32_t>> Endomorphism::matrix() const {
    if (!_alg.is_vector_space()) {
      throw AlgebraMismatch("matrix() requires a vector-space algebra");
    }
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(_images.size());
    for (auto x : _images) {
      rows.push_back(_alg.coordinates(x));
    }
    return rows;
  }

  Endomorphism compose(Endomorphism const& first, Endomorphism const& second) {
    if (!(first.algebra() == second.algebra())) {
      throw AlgebraMismatch("compose: " + first.algebra().name() + " vs "
                            + second.algebra().name());
    }
    std::vector<ElementId> images;
    images.reserve(first.basis_images().size());
    for (auto x : first.basis_images()) {
      images.push_back(second.apply(x));
    }
    return Endomorphism(first.algebra(), std::move(images));
  }

  Endomorphism product(std::vector<Endomorphism> const& factors) {
    if (factors.empty()) {
      throw PreconditionViolation("product of an empty factor list");
    }
    Endomorphism result = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
      result = compose(result, factors[i]);
    }
    return result;
  }

  bool is_idempotent(Endomorphism const& a) {
    return compose(a, a) == a;
  }

  ElementSet image_basis(Endomorphism const& a) {
    Span span(a.algebra());
    for (auto x : a.basis_images()) {
      span.insert(x);
    }
    if (a.algebra().is_finite_set()) {
      return span.generators().sorted();
    }
    return span.generators();
  }

  std::size_t rank_endo(Endomorphism const& a) {
    return image_basis(a).size();
  }

  ElementSet map_set(Endomorphism const& a, ElementSet const& s) {
    std::vector<ElementId> out;
    for (auto x : s) {
      auto y = a.apply(x);
      if (std::find(out.begin(), out.end(), y) == out.end()) {
        out.push_back(y);
      }
    }
    return ElementSet(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialEndomorphism
  ////////////////////////////////////////////////////////////////////////

  PartialEndomorphism::PartialEndomorphism(Algebra                alg,
                                           ElementSet             domain_basis,
                                           std::vector<ElementId> images)
      : _domain(alg), _images(std::move(images)) {
    alg.check(domain_basis);
    if (domain_basis.size() != _images.size()) {
      throw PreconditionViolation(
          "partial endomorphism: " + std::to_string(domain_basis.size())
          + " domain elements but " + std::to_string(_images.size())
          + " images");
    }
    for (auto x : domain_basis) {
      if (!_domain.insert(x)) {
        throw PreconditionViolation(
            "partial endomorphism: domain basis is not independent");
      }
    }
    for (auto y : _images) {
      alg.check(y);
    }
  }

  bool PartialEndomorphism::in_domain(ElementId x) const {
    return _domain.contains(x);
  }

  ElementId PartialEndomorphism::apply(ElementId x) const {
    auto terms = _domain.expand(x);
    if (!terms) {
      throw DomainError("element " + std::to_string(x.code)
                        + " is outside the domain of the partial map");
    }
    return combine(algebra(), *terms, _images);
  }

  ElementSet PartialEndomorphism::image_basis() const {
    Span span(algebra());
    for (auto y : _images) {
      span.insert(y);
    }
    if (algebra().is_finite_set()) {
      return span.generators().sorted();
    }
    return span.generators();
  }

  std::size_t PartialEndomorphism::rank() const {
    return image_basis().size();
  }

  bool PartialEndomorphism::is_idempotent() const {
    return std::all_of(_images.begin(), _images.end(), [this](ElementId y) {
      return in_domain(y) && apply(y) == y;
    });
  }

  bool PartialEndomorphism::image_within_domain_of(
      PartialEndomorphism const& other) const {
    return std::all_of(_images.begin(),
                       _images.end(),
                       [&other](ElementId y) { return other.in_domain(y); });
  }

  ElementId apply_partial(PartialEndomorphism const& pe, ElementId x) {
    return pe.apply(x);
  }

}  // namespace idemfact
