#include "idemfact/algebra.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "field.hpp"
#include "idemfact/error.hpp"

namespace idemfact {

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  ElementSet::ElementSet(std::initializer_list<ElementId> elements)
      : ElementSet(std::vector<ElementId>(elements)) {}

  ElementSet::ElementSet(std::vector<ElementId> elements)
      : _elements(std::move(elements)) {
    std::unordered_set<std::uint32_t> seen;
    for (auto x : _elements) {
      if (!seen.insert(x.code).second) {
        throw PreconditionViolation("ElementSet: duplicate element "
                                    + std::to_string(x.code));
      }
    }
  }

  ElementSet ElementSet::from_codes(std::initializer_list<std::uint32_t> codes) {
    std::vector<ElementId> elements;
    elements.reserve(codes.size());
    for (auto c : codes) {
      elements.push_back(ElementId{c});
    }
    return ElementSet(std::move(elements));
  }

  bool ElementSet::contains(ElementId x) const {
    return std::find(_elements.begin(), _elements.end(), x) != _elements.end();
  }

  std::optional<std::size_t> ElementSet::index_of(ElementId x) const {
    auto it = std::find(_elements.begin(), _elements.end(), x);
    if (it == _elements.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  ElementSet ElementSet::sorted() const {
    ElementSet result = *this;
    std::sort(result._elements.begin(), result._elements.end());
    return result;
  }

  bool ElementSet::same_members(ElementSet const& other) const {
    return size() == other.size() && sorted() == other.sorted();
  }

  ElementSet ElementSet::with(ElementId x) const {
    if (contains(x)) {
      throw PreconditionViolation("ElementSet::with: element "
                                  + std::to_string(x.code)
                                  + " already present");
    }
    ElementSet result = *this;
    result._elements.push_back(x);
    return result;
  }

  ElementSet ElementSet::without(ElementId x) const {
    ElementSet result;
    for (auto y : _elements) {
      if (y != x) {
        result._elements.push_back(y);
      }
    }
    return result;
  }

  ElementSet ElementSet::replaced(ElementId old, ElementId replacement) const {
    if (old != replacement && contains(replacement)) {
      throw PreconditionViolation("ElementSet::replaced: element "
                                  + std::to_string(replacement.code)
                                  + " already present");
    }
    ElementSet result = *this;
    std::replace(result._elements.begin(), result._elements.end(), old, replacement);
    return result;
  }

  ElementSet ElementSet::intersection(ElementSet const& other) const {
    ElementSet result;
    for (auto x : _elements) {
      if (other.contains(x)) {
        result._elements.push_back(x);
      }
    }
    return result;
  }

  ElementSet ElementSet::difference(ElementSet const& other) const {
    ElementSet result;
    for (auto x : _elements) {
      if (!other.contains(x)) {
        result._elements.push_back(x);
      }
    }
    return result;
  }

  ElementSet ElementSet::united(ElementSet const& other) const {
    ElementSet result = *this;
    for (auto x : other._elements) {
      if (!contains(x)) {
        result._elements.push_back(x);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  Algebra Algebra::finite_set(std::size_t n, std::uint64_t universe_cap) {
    if (n < 2) {
      throw InvalidAlgebra("finite set must have at least 2 points, got "
                           + std::to_string(n));
    }
    if (n > universe_cap) {
      throw InvalidAlgebra("finite set of size " + std::to_string(n)
                           + " exceeds the universe cap "
                           + std::to_string(universe_cap));
    }
    return Algebra(AlgebraKind::finite_set, n, 0, n);
  }

  Algebra Algebra::vector_space(std::uint32_t p,
                                std::size_t d,
                                std::uint64_t universe_cap) {
    if (!detail::is_prime(p) || p > max_modulus) {
      throw InvalidAlgebra("modulus must be a prime <= "
                           + std::to_string(max_modulus) + ", got "
                           + std::to_string(p));
    }
    if (d < 2) {
      throw InvalidAlgebra("vector space must have dimension at least 2, got "
                           + std::to_string(d));
    }
    std::uint64_t universe = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (universe > universe_cap / p) {
        throw InvalidAlgebra("universe " + std::to_string(p) + "^"
                             + std::to_string(d) + " exceeds the cap "
                             + std::to_string(universe_cap));
      }
      universe *= p;
    }
    return Algebra(AlgebraKind::vector_space, d, p, universe);
  }

  void Algebra::check(ElementId x) const {
    if (!valid(x)) {
      throw InvalidElement("element code " + std::to_string(x.code)
                           + " out of range for " + name() + " (universe "
                           + std::to_string(_universe) + ")");
    }
  }

  void Algebra::check(ElementSet const& s) const {
    for (auto x : s) {
      check(x);
    }
  }

  ElementId Algebra::basis_element(std::size_t i) const {
    if (i >= _rank) {
      throw PreconditionViolation("basis index " + std::to_string(i)
                                  + " out of range");
    }
    if (is_finite_set()) {
      return ElementId{static_cast<std::uint32_t>(i)};
    }
    std::uint64_t code = 1;
    for (std::size_t j = i + 1; j < _rank; ++j) {
      code *= _modulus;
    }
    return ElementId{static_cast<std::uint32_t>(code)};
  }

  ElementSet Algebra::canonical_basis() const {
    std::vector<ElementId> basis;
    basis.reserve(_rank);
    for (std::size_t i = 0; i < _rank; ++i) {
      basis.push_back(basis_element(i));
    }
    return ElementSet(std::move(basis));
  }

  std::vector<std::uint32_t> Algebra::coordinates(ElementId x) const {
    check(x);
    std::vector<std::uint32_t> coords(_rank, 0);
    std::uint32_t code = x.code;
    for (std::size_t i = _rank; i-- > 0;) {
      coords[i] = code % _modulus;
      code /= _modulus;
    }
    return coords;
  }

  ElementId
  Algebra::from_coordinates(std::span<std::uint32_t const> coords) const {
    if (coords.size() != _rank) {
      throw PreconditionViolation("expected " + std::to_string(_rank)
                                  + " coordinates, got "
                                  + std::to_string(coords.size()));
    }
    std::uint64_t code = 0;
    for (auto c : coords) {
      code = code * _modulus + (c % _modulus);
    }
    return ElementId{static_cast<std::uint32_t>(code)};
  }

  std::string Algebra::name() const {
    if (is_finite_set()) {
      return "T_" + std::to_string(_rank);
    }
    return "GF(" + std::to_string(_modulus) + ")^" + std::to_string(_rank);
  }

  ////////////////////////////////////////////////////////////////////////
  // combine
  ////////////////////////////////////////////////////////////////////////

  ElementId combine(Algebra const& alg,
                    std::span<Term const> terms,
                    std::span<ElementId const> images) {
    if (alg.is_finite_set()) {
      if (terms.size() != 1 || terms[0].coefficient != 1) {
        throw PreconditionViolation(
            "combine: finite sets only admit single unit terms");
      }
      return images[terms[0].generator];
    }
    std::uint32_t const p = alg.modulus();
    std::vector<std::uint32_t> acc(alg.rank(), 0);
    for (auto const& t : terms) {
      auto coords = alg.coordinates(images[t.generator]);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i] = (acc[i] + t.coefficient * coords[i]) % p;
      }
    }
    return alg.from_coordinates(acc);
  }

  ////////////////////////////////////////////////////////////////////////
  // Span
  ////////////////////////////////////////////////////////////////////////

  Span::Span(Algebra alg) : _alg(std::move(alg)) {}

  Span::Span(Algebra alg, ElementSet const& generators) : Span(std::move(alg)) {
    for (auto x : generators) {
      insert(x);
    }
  }

  std::vector<std::uint32_t>
  Span::reduce(std::vector<std::uint32_t>& coords) const {
    std::uint32_t const p = _alg.modulus();
    std::vector<std::uint32_t> multipliers;
    multipliers.reserve(_rows.size());
    for (auto const& row : _rows) {
      std::uint32_t f = coords[row.pivot];
      multipliers.push_back(f);
      if (f == 0) {
        continue;
      }
      for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] = (coords[i] + (p - f) * row.coords[i]) % p;
      }
    }
    return multipliers;
  }

  bool Span::insert(ElementId x) {
    _alg.check(x);
    if (_alg.is_finite_set()) {
      if (_generators.contains(x)) {
        return false;
      }
      _generators = _generators.with(x);
      return true;
    }
    std::uint32_t const p = _alg.modulus();
    auto coords      = _alg.coordinates(x);
    auto multipliers = reduce(coords);
    auto pivot = std::find_if(coords.begin(), coords.end(), [](auto c) {
      return c != 0;
    });
    if (pivot == coords.end()) {
      return false;
    }
    std::size_t const generator = _generators.size();
    // coords = x - sum_j multipliers[j] * row_j
    std::vector<std::uint32_t> combination(generator + 1, 0);
    combination[generator] = 1;
    for (std::size_t j = 0; j < _rows.size(); ++j) {
      auto const& rc = _rows[j].combination;
      for (std::size_t g = 0; g < rc.size(); ++g) {
        combination[g] = (combination[g] + (p - multipliers[j]) * rc[g]) % p;
      }
    }
    auto const pivot_index = static_cast<std::size_t>(pivot - coords.begin());
    std::uint32_t const inv = detail::inverse_mod(*pivot, p);
    for (auto& c : coords) {
      c = (c * inv) % p;
    }
    for (auto& c : combination) {
      c = (c * inv) % p;
    }
    _rows.push_back(Row{std::move(coords), std::move(combination), pivot_index});
    _generators = _generators.with(x);
    return true;
  }

  bool Span::contains(ElementId x) const {
    _alg.check(x);
    if (_alg.is_finite_set()) {
      return _generators.contains(x);
    }
    auto coords = _alg.coordinates(x);
    reduce(coords);
    return std::all_of(
        coords.begin(), coords.end(), [](auto c) { return c == 0; });
  }

  std::optional<std::vector<Term>> Span::expand(ElementId x) const {
    _alg.check(x);
    if (_alg.is_finite_set()) {
      auto i = _generators.index_of(x);
      if (!i) {
        return std::nullopt;
      }
      return std::vector<Term>{Term{*i, 1}};
    }
    std::uint32_t const p = _alg.modulus();
    auto coords      = _alg.coordinates(x);
    auto multipliers = reduce(coords);
    if (!std::all_of(
            coords.begin(), coords.end(), [](auto c) { return c == 0; })) {
      return std::nullopt;
    }
    std::vector<std::uint32_t> coefficients(_generators.size(), 0);
    for (std::size_t j = 0; j < _rows.size(); ++j) {
      auto const& rc = _rows[j].combination;
      for (std::size_t g = 0; g < rc.size(); ++g) {
        coefficients[g] = (coefficients[g] + multipliers[j] * rc[g]) % p;
      }
    }
    std::vector<Term> terms;
    for (std::size_t g = 0; g < coefficients.size(); ++g) {
      if (coefficients[g] != 0) {
        terms.push_back(Term{g, coefficients[g]});
      }
    }
    return terms;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure operations
  ////////////////////////////////////////////////////////////////////////

  bool in_closure(Algebra const& alg, ElementId x, ElementSet const& s) {
    alg.check(x);
    return Span(alg, s).contains(x);
  }

  bool is_independent(Algebra const& alg, ElementSet const& s) {
    Span span(alg);
    return std::all_of(
        s.begin(), s.end(), [&span](ElementId x) { return span.insert(x); });
  }

  std::size_t rank_set(Algebra const& alg, ElementSet const& s) {
    return Span(alg, s).rank();
  }

  bool same_closure(Algebra const& alg,
                    ElementSet const& s,
                    ElementSet const& t) {
    Span const ss(alg, s);
    Span const st(alg, t);
    return ss.rank() == st.rank()
           && std::all_of(t.begin(), t.end(), [&ss](ElementId x) {
                return ss.contains(x);
              });
  }

  ElementSet extend_to_basis(Algebra const& alg, ElementSet const& s) {
    alg.check(s);
    if (!is_independent(alg, s)) {
      throw PreconditionViolation("extend_to_basis: set is not independent");
    }
    Span span(alg, s);
    ElementSet result = s;
    for (std::uint64_t code = 0;
         code < alg.universe_size() && span.rank() < alg.rank();
         ++code) {
      ElementId const x{static_cast<std::uint32_t>(code)};
      if (span.insert(x)) {
        result = result.with(x);
      }
    }
    return result;
  }

  std::optional<ElementId> witness_outside(Algebra const& alg,
                                           ElementSet const& s) {
    alg.check(s);
    Span const span(alg, s);
    if (span.rank() == alg.rank()) {
      return std::nullopt;
    }
    for (std::uint64_t code = 0; code < alg.universe_size(); ++code) {
      ElementId const x{static_cast<std::uint32_t>(code)};
      if (!span.contains(x)) {
        return x;
      }
    }
    return std::nullopt;
  }

}  // namespace idemfact
