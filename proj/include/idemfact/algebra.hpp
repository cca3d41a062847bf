#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace idemfact {

  //! Canonical index of an element of an algebra's universe.
  //!
  //! For a finite set this is the point itself. For a vector space over
  //! GF(p) it is the base-p positional encoding of the coordinate tuple, with
  //! the first coordinate most significant, so (0,1) -> 1 and (1,0) -> p.
  struct ElementId {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(ElementId, ElementId) = default;
  };

  //! Ordered list of distinct elements.
  //!
  //! The order is whatever the set was built with; most producers use
  //! ascending code, basis chains keep their construction order. Equality is
  //! order sensitive, use same_members() to compare as sets.
  class ElementSet {
   public:
    using const_iterator = std::vector<ElementId>::const_iterator;

    ElementSet() = default;
    ElementSet(std::initializer_list<ElementId> elements);
    explicit ElementSet(std::vector<ElementId> elements);

    static ElementSet from_codes(std::initializer_list<std::uint32_t> codes);

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _elements.empty();
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _elements.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _elements.end();
    }
    [[nodiscard]] ElementId operator[](std::size_t i) const {
      return _elements[i];
    }
    [[nodiscard]] std::vector<ElementId> const& elements() const noexcept {
      return _elements;
    }

    [[nodiscard]] bool contains(ElementId x) const;

    //! Position of x, or nullopt.
    [[nodiscard]] std::optional<std::size_t> index_of(ElementId x) const;

    [[nodiscard]] ElementSet sorted() const;
    [[nodiscard]] bool same_members(ElementSet const& other) const;

    //! Copy with x appended; throws PreconditionViolation if x is present.
    [[nodiscard]] ElementSet with(ElementId x) const;
    //! Copy with x removed (order of the rest kept).
    [[nodiscard]] ElementSet without(ElementId x) const;
    //! Copy where old is replaced in place by replacement.
    [[nodiscard]] ElementSet replaced(ElementId old, ElementId replacement) const;

    //! Members of this set that are also in other, in this set's order.
    [[nodiscard]] ElementSet intersection(ElementSet const& other) const;
    //! Members of this set that are not in other, in this set's order.
    [[nodiscard]] ElementSet difference(ElementSet const& other) const;
    //! This set followed by the members of other not already present.
    [[nodiscard]] ElementSet united(ElementSet const& other) const;

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    std::vector<ElementId> _elements;
  };

  enum class AlgebraKind { finite_set, vector_space };

  //! Descriptor of one of the two concrete independence algebras: a finite
  //! set of size n, or the vector space GF(p)^d.
  class Algebra {
   public:
    static constexpr std::uint64_t default_universe_cap = std::uint64_t{1}
                                                          << 20;
    static constexpr std::uint32_t max_modulus = 251;

    static Algebra finite_set(std::size_t n,
                              std::uint64_t universe_cap
                              = default_universe_cap);
    static Algebra vector_space(std::uint32_t p,
                                std::size_t d,
                                std::uint64_t universe_cap
                                = default_universe_cap);

    [[nodiscard]] AlgebraKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] bool is_finite_set() const noexcept {
      return _kind == AlgebraKind::finite_set;
    }
    [[nodiscard]] bool is_vector_space() const noexcept {
      return _kind == AlgebraKind::vector_space;
    }

    //! n for a finite set, d for a vector space.
    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    //! p for a vector space, 0 for a finite set.
    [[nodiscard]] std::uint32_t modulus() const noexcept {
      return _modulus;
    }
    [[nodiscard]] std::uint64_t universe_size() const noexcept {
      return _universe;
    }

    [[nodiscard]] bool valid(ElementId x) const noexcept {
      return x.code < _universe;
    }
    //! Throws InvalidElement unless valid(x).
    void check(ElementId x) const;
    void check(ElementSet const& s) const;

    //! i-th element of the canonical basis: the point i, or the unit vector
    //! with a 1 in coordinate i.
    [[nodiscard]] ElementId basis_element(std::size_t i) const;
    [[nodiscard]] ElementSet canonical_basis() const;

    // Vector-space coordinate codec. Residues are reduced mod p.
    [[nodiscard]] std::vector<std::uint32_t> coordinates(ElementId x) const;
    [[nodiscard]] ElementId
    from_coordinates(std::span<std::uint32_t const> coords) const;

    //! Short human readable name, e.g. "T_4" or "GF(3)^2".
    [[nodiscard]] std::string name() const;

    friend bool operator==(Algebra const& a, Algebra const& b) noexcept {
      return a._kind == b._kind && a._rank == b._rank
             && a._modulus == b._modulus;
    }

   private:
    Algebra(AlgebraKind kind,
            std::size_t rank,
            std::uint32_t modulus,
            std::uint64_t universe)
        : _kind(kind), _rank(rank), _modulus(modulus), _universe(universe) {}

    AlgebraKind _kind;
    std::size_t _rank;
    std::uint32_t _modulus;
    std::uint64_t _universe;
  };

  //! One summand of an expansion over the generators of a Span.
  struct Term {
    std::size_t generator;
    std::uint32_t coefficient;

    friend bool operator==(Term, Term) = default;
  };

  //! Builds the element sum(coefficient * images[generator]). For a finite
  //! set the expansion must be a single term with coefficient 1.
  ElementId combine(Algebra const& alg,
                    std::span<Term const> terms,
                    std::span<ElementId const> images);

  //! Incrementally built closure <S>.
  //!
  //! Finite sets: <S> = S. Vector spaces: the linear span, maintained as an
  //! exact row echelon form over GF(p); each echelon row remembers its
  //! expression in terms of the inserted generators so that members can be
  //! expanded over them.
  class Span {
   public:
    explicit Span(Algebra alg);
    Span(Algebra alg, ElementSet const& generators);

    //! Adds x as a generator if x is outside the current closure. Returns
    //! whether x was added.
    bool insert(ElementId x);

    [[nodiscard]] bool contains(ElementId x) const;

    //! Coefficients of x over generators(), or nullopt if x is outside.
    [[nodiscard]] std::optional<std::vector<Term>> expand(ElementId x) const;

    [[nodiscard]] std::size_t rank() const noexcept {
      return _generators.size();
    }
    //! The independent generators accepted so far, in insertion order.
    [[nodiscard]] ElementSet const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] Algebra const& algebra() const noexcept {
      return _alg;
    }

   private:
    struct Row {
      std::vector<std::uint32_t> coords;
      std::vector<std::uint32_t> combination;
      std::size_t pivot;
    };

    // Reduces coords against the echelon rows; returns the multipliers used.
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t>& coords) const;

    Algebra _alg;
    ElementSet _generators;
    std::vector<Row> _rows;
  };

  // Closure operations.

  [[nodiscard]] bool in_closure(Algebra const& alg,
                                ElementId x,
                                ElementSet const& s);
  [[nodiscard]] bool is_independent(Algebra const& alg, ElementSet const& s);
  //! Size of a maximal independent subset of s.
  [[nodiscard]] std::size_t rank_set(Algebra const& alg, ElementSet const& s);
  //! Whether <s> == <t>.
  [[nodiscard]] bool same_closure(Algebra const& alg,
                                  ElementSet const& s,
                                  ElementSet const& t);
  //! Basis of the whole algebra with s as a prefix, filled greedily with the
  //! smallest element outside the current closure. s must be independent.
  [[nodiscard]] ElementSet extend_to_basis(Algebra const& alg,
                                           ElementSet const& s);
  //! The smallest element outside <s>, or nullopt if <s> is everything.
  [[nodiscard]] std::optional<ElementId> witness_outside(Algebra const& alg,
                                                         ElementSet const& s);

}  // namespace idemfact
