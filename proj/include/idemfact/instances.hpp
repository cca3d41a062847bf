#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idemfact/algebra.hpp"
#include "idemfact/endomorphism.hpp"

namespace idemfact {

  // Text form of an endomorphism:
  //   finite set   "i0 i1 ... i(n-1)"       (image of each point)
  //   vector space "r11 r12; r21 r22"       (rows of the matrix, x -> xM)
  // Matrix entries are integers and are reduced mod p.

  //! Throws MalformedInput carrying the character offset of the problem.
  [[nodiscard]] Endomorphism parse_endo(Algebra const& alg,
                                        std::string_view text);
  [[nodiscard]] std::string format_endo(Endomorphism const& a);

  [[nodiscard]] bool is_singular(Endomorphism const& a);

  //! Number of endomorphisms, universe^rank, or nullopt on uint64 overflow.
  [[nodiscard]] std::optional<std::uint64_t>
  count_endomorphisms(Algebra const& alg);
  //! n^n - n! or p^(d^2) - |GL(d,p)|, computed from the closed forms.
  [[nodiscard]] std::uint64_t count_singular(Algebra const& alg);

  //! Streams every endomorphism of an algebra exactly once, in lexicographic
  //! order of the basis-image tuple, optionally skipping automorphisms.
  class EndomorphismStream {
   public:
    static constexpr std::uint64_t default_cap = std::uint64_t{1} << 24;

    //! Throws BudgetExceeded if the algebra has more than cap endomorphisms.
    EndomorphismStream(Algebra alg,
                       bool singular_only,
                       std::uint64_t cap = default_cap);

    std::optional<Endomorphism> next();

    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = Endomorphism;
      using difference_type   = std::ptrdiff_t;
      using pointer           = Endomorphism const*;
      using reference         = Endomorphism const&;

      iterator() = default;
      explicit iterator(EndomorphismStream* stream) : _stream(stream) {
        ++*this;
      }

      reference operator*() const {
        return *_current;
      }
      pointer operator->() const {
        return &*_current;
      }
      iterator& operator++() {
        _current = _stream->next();
        if (!_current) {
          _stream = nullptr;
        }
        return *this;
      }
      void operator++(int) {
        ++*this;
      }
      friend bool operator==(iterator const& a, iterator const& b) {
        return a._stream == b._stream;
      }

     private:
      EndomorphismStream* _stream = nullptr;
      std::optional<Endomorphism> _current;
    };

    iterator begin() {
      return iterator(this);
    }
    iterator end() {
      return iterator();
    }

   private:
    Algebra _alg;
    bool _singular_only;
    std::vector<std::uint32_t> _digits;
    bool _done = false;
  };

  [[nodiscard]] inline EndomorphismStream
  enumerate_endomorphisms(Algebra const& alg, bool singular_only) {
    return EndomorphismStream(alg, singular_only);
  }

}  // namespace idemfact
