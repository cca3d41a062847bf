#include "idemfact/instances.hpp"

#include <cctype>
#include <charconv>

#include "idemfact/error.hpp"

namespace idemfact {

  namespace {

    struct Token {
      std::string_view text;
      std::size_t position;
    };

    // Whitespace separated tokens of text[begin, end).
    std::vector<Token>
    tokenize(std::string_view text, std::size_t begin, std::size_t end) {
      std::vector<Token> tokens;
      std::size_t i = begin;
      while (i < end) {
        while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t const start = i;
        while (i < end && !std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        if (i > start) {
          tokens.push_back(Token{text.substr(start, i - start), start});
        }
      }
      return tokens;
    }

    long long parse_integer(Token const& token) {
      long long value  = 0;
      auto const* last = token.text.data() + token.text.size();
      auto [ptr, ec]   = std::from_chars(token.text.data(), last, value);
      if (ec != std::errc() || ptr != last) {
        throw MalformedInput(token.position,
                             "'" + std::string(token.text)
                                 + "' is not an integer");
      }
      return value;
    }

    std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                             std::uint64_t exponent) {
      std::uint64_t result = 1;
      for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > UINT64_MAX / base) {
          return std::nullopt;
        }
        result *= base;
      }
      return result;
    }

  }  // namespace

  Endomorphism parse_endo(Algebra const& alg, std::string_view text) {
    std::size_t const rank = alg.rank();
    if (alg.is_finite_set()) {
      auto tokens = tokenize(text, 0, text.size());
      if (tokens.size() != rank) {
        throw MalformedInput(tokens.size() > rank ? tokens[rank].position
                                                  : text.size(),
                             "expected " + std::to_string(rank)
                                 + " image points, got "
                                 + std::to_string(tokens.size()));
      }
      std::vector<ElementId> images;
      for (auto const& token : tokens) {
        auto const value = parse_integer(token);
        if (value < 0 || static_cast<std::uint64_t>(value) >= rank) {
          throw MalformedInput(token.position,
                               "point " + std::string(token.text)
                                   + " out of range 0.."
                                   + std::to_string(rank - 1));
        }
        images.push_back(ElementId{static_cast<std::uint32_t>(value)});
      }
      return Endomorphism(alg, std::move(images));
    }

    auto const p = static_cast<long long>(alg.modulus());
    std::vector<ElementId> rows;
    std::size_t begin = 0;
    while (true) {
      std::size_t end = text.find(';', begin);
      bool const last = end == std::string_view::npos;
      if (last) {
        end = text.size();
      }
      if (rows.size() == rank) {
        throw MalformedInput(begin,
                             "expected " + std::to_string(rank) + " rows");
      }
      auto tokens = tokenize(text, begin, end);
      if (tokens.size() != rank) {
        throw MalformedInput(tokens.size() > rank ? tokens[rank].position
                                                  : begin,
                             "row " + std::to_string(rows.size() + 1)
                                 + " has " + std::to_string(tokens.size())
                                 + " entries, expected "
                                 + std::to_string(rank));
      }
      std::vector<std::uint32_t> coords;
      for (auto const& token : tokens) {
        auto const value = parse_integer(token);
        coords.push_back(static_cast<std::uint32_t>(((value % p) + p) % p));
      }
      rows.push_back(alg.from_coordinates(coords));
      if (last) {
        break;
      }
      begin = end + 1;
    }
    if (rows.size() != rank) {
      throw MalformedInput(text.size(),
                           "expected " + std::to_string(rank) + " rows, got "
                               + std::to_string(rows.size()));
    }
    return Endomorphism(alg, std::move(rows));
  }

  std::string format_endo(Endomorphism const& a) {
    std::string out;
    if (a.algebra().is_finite_set()) {
      for (auto x : a.basis_images()) {
        if (!out.empty()) {
          out += ' ';
        }
        out += std::to_string(x.code);
      }
      return out;
    }
    bool first_row = true;
    for (auto const& row : a.matrix()) {
      if (!first_row) {
        out += "; ";
      }
      first_row = false;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j != 0) {
          out += ' ';
        }
        out += std::to_string(row[j]);
      }
    }
    return out;
  }

  bool is_singular(Endomorphism const& a) {
    return rank_endo(a) < a.algebra().rank();
  }

  std::optional<std::uint64_t> count_endomorphisms(Algebra const& alg) {
    return checked_pow(alg.universe_size(), alg.rank());
  }

  std::uint64_t count_singular(Algebra const& alg) {
    auto total = count_endomorphisms(alg);
    if (!total) {
      throw BudgetExceeded("number of endomorphisms of " + alg.name()
                           + " does not fit in 64 bits");
    }
    std::uint64_t automorphisms = 1;
    if (alg.is_finite_set()) {
      for (std::uint64_t i = 2; i <= alg.rank(); ++i) {
        automorphisms *= i;
      }
    } else {
      std::uint64_t const q = alg.universe_size();
      std::uint64_t pi      = 1;
      for (std::size_t i = 0; i < alg.rank(); ++i) {
        automorphisms *= q - pi;
        pi *= alg.modulus();
      }
    }
    return *total - automorphisms;
  }

  ////////////////////////////////////////////////////////////////////////
  // EndomorphismStream
  ////////////////////////////////////////////////////////////////////////

  EndomorphismStream::EndomorphismStream(Algebra alg,
                                         bool singular_only,
                                         std::uint64_t cap)
      : _alg(std::move(alg)),
        _singular_only(singular_only),
        _digits(_alg.rank(), 0) {
    auto const total = count_endomorphisms(_alg);
    if (!total || *total > cap) {
      throw BudgetExceeded(
          "refusing to enumerate "
          + (total ? std::to_string(*total)
                   : std::to_string(_alg.universe_size()) + "^"
                         + std::to_string(_alg.rank()))
          + " endomorphisms of " + _alg.name() + " (cap "
          + std::to_string(cap) + ")");
    }
  }

  std::optional<Endomorphism> EndomorphismStream::next() {
    while (!_done) {
      std::vector<ElementId> images;
      images.reserve(_digits.size());
      for (auto c : _digits) {
        images.push_back(ElementId{c});
      }
      Endomorphism candidate(_alg, std::move(images));

      // Odometer step, last basis image fastest.
      std::size_t i = _digits.size();
      while (i > 0) {
        --i;
        if (++_digits[i] < _alg.universe_size()) {
          break;
        }
        _digits[i] = 0;
        if (i == 0) {
          _done = true;
        }
      }

      if (!_singular_only || is_singular(candidate)) {
        return candidate;
      }
    }
    return std::nullopt;
  }

}  // namespace idemfact
