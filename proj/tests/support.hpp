#pragma once

// Brute-force helpers for the test suites. They decode element codes and
// multiply matrices on their own so that expected values do not pass through
// the library's elimination or composition code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "idemfact/algebra.hpp"
#include "idemfact/endomorphism.hpp"
#include "idemfact/instances.hpp"

namespace idemfact::test {

  using Vec = std::vector<std::uint32_t>;
  using Mat = std::vector<Vec>;

  inline Vec decode(std::uint32_t code, std::uint32_t p, std::size_t d) {
    Vec v(d);
    for (std::size_t i = d; i-- > 0;) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  }

  inline std::uint32_t encode(Vec const& v, std::uint32_t p) {
    std::uint32_t code = 0;
    for (auto c : v) {
      code = code * p + c % p;
    }
    return code;
  }

  inline std::uint32_t ipow(std::uint32_t b, std::size_t e) {
    std::uint32_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  //! <S> by enumerating every coefficient tuple.
  inline std::set<std::uint32_t> brute_span(std::uint32_t                     p,
                                            std::size_t                       d,
                                            std::vector<std::uint32_t> const& s) {
    std::set<std::uint32_t> out;
    std::uint32_t const combos = ipow(p, s.size());
    for (std::uint32_t m = 0; m < combos; ++m) {
      Vec acc(d, 0);
      std::uint32_t k = m;
      for (auto g : s) {
        auto const c  = k % p;
        k            /= p;
        auto const gv = decode(g, p, d);
        for (std::size_t i = 0; i < d; ++i) {
          acc[i] = (acc[i] + c * gv[i]) % p;
        }
      }
      out.insert(encode(acc, p));
    }
    return out;
  }

  //! Rank by counting the span: |<S>| = p^rank.
  inline std::size_t brute_rank(std::uint32_t                     p,
                                std::size_t                       d,
                                std::vector<std::uint32_t> const& s) {
    auto size       = brute_span(p, d, s).size();
    std::size_t r   = 0;
    while (size > 1) {
      size /= p;
      ++r;
    }
    return r;
  }

  inline Mat matmul(Mat const& a, Mat const& b, std::uint32_t p) {
    std::size_t const d = a.size();
    Mat c(d, Vec(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < d; ++j) {
          c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
        }
      }
    }
    return c;
  }

  inline std::vector<std::uint32_t>
  table_compose(std::vector<std::uint32_t> const& first,
                std::vector<std::uint32_t> const& second) {
    std::vector<std::uint32_t> out;
    for (auto x : first) {
      out.push_back(second[x]);
    }
    return out;
  }

  inline std::vector<std::uint32_t> codes(ElementSet const& s) {
    std::vector<std::uint32_t> out;
    for (auto x : s) {
      out.push_back(x.code);
    }
    return out;
  }

  inline ElementSet set_of(std::vector<std::uint32_t> const& cs) {
    std::vector<ElementId> out;
    for (auto c : cs) {
      out.push_back(ElementId{c});
    }
    return ElementSet(std::move(out));
  }

  //! Every subset of {0..universe-1} of size <= max_size, ascending codes.
  inline void for_each_subset(std::uint32_t universe,
                              std::size_t   max_size,
                              std::function<void(ElementSet const&)> const& fn) {
    std::vector<std::uint32_t> current;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t start) {
      fn(set_of(current));
      if (current.size() == max_size) {
        return;
      }
      for (std::uint32_t u = start; u < universe; ++u) {
        current.push_back(u);
        rec(u + 1);
        current.pop_back();
      }
    };
    rec(0);
  }

  //! Uniformly random singular endomorphism by rejection.
  inline Endomorphism random_singular(Algebra const& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(alg.universe_size() - 1));
    while (true) {
      std::vector<ElementId> images;
      for (std::size_t i = 0; i < alg.rank(); ++i) {
        images.push_back(ElementId{pick(rng)});
      }
      Endomorphism a(alg, std::move(images));
      if (is_singular(a)) {
        return a;
      }
    }
  }

  inline Endomorphism random_endo(Algebra const& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(alg.universe_size() - 1));
    std::vector<ElementId> images;
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      images.push_back(ElementId{pick(rng)});
    }
    return Endomorphism(alg, std::move(images));
  }

}  // namespace idemfact::test
