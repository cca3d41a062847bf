#include "idemfact/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "idemfact/error.hpp"
#include "idemfact/instances.hpp"

namespace idemfact::oracle {

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::reachable:
        return "reachable";
      case Verdict::unreachable:
        return "unreachable";
      case Verdict::indeterminate:
        return "indeterminate";
    }
    return "indeterminate";
  }

  std::vector<Endomorphism> enumerate_idempotents(Algebra const& alg,
                                                  std::size_t    r,
                                                  Budget const&  budget) {
    std::vector<Endomorphism> result;
    for (auto const& a : EndomorphismStream(alg, false, budget.max_endos)) {
      if (rank_endo(a) == r && is_idempotent(a)) {
        result.push_back(a);
      }
    }
    return result;
  }

  Verdict idempotent_generated(Endomorphism const& a, Budget const& budget) {
    if (!is_singular(a)) {
      return Verdict::unreachable;
    }
    std::vector<Endomorphism> generators;
    try {
      generators = enumerate_idempotents(a.algebra(), rank_endo(a), budget);
    } catch (BudgetExceeded const&) {
      return Verdict::indeterminate;
    }

    // States are keyed by their action table.
    std::set<std::vector<std::uint32_t>> seen;
    std::deque<Endomorphism> queue;
    auto visit = [&](Endomorphism const& x) {
      if (seen.insert(x.table()).second) {
        queue.push_back(x);
      }
      return x == a;
    };
    for (auto const& g : generators) {
      if (visit(g)) {
        return Verdict::reachable;
      }
    }
    while (!queue.empty()) {
      if (seen.size() > budget.max_bfs_states) {
        return Verdict::indeterminate;
      }
      Endomorphism const x = queue.front();
      queue.pop_front();
      for (auto const& g : generators) {
        if (visit(compose(x, g))) {
          return Verdict::reachable;
        }
      }
    }
    return Verdict::unreachable;
  }

  std::size_t shortest_chain_length(Algebra const&    alg,
                                    ElementSet const& from,
                                    ElementSet const& to,
                                    Budget const&     budget) {
    alg.check(from);
    alg.check(to);
    if (from.size() != to.size() || !is_independent(alg, from)
        || !is_independent(alg, to)) {
      throw PreconditionViolation(
          "shortest_chain_length: need independent sets of equal size");
    }
    if (alg.universe_size() > budget.max_universe) {
      throw BudgetExceeded("shortest_chain_length: universe of "
                           + alg.name() + " exceeds the budget");
    }
    using Key = std::vector<std::uint32_t>;
    auto key  = [](ElementSet const& s) {
      Key k;
      for (auto x : s) {
        k.push_back(x.code);
      }
      std::sort(k.begin(), k.end());
      return k;
    };
    Key const target = key(to);
    std::set<Key> seen{key(from)};
    std::vector<Key> layer{key(from)};
    for (std::size_t distance = 0; !layer.empty(); ++distance) {
      std::vector<Key> next;
      for (auto const& k : layer) {
        if (k == target) {
          return distance;
        }
        for (std::size_t i = 0; i < k.size(); ++i) {
          for (std::uint32_t u = 0; u < alg.universe_size(); ++u) {
            if (std::find(k.begin(), k.end(), u) != k.end()) {
              continue;
            }
            Key candidate = k;
            candidate[i]  = u;
            std::sort(candidate.begin(), candidate.end());
            if (seen.count(candidate) != 0) {
              continue;
            }
            std::vector<ElementId> elements;
            for (auto c : candidate) {
              elements.push_back(ElementId{c});
            }
            if (!is_independent(alg, ElementSet(std::move(elements)))) {
              continue;
            }
            seen.insert(candidate);
            if (seen.size() > budget.max_bfs_states) {
              throw BudgetExceeded(
                  "shortest_chain_length: too many independent sets");
            }
            next.push_back(std::move(candidate));
          }
        }
      }
      layer = std::move(next);
    }
    throw InvariantViolation("oracle", "target set unreachable under rho");
  }

  ElementSet span_enumeration_check(Algebra const&    alg,
                                    ElementSet const& s,
                                    Budget const&     budget) {
    if (!alg.is_vector_space()) {
      throw PreconditionViolation(
          "span_enumeration_check: vector spaces only");
    }
    alg.check(s);
    if (alg.universe_size() > budget.max_universe) {
      throw BudgetExceeded("span_enumeration_check: universe of "
                           + alg.name() + " exceeds the budget");
    }
    std::uint32_t const p = alg.modulus();
    std::set<std::uint32_t> span{0};
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (auto v : frontier) {
        auto const vc = alg.coordinates(ElementId{v});
        for (auto g : s) {
          auto const gc = alg.coordinates(g);
          std::vector<std::uint32_t> w(vc.size());
          for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = (vc[i] + gc[i]) % p;
          }
          auto const code = alg.from_coordinates(w).code;
          if (span.insert(code).second) {
            next.push_back(code);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ElementId> result;
    for (auto c : span) {
      result.push_back(ElementId{c});
    }
    return ElementSet(std::move(result));
  }

}  // namespace idemfact::oracle
