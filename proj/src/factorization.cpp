#include "idemfact/factorization.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "idemfact/error.hpp"

namespace idemfact {

  namespace {

    // Partial endomorphism from an explicit assignment on an independent set;
    // the domain basis is listed in ascending code order.
    PartialEndomorphism
    make_partial(Algebra const& alg,
                 std::map<ElementId, ElementId> const& assignment) {
      std::vector<ElementId> domain;
      std::vector<ElementId> images;
      for (auto const& [x, y] : assignment) {
        domain.push_back(x);
        images.push_back(y);
      }
      return PartialEndomorphism(alg, ElementSet(std::move(domain)),
                                 std::move(images));
    }

    ElementId smallest(ElementSet const& s) {
      return *std::min_element(s.begin(), s.end());
    }

    void require(bool condition, char const* stage, std::string const& what) {
      if (!condition) {
        throw InvariantViolation(stage, what);
      }
    }

    void check_basis_pair(Algebra const&    alg,
                          ElementSet const& from,
                          ElementSet const& to,
                          char const*       op) {
      alg.check(from);
      alg.check(to);
      if (from.size() != to.size()) {
        throw PreconditionViolation(std::string(op)
                                    + ": sets have different sizes");
      }
      if (from.empty()) {
        throw PreconditionViolation(std::string(op) + ": sets are empty");
      }
      if (!is_independent(alg, from) || !is_independent(alg, to)) {
        throw PreconditionViolation(std::string(op)
                                    + ": sets must be independent");
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(ElementSet carrier, std::vector<ElementId> images)
      : _carrier(std::move(carrier)), _images(std::move(images)) {
    if (_images.size() != _carrier.size()) {
      throw PreconditionViolation("permutation: image count mismatch");
    }
    ElementSet const image_set(_images);  // throws on repeats
    if (!image_set.same_members(_carrier)) {
      throw PreconditionViolation("permutation: images leave the carrier");
    }
  }

  Permutation Permutation::identity(ElementSet carrier) {
    auto images = carrier.elements();
    return Permutation(std::move(carrier), std::move(images));
  }

  ElementId Permutation::apply(ElementId x) const {
    auto i = _carrier.index_of(x);
    if (!i) {
      throw DomainError("element " + std::to_string(x.code)
                        + " is not in the carrier of the permutation");
    }
    return _images[*i];
  }

  bool Permutation::is_identity() const {
    return std::equal(_carrier.begin(), _carrier.end(), _images.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Step 1
  ////////////////////////////////////////////////////////////////////////

  Retraction initial_idempotent(Endomorphism const& a) {
    Algebra const& alg   = a.algebra();
    std::size_t const l  = rank_endo(a);
    if (l == alg.rank()) {
      throw NotSingular("input is an automorphism");
    }
    if (l == 0) {
      throw PreconditionViolation("initial_idempotent: rank 0 map");
    }

    // Scan the canonical basis; keep b when b a is new to the image span.
    // For a finite set this picks the smallest point of each kernel class.
    Span image(alg);
    std::vector<ElementId> kept;
    std::vector<ElementId> kept_images;
    auto const basis = alg.canonical_basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (image.insert(a.basis_images()[i])) {
        kept.push_back(basis[i]);
        kept_images.push_back(a.basis_images()[i]);
      }
    }

    // Inverse of a restricted to <E>, as a partial map <Ea> -> <E>.
    PartialEndomorphism const pullback(alg, ElementSet(kept_images), kept);
    std::vector<ElementId> e_images;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (std::find(kept.begin(), kept.end(), basis[i]) != kept.end()) {
        e_images.push_back(basis[i]);
      } else {
        e_images.push_back(pullback.apply(a.basis_images()[i]));
      }
    }
    Retraction result{Endomorphism(alg, std::move(e_images)),
                      ElementSet(std::move(kept)).sorted()};

    auto const& e = result.idempotent;
    require(is_idempotent(e), stage::retraction, "e is not idempotent");
    require(compose(e, a) == a, stage::retraction, "e a != a");
    require(rank_endo(e) == l, stage::retraction, "rank(e) != rank(a)");
    require(same_closure(alg, image_basis(e), result.basis),
            stage::retraction,
            "image of e is not <E>");
    auto const ea = map_set(a, result.basis);
    require(ea.size() == l && is_independent(alg, ea),
            stage::retraction,
            "a is not injective on <E>");
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Step 2
  ////////////////////////////////////////////////////////////////////////

  BasisChain basis_chain(Algebra const&    alg,
                         ElementSet const& from,
                         ElementSet const& to) {
    check_basis_pair(alg, from, to, "basis_chain");
    BasisChain chain{{from}};
    ElementSet current = from;
    while (!current.same_members(to)) {
      require(chain.steps() < from.size(),
              stage::basis_chain,
              "chain longer than the rank");
      ElementId const d  = smallest(current.difference(to));
      Span const rest(alg, current.without(d));
      auto const candidates = to.difference(current).sorted();
      auto const c = std::find_if(candidates.begin(),
                                  candidates.end(),
                                  [&rest](ElementId y) {
                                    return !rest.contains(y);
                                  });
      require(c != candidates.end(),
              stage::basis_chain,
              "no exchange partner for " + std::to_string(d.code));
      current = current.replaced(d, *c);
      chain.sets.push_back(current);
    }
    return chain;
  }

  std::vector<PartialEndomorphism>
  exchange_idempotents(Algebra const&    alg,
                       ElementSet const& from,
                       ElementSet const& to) {
    check_basis_pair(alg, from, to, "exchange_idempotents");
    if (from.size() >= alg.rank()) {
      throw PreconditionViolation(
          "exchange_idempotents: sets must have rank below the algebra's");
    }
    ElementSet const shared = from.intersection(to);
    if (shared.size() + 1 != from.size()) {
      throw PreconditionViolation(
          "exchange_idempotents: sets must differ in exactly one element");
    }
    ElementId const x = from.difference(to)[0];
    ElementId const y = to.difference(from)[0];

    std::map<ElementId, ElementId> fix_shared;
    for (auto d : shared) {
      fix_shared[d] = d;
    }

    std::vector<PartialEndomorphism> result;
    if (!in_closure(alg, y, shared.with(x))) {
      auto m = fix_shared;
      m[x]   = y;
      m[y]   = y;
      result.push_back(make_partial(alg, m));
    } else {
      auto z = witness_outside(alg, shared.with(x).with(y));
      require(z.has_value(), stage::exchange, "no element outside <D x y>");
      auto first  = fix_shared;
      first[x]    = *z;
      first[*z]   = *z;
      auto second = fix_shared;
      second[*z]  = y;
      second[y]   = y;
      result.push_back(make_partial(alg, first));
      result.push_back(make_partial(alg, second));
    }

    std::vector<ElementId> image;
    for (auto u : from) {
      for (auto const& pe : result) {
        require(pe.in_domain(u), stage::exchange, "factors not composable");
        u = pe.apply(u);
      }
      image.push_back(u);
    }
    require(ElementSet(image).same_members(to),
            stage::exchange,
            "composite does not carry E_i onto E_i+1");
    for (auto const& pe : result) {
      require(pe.is_idempotent(), stage::exchange, "factor not idempotent");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Steps 3 and 4
  ////////////////////////////////////////////////////////////////////////

  Permutation
  induced_permutation(ElementSet const&                       basis,
                      std::vector<PartialEndomorphism> const& chain_factors,
                      Endomorphism const&                     a) {
    std::vector<ElementId> through_chain;
    std::vector<ElementId> through_a;
    for (auto x : basis) {
      ElementId u = x;
      for (auto const& pe : chain_factors) {
        require(pe.in_domain(u),
                stage::permutation,
                "chain factors not composable on E");
        u = pe.apply(u);
      }
      through_chain.push_back(u);
      through_a.push_back(a.apply(x));
    }
    auto const distinct = [](std::vector<ElementId> v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    require(distinct(through_a), stage::permutation, "a not injective on E");
    require(distinct(through_chain),
            stage::permutation,
            "chain composite not injective on E");
    ElementSet const carrier = ElementSet(through_a).sorted();
    require(ElementSet(through_chain).same_members(carrier),
            stage::permutation,
            "chain composite does not reach Ea");

    std::vector<ElementId> images;
    for (auto c : carrier) {
      auto const i = static_cast<std::size_t>(
          std::find(through_chain.begin(), through_chain.end(), c)
          - through_chain.begin());
      images.push_back(through_a[i]);
    }
    return Permutation(carrier, std::move(images));
  }

  std::vector<Transposition> perm_to_transpositions(Permutation const& f) {
    std::vector<Transposition> result;
    ElementSet const order = f.carrier().sorted();
    std::vector<ElementId> visited;
    for (auto start : order) {
      if (std::find(visited.begin(), visited.end(), start) != visited.end()) {
        continue;
      }
      visited.push_back(start);
      // (c1 c2 ... ck) = (c1 c2)(c1 c3)...(c1 ck) applied left to right.
      for (ElementId u = f.apply(start); u != start; u = f.apply(u)) {
        visited.push_back(u);
        result.push_back(Transposition{start, u});
      }
    }
    return result;
  }

  std::vector<PartialEndomorphism>
  transposition_idempotents(Algebra const&    alg,
                            ElementSet const& carrier,
                            ElementId         x,
                            ElementId         y) {
    alg.check(carrier);
    if (x == y || !carrier.contains(x) || !carrier.contains(y)) {
      throw PreconditionViolation(
          "transposition_idempotents: x and y must be distinct carrier "
          "elements");
    }
    if (!is_independent(alg, carrier)) {
      throw PreconditionViolation(
          "transposition_idempotents: carrier must be independent");
    }
    auto const z = witness_outside(alg, carrier);
    require(z.has_value(),
            stage::transposition,
            "no element outside <Ea>; input was not singular");

    std::map<ElementId, ElementId> fixed;
    for (auto b : carrier) {
      fixed[b] = b;
    }
    fixed[*z] = *z;

    auto f1 = fixed;
    f1[x]   = *z;
    auto f2 = fixed;
    f2[y]   = x;
    auto f3 = fixed;
    f3[*z]  = y;

    std::vector<PartialEndomorphism> result{make_partial(alg, f1),
                                            make_partial(alg, f2),
                                            make_partial(alg, f3)};
    for (auto const& pe : result) {
      require(pe.is_idempotent(),
              stage::transposition,
              "gadget factor not idempotent");
    }
    for (auto b : carrier) {
      ElementId u = b;
      for (auto const& pe : result) {
        u = pe.apply(u);
      }
      ElementId const expected = b == x ? y : (b == y ? x : b);
      require(u == expected,
              stage::transposition,
              "gadget composite is not the transposition");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Totalization
  ////////////////////////////////////////////////////////////////////////

  Endomorphism totalize(PartialEndomorphism const& pe) {
    Algebra const& alg = pe.algebra();
    if (!pe.is_idempotent()) {
      throw PreconditionViolation("totalize: partial map is not idempotent");
    }
    auto const image = pe.image_basis();
    if (image.empty()) {
      throw DegenerateRank("totalize: partial map has empty image");
    }
    ElementId const sink = smallest(image);
    auto const full      = extend_to_basis(alg, pe.domain_basis());
    std::vector<ElementId> images = pe.images();
    images.resize(full.size(), sink);
    PartialEndomorphism const extended(alg, full, std::move(images));

    std::vector<ElementId> basis_images;
    for (auto b : alg.canonical_basis()) {
      basis_images.push_back(extended.apply(b));
    }
    return Endomorphism(alg, std::move(basis_images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Assembly
  ////////////////////////////////////////////////////////////////////////

  FactorizationChecks
  verify_factorization(Endomorphism const&              a,
                       std::vector<Endomorphism> const& factors) {
    for (auto const& f : factors) {
      if (!(f.algebra() == a.algebra())) {
        throw AlgebraMismatch("factor over " + f.algebra().name()
                              + " for input over " + a.algebra().name());
      }
    }
    std::size_t const l = rank_endo(a);
    FactorizationChecks checks;
    checks.product_matches = !factors.empty() && product(factors) == a;
    checks.all_idempotent  = std::all_of(
        factors.begin(), factors.end(), [](auto const& f) {
          return is_idempotent(f);
        });
    checks.ranks_equal = std::all_of(
        factors.begin(), factors.end(), [l](auto const& f) {
          return rank_endo(f) == l;
        });
    checks.factor_bound_ok
        = !factors.empty() && factors.size() <= factor_bound(l);
    return checks;
  }

  FactorizationReport factorize(Endomorphism const& a) {
    Algebra const& alg  = a.algebra();
    std::size_t const l = rank_endo(a);
    if (l == alg.rank()) {
      throw NotSingular("input is an automorphism");
    }
    if (l == 0) {
      // The zero map is its own idempotent certificate.
      std::vector<Endomorphism> factors{a};
      auto checks = verify_factorization(a, factors);
      return FactorizationReport{
          a, 0, std::move(factors), 0, 0, checks, std::nullopt};
    }

    auto retraction = initial_idempotent(a);
    auto const& E   = retraction.basis;
    auto const Ea   = map_set(a, E).sorted();

    auto chain = basis_chain(alg, E, Ea);
    std::vector<PartialEndomorphism> exchange;
    for (std::size_t i = 0; i + 1 < chain.sets.size(); ++i) {
      for (auto& pe :
           exchange_idempotents(alg, chain.sets[i], chain.sets[i + 1])) {
        exchange.push_back(std::move(pe));
      }
    }

    auto permutation    = induced_permutation(E, exchange, a);
    auto transpositions = perm_to_transpositions(permutation);
    std::vector<PartialEndomorphism> gadgets;
    for (auto const& t : transpositions) {
      for (auto& pe : transposition_idempotents(alg, Ea, t.first, t.second)) {
        gadgets.push_back(std::move(pe));
      }
    }

    std::vector<PartialEndomorphism const*> partials;
    for (auto const& pe : exchange) {
      partials.push_back(&pe);
    }
    for (auto const& pe : gadgets) {
      partials.push_back(&pe);
    }

    // Each image must sit inside the next domain for the totalized factors
    // to compose like the partial ones.
    if (!partials.empty()) {
      require(std::all_of(E.begin(),
                          E.end(),
                          [&](ElementId x) {
                            return partials.front()->in_domain(x);
                          }),
              exchange.empty() ? stage::transposition : stage::exchange,
              "image of e not inside the first partial's domain");
    }
    for (std::size_t i = 0; i < partials.size(); ++i) {
      char const* where
          = i < exchange.size() ? stage::exchange : stage::transposition;
      require(partials[i]->is_idempotent(), where, "partial not idempotent");
      require(partials[i]->rank() == l, where, "partial rank differs from l");
      if (i + 1 < partials.size()) {
        require(partials[i]->image_within_domain_of(*partials[i + 1]),
                where,
                "image not inside the next factor's domain");
      }
    }

    std::vector<Endomorphism> factors{retraction.idempotent};
    for (auto const* pe : partials) {
      auto total = totalize(*pe);
      for (std::size_t j = 0; j < pe->domain_basis().size(); ++j) {
        require(total.apply(pe->domain_basis()[j]) == pe->images()[j],
                stage::totalization,
                "total map does not extend the partial");
      }
      require(same_closure(alg, image_basis(total), pe->image_basis()),
              stage::totalization,
              "total map changed the image");
      require(is_idempotent(total),
              stage::totalization,
              "total map not idempotent");
      factors.push_back(std::move(total));
    }

    auto checks = verify_factorization(a, factors);
    std::size_t const chain_length = chain.sets.size();
    std::size_t const transposition_count = transpositions.size();
    FactorizationTrace trace{std::move(retraction),
                             Ea,
                             std::move(chain),
                             std::move(exchange),
                             std::move(permutation),
                             std::move(transpositions),
                             std::move(gadgets)};
    return FactorizationReport{a,
                               l,
                               std::move(factors),
                               chain_length,
                               transposition_count,
                               checks,
                               std::move(trace)};
  }

}  // namespace idemfact
