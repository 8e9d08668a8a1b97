// Exhaustive triple sweeps for star associativity and the cocycle identity.
//
// Monomials are interned to dense ids and every pairwise product is cached
// as a short list of (key, coefficient) terms, where the key packs the
// t-degree above the monomial id. Each triple then reduces to merging a few
// cached lists and checking that the signed sum cancels.

#include <algorithm>
#include <unordered_map>

#include "qdef/cohomology.hpp"
#include "qdef/deformation.hpp"

namespace qdef {

namespace {

using Key = std::uint64_t;

struct Term {
  Key key;
  Scalar c;
};

using Terms = std::vector<Term>;

Key make_key(std::uint32_t tdeg, std::uint32_t id) { return (Key(tdeg) << 32) | id; }
std::uint32_t key_id(Key key) { return static_cast<std::uint32_t>(key); }
std::uint32_t key_tdeg(Key key) { return static_cast<std::uint32_t>(key >> 32); }
Key pair_key(std::uint32_t a, std::uint32_t b) { return (Key(a) << 32) | b; }

class MonomialTable {
 public:
  std::uint32_t intern(const SmashMonomial& m) {
    auto [it, inserted] = ids_.emplace(m, static_cast<std::uint32_t>(monomials_.size()));
    if (inserted) monomials_.push_back(m);
    return it->second;
  }
  const SmashMonomial& at(std::uint32_t id) const { return monomials_[id]; }

 private:
  std::unordered_map<SmashMonomial, std::uint32_t> ids_;
  std::vector<SmashMonomial> monomials_;
};

// Sorts by key, sums duplicates and reports whether everything cancelled.
bool cancels(Terms& acc) {
  std::sort(acc.begin(), acc.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
  for (std::size_t i = 0; i < acc.size();) {
    std::size_t j = i + 1;
    Scalar sum = acc[i].c;
    while (j < acc.size() && acc[j].key == acc[i].key) sum += acc[j++].c;
    if (!sum.is_zero()) return false;
    i = j;
  }
  return true;
}

std::string triple_name(const SmashMonomial& a, const SmashMonomial& b, const SmashMonomial& c) {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

class StarCache {
 public:
  StarCache(const StarProduct& star, MonomialTable& table) : star_(star), table_(table) {}

  const Terms& get(std::uint32_t a, std::uint32_t b) {
    auto [it, inserted] = cache_.try_emplace(pair_key(a, b));
    if (inserted) {
      const Scalar one = star_.algebra().scalar(1);
      SmashElement x(table_.at(a), one);
      SmashElement y(table_.at(b), one);
      const DeformElement product = star_.udf_pair(x, y);
      for (const auto& [d, value] : product.components()) {
        for (const auto& [m, c] : value.terms()) it->second.push_back(Term{make_key(d, table_.intern(m)), c});
      }
    }
    return it->second;
  }

 private:
  const StarProduct& star_;
  MonomialTable& table_;
  std::unordered_map<Key, Terms> cache_;
};

}  // namespace

CheckReport check_associativity(const StarProduct& star, std::uint32_t degree_bound) {
  const std::string label = "associativity";
  CheckReport report("star associativity up to degree " + std::to_string(degree_bound));
  report.entry(label);
  const AlgebraSpec& alg = star.algebra();
  MonomialTable table;
  std::vector<std::uint32_t> basis;
  for (const auto& m : basis_monomials(alg, degree_bound)) basis.push_back(table.intern(m));
  StarCache cache(star, table);

  Terms acc;
  for (auto a : basis) {
    for (auto b : basis) {
      const Terms ab = cache.get(a, b);
      for (auto c : basis) {
        acc.clear();
        for (const auto& [k1, c1] : ab) {
          for (const auto& [k2, c2] : cache.get(key_id(k1), c)) {
            acc.push_back(Term{make_key(key_tdeg(k1) + key_tdeg(k2), key_id(k2)), c1 * c2});
          }
        }
        const Terms bc = cache.get(b, c);
        for (const auto& [k1, c1] : bc) {
          for (const auto& [k2, c2] : cache.get(a, key_id(k1))) {
            acc.push_back(Term{make_key(key_tdeg(k1) + key_tdeg(k2), key_id(k2)), -(c1 * c2)});
          }
        }
        bool ok = cancels(acc);
        report.expect(label, ok, [&] {
          const Scalar one = alg.scalar(1);
          DeformElement x(SmashElement(table.at(a), one));
          DeformElement y(SmashElement(table.at(b), one));
          DeformElement z(SmashElement(table.at(c), one));
          DeformElement lhs = star.multiply(star.multiply(x, y), z);
          DeformElement rhs = star.multiply(x, star.multiply(y, z));
          return Witness{triple_name(table.at(a), table.at(b), table.at(c)), lhs.to_string(), rhs.to_string()};
        });
      }
    }
  }
  return report;
}

CheckReport cocycle_check(const AlgebraSpec& alg, std::uint32_t degree_bound, const BilinearMap& mu,
                          const std::string& label) {
  CheckReport report("cocycle identity up to degree " + std::to_string(degree_bound));
  report.entry(label);
  MonomialTable table;
  std::vector<std::uint32_t> basis;
  for (const auto& m : basis_monomials(alg, degree_bound)) basis.push_back(table.intern(m));
  const Scalar one = alg.scalar(1);

  std::unordered_map<Key, Terms> mu_cache;
  std::unordered_map<Key, std::pair<std::uint32_t, Scalar>> prod_cache;
  auto mu_of = [&](std::uint32_t a, std::uint32_t b) -> const Terms& {
    auto [it, inserted] = mu_cache.try_emplace(pair_key(a, b));
    if (inserted) {
      SmashElement value = mu(SmashElement(table.at(a), one), SmashElement(table.at(b), one));
      for (const auto& [m, c] : value.terms()) it->second.push_back(Term{table.intern(m), c});
    }
    return it->second;
  };
  auto prod = [&](std::uint32_t a, std::uint32_t b) -> const std::pair<std::uint32_t, Scalar>& {
    auto [it, inserted] = prod_cache.try_emplace(pair_key(a, b));
    if (inserted) {
      auto [c, m] = monomial_mul(alg, table.at(a), table.at(b));
      it->second = {table.intern(m), std::move(c)};
    }
    return it->second;
  };

  Terms acc;
  for (auto a : basis) {
    for (auto b : basis) {
      const auto ab = prod(a, b);
      const Terms mu_ab = mu_of(a, b);
      for (auto c : basis) {
        acc.clear();
        // a mu(b,c)
        for (const auto& [m, s] : mu_of(b, c)) {
          const auto& [id, coef] = prod(a, key_id(m));
          acc.push_back(Term{id, coef * s});
        }
        // mu(a,bc)
        const auto bc = prod(b, c);
        for (const auto& [m, s] : mu_of(a, bc.first)) acc.push_back(Term{m, bc.second * s});
        // -mu(ab,c)
        for (const auto& [m, s] : mu_of(ab.first, c)) acc.push_back(Term{m, -(ab.second * s)});
        // -mu(a,b) c
        for (const auto& [m, s] : mu_ab) {
          const auto& [id, coef] = prod(key_id(m), c);
          acc.push_back(Term{id, -(coef * s)});
        }
        bool ok = cancels(acc);
        report.expect(label, ok, [&] {
          SmashElement x(table.at(a), one);
          SmashElement y(table.at(b), one);
          SmashElement z(table.at(c), one);
          SmashElement lhs = element_mul(alg, x, mu(y, z)) + mu(x, element_mul(alg, y, z));
          SmashElement rhs = mu(element_mul(alg, x, y), z) + element_mul(alg, mu(x, y), z);
          return Witness{triple_name(table.at(a), table.at(b), table.at(c)), lhs.to_string(), rhs.to_string()};
        });
      }
    }
  }
  return report;
}

CheckReport cocycle_check_mu1(const HopfAction& action, std::uint32_t degree_bound) {
  const AlgebraSpec& alg = action.algebra();
  return cocycle_check(alg, degree_bound, [&](const SmashElement& a, const SmashElement& b) {
    return element_mul(alg, action.d1(a), action.d2(b));
  });
}

}  // namespace qdef
