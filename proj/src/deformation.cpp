#include "qdef/deformation.hpp"

namespace qdef {

namespace {

std::string t_body(unsigned d, const std::string& monomial) {
  if (d == 0) return monomial;
  std::string t = d == 1 ? "t" : "t^" + std::to_string(d);
  return monomial == "1" ? t : t + " * " + monomial;
}

std::string render(const DeformElement& e, bool first) {
  std::string out;
  for (const auto& [d, value] : e.components()) {
    for (const auto& [m, c] : value.terms()) {
      out += render_term(c, t_body(d, m.to_string()), first);
      first = false;
    }
  }
  return out;
}

}  // namespace

SmashElement DeformElement::component(unsigned d) const {
  auto it = components_.find(d);
  return it == components_.end() ? SmashElement() : it->second;
}

void DeformElement::add(unsigned d, const SmashElement& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = components_.emplace(d, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) components_.erase(it);
  }
}

DeformElement DeformElement::operator-() const {
  DeformElement out = *this;
  for (auto& [d, v] : out.components_) v = -v;
  return out;
}

DeformElement DeformElement::scaled(const Scalar& factor) const {
  DeformElement out;
  for (const auto& [d, v] : components_) out.add(d, v.scaled(factor));
  return out;
}

DeformElement operator+(const DeformElement& a, const DeformElement& b) {
  DeformElement out = a;
  for (const auto& [d, v] : b.components_) out.add(d, v);
  return out;
}

std::string DeformElement::to_string() const { return is_zero() ? "0" : render(*this, true); }

std::string DeformElement::render_tail() const { return render(*this, false); }

StarProduct::StarProduct(const HopfAction& action, DeformationConfig config) : action_(action), config_(config) {
  if (config_.t_cap < 1) throw SpecError("t_cap must be at least 1");
}

const Scalar& StarProduct::weight(unsigned i) const {
  while (weights_.size() <= i) {
    Scalar f = quantum_factorial(static_cast<unsigned>(weights_.size()), action_.q());
    weights_.push_back(f.is_zero() ? f : f.inverse());
  }
  return weights_[i];
}

DeformElement StarProduct::udf_pair(const SmashElement& a, const SmashElement& b) const {
  DeformElement out;
  auto n = action_.nilpotency_order();
  SmashElement x = a;
  SmashElement y = b;
  for (unsigned i = 0;; ++i) {
    if (x.is_zero() || y.is_zero()) break;
    if (n && i >= *n) break;
    if (!n && i > config_.t_cap) {
      throw NonterminationError("deformation sum did not vanish by t^" + std::to_string(config_.t_cap));
    }
    out.add(i, element_mul(algebra(), x, y).scaled(weight(i)));
    x = action_.d1(x);
    y = action_.d2(y);
  }
  return out;
}

DeformElement StarProduct::multiply(const DeformElement& a, const DeformElement& b) const {
  DeformElement out;
  for (const auto& [da, va] : a.components()) {
    for (const auto& [db, vb] : b.components()) {
      const DeformElement product = udf_pair(va, vb);
      for (const auto& [d, v] : product.components()) out.add(da + db + d, v);
    }
  }
  return out;
}

DeformElement StarProduct::deformed_relation(std::size_t i, std::size_t j) const {
  const AlgebraSpec& alg = algebra();
  return udf_pair(alg.w(i), alg.w(j)) - udf_pair(alg.w(j), alg.w(i)).scaled(alg.q(i, j));
}

SmashElement StarProduct::mu1(const SmashElement& a, const SmashElement& b) const {
  return element_mul(algebra(), action_.d1(a), action_.d2(b));
}

Presentation presentation_report(const StarProduct& star) {
  const AlgebraSpec& alg = star.algebra();
  Presentation out;
  for (std::size_t j = 0; j < alg.num_generators(); ++j) {
    out.group += (j ? " x Z" : "Z") + std::to_string(alg.group_orders()[j]);
  }
  if (out.group.empty()) out.group = "trivial";

  for (std::size_t i = 0; i < alg.num_vars(); ++i) {
    for (std::size_t j = i + 1; j < alg.num_vars(); ++j) {
      std::string wi = "w" + std::to_string(i + 1);
      std::string wj = "w" + std::to_string(j + 1);
      DeformElement tail = star.deformed_relation(i, j);
      std::string line = wi + "*" + wj + render_term(-alg.q(i, j), wj + "*" + wi, false);
      out.relations.push_back(line + (-tail).render_tail() + " = 0");
    }
  }

  for (std::size_t j = 0; j < alg.num_generators(); ++j) {
    if (alg.group_orders()[j] == 1) continue;
    GroupElement g = alg.generator(j);
    for (std::size_t i = 0; i < alg.num_vars(); ++i) {
      std::string wi = "w" + std::to_string(i + 1);
      Scalar chi = alg.chi(i, g);
      DeformElement tail = star.udf_pair(alg.element(g), alg.w(i)) - star.udf_pair(alg.w(i), alg.element(g)).scaled(chi);
      std::string line = g.to_string() + "*" + wi + render_term(-chi, wi + "*" + g.to_string(), false);
      out.group_relations.push_back(line + (-tail).render_tail() + " = 0");
    }
  }
  return out;
}

}  // namespace qdef
