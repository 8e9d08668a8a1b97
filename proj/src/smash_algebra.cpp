#include "qdef/smash_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qdef/expr_parser.hpp"

namespace qdef {

namespace {

std::uint32_t mod_unit(std::int64_t value, std::uint32_t modulus) {
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  return static_cast<std::uint32_t>(r < 0 ? r + modulus : r);
}

// A scalar with exactly one nonzero power-basis coefficient, which is negative.
bool is_negative_monomial(const Scalar& c) {
  int nonzero = 0;
  bool negative = false;
  for (const auto& x : c.coefficients()) {
    if (x.is_zero()) continue;
    ++nonzero;
    negative = x.sign() < 0;
  }
  return nonzero == 1 && negative;
}

}  // namespace

bool GroupElement::is_identity() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::uint32_t e) { return e == 0; });
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "g[(";
  for (std::size_t j = 0; j < exponents.size(); ++j) os << (j ? "," : "") << exponents[j];
  os << ")]";
  return os.str();
}

std::uint32_t SmashMonomial::degree() const { return std::accumulate(alpha.begin(), alpha.end(), 0u); }

std::size_t SmashMonomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : alpha) h = (h ^ e) * 0x100000001b3ull;
  h = (h ^ 0xff) * 0x100000001b3ull;
  for (auto e : g.exponents) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

std::string SmashMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    os << (first ? "" : "*") << 'w' << (i + 1);
    if (alpha[i] > 1) os << '^' << alpha[i];
    first = false;
  }
  if (!g.is_identity()) {
    os << (first ? "" : "*") << g.to_string();
    first = false;
  }
  return first ? "1" : os.str();
}

std::string render_term(const Scalar& coefficient, const std::string& body, bool first) {
  std::string sign;
  Scalar shown = coefficient;
  if (is_negative_monomial(coefficient)) {
    sign = first ? "-" : " - ";
    shown = -coefficient;
  } else {
    sign = first ? "" : " + ";
  }
  if (body == "1") return sign + shown.to_string();
  if (shown.is_one()) return sign + body;
  std::string c = shown.to_string();
  bool compound = c.find(' ') != std::string::npos;
  return sign + (compound ? "(" + c + ")" : c) + " * " + body;
}

SmashElement::SmashElement(SmashMonomial monomial, Scalar coefficient) {
  if (!coefficient.is_zero()) terms_.emplace_back(std::move(monomial), std::move(coefficient));
}

SmashElement SmashElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  SmashElement out;
  for (auto& term : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == term.first) {
      out.terms_.back().second += term.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else if (!term.second.is_zero()) {
      out.terms_.push_back(std::move(term));
    }
  }
  return out;
}

Scalar SmashElement::coefficient(const SmashMonomial& monomial) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                             [](const Term& t, const SmashMonomial& m) { return t.first < m; });
  if (it != terms_.end() && it->first == monomial) return it->second;
  return Scalar(0);
}

SmashElement SmashElement::operator-() const {
  SmashElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

SmashElement SmashElement::scaled(const Scalar& factor) const {
  if (factor.is_zero()) return {};
  SmashElement out = *this;
  for (auto& t : out.terms_) t.second *= factor;
  return out;
}

SmashElement operator+(const SmashElement& a, const SmashElement& b) {
  SmashElement out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.terms_.push_back(*j++);
    } else {
      Scalar sum = i->second + j->second;
      if (!sum.is_zero()) out.terms_.emplace_back(i->first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

std::string SmashElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) out += render_term(terms_[i].second, terms_[i].first.to_string(), i == 0);
  return out;
}

std::ostream& operator<<(std::ostream& os, const SmashElement& value) { return os << value.to_string(); }

AlgebraSpec::AlgebraSpec(const CyclotomicField& field, std::vector<std::vector<Scalar>> qmatrix,
                         std::vector<std::uint32_t> group_orders, std::vector<std::vector<Scalar>> characters)
    : field_(&field),
      k_(qmatrix.size()),
      qmatrix_(std::move(qmatrix)),
      orders_(std::move(group_orders)),
      characters_(std::move(characters)) {
  if (k_ == 0) throw SpecError("dimension k must be positive");
  auto bind = [this](Scalar& s) {
    if (s.field() && s.field() != field_) throw SpecError("scalar from a different field");
    if (!s.field()) s = Scalar(*field_, 0) + s;
  };
  for (auto& row : qmatrix_) {
    if (row.size() != k_) throw SpecError("q-matrix must be square");
    for (auto& s : row) bind(s);
  }
  for (auto n : orders_) {
    if (n == 0) throw SpecError("group generator order must be positive");
  }
  if (characters_.size() != k_) throw SpecError("need one character row per variable");
  for (auto& row : characters_) {
    if (row.size() != orders_.size()) throw SpecError("need one character value per group generator");
    for (auto& s : row) bind(s);
  }
  for (std::size_t i = 0; i < k_; ++i) {
    if (!qmatrix_[i][i].is_one()) {
      throw SpecError("q(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") must be 1");
    }
    for (std::size_t j = 0; j < k_; ++j) {
      if (qmatrix_[i][j].is_zero() || !(qmatrix_[i][j] * qmatrix_[j][i]).is_one()) {
        throw SpecError("inverse-pair violation: q(" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        ") = " + qmatrix_[j][i].to_string() + " is not the inverse of q(" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ") = " + qmatrix_[i][j].to_string());
      }
    }
  }

  unit_order_ = field_->unit_order();
  Scalar generator = field_->n() % 2 == 0 ? zeta(1) : -zeta(1);
  units_.reserve(unit_order_);
  Scalar power = scalar(1);
  for (std::uint32_t e = 0; e < unit_order_; ++e) {
    units_.push_back(power);
    power *= generator;
  }

  q_log_.resize(k_ * k_);
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      q_log_[i * k_ + j] = unit_log(qmatrix_[i][j]);
      if (!q_log_[i * k_ + j]) q_all_units_ = false;
    }
  }
  chi_log_.resize(k_ * orders_.size());
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      auto log = unit_log(characters_[i][j]);
      if (!log || !characters_[i][j].pow(orders_[j]).is_one()) {
        throw SpecError("chi_" + std::to_string(i + 1) + "(generator " + std::to_string(j + 1) + ") = " +
                        characters_[i][j].to_string() + " is not a root of unity of order dividing " +
                        std::to_string(orders_[j]));
      }
      chi_log_[i * orders_.size() + j] = *log;
    }
  }
}

std::size_t AlgebraSpec::group_order() const {
  std::size_t out = 1;
  for (auto n : orders_) out *= n;
  return out;
}

const Scalar& AlgebraSpec::unit(std::int64_t log) const { return units_[mod_unit(log, unit_order_)]; }

std::optional<std::uint32_t> AlgebraSpec::unit_log(const Scalar& value) const {
  for (std::uint32_t e = 0; e < units_.size(); ++e) {
    if (units_[e] == value) return e;
  }
  return std::nullopt;
}

std::uint32_t AlgebraSpec::chi_log(std::size_t i, const GroupElement& g) const {
  std::int64_t sum = 0;
  std::size_t m = orders_.size();
  for (std::size_t j = 0; j < m; ++j) sum += std::int64_t(chi_log_[i * m + j]) * g.exponents[j];
  return mod_unit(sum, unit_order_);
}

std::optional<std::uint32_t> AlgebraSpec::q_log(std::size_t i, std::size_t j) const { return q_log_[i * k_ + j]; }

Scalar AlgebraSpec::chi(std::size_t i, const GroupElement& g) const { return unit(chi_log(i, g)); }

Scalar AlgebraSpec::character(const Exponents& alpha, const GroupElement& g) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) sum += std::int64_t(alpha[i]) * chi_log(i, g);
  }
  return unit(sum);
}

GroupElement AlgebraSpec::identity() const {
  GroupElement g;
  g.exponents.assign(orders_.size(), 0);
  return g;
}

GroupElement AlgebraSpec::generator(std::size_t j) const {
  GroupElement g = identity();
  g.exponents.at(j) = orders_[j] > 1 ? 1 : 0;
  return g;
}

GroupElement AlgebraSpec::group_element(std::span<const std::int64_t> exponents) const {
  if (exponents.size() != orders_.size()) throw SpecError("group element has the wrong number of exponents");
  GroupElement g;
  for (std::size_t j = 0; j < orders_.size(); ++j) g.exponents.push_back(mod_unit(exponents[j], orders_[j]));
  return g;
}

GroupElement AlgebraSpec::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement g;
  g.exponents.resize(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) g.exponents[j] = (a.exponents[j] + b.exponents[j]) % orders_[j];
  return g;
}

GroupElement AlgebraSpec::inverse(const GroupElement& g) const {
  GroupElement out;
  out.exponents.resize(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) out.exponents[j] = (orders_[j] - g.exponents[j]) % orders_[j];
  return out;
}

std::vector<GroupElement> AlgebraSpec::group_elements() const {
  std::vector<GroupElement> out;
  GroupElement g = identity();
  while (true) {
    out.push_back(g);
    std::size_t j = orders_.size();
    while (j-- > 0) {
      if (++g.exponents[j] < orders_[j]) break;
      g.exponents[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

SmashMonomial AlgebraSpec::unit_monomial() const {
  SmashMonomial m;
  m.alpha.assign(k_, 0);
  m.g = identity();
  return m;
}

SmashMonomial AlgebraSpec::variable(std::size_t i) const {
  SmashMonomial m = unit_monomial();
  m.alpha.at(i) = 1;
  return m;
}

SmashMonomial AlgebraSpec::group_monomial(const GroupElement& g) const {
  SmashMonomial m = unit_monomial();
  m.g = g;
  return m;
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  return a.field_ == b.field_ && a.qmatrix_ == b.qmatrix_ && a.orders_ == b.orders_ && a.characters_ == b.characters_;
}

std::pair<Scalar, SmashMonomial> monomial_mul(const AlgebraSpec& spec, const SmashMonomial& m1,
                                              const SmashMonomial& m2) {
  const std::size_t k = spec.num_vars();
  SmashMonomial out;
  out.alpha.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.alpha[i] = m1.alpha[i] + m2.alpha[i];
  out.g = spec.multiply(m1.g, m2.g);

  // g1 passes w^beta: prod chi_i(g1)^{beta_i}; then w^alpha w^beta is
  // reordered, each w_j^{beta_j} crossing w_i^{alpha_i} (i > j) for q_ij^{alpha_i beta_j}.
  std::int64_t log = 0;
  Scalar slow;
  bool fast = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (m2.alpha[i] != 0) log += std::int64_t(m2.alpha[i]) * spec.chi_log(i, m1.g);
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (m1.alpha[i] == 0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (m2.alpha[j] == 0) continue;
      std::int64_t power = std::int64_t(m1.alpha[i]) * m2.alpha[j];
      if (auto ql = spec.q_log(i, j)) {
        log += power * *ql;
      } else {
        Scalar factor = spec.q(i, j).pow(power);
        slow = fast ? factor : slow * factor;
        fast = false;
      }
    }
  }
  Scalar coefficient = spec.unit(log);
  if (!fast) coefficient *= slow;
  return {std::move(coefficient), std::move(out)};
}

SmashElement element_mul(const AlgebraSpec& spec, const SmashElement& a, const SmashElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<SmashElement::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [c, m] = monomial_mul(spec, ma, mb);
      terms.emplace_back(std::move(m), c * ca * cb);
    }
  }
  if (terms.size() == 1) return SmashElement(std::move(terms[0].first), std::move(terms[0].second));
  return SmashElement::from_terms(std::move(terms));
}

SmashElement group_act(const AlgebraSpec& spec, const GroupElement& g, const SmashElement& a) {
  std::vector<SmashElement::Term> terms;
  terms.reserve(a.size());
  for (const auto& [m, c] : a.terms()) terms.emplace_back(m, c * spec.character(m.alpha, g));
  return SmashElement::from_terms(std::move(terms));
}

std::vector<Letter> letters(const AlgebraSpec& spec, const SmashMonomial& monomial) {
  std::vector<Letter> word;
  for (std::size_t i = 0; i < monomial.alpha.size(); ++i) {
    for (std::uint32_t e = 0; e < monomial.alpha[i]; ++e) word.push_back(Letter::variable(i));
  }
  for (std::size_t j = 0; j < spec.num_generators(); ++j) {
    for (std::uint32_t e = 0; e < monomial.g.exponents[j]; ++e) word.push_back(Letter::group(spec.generator(j)));
  }
  return word;
}

SmashElement free_reduce_oracle(const AlgebraSpec& spec, std::span<const Letter> input) {
  std::vector<Letter> word(input.begin(), input.end());
  Scalar coefficient = spec.scalar(1);
  auto chi_plain = [&spec](std::size_t i, const GroupElement& g) {
    Scalar v = spec.scalar(1);
    for (std::size_t j = 0; j < spec.num_generators(); ++j) v *= spec.chi_generator(i, j).pow(g.exponents[j]);
    return v;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      Letter& x = word[p];
      Letter& y = word[p + 1];
      if (!x.is_variable() && !y.is_variable()) {
        x.element = spec.multiply(x.element, y.element);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      } else if (!x.is_variable() && y.is_variable()) {
        coefficient *= chi_plain(y.var, x.element);
        std::swap(x, y);
      } else if (x.is_variable() && y.is_variable() && x.var > y.var) {
        coefficient *= spec.q(x.var, y.var);
        std::swap(x, y);
      } else {
        continue;
      }
      changed = true;
      break;
    }
  }
  SmashMonomial m = spec.unit_monomial();
  for (const auto& letter : word) {
    if (letter.is_variable()) {
      ++m.alpha[letter.var];
    } else {
      m.g = letter.element;
    }
  }
  return SmashElement(std::move(m), std::move(coefficient));
}

std::vector<Exponents> exponent_vectors(std::size_t k, std::uint32_t degree) {
  std::vector<Exponents> out;
  Exponents current(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
    if (pos + 1 == k) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
      current[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (k > 0) rec(rec, 0, degree);
  return out;
}

std::vector<SmashMonomial> basis_monomials(const AlgebraSpec& spec, std::uint32_t max_degree) {
  std::vector<SmashMonomial> out;
  auto group = spec.group_elements();
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    for (auto& alpha : exponent_vectors(spec.num_vars(), d)) {
      for (const auto& g : group) out.push_back(SmashMonomial{alpha, g});
    }
  }
  return out;
}

SmashElement parse_element(std::string_view text, const AlgebraSpec& spec) {
  ExprGrammar<SmashElement> grammar;
  grammar.atom = [&spec](Cursor& cur) -> SmashElement {
    if (cur.accept('z')) {
      std::int64_t e = 1;
      if (cur.accept('^')) e = cur.read_int();
      return spec.one().scaled(spec.zeta(e));
    }
    if (cur.accept('w')) {
      std::int64_t i = cur.read_int();
      if (i < 1 || static_cast<std::size_t>(i) > spec.num_vars()) cur.fail("variable index out of range");
      std::int64_t e = 1;
      if (cur.accept('^')) e = cur.read_int();
      if (e < 0) cur.fail("negative variable exponent");
      SmashMonomial m = spec.unit_monomial();
      m.alpha[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(e);
      return SmashElement(m, spec.scalar(1));
    }
    if (cur.accept('g')) {
      cur.expect('[');
      cur.expect('(');
      std::vector<std::int64_t> exps;
      if (!cur.accept(')')) {
        do {
          exps.push_back(cur.read_int());
        } while (cur.accept(','));
        cur.expect(')');
      }
      cur.expect(']');
      if (exps.size() != spec.num_generators()) cur.fail("group element has the wrong number of exponents");
      return spec.element(spec.group_element(exps));
    }
    if (!cur.peek_digit()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
    std::string literal(cur.read_digits());
    if (cur.accept('/')) literal += "/" + std::string(cur.read_digits());
    try {
      return spec.one().scaled(spec.scalar(Rational::parse(literal)));
    } catch (const DivisionByZero&) {
      cur.fail("zero denominator");
    }
  };
  grammar.add = [](const SmashElement& a, const SmashElement& b) { return a + b; };
  grammar.mul = [&spec](const SmashElement& a, const SmashElement& b) { return element_mul(spec, a, b); };
  grammar.neg = [](const SmashElement& a) { return -a; };
  return grammar.parse(text);
}

}  // namespace qdef
