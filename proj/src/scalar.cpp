#include "qdef/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qdef/expr_parser.hpp"

namespace qdef {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

CyclotomicField::CyclotomicField(unsigned n) : n_(n), modulus_(cyclotomic_polynomial(n)) {
  std::size_t deg = degree();
  // x^deg = -(Phi_n - x^deg); later powers by shifting and folding back.
  IntPoly current(modulus_.begin(), modulus_.end() - 1);
  for (auto& c : current) c = -c;
  for (std::size_t e = deg; deg > 0 && e + 2 <= 2 * deg; ++e) {
    high_powers_.push_back(current);
    IntPoly next(deg, 0);
    std::int64_t top = current[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) next[i] = current[i - 1];
    for (std::size_t i = 0; i < deg; ++i) next[i] -= top * modulus_[i];
    current = std::move(next);
  }
}

const CyclotomicField& CyclotomicField::get(unsigned n) {
  if (n == 0) throw std::invalid_argument("field order must be at least 1");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[n];
  if (!slot) slot.reset(new CyclotomicField(n));
  return *slot;
}

std::span<const std::int64_t> CyclotomicField::reduced_power(std::size_t e) const {
  return high_powers_.at(e - degree());
}

Scalar::Scalar(Rational value) {
  if (!value.is_zero()) coeffs_.push_back(std::move(value));
}

Scalar::Scalar(const CyclotomicField& field, Rational value) : Scalar(std::move(value)) { field_ = &field; }

Scalar Scalar::zeta_power(const CyclotomicField& field, std::int64_t exponent) {
  std::int64_t n = field.n();
  std::int64_t e = ((exponent % n) + n) % n;
  // Build x^e and reduce; e < n so repeated multiplication by z is enough.
  Scalar z;
  z.field_ = &field;
  if (field.degree() == 1) {
    // Q(zeta_1) = Q with z = 1, Q(zeta_2) = Q with z = -1.
    z.coeffs_.push_back(Rational(-field.modulus()[0]));
  } else {
    z.coeffs_ = {Rational(0), Rational(1)};
  }
  z.trim();
  Scalar out(field, 1);
  Scalar base = z;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Scalar Scalar::from_coefficients(const CyclotomicField& field, std::span<const Rational> coefficients) {
  Scalar out(field, 0);
  std::size_t deg = field.degree();
  out.coeffs_.assign(deg, Rational(0));
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i < deg) {
      out.coeffs_[i] += coefficients[i];
    } else {
      out += Scalar::zeta_power(field, static_cast<std::int64_t>(i)) * Scalar(field, coefficients[i]);
    }
  }
  out.trim();
  return out;
}

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const CyclotomicField* Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_ || !b.field_) return a.field_;
  if (!a.field_) return b.field_;
  throw FieldMismatch("scalars over Q(zeta_" + std::to_string(a.field_->n()) + ") and Q(zeta_" +
                      std::to_string(b.field_->n()) + ")");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out;
  out.field_ = Scalar::common_field(a, b);
  const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  out.coeffs_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out.coeffs_[i] += shorter[i];
  out.trim();
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  out.field_ = Scalar::common_field(a, b);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
    const Scalar& poly = a.coeffs_.size() == 1 ? b : a;
    const Rational& c = a.coeffs_.size() == 1 ? a.coeffs_[0] : b.coeffs_[0];
    out.coeffs_ = poly.coeffs_;
    for (auto& x : out.coeffs_) x *= c;
    return out;
  }
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  Scalar::Coefficients raw(len, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  // Both operands have at least two coefficients, so a field is present.
  const CyclotomicField& field = *out.field_;
  std::size_t deg = field.degree();
  if (len > deg) {
    for (std::size_t e = deg; e < len; ++e) {
      if (raw[e].is_zero()) continue;
      auto reduced = field.reduced_power(e);
      for (std::size_t i = 0; i < deg; ++i) {
        if (reduced[i] != 0) raw[i] += raw[e] * Rational(reduced[i]);
      }
    }
    raw.resize(deg);
  }
  out.coeffs_ = std::move(raw);
  out.trim();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (coeffs_.size() == 1) {
    Scalar out = *this;
    out.coeffs_[0] = coeffs_[0].inverse();
    return out;
  }
  // Solve M x = e_0 where M is multiplication by *this on the power basis.
  const CyclotomicField& field = *field_;
  std::size_t deg = field.degree();
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
  for (std::size_t col = 0; col < deg; ++col) {
    Scalar basis = Scalar::zeta_power(field, static_cast<std::int64_t>(col));
    Scalar image = *this * basis;
    for (std::size_t row = 0; row < deg; ++row) m[row][col] = image.coefficient(row);
  }
  m[0][deg] = Rational(1);
  for (std::size_t col = 0; col < deg; ++col) {
    std::size_t pivot = col;
    while (pivot < deg && m[pivot][col].is_zero()) ++pivot;
    if (pivot == deg) throw DivisionByZero("singular multiplication matrix");
    std::swap(m[pivot], m[col]);
    Rational inv = m[col][col].inverse();
    for (auto& x : m[col]) x *= inv;
    for (std::size_t row = 0; row < deg; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational f = m[row][col];
      for (std::size_t j = col; j <= deg; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> solution(deg);
  for (std::size_t i = 0; i < deg; ++i) solution[i] = m[i][deg];
  return Scalar::from_coefficients(field, solution);
}

Scalar Scalar::pow(std::int64_t exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Scalar out = field_ ? Scalar(*field_, 1) : Scalar(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::common_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::size_t Scalar::hash() const {
  std::size_t h = coeffs_.size();
  for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
  return h;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = c.abs();
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.to_string(); }

Scalar parse_scalar(std::string_view text, const CyclotomicField& field) {
  ExprGrammar<Scalar> grammar;
  grammar.atom = [&field](Cursor& cur) -> Scalar {
    if (cur.accept('z')) {
      std::int64_t e = 1;
      if (cur.accept('^')) e = cur.read_int();
      return Scalar::zeta_power(field, e);
    }
    if (!cur.peek_digit()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
    std::string literal(cur.read_digits());
    if (cur.accept('/')) literal += "/" + std::string(cur.read_digits());
    try {
      return Scalar(field, Rational::parse(literal));
    } catch (const DivisionByZero&) {
      cur.fail("zero denominator");
    }
  };
  grammar.add = [](const Scalar& a, const Scalar& b) { return a + b; };
  grammar.mul = [](const Scalar& a, const Scalar& b) { return a * b; };
  grammar.neg = [](const Scalar& a) { return -a; };
  Scalar out = grammar.parse(text);
  return out.field() ? out : Scalar(field, 0) + out;
}

Scalar quantum_integer(unsigned i, const Scalar& q) {
  Scalar sum = q.field() ? Scalar(*q.field(), 0) : Scalar(0);
  Scalar power = q.field() ? Scalar(*q.field(), 1) : Scalar(1);
  for (unsigned s = 0; s < i; ++s) {
    sum += power;
    power *= q;
  }
  return sum;
}

Scalar quantum_factorial(unsigned i, const Scalar& q) {
  Scalar out = q.field() ? Scalar(*q.field(), 1) : Scalar(1);
  for (unsigned s = 1; s <= i; ++s) out *= quantum_integer(s, q);
  return out;
}

bool is_primitive_root(const Scalar& q, unsigned n) {
  if (n == 0 || q.is_zero()) return false;
  if (!q.pow(n).is_one()) return false;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0 && q.pow(d).is_one()) return false;
  }
  return true;
}

std::optional<unsigned> root_of_unity_order(const Scalar& q) {
  if (q.is_zero()) return std::nullopt;
  unsigned bound = q.field() ? q.field()->unit_order() : 2;
  if (!q.pow(bound).is_one()) return std::nullopt;
  for (unsigned d = 1; d <= bound; ++d) {
    if (bound % d == 0 && q.pow(d).is_one()) return d;
  }
  return std::nullopt;
}

}  // namespace qdef
