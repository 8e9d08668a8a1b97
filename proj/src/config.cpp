#include "qdef/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "qdef/expr_parser.hpp"

namespace qdef {

namespace {

std::string format_error(std::size_t line, const std::string& key, const std::string& message) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!key.empty()) out += key + ": ";
  return out + message;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

struct Entry {
  std::size_t line = 0;
  std::string key;   // normalized, e.g. "q(1,2)"
  std::string base;  // "q"
  std::string arg;   // "1,2", empty when the key takes no argument
  std::string value;
  bool used = false;
};

const std::set<std::string> kSections = {"", "field", "algebra", "action", "run"};

class Section {
 public:
  explicit Section(std::string name) : name_(std::move(name)) {}
  const std::string& name() const { return name_; }

  void add(Entry e) {
    for (const auto& other : entries_) {
      if (other.key == e.key) {
        throw ConfigError(e.line, e.key, "duplicate key (first given on line " + std::to_string(other.line) + ")");
      }
    }
    entries_.push_back(std::move(e));
  }

  Entry* find(const std::string& key) {
    for (auto& e : entries_) {
      if (e.key == key) {
        e.used = true;
        return &e;
      }
    }
    return nullptr;
  }

  Entry& require(const std::string& key) {
    if (Entry* e = find(key)) return *e;
    throw ConfigError(0, name_.empty() ? key : "[" + name_ + "] " + key, "missing required key");
  }

  /// Marks and returns every entry with the given base name.
  std::vector<Entry*> with_base(const std::string& base) {
    std::vector<Entry*> out;
    for (auto& e : entries_) {
      if (e.base == base && !e.arg.empty()) {
        e.used = true;
        out.push_back(&e);
      }
    }
    return out;
  }

  void reject_unused() const {
    for (const auto& e : entries_) {
      if (!e.used) throw ConfigError(e.line, e.key, "unknown key in " + (name_.empty() ? "top level" : "[" + name_ + "]"));
    }
  }

 private:
  std::string name_;
  std::vector<Entry> entries_;
};

template <class F>
auto at_entry(const Entry& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ConfigError(e.line, e.key, ex.what());
  }
}

std::uint64_t parse_uint(const Entry& e, std::string_view text) {
  std::string t = trim(text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(e.line, e.key, "expected a non-negative integer, got '" + t + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Scalar> parse_scalar_list(const Entry& e, const CyclotomicField& field, std::size_t expected) {
  auto parts = split(e.value, ',');
  if (parts.size() != expected) {
    throw ConfigError(e.line, e.key,
                      "expected " + std::to_string(expected) + " values, got " + std::to_string(parts.size()));
  }
  std::vector<Scalar> out;
  for (const auto& p : parts) out.push_back(at_entry(e, [&] { return parse_scalar(p, field); }));
  return out;
}

std::size_t parse_index(const Entry& e, std::string_view text, std::size_t count, const char* what) {
  std::uint64_t v = parse_uint(e, text);
  if (v < 1 || v > count) {
    throw ConfigError(e.line, e.key, std::string(what) + " index must be between 1 and " + std::to_string(count));
  }
  return static_cast<std::size_t>(v - 1);
}

GroupElement parse_group_tuple(const Entry& e, const AlgebraSpec& alg) {
  return at_entry(e, [&] {
    Cursor cur(e.value);
    cur.expect('(');
    std::vector<std::int64_t> exps;
    if (!cur.accept(')')) {
      do {
        exps.push_back(cur.read_int());
      } while (cur.accept(','));
      cur.expect(')');
    }
    if (!cur.at_end()) cur.fail("trailing input");
    if (exps.size() != alg.num_generators()) cur.fail("group element has the wrong number of exponents");
    return alg.group_element(exps);
  });
}

SmashElement parse_polynomial(const Entry& e, const AlgebraSpec& alg) {
  SmashElement p = at_entry(e, [&] { return parse_element(e.value, alg); });
  for (const auto& [m, c] : p.terms()) {
    if (!m.g.is_identity()) throw ConfigError(e.line, e.key, "must lie in S_q(V) (no group part)");
  }
  return p;
}

struct Parsed {
  Section top{""};
  std::map<std::string, Section> sections;
};

Parsed tokenize(std::string_view text) {
  Parsed out;
  Section* current = &out.top;
  std::set<std::string> seen_sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "", "unterminated section header");
      std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (name.empty() || !kSections.contains(name)) throw ConfigError(line_no, "", "unknown section [" + name + "]");
      if (!seen_sections.insert(name).second) throw ConfigError(line_no, "", "duplicate section [" + name + "]");
      current = &out.sections.emplace(name, Section(name)).first->second;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line_no, "", "expected 'key = value'");
    Entry e;
    e.line = line_no;
    e.key = strip_spaces(std::string_view(line).substr(0, eq));
    e.value = trim(std::string_view(line).substr(eq + 1));
    if (e.key.empty()) throw ConfigError(line_no, "", "missing key");
    static const std::regex key_re(R"(([A-Za-z_][A-Za-z0-9_]*)(?:\(([^()]+)\))?)");
    std::smatch match;
    if (!std::regex_match(e.key, match, key_re)) throw ConfigError(line_no, e.key, "malformed key");
    e.base = match[1];
    e.arg = match[2];
    if (e.value.empty()) throw ConfigError(line_no, e.key, "missing value");
    current->add(std::move(e));
  }
  return out;
}

Section& section(Parsed& p, const std::string& name) {
  auto it = p.sections.find(name);
  if (it == p.sections.end()) throw ConfigError(0, "", "missing section [" + name + "]");
  return it->second;
}

std::vector<std::uint32_t> parse_group(const Entry& e) {
  std::vector<std::uint32_t> orders;
  std::string v = strip_spaces(e.value);
  if (v == "trivial") return orders;
  for (const auto& part : split(v, 'x')) {
    std::uint64_t n = parse_uint(e, part);
    if (n < 1 || n > 1000) throw ConfigError(e.line, e.key, "cyclic factor orders must be between 1 and 1000");
    orders.push_back(static_cast<std::uint32_t>(n));
  }
  return orders;
}

AlgebraSpec parse_algebra(Section& sec, const CyclotomicField& field) {
  Entry& ke = sec.require("k");
  std::uint64_t k = parse_uint(ke, ke.value);
  if (k < 1 || k > 16) throw ConfigError(ke.line, ke.key, "k must be between 1 and 16");
  std::vector<std::uint32_t> orders = parse_group(sec.require("group"));
  const std::size_t m = orders.size();

  std::vector<std::vector<std::optional<Scalar>>> given(k, std::vector<std::optional<Scalar>>(k));
  for (Entry* e : sec.with_base("q")) {
    auto idx = split(e->arg, ',');
    if (idx.size() != 2) throw ConfigError(e->line, e->key, "expected q(i,j)");
    std::size_t i = parse_index(*e, idx[0], k, "variable");
    std::size_t j = parse_index(*e, idx[1], k, "variable");
    given[i][j] = at_entry(*e, [&] { return parse_scalar(e->value, field); });
  }
  std::vector<std::vector<Scalar>> q(k, std::vector<Scalar>(k, Scalar(field, 1)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (given[i][j]) {
        q[i][j] = *given[i][j];
      } else if (given[j][i] && i != j) {
        if (given[j][i]->is_zero()) throw ConfigError(0, "q(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")", "must be nonzero");
        q[i][j] = given[j][i]->inverse();
      }
    }
  }

  std::vector<std::vector<Scalar>> chars(k, std::vector<Scalar>(m, Scalar(field, 1)));
  for (Entry* e : sec.with_base("chi")) {
    std::size_t i = parse_index(*e, e->arg, k, "variable");
    chars[i] = parse_scalar_list(*e, field, m);
  }
  sec.reject_unused();
  try {
    return AlgebraSpec(field, std::move(q), std::move(orders), std::move(chars));
  } catch (const SpecError& ex) {
    throw ConfigError(0, "[algebra]", ex.what());
  }
}

std::vector<Scalar> parse_xi(Section& sec, const AlgebraSpec& alg) {
  if (Entry* e = sec.find("xi")) return parse_scalar_list(*e, alg.field(), alg.num_generators());
  if (alg.num_generators() == 0) return {};
  throw ConfigError(0, "[action] xi", "missing required key");
}

SpecialActionSpec parse_special(Section& sec, const AlgebraSpec& alg) {
  const std::size_t k = alg.num_vars();
  SpecialActionSpec s;
  Entry& qe = sec.require("q");
  s.q = at_entry(qe, [&] { return parse_scalar(qe.value, alg.field()); });
  s.lambda = parse_scalar_list(sec.require("lambda"), alg.field(), k);
  s.xi_on_gens = parse_xi(sec, alg);
  s.p1 = parse_polynomial(sec.require("P1"), alg);
  s.p2 = parse_polynomial(sec.require("P2"), alg);
  s.g1 = parse_group_tuple(sec.require("g1"), alg);
  s.g2 = parse_group_tuple(sec.require("g2"), alg);
  s.qp1.assign(k, std::nullopt);
  s.qp2.assign(k, std::nullopt);
  for (auto [base, target] : {std::pair{"qP1", &s.qp1}, std::pair{"qP2", &s.qp2}}) {
    for (Entry* e : sec.with_base(base)) {
      std::size_t j = parse_index(*e, e->arg, k, "variable");
      (*target)[j] = at_entry(*e, [&] { return parse_scalar(e->value, alg.field()); });
    }
  }
  return s;
}

GeneralActionSpec parse_general(Section& sec, const AlgebraSpec& alg) {
  const std::size_t k = alg.num_vars();
  const std::size_t m = alg.num_generators();
  GeneralActionSpec s;
  Entry& qe = sec.require("q");
  s.q = at_entry(qe, [&] { return parse_scalar(qe.value, alg.field()); });
  s.xi_on_gens = parse_xi(sec, alg);
  for (std::size_t i = 0; i < k; ++i) s.sigma_on_v.push_back(alg.w(i));
  for (Entry* e : sec.with_base("sigma")) {
    std::size_t i = parse_index(*e, e->arg, k, "variable");
    s.sigma_on_v[i] = at_entry(*e, [&] { return parse_element(e->value, alg); });
  }
  s.d1_on_v.assign(k, SmashElement());
  s.d2_on_v.assign(k, SmashElement());
  s.d1_on_gens.assign(m, SmashElement());
  s.d2_on_gens.assign(m, SmashElement());
  for (auto [base, on_v, on_g] :
       {std::tuple{"D1", &s.d1_on_v, &s.d1_on_gens}, std::tuple{"D2", &s.d2_on_v, &s.d2_on_gens}}) {
    for (Entry* e : sec.with_base(base)) {
      if (e->arg.size() < 2 || (e->arg[0] != 'w' && e->arg[0] != 'g')) {
        throw ConfigError(e->line, e->key, "argument must be w<i> or g<j>");
      }
      bool var = e->arg[0] == 'w';
      std::size_t idx = parse_index(*e, std::string_view(e->arg).substr(1), var ? k : m, var ? "variable" : "generator");
      SmashElement value = at_entry(*e, [&] { return parse_element(e->value, alg); });
      (var ? *on_v : *on_g)[idx] = std::move(value);
    }
  }
  return s;
}

std::string join_scalars(const std::vector<Scalar>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].to_string();
  return out;
}

std::string group_tuple(const GroupElement& g) {
  std::string out = "(";
  for (std::size_t j = 0; j < g.exponents.size(); ++j) out += (j ? "," : "") + std::to_string(g.exponents[j]);
  return out + ")";
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& key, const std::string& message)
    : std::runtime_error(format_error(line, key, message)), line_(line) {}

GeneralActionSpec ExampleConfig::general() const {
  if (const auto* s = std::get_if<SpecialActionSpec>(&action)) return s->to_general(algebra);
  return std::get<GeneralActionSpec>(action);
}

ExampleConfig parse_config(std::string_view text) {
  Parsed p = tokenize(text);
  std::string name = "unnamed";
  if (Entry* e = p.top.find("name")) name = e->value;
  p.top.reject_unused();

  Section& field_sec = section(p, "field");
  Entry& ne = field_sec.require("n");
  std::uint64_t n = parse_uint(ne, ne.value);
  if (n < 1 || n > 1000) throw ConfigError(ne.line, ne.key, "n must be between 1 and 1000");
  field_sec.reject_unused();
  const CyclotomicField& field = CyclotomicField::get(static_cast<unsigned>(n));

  AlgebraSpec alg = parse_algebra(section(p, "algebra"), field);

  Section& act = section(p, "action");
  Entry& te = act.require("type");
  std::optional<ActionData> action;
  if (te.value == "special") {
    action = parse_special(act, alg);
  } else if (te.value == "general") {
    action = parse_general(act, alg);
  } else {
    throw ConfigError(te.line, te.key, "expected 'special' or 'general'");
  }
  act.reject_unused();

  RunParams run;
  if (auto it = p.sections.find("run"); it != p.sections.end()) {
    Section& rs = it->second;
    if (Entry* e = rs.find("degree_bound")) {
      std::uint64_t v = parse_uint(*e, e->value);
      if (v > 64) throw ConfigError(e->line, e->key, "must be at most 64");
      run.degree_bound = static_cast<std::uint32_t>(v);
    }
    if (Entry* e = rs.find("t_cap")) {
      std::uint64_t v = parse_uint(*e, e->value);
      if (v < 1 || v > 1000) throw ConfigError(e->line, e->key, "must be between 1 and 1000");
      run.t_cap = static_cast<unsigned>(v);
    }
    rs.reject_unused();
  }

  ExampleConfig config{std::move(name), std::move(alg), std::move(*action), run};
  try {
    (void)config.make_action();
  } catch (const SpecError& ex) {
    throw ConfigError(0, "[action]", ex.what());
  }
  return config;
}

std::string print_config(const ExampleConfig& c) {
  const AlgebraSpec& alg = c.algebra;
  const std::size_t k = alg.num_vars();
  std::ostringstream out;
  out << "name = " << c.name << "\n\n[field]\nn = " << alg.field().n() << "\n\n[algebra]\nk = " << k << "\ngroup = ";
  if (alg.num_generators() == 0) out << "trivial";
  for (std::size_t j = 0; j < alg.num_generators(); ++j) out << (j ? " x " : "") << alg.group_orders()[j];
  out << "\n";
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) out << "q(" << i + 1 << "," << j + 1 << ") = " << alg.q(i, j) << "\n";
  }
  if (alg.num_generators() > 0) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < alg.num_generators(); ++j) row.push_back(alg.chi_generator(i, j));
      out << "chi(" << i + 1 << ") = " << join_scalars(row) << "\n";
    }
  }
  out << "\n[action]\n";
  if (const auto* s = std::get_if<SpecialActionSpec>(&c.action)) {
    out << "type = special\nq = " << s->q << "\nlambda = " << join_scalars(s->lambda) << "\n";
    if (!s->xi_on_gens.empty()) out << "xi = " << join_scalars(s->xi_on_gens) << "\n";
    out << "P1 = " << s->p1 << "\nP2 = " << s->p2 << "\n";
    out << "g1 = " << group_tuple(s->g1) << "\ng2 = " << group_tuple(s->g2) << "\n";
    for (auto [base, values] : {std::pair{"qP1", &s->qp1}, std::pair{"qP2", &s->qp2}}) {
      for (std::size_t j = 0; j < values->size(); ++j) {
        if ((*values)[j]) out << base << "(" << j + 1 << ") = " << *(*values)[j] << "\n";
      }
    }
  } else {
    const auto& g = std::get<GeneralActionSpec>(c.action);
    out << "type = general\nq = " << g.q << "\n";
    if (!g.xi_on_gens.empty()) out << "xi = " << join_scalars(g.xi_on_gens) << "\n";
    for (std::size_t i = 0; i < k; ++i) out << "sigma(" << i + 1 << ") = " << g.sigma_on_v[i] << "\n";
    for (auto [base, on_v, on_g] :
         {std::tuple{"D1", &g.d1_on_v, &g.d1_on_gens}, std::tuple{"D2", &g.d2_on_v, &g.d2_on_gens}}) {
      for (std::size_t i = 0; i < on_v->size(); ++i) {
        if (!(*on_v)[i].is_zero()) out << base << "(w" << i + 1 << ") = " << (*on_v)[i] << "\n";
      }
      for (std::size_t j = 0; j < on_g->size(); ++j) {
        if (!(*on_g)[j].is_zero()) out << base << "(g" << j + 1 << ") = " << (*on_g)[j] << "\n";
      }
    }
  }
  out << "\n[run]\ndegree_bound = " << c.run.degree_bound << "\nt_cap = " << c.run.t_cap << "\n";
  return out.str();
}

std::vector<std::string> builtin_presets() {
  return {"motivational-q2", "motivational-q3", "general-k4-n2-a1-b1"};
}

std::optional<FamilyParams> preset_family(std::string_view name) {
  static const std::regex motivational(R"(motivational-q([0-9]{1,3}))");
  static const std::regex general(R"(general-k([0-9]{1,2})-n([0-9]{1,3})-a([0-9]{1,3})-b([0-9]{1,3}))");
  std::string s(name);
  std::smatch m;
  FamilyParams p;
  if (std::regex_match(s, m, motivational)) {
    p.k = 3;
    p.n = static_cast<unsigned>(std::stoul(m[1]));
  } else if (std::regex_match(s, m, general)) {
    p.k = std::stoul(m[1]);
    p.n = static_cast<unsigned>(std::stoul(m[2]));
    if (p.k < 3 || p.k > 16) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (p.n < 2 || p.n > 60) return std::nullopt;
  p.alpha.assign(p.k - 2, 0);
  p.beta.assign(p.k - 2, 0);
  if (m.size() == 5) {
    p.alpha[0] = static_cast<std::uint32_t>(std::stoul(m[3]));
    p.beta[0] = static_cast<std::uint32_t>(std::stoul(m[4]));
  }
  return p;
}

std::optional<std::string> preset_text(std::string_view name) {
  auto family = preset_family(name);
  if (!family) return std::nullopt;
  const std::size_t k = family->k;
  const unsigned n = family->n;
  const std::uint32_t p1_exp = family->alpha[0] * n;
  const std::uint32_t p2_exp = family->beta[0] * n + 1;
  auto w3_power = [](std::uint32_t e) {
    if (e == 0) return std::string("1");
    return e == 1 ? std::string("w3") : "w3^" + std::to_string(e);
  };

  std::ostringstream out;
  out << "name = " << name << "\n\n[field]\nn = " << n << "\n\n[algebra]\nk = " << k << "\ngroup = " << n << " x " << n
      << "\n";
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) out << "q(" << i << "," << j << ") = " << (i == 1 ? "z" : "1") << "\n";
  }
  out << "chi(1) = z, 1\nchi(2) = 1, z\n";
  for (std::size_t i = 3; i <= k; ++i) out << "chi(" << i << ") = z, z\n";
  out << "\n[action]\ntype = special\nq = z\nlambda = z";
  for (std::size_t i = 2; i <= k; ++i) out << ", 1";
  out << "\nxi = z^-1, 1\n";
  out << "P1 = " << w3_power(p1_exp) << "\nP2 = " << w3_power(p2_exp) << "\n";
  out << "g1 = (0,1)\ng2 = (1,-1)\n";
  for (std::size_t j = 2; j <= k; ++j) out << "qP1(" << j << ") = 1\n";
  out << "qP2(1) = z^-" << p2_exp << "\n";
  for (std::size_t j = 3; j <= k; ++j) out << "qP2(" << j << ") = 1\n";
  out << "\n[run]\ndegree_bound = 3\nt_cap = 8\n";
  return out.str();
}

ExampleConfig load_preset(std::string_view name) {
  auto text = preset_text(name);
  if (!text) throw ConfigError(0, "preset", "unknown preset '" + std::string(name) + "'");
  return parse_config(*text);
}

}  // namespace qdef
