#include "prelog/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "prelog/errors.hpp"

namespace prelog {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::map<std::string, int> exponents) {
  for (auto& [name, e] : exponents) {
    if (e < 0) throw ParseError("Monomial: negative exponent for " + name);
    if (e > 0) exps_.emplace(name, e);
  }
}

Monomial Monomial::variable(const std::string& name, int exponent) {
  return Monomial(std::map<std::string, int>{{name, exponent}});
}

int Monomial::exponent(const std::string& name) const {
  auto it = exps_.find(name);
  return it == exps_.end() ? 0 : it->second;
}

int Monomial::total_exponent() const {
  int t = 0;
  for (const auto& [n, e] : exps_) t += e;
  return t;
}

int Monomial::weighted_degree(const Grading& grading) const {
  int d = 0;
  for (const auto& [n, e] : exps_) {
    auto it = grading.find(n);
    if (it == grading.end()) throw DegreeError("variable '" + n + "' has no declared degree");
    d += it->second * e;
  }
  return d;
}

std::optional<Monomial> Monomial::divide(const Monomial& m) const {
  std::map<std::string, int> q = exps_;
  for (const auto& [n, e] : m.exps_) {
    auto it = q.find(n);
    if (it == q.end() || it->second < e) return std::nullopt;
    it->second -= e;
  }
  return Monomial(std::move(q));
}

std::pair<Monomial, Monomial> Monomial::split(const std::vector<std::string>& names) const {
  std::map<std::string, int> in, out;
  for (const auto& [n, e] : exps_) {
    if (std::find(names.begin(), names.end(), n) != names.end())
      in.emplace(n, e);
    else
      out.emplace(n, e);
  }
  return {Monomial(std::move(in)), Monomial(std::move(out))};
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::map<std::string, int> p = a.exps_;
  for (const auto& [n, e] : b.exps_) p[n] += e;
  return Monomial(std::move(p));
}

std::string Monomial::to_string(const std::vector<std::string>& order, bool inverse, bool explicit_star) const {
  if (exps_.empty()) return "1";
  std::vector<std::pair<std::string, int>> items;
  for (const auto& n : order) {
    int e = exponent(n);
    if (e) items.emplace_back(n, e);
  }
  for (const auto& [n, e] : exps_)
    if (std::find(order.begin(), order.end(), n) == order.end()) items.emplace_back(n, e);
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, e] : items) {
    if (!first && explicit_star) os << '*';
    first = false;
    os << n;
    if (inverse)
      os << "^-" << e;
    else if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

// ---------------------------------------------------------------- GradedPoly

GradedPoly::GradedPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial(), Integer(constant));
}

GradedPoly::GradedPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

GradedPoly::GradedPoly(const Monomial& m, const Integer& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

GradedPoly GradedPoly::variable(const std::string& name) { return GradedPoly(Monomial::variable(name)); }

Integer GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::string> GradedPoly::variables() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, e] : m.exponents()) names.insert(n);
  return {names.begin(), names.end()};
}

std::optional<int> GradedPoly::homogeneous_degree(const Grading& grading) const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int md = m.weighted_degree(grading);
    if (d && *d != md) return std::nullopt;
    d = md;
  }
  return d;
}

bool GradedPoly::is_homogeneous(const Grading& grading) const {
  return is_zero() || homogeneous_degree(grading).has_value();
}

GradedPoly GradedPoly::substitute(const std::map<std::string, GradedPoly>& images) const {
  GradedPoly out;
  for (const auto& [m, c] : terms_) {
    GradedPoly t(c);
    std::map<std::string, int> kept;
    for (const auto& [n, e] : m.exponents()) {
      auto it = images.find(n);
      if (it == images.end())
        kept.emplace(n, e);
      else
        t = t * it->second.pow(static_cast<unsigned>(e));
    }
    out += t * GradedPoly(Monomial(std::move(kept)));
  }
  return out;
}

GradedPoly GradedPoly::homogeneous_part(const Grading& grading, int d) const {
  GradedPoly out;
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree(grading) == d) out.terms_.emplace(m, c);
  return out;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

std::string GradedPoly::to_string(const std::vector<std::string>& order) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << m.to_string(order);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

using Laurent = LaurentTerms;

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto m = ma;
      for (const auto& [n, e] : mb) {
        m[n] += e;
        if (m[n] == 0) m.erase(n);
      }
      p[m] += ca * cb;
    }
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

Laurent laurent_add(Laurent a, const Laurent& b, int sign) {
  for (const auto& [m, c] : b) a[m] += sign * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {
    std::sort(names_.begin(), names_.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }

  Laurent parse() {
    Laurent r = expression();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool factor_follows() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }

  Laurent expression() {
    skip_ws();
    int sign = 1;
    if (peek('-')) {
      sign = -1;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    Laurent acc = laurent_add({}, term(), sign);
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = laurent_add(acc, term(), 1);
      } else if (peek('-')) {
        ++pos_;
        acc = laurent_add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  Laurent term() {
    Laurent acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = laurent_mul(acc, power());
      } else if (factor_follows()) {
        acc = laurent_mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  long exponent() {
    skip_ws();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  Laurent power() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Laurent inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      if (peek('^')) {
        ++pos_;
        long e = exponent();
        if (e < 0) fail("negative power of a parenthesised expression");
        Laurent r{{{}, Integer(1)}};
        for (long i = 0; i < e; ++i) r = laurent_mul(r, inner);
        return r;
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)));
      if (peek('^')) fail("powers of integer literals are not supported");
      if (v == 0) return {};
      return {{{}, v}};
    }
    if (ident_start(c)) {
      // A declared-name run like "R1R2" yields several variables; the
      // exponent binds to the last one.
      std::vector<std::string> pieces = identifier();
      std::map<std::string, int> m;
      for (const auto& n : pieces) m[n] += 1;
      const std::string last = pieces.back();
      if (peek('^')) {
        ++pos_;
        long e = exponent();
        m[last] += static_cast<int>(e) - 1;
        if (m[last] == 0) m.erase(last);
      }
      return {{m, Integer(1)}};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // Reads one identifier run, split into declared names when there are any.
  std::vector<std::string> identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    std::string run(s_.substr(start, pos_ - start));
    if (names_.empty()) return {run};
    std::vector<std::string> pieces;
    std::size_t i = 0;
    while (i < run.size()) {
      bool matched = false;
      for (const auto& n : names_) {
        if (run.compare(i, n.size(), n) == 0) {
          pieces.push_back(n);
          i += n.size();
          matched = true;
          break;
        }
      }
      if (!matched) {
        pos_ = start + i;
        fail("unknown variable in '" + run + "'");
      }
    }
    return pieces;
  }

  std::string_view s_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentTerms parse_laurent(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

GradedPoly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  GradedPoly p;
  for (const auto& [m, c] : parse_laurent(text, names)) {
    for (const auto& [n, e] : m)
      if (e < 0) throw ParseError("negative exponent of '" + n + "' in polynomial '" + std::string(text) + "'");
    p.add_term(Monomial(m), c);
  }
  return p;
}

}  // namespace prelog
