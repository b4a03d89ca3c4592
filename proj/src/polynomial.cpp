#include "cmwild/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmwild {

PolyRing::PolyRing(std::vector<std::string> names, PrimeField field)
    : names_(std::move(names)), field_(field) {
  if (names_.empty()) throw InputError("a ring needs at least one variable");
  if (names_.size() > kMaxVars) throw InputError("too many variables (limit " + std::to_string(kMaxVars) + ")");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw InputError("invalid variable name '" + n + "'");
    for (char ch : n)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw InputError("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw InputError("duplicate variable name '" + n + "'");
  }
}

int PolyRing::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

PolyRingPtr make_ring(std::vector<std::string> names, std::uint32_t p) {
  return std::make_shared<const PolyRing>(std::move(names), PrimeField(p));
}

namespace {

bool term_greater(const Term& a, const Term& b) { return monomial_compare(a.mono, b.mono) > 0; }

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& f = ring_->field();
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    t.coef %= f.characteristic();
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = f.add(terms_.back().coef, t.coef);
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(t);
    }
  }
  refresh_degree();
}

void Polynomial::refresh_degree() {
  homogeneous_degree_.reset();
  if (terms_.empty()) return;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return;
  homogeneous_degree_ = d;
}

Polynomial Polynomial::constant(PolyRingPtr ring, std::int64_t c) {
  auto v = ring->field().from_int(c);
  Monomial one(ring->nvars());
  return Polynomial(std::move(ring), {Term{one, v}});
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index, int power) {
  auto m = Monomial::variable(ring->nvars(), index, power);
  return Polynomial(std::move(ring), {Term{m, 1}});
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, PrimeField::Elem c) {
  return Polynomial(std::move(ring), {Term{m, c}});
}

PrimeField::Elem Polynomial::constant_coefficient() const noexcept {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::scaled(PrimeField::Elem c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  const auto& f = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, f.mul(t.coef, c)});
  r.homogeneous_degree_ = homogeneous_degree_;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, PrimeField::Elem c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  const auto& f = ring_->field();
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coef, c)});
  r.refresh_degree();
  return r;
}

namespace {

// Merge of two descending term lists with b scaled by `sign`.
std::vector<Term> merge(const PrimeField& f, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_greater(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_greater(b[j], a[i])) {
      out.push_back({b[j].mono, negate_b ? f.neg(b[j].coef) : b[j].coef});
      ++j;
    } else {
      auto c = negate_b ? f.sub(a[i].coef, b[j].coef) : f.add(a[i].coef, b[j].coef);
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring()) throw InputError("polynomial without a ring");
  if (a.ring() != b.ring() &&
      (a.ring()->nvars() != b.ring()->nvars() || !(a.ring()->field() == b.ring()->field())))
    throw InputError("polynomials over different rings");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial r(a.ring_);
  r.terms_ = merge(a.ring_->field(), a.terms_, b.terms_, false);
  r.refresh_degree();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial r(a.ring_);
  r.terms_ = merge(a.ring_->field(), a.terms_, b.terms_, true);
  r.refresh_degree();
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  const auto& f = a.ring_->field();
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, f.mul(s.coef, t.coef)});
  return Polynomial(a.ring_, std::move(prod));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw InputError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const auto& target = images.front().ring();
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, 1).scaled(t.coef);
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i] > 0) term = term * images[i].pow(static_cast<unsigned>(t.mono[i]));
    result = result + term;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& f = ring_->field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = f.to_signed(t.coef);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << ring_->names()[i];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    parse_term(terms, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      parse_term(terms, op == '-');
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::uint64_t parse_integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t v = 0;
    const std::uint64_t p = ring_->field().characteristic();
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(get() - '0')) % (p * 1000000ull);
    }
    return v;
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected variable");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
    std::string_view name = s_.substr(start, pos_ - start);
    int idx = ring_->index_of(name);
    if (idx < 0) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    int e = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      std::size_t at = pos_;
      std::uint64_t raw = 0;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        raw = raw * 10 + static_cast<std::uint64_t>(get() - '0');
        if (raw > 10000) throw ParseError("exponent too large", at);
      }
      e = static_cast<int>(raw);
    }
    mono.set(static_cast<std::size_t>(idx), mono[static_cast<std::size_t>(idx)] + e);
  }

  void parse_term(std::vector<Term>& terms, bool negative) {
    const auto& f = ring_->field();
    skip_ws();
    PrimeField::Elem coef = 1;
    Monomial mono(ring_->nvars());
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = f.from_int(static_cast<std::int64_t>(parse_integer() % f.characteristic()));
      skip_ws();
      if (peek() == '*') {
        get();
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      parse_factor(mono);
      for (;;) {
        skip_ws();
        if (peek() != '*') break;
        get();
        parse_factor(mono);
      }
    }
    if (negative) coef = f.neg(coef);
    terms.push_back({mono, coef});
  }

  std::string_view s_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace cmwild
