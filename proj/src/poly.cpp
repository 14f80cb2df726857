#include <algorithm>
#include <cctype>
#include <sstream>

#include "svar/error.hpp"
#include "svar/poly.hpp"

namespace svar {

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<unsigned> degrees,
                   std::optional<std::size_t> eliminate)
    : F_(p), names_(std::move(names)), degrees_(std::move(degrees)), elim_(eliminate) {
  if (names_.size() != degrees_.size()) throw UsageError("poly ring: names and degrees differ in length");
  for (auto d : degrees_)
    if (d == 0) throw UsageError("poly ring: variable degrees must be positive");
  if (elim_ && *elim_ >= names_.size()) throw UsageError("poly ring: elimination variable out of range");
}

unsigned PolyRing::degree(const Monomial& m) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * degrees_[i];
  return d;
}

bool PolyRing::greater(const Monomial& a, const Monomial& b) const {
  if (elim_ && a[*elim_] != b[*elim_]) return a[*elim_] > b[*elim_];
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (elim_ && i == *elim_) continue;
    da += a[i] * degrees_[i];
    db += b[i] * degrees_[i];
  }
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::operator==(const PolyRing& o) const {
  return F_ == o.F_ && names_ == o.names_ && degrees_ == o.degrees_ && elim_ == o.elim_;
}

// --- Poly ----------------------------------------------------------------------

Poly Poly::constant(PolyRingPtr R, Elem c) {
  Monomial m(R->nvars(), 0);
  return monomial(std::move(R), std::move(m), c);
}

Poly Poly::monomial(PolyRingPtr R, Monomial m, Elem c) {
  Poly f(std::move(R));
  c = f.R_->field().from_int(c);
  if (c) f.terms_.push_back({std::move(m), c});
  return f;
}

Poly Poly::variable(PolyRingPtr R, std::size_t i) {
  Monomial m(R->nvars(), 0);
  m.at(i) = 1;
  return monomial(std::move(R), std::move(m), 1);
}

Poly Poly::from_terms(PolyRingPtr R, std::vector<Term> terms) {
  Poly f(std::move(R));
  const auto& ring = *f.R_;
  const auto& F = ring.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ring.greater(a.m, b.m); });
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      f.terms_.back().c = F.add(f.terms_.back().c, t.c);
      if (!f.terms_.back().c) f.terms_.pop_back();
    } else if (t.c) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (R_->degree(t.m) != R_->degree(terms_.front().m)) return false;
  return true;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, R_->degree(t.m));
  return d;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && R_->degree(lead().m) == 0); }

Poly Poly::operator+(const Poly& o) const {
  if (!R_) return o;
  if (!o.R_) return *this;
  const auto& F = R_->field();
  Poly r(R_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && R_->greater(terms_[i].m, o.terms_[j].m))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || R_->greater(o.terms_[j].m, terms_[i].m)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const Elem c = F.add(terms_[i].c, o.terms_[j].c);
      if (c) r.terms_.push_back({terms_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::scaled(Elem c) const {
  Poly r(R_);
  if (!R_) return r;
  const auto& F = R_->field();
  c = F.from_int(c);
  if (!c) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = F.mul(t.c, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(o.R_ ? o.R_->field().neg(1) : 0); }

Poly Poly::times_monomial(const Monomial& m, Elem c) const {
  Poly r(R_);
  if (!R_ || !c) return r;
  const auto& F = R_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial s = t.m;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
    r.terms_.push_back({std::move(s), F.mul(t.c, c)});
  }
  return r;  // multiplication by a monomial preserves the order
}

Poly Poly::operator*(const Poly& o) const {
  if (!R_ || !o.R_) return Poly(R_ ? R_ : o.R_);
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  const auto& F = R_->field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial s = a.m;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.m[i];
      all.push_back({std::move(s), F.mul(a.c, b.c)});
    }
  return from_terms(R_, std::move(all));
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(R_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(R_->field().inv(lead().c));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      if (!t.m[i]) continue;
      if (any) mono << '*';
      any = true;
      mono << R_->names()[i];
      if (t.m[i] > 1) mono << '^' << t.m[i];
    }
    if (!any)
      os << t.c;
    else if (t.c == 1)
      os << mono.str();
    else
      os << t.c << '*' << mono.str();
  }
  return os.str();
}

// --- parsing ---------------------------------------------------------------------

Poly parse_poly(const PolyRingPtr& R, const std::string& text) {
  const auto& F = R->field();
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw UsageError("polynomial '" + text + "': " + what + " at column " + std::to_string(pos + 1));
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> unsigned long long {
    unsigned long long v = 0;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned>(text[pos] - '0');
      if (v > (1ULL << 40)) fail("number too large");
      ++pos;
    }
    if (pos == start) fail("expected a number");
    return v;
  };
  std::vector<Term> terms;
  skip();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    Elem sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = F.neg(1);
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Term t{Monomial(R->nvars(), 0), sign};
    while (true) {
      skip();
      if (pos >= text.size()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        t.c = F.mul(t.c, F.from_int(static_cast<long long>(number() % F.p())));
      } else if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        const std::string name = text.substr(start, pos - start);
        const int v = R->index_of(name);
        if (v < 0) {
          pos = start;
          fail("unknown variable '" + name + "'");
        }
        unsigned e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          e = static_cast<unsigned>(number());
        }
        t.m[static_cast<std::size_t>(v)] += e;
      } else {
        fail("unexpected character '" + std::string(1, text[pos]) + "'");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(t));
    skip();
    if (pos == text.size()) break;
  }
  return Poly::from_terms(R, std::move(terms));
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    default:
      return "unknown";
  }
}

Tri operator&&(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Yes;
}

}  // namespace svar
