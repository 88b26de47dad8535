#include "monoloc/rewrite.hpp"

#include "monoloc/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace monoloc {

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const Integer &c) { return monomial(Word{}, c); }

Polynomial Polynomial::monomial(Word w, const Integer &c) {
  Polynomial p;
  if (c != 0)
    p.terms_.emplace(std::move(w), c);
  return p;
}

Integer Polynomial::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Word &w, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Integer &k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[w, c] : terms_)
    c *= k;
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  Polynomial out;
  for (const auto &[wa, ca] : a.terms_)
    for (const auto &[wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

Polynomial Polynomial::reduce_mod(const Integer &p) const {
  if (p == 0)
    return *this;
  Polynomial out;
  for (const auto &[w, c] : terms_) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    if (r != 0)
      out.terms_.emplace(w, r);
  }
  return out;
}

namespace {

Polynomial wrap(const Word &left, const Polynomial &p, const Word &right) {
  Polynomial out;
  for (const auto &[w, c] : p.terms()) {
    Word x;
    x.reserve(left.size() + w.size() + right.size());
    x.insert(x.end(), left.begin(), left.end());
    x.insert(x.end(), w.begin(), w.end());
    x.insert(x.end(), right.begin(), right.end());
    out.add_term(x, c);
  }
  return out;
}

Word slice(const Word &w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(to));
}

Integer mod_inverse(const Integer &a, const Integer &p) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw InvalidInput("coefficient " + a.get_str() + " is not invertible mod " + p.get_str());
  return inv;
}

bool is_unit(const Integer &a, const Integer &modulus) {
  if (modulus == 0)
    return abs(a) == 1;
  Integer g = gcd(a, modulus);
  return g == 1;
}

} // namespace

// ------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(std::vector<int> degrees, std::vector<int> precedence)
    : degrees_(std::move(degrees)), precedence_(std::move(precedence)) {
  if (precedence_.size() != degrees_.size())
    throw InvalidInput("precedence list does not match generator count");
}

int MonomialOrder::degree(const Word &w) const {
  int d = 0;
  for (int g : w)
    d += degrees_[static_cast<std::size_t>(g)];
  return d;
}

bool MonomialOrder::less(const Word &a, const Word &b) const {
  const int da = degree(a), db = degree(b);
  if (da != db)
    return da < db;
  if (a.size() != b.size())
    return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int pa = precedence_[static_cast<std::size_t>(a[i])];
    const int pb = precedence_[static_cast<std::size_t>(b[i])];
    if (pa != pb)
      return pa < pb;
  }
  return false;
}

// -------------------------------------------------------- PresentedDgAlgebra

int PresentedDgAlgebra::add_generator(std::string label, int degree) {
  if (find(label))
    throw InvalidInput("duplicate generator label '" + label + "'");
  if (degree < 0)
    throw InvalidInput("generator '" + label + "' has negative degree");
  gens.push_back({std::move(label), degree});
  diff.emplace_back();
  if (augmentation)
    augmentation->emplace_back(0);
  if (!precedence.empty())
    precedence.push_back(*std::max_element(precedence.begin(), precedence.end()) + 1);
  return static_cast<int>(gens.size()) - 1;
}

std::optional<int> PresentedDgAlgebra::find(const std::string &label) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].label == label)
      return static_cast<int>(i);
  return std::nullopt;
}

int PresentedDgAlgebra::find_or_throw(const std::string &label) const {
  if (auto g = find(label))
    return *g;
  throw InvalidInput("unknown generator '" + label + "'");
}

int PresentedDgAlgebra::degree(const Word &w) const {
  int d = 0;
  for (int g : w)
    d += gens[static_cast<std::size_t>(g)].degree;
  return d;
}

MonomialOrder PresentedDgAlgebra::order() const {
  std::vector<int> degs;
  for (const auto &g : gens)
    degs.push_back(g.degree);
  std::vector<int> prec = precedence;
  if (prec.empty()) {
    prec.resize(gens.size());
    std::iota(prec.begin(), prec.end(), 0);
  }
  return MonomialOrder(std::move(degs), std::move(prec));
}

Polynomial PresentedDgAlgebra::differential(const Polynomial &p) const {
  Polynomial out;
  for (const auto &[w, c] : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto g = static_cast<std::size_t>(w[i]);
      const Polynomial &dg = diff[g];
      if (!dg.is_zero()) {
        Polynomial term = wrap(slice(w, 0, i), dg, slice(w, i + 1, w.size()));
        term *= (prefix_degree % 2 == 0) ? c : Integer(-c);
        out += term;
      }
      prefix_degree += gens[g].degree;
    }
  }
  return out.reduce_mod(modulus);
}

std::optional<Integer> PresentedDgAlgebra::augment(const Polynomial &p) const {
  if (!augmentation)
    return std::nullopt;
  Integer total = 0;
  for (const auto &[w, c] : p.terms()) {
    Integer v = c;
    for (int g : w)
      v *= (*augmentation)[static_cast<std::size_t>(g)];
    total += v;
  }
  if (modulus != 0)
    mpz_fdiv_r(total.get_mpz_t(), total.get_mpz_t(), modulus.get_mpz_t());
  return total;
}

namespace {

bool plain_identifier(const std::string &s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
  });
}

} // namespace

std::string PresentedDgAlgebra::word_string(const Word &w) const {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string &l = gens[static_cast<std::size_t>(w[i])].label;
    if (i)
      out += '*';
    out += plain_identifier(l) ? l : "`" + l + "`";
  }
  return out;
}

std::string PresentedDgAlgebra::to_string(const Polynomial &p) const {
  if (p.is_zero())
    return "0";
  const MonomialOrder ord = order();
  std::vector<std::pair<Word, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto &a, const auto &b) { return ord.less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto &[w, c] : terms) {
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (w.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << word_string(w);
    else
      os << mag.get_str() << '*' << word_string(w);
  }
  return os.str();
}

namespace {

class ExprParser {
public:
  ExprParser(const PresentedDgAlgebra &a, const std::string &s) : a_(a), s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size())
      fail("trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    throw InvalidInput("cannot parse '" + s_ + "' at offset " + std::to_string(pos_) + ": " +
                       why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    for (;;) {
      Polynomial t = term();
      if (negate)
        acc -= t;
      else
        acc += t;
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (eat('*'))
      acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected exponent");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      Polynomial r = Polynomial::constant(1);
      for (int i = 0; i < e; ++i)
        r = r * base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size())
      fail("unexpected end");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')'))
        fail("expected ')'");
      return p;
    }
    if (ch == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Polynomial::constant(Integer(s_.substr(start, pos_ - start)));
    }
    if (ch == '`') {
      const auto end = s_.find('`', pos_ + 1);
      if (end == std::string::npos)
        fail("unterminated quoted label");
      std::string label = s_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return Polynomial::generator(a_.find_or_throw(label));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      return Polynomial::generator(a_.find_or_throw(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  const PresentedDgAlgebra &a_;
  const std::string &s_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial PresentedDgAlgebra::parse(const std::string &expr) const {
  return ExprParser(*this, expr).parse().reduce_mod(modulus);
}

// ------------------------------------------------------------- RewriteSystem

bool RewriteSystem::has_nonunit_leads() const {
  return std::any_of(rules_.begin(), rules_.end(),
                     [&](const RewriteRule &r) { return !is_unit(r.lead, modulus_); });
}

bool RewriteSystem::reducible(const Word &w) const {
  for (const auto &r : rules_)
    if (std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end()) != w.end())
      return true;
  return false;
}

Polynomial RewriteSystem::normal_form(const Polynomial &input,
                                      std::vector<RewriteStep> *trace) const {
  Polynomial p = input.reduce_mod(modulus_);
  for (;;) {
    std::vector<std::pair<Word, Integer>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto &a, const auto &b) { return order_.less(b.first, a.first); });
    bool changed = false;
    for (const auto &[w, c] : terms) {
      for (std::size_t ri = 0; ri < rules_.size() && !changed; ++ri) {
        const RewriteRule &r = rules_[ri];
        auto at = std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end());
        if (at == w.end() && !r.lhs.empty())
          continue;
        Integer q;
        if (modulus_ != 0)
          q = c; // leads are monic over a field
        else
          mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), r.lead.get_mpz_t());
        if (q == 0)
          continue;
        const auto pos = static_cast<std::size_t>(at - w.begin());
        const Word left = slice(w, 0, pos);
        const Word right = slice(w, pos + r.lhs.size(), w.size());
        p.add_term(w, -q * r.lead);
        Polynomial repl = wrap(left, r.rhs, right);
        repl *= q;
        p += repl;
        p = p.reduce_mod(modulus_);
        if (trace)
          trace->push_back({ri, w});
        changed = true;
      }
      if (changed)
        break;
    }
    if (!changed)
      return p;
  }
}

std::string RewriteSystem::describe(const PresentedDgAlgebra &a) const {
  std::ostringstream os;
  for (const auto &r : rules_) {
    if (r.lead != 1)
      os << r.lead.get_str() << '*';
    os << a.word_string(r.lhs) << " -> " << a.to_string(r.rhs) << '\n';
  }
  return os.str();
}

Polynomial normal_form(const Polynomial &p, const RewriteSystem &r) { return r.normal_form(p); }

// ---------------------------------------------------------------- Completion

class Completion {
public:
  Completion(const PresentedDgAlgebra &a, std::size_t budget)
      : a_(a), budget_(budget), sys_(a.order(), a.modulus) {
    if (a.modulus != 0 && mpz_probab_prime_p(a.modulus.get_mpz_t(), 30) == 0)
      throw InvalidInput("coefficient modulus " + a.modulus.get_str() + " is not prime");
  }

  RewriteSystem run() {
    for (const auto &rel : a_.relations) {
      Polynomial p = (rel.lhs - rel.rhs).reduce_mod(sys_.modulus_);
      check_homogeneous(p, rel);
      push(std::move(p));
    }
    for (;;) {
      while (!pending_.empty()) {
        if (!tick())
          return finish(false);
        process(pop_smallest());
      }
      // Confirm every critical pair among the surviving rules resolves.
      bool clean = true;
      for (std::size_t i = 0; i < sys_.rules_.size() && clean; ++i)
        for (std::size_t j = 0; j <= i && clean; ++j) {
          for (auto &s : critical_polys(i, j)) {
            if (!tick())
              return finish(false);
            if (!sys_.normal_form(s).is_zero()) {
              push(std::move(s));
              clean = false;
            }
          }
        }
      if (clean)
        return finish(true);
    }
  }

private:
  bool tick() { return ++steps_ <= budget_; }

  void check_homogeneous(const Polynomial &p, const Relation &rel) const {
    std::optional<int> deg;
    for (const auto &[w, c] : p.terms()) {
      const int d = a_.degree(w);
      if (deg && *deg != d)
        throw Unorientable("relation " + a_.to_string(rel.lhs) + " = " +
                           a_.to_string(rel.rhs) + " is not degree-homogeneous");
      deg = d;
    }
  }

  void push(Polynomial p) {
    if (!p.is_zero())
      pending_.push_back(std::move(p));
  }

  Word leading_word(const Polynomial &p) const {
    const Word *best = nullptr;
    for (const auto &[w, c] : p.terms())
      if (!best || sys_.order_.less(*best, w))
        best = &w;
    return *best;
  }

  Polynomial pop_smallest() {
    std::size_t best = 0;
    Word bw = leading_word(pending_[0]);
    for (std::size_t i = 1; i < pending_.size(); ++i) {
      Word w = leading_word(pending_[i]);
      if (sys_.order_.less(w, bw)) {
        best = i;
        bw = std::move(w);
      }
    }
    Polynomial p = std::move(pending_[best]);
    pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  // Makes the leading coefficient positive (Z) or 1 (Z/p).
  Polynomial normalize(Polynomial p) const {
    const Word lw = leading_word(p);
    const Integer c = p.coefficient(lw);
    if (sys_.modulus_ != 0) {
      p *= mod_inverse(c, sys_.modulus_);
      return p.reduce_mod(sys_.modulus_);
    }
    if (c < 0)
      p *= Integer(-1);
    return p;
  }

  RewriteRule to_rule(const Polynomial &p) const {
    RewriteRule r;
    r.lhs = leading_word(p);
    r.lead = p.coefficient(r.lhs);
    r.rhs = Polynomial::monomial(r.lhs, r.lead) - p;
    return r;
  }

  void process(Polynomial p) {
    p = sys_.normal_form(p);
    if (p.is_zero())
      return;
    p = normalize(std::move(p));
    const Word lw = leading_word(p);
    const Integer lc = p.coefficient(lw);

    // Over Z a second rule with the same leading word is merged through the
    // gcd of the two leading coefficients.
    for (std::size_t i = 0; i < sys_.rules_.size(); ++i) {
      if (sys_.rules_[i].lhs != lw)
        continue;
      const Polynomial old = sys_.rules_[i].as_polynomial();
      const Integer a = sys_.rules_[i].lead;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), lc.get_mpz_t(), a.get_mpz_t());
      Polynomial merged = p * s + old * t;
      sys_.rules_.erase(sys_.rules_.begin() + static_cast<std::ptrdiff_t>(i));
      push(old - merged * Integer(a / g));
      push(p - merged * Integer(lc / g));
      add_rule(std::move(merged));
      return;
    }
    add_rule(std::move(p));
  }

  void add_rule(Polynomial p) {
    p = normalize(std::move(p));
    RewriteRule rule = to_rule(p);
    // Rules whose left side the new rule can rewrite are retired and requeued.
    for (std::size_t i = 0; i < sys_.rules_.size();) {
      const RewriteRule &r = sys_.rules_[i];
      const bool contains =
          std::search(r.lhs.begin(), r.lhs.end(), rule.lhs.begin(), rule.lhs.end()) !=
          r.lhs.end();
      bool divides = true;
      if (sys_.modulus_ == 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.lead.get_mpz_t(), rule.lead.get_mpz_t());
        divides = q != 0;
      }
      if (contains && divides && r.lhs != rule.lhs) {
        push(r.as_polynomial());
        sys_.rules_.erase(sys_.rules_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    sys_.rules_.push_back(std::move(rule));
    const std::size_t n = sys_.rules_.size() - 1;
    for (std::size_t j = 0; j <= n; ++j)
      for (auto &s : critical_polys(n, j))
        push(std::move(s));
  }

  // S- and G-polynomials for all overlaps and inclusions of rules i and j.
  std::vector<Polynomial> critical_polys(std::size_t i, std::size_t j) const {
    std::vector<Polynomial> out;
    const RewriteRule &ri = sys_.rules_[i];
    const RewriteRule &rj = sys_.rules_[j];
    const Polynomial pi = ri.as_polynomial();
    const Polynomial pj = rj.as_polynomial();

    auto combine = [&](const Polynomial &left, const Polynomial &right) {
      // left and right share the leading word W with coefficients ri.lead and
      // rj.lead respectively.
      if (sys_.modulus_ != 0) {
        out.push_back((left - right).reduce_mod(sys_.modulus_));
        return;
      }
      Integer l = lcm(ri.lead, rj.lead);
      out.push_back(left * Integer(l / ri.lead) - right * Integer(l / rj.lead));
      const bool i_div_j = (rj.lead % ri.lead) == 0;
      const bool j_div_i = (ri.lead % rj.lead) == 0;
      if (!i_div_j && !j_div_i) {
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ri.lead.get_mpz_t(),
                   rj.lead.get_mpz_t());
        out.push_back(left * s + right * t);
      }
    };

    auto overlaps = [&](const RewriteRule &x, const Polynomial &px, const RewriteRule &y,
                        const Polynomial &py, bool x_is_i) {
      // proper overlap: suffix of x.lhs == prefix of y.lhs
      const std::size_t lx = x.lhs.size(), ly = y.lhs.size();
      for (std::size_t k = 1; k < std::min(lx, ly) + (0); ++k) {
        if (!std::equal(x.lhs.end() - static_cast<std::ptrdiff_t>(k), x.lhs.end(),
                        y.lhs.begin()))
          continue;
        Polynomial left = wrap({}, px, slice(y.lhs, k, ly));
        Polynomial right = wrap(slice(x.lhs, 0, lx - k), py, {});
        if (x_is_i)
          combine(left, right);
        else
          combine(right, left);
      }
    };

    overlaps(ri, pi, rj, pj, true);
    if (i != j)
      overlaps(rj, pj, ri, pi, false);

    auto inclusions = [&](const RewriteRule &big, const Polynomial &pbig,
                          const RewriteRule &small, const Polynomial &psmall, bool big_is_i) {
      if (small.lhs.size() > big.lhs.size())
        return;
      if (small.lhs.empty()) {
        Polynomial inner = wrap(big.lhs, psmall, {});
        if (big_is_i)
          combine(pbig, inner);
        else
          combine(inner, pbig);
        return;
      }
      for (std::size_t pos = 0; pos + small.lhs.size() <= big.lhs.size(); ++pos) {
        if (!std::equal(small.lhs.begin(), small.lhs.end(),
                        big.lhs.begin() + static_cast<std::ptrdiff_t>(pos)))
          continue;
        Polynomial inner = wrap(slice(big.lhs, 0, pos), psmall,
                                slice(big.lhs, pos + small.lhs.size(), big.lhs.size()));
        if (big_is_i)
          combine(pbig, inner);
        else
          combine(inner, pbig);
      }
    };
    if (i != j) {
      inclusions(ri, pi, rj, pj, true);
      if (ri.lhs.size() != rj.lhs.size() || ri.lhs.empty())
        inclusions(rj, pj, ri, pi, false);
    }
    return out;
  }

  RewriteSystem finish(bool complete) {
    // Interreduce right-hand sides.
    for (std::size_t i = 0; i < sys_.rules_.size(); ++i) {
      RewriteRule &r = sys_.rules_[i];
      r.rhs = sys_.normal_form(r.rhs);
    }
    std::sort(sys_.rules_.begin(), sys_.rules_.end(), [&](const auto &x, const auto &y) {
      return sys_.order_.less(x.lhs, y.lhs);
    });
    sys_.status_ = complete ? RewriteSystem::Status::Complete : RewriteSystem::Status::Incomplete;
    sys_.steps_used_ = steps_;
    return std::move(sys_);
  }

  const PresentedDgAlgebra &a_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  RewriteSystem sys_;
  std::vector<Polynomial> pending_;
};

RewriteSystem complete(const PresentedDgAlgebra &a, std::size_t budget) {
  return Completion(a, budget).run();
}

// --------------------------------------------------------------------- Bases

BasisResult basis_in_degree(const PresentedDgAlgebra &a, const RewriteSystem &r, int n,
                            std::size_t cap) {
  if (!r.complete())
    throw InvalidInput("basis_in_degree needs a complete rewrite system");
  if (r.has_nonunit_leads())
    throw InvalidInput("rewrite system has non-unit leading coefficients; no monomial basis");
  BasisResult out;
  const MonomialOrder ord = a.order();
  auto ends_reducible = [&](const Word &w) {
    for (const auto &rule : r.rules()) {
      if (rule.lhs.size() > w.size())
        continue;
      if (std::equal(rule.lhs.begin(), rule.lhs.end(),
                     w.end() - static_cast<std::ptrdiff_t>(rule.lhs.size())))
        return true;
    }
    return false;
  };
  if (ends_reducible(Word{})) // a unit rule: the ring is zero
    return out;
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto &w : frontier) {
      if (a.degree(w) == n) {
        out.basis.push_back(w);
        if (out.basis.size() > cap) {
          out.status = BasisResult::Status::CapExceeded;
          out.basis.resize(cap);
          return out;
        }
      }
      for (std::size_t g = 0; g < a.gens.size(); ++g) {
        Word x = w;
        x.push_back(static_cast<int>(g));
        if (a.degree(x) > n || ends_reducible(x))
          continue;
        next.push_back(std::move(x));
      }
    }
    if (next.size() > cap) {
      out.status = BasisResult::Status::CapExceeded;
      break;
    }
    frontier = std::move(next);
  }
  std::sort(out.basis.begin(), out.basis.end(),
            [&](const Word &x, const Word &y) { return ord.less(x, y); });
  return out;
}

// ----------------------------------------------------------- H_0 and inverses

PresentedDgAlgebra h0_ring(const PresentedDgAlgebra &a) {
  PresentedDgAlgebra h;
  h.modulus = a.modulus;
  h.notes = a.notes;
  std::vector<int> remap(a.gens.size(), -1);
  std::vector<int> prec;
  const MonomialOrder ord = a.order();
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i].degree == 0) {
      remap[i] = static_cast<int>(h.gens.size());
      h.gens.push_back(a.gens[i]);
      h.diff.emplace_back();
      prec.push_back(a.precedence.empty() ? static_cast<int>(i) : a.precedence[i]);
    }
  h.precedence = prec;
  if (a.augmentation) {
    std::vector<Integer> aug;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
      if (remap[i] >= 0)
        aug.push_back((*a.augmentation)[i]);
    h.augmentation = aug;
  }
  auto translate = [&](const Polynomial &p) {
    Polynomial out;
    for (const auto &[w, c] : p.terms()) {
      Word x;
      for (int g : w)
        x.push_back(remap[static_cast<std::size_t>(g)]);
      out.add_term(x, c);
    }
    return out;
  };
  auto degree_zero = [&](const Polynomial &p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const auto &t) { return a.degree(t.first) == 0; });
  };
  for (const auto &rel : a.relations)
    if (degree_zero(rel.lhs) && degree_zero(rel.rhs))
      h.relations.push_back({translate(rel.lhs), translate(rel.rhs)});
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i].degree == 1 && !a.diff[i].is_zero())
      h.relations.push_back({translate(a.diff[i]), Polynomial{}});
  return h;
}

PresentedDgAlgebra adjoin_inverses(const PresentedDgAlgebra &a,
                                   const std::vector<Polynomial> &elements,
                                   const std::vector<std::string> &labels) {
  PresentedDgAlgebra out = a;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Polynomial &s = elements[k];
    for (const auto &[w, c] : s.terms())
      if (a.degree(w) != 0)
        throw NotACycle(a.to_string(s) + " is not of degree 0");
    if (!a.differential(s).is_zero())
      throw NotACycle(a.to_string(s) + " has nonzero differential");

    std::string label = k < labels.size() ? labels[k] : "v" + std::to_string(k);
    while (out.find(label))
      label += "'";
    std::optional<Integer> eps = out.augment(s);
    const int v = out.add_generator(label, 0);
    const Polynomial pv = Polynomial::generator(v);
    // d v = -v (ds) v, which vanishes because s is a degree-0 cycle.
    out.diff[static_cast<std::size_t>(v)] = (-(pv * out.differential(s) * pv)).reduce_mod(out.modulus);
    out.relations.push_back({pv * s, Polynomial::constant(1)});
    out.relations.push_back({s * pv, Polynomial::constant(1)});
    if (out.augmentation) {
      if (eps && (*eps == 1 || *eps == -1 || (out.modulus != 0 && gcd(*eps, out.modulus) == 1)))
        out.augmentation->back() =
            out.modulus == 0 ? Integer(*eps) : mod_inverse(*eps, out.modulus);
      else
        out.augmentation.reset();
    }
    out.notes.push_back("inverted " + a.to_string(s) + " as " + label +
                        "; derived localization assumes the algebra is cofibrant over "
                        "the subalgebra generated by the inverted cycles");
  }
  return out;
}

// -------------------------------------------------------------- Certificates

Polynomial apply_map(const Polynomial &p, const RingMap &f, const RewriteSystem &target) {
  Polynomial out;
  for (const auto &[w, c] : p.terms()) {
    Polynomial img = Polynomial::constant(c);
    for (int g : w) {
      img = img * f.images.at(static_cast<std::size_t>(g));
      img = target.normal_form(img);
    }
    out += img;
  }
  return target.normal_form(out);
}

const char *to_string(RingCertificate::Outcome o) {
  switch (o) {
  case RingCertificate::Outcome::Pass:
    return "pass";
  case RingCertificate::Outcome::NotAHomomorphism:
    return "not-a-homomorphism";
  case RingCertificate::Outcome::NotInverse:
    return "not-inverse";
  case RingCertificate::Outcome::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

RingCertificate ring_iso_certify(const PresentedDgAlgebra &a, const PresentedDgAlgebra &b,
                                 const RingMap &f, const RingMap &g, std::size_t budget) {
  const RewriteSystem ra = complete(a, budget);
  const RewriteSystem rb = complete(b, budget);
  return ring_iso_certify(a, ra, b, rb, f, g);
}

RingCertificate ring_iso_certify(const PresentedDgAlgebra &a, const RewriteSystem &ra,
                                 const PresentedDgAlgebra &b, const RewriteSystem &rb,
                                 const RingMap &f, const RingMap &g) {
  RingCertificate cert;
  if (f.images.size() != a.gens.size() || g.images.size() != b.gens.size())
    throw InvalidInput("ring map images do not match generator counts");

  const bool a_canonical = ra.complete() && !ra.has_nonunit_leads();
  const bool b_canonical = rb.complete() && !rb.has_nonunit_leads();

  auto fail = [&](RingCertificate::Outcome o, bool canonical, std::string why) {
    cert.outcome = canonical ? o : RingCertificate::Outcome::Inconclusive;
    cert.detail = std::move(why);
    return cert;
  };

  auto check_hom = [&](const PresentedDgAlgebra &src, const PresentedDgAlgebra &dst,
                       const RewriteSystem &rdst, const RingMap &m, const char *name,
                       bool canonical) -> bool {
    for (const auto &rel : src.relations) {
      std::vector<RewriteStep> trace;
      Polynomial img = apply_map(rel.lhs - rel.rhs, m, rdst);
      img = rdst.normal_form(img, &trace);
      const std::string line = std::string(name) + "(" + src.to_string(rel.lhs) + " - (" +
                               src.to_string(rel.rhs) + ")) -> " + dst.to_string(img);
      if (!img.is_zero()) {
        fail(RingCertificate::Outcome::NotAHomomorphism, canonical, line);
        return false;
      }
      cert.checks.push_back(line);
      cert.traces.push_back(std::move(trace));
    }
    return true;
  };

  auto check_inverse = [&](const PresentedDgAlgebra &src, const RewriteSystem &rsrc,
                           const RewriteSystem &rdst, const RingMap &there,
                           const RingMap &back, const char *name, bool canonical) -> bool {
    for (std::size_t i = 0; i < src.gens.size(); ++i) {
      const Polynomial x = Polynomial::generator(static_cast<int>(i));
      const Polynomial round = apply_map(apply_map(x, there, rdst), back, rsrc);
      std::vector<RewriteStep> trace;
      const Polynomial diff = rsrc.normal_form(round - x, &trace);
      const std::string line = std::string(name) + "(" + src.gens[i].label + ") = " +
                               src.to_string(rsrc.normal_form(round));
      if (!diff.is_zero()) {
        fail(RingCertificate::Outcome::NotInverse, canonical, line);
        return false;
      }
      cert.checks.push_back(line);
      cert.traces.push_back(std::move(trace));
    }
    return true;
  };

  if (!check_hom(a, b, rb, f, "f", b_canonical))
    return cert;
  if (!check_hom(b, a, ra, g, "g", a_canonical))
    return cert;
  if (!check_inverse(a, ra, rb, f, g, "g.f", a_canonical))
    return cert;
  if (!check_inverse(b, rb, ra, g, f, "f.g", b_canonical))
    return cert;
  cert.outcome = RingCertificate::Outcome::Pass;
  return cert;
}

} // namespace monoloc
