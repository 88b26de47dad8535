#include "monoloc/monoids.hpp"

#include "monoloc/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace monoloc {

std::optional<int> FiniteMonoid::index_of(const std::string &label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == label)
      return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> FiniteMonoid::nonidentity() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (static_cast<int>(i) != identity)
      out.push_back(static_cast<int>(i));
  return out;
}

const char *to_string(ValidationIssue::Kind k) {
  switch (k) {
  case ValidationIssue::Kind::MalformedTable:
    return "MalformedTable";
  case ValidationIssue::Kind::IdentityLaw:
    return "IdentityLaw";
  case ValidationIssue::Kind::Associativity:
    return "Associativity";
  case ValidationIssue::Kind::SimplicialIdentity:
    return "SimplicialIdentity";
  case ValidationIssue::Kind::Other:
    return "Other";
  }
  return "?";
}

bool ValidationReport::has(ValidationIssue::Kind k) const {
  return std::any_of(issues.begin(), issues.end(),
                     [k](const ValidationIssue &i) { return i.kind == k; });
}

std::string ValidationReport::to_string() const {
  if (ok())
    return "valid\n";
  std::ostringstream os;
  for (const auto &i : issues)
    os << monoloc::to_string(i.kind) << ": " << i.message << '\n';
  return os.str();
}

ValidationReport validate_monoid(const FiniteMonoid &m) {
  ValidationReport rep;
  const auto n = m.elements.size();
  auto malformed = [&](std::string msg) {
    rep.issues.push_back({ValidationIssue::Kind::MalformedTable, std::move(msg)});
  };
  if (n == 0)
    malformed("monoid has no elements");
  if (std::set<std::string>(m.elements.begin(), m.elements.end()).size() != n)
    malformed("element labels are not distinct");
  if (m.identity < 0 || static_cast<std::size_t>(m.identity) >= n)
    malformed("identity index out of range");
  if (m.table.size() != n)
    malformed("table has " + std::to_string(m.table.size()) + " rows, expected " +
              std::to_string(n));
  for (std::size_t a = 0; a < m.table.size(); ++a) {
    if (m.table[a].size() != n)
      malformed("row " + std::to_string(a) + " has " + std::to_string(m.table[a].size()) +
                " entries");
    for (int x : m.table[a])
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        malformed("row " + std::to_string(a) + " contains out-of-range index " +
                  std::to_string(x));
  }
  if (!rep.ok())
    return rep;

  for (std::size_t a = 0; a < n; ++a) {
    const int ai = static_cast<int>(a);
    if (m.mul(m.identity, ai) != ai || m.mul(ai, m.identity) != ai)
      rep.issues.push_back({ValidationIssue::Kind::IdentityLaw,
                            m.elements[m.identity] + " is not a two-sided identity for " +
                                m.elements[a]});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int ai = static_cast<int>(a), bi = static_cast<int>(b), ci = static_cast<int>(c);
        const int l = m.mul(m.mul(ai, bi), ci), r = m.mul(ai, m.mul(bi, ci));
        if (l != r)
          rep.issues.push_back({ValidationIssue::Kind::Associativity,
                                "(" + m.elements[a] + m.elements[b] + ")" + m.elements[c] +
                                    " = " + m.elements[static_cast<std::size_t>(l)] + " but " +
                                    m.elements[a] + "(" + m.elements[b] + m.elements[c] +
                                    ") = " + m.elements[static_cast<std::size_t>(r)]});
      }
  return rep;
}

void require_valid(const FiniteMonoid &m) {
  auto rep = validate_monoid(m);
  if (rep.has(ValidationIssue::Kind::MalformedTable))
    throw MalformedTable(rep.to_string());
  if (!rep.ok())
    throw InvalidInput("not a monoid:\n" + rep.to_string());
}

bool is_group(const FiniteMonoid &m) {
  const auto n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = m.mul(a, b) == m.identity && m.mul(b, a) == m.identity;
    if (!found)
      return false;
  }
  return true;
}

FiniteMonoid cyclic_group(int n) {
  if (n < 1)
    throw InvalidInput("cyclic group order must be positive");
  FiniteMonoid m;
  for (int i = 0; i < n; ++i)
    m.elements.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
  m.identity = 0;
  m.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return m;
}

FiniteMonoid trivial_monoid() { return FiniteMonoid{{"1"}, 0, {{0}}}; }

FiniteMonoid idempotent_monoid() { return FiniteMonoid{{"1", "b"}, 0, {{0, 1}, {1, 1}}}; }

PresentedDgAlgebra monoid_algebra(const FiniteMonoid &m) {
  require_valid(m);
  PresentedDgAlgebra a;
  a.augmentation = std::vector<Integer>{};
  std::vector<int> gen_of(m.size(), -1);
  for (int e : m.nonidentity())
    gen_of[static_cast<std::size_t>(e)] = a.add_generator(m.elements[static_cast<std::size_t>(e)], 0);
  for (auto &v : *a.augmentation)
    v = 1;
  auto element = [&](int e) {
    if (e == m.identity)
      return Polynomial::constant(1);
    return Polynomial::generator(gen_of[static_cast<std::size_t>(e)]);
  };
  for (int x : m.nonidentity())
    for (int y : m.nonidentity())
      a.relations.push_back({element(x) * element(y), element(m.mul(x, y))});
  return a;
}

bool is_homomorphism(const MonoidMap &f) {
  if (f.images.size() != f.source.size())
    return false;
  for (int x : f.images)
    if (x < 0 || static_cast<std::size_t>(x) >= f.target.size())
      return false;
  if (f.images[static_cast<std::size_t>(f.source.identity)] != f.target.identity)
    return false;
  const auto n = static_cast<int>(f.source.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.images[static_cast<std::size_t>(f.source.mul(a, b))] !=
          f.target.mul(f.images[static_cast<std::size_t>(a)], f.images[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

MonoidMap identity_map(const FiniteMonoid &m) {
  MonoidMap f{m, m, {}};
  for (std::size_t i = 0; i < m.size(); ++i)
    f.images.push_back(static_cast<int>(i));
  return f;
}

// ------------------------------------------------------------ presentations

std::optional<int> MonoidPresentation::find(const std::string &label) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == label)
      return static_cast<int>(i);
  return std::nullopt;
}

std::string MonoidPresentation::word_string(const GroupWord &w) const {
  if (w.empty())
    return "1";
  const bool compact = std::all_of(gens.begin(), gens.end(),
                                   [](const std::string &g) { return g.size() == 1; }) &&
                       std::none_of(w.begin(), w.end(), [](const Letter &l) { return l.inverse; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i)
      out += ' ';
    out += gens[static_cast<std::size_t>(w[i].gen)];
    if (w[i].inverse)
      out += "^-1";
  }
  return out;
}

GroupWord MonoidPresentation::parse_word(const std::string &s) const {
  GroupWord w;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '*' || s[pos] == '.'))
      ++pos;
  };
  skip();
  if (s.substr(pos) == "1" && !find("1"))
    return w;
  while (pos < s.size()) {
    // longest generator label matching at pos
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens[g].size() > best_len && s.compare(pos, gens[g].size(), gens[g]) == 0) {
        best = static_cast<int>(g);
        best_len = gens[g].size();
      }
    if (best < 0)
      throw InvalidInput("cannot parse word '" + s + "' at offset " + std::to_string(pos));
    pos += best_len;
    Letter l{best, false};
    if (s.compare(pos, 3, "^-1") == 0) {
      if (!group)
        throw InvalidInput("inverse letters are only allowed in group presentations");
      l.inverse = true;
      pos += 3;
    }
    w.push_back(l);
    skip();
  }
  return w;
}

std::string MonoidPresentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens.size(); ++i)
    os << (i ? ", " : "") << gens[i];
  os << " | ";
  for (std::size_t i = 0; i < rels.size(); ++i)
    os << (i ? ", " : "") << word_string(rels[i].first) << " = " << word_string(rels[i].second);
  os << '>' << (group ? " (group)" : "");
  return os.str();
}

MonoidPresentation presentation_of(const FiniteMonoid &m) {
  require_valid(m);
  MonoidPresentation p;
  std::vector<int> gen_of(m.size(), -1);
  for (int e : m.nonidentity()) {
    gen_of[static_cast<std::size_t>(e)] = static_cast<int>(p.gens.size());
    p.gens.push_back(m.elements[static_cast<std::size_t>(e)]);
  }
  auto word = [&](int e) {
    GroupWord w;
    if (e != m.identity)
      w.push_back({gen_of[static_cast<std::size_t>(e)], false});
    return w;
  };
  for (int x : m.nonidentity())
    for (int y : m.nonidentity())
      p.rels.push_back({GroupWord{{gen_of[static_cast<std::size_t>(x)], false},
                                  {gen_of[static_cast<std::size_t>(y)], false}},
                        word(m.mul(x, y))});
  return p;
}

PresentedDgAlgebra monoid_ring(const MonoidPresentation &p) {
  PresentedDgAlgebra a;
  for (const auto &g : p.gens)
    a.add_generator(g, 0);
  std::vector<int> inv(p.gens.size(), -1);
  if (p.group)
    for (std::size_t g = 0; g < p.gens.size(); ++g)
      inv[g] = a.add_generator(p.gens[g] + "^-1", 0);
  a.augmentation = std::vector<Integer>(a.gens.size(), Integer(1));
  auto poly = [&](const GroupWord &w) {
    Word out;
    for (const auto &l : w)
      out.push_back(l.inverse ? inv[static_cast<std::size_t>(l.gen)] : l.gen);
    return Polynomial::monomial(out);
  };
  for (std::size_t g = 0; g < p.gens.size(); ++g)
    if (inv[g] >= 0) {
      const int x = static_cast<int>(g);
      a.relations.push_back({Polynomial::monomial({x, inv[g]}), Polynomial::constant(1)});
      a.relations.push_back({Polynomial::monomial({inv[g], x}), Polynomial::constant(1)});
    }
  for (const auto &[u, v] : p.rels)
    a.relations.push_back({poly(u), poly(v)});
  return a;
}

GroupWord inverse_word(const GroupWord &w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto &l : out)
    l.inverse = !l.inverse;
  return out;
}

GroupWord free_reduce(GroupWord w) {
  GroupWord out;
  for (const auto &l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<GroupWord> relators(const MonoidPresentation &p) {
  std::vector<GroupWord> out;
  for (const auto &[u, v] : p.rels) {
    GroupWord r = u;
    const GroupWord vi = inverse_word(v);
    r.insert(r.end(), vi.begin(), vi.end());
    out.push_back(free_reduce(std::move(r)));
  }
  return out;
}

// ---------------------------------------------------------- group completion

namespace {

GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().gen == w.back().gen &&
         w.front().inverse != w.back().inverse) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

// Least cyclic rotation of w or of its inverse, so that conjugate and
// inverse relators compare equal.
GroupWord canonical_relator(GroupWord w) {
  w = cyclic_reduce(std::move(w));
  GroupWord best = w;
  for (const GroupWord &base : {w, inverse_word(w)})
    for (std::size_t k = 0; k < base.size(); ++k) {
      GroupWord rot(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
      if (rot < best)
        best = std::move(rot);
    }
  return best;
}

GroupWord substitute(const GroupWord &w, int gen, const GroupWord &replacement) {
  GroupWord out;
  const GroupWord inv = inverse_word(replacement);
  for (const auto &l : w) {
    if (l.gen == gen) {
      const GroupWord &r = l.inverse ? inv : replacement;
      out.insert(out.end(), r.begin(), r.end());
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(std::move(out));
}

} // namespace

std::string GroupCompletion::describe() const {
  if (kind == Kind::Free)
    return free_rank == 1 ? "infinite cyclic (free of rank 1)"
                          : "free of rank " + std::to_string(free_rank);
  const std::size_t n = table ? table->order() : 0;
  return n == 1 ? "trivial group" : "finite group of order " + std::to_string(n);
}

CompletionResult group_completion(const MonoidPresentation &p, std::size_t budget) {
  const std::size_t n = p.gens.size();
  std::vector<GroupWord> rels;
  for (auto &r : relators(p)) {
    r = canonical_relator(std::move(r));
    if (!r.empty() && std::find(rels.begin(), rels.end(), r) == rels.end())
      rels.push_back(std::move(r));
  }
  std::vector<bool> alive(n, true);
  std::vector<GroupWord> images(n);
  for (std::size_t g = 0; g < n; ++g)
    images[g] = GroupWord{{static_cast<int>(g), false}};
  std::vector<std::string> log;

  // Tietze: eliminate a generator that occurs exactly once in some relator.
  std::size_t work = 0;
  for (bool progress = true; progress;) {
    progress = false;
    std::sort(rels.begin(), rels.end(),
              [](const GroupWord &a, const GroupWord &b) { return a.size() < b.size(); });
    for (std::size_t ri = 0; ri < rels.size() && !progress; ++ri) {
      const GroupWord &r = rels[ri];
      std::map<int, int> count;
      for (const auto &l : r)
        ++count[l.gen];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const int g = r[pos].gen;
        if (count[g] != 1)
          continue;
        // r = A g^e B = 1  =>  g^e = A^-1 B^-1  =>  g = (B A)^-e
        GroupWord a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        GroupWord b(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
        GroupWord ba = b;
        ba.insert(ba.end(), a.begin(), a.end());
        GroupWord value = r[pos].inverse ? free_reduce(ba) : inverse_word(free_reduce(ba));
        std::vector<GroupWord> next;
        for (std::size_t rj = 0; rj < rels.size(); ++rj) {
          if (rj == ri)
            continue;
          GroupWord s = canonical_relator(substitute(rels[rj], g, value));
          work += s.size();
          if (!s.empty() && std::find(next.begin(), next.end(), s) == next.end())
            next.push_back(std::move(s));
        }
        for (auto &img : images)
          img = substitute(img, g, value);
        log.push_back(p.gens[static_cast<std::size_t>(g)] + " = " +
                      (value.empty() ? std::string("1") : [&] {
                        MonoidPresentation tmp = p;
                        tmp.group = true;
                        return tmp.word_string(value);
                      }()));
        alive[static_cast<std::size_t>(g)] = false;
        rels = std::move(next);
        progress = true;
        break;
      }
    }
    if (work > budget)
      return Exhausted{"Tietze substitution exceeded the budget", p};
  }

  // Renumber surviving generators.
  std::vector<int> renum(n, -1);
  GroupCompletion out;
  out.presentation.group = true;
  for (std::size_t g = 0; g < n; ++g)
    if (alive[g]) {
      renum[g] = static_cast<int>(out.presentation.gens.size());
      out.presentation.gens.push_back(p.gens[g]);
    }
  auto rename = [&](const GroupWord &w) {
    GroupWord x;
    for (const auto &l : w)
      x.push_back({renum[static_cast<std::size_t>(l.gen)], l.inverse});
    return x;
  };
  for (const auto &r : rels)
    out.presentation.rels.push_back({rename(r), GroupWord{}});
  for (const auto &img : images)
    out.generator_images.push_back(rename(img));
  out.tietze_log = std::move(log);

  const std::size_t rank = out.presentation.gens.size();
  if (rels.empty() && rank > 0) {
    out.kind = GroupCompletion::Kind::Free;
    out.free_rank = rank;
    return out;
  }
  std::vector<GroupWord> renamed;
  for (const auto &r : rels)
    renamed.push_back(rename(r));
  auto table = enumerate_cosets(rank, renamed, budget);
  if (!table)
    return Exhausted{"coset enumeration exceeded " + std::to_string(budget) + " cosets",
                     out.presentation};
  out.kind = GroupCompletion::Kind::Finite;
  out.table = std::move(table);
  return out;
}

std::optional<bool> induced_completion_iso(const MonoidMap &f, const GroupCompletion &src,
                                           const GroupCompletion &dst) {
  auto trivial = [](const GroupCompletion &c) {
    return c.kind == GroupCompletion::Kind::Finite && c.table && c.table->order() == 1;
  };
  if (trivial(src) && trivial(dst))
    return true;
  if (src.kind != dst.kind)
    return std::nullopt;
  if (src.kind == GroupCompletion::Kind::Free) {
    if (src.free_rank != dst.free_rank)
      return false;
    return std::nullopt;
  }
  const CosetTable &ts = *src.table, &td = *dst.table;
  if (ts.order() != td.order())
    return false;

  // generator index of a target element in the target presentation
  std::vector<int> dst_gen(f.target.size(), -1);
  {
    int k = 0;
    for (int e : f.target.nonidentity())
      dst_gen[static_cast<std::size_t>(e)] = k++;
  }
  // Each surviving source generator is an original non-identity element.
  std::vector<GroupWord> phi;
  for (const auto &label : src.presentation.gens) {
    const auto e = f.source.index_of(label);
    if (!e)
      return std::nullopt;
    const int img = f.images[static_cast<std::size_t>(*e)];
    if (img == f.target.identity)
      phi.emplace_back();
    else
      phi.push_back(dst.generator_images[static_cast<std::size_t>(dst_gen[static_cast<std::size_t>(img)])]);
  }
  // Orbit of the identity coset under the image subgroup.
  std::vector<bool> seen(td.order(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (const auto &w : phi)
      for (const GroupWord &x : {w, inverse_word(w)}) {
        const int d = td.act(c, x);
        if (!seen[static_cast<std::size_t>(d)]) {
          seen[static_cast<std::size_t>(d)] = true;
          ++reached;
          stack.push_back(d);
        }
      }
  }
  return reached == td.order();
}

} // namespace monoloc
