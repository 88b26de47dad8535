#include "monoloc/loopgroup.hpp"

#include "monoloc/error.hpp"

#include <algorithm>
#include <map>

namespace monoloc {

namespace {

/// All formal (dim)-simplices of k whose degeneracy set avoids 0.
std::vector<FormalSimplex> loop_generators(const SimplicialSet &k, int dim) {
  std::vector<FormalSimplex> out;
  for (int m = 0; m <= dim; ++m) {
    const int count = dim - m; // number of degeneracies
    for (const auto &y : k.simplices_or_throw(m)) {
      // choose count indices from 1..dim-1, stored decreasing
      std::vector<int> pick;
      auto rec = [&](auto &&self, int next) -> void {
        if (static_cast<int>(pick.size()) == count) {
          std::vector<int> js(pick.rbegin(), pick.rend());
          out.push_back({y, js});
          return;
        }
        for (int j = next; j <= dim - 1; ++j) {
          pick.push_back(j);
          self(self, j + 1);
          pick.pop_back();
        }
      };
      rec(rec, 1);
    }
  }
  return out;
}

bool in_s0_image(const FormalSimplex &x) {
  return !x.degens.empty() && x.degens.back() == 0;
}

GroupWord concat(GroupWord a, const GroupWord &b) {
  a.insert(a.end(), b.begin(), b.end());
  return free_reduce(std::move(a));
}

/// Image of a word under a level map given on generators.
GroupWord substitute(const GroupWord &w, const std::vector<GroupWord> &images) {
  GroupWord out;
  for (const auto &l : w) {
    const GroupWord &img = images.at(static_cast<std::size_t>(l.gen));
    out = concat(std::move(out), l.inverse ? inverse_word(img) : img);
  }
  return out;
}

} // namespace

std::vector<LoopGroupLevel> kan_loop_group(const SimplicialSet &k, int hi) {
  if (!k.reduced() || k.simplices_or_throw(0).size() != 1)
    throw NotReduced(k.name() + " has more than one vertex");
  if (hi < 0)
    throw WindowTooSmall("hi must be nonnegative");

  std::vector<std::vector<FormalSimplex>> gens;
  std::vector<std::map<FormalSimplex, int>> index;
  for (int n = 0; n <= hi + 1; ++n) {
    if (n == hi + 1 && !k.simplices(n + 1))
      break;
    auto g = loop_generators(k, n + 1);
    std::map<FormalSimplex, int> idx;
    for (std::size_t i = 0; i < g.size(); ++i)
      idx[g[i]] = static_cast<int>(i);
    gens.push_back(std::move(g));
    index.push_back(std::move(idx));
  }
  // t(x) for a formal simplex of dimension n + 1, a word in level n
  auto tau = [&](const FormalSimplex &x) {
    if (in_s0_image(x))
      return GroupWord{};
    const int level = x.dim() - 1;
    return GroupWord{{index.at(static_cast<std::size_t>(level)).at(x), false}};
  };

  std::vector<LoopGroupLevel> levels;
  for (int n = 0; n <= hi; ++n) {
    LoopGroupLevel lv;
    lv.n = n;
    lv.generators = gens[static_cast<std::size_t>(n)];
    for (const auto &x : lv.generators) {
      lv.labels.push_back(formal_label(k, x));
      std::vector<GroupWord> fs;
      if (n >= 1) {
        fs.push_back(concat(tau(face(k, x, 1)), inverse_word(tau(face(k, x, 0)))));
        for (int i = 1; i <= n; ++i)
          fs.push_back(tau(face(k, x, i + 1)));
      }
      lv.faces.push_back(std::move(fs));
      std::vector<GroupWord> ss;
      if (static_cast<std::size_t>(n + 1) < gens.size())
        for (int j = 0; j <= n; ++j)
          ss.push_back(tau(degeneracy(x, j + 1)));
      lv.degeneracies.push_back(std::move(ss));
    }
    levels.push_back(std::move(lv));
  }
  const auto report = validate_loop_group(levels);
  if (!report.ok())
    throw InvalidInput("loop group of " + k.name() + " fails: " + report.to_string());
  return levels;
}

ValidationReport validate_loop_group(const std::vector<LoopGroupLevel> &levels) {
  ValidationReport r;
  auto fail = [&](int n, std::size_t g, const std::string &what) {
    r.issues.push_back({ValidationIssue::Kind::SimplicialIdentity,
                        "level " + std::to_string(n) + ", generator " +
                            levels[static_cast<std::size_t>(n)].labels[g] + ": " + what});
  };
  auto face_images = [&](int n, int i) {
    std::vector<GroupWord> out;
    for (const auto &f : levels[static_cast<std::size_t>(n)].faces)
      out.push_back(f.at(static_cast<std::size_t>(i)));
    return out;
  };
  auto degen_images = [&](int n, int j) {
    std::vector<GroupWord> out;
    for (const auto &s : levels[static_cast<std::size_t>(n)].degeneracies)
      out.push_back(s.at(static_cast<std::size_t>(j)));
    return out;
  };
  auto has_degens = [&](int n) {
    return n >= 0 && static_cast<std::size_t>(n) < levels.size() &&
           (levels[static_cast<std::size_t>(n)].generators.empty() ||
            !levels[static_cast<std::size_t>(n)].degeneracies.front().empty());
  };
  for (int n = 0; n < static_cast<int>(levels.size()); ++n) {
    const auto &lv = levels[static_cast<std::size_t>(n)];
    for (std::size_t g = 0; g < lv.generators.size(); ++g) {
      const GroupWord self{{static_cast<int>(g), false}};
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (substitute(lv.faces[g][static_cast<std::size_t>(j)], face_images(n - 1, i)) !=
                substitute(lv.faces[g][static_cast<std::size_t>(i)], face_images(n - 1, j - 1)))
              fail(n, g, "d" + std::to_string(i) + " d" + std::to_string(j));
      if (!has_degens(n) || static_cast<std::size_t>(n + 1) >= levels.size())
        continue;
      for (int j = 0; j <= n; ++j) {
        const GroupWord &sj = lv.degeneracies[g][static_cast<std::size_t>(j)];
        for (int i = 0; i <= n + 1; ++i) {
          const GroupWord lhs = substitute(sj, face_images(n + 1, i));
          GroupWord rhs;
          if (i == j || i == j + 1)
            rhs = self;
          else if (i < j)
            rhs = substitute(lv.faces[g][static_cast<std::size_t>(i)], degen_images(n - 1, j - 1));
          else
            rhs = substitute(lv.faces[g][static_cast<std::size_t>(i - 1)], degen_images(n - 1, j));
          if (lhs != rhs)
            fail(n, g, "d" + std::to_string(i) + " s" + std::to_string(j));
        }
        // s_i s_j = s_{j+1} s_i for i <= j
        if (has_degens(n + 1) && static_cast<std::size_t>(n + 2) < levels.size())
          for (int i = 0; i <= j; ++i)
            if (substitute(sj, degen_images(n + 1, i)) !=
                substitute(lv.degeneracies[g][static_cast<std::size_t>(i)], degen_images(n + 1, j + 1)))
              fail(n, g, "s" + std::to_string(i) + " s" + std::to_string(j));
      }
    }
  }
  return r;
}

MonoidPresentation pi1_presentation(const SimplicialSet &k) {
  MonoidPresentation p = fundamental_monoid(k);
  p.group = true;
  return p;
}

HomologyGroup abelianization(const MonoidPresentation &p) {
  const auto rels = relators(p);
  HomologyGroup h;
  if (p.gens.empty())
    return h;
  IntMatrix m(std::max<std::size_t>(rels.size(), 1), p.gens.size());
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto &l : rels[r])
      m(r, static_cast<std::size_t>(l.gen)) += l.inverse ? -1 : 1;
  std::size_t rank = 0;
  for (const auto &d : smith_divisors(m)) {
    if (d == 0)
      continue;
    ++rank;
    if (d != 1)
      h.torsion.push_back(d);
  }
  h.free_rank = p.gens.size() - rank;
  return h;
}

H0Comparison h0_compare(const SimplicialSet &k, std::size_t budget) {
  H0Comparison out;
  out.pi1 = pi1_presentation(k);
  out.group_ring = monoid_ring(out.pi1);
  out.extended_h0 = h0_ring(extended_cobar(k, 2));
  const auto &r = out.group_ring;
  const auto &e = out.extended_h0;
  out.to_cobar.images.resize(r.gens.size());
  out.from_cobar.images.resize(e.gens.size());
  for (const auto &x : out.pi1.gens) {
    const int gx = r.find_or_throw(x), gi = r.find_or_throw(x + "^-1");
    const int tx = e.find_or_throw(x), vx = e.find_or_throw("v_" + x);
    out.to_cobar.images[static_cast<std::size_t>(gx)] =
        Polynomial::constant(1) + Polynomial::generator(tx);
    out.to_cobar.images[static_cast<std::size_t>(gi)] = Polynomial::generator(vx);
    out.from_cobar.images[static_cast<std::size_t>(tx)] =
        Polynomial::generator(gx) - Polynomial::constant(1);
    out.from_cobar.images[static_cast<std::size_t>(vx)] = Polynomial::generator(gi);
  }
  for (std::size_t g = 0; g < e.gens.size(); ++g)
    if (out.from_cobar.images[g].is_zero() && e.gens[g].degree == 0 &&
        !out.pi1.find(e.gens[g].label))
      throw InvalidInput("unexpected degree-0 generator " + e.gens[g].label);
  out.certificate = ring_iso_certify(r, e, out.to_cobar, out.from_cobar, budget);
  return out;
}

} // namespace monoloc
