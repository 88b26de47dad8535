// HLT coset enumeration over the trivial subgroup, following the usual
// scan-and-fill / coincidence-queue formulation.

#include "monoloc/monoids.hpp"

#include <deque>
#include <numeric>

namespace monoloc {

int CosetTable::act(int coset, const GroupWord &w) const {
  for (const auto &l : w)
    coset = act(coset, l);
  return coset;
}

std::vector<GroupWord> CosetTable::representatives() const {
  std::vector<GroupWord> reps(order());
  std::vector<bool> seen(order(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (std::size_t col = 0; col < 2 * generator_count; ++col) {
      const Letter l{static_cast<int>(col / 2), col % 2 == 1};
      const int d = act(c, l);
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = true;
        reps[static_cast<std::size_t>(d)] = reps[static_cast<std::size_t>(c)];
        reps[static_cast<std::size_t>(d)].push_back(l);
        queue.push_back(d);
      }
    }
  }
  return reps;
}

namespace {

class Enumerator {
public:
  Enumerator(std::size_t gens, std::size_t max_cosets)
      : cols_(2 * gens), max_(max_cosets) {
    new_coset();
  }

  bool overflow() const { return overflow_; }
  std::size_t size() const { return table_.size(); }
  bool live(int c) const { return forward_[static_cast<std::size_t>(c)] == c; }

  int get(int c, int x) const {
    return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
  }
  void set(int c, int x, int d) {
    table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d;
  }

  int define(int c, int x) {
    const int n = new_coset();
    if (n < 0)
      return -1;
    set(c, x, n);
    set(n, x ^ 1, c);
    return n;
  }

  /// Traces w from c in both directions, filling the single gap if one
  /// remains and defining new cosets otherwise.
  void scan_and_fill(int c, const std::vector<int> &w) {
    if (w.empty())
      return;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, w[static_cast<std::size_t>(i)]) >= 0)
        f = get(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j >= i && get(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0)
        b = get(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[static_cast<std::size_t>(i)], b);
        set(b, w[static_cast<std::size_t>(i)] ^ 1, f);
        return;
      }
      if (define(f, w[static_cast<std::size_t>(i)]) < 0)
        return;
    }
  }

  void fill_row(int c) {
    for (int x = 0; x < static_cast<int>(cols_) && live(c) && !overflow_; ++x)
      if (get(c, x) < 0)
        define(c, x);
  }

  CosetTable finish(std::size_t gens) const {
    std::vector<int> renum(table_.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (forward_[c] == static_cast<int>(c))
        renum[c] = k++;
    CosetTable t;
    t.generator_count = gens;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (renum[c] < 0)
        continue;
      std::vector<int> row(cols_);
      for (std::size_t x = 0; x < cols_; ++x)
        row[x] = renum[static_cast<std::size_t>(rep(table_[c][x]))];
      t.action.push_back(std::move(row));
    }
    return t;
  }

private:
  int new_coset() {
    if (table_.size() >= max_) {
      overflow_ = true;
      return -1;
    }
    table_.emplace_back(cols_, -1);
    forward_.push_back(static_cast<int>(forward_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  int rep(int c) const {
    while (forward_[static_cast<std::size_t>(c)] != c)
      c = forward_[static_cast<std::size_t>(c)];
    return c;
  }
  int rep_compress(int c) {
    int r = rep(c);
    while (forward_[static_cast<std::size_t>(c)] != r) {
      const int n = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = n;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int> &queue) {
    a = rep_compress(a);
    b = rep_compress(b);
    if (a == b)
      return;
    if (a > b)
      std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < static_cast<int>(cols_); ++x) {
        const int f = get(e, x);
        if (f < 0)
          continue;
        if (get(f, x ^ 1) == e)
          set(f, x ^ 1, -1);
        const int e1 = rep_compress(e), f1 = rep_compress(f);
        if (get(e1, x) >= 0)
          merge(f1, get(e1, x), queue);
        else if (get(f1, x ^ 1) >= 0)
          merge(e1, get(f1, x ^ 1), queue);
        else {
          set(e1, x, f1);
          set(f1, x ^ 1, e1);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  bool overflow_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> forward_;
};

} // namespace

std::optional<CosetTable> enumerate_cosets(std::size_t generator_count,
                                           const std::vector<GroupWord> &relators,
                                           std::size_t max_cosets) {
  std::vector<std::vector<int>> rels;
  for (const auto &r : relators) {
    std::vector<int> w;
    for (const auto &l : r)
      w.push_back(2 * l.gen + (l.inverse ? 1 : 0));
    if (!w.empty())
      rels.push_back(std::move(w));
  }
  Enumerator e(generator_count, std::max<std::size_t>(max_cosets, 1));
  for (int c = 0; c < static_cast<int>(e.size()); ++c) {
    for (const auto &r : rels) {
      if (!e.live(c))
        break;
      e.scan_and_fill(c, r);
      if (e.overflow())
        return std::nullopt;
    }
    if (e.live(c))
      e.fill_row(c);
    if (e.overflow())
      return std::nullopt;
  }
  return e.finish(generator_count);
}

} // namespace monoloc
