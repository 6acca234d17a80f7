#include "bankit/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "bankit/core.hpp"
#include "bankit/error.hpp"

namespace bankit {

std::uint64_t below(Rng& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

namespace {

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[below(rng, k)]);
}

bool positive_monotone(const TruthTable& t, std::size_t k) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t m = 0; m < k; ++m) {
      if (!(a >> m & 1U) && t[a] && !t[a | (std::size_t{1} << m)]) return false;
    }
  }
  return true;
}

bool full_support(const TruthTable& t, std::size_t k) {
  for (std::size_t m = 0; m < k; ++m) {
    bool essential = false;
    for (std::size_t a = 0; a < t.size() && !essential; ++a) {
      essential = t[a] != t[a ^ (std::size_t{1} << m)];
    }
    if (!essential) return false;
  }
  return true;
}

BoolExpr literal(Automaton j, bool negative) {
  return negative ? BoolExpr::negation(BoolExpr::variable(j)) : BoolExpr::variable(j);
}

BoolExpr source_loop(Automaton i) { return BoolExpr::variable(i); }

// Random full-support monotone function over signed inputs.
BoolExpr random_signed_function(const std::vector<Automaton>& inputs,
                                const std::vector<bool>& negative, Rng& rng) {
  const auto& tables = full_support_monotone_tables(inputs.size());
  return monotone_expr(tables[below(rng, tables.size())], inputs, negative);
}

// In-neighbours of i drawn from `candidates`.
std::vector<Automaton> pick_inputs(std::vector<Automaton> candidates, Rng& rng,
                                   double p, std::size_t max_in) {
  shuffle(candidates, rng);
  std::vector<Automaton> in;
  for (Automaton j : candidates) {
    if (in.size() < max_in && coin(rng, p)) in.push_back(j);
  }
  std::sort(in.begin(), in.end());
  return in;
}

}  // namespace

const std::vector<TruthTable>& full_support_monotone_tables(std::size_t k) {
  static const auto cache = [] {
    std::array<std::vector<TruthTable>, 5> out;
    for (std::size_t kk = 0; kk <= 4; ++kk) {
      const std::size_t rows = std::size_t{1} << kk;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << rows); ++code) {
        TruthTable t(rows);
        for (std::size_t a = 0; a < rows; ++a) t[a] = (code >> a) & 1U;
        if (positive_monotone(t, kk) && full_support(t, kk)) out[kk].push_back(t);
      }
    }
    return out;
  }();
  if (k > 4) throw Error(ErrorCode::too_large, "monotone tables are tabulated up to 4 inputs");
  return cache[k];
}

BoolExpr monotone_expr(const TruthTable& table, const std::vector<Automaton>& inputs,
                       const std::vector<bool>& negative) {
  const std::size_t k = inputs.size();
  std::vector<BoolExpr> terms;
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (!table[a]) continue;
    bool minimal = true;
    for (std::size_t m = 0; m < k && minimal; ++m) {
      if ((a >> m & 1U) && table[a & ~(std::size_t{1} << m)]) minimal = false;
    }
    if (!minimal) continue;
    std::vector<BoolExpr> lits;
    for (std::size_t m = 0; m < k; ++m) {
      if (a >> m & 1U) lits.push_back(literal(inputs[m], negative[m]));
    }
    if (lits.empty()) return BoolExpr::constant(true);
    terms.push_back(lits.size() == 1 ? lits.front() : BoolExpr::conjunction(std::move(lits)));
  }
  if (terms.empty()) return BoolExpr::constant(false);
  return terms.size() == 1 ? terms.front() : BoolExpr::disjunction(std::move(terms));
}

Ban random_monotone_ban(std::size_t n, Rng& rng, MonotoneOptions opts) {
  const std::size_t max_in = std::min<std::size_t>(opts.max_in_degree, 4);
  std::vector<BoolExpr> fs;
  for (Automaton i = 0; i < n; ++i) {
    std::vector<Automaton> candidates;
    for (Automaton j = 0; j < n; ++j) {
      if (j != i || opts.allow_loops) candidates.push_back(j);
    }
    const auto in = pick_inputs(candidates, rng, opts.arc_probability, max_in);
    if (in.empty()) {
      fs.push_back(opts.allow_constants ? BoolExpr::constant(coin(rng, 0.5)) : source_loop(i));
      continue;
    }
    std::vector<bool> neg(in.size());
    for (std::size_t m = 0; m < in.size(); ++m) neg[m] = coin(rng, 0.5);
    fs.push_back(random_signed_function(in, neg, rng));
  }
  return Ban(std::move(fs));
}

Ban random_ban(std::size_t n, Rng& rng, std::size_t max_in_degree) {
  std::vector<Automaton> all(n);
  std::iota(all.begin(), all.end(), Automaton{0});
  std::vector<BoolExpr> fs;
  for (Automaton i = 0; i < n; ++i) {
    const auto in = pick_inputs(all, rng, 0.5, std::min<std::size_t>(max_in_degree, 6));
    TruthTable t(std::size_t{1} << in.size());
    for (std::size_t a = 0; a < t.size(); ++a) t[a] = coin(rng, 0.5);
    fs.push_back(expr_from_table(t, in));
  }
  return Ban(std::move(fs));
}

Ban random_nice_ban(std::size_t n, Rng& rng, bool strongly_connected,
                    std::size_t max_in_degree) {
  const std::size_t max_in = std::clamp<std::size_t>(max_in_degree, 1, 4);
  std::vector<bool> flipped(n);
  for (Automaton i = 0; i < n; ++i) flipped[i] = coin(rng, 0.5);

  std::vector<AutomatonSet> in(n);
  if (strongly_connected && n > 0) {
    std::vector<Automaton> perm(n);
    std::iota(perm.begin(), perm.end(), Automaton{0});
    shuffle(perm, rng);
    for (std::size_t k = 0; k < n; ++k) in[perm[(k + 1) % n]].insert(perm[k]);
  }
  for (Automaton i = 0; i < n; ++i) {
    for (Automaton j = 0; j < n; ++j) {
      if (in[i].size() < max_in && coin(rng, 0.3)) in[i].insert(j);
    }
  }
  std::vector<BoolExpr> fs;
  for (Automaton i = 0; i < n; ++i) {
    const auto inputs = in[i].members();
    if (inputs.empty()) {
      fs.push_back(source_loop(i));
      continue;
    }
    std::vector<bool> neg(inputs.size());
    for (std::size_t m = 0; m < inputs.size(); ++m) neg[m] = flipped[inputs[m]] != flipped[i];
    fs.push_back(random_signed_function(inputs, neg, rng));
  }
  return Ban(std::move(fs));
}

Ban random_acyclic_ban(std::size_t n, Rng& rng, std::size_t max_in_degree) {
  const std::size_t max_in = std::min<std::size_t>(max_in_degree, 4);
  std::vector<Automaton> order(n);
  std::iota(order.begin(), order.end(), Automaton{0});
  shuffle(order, rng);
  std::vector<BoolExpr> fs(n, BoolExpr::constant(false));
  for (std::size_t k = 0; k < n; ++k) {
    const Automaton i = order[k];
    const std::vector<Automaton> earlier(order.begin(), order.begin() + static_cast<long>(k));
    const auto in = pick_inputs(earlier, rng, 0.5, max_in);
    if (in.empty()) {
      fs[i] = source_loop(i);
      continue;
    }
    std::vector<bool> neg(in.size());
    for (std::size_t m = 0; m < in.size(); ++m) neg[m] = coin(rng, 0.5);
    fs[i] = random_signed_function(in, neg, rng);
  }
  return Ban(std::move(fs));
}

Ban path_ban(const std::vector<bool>& negative) {
  const std::size_t n = negative.size() + 1;
  std::vector<BoolExpr> fs{source_loop(0)};
  for (Automaton i = 1; i < n; ++i) fs.push_back(literal(i - 1, negative[i - 1]));
  return Ban(std::move(fs));
}

Ban cycle_ban(const std::vector<bool>& negative) {
  const std::size_t n = negative.size();
  std::vector<BoolExpr> fs;
  for (Automaton i = 0; i < n; ++i) {
    const Automaton j = (i + n - 1) % n;
    fs.push_back(literal(j, negative[j]));
  }
  return Ban(std::move(fs));
}

Ban random_path(std::size_t n, Rng& rng) {
  std::vector<bool> neg(n == 0 ? 0 : n - 1);
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = coin(rng, 0.5);
  return path_ban(neg);
}

Ban random_cycle(std::size_t n, Rng& rng, bool positive) {
  std::vector<bool> neg(n);
  bool parity = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    neg[k] = coin(rng, 0.5);
    parity ^= neg[k];
  }
  if (n > 0) neg[n - 1] = parity == positive;
  return cycle_ban(neg);
}

std::vector<Ban> all_two_automaton_bans() {
  std::vector<Ban> out;
  const std::vector<Automaton> inputs{0, 1};
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      TruthTable ta(4);
      TruthTable tb(4);
      for (unsigned r = 0; r < 4; ++r) {
        ta[r] = (a >> r) & 1U;
        tb[r] = (b >> r) & 1U;
      }
      out.emplace_back(std::vector<BoolExpr>{expr_from_table(ta, inputs),
                                             expr_from_table(tb, inputs)});
    }
  }
  return out;
}

std::size_t for_each_acyclic_monotone(std::size_t n,
                                      const std::function<void(const Ban&)>& visit) {
  if (n > 5) throw Error(ErrorCode::too_large, "structured enumeration is limited to 5 automata");
  // Every choice of local function for each automaton.
  std::vector<std::vector<BoolExpr>> options(n);
  for (Automaton i = 0; i < n; ++i) {
    options[i].push_back(source_loop(i));
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << i); ++sub) {
      const auto inputs = AutomatonSet(sub).members();
      const std::size_t k = inputs.size();
      for (const TruthTable& t : full_support_monotone_tables(k)) {
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << k); ++signs) {
          std::vector<bool> neg(k);
          for (std::size_t m = 0; m < k; ++m) neg[m] = (signs >> m) & 1U;
          options[i].push_back(monotone_expr(t, inputs, neg));
        }
      }
    }
  }
  std::size_t visited = 0;
  std::vector<std::size_t> pick(n, 0);
  std::vector<BoolExpr> fs;
  fs.reserve(n);
  while (true) {
    fs.clear();
    for (Automaton i = 0; i < n; ++i) fs.push_back(options[i][pick[i]]);
    visit(Ban(fs));
    ++visited;
    std::size_t k = 0;
    while (k < n && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  return visited;
}

Configuration random_configuration(std::size_t n, Rng& rng) {
  return Configuration(n, rng() & AutomatonSet::all(n).mask());
}

Trajectory random_trajectory(const Ban& ban, const Configuration& x, std::size_t max_length,
                             Rng& rng) {
  Trajectory t{x, {}};
  Configuration cur = x;
  while (t.length() < max_length) {
    const auto u = unstable_set(ban, cur).members();
    if (u.empty()) break;
    const Automaton i = u[below(rng, u.size())];
    t.moves.push_back(i);
    cur = cur.flipped(i);
  }
  return t;
}

Streamline random_streamline(const Ban& ban, const Configuration& x, std::size_t length,
                             Rng& rng) {
  Streamline s{x, {}};
  for (std::size_t k = 0; k < length; ++k) s.updates.push_back(below(rng, ban.size()));
  return s;
}

}  // namespace bankit
