#include "seqpat/periodic.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>

#include "seqpat/errors.hpp"

namespace seqpat {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Score of a chain of segments. Higher reps win; ties prefer the chain
// that starts earliest, then the one with fewer segments.
struct chain_value {
  long long reps = 0;
  std::size_t first_start = 0;
  std::size_t seg_count = 0;
};

bool chain_better(const chain_value& a, const chain_value& b) {
  if (a.reps != b.reps) return a.reps > b.reps;
  if (a.first_start != b.first_start) return a.first_start < b.first_start;
  return a.seg_count < b.seg_count;
}

// A chain whose last segment ends (exclusively) at end_pos; match_idx is
// the index of that segment's last match.
struct end_event {
  std::size_t end_pos = 0;
  chain_value val;
  std::size_t match_idx = 0;
};

// Best chain that can precede a segment starting at some position in one
// run, normalized so the value is independent of where the segment ends:
// key = predecessor reps - within-run index of the segment start.
struct run_prefix {
  bool set = false;
  long long key = 0;
  std::size_t first_start = 0;
  std::size_t seg_count = 0;
  std::size_t pred_match = 0;
  std::size_t seg_start = 0;
};

struct match_choice {
  std::size_t seg_start = 0;
  std::size_t pred = kNone;  // match index of the previous segment's end
};

bool result_order(const PeriodicResult& a, const PeriodicResult& b) {
  if (a.pattern.period() != b.pattern.period()) return a.pattern.period() < b.pattern.period();
  if (a.pattern.arity() != b.pattern.arity()) return a.pattern.arity() < b.pattern.arity();
  return a.pattern.slots() < b.pattern.slots();
}

}  // namespace

void PeriodicConfig::validate() const {
  if (min_rep < 1) throw ConfigError("min_rep must be at least 1");
  if (l_max < 1) throw ConfigError("l_max must be at least 1");
}

std::map<Symbol, std::set<std::size_t>> phase1_candidates(const SymbolSequence& s,
                                                          const PeriodicConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<std::size_t>> occ(s.alphabet_size());
  for (std::size_t i = 0; i < s.length(); ++i) occ[s[i].id].push_back(i);

  std::map<Symbol, std::set<std::size_t>> out;
  for (std::uint32_t id = 0; id < occ.size(); ++id) {
    const auto& positions = occ[id];
    if (positions.empty()) continue;
    std::vector<std::size_t> dist_count(cfg.l_max + 1, 0);
    for (std::size_t k = 1; k < positions.size(); ++k) {
      const std::size_t d = positions[k] - positions[k - 1];
      if (d <= cfg.l_max) ++dist_count[d];
    }
    for (std::size_t l = 1; l <= cfg.l_max; ++l) {
      if (dist_count[l] >= cfg.min_rep) out[Symbol{id}].insert(l);
    }
  }
  return out;
}

std::optional<ValidSubsequence> best_valid_subsequence(std::span<const std::size_t> match_positions,
                                                       std::size_t period,
                                                       const PeriodicConfig& cfg) {
  cfg.validate();
  if (period == 0) throw RangeError("period must be positive");
  const std::size_t n = match_positions.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (match_positions[i] <= match_positions[i - 1]) {
      throw RangeError("match positions must be strictly ascending");
    }
  }
  if (n == 0) return std::nullopt;

  // Group matches into runs of positions spaced exactly one period apart.
  std::vector<std::size_t> run_id(n), run_idx(n);
  std::vector<std::size_t> run_start;
  std::size_t prev_scan = 0;  // two-pointer: match_positions[i] - period ascends with i
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t u = match_positions[i];
    bool chained = false;
    if (u >= period) {
      const std::size_t want = u - period;
      while (prev_scan < i && match_positions[prev_scan] < want) ++prev_scan;
      if (prev_scan < i && match_positions[prev_scan] == want) {
        run_id[i] = run_id[prev_scan];
        run_idx[i] = run_idx[prev_scan] + 1;
        chained = true;
      }
    }
    if (!chained) {
      run_id[i] = run_start.size();
      run_idx[i] = 0;
      run_start.push_back(u);
    }
  }

  // One ascending pass. For each match u we may (a) release the segment
  // start that now has min_rep matches up to u, querying the best chain
  // ending within max_dist before it, and (b) score the best chain whose
  // last segment ends at u, either fresh or extending a released start.
  std::vector<chain_value> value(n);
  std::vector<bool> has_value(n, false);
  std::vector<match_choice> choice(n);
  std::vector<run_prefix> prefix(run_start.size());
  std::vector<end_event> pending;  // chains awaiting eligibility, end_pos ascending
  std::size_t pending_head = 0;
  std::deque<end_event> window;  // sliding max over eligible chain ends

  std::size_t best_idx = kNone;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t u = match_positions[i];
    const std::size_t r = run_id[i];

    if (run_idx[i] + 1 >= cfg.min_rep) {
      const std::size_t start_idx = run_idx[i] - (cfg.min_rep - 1);
      const std::size_t t = u - (cfg.min_rep - 1) * period;
      while (pending_head < pending.size() && pending[pending_head].end_pos <= t) {
        const end_event& e = pending[pending_head++];
        while (!window.empty() && !chain_better(window.back().val, e.val)) window.pop_back();
        window.push_back(e);
      }
      while (!window.empty() && window.front().end_pos + cfg.max_dist < t) window.pop_front();
      if (!window.empty()) {
        const end_event& f = window.front();
        run_prefix cand;
        cand.set = true;
        cand.key = f.val.reps - static_cast<long long>(start_idx);
        cand.first_start = f.val.first_start;
        cand.seg_count = f.val.seg_count;
        cand.pred_match = f.match_idx;
        cand.seg_start = t;
        run_prefix& cur = prefix[r];
        const bool replace =
            !cur.set || cand.key > cur.key ||
            (cand.key == cur.key &&
             (cand.first_start < cur.first_start ||
              (cand.first_start == cur.first_start && cand.seg_count < cur.seg_count)));
        if (replace) cur = cand;
      }
    }

    // Fresh chain: one segment stretched back to the start of the run.
    if (run_idx[i] + 1 >= cfg.min_rep) {
      value[i] = {static_cast<long long>(run_idx[i] + 1), run_start[r], 1};
      choice[i] = {run_start[r], kNone};
      has_value[i] = true;
    }
    // Extension: released start of this run plus its best predecessor.
    if (prefix[r].set) {
      const chain_value ext{static_cast<long long>(run_idx[i] + 1) + prefix[r].key,
                            prefix[r].first_start, prefix[r].seg_count + 1};
      if (!has_value[i] || chain_better(ext, value[i])) {
        value[i] = ext;
        choice[i] = {prefix[r].seg_start, prefix[r].pred_match};
        has_value[i] = true;
      }
    }
    if (has_value[i]) {
      pending.push_back({u + period, value[i], i});
      if (best_idx == kNone || chain_better(value[i], value[best_idx])) best_idx = i;
    }
  }

  if (best_idx == kNone) return std::nullopt;

  ValidSubsequence out;
  for (std::size_t cur = best_idx;;) {
    const std::size_t start = choice[cur].seg_start;
    const std::size_t reps = (match_positions[cur] - start) / period + 1;
    out.segments.push_back({start, reps});
    out.total_reps += reps;
    if (choice[cur].pred == kNone) break;
    cur = choice[cur].pred;
  }
  std::reverse(out.segments.begin(), out.segments.end());
  return out;
}

std::vector<PeriodicResult> phase2_single_patterns(
    const SymbolSequence& s, const PeriodicConfig& cfg,
    const std::map<Symbol, std::set<std::size_t>>& cands) {
  cfg.validate();
  std::vector<PeriodicResult> out;
  for (const auto& [sym, periods] : cands) {
    for (const std::size_t l : periods) {
      if (l == 0 || l > s.length()) continue;
      for (std::size_t offset = 0; offset < l; ++offset) {
        Pattern p = Pattern::single(sym, l, offset);
        const auto matches = find_matches(p, s);
        auto best = best_valid_subsequence(matches, l, cfg);
        if (best) out.push_back({std::move(p), std::move(*best)});
      }
    }
  }
  std::sort(out.begin(), out.end(), result_order);
  return out;
}

std::vector<PeriodicResult> phase3_extend(const SymbolSequence& s, const PeriodicConfig& cfg,
                                          std::span<const Pattern> valid_prev) {
  cfg.validate();
  using Items = std::vector<std::pair<std::size_t, Symbol>>;  // (offset, symbol) ascending

  // Group by (period, arity); joins only make sense within one group.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Items>> groups;
  std::set<std::vector<Pattern::Slot>> prev_set;
  for (const Pattern& p : valid_prev) {
    Items items;
    for (std::size_t j = 0; j < p.period(); ++j) {
      if (p.slot(j)) items.emplace_back(j, *p.slot(j));
    }
    groups[{p.period(), p.arity()}].push_back(std::move(items));
    prev_set.insert(p.slots());
  }

  std::vector<PeriodicResult> out;
  for (auto& [key, members] : groups) {
    const std::size_t period = key.first;
    std::sort(members.begin(), members.end());
    std::set<std::vector<Pattern::Slot>> cand_slots;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Items& pa = members[a];
        const Items& pb = members[b];
        if (!std::equal(pa.begin(), pa.end() - 1, pb.begin(), pb.end() - 1)) break;
        if (pa.back().first == pb.back().first) continue;
        std::vector<Pattern::Slot> slots(period);
        for (const auto& [o, sym] : pa) slots[o] = sym;
        slots[pb.back().first] = pb.back().second;
        cand_slots.insert(std::move(slots));
      }
    }
    for (const auto& slots : cand_slots) {
      bool pruned = false;
      for (std::size_t j = 0; j < period && !pruned; ++j) {
        if (!slots[j]) continue;
        std::vector<Pattern::Slot> gen = slots;
        gen[j] = std::nullopt;
        if (!prev_set.count(gen)) pruned = true;
      }
      if (pruned) continue;
      Pattern p{slots};
      const auto matches = find_matches(p, s);
      auto best = best_valid_subsequence(matches, period, cfg);
      if (best) out.push_back({std::move(p), std::move(*best)});
    }
  }
  std::sort(out.begin(), out.end(), result_order);
  return out;
}

std::vector<PeriodicResult> mine_periodic(const SymbolSequence& s, const PeriodicConfig& cfg) {
  cfg.validate();
  std::vector<PeriodicResult> out;
  const std::size_t n = s.length();
  std::vector<std::size_t> runlen(n);
  for (std::size_t l = 1; l <= cfg.l_max && l <= n; ++l) {
    // A pattern with symbol I somewhere in its window can only reach
    // min_rep back-to-back matches if I itself recurs min_rep times at
    // spacing exactly l, so screen symbols on their longest such chain.
    for (std::size_t q = n; q-- > 0;) {
      runlen[q] = (q + l < n && s[q] == s[q + l]) ? runlen[q + l] + 1 : 1;
    }
    std::vector<std::size_t> longest(s.alphabet_size(), 0);
    for (std::size_t q = 0; q < n; ++q) {
      longest[s[q].id] = std::max(longest[s[q].id], runlen[q]);
    }
    std::map<Symbol, std::set<std::size_t>> cands;
    for (std::uint32_t id = 0; id < longest.size(); ++id) {
      if (longest[id] >= cfg.min_rep) cands[Symbol{id}].insert(l);
    }

    PeriodicConfig one = cfg;
    one.l_max = l;
    auto level = phase2_single_patterns(s, one, cands);
    while (!level.empty()) {
      out.insert(out.end(), level.begin(), level.end());
      std::vector<Pattern> frontier;
      frontier.reserve(level.size());
      for (auto& r : level) frontier.push_back(r.pattern);
      level = phase3_extend(s, one, frontier);
    }
  }
  std::sort(out.begin(), out.end(), result_order);
  return out;
}

}  // namespace seqpat
