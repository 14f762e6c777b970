#include "seqpat/surprise.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "seqpat/errors.hpp"

namespace seqpat {

namespace {

std::size_t greedy_nonoverlap(const std::vector<std::size_t>& positions, std::size_t width) {
  std::size_t count = 0;
  std::size_t cursor = 0;
  for (const std::size_t pos : positions) {
    if (count == 0 || pos >= cursor) {
      ++count;
      cursor = pos + width;
    }
  }
  return count;
}

bool scored_order(const ScoredPattern& a, const ScoredPattern& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  return a.pattern.slots() < b.pattern.slots();
}

// Depth-first enumeration of slot tuples, appending one slot at a time.
// Candidate window starts are filtered incrementally, so each node costs
// time proportional to its surviving positions. Subtrees are cut with an
// optimistic bound: no descendant can beat
//   (info so far + free slots * best single-symbol info) * support so far,
// because appending slots never raises the non-overlap count.
class surprise_search {
public:
  surprise_search(const SymbolSequence& s, std::size_t max_len) : s_(s), max_len_(max_len) {
    if (s.length() == 0) throw EmptySequenceError("cannot mine an empty sequence");
    for (std::uint32_t id = 0; id < s.alphabet_size(); ++id) {
      const Symbol sym{id};
      if (s.count(sym) == 0) continue;
      present_.push_back(sym);
      info_max_ = std::max(info_max_, info_symbol(s, sym));
    }
  }

  std::vector<ScoredPattern> by_threshold(double min_gain) {
    min_gain_ = min_gain;
    use_top_k_ = false;
    run();
    std::sort(found_.begin(), found_.end(), scored_order);
    return std::move(found_);
  }

  std::vector<ScoredPattern> top_k(std::size_t k) {
    k_ = k;
    use_top_k_ = true;
    run();
    return {best_.begin(), best_.end()};
  }

private:
  void run() {
    std::vector<std::size_t> roots(s_.length());
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = i;
    slots_.clear();
    extend(roots, 0.0, 0);
  }

  // The running cutoff below which a pattern can no longer be accepted.
  std::optional<double> threshold() const {
    if (!use_top_k_) return min_gain_;
    if (best_.size() < k_) return std::nullopt;
    return std::prev(best_.end())->gain;
  }

  void accept(std::size_t sup, double info) {
    ScoredPattern sp{Pattern{slots_}, sup, info, info * static_cast<double>(sup)};
    if (!use_top_k_) {
      if (sp.gain >= min_gain_) found_.push_back(std::move(sp));
      return;
    }
    best_.insert(std::move(sp));
    if (best_.size() > k_) best_.erase(std::prev(best_.end()));
  }

  void extend(const std::vector<std::size_t>& positions, double info, std::size_t arity) {
    const std::size_t len = slots_.size();
    if (len >= max_len_) return;
    std::vector<std::size_t> kept;
    for (int choice = -1; choice < static_cast<int>(present_.size()); ++choice) {
      kept.clear();
      double slot_info = 0.0;
      if (choice < 0) {
        for (const std::size_t pos : positions) {
          if (pos + len + 1 <= s_.length()) kept.push_back(pos);
        }
        slots_.push_back(std::nullopt);
      } else {
        const Symbol sym = present_[static_cast<std::size_t>(choice)];
        for (const std::size_t pos : positions) {
          if (pos + len + 1 <= s_.length() && s_[pos + len] == sym) kept.push_back(pos);
        }
        slot_info = info_symbol(s_, sym);
        slots_.push_back(sym);
      }
      const double child_info = info + slot_info;
      const std::size_t child_arity = arity + (choice >= 0 ? 1 : 0);
      const std::size_t sup = greedy_nonoverlap(kept, len + 1);
      if (child_arity >= 1) accept(sup, child_info);
      const auto cut = threshold();
      const double slack = static_cast<double>(max_len_ - len - 1) * info_max_;
      const double bound = (child_info + slack) * static_cast<double>(sup);
      if (!cut || bound >= *cut) extend(kept, child_info, child_arity);
      slots_.pop_back();
    }
  }

  struct best_order {
    bool operator()(const ScoredPattern& a, const ScoredPattern& b) const {
      return scored_order(a, b);
    }
  };

  const SymbolSequence& s_;
  std::size_t max_len_;
  std::vector<Symbol> present_;
  double info_max_ = 0.0;
  std::vector<Pattern::Slot> slots_;
  double min_gain_ = 0.0;
  std::size_t k_ = 0;
  bool use_top_k_ = false;
  std::vector<ScoredPattern> found_;
  std::set<ScoredPattern, best_order> best_;
};

}  // namespace

void SurpriseConfig::validate() const {
  if (max_len < 1) throw ConfigError("max_len must be at least 1");
  if (min_gain < 0.0) throw ConfigError("min_gain must be non-negative");
  if (top_k && *top_k < 1) throw ConfigError("top_k must be at least 1");
}

double symbol_prob(const SymbolSequence& s, Symbol sym) {
  if (s.length() == 0) throw EmptySequenceError("probability undefined on an empty sequence");
  if (sym.id >= s.alphabet_size()) throw RangeError("symbol id outside alphabet");
  return static_cast<double>(s.count(sym)) / static_cast<double>(s.length());
}

double info_symbol(const SymbolSequence& s, Symbol sym) {
  const double prob = symbol_prob(s, sym);
  if (prob == 0.0) throw InfiniteInfoError("symbol never occurs; its information is unbounded");
  if (prob == 1.0) return 0.0;
  return -std::log(prob) / std::log(static_cast<double>(s.alphabet_size()));
}

double info_pattern(const SymbolSequence& s, const Pattern& p) {
  double total = 0.0;
  for (std::size_t j = 0; j < p.period(); ++j) {
    if (p.slot(j)) total += info_symbol(s, *p.slot(j));
  }
  return total;
}

std::size_t support(const SymbolSequence& s, const Pattern& p) {
  return greedy_nonoverlap(find_matches(p, s), p.period());
}

double info_gain(const SymbolSequence& s, const Pattern& p) {
  return info_pattern(s, p) * static_cast<double>(support(s, p));
}

std::vector<ScoredPattern> mine_surprising(const SymbolSequence& s, const SurpriseConfig& cfg) {
  cfg.validate();
  surprise_search search(s, cfg.max_len);
  if (cfg.top_k) return search.top_k(*cfg.top_k);
  return search.by_threshold(cfg.min_gain);
}

std::vector<ScoredPattern> top_k_surprising(const SymbolSequence& s, std::size_t k,
                                            std::size_t max_len) {
  SurpriseConfig cfg;
  cfg.top_k = k;
  cfg.max_len = max_len;
  cfg.validate();
  surprise_search search(s, max_len);
  return search.top_k(k);
}

}  // namespace seqpat
