#include "rdiag/noncrossing.hpp"

#include <algorithm>
#include <optional>

#include "rdiag/errors.hpp"

namespace rdiag {

SetPartition::SetPartition(std::size_t n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n + 1, false);
  std::size_t covered = 0;
  for (Block& block : blocks_) {
    if (block.empty()) throw DomainError("partition has an empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t e : block) {
      if (e < 1 || e > n) throw DomainError("partition element out of range");
      if (seen[e]) throw DomainError("partition blocks overlap");
      seen[e] = true;
      ++covered;
    }
  }
  if (covered != n) throw DomainError("partition does not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::singletons(std::size_t n) {
  std::vector<Block> blocks;
  for (std::size_t e = 1; e <= n; ++e) blocks.push_back({e});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(std::size_t n) {
  if (n == 0) return SetPartition();
  Block block(n);
  for (std::size_t e = 0; e < n; ++e) block[e] = e + 1;
  return SetPartition(n, {block});
}

std::string format_partition(const SetPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(block[k]);
    }
    out += '}';
  }
  return out;
}

bool is_noncrossing(const SetPartition& p) {
  std::vector<std::size_t> owner(p.size() + 1);
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    for (std::size_t e : p.blocks()[b]) owner[e] = b;
  }
  // a < b < c < d with a, c in one block and b, d in another.
  const std::size_t n = p.size();
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      if (owner[b] == owner[a]) continue;
      for (std::size_t c = b + 1; c <= n; ++c) {
        if (owner[c] != owner[a]) continue;
        for (std::size_t d = c + 1; d <= n; ++d) {
          if (owner[d] == owner[b]) return false;
        }
      }
    }
  }
  return true;
}

namespace {

using Blocks = std::vector<SetPartition::Block>;

/// Enumerates non-crossing partitions of positions [0, len) (0-based) whose
/// blocks satisfy `may_follow(prev, next, size_so_far)` for consecutive elements and
/// `may_close(size)` for the block size.
class IntervalEnumerator {
 public:
  IntervalEnumerator(std::size_t len, std::function<bool(std::size_t, std::size_t, std::size_t)> may_follow,
                     std::function<bool(std::size_t)> may_close)
      : len_(len),
        may_follow_(std::move(may_follow)),
        may_close_(std::move(may_close)),
        memo_(len + 1, std::vector<std::optional<std::vector<Blocks>>>(len + 1)) {}

  std::vector<SetPartition> run() {
    std::vector<SetPartition> out;
    for (Blocks blocks : parts(0, len_)) {
      for (auto& block : blocks) {
        for (auto& e : block) ++e;
      }
      out.emplace_back(len_, std::move(blocks));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const std::vector<Blocks>& parts(std::size_t l, std::size_t r) {
    auto& slot = memo_[l][r];
    if (slot) return *slot;
    std::vector<Blocks> result;
    if (l == r) {
      result.emplace_back();
    } else {
      SetPartition::Block block{l};
      extend(block, r, {}, result);
    }
    slot = std::move(result);
    return *slot;
  }

  // `block` is the block of l under construction; `pieces` holds the
  // partitions chosen so far for the gaps between its elements.
  void extend(SetPartition::Block& block, std::size_t r, std::vector<const Blocks*> pieces,
              std::vector<Blocks>& result) {
    const std::size_t last = block.back();
    if (may_close_(block.size())) {
      const auto& tails = parts(last + 1, r);
      if (!tails.empty()) combine(block, pieces, tails, result);
    }
    for (std::size_t k = last + 1; k < r; ++k) {
      if (!may_follow_(last, k, block.size())) continue;
      const auto& gaps = parts(last + 1, k);
      if (gaps.empty()) continue;
      block.push_back(k);
      for (const Blocks& gap : gaps) {
        pieces.push_back(&gap);
        extend(block, r, pieces, result);
        pieces.pop_back();
      }
      block.pop_back();
    }
  }

  static void combine(const SetPartition::Block& block, const std::vector<const Blocks*>& pieces,
                      const std::vector<Blocks>& tails, std::vector<Blocks>& result) {
    for (const Blocks& tail : tails) {
      Blocks all{block};
      for (const Blocks* piece : pieces) all.insert(all.end(), piece->begin(), piece->end());
      all.insert(all.end(), tail.begin(), tail.end());
      result.push_back(std::move(all));
    }
  }

  std::size_t len_;
  std::function<bool(std::size_t, std::size_t, std::size_t)> may_follow_;
  std::function<bool(std::size_t)> may_close_;
  std::vector<std::vector<std::optional<std::vector<Blocks>>>> memo_;
};

std::string key_of(const SetPartition& p) { return format_partition(p); }

}  // namespace

std::vector<SetPartition> enumerate_nc(std::size_t n) {
  if (n > kMaxNcSize) {
    throw ResourceError("enumerate_nc: n = " + std::to_string(n) + " exceeds the guard " +
                        std::to_string(kMaxNcSize));
  }
  IntervalEnumerator en(
      n, [](std::size_t, std::size_t, std::size_t) { return true; }, [](std::size_t) { return true; });
  return en.run();
}

bool leq(const SetPartition& s, const SetPartition& p) {
  if (s.size() != p.size()) return false;
  std::vector<std::size_t> owner(p.size() + 1);
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    for (std::size_t e : p.blocks()[b]) owner[e] = b;
  }
  for (const auto& block : s.blocks()) {
    for (std::size_t e : block) {
      if (owner[e] != owner[block.front()]) return false;
    }
  }
  return true;
}

MoebiusTable::MoebiusTable(std::size_t n) : n_(n), lattice_(enumerate_nc(n)) {}

long MoebiusTable::operator()(const SetPartition& s, const SetPartition& p) {
  if (s.size() != n_ || p.size() != n_) throw DomainError("moebius: partition size mismatch");
  if (!leq(s, p)) throw DomainError("moebius: arguments are not comparable (s is not below p)");
  const auto key = std::make_pair(key_of(s), key_of(p));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Interval [s, p], finest first so every strict lower element precedes.
  std::vector<const SetPartition*> interval;
  for (const auto& tau : lattice_) {
    if (leq(s, tau) && leq(tau, p)) interval.push_back(&tau);
  }
  std::stable_sort(interval.begin(), interval.end(), [](const auto* a, const auto* b) {
    return a->blocks().size() > b->blocks().size();
  });
  std::vector<long> mu(interval.size(), 0);
  for (std::size_t k = 0; k < interval.size(); ++k) {
    if (*interval[k] == s) {
      mu[k] = 1;
    } else {
      long sum = 0;
      for (std::size_t m = 0; m < k; ++m) {
        if (leq(*interval[m], *interval[k])) sum += mu[m];
      }
      mu[k] = -sum;
    }
    memo_.emplace(std::make_pair(key.first, key_of(*interval[k])), mu[k]);
  }
  return memo_.at(key);
}

long moebius(const SetPartition& s, const SetPartition& p) {
  MoebiusTable table(s.size());
  return table(s, p);
}

namespace {

void guard_string(const StarString& s) {
  if (s.length() > kMaxNcStringLength) {
    throw ResourceError("string length " + std::to_string(s.length()) + " exceeds the guard " +
                        std::to_string(kMaxNcStringLength));
  }
}

}  // namespace

std::vector<SetPartition> enumerate_nc_alternating(const StarString& s) {
  guard_string(s);
  if (!is_balanced(s)) return {};
  const auto sym = s.symbols();
  IntervalEnumerator en(
      sym.size(), [&](std::size_t a, std::size_t b, std::size_t) { return sym[a] != sym[b]; },
      [](std::size_t size) { return size % 2 == 0; });
  return en.run();
}

std::vector<SetPartition> enumerate_nc2(const StarString& s) {
  guard_string(s);
  if (!is_balanced(s)) return {};
  const auto sym = s.symbols();
  IntervalEnumerator en(
      sym.size(),
      [&](std::size_t a, std::size_t b, std::size_t size) { return size == 1 && sym[a] != sym[b]; },
      [](std::size_t size) { return size == 2; });
  return en.run();
}

BigInt count_nc2(const StarString& s) {
  if (!is_balanced(s)) return 0;
  const auto sym = s.symbols();
  const std::size_t len = sym.size();
  // pairs[l][r]: pairings of [l, r) with every pair joining a 1 and a *.
  std::vector<std::vector<BigInt>> pairs(len + 1, std::vector<BigInt>(len + 1));
  for (std::size_t l = 0; l <= len; ++l) pairs[l][l] = 1;
  for (std::size_t width = 2; width <= len; width += 2) {
    for (std::size_t l = 0; l + width <= len; ++l) {
      const std::size_t r = l + width;
      BigInt total = 0;
      for (std::size_t k = l + 1; k < r; k += 2) {
        if (sym[k] == sym[l]) continue;
        if (pairs[l + 1][k] == 0) continue;
        total += pairs[l + 1][k] * pairs[k + 1][r];
      }
      pairs[l][r] = std::move(total);
    }
  }
  return pairs[0][len];
}

BigInt count_nc(const StarString& s) {
  if (!is_balanced(s)) return 0;
  const auto sym = s.symbols();
  const std::vector<std::size_t> labels(sym.size(), 0);
  return alternating_partition_sum<BigInt>(sym, labels,
                                           [](std::size_t, std::size_t) { return BigInt(1); });
}

}  // namespace rdiag
