#include "gridlink/type_census.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gridlink/error.hpp"

namespace gridlink {

int BlockSequence::size() const noexcept {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

int BlockSequence::min_index() const {
  int best = blocks.at(0).at(0);
  for (const auto& b : blocks) best = std::min(best, b.at(0));
  return best;
}

SequenceType::SequenceType(std::vector<BlockSequence> sequences)
    : sequences_(std::move(sequences)) {
  if (sequences_.empty()) {
    throw Error(ErrorKind::invalid_argument, "a type needs a sequence");
  }
  std::vector<int> all;
  for (auto& seq : sequences_) {
    if (seq.blocks.empty()) {
      throw Error(ErrorKind::invalid_argument, "empty block sequence");
    }
    for (auto& block : seq.blocks) {
      if (block.empty()) throw Error(ErrorKind::invalid_argument, "empty block");
      std::sort(block.begin(), block.end());
      all.insert(all.end(), block.begin(), block.end());
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) {
      throw Error(ErrorKind::invalid_argument,
                  "indices must cover 1.." + std::to_string(all.size()) +
                      " exactly once");
    }
  }
  order_ = static_cast<int>(all.size());
  std::sort(sequences_.begin(), sequences_.end(),
            [](const BlockSequence& a, const BlockSequence& b) {
              return a.min_index() < b.min_index();
            });
}

int SequenceType::total_length() const noexcept {
  int total = 0;
  for (const auto& seq : sequences_) total += seq.length();
  return total;
}

bool SequenceType::all_sequences_at_least(int size) const noexcept {
  return std::all_of(sequences_.begin(), sequences_.end(),
                     [size](const BlockSequence& s) { return s.size() >= size; });
}

std::string to_string(const SequenceType& type) {
  std::string out = "{";
  for (std::size_t h = 0; h < type.sequences().size(); ++h) {
    if (h) out += ';';
    out += '(';
    const auto& blocks = type.sequences()[h].blocks;
    for (std::size_t m = 0; m < blocks.size(); ++m) {
      if (m) out += ',';
      out += '{';
      for (std::size_t o = 0; o < blocks[m].size(); ++o) {
        if (o) out += ',';
        out += std::to_string(blocks[m][o]);
      }
      out += '}';
    }
    out += ')';
  }
  return out + "}";
}

namespace {

class TypeParser {
public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  SequenceType parse() {
    std::vector<BlockSequence> sequences;
    expect('{');
    do {
      sequences.push_back(sequence());
    } while (accept(';'));
    expect('}');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    try {
      return SequenceType(std::move(sequences));
    } catch (const Error& e) {
      throw ParseError(1, 1, e.what());
    }
  }

private:
  BlockSequence sequence() {
    BlockSequence seq;
    expect('(');
    do {
      seq.blocks.push_back(block());
    } while (accept(','));
    expect(')');
    return seq;
  }

  std::vector<int> block() {
    std::vector<int> out;
    expect('{');
    do {
      out.push_back(integer());
    } while (accept(','));
    expect('}');
    return out;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an index");
    if (pos_ - start > 6) fail("index too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, pos_ + 1, what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Restricted growth strings: calls visit(labels, block_count) for every set
// partition of {0..size-1}.
template <typename Visit>
void for_each_set_partition(int size, Visit&& visit) {
  std::vector<int> labels(size, 0);
  std::vector<int> prefix_max(size, 0);
  while (true) {
    int blocks = size == 0 ? 0 : prefix_max[size - 1] + 1;
    visit(labels, blocks);
    int i = size - 1;
    while (i > 0 && labels[i] == prefix_max[i - 1] + 1) --i;
    if (i <= 0) return;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (int j = i + 1; j < size; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace

SequenceType parse_type(std::string_view text) {
  return TypeParser(text).parse();
}

SequenceType type_of(std::span<const int> k, int n) {
  if (k.empty()) throw Error(ErrorKind::invalid_argument, "empty sequence");
  std::vector<std::vector<int>> at_residue(n + 1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1 || k[i] > n) {
      throw Error(ErrorKind::entry_out_of_range,
                  "entry " + std::to_string(k[i]) + " at position " +
                      std::to_string(i + 1) + " outside 1.." +
                      std::to_string(n));
    }
    at_residue[k[i]].push_back(static_cast<int>(i) + 1);
  }
  auto next = [n](int r) { return r % n + 1; };
  auto prev = [n](int r) { return (r + n - 2) % n + 1; };

  std::vector<BlockSequence> sequences;
  std::vector<bool> used(n + 1, false);
  for (int r = 1; r <= n; ++r) {
    if (at_residue[r].empty() || used[r]) continue;
    // Walk back to the start of this residue chain.
    int start = r;
    int steps = 0;
    while (!at_residue[prev(start)].empty()) {
      start = prev(start);
      if (++steps >= n) {
        throw Error(ErrorKind::cyclic_chain,
                    "residues wrap around the whole cycle mod " +
                        std::to_string(n));
      }
    }
    BlockSequence seq;
    for (int c = start; !at_residue[c].empty() && !used[c]; c = next(c)) {
      used[c] = true;
      seq.blocks.push_back(at_residue[c]);
    }
    sequences.push_back(std::move(seq));
  }
  return SequenceType(std::move(sequences));
}

TypeCensus enumerate_types(int u, int min_sequence_size) {
  if (u < 1) throw Error(ErrorKind::invalid_argument, "order must be >= 1");
  std::vector<SequenceType> types;
  for_each_set_partition(u, [&](const std::vector<int>& labels, int count) {
    std::vector<std::vector<int>> blocks(count);
    for (int i = 0; i < u; ++i) blocks[labels[i]].push_back(i + 1);
    // Group the blocks into sequences, then order each group every way.
    for_each_set_partition(count, [&](const std::vector<int>& group_of,
                                      int groups) {
      std::vector<std::vector<int>> members(groups);
      for (int b = 0; b < count; ++b) members[group_of[b]].push_back(b);
      while (true) {
        std::vector<BlockSequence> seqs;
        bool keep = true;
        for (const auto& group : members) {
          BlockSequence seq;
          for (int b : group) seq.blocks.push_back(blocks[b]);
          if (seq.size() < min_sequence_size) keep = false;
          seqs.push_back(std::move(seq));
        }
        if (keep) types.emplace_back(std::move(seqs));
        // Odometer over the orderings of every group.
        std::size_t g = 0;
        while (g < members.size() &&
               !std::next_permutation(members[g].begin(), members[g].end())) {
          ++g;
        }
        if (g == members.size()) break;
      }
    });
  });
  std::sort(types.begin(), types.end());
  if (std::adjacent_find(types.begin(), types.end()) != types.end()) {
    throw Error(ErrorKind::cross_check_mismatch,
                "type enumeration produced a duplicate");
  }
  TypeCensus census;
  census.order = u;
  for (const auto& t : types) census.min_n.push_back(t.min_n());
  census.types = std::move(types);
  return census;
}

namespace {

void require_n_above_order(const SequenceType& type, int n) {
  if (n <= type.order()) {
    throw Error(ErrorKind::invalid_argument,
                "n = " + std::to_string(n) + " must exceed the order " +
                    std::to_string(type.order()));
  }
}

}  // namespace

BigInt count_sequences_of_type(const SequenceType& type, int n) {
  require_n_above_order(type, n);
  if (n < type.min_n()) return 0;
  const int total = type.total_length();
  BigInt count = n;
  for (int j = 1; j < type.sequence_count(); ++j) count *= n - total - j;
  return count;
}

Polynomial sequence_count_polynomial(const SequenceType& type) {
  Polynomial p(std::vector<Rational>{Rational(0), Rational(1)});
  const int total = type.total_length();
  for (int j = 1; j < type.sequence_count(); ++j) {
    p = p * Polynomial::linear(Rational(total + j));
  }
  return p;
}

void for_each_sequence_of_type(
    const SequenceType& type, int n,
    const std::function<void(std::span<const int>)>& visit) {
  require_n_above_order(type, n);
  const auto& seqs = type.sequences();
  const int s = type.sequence_count();
  // owner[r] = sequence occupying residue r (1-based), or -1.
  std::vector<int> owner(n + 1, -1);
  std::vector<int> start(s, 0);
  std::vector<int> k(type.order(), 0);
  auto residue = [n](int r, int offset) { return (r - 1 + offset) % n + 1; };

  std::function<void(int)> place = [&](int h) {
    if (h == s) {
      for (int g = 0; g < s; ++g) {
        for (int m = 0; m < seqs[g].length(); ++m) {
          for (int i : seqs[g].blocks[m]) k[i - 1] = residue(start[g], m);
        }
      }
      visit(k);
      return;
    }
    const int len = seqs[h].length();
    for (int r = 1; r <= n; ++r) {
      // The chain occupies r..r+len-1 and needs a free, foreign-free
      // neighbourhood: no other sequence on or next to any of its residues.
      bool ok = true;
      for (int m = -1; m <= len && ok; ++m) {
        const int c = residue(r, (m + n) % n);
        if (owner[c] != -1) ok = false;
      }
      if (!ok) continue;
      for (int m = 0; m < len; ++m) owner[residue(r, m)] = h;
      start[h] = r;
      place(h + 1);
      for (int m = 0; m < len; ++m) owner[residue(r, m)] = -1;
    }
  };
  place(0);
}

std::vector<std::vector<int>> sequences_of_type(const SequenceType& type,
                                                int n) {
  std::vector<std::vector<int>> out;
  for_each_sequence_of_type(type, n, [&](std::span<const int> k) {
    out.emplace_back(k.begin(), k.end());
  });
  return out;
}

}  // namespace gridlink
