#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridlink/exact.hpp"

namespace gridlink {

// An ordered chain of index blocks. Consecutive blocks sit at consecutive
// residues mod n; indices in one block share a residue.
struct BlockSequence {
  std::vector<std::vector<int>> blocks;  // each block sorted ascending

  int length() const noexcept { return static_cast<int>(blocks.size()); }
  int size() const noexcept;
  int min_index() const;

  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;
  friend auto operator<=>(const BlockSequence&, const BlockSequence&) = default;
};

// The type of an index sequence (k_1, ..., k_u): a set of block sequences
// covering {1..u} exactly once. Stored canonically, sequences sorted by
// smallest contained index.
class SequenceType {
public:
  // Validates the partition property and canonicalizes; throws
  // Error{invalid_argument}.
  explicit SequenceType(std::vector<BlockSequence> sequences);

  int order() const noexcept { return order_; }
  const std::vector<BlockSequence>& sequences() const noexcept {
    return sequences_;
  }
  int sequence_count() const noexcept {
    return static_cast<int>(sequences_.size());
  }
  // Sum of l(p_h) over all sequences.
  int total_length() const noexcept;
  // Smallest n admitting a sequence of this type: s + sum l(p_h).
  int min_n() const noexcept { return sequence_count() + total_length(); }
  bool all_sequences_at_least(int size) const noexcept;

  friend bool operator==(const SequenceType&, const SequenceType&) = default;
  friend auto operator<=>(const SequenceType&, const SequenceType&) = default;

private:
  std::vector<BlockSequence> sequences_;
  int order_ = 0;
};

// Literal form `{({1},{2,3});({4})}`.
std::string to_string(const SequenceType& type);
// Throws ParseError with the 1-based column of the problem.
SequenceType parse_type(std::string_view text);

// Throws Error{entry_out_of_range} for entries outside 1..n and
// Error{cyclic_chain} when the residues cover the whole cycle (only
// possible when u >= n).
SequenceType type_of(std::span<const int> k, int n);

struct TypeCensus {
  int order = 0;
  std::vector<SequenceType> types;  // sorted, no duplicates
  std::vector<int> min_n;           // parallel to types
};

// All abstract types of order u. With min_sequence_size = 2 only types whose
// every sequence holds at least two indices are kept.
TypeCensus enumerate_types(int u, int min_sequence_size = 1);

// |S_{n,P}| = n * (n-1-L)! / (n-s-L)!, evaluated as n times a falling
// product of s-1 integers. Zero for n < min_n. Requires n > u.
BigInt count_sequences_of_type(const SequenceType& type, int n);
// The same count as an exact polynomial in n: n * prod_{j=1}^{s-1} (n-L-j).
Polynomial sequence_count_polynomial(const SequenceType& type);

// Calls `visit` with every length-u sequence on {1..n} of the given type,
// built directly from chain placements on the n-cycle. Requires n > u.
void for_each_sequence_of_type(
    const SequenceType& type, int n,
    const std::function<void(std::span<const int>)>& visit);
std::vector<std::vector<int>> sequences_of_type(const SequenceType& type,
                                                int n);

}  // namespace gridlink
