#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// Alphabet in its naturalized order: 0 < ( < ).
enum class Symbol : unsigned char { Zero = 0, Open = 1, Close = 2 };

char to_char(Symbol s) noexcept;

// A balanced, prefix-dominant word over {0, (, )}. Only constructible through
// validate() (or the enumeration/unrank routines), so every instance is valid.
// The empty word is valid and serializes as "".
class MotzkinWord {
 public:
  MotzkinWord() = default;

  std::size_t length() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }
  const std::string& text() const noexcept { return text_; }
  Symbol operator[](std::size_t i) const noexcept;

  friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;

  // Naturalized order: shorter words first, then lexicographic with 0 < ( < ).
  friend std::strong_ordering operator<=>(const MotzkinWord& lhs, const MotzkinWord& rhs) noexcept;

 private:
  friend MotzkinWord validate(std::string_view text);
  friend class WordBuilder;
  explicit MotzkinWord(std::string text) : text_(std::move(text)) {}

  std::string text_;
};

/// Parses and checks a word. Throws Error with BAD_SYMBOL (character outside
/// "0()"), PREFIX_VIOLATION (some prefix closes more than it opens) or
/// UNBALANCED (totals differ). Symbols are checked before structure.
MotzkinWord validate(std::string_view text);

enum class WordClass { Unique, Inherited, Empty };

// Unique: "0" or starts with '('. Inherited: length >= 2 with a leading zero.
WordClass classify(const MotzkinWord& word) noexcept;

std::string_view to_string(WordClass c) noexcept;

enum class WordFilter { All, Unique, Inherited };

// Largest length enumerate() accepts; M_16 = 853467 words.
inline constexpr std::size_t kMaxEnumerateLength = 16;

/// All words of length n that match the filter, in naturalized order.
/// Generated depth-first with pruning, never by filtering 3^n strings.
/// Throws LIMIT_EXCEEDED when n > kMaxEnumerateLength.
std::vector<MotzkinWord> enumerate(std::size_t n, WordFilter filter = WordFilter::All);

std::strong_ordering compare(const MotzkinWord& lhs, const MotzkinWord& rhs) noexcept;

// N(h, r): number of length-r suffixes taking an open depth h back to 0.
// N(0,0) = 1, N(h,0) = 0 for h > 0,
// N(h,r) = N(h,r-1) + N(h+1,r-1) + [h>0] N(h-1,r-1).
// N(0,n) = M_n. Entries with h > r are zero.
class CompletionTable {
 public:
  explicit CompletionTable(std::size_t max_remaining);

  std::size_t max_remaining() const noexcept { return max_remaining_; }
  const BigNat& operator()(std::size_t depth, std::size_t remaining) const;

 private:
  std::size_t max_remaining_;
  // rows_[r][h] for h <= r
  std::vector<std::vector<BigNat>> rows_;
  BigNat zero_ = 0;
};

BigNat completion_count(std::size_t depth, std::size_t remaining);

/// Zero-based position of a unique word in the naturalized series.
/// Throws NOT_UNIQUE for the empty word and inherited words.
BigNat rank(const MotzkinWord& word);

/// Inverse of rank(). Every nonnegative index is valid; a negative index
/// throws std::invalid_argument.
MotzkinWord unrank(const BigNat& index);

}  // namespace motzkin
