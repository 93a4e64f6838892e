#include "motzkin/words.hpp"

#include <array>
#include <stdexcept>

#include "motzkin/error.hpp"
#include "motzkin/numbers.hpp"

namespace motzkin {

namespace {

constexpr std::array<Symbol, 3> kAlphabet = {Symbol::Zero, Symbol::Open, Symbol::Close};

Symbol symbol_of(char c) noexcept {
  switch (c) {
    case '(': return Symbol::Open;
    case ')': return Symbol::Close;
    default: return Symbol::Zero;
  }
}

// Depth after appending `s` at depth `h`; only called on viable moves.
std::size_t step_depth(std::size_t h, Symbol s) noexcept {
  switch (s) {
    case Symbol::Open: return h + 1;
    case Symbol::Close: return h - 1;
    case Symbol::Zero: break;
  }
  return h;
}

bool viable(std::size_t h, Symbol s) noexcept { return s != Symbol::Close || h > 0; }

}  // namespace

// Builds words from symbols already known to form a valid word.
class WordBuilder {
 public:
  static MotzkinWord make(std::string text) { return MotzkinWord(std::move(text)); }
};

char to_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::Open: return '(';
    case Symbol::Close: return ')';
  }
  return '?';
}

Symbol MotzkinWord::operator[](std::size_t i) const noexcept { return symbol_of(text_[i]); }

std::strong_ordering operator<=>(const MotzkinWord& lhs, const MotzkinWord& rhs) noexcept {
  if (auto c = lhs.length() <=> rhs.length(); c != 0) return c;
  for (std::size_t i = 0; i < lhs.length(); ++i) {
    auto a = static_cast<unsigned>(lhs[i]);
    auto b = static_cast<unsigned>(rhs[i]);
    if (auto c = a <=> b; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const MotzkinWord& lhs, const MotzkinWord& rhs) noexcept {
  return lhs <=> rhs;
}

MotzkinWord validate(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '(' && c != ')') {
      throw Error(ErrorCode::BadSymbol,
                  "character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
  }
  std::size_t depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      if (depth == 0) {
        throw Error(ErrorCode::PrefixViolation,
                    "unmatched ')' at position " + std::to_string(i));
      }
      --depth;
    }
  }
  if (depth != 0) {
    throw Error(ErrorCode::Unbalanced, std::to_string(depth) + " unclosed '('");
  }
  return MotzkinWord(std::string(text));
}

WordClass classify(const MotzkinWord& word) noexcept {
  if (word.empty()) return WordClass::Empty;
  if (word.length() == 1 || word[0] == Symbol::Open) return WordClass::Unique;
  return WordClass::Inherited;
}

std::string_view to_string(WordClass c) noexcept {
  switch (c) {
    case WordClass::Unique: return "unique";
    case WordClass::Inherited: return "inherited";
    case WordClass::Empty: return "empty";
  }
  return "unknown";
}

namespace {

void extend(std::string& prefix, std::size_t length, std::size_t depth,
            std::vector<MotzkinWord>& out) {
  const std::size_t remaining = length - prefix.size();
  if (remaining == 0) {
    out.push_back(WordBuilder::make(prefix));
    return;
  }
  for (Symbol s : kAlphabet) {
    if (!viable(depth, s)) continue;
    const std::size_t next = step_depth(depth, s);
    if (next > remaining - 1) continue;  // cannot close in time
    prefix.push_back(to_char(s));
    extend(prefix, length, next, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MotzkinWord> enumerate(std::size_t n, WordFilter filter) {
  if (n > kMaxEnumerateLength) {
    throw Error(ErrorCode::LimitExceeded, "length " + std::to_string(n) + " exceeds " +
                                              std::to_string(kMaxEnumerateLength));
  }
  std::vector<MotzkinWord> out;
  std::string prefix;
  prefix.reserve(n);
  switch (filter) {
    case WordFilter::All:
      extend(prefix, n, 0, out);
      break;
    case WordFilter::Unique:
      if (n == 1) {
        out.push_back(WordBuilder::make("0"));
      } else if (n >= 2) {
        prefix.push_back('(');
        extend(prefix, n, 1, out);
      }
      break;
    case WordFilter::Inherited:
      if (n >= 2) {
        prefix.push_back('0');
        extend(prefix, n, 0, out);
      }
      break;
  }
  return out;
}

CompletionTable::CompletionTable(std::size_t max_remaining) : max_remaining_(max_remaining) {
  rows_.reserve(max_remaining + 1);
  rows_.push_back({BigNat(1)});
  for (std::size_t r = 1; r <= max_remaining; ++r) {
    const auto& prev = rows_[r - 1];
    auto at = [&](std::size_t h) -> BigNat { return h < prev.size() ? prev[h] : BigNat(0); };
    std::vector<BigNat> row(r + 1);
    for (std::size_t h = 0; h <= r; ++h) {
      row[h] = at(h) + at(h + 1);
      if (h > 0) row[h] += at(h - 1);
    }
    rows_.push_back(std::move(row));
  }
}

const BigNat& CompletionTable::operator()(std::size_t depth, std::size_t remaining) const {
  if (remaining > max_remaining_) {
    throw std::out_of_range("CompletionTable: remaining " + std::to_string(remaining) +
                            " beyond " + std::to_string(max_remaining_));
  }
  if (depth > remaining) return zero_;
  return rows_[remaining][depth];
}

BigNat completion_count(std::size_t depth, std::size_t remaining) {
  return CompletionTable(remaining)(depth, remaining);
}

BigNat rank(const MotzkinWord& word) {
  if (classify(word) != WordClass::Unique) {
    throw Error(ErrorCode::NotUnique, "'" + word.text() + "' is " +
                                          std::string(to_string(classify(word))));
  }
  const std::size_t n = word.length();
  const DifferenceTable u = difference_numbers(n);
  BigNat index = 0;
  for (std::size_t k = 1; k < n; ++k) index += u[k];

  const CompletionTable table(n);
  std::size_t depth = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol current = word[i];
    for (Symbol s : kAlphabet) {
      if (s == current) break;
      if (i == 0 && n >= 2 && s == Symbol::Zero) continue;  // leading zero: inherited
      if (!viable(depth, s)) continue;
      index += table(step_depth(depth, s), n - i - 1);
    }
    depth = step_depth(depth, current);
  }
  return index;
}

MotzkinWord unrank(const BigNat& index) {
  if (index < 0) throw std::invalid_argument("unrank: negative index");

  // Locate the length block; M grows incrementally alongside U.
  std::vector<BigNat> m = {BigNat(1), BigNat(1)};
  BigNat local = index;
  std::size_t n = 1;
  BigNat block = 1;  // U_1
  while (local >= block) {
    local -= block;
    ++n;
    BigNat next = m[n - 1];
    for (std::size_t k = 0; k + 2 <= n; ++k) next += m[k] * m[n - 2 - k];
    m.push_back(next);
    block = m[n] - m[n - 1];
  }
  if (n == 1) return WordBuilder::make("0");

  const CompletionTable table(n);
  std::string text = "(";
  std::size_t depth = 1;
  for (std::size_t i = 1; i < n; ++i) {
    for (Symbol s : kAlphabet) {
      if (!viable(depth, s)) continue;
      const std::size_t next = step_depth(depth, s);
      const BigNat& count = table(next, n - i - 1);
      if (local < count) {
        text.push_back(to_char(s));
        depth = next;
        break;
      }
      local -= count;
    }
  }
  if (depth != 0 || text.size() != n) {
    throw Error(ErrorCode::Internal, "unrank descent did not close the word");
  }
  return WordBuilder::make(std::move(text));
}

}  // namespace motzkin
