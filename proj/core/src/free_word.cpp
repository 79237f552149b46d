#include "ybfox/free_word.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ybfox/errors.hpp"

namespace ybfox {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

void require_same_alphabet(const FreeWord& a, const FreeWord& b, const char* op) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    throw AlphabetError(std::string(op) + ": operands use different alphabets");
}

// Pushes a letter onto a reduced suffix, cancelling if it inverts the top.
void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
  if (names.empty()) throw AlphabetError("alphabet must have at least one generator");
  for (const auto& n : names) {
    if (!is_identifier(n))
      throw AlphabetError("generator name '" + n + "' is not a valid identifier");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw AlphabetError("duplicate generator name '" + names[i] + "'");
  return AlphabetPtr(new Alphabet(std::move(names)));
}

const AlphabetPtr& Alphabet::rank2() {
  static const AlphabetPtr a = make({"x", "y"});
  return a;
}

const AlphabetPtr& Alphabet::rank3() {
  static const AlphabetPtr a = make({"x", "y", "z"});
  return a;
}

int Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

FreeWord::FreeWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw AlphabetError("word requires an alphabet");
}

FreeWord FreeWord::generator(AlphabetPtr alphabet, int index, int exp) {
  FreeWord w(std::move(alphabet));
  if (index < 0 || index >= w.alphabet_->size())
    throw AlphabetError("generator index " + std::to_string(index) + " out of range for rank " +
                        std::to_string(w.alphabet_->size()));
  if (exp != 1 && exp != -1) throw AlphabetError("letter exponent must be +1 or -1");
  w.letters_.push_back({index, exp});
  return w;
}

FreeWord FreeWord::inverse() const { return invert(*this); }

bool operator==(const FreeWord& a, const FreeWord& b) {
  return same_alphabet(a.alphabet(), b.alphabet()) && a.letters() == b.letters();
}

FreeWord reduce(const AlphabetPtr& alphabet, const std::vector<Letter>& raw) {
  FreeWord w(alphabet);
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen < 0 || l.gen >= alphabet->size())
      throw AlphabetError("generator index " + std::to_string(l.gen) + " out of range for rank " +
                          std::to_string(alphabet->size()));
    if (l.exp != 1 && l.exp != -1) throw AlphabetError("letter exponent must be +1 or -1");
    push_reduced(w.letters_, l);
  }
  return w;
}

FreeWord multiply(const FreeWord& w1, const FreeWord& w2) {
  require_same_alphabet(w1, w2, "multiply");
  FreeWord out(w1.alphabet_);
  out.letters_ = w1.letters_;
  for (const Letter& l : w2.letters_) push_reduced(out.letters_, l);
  return out;
}

FreeWord invert(const FreeWord& w) {
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : rev) l.exp = -l.exp;
  return reduce(w.alphabet(), rev);  // already reduced; reduce() keeps it canonical
}

FreeWord power(const FreeWord& w, long long k) {
  const FreeWord base = k < 0 ? invert(w) : w;
  long long n = k < 0 ? -k : k;
  FreeWord out(w.alphabet());
  for (long long i = 0; i < n; ++i) out = multiply(out, base);
  return out;
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  if (static_cast<int>(images.size()) != w.alphabet()->size())
    throw AlphabetError("substitute: expected " + std::to_string(w.alphabet()->size()) +
                        " images, got " + std::to_string(images.size()));
  for (const FreeWord& im : images)
    if (!same_alphabet(im.alphabet(), images.front().alphabet()))
      throw AlphabetError("substitute: images use different alphabets");
  FreeWord out(images.front().alphabet());
  for (const Letter& l : w.letters()) {
    const FreeWord& im = images[l.gen];
    if (l.exp > 0) {
      for (const Letter& m : im.letters()) push_reduced(out.letters_, m);
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        push_reduced(out.letters_, {it->gen, -it->exp});
    }
  }
  return out;
}

bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i].gen != lb[i].gen) return la[i].gen < lb[i].gen;
    if (la[i].exp != lb[i].exp) return la[i].exp > lb[i].exp;  // +1 sorts before -1
  }
  return false;
}

namespace {

// exponents larger than this would materialize unreasonable words
constexpr long long kMaxExponent = 1000000;

struct WordLexer {
  const std::string& text;
  const Alphabet& alphabet;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  bool done() const { return pos >= text.size(); }

  // Longest declared generator name starting at pos, or -1.
  int match_name() {
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < alphabet.size(); ++i) {
      const std::string& n = alphabet.name(i);
      if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
        best = i;
        best_len = n.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }

  long long parse_exponent() {
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected digits after '^'", pos);
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxExponent) throw ParseError("exponent too large", start);
      ++pos;
    }
    if (value == 0) throw ParseError("exponent must be nonzero", start);
    return neg ? -value : value;
  }
};

}  // namespace

FreeWord parse_word(const std::string& text, const AlphabetPtr& alphabet) {
  WordLexer lex{text, *alphabet};
  lex.skip_ws();
  if (lex.done()) throw ParseError("empty word; write '1' for the identity", lex.pos);
  if (text[lex.pos] == '1') {
    ++lex.pos;
    lex.skip_ws();
    if (!lex.done()) throw ParseError("'1' must stand alone as the identity word", lex.pos);
    return FreeWord(alphabet);
  }

  std::vector<Letter> letters;
  while (!lex.done()) {
    std::size_t term_start = lex.pos;
    int gen = lex.match_name();
    if (gen < 0) {
      // distinguish an undeclared identifier from plain junk
      std::size_t p = lex.pos;
      if (std::isalpha(static_cast<unsigned char>(text[p])) || text[p] == '_') {
        std::size_t e = p;
        while (e < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[e])) || text[e] == '_'))
          ++e;
        throw ParseError("unknown generator '" + text.substr(p, e - p) + "'", term_start);
      }
      throw ParseError(std::string("unexpected character '") + text[lex.pos] + "'", lex.pos);
    }
    long long exp = 1;
    if (!lex.done() && text[lex.pos] == '^') {
      ++lex.pos;
      exp = lex.parse_exponent();
    }
    const int sign = exp < 0 ? -1 : +1;
    for (long long i = 0, n = exp < 0 ? -exp : exp; i < n; ++i) letters.push_back({gen, sign});
    lex.skip_ws();
  }
  return reduce(alphabet, letters);
}

std::string format_word(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].exp == ls[i].exp) ++j;
    // a reduced word never mixes signs within a same-generator run
    const long long run = static_cast<long long>(j - i) * ls[i].exp;
    if (!out.empty()) out += ' ';
    out += w.alphabet()->name(ls[i].gen);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace ybfox
