#include "ybfox/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ybfox/errors.hpp"

namespace ybfox {

namespace {

void require_same_alphabet(const GroupRingElement& a, const GroupRingElement& b, const char* op) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    throw AlphabetError(std::string(op) + ": operands use different alphabets");
}

void accumulate(GroupRingElement::TermMap& terms, const FreeWord& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

GroupRingElement::GroupRingElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw AlphabetError("group ring element requires an alphabet");
}

GroupRingElement GroupRingElement::one(AlphabetPtr alphabet) {
  GroupRingElement e(alphabet);
  e.terms_.emplace(FreeWord::identity(alphabet), Int(1));
  return e;
}

GroupRingElement GroupRingElement::from_terms(
    AlphabetPtr alphabet, const std::vector<std::pair<FreeWord, Int>>& terms) {
  GroupRingElement e(std::move(alphabet));
  for (const auto& [w, c] : terms) {
    if (!same_alphabet(w.alphabet(), e.alphabet_))
      throw AlphabetError("from_terms: word alphabet differs from element alphabet");
    accumulate(e.terms_, w, c);
  }
  return e;
}

Int GroupRingElement::coefficient(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  }
  return true;
}

GroupRingElement add(const GroupRingElement& e1, const GroupRingElement& e2) {
  require_same_alphabet(e1, e2, "add");
  GroupRingElement out = e1;
  for (const auto& [w, c] : e2.terms_) accumulate(out.terms_, w, c);
  return out;
}

GroupRingElement ring_multiply(const GroupRingElement& e1, const GroupRingElement& e2) {
  require_same_alphabet(e1, e2, "ring_multiply");
  GroupRingElement out(e1.alphabet_);
  for (const auto& [w1, c1] : e1.terms_)
    for (const auto& [w2, c2] : e2.terms_)
      accumulate(out.terms_, multiply(w1, w2), c1 * c2);
  return out;
}

GroupRingElement embed(const FreeWord& w) {
  GroupRingElement out(w.alphabet());
  out.terms_.emplace(w, Int(1));
  return out;
}

GroupRingElement scale(const Int& k, const GroupRingElement& e) {
  GroupRingElement out(e.alphabet_);
  if (k == 0) return out;
  for (const auto& [w, c] : e.terms_) out.terms_.emplace(w, k * c);
  return out;
}

GroupRingElement substitute_ring(const GroupRingElement& e, const std::vector<FreeWord>& images) {
  if (static_cast<int>(images.size()) != e.alphabet()->size())
    throw AlphabetError("substitute_ring: expected " + std::to_string(e.alphabet()->size()) +
                        " images, got " + std::to_string(images.size()));
  const AlphabetPtr target =
      images.empty() ? e.alphabet() : images.front().alphabet();
  GroupRingElement out(target);
  for (const auto& [w, c] : e.terms_) accumulate(out.terms_, substitute(w, images), c);
  return out;
}

Int augmentation(const GroupRingElement& e) {
  Int sum = 0;
  for (const auto& [w, c] : e.terms()) sum += c;
  return sum;
}

std::string format_element(const GroupRingElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Int mag = negative ? Int(-c) : c;
    if (mag != 1) out += mag.str() + "*";
    out += format_word(w);
  }
  return out;
}

GroupRingElement parse_element(const std::string& text, const AlphabetPtr& alphabet) {
  // Tokens are whitespace-separated; a bare "+" or "-" separates terms.
  // The leading minus and the "<coeff>*" prefix glue to a term's first token.
  std::vector<std::pair<std::string, std::size_t>> tokens;  // token, byte offset
  {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      tokens.emplace_back(text.substr(i, j - i), i);
      i = j;
    }
  }
  if (tokens.empty()) throw ParseError("empty element text", 0);
  if (tokens.size() == 1 && tokens[0].first == "0") return GroupRingElement::zero(alphabet);

  GroupRingElement out(alphabet);
  std::size_t i = 0;
  bool expect_term = true;
  Int sign = 1;
  while (i < tokens.size()) {
    if (!expect_term) {
      const auto& [tok, off] = tokens[i];
      if (tok == "+")
        sign = 1;
      else if (tok == "-")
        sign = -1;
      else
        throw ParseError("expected '+' or '-' between terms", off);
      ++i;
      expect_term = true;
      continue;
    }
    if (i >= tokens.size()) break;
    auto [tok, off] = tokens[i];
    if (tok == "+" || tok == "-") throw ParseError("expected a term", off);
    // leading minus may be glued to the first term
    if (i == 0 && !tok.empty() && tok[0] == '-') {
      sign = -1;
      tok = tok.substr(1);
      if (tok.empty()) throw ParseError("dangling '-'", off);
    }
    Int coeff = 1;
    std::size_t star = tok.find('*');
    if (star != std::string::npos) {
      const std::string digits = tok.substr(0, star);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("malformed coefficient '" + digits + "'", off);
      coeff = Int(digits);
      tok = tok.substr(star + 1);
      if (tok.empty()) throw ParseError("missing word after '*'", off + star + 1);
    }
    // gather the remaining word tokens of this term
    std::string word_text = tok;
    ++i;
    while (i < tokens.size() && tokens[i].first != "+" && tokens[i].first != "-") {
      word_text += ' ';
      word_text += tokens[i].first;
      ++i;
    }
    FreeWord w = parse_word(word_text, alphabet);
    GroupRingElement term = scale(sign * coeff, embed(w));
    out = add(out, term);
    expect_term = false;
    sign = 1;
  }
  if (expect_term) throw ParseError("trailing separator", text.size());
  return out;
}

}  // namespace ybfox
