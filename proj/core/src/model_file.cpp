#include "ybfox/model_file.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "ybfox/errors.hpp"

namespace ybfox {

namespace {

[[noreturn]] void bad(long long line, const std::string& why) {
  throw ModelError("model file line " + std::to_string(line) + ": " + why);
}

/// Line source that strips comments, skips blanks, and tracks numbers.
class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}

  /// Next meaningful line, or false at end of input.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      const auto stop = raw.find_last_not_of(" \t\r");
      out = raw.substr(start, stop - start + 1);
      return true;
    }
    return false;
  }

  long long number() const { return number_; }

 private:
  std::istream& in_;
  long long number_ = 0;
};

std::vector<int> parse_ints(const std::string& text, size_t expected, long long line,
                            const std::string& what) {
  std::istringstream in(text);
  std::vector<int> out;
  int x;
  while (in >> x) out.push_back(x);
  std::string junk;
  in.clear();
  if (in >> junk) bad(line, what + " contains a non-integer token '" + junk + "'");
  if (out.size() != expected)
    bad(line, what + " has " + std::to_string(out.size()) + " entries, expected " +
                  std::to_string(expected));
  return out;
}

}  // namespace

ModelFile parse_model_file(std::istream& in) {
  Lines lines(in);
  std::string text;

  if (!lines.next(text)) throw ModelError("model file has no group section");
  {
    std::istringstream head(text);
    std::string kw;
    head >> kw;
    if (kw != "group") bad(lines.number(), "expected 'group <order>', got '" + text + "'");
  }
  int order = 0;
  {
    std::istringstream head(text);
    std::string kw;
    if (!(head >> kw >> order) || order < 1)
      bad(lines.number(), "expected 'group <order>' with a positive order");
    std::string junk;
    if (head >> junk) bad(lines.number(), "trailing fields after the group order");
  }

  std::vector<std::vector<int>> table;
  table.reserve(static_cast<size_t>(order));
  for (int rw = 0; rw < order; ++rw) {
    if (!lines.next(text)) bad(lines.number() + 1, "missing group table row");
    table.push_back(parse_ints(text, static_cast<size_t>(order), lines.number(), "group table row"));
  }

  ModelFile file{FiniteGroup::from_table(std::move(table)), std::nullopt, std::nullopt};

  bool more = lines.next(text);
  if (more) {
    std::istringstream head(text);
    std::string kw;
    head >> kw;
    if (kw == "module") {
      int modulus = 0, rank = 0;
      std::istringstream args(text);
      std::string mk;
      if (!(args >> mk >> modulus >> rank))
        bad(lines.number(), "expected 'module <modulus> <rank>'");
      std::string junk;
      if (args >> junk) bad(lines.number(), "trailing fields after the module shape");
      std::vector<Matrix> actions;
      actions.reserve(static_cast<size_t>(order));
      for (int g = 0; g < order; ++g) {
        if (!lines.next(text)) bad(lines.number() + 1, "missing module action row");
        Matrix m;
        m.size = rank;
        const auto entries = parse_ints(text, static_cast<size_t>(rank) * rank, lines.number(),
                                        "module action row");
        m.data.assign(entries.begin(), entries.end());
        actions.push_back(std::move(m));
      }
      file.module = GModule::make(file.group, modulus, rank, std::move(actions));
      more = lines.next(text);
    }
  }

  if (more) {
    if (text != "pair") bad(lines.number(), "expected 'pair', got '" + text + "'");
    auto read_word = [&](const char* prefix, const char* expect) {
      std::string word_text;
      if (!lines.next(word_text))
        bad(lines.number() + 1, std::string("expected '") + expect + "'");
      if (word_text.rfind(prefix, 0) != 0)
        bad(lines.number(), std::string("expected '") + expect + "'");
      try {
        return parse_word(word_text.substr(2), Alphabet::rank2());
      } catch (const ParseError& e) {
        bad(lines.number(), std::string("bad pair word: ") + e.what());
      }
    };
    FreeWord u = read_word("u ", "u <word>' after 'pair");
    FreeWord v = read_word("v ", "v <word>' after the u line");
    file.pair.emplace(std::move(u), std::move(v));
    more = lines.next(text);
  }

  if (more) bad(lines.number(), "unexpected content after the last section: '" + text + "'");
  return file;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  return parse_model_file(in);
}

}  // namespace ybfox
