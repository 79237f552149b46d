#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ybfox {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Generator alphabet of a free group F_n: an ordered list of distinct
/// printable names. Immutable; shared by every word built over it.
class Alphabet {
 public:
  /// Validates the names (identifier shape, pairwise distinct, n >= 1)
  /// and returns a shared immutable alphabet.
  static AlphabetPtr make(std::vector<std::string> names);

  /// The default rank-2 alphabet ("x", "y"). Shared singleton.
  static const AlphabetPtr& rank2();
  /// The default rank-3 alphabet ("x", "y", "z"). Shared singleton.
  static const AlphabetPtr& rank3();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a generator name, or -1 if not declared.
  int index_of(const std::string& name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  explicit Alphabet(std::vector<std::string> names);

  std::vector<std::string> names_;
};

/// Two alphabet handles denote the same alphabet (pointer or content).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace ybfox
