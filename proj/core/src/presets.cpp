#include "ybfox/presets.hpp"

#include <cctype>
#include <optional>

#include "ybfox/errors.hpp"

namespace ybfox {

namespace {

std::optional<int> parse_number(const std::string& s, size_t from, size_t to) {
  if (from >= to || to > s.size()) return std::nullopt;
  long long value = 0;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    value = value * 10 + (s[i] - '0');
    if (value > 1'000'000) return std::nullopt;
  }
  return static_cast<int>(value);
}

[[noreturn]] void unknown(const std::string& what, const std::string& text) {
  throw ModelError("unknown " + what + " preset '" + text +
                   "' (expected C<n>, S3 or D4 : Z<m>x<a>, Z<m>sign or Z<m>triv)");
}

Matrix scalar1x1(int value) {
  Matrix m;
  m.size = 1;
  m.data = {value};
  return m;
}

}  // namespace

Preset parse_preset(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos)
    throw ModelError("preset must be '<group>:<module>', got '" + text + "'");
  const std::string gpart = text.substr(0, colon);
  const std::string mpart = text.substr(colon + 1);

  FiniteGroup group = cyclic_group(1);
  std::optional<int> cyclic_order;
  if (gpart.size() >= 2 && gpart[0] == 'C') {
    const auto n = parse_number(gpart, 1, gpart.size());
    if (!n || *n < 1) unknown("group", gpart);
    group = cyclic_group(*n);
    cyclic_order = *n;
  } else if (gpart == "S3") {
    group = symmetric_group_s3();
  } else if (gpart == "D4") {
    group = dihedral_group_d4();
  } else {
    unknown("group", gpart);
  }

  if (mpart.size() < 2 || mpart[0] != 'Z') unknown("module", mpart);

  std::optional<GModule> module;
  if (mpart.size() > 4 && mpart.compare(mpart.size() - 4, 4, "sign") == 0) {
    const auto m = parse_number(mpart, 1, mpart.size() - 4);
    if (!m) unknown("module", mpart);
    if (gpart != "S3" && gpart != "D4")
      throw ModelError("sign module needs the group S3 or D4, got " + gpart);
    std::vector<Matrix> actions;
    for (int g = 0; g < group.order(); ++g) {
      const bool odd = gpart == "S3" ? s3_parity(g) < 0 : g >= 4;
      actions.push_back(scalar1x1(odd ? *m - 1 : 1));
    }
    module = GModule::make(group, *m, 1, std::move(actions));
  } else if (mpart.size() > 4 && mpart.compare(mpart.size() - 4, 4, "triv") == 0) {
    const auto m = parse_number(mpart, 1, mpart.size() - 4);
    if (!m) unknown("module", mpart);
    module = trivial_module(group, *m);
  } else if (const auto x = mpart.find('x'); x != std::string::npos) {
    const auto m = parse_number(mpart, 1, x);
    const auto a = parse_number(mpart, x + 1, mpart.size());
    if (!m || !a) unknown("module", mpart);
    if (!cyclic_order)
      throw ModelError("multiplication module Z<m>x<a> needs a cyclic group C<n>, got " + gpart);
    std::vector<Matrix> actions;
    long long power = 1;
    for (int g = 0; g < *cyclic_order; ++g) {
      actions.push_back(scalar1x1(static_cast<int>(power)));
      power = power * *a % *m;
    }
    module = GModule::make(group, *m, 1, std::move(actions));
  } else {
    unknown("module", mpart);
  }

  return Preset{gpart + ":" + mpart, std::move(group), std::move(*module)};
}

}  // namespace ybfox
