#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ybfox/gmodule.hpp"
#include "ybfox/wada.hpp"

namespace ybfox {

/// A model description read from the line-oriented text format:
///
///   # comment                      (anywhere; '#' to end of line)
///   group <order>                  followed by <order> table rows
///   module <modulus> <rank>        optional; followed by one line per
///                                  group element, k*k row-major entries
///   pair                           optional; followed by
///   u <word>
///   v <word>
///
/// Sections must appear in that order. The group and module are
/// validated on load; the pair is parsed over (x, y) but not checked.
struct ModelFile {
  FiniteGroup group;
  std::optional<GModule> module;
  std::optional<WadaPair> pair;
};

/// Parses the format above. Throws ModelError naming the line on any
/// structural problem, or the validation error of a bad group/module.
ModelFile parse_model_file(std::istream& in);

/// Opens and parses path; throws ModelError if the file cannot be read.
ModelFile load_model_file(const std::string& path);

}  // namespace ybfox
