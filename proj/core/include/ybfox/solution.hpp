#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ybfox/errors.hpp"
#include "ybfox/gmodule.hpp"
#include "ybfox/report.hpp"
#include "ybfox/wada.hpp"

namespace ybfox {

/// Thrown when a pair that fails the braid relations is used to build a
/// solution table without the unchecked override; carries the failing
/// verification report.
class BraidGateError : public Error {
 public:
  BraidGateError(const std::string& message, RelationReport report)
      : Error(message), report_(std::move(report)) {}

  const RelationReport& report() const { return report_; }

 private:
  RelationReport report_;
};

/// A total map S^2 -> S^2 on a finite carrier S = {0..carrier-1},
/// tabulated as out[p1 * carrier + p2] = (q1, q2).
struct SquareMap {
  long long carrier = 0;
  std::vector<std::pair<long long, long long>> out;

  std::pair<long long, long long> apply(long long p1, long long p2) const {
    return out[static_cast<size_t>(p1 * carrier + p2)];
  }
};

/// Identity map on S^2 and the flip (p1, p2) -> (p2, p1).
SquareMap identity_map(long long carrier);
SquareMap flip_map(long long carrier);

/// Point index over the carrier G x (Z/m)^k: the group element is the
/// most significant digit, then the vector entries most significant
/// first, so lexicographic (g, vec) order is numeric index order.
long long encode_point(int g, const std::vector<int>& vec, int modulus);
void decode_point(long long p, int modulus, int rank, int& g, std::vector<int>& vec);

/// Tabulates R(x, y) = (u(x,y), v(x,y)) over G^2 by evaluating both
/// words. Refuses pairs that fail the braid relations (BraidGateError)
/// unless unchecked is set.
SquareMap base_solution(const WadaPair& p, const FiniteGroup& g, bool unchecked = false);

/// The extension of a base solution by a module:
///   R((x,a),(y,b)) = ((u(x,y), u1 a + u2 b), (v(x,y), v1 a + v2 b))
/// with the derived coefficients acting through the module.
struct ExtendedSolution {
  FiniteGroup group;
  GModule module;
  WadaPair pair;
  DerivedCoefficients coeffs;
  SquareMap map;
};

ExtendedSolution extended_solution(const WadaPair& p, const FiniteGroup& g, const GModule& v,
                                   bool unchecked = false);

inline constexpr long long kDefaultTripleBudget = 100'000'000;

/// Outcome of an exhaustive braid check. On failure the witness is the
/// lexicographically first triple where the sides differ, together with
/// both evaluated sides; detail optionally localizes the mismatch.
struct SybeVerdict {
  bool pass = true;
  long long triples = 0;
  std::array<long long, 3> witness{};
  std::array<long long, 3> lhs{};
  std::array<long long, 3> rhs{};
  std::string detail;
};

/// Exhaustively tests (R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R) over
/// all carrier^3 triples in lexicographic order. Throws BudgetError when
/// the triple count exceeds the budget. May scan in parallel; the
/// reported witness is always the lexicographically first failure.
SybeVerdict check_sybe(const SquareMap& r, long long budget = kDefaultTripleBudget);

/// The same scan computed through the coefficient formulas instead of
/// the table: for each triple both sides are rebuilt from eval_word and
/// apply_ring, and the three slots are compared component by component
/// (group parts, then the module parts A/B/C against A'/B'/C'). On
/// failure, detail names the first mismatched slot and component.
SybeVerdict check_sybe_verbose(const ExtendedSolution& s, long long budget = kDefaultTripleBudget);

/// Whether R is a bijection of S^2; if not, two distinct inputs with the
/// same image (each input given as its point pair).
struct BijectivityVerdict {
  bool bijective = true;
  std::array<long long, 2> first_input{};
  std::array<long long, 2> second_input{};
};

BijectivityVerdict check_bijective(const SquareMap& r);

/// Serialization of an extended solution: a header line
///   ybe-ext v1 |G|=<n> m=<m> k=<k>
/// then one line per input pair in lexicographic order,
///   g1 vec1 g2 vec2 -> g1' vec1' g2' vec2'
/// with integer indices and space-separated vector entries. Bit-exact:
/// writing the same solution twice produces identical bytes.
void write_solution(const ExtendedSolution& s, std::ostream& out);

/// A solution table read back from the export format, with the carrier
/// shape from the header.
struct SolutionFile {
  int group_order = 0;
  int modulus = 0;
  int rank = 0;
  SquareMap map;
};

/// Parses the export format, validating the header, the lexicographic
/// input order, totality, and that every index is in range. Throws
/// ModelError with the offending line number.
SolutionFile read_solution(std::istream& in);

}  // namespace ybfox
