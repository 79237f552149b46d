#include "ybfox/wada.hpp"

#include <utility>

#include "ybfox/errors.hpp"
#include "ybfox/fox.hpp"
#include "ybfox/relations.hpp"

namespace ybfox {

namespace {

void require_rank2(const FreeWord& w, const char* which) {
  if (!same_alphabet(w.alphabet(), Alphabet::rank2()))
    throw AlphabetError(std::string("Wada pair: ") + which +
                        " must be a word over the rank-2 alphabet (x, y)");
}

RelationEntry word_entry(const IdentityTemplate& row, const PairSymbols& s, bool required) {
  const FreeWord lhs = eval_word_expr(parse_word_expr(row.lhs), s);
  const FreeWord rhs = eval_word_expr(parse_word_expr(row.rhs), s);
  return {row.id, format_word(lhs), format_word(rhs), lhs == rhs, required};
}

RelationEntry ring_entry(const IdentityTemplate& row, const PairSymbols& s, bool required) {
  const GroupRingElement lhs = eval_ring_expr(parse_ring_expr(row.lhs), s);
  const GroupRingElement rhs = eval_ring_expr(parse_ring_expr(row.rhs), s);
  return {row.id, format_element(lhs), format_element(rhs), lhs == rhs, required};
}

}  // namespace

WadaPair::WadaPair(FreeWord u_word, FreeWord v_word, std::string name)
    : u(std::move(u_word)), v(std::move(v_word)), label(std::move(name)) {
  require_rank2(u, "u");
  require_rank2(v, "v");
}

WadaPair parse_pair(const std::string& text, std::string label) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("pair must be written \"u,v\"", text.size());
  if (text.find(',', comma + 1) != std::string::npos)
    throw ParseError("pair must contain exactly one ','", text.find(',', comma + 1));
  const auto& a2 = Alphabet::rank2();
  FreeWord u = parse_word(text.substr(0, comma), a2);
  FreeWord v = parse_word(text.substr(comma + 1), a2);
  return WadaPair(std::move(u), std::move(v), std::move(label));
}

DerivedCoefficients derived_coefficients(const WadaPair& p) {
  return {fox_derivative(p.u, 0), fox_derivative(p.u, 1),
          fox_derivative(p.v, 0), fox_derivative(p.v, 1)};
}

RelationReport verify_braid_relations(const WadaPair& p) {
  const PairSymbols s = make_pair_symbols(p.u, p.v);
  RelationReport report;
  for (const auto& row : braid_equation_templates())
    report.entries.push_back(word_entry(row, s, true));
  return report;
}

std::vector<WadaPair> wada_catalog(int m_min, int m_max) {
  const auto& a2 = Alphabet::rank2();
  const FreeWord x = FreeWord::generator(a2, 0);
  const FreeWord y = FreeWord::generator(a2, 1);

  std::vector<WadaPair> list;
  list.emplace_back(x, y, "W1");
  list.emplace_back(y.inverse(), x, "W2");
  list.emplace_back(y.inverse(), x.inverse(), "W3");
  for (int m = m_min; m <= m_max; ++m) {
    const FreeWord conj = multiply(multiply(power(y, m), x), power(y, -m));
    list.emplace_back(y, conj, "W4[m=" + std::to_string(m) + "]");
  }
  list.emplace_back(y, multiply(multiply(y, x.inverse()), y), "W5");
  list.emplace_back(y.inverse(), multiply(multiply(y, x), y), "W6");
  list.emplace_back(multiply(multiply(x.inverse(), y.inverse()), x),
                    multiply(multiply(y, y), x), "W7");
  return list;
}

RelationReport verify_lemma1(const WadaPair& p) {
  const PairSymbols s = make_pair_symbols(p.u, p.v);
  RelationReport report;
  for (const auto& row : lemma1_templates())
    report.entries.push_back(ring_entry(row, s, true));
  return report;
}

RelationReport rack_check(const WadaPair& p) {
  const PairSymbols s = make_pair_symbols(p.u, p.v);
  RelationReport report;
  report.entries.push_back(word_entry(rack_self_distributivity_template(), s, true));

  const FreeWord y = FreeWord::generator(Alphabet::rank2(), 1);
  const bool u_is_y = p.u == y;
  report.entries.push_back(
      {"rack-u-cond", format_word(p.u), "y", u_is_y, false});

  report.notes.emplace_back("eta", format_element(s.v1));
  report.notes.emplace_back("tau", format_element(s.v2));

  if (u_is_y) {
    for (const auto& row : rack_algebra_templates())
      report.entries.push_back(ring_entry(row, s, true));
  }
  return report;
}

}  // namespace ybfox
