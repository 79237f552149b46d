#include "ybfox/solution.hpp"

#include <atomic>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace ybfox {

namespace {

using Point = long long;
using PointPair = std::pair<Point, Point>;

std::string render_vec(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void require_braid_pass(const WadaPair& p, bool unchecked) {
  if (unchecked) return;
  RelationReport report = verify_braid_relations(p);
  if (!report.all_required_hold())
    throw BraidGateError("pair (" + format_word(p.u) + ", " + format_word(p.v) +
                             ") fails the braid relations; pass unchecked to build anyway",
                         std::move(report));
}

}  // namespace

SquareMap identity_map(long long carrier) {
  SquareMap r;
  r.carrier = carrier;
  r.out.reserve(static_cast<size_t>(carrier * carrier));
  for (Point p1 = 0; p1 < carrier; ++p1)
    for (Point p2 = 0; p2 < carrier; ++p2) r.out.emplace_back(p1, p2);
  return r;
}

SquareMap flip_map(long long carrier) {
  SquareMap r;
  r.carrier = carrier;
  r.out.reserve(static_cast<size_t>(carrier * carrier));
  for (Point p1 = 0; p1 < carrier; ++p1)
    for (Point p2 = 0; p2 < carrier; ++p2) r.out.emplace_back(p2, p1);
  return r;
}

long long encode_point(int g, const std::vector<int>& vec, int modulus) {
  long long p = g;
  for (int digit : vec) p = p * modulus + digit;
  return p;
}

void decode_point(long long p, int modulus, int rank, int& g, std::vector<int>& vec) {
  vec.assign(static_cast<size_t>(rank), 0);
  for (int i = rank - 1; i >= 0; --i) {
    vec[static_cast<size_t>(i)] = static_cast<int>(p % modulus);
    p /= modulus;
  }
  g = static_cast<int>(p);
}

SquareMap base_solution(const WadaPair& p, const FiniteGroup& g, bool unchecked) {
  require_braid_pass(p, unchecked);
  const int n = g.order();
  SquareMap r;
  r.carrier = n;
  r.out.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::vector<int> assign{x, y};
      r.out.emplace_back(eval_word(p.u, assign, g), eval_word(p.v, assign, g));
    }
  return r;
}

ExtendedSolution extended_solution(const WadaPair& p, const FiniteGroup& g, const GModule& v,
                                   bool unchecked) {
  require_braid_pass(p, unchecked);
  const int n = g.order();
  const int m = v.modulus();
  const int k = v.rank();
  const long long vectors = v.vector_count();
  const long long carrier = n * vectors;

  DerivedCoefficients coeffs = derived_coefficients(p);

  // per group pair: output group elements and the four coefficient images
  struct PairData {
    int gu, gv;
    Matrix u1, u2, v1, v2;
  };
  std::vector<PairData> pd(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::vector<int> assign{x, y};
      PairData& d = pd[static_cast<size_t>(x) * n + y];
      d.gu = eval_word(p.u, assign, g);
      d.gv = eval_word(p.v, assign, g);
      d.u1 = ring_action_matrix(coeffs.u1, assign, g, v);
      d.u2 = ring_action_matrix(coeffs.u2, assign, g, v);
      d.v1 = ring_action_matrix(coeffs.v1, assign, g, v);
      d.v2 = ring_action_matrix(coeffs.v2, assign, g, v);
    }

  std::vector<std::vector<int>> vecs(static_cast<size_t>(vectors));
  for (long long i = 0; i < vectors; ++i) {
    int unused;
    decode_point(i, m, k, unused, vecs[static_cast<size_t>(i)]);
  }

  SquareMap r;
  r.carrier = carrier;
  r.out.resize(static_cast<size_t>(carrier * carrier));
  for (int x = 0; x < n; ++x)
    for (long long a = 0; a < vectors; ++a) {
      const Point p1 = x * vectors + a;
      for (int y = 0; y < n; ++y) {
        const PairData& d = pd[static_cast<size_t>(x) * n + y];
        for (long long b = 0; b < vectors; ++b) {
          const Point p2 = y * vectors + b;
          const auto& va = vecs[static_cast<size_t>(a)];
          const auto& vb = vecs[static_cast<size_t>(b)];
          std::vector<int> out1(static_cast<size_t>(k)), out2(static_cast<size_t>(k));
          const std::vector<int> ua = mat_vec(d.u1, va, m), ub = mat_vec(d.u2, vb, m);
          const std::vector<int> wa = mat_vec(d.v1, va, m), wb = mat_vec(d.v2, vb, m);
          for (int i = 0; i < k; ++i) {
            out1[static_cast<size_t>(i)] = (ua[static_cast<size_t>(i)] + ub[static_cast<size_t>(i)]) % m;
            out2[static_cast<size_t>(i)] = (wa[static_cast<size_t>(i)] + wb[static_cast<size_t>(i)]) % m;
          }
          r.out[static_cast<size_t>(p1 * carrier + p2)] = {
              encode_point(d.gu, out1, m), encode_point(d.gv, out2, m)};
        }
      }
    }

  return ExtendedSolution{g, v, p, std::move(coeffs), std::move(r)};
}

namespace {

struct Failure {
  std::array<Point, 3> witness, lhs, rhs;
};

// both composite sides at one triple; apply order is positions
// (1,2), (2,3), (1,2) on the left and (2,3), (1,2), (2,3) on the right
void composite_sides(const SquareMap& r, Point p, Point q, Point s,
                     std::array<Point, 3>& lhs, std::array<Point, 3>& rhs) {
  {
    auto [a1, b1] = r.apply(p, q);
    auto [b2, c2] = r.apply(b1, s);
    auto [a3, b3] = r.apply(a1, b2);
    lhs = {a3, b3, c2};
  }
  {
    auto [b1, c1] = r.apply(q, s);
    auto [a2, b2] = r.apply(p, b1);
    auto [b3, c3] = r.apply(b2, c1);
    rhs = {a2, b3, c3};
  }
}

// scans p in [p_lo, p_hi) x full q,s range in lexicographic order and
// returns this range's first failing triple
std::optional<Failure> scan_range(const SquareMap& r, Point p_lo, Point p_hi,
                                  std::atomic<Point>* best_p) {
  const Point n = r.carrier;
  std::array<Point, 3> lhs{}, rhs{};
  for (Point p = p_lo; p < p_hi; ++p) {
    if (best_p && p > best_p->load(std::memory_order_relaxed)) return std::nullopt;
    for (Point q = 0; q < n; ++q)
      for (Point s = 0; s < n; ++s) {
        composite_sides(r, p, q, s, lhs, rhs);
        if (lhs != rhs) {
          if (best_p) {
            Point cur = best_p->load(std::memory_order_relaxed);
            while (p < cur && !best_p->compare_exchange_weak(cur, p)) {
            }
          }
          return Failure{{p, q, s}, lhs, rhs};
        }
      }
  }
  return std::nullopt;
}

constexpr long long kParallelThreshold = 1LL << 22;

void check_budget(long long carrier, long long budget) {
  const __int128 triples = static_cast<__int128>(carrier) * carrier * carrier;
  if (triples > budget)
    throw BudgetError("exhaustive check needs " + std::to_string(carrier) + "^3 = " +
                      std::to_string(static_cast<long long>(triples)) +
                      " triple evaluations, over the budget of " + std::to_string(budget) +
                      "; raise the budget to proceed");
}

SybeVerdict verdict_from(std::optional<Failure> f, long long triples) {
  SybeVerdict v;
  v.triples = triples;
  if (f) {
    v.pass = false;
    v.witness = f->witness;
    v.lhs = f->lhs;
    v.rhs = f->rhs;
  }
  return v;
}

}  // namespace

SybeVerdict check_sybe(const SquareMap& r, long long budget) {
  const Point n = r.carrier;
  check_budget(n, budget);
  const long long triples = n * n * n;

  unsigned hw = std::thread::hardware_concurrency();
  if (triples < kParallelThreshold || hw < 2) {
    return verdict_from(scan_range(r, 0, n, nullptr), triples);
  }

  const int workers = static_cast<int>(std::min<Point>(hw, n));
  std::vector<std::optional<Failure>> found(static_cast<size_t>(workers));
  std::atomic<Point> best_p{n};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const Point lo = n * w / workers;
    const Point hi = n * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { found[static_cast<size_t>(w)] = scan_range(r, lo, hi, &best_p); });
  }
  for (auto& t : pool) t.join();

  // ranges partition by the leading coordinate, so the lexicographically
  // first failure overall is the first worker's own first failure
  for (auto& f : found)
    if (f) return verdict_from(std::move(f), triples);
  return verdict_from(std::nullopt, triples);
}

namespace {

/// Formula-route application of the extended R to two concrete points.
struct FormulaR {
  const ExtendedSolution& s;

  struct P {
    int g;
    std::vector<int> vec;
  };

  std::pair<P, P> operator()(const P& a, const P& b) const {
    const std::vector<int> assign{a.g, b.g};
    const FiniteGroup& g = s.group;
    const GModule& v = s.module;
    const int m = v.modulus();
    const int k = v.rank();
    P out1, out2;
    out1.g = eval_word(s.pair.u, assign, g);
    out2.g = eval_word(s.pair.v, assign, g);
    const std::vector<int> ua = apply_ring(s.coeffs.u1, assign, g, v, a.vec);
    const std::vector<int> ub = apply_ring(s.coeffs.u2, assign, g, v, b.vec);
    const std::vector<int> wa = apply_ring(s.coeffs.v1, assign, g, v, a.vec);
    const std::vector<int> wb = apply_ring(s.coeffs.v2, assign, g, v, b.vec);
    out1.vec.resize(static_cast<size_t>(k));
    out2.vec.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      out1.vec[static_cast<size_t>(i)] = (ua[static_cast<size_t>(i)] + ub[static_cast<size_t>(i)]) % m;
      out2.vec[static_cast<size_t>(i)] = (wa[static_cast<size_t>(i)] + wb[static_cast<size_t>(i)]) % m;
    }
    return {std::move(out1), std::move(out2)};
  }
};

}  // namespace

SybeVerdict check_sybe_verbose(const ExtendedSolution& s, long long budget) {
  const Point n = s.map.carrier;
  check_budget(n, budget);
  const int m = s.module.modulus();
  const int k = s.module.rank();
  const FormulaR R{s};
  using P = FormulaR::P;

  auto decode = [&](Point p) {
    P r;
    decode_point(p, m, k, r.g, r.vec);
    return r;
  };
  auto encode = [&](const P& p) { return encode_point(p.g, p.vec, m); };

  SybeVerdict v;
  v.triples = n * n * n;
  static const char* kModuleNames[3] = {"A", "B", "C"};
  for (Point pi = 0; pi < n; ++pi) {
    const P p = decode(pi);
    for (Point qi = 0; qi < n; ++qi) {
      const P q = decode(qi);
      for (Point si = 0; si < n; ++si) {
        const P t = decode(si);

        auto [a1, b1] = R(p, q);
        auto [b2, c2] = R(b1, t);
        auto [a3, b3] = R(a1, b2);
        const std::array<P, 3> lhs{a3, b3, c2};

        auto [bb1, cc1] = R(q, t);
        auto [aa2, bb2] = R(p, bb1);
        auto [bb3, cc3] = R(bb2, cc1);
        const std::array<P, 3> rhs{aa2, bb3, cc3};

        for (int slot = 0; slot < 3; ++slot) {
          const P& l = lhs[static_cast<size_t>(slot)];
          const P& r = rhs[static_cast<size_t>(slot)];
          if (l.g == r.g && l.vec == r.vec) continue;
          v.pass = false;
          v.witness = {pi, qi, si};
          v.lhs = {encode(lhs[0]), encode(lhs[1]), encode(lhs[2])};
          v.rhs = {encode(rhs[0]), encode(rhs[1]), encode(rhs[2])};
          if (l.g != r.g)
            v.detail = "slot " + std::to_string(slot + 1) + " group components differ: " +
                       std::to_string(l.g) + " vs " + std::to_string(r.g);
          else
            v.detail = std::string("slot ") + std::to_string(slot + 1) +
                       " module components differ: " + kModuleNames[slot] + " = " +
                       render_vec(l.vec) + " vs " + kModuleNames[slot] + "' = " +
                       render_vec(r.vec);
          return v;
        }
      }
    }
  }
  return v;
}

BijectivityVerdict check_bijective(const SquareMap& r) {
  const Point n = r.carrier;
  std::vector<Point> seen(static_cast<size_t>(n * n), -1);
  BijectivityVerdict v;
  for (Point p1 = 0; p1 < n; ++p1)
    for (Point p2 = 0; p2 < n; ++p2) {
      auto [q1, q2] = r.apply(p1, p2);
      Point& slot = seen[static_cast<size_t>(q1 * n + q2)];
      if (slot >= 0) {
        v.bijective = false;
        v.first_input = {slot / n, slot % n};
        v.second_input = {p1, p2};
        return v;
      }
      slot = p1 * n + p2;
    }
  return v;
}

namespace {

void write_point_fields(std::ostream& out, Point p, int m, int k) {
  int g;
  std::vector<int> vec;
  decode_point(p, m, k, g, vec);
  out << g;
  for (int x : vec) out << ' ' << x;
}

}  // namespace

void write_solution(const ExtendedSolution& s, std::ostream& out) {
  const int n = s.group.order();
  const int m = s.module.modulus();
  const int k = s.module.rank();
  out << "ybe-ext v1 |G|=" << n << " m=" << m << " k=" << k << "\n";
  const Point carrier = s.map.carrier;
  for (Point p1 = 0; p1 < carrier; ++p1)
    for (Point p2 = 0; p2 < carrier; ++p2) {
      const auto [q1, q2] = s.map.apply(p1, p2);
      write_point_fields(out, p1, m, k);
      out << ' ';
      write_point_fields(out, p2, m, k);
      out << " -> ";
      write_point_fields(out, q1, m, k);
      out << ' ';
      write_point_fields(out, q2, m, k);
      out << "\n";
    }
}

namespace {

[[noreturn]] void bad_line(long long line, const std::string& why) {
  throw ModelError("solution file line " + std::to_string(line) + ": " + why);
}

// reads the 1+k fields of one point and re-encodes them, range-checked
Point read_point_fields(std::istringstream& in, int n, int m, int k, long long line) {
  int g;
  if (!(in >> g)) bad_line(line, "missing group index");
  if (g < 0 || g >= n) bad_line(line, "group index " + std::to_string(g) + " out of range");
  std::vector<int> vec(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (!(in >> vec[static_cast<size_t>(i)])) bad_line(line, "missing vector entry");
    if (vec[static_cast<size_t>(i)] < 0 || vec[static_cast<size_t>(i)] >= m)
      bad_line(line, "vector entry " + std::to_string(vec[static_cast<size_t>(i)]) + " out of range");
  }
  return encode_point(g, vec, m);
}

}  // namespace

SolutionFile read_solution(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ModelError("solution file is empty");
  int n = 0, m = 0, k = 0;
  {
    std::istringstream hs(header);
    std::string magic, version, gf, mf, kf;
    hs >> magic >> version >> gf >> mf >> kf;
    auto field = [&](const std::string& s, const std::string& prefix) {
      if (s.rfind(prefix, 0) != 0)
        throw ModelError("solution file header is not 'ybe-ext v1 |G|=<n> m=<m> k=<k>'");
      return std::stoi(s.substr(prefix.size()));
    };
    if (magic != "ybe-ext" || version != "v1")
      throw ModelError("solution file header is not 'ybe-ext v1 |G|=<n> m=<m> k=<k>'");
    n = field(gf, "|G|=");
    m = field(mf, "m=");
    k = field(kf, "k=");
    std::string extra;
    if (hs >> extra) throw ModelError("solution file header has trailing fields");
  }
  if (n < 1 || m < 2 || k < 1) throw ModelError("solution file header has an invalid shape");

  long long vectors = 1;
  for (int i = 0; i < k; ++i) vectors *= m;
  const Point carrier = n * vectors;

  SolutionFile f;
  f.group_order = n;
  f.modulus = m;
  f.rank = k;
  f.map.carrier = carrier;
  f.map.out.resize(static_cast<size_t>(carrier * carrier));

  std::string text;
  for (long long idx = 0; idx < carrier * carrier; ++idx) {
    const long long line = idx + 2;
    if (!std::getline(in, text)) bad_line(line, "file ends before the table is total");
    std::istringstream ls(text);
    const Point in1 = read_point_fields(ls, n, m, k, line);
    const Point in2 = read_point_fields(ls, n, m, k, line);
    std::string arrow;
    if (!(ls >> arrow) || arrow != "->") bad_line(line, "expected '->'");
    const Point out1 = read_point_fields(ls, n, m, k, line);
    const Point out2 = read_point_fields(ls, n, m, k, line);
    std::string extra;
    if (ls >> extra) bad_line(line, "trailing fields after the output pair");
    if (in1 != idx / carrier || in2 != idx % carrier)
      bad_line(line, "input pair is out of lexicographic order");
    f.map.out[static_cast<size_t>(idx)] = {out1, out2};
  }
  while (std::getline(in, text))
    if (!text.empty()) throw ModelError("solution file has content after the table");
  return f;
}

}  // namespace ybfox
