#include "mfring/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace mfring {

namespace {

Presentation make_presentation(int level, std::vector<std::pair<std::string, int>> gens,
                               std::vector<std::string> ideal, std::vector<Cone> cones) {
  Presentation p;
  p.level = level;
  p.gens = make_generators(std::move(gens));
  p.ideal = std::move(ideal);
  p.complement = std::move(cones);
  return p;
}

std::map<int, Presentation> build_presentations() {
  std::map<int, Presentation> out;
  auto add = [&](Presentation p) { out.emplace(p.level, std::move(p)); };

  add(make_presentation(1, {{"E4", 4}, {"E6", 6}}, {}, {}));
  add(make_presentation(2, {{"C2", 2}, {"alpha2", 4}}, {}, {}));
  add(make_presentation(4, {{"C2", 2}, {"alpha4", 2}}, {}, {}));

  // rank-one quotients R[Y]/(O): complement C[X1,X2] + C[X1,X2]*Y
  add(make_presentation(3, {{"C3", 2}, {"alpha3", 4}, {"beta3", 6}}, {"O_3"},
                        {{{"C3", "beta3"}, ""}, {{"C3", "beta3"}, "alpha3"}}));
  add(make_presentation(5, {{"C5", 2}, {"alpha5", 4}, {"beta5", 4}}, {"O_5"},
                        {{{"C5", "beta5"}, ""}, {{"C5", "beta5"}, "alpha5"}}));
  add(make_presentation(6, {{"C3^(2)", 2}, {"alpha6", 2}, {"beta6", 2}}, {"O_6"},
                        {{{"C3^(2)", "beta6"}, ""}, {{"C3^(2)", "beta6"}, "alpha6"}}));
  add(make_presentation(8, {{"C4^(2)", 2}, {"alpha4", 2}, {"alpha4^(2)", 2}}, {"O_8"},
                        {{{"C4^(2)", "alpha4^(2)"}, ""}, {{"C4^(2)", "alpha4^(2)"}, "alpha4"}}));
  add(make_presentation(9, {{"C3", 2}, {"alpha9", 2}, {"beta9", 2}}, {"O_9"},
                        {{{"C3", "beta9"}, ""}, {{"C3", "beta9"}, "alpha9"}}));

  add(make_presentation(7,
                        {{"C7", 2}, {"alpha7", 4}, {"beta7", 4}, {"gamma7", 6}, {"delta7", 6}},
                        {"O_7a", "O_7b", "O_7c", "O_7d", "O_7e", "O_7f"},
                        {{{"C7", "beta7"}, ""},
                         {{"C7", "beta7"}, "alpha7"},
                         {{"beta7", "delta7"}, "delta7"},
                         {{"beta7", "delta7"}, "gamma7"}}));
  add(make_presentation(10,
                        {{"u10", 2}, {"alpha10", 2}, {"beta10", 2}, {"epsilon10", 4}, {"zeta10", 4}},
                        {"O_10a", "O_10b", "O_10c", "O_10d", "O_10e", "O_10f"},
                        {{{"u10", "alpha10"}, ""},
                         {{"alpha10", "beta10"}, "beta10"},
                         {{"beta10", "zeta10"}, "zeta10"},
                         {{"beta10", "zeta10"}, "epsilon10"}}));
  add(make_presentation(12,
                        {{"C3^(2)", 2}, {"alpha6", 2}, {"beta6", 2}, {"gamma12", 2}, {"beta6^(2)", 2}},
                        {"O_6", "O_12b", "O_12c", "O_12d", "O_12e", "O_12f"},
                        {{{"C3^(2)", "alpha6"}, ""},
                         {{"alpha6", "beta6"}, "beta6"},
                         {{"beta6", "gamma12"}, "gamma12"},
                         {{"gamma12", "beta6^(2)"}, "beta6^(2)"}}));
  add(make_presentation(16,
                        {{"C4^(2)", 2}, {"alpha4", 2}, {"alpha4^(2)", 2}, {"gamma16", 2}, {"alpha4^(4)", 2}},
                        {"O_8", "O_16b", "O_16c", "O_16d", "O_16e", "O_16f"},
                        {{{"C4^(2)", "alpha4"}, ""},
                         {{"alpha4", "alpha4^(2)"}, "alpha4^(2)"},
                         {{"alpha4^(2)", "gamma16"}, "gamma16"},
                         {{"gamma16", "alpha4^(4)"}, "alpha4^(4)"}}));
  add(make_presentation(18,
                        {{"u18", 2}, {"alpha18", 2}, {"beta6", 2}, {"gamma18", 2},
                         {"delta18", 2}, {"epsilon18", 2}, {"beta6^(3)", 2}},
                        {"O_18a", "O_18b", "O_18c", "O_18d", "O_18e", "O_18f",
                         "O_18A", "O_18B", "O_18C", "O_18D", "O_18E", "O_18F",
                         "O_18G", "O_18H", "O_18I"},
                        {{{"u18", "alpha18"}, ""},
                         {{"alpha18", "beta6"}, "beta6"},
                         {{"beta6", "gamma18"}, "gamma18"},
                         {{"gamma18", "delta18"}, "delta18"},
                         {{"delta18", "epsilon18"}, "epsilon18"},
                         {{"epsilon18", "beta6^(3)"}, "beta6^(3)"}}));
  add(make_presentation(25,
                        {{"u25", 2}, {"alpha25", 2}, {"E_i5", 2}, {"gamma25", 2},
                         {"delta25", 2}, {"iota25", 4}, {"beta5^(5)", 4}},
                        {"O_25a", "O_25b", "O_25c", "O_25d", "O_25e", "O_25f",
                         "O_25A", "O_25B", "O_25C", "O_25D", "O_25E", "O_25F",
                         "O_25G", "O_25H", "O_25I"},
                        {{{"u25", "alpha25"}, ""},
                         {{"alpha25", "E_i5"}, "E_i5"},
                         {{"E_i5", "gamma25"}, "gamma25"},
                         {{"gamma25", "delta25"}, "delta25"},
                         {{"delta25", "beta5^(5)"}, "beta5^(5)"},
                         {{"delta25", "beta5^(5)"}, "iota25"}}));
  return out;
}

void enumerate_rec(const GeneratorSet& gens, size_t i, int remaining, ExpVec& cur,
                   const std::function<void(const ExpVec&)>& emit) {
  if (i + 1 == gens.names.size()) {
    int w = gens.weights[i];
    if (remaining % w == 0) {
      cur[i] = remaining / w;
      emit(cur);
      cur[i] = 0;
    }
    return;
  }
  int w = gens.weights[i];
  for (int e = 0; e * w <= remaining; ++e) {
    cur[i] = e;
    enumerate_rec(gens, i + 1, remaining - e * w, cur, emit);
  }
  cur[i] = 0;
}

}  // namespace

const Presentation& presentation(int level) {
  static const std::map<int, Presentation> table = build_presentations();
  auto it = table.find(level);
  if (it == table.end()) throw UnsupportedLevel(level);
  return it->second;
}

std::vector<ExpVec> monomials(const Presentation& pres, int k) {
  std::vector<ExpVec> out;
  if (k < 0) return out;
  ExpVec cur(static_cast<size_t>(pres.gens->size()), 0);
  enumerate_rec(*pres.gens, 0, k, cur, [&](const ExpVec& e) { out.push_back(e); });
  return out;
}

long long monomial_count(const Presentation& pres, int k) {
  long long n = 0;
  if (k < 0) return 0;
  ExpVec cur(static_cast<size_t>(pres.gens->size()), 0);
  enumerate_rec(*pres.gens, 0, k, cur, [&](const ExpVec&) { ++n; });
  return n;
}

std::vector<ExpVec> complement_monomials(const Presentation& pres, int k) {
  if (pres.complement.empty()) return monomials(pres, k);
  std::set<ExpVec> seen;
  std::vector<ExpVec> out;
  const auto& gens = *pres.gens;
  for (const auto& cone : pres.complement) {
    int ix = gens.index(cone.pair[0]);
    int iy = gens.index(cone.pair[1]);
    int wx = gens.weights[static_cast<size_t>(ix)];
    int wy = gens.weights[static_cast<size_t>(iy)];
    int rem = k;
    ExpVec base(static_cast<size_t>(gens.size()), 0);
    if (!cone.multiplier.empty()) {
      int im = gens.index(cone.multiplier);
      base[static_cast<size_t>(im)] = 1;
      rem -= gens.weights[static_cast<size_t>(im)];
    }
    if (rem < 0) continue;
    for (int a = 0; a * wx <= rem; ++a) {
      if ((rem - a * wx) % wy) continue;
      ExpVec e = base;
      e[static_cast<size_t>(ix)] += a;
      e[static_cast<size_t>(iy)] += (rem - a * wx) / wy;
      if (!seen.insert(e).second)
        throw std::logic_error("overlapping complement cones at level " +
                               std::to_string(pres.level));
      out.push_back(std::move(e));
    }
  }
  return out;
}

HilbertExpr complement_hilbert(const Presentation& pres) {
  HilbertExpr h;
  const auto& gens = *pres.gens;
  if (pres.complement.empty()) {
    h.atoms.push_back({{1}, {gens.weights[0], gens.weights[1]}});
    return h;
  }
  for (const auto& cone : pres.complement) {
    int shift = cone.multiplier.empty()
                    ? 0
                    : gens.weights[static_cast<size_t>(gens.index(cone.multiplier))];
    int wx = gens.weights[static_cast<size_t>(gens.index(cone.pair[0]))];
    int wy = gens.weights[static_cast<size_t>(gens.index(cone.pair[1]))];
    h = h + HilbertExpr::monomial_cone(shift, {wx, wy});
  }
  return h;
}

RatMatrix eval_matrix(const Presentation& pres, int k, int precision, Evaluator& ev) {
  int d = dim_space({pres.level, k});
  if (precision < d)
    throw InsufficientPrecision("eval_matrix: precision below dim M_k(N)");
  RatMatrix m;
  for (const auto& e : monomials(pres, k)) {
    QExpansion q = ev.monomial(*pres.gens, e, precision);
    std::vector<Rat> row(q.coeffs().begin(), q.coeffs().begin() + d);
    m.push_back(std::move(row));
  }
  return m;
}

// ---------------------------------------------------------------------------
// ideal slice dimension

namespace {

std::vector<std::pair<const RelationForm*, WeightedPoly>> rebased_ideal(
    const Presentation& pres) {
  std::vector<std::pair<const RelationForm*, WeightedPoly>> out;
  for (const auto& name : pres.ideal) {
    const RelationForm& r = relation(name);
    out.emplace_back(&r, r.expr.rebased(pres.gens));
  }
  return out;
}

}  // namespace

long long ideal_dim_direct(const Presentation& pres, int k) {
  auto ideal = rebased_ideal(pres);
  auto basis = monomials(pres, k);
  std::map<ExpVec, size_t> col;
  for (size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], i);
  RatMatrix rows;
  ExpVec prod(static_cast<size_t>(pres.gens->size()));
  for (const auto& [rel, poly] : ideal) {
    if (k < rel->weight) continue;
    for (const auto& m : monomials(pres, k - rel->weight)) {
      std::vector<Rat> row(basis.size());
      for (const auto& [e, c] : poly.terms()) {
        for (size_t i = 0; i < prod.size(); ++i) prod[i] = e[i] + m[i];
        row[col.at(prod)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  return bareiss_rank(std::move(rows));
}

// ---------------------------------------------------------------------------
// verify_presentation
//
// For each even k the report needs eval_rank, kernel_dim and ideal_dim.
// Small slices go through the direct matrices above.  The larger slices
// (7-generator rings reach 18564 monomials at k=24, with product matrices
// far beyond elimination range) are settled by an exact squeeze:
//
//   * eval_rank: the evaluation matrix has exactly d = dim M_k(N) columns,
//     so reaching rank d on any row subset settles the full rank.  The
//     complement monomials S_k are tried first; they are valuation-echelon
//     for these presentations and give rank d after d rows.
//   * ideal_dim <= C - d: every ideal generator is a verified zero series
//     (Sturm cut at its own weight), so the degree-k ideal slice sits inside
//     the kernel of the rank-d truncated evaluation.
//   * ideal_dim >= C - d: monomial multiples of the relations are eliminated
//     modulo the coordinates of S_k; if the projected rows cover all C - d
//     remaining coordinates, then R_k = I_k + span(S_k) outright, so the
//     slice has dimension at least C - d.
//
// Both bounds meet at C - d, so ideal_dim = C - d exactly; no tolerance and
// no modular arithmetic is involved anywhere.

namespace {

constexpr uint64_t kConeBit = 1ull << 63;

struct SqueezeContext {
  const Presentation& pres;
  std::vector<std::pair<const RelationForm*, WeightedPoly>> ideal;
  std::map<int, std::vector<ExpVec>> cone_by_weight;
  std::map<int, std::map<uint64_t, std::map<uint64_t, Rat>>> base_rules;

  explicit SqueezeContext(const Presentation& p) : pres(p), ideal(rebased_ideal(p)) {}

  const std::vector<ExpVec>& cones(int k) {
    auto it = cone_by_weight.find(k);
    if (it == cone_by_weight.end())
      it = cone_by_weight.emplace(k, complement_monomials(pres, k)).first;
    return it->second;
  }

  bool is_cone(const ExpVec& e) const {
    if (pres.complement.empty()) return true;
    const auto& gens = *pres.gens;
    for (const auto& cone : pres.complement) {
      ExpVec r = e;
      if (!cone.multiplier.empty()) {
        int im = gens.index(cone.multiplier);
        if (r[static_cast<size_t>(im)] == 0) continue;
        r[static_cast<size_t>(im)] -= 1;
      }
      int ix = gens.index(cone.pair[0]);
      int iy = gens.index(cone.pair[1]);
      bool ok = true;
      for (size_t i = 0; i < r.size(); ++i)
        if (r[i] && static_cast<int>(i) != ix && static_cast<int>(i) != iy) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }

  uint64_t key(const ExpVec& e) const {
    uint64_t k = 0;
    for (size_t i = 0; i < e.size(); ++i) k |= static_cast<uint64_t>(e[i]) << (8 * i);
    if (is_cone(e)) k |= kConeBit;
    return k;
  }
};

using SparseRow = std::map<uint64_t, Rat>;

void subtract_multiple(SparseRow& row, const Rat& c, const SparseRow& other) {
  for (const auto& [k, v] : other) {
    auto [it, inserted] = row.try_emplace(k, Rat(0));
    it->second -= c * v;
    if (it->second == 0) row.erase(it);
  }
}

// Reduces every reducible key; pivot rows have their minimal key normalized
// to coefficient 1, and all of a pivot row's other keys exceed its pivot,
// so this terminates.
void reduce_row_impl(SparseRow& row, const std::map<uint64_t, SparseRow>& pivots) {
  while (true) {
    SparseRow::iterator hit = row.end();
    for (auto it = row.begin(); it != row.end(); ++it)
      if (pivots.count(it->first)) {
        hit = it;
        break;
      }
    if (hit == row.end()) return;
    Rat c = hit->second;
    uint64_t k0 = hit->first;
    subtract_multiple(row, c, pivots.at(k0));
  }
}

struct ClaimResult {
  bool ok = false;
  std::string detail;
};

uint64_t strip_cone_bit(uint64_t k) { return k & ~kConeBit; }

ExpVec unpack(uint64_t k, size_t n) {
  ExpVec e(n);
  for (size_t i = 0; i < n; ++i) e[i] = static_cast<int>((k >> (8 * i)) & 0xff);
  return e;
}

// Elimination state, keys ordered non-cone first.  In projected mode the
// cone coordinates are dropped entirely: the claim below only needs
// membership modulo span(S_k), and rows shrink to a handful of entries.
struct Eliminator {
  SqueezeContext& ctx;
  size_t n;
  bool project;
  std::map<uint64_t, SparseRow> pivots;
  bool cone_collision = false;

  Eliminator(SqueezeContext& c, bool proj) : ctx(c), n(c.pres.gens->names.size()), project(proj) {}

  void insert(SparseRow row) {
    reduce_row_impl(row, pivots);
    if (row.empty()) return;
    auto pivot = row.begin();
    if (pivot->first & kConeBit) {
      cone_collision = true;
      return;
    }
    Rat inv = Rat(1) / pivot->second;
    for (auto& [kk, v] : row) v *= inv;
    uint64_t pk = pivot->first;
    pivots.emplace(pk, std::move(row));
  }

  // row for multiplier * poly
  SparseRow product_row(const ExpVec& multiplier, const WeightedPoly& poly) const {
    SparseRow row;
    ExpVec prod(n);
    for (const auto& [e, c] : poly.terms()) {
      for (size_t i = 0; i < n; ++i) prod[i] = e[i] + multiplier[i];
      uint64_t kk = ctx.key(prod);
      if (project && (kk & kConeBit)) continue;
      row.emplace(kk, c);
    }
    return row;
  }

  SparseRow shifted(const ExpVec& multiplier, const SparseRow& rule) const {
    SparseRow row;
    ExpVec e(n);
    for (const auto& [kk, v] : rule) {
      ExpVec base = unpack(strip_cone_bit(kk), n);
      for (size_t i = 0; i < n; ++i) e[i] = base[i] + multiplier[i];
      uint64_t nk = ctx.key(e);
      if (project && (nk & kConeBit)) continue;
      row.emplace(nk, v);
    }
    return row;
  }
};

// Pre-solved rewrite rules at the ideal's generating weights: one pivot row
// per reachable non-complement monomial, built by eliminating the relations
// and their one-step shifts (the constructive content of the ring
// decompositions).
const std::map<int, std::map<uint64_t, SparseRow>>& solved_rules(SqueezeContext& ctx) {
  if (!ctx.base_rules.empty() || ctx.ideal.empty()) return ctx.base_rules;
  const auto& gens = *ctx.pres.gens;
  size_t n = gens.names.size();
  int max_w = 0;
  for (const auto& [rel, poly] : ctx.ideal) max_w = std::max(max_w, rel->weight);
  int min_gen_w = *std::min_element(gens.weights.begin(), gens.weights.end());
  for (int w = 2 * min_gen_w; w <= max_w; w += 2) {
    Eliminator elim(ctx, false);
    for (const auto& [prev_w, rules] : ctx.base_rules) {
      for (size_t i = 0; i < n; ++i) {
        if (gens.weights[i] != w - prev_w) continue;
        ExpVec mult(n, 0);
        mult[i] = 1;
        for (const auto& [pk, rule] : rules) elim.insert(elim.shifted(mult, rule));
      }
    }
    for (const auto& [rel, poly] : ctx.ideal)
      if (rel->weight == w) elim.insert(elim.product_row(ExpVec(n, 0), poly));
    if (elim.pivots.empty()) continue;
    // back-substitute so every rule tail is free of other pivots
    for (auto it = elim.pivots.rbegin(); it != elim.pivots.rend(); ++it) {
      SparseRow& row = it->second;
      while (true) {
        uint64_t found = 0;
        bool has = false;
        for (const auto& [kk, v] : row) {
          if (kk == it->first || (kk & kConeBit)) continue;
          if (elim.pivots.count(kk)) {
            found = kk;
            has = true;
            break;
          }
        }
        if (!has) break;
        Rat c = row.at(found);
        subtract_multiple(row, c, elim.pivots.at(found));
      }
    }
    ctx.base_rules.emplace(w, std::move(elim.pivots));
  }
  return ctx.base_rules;
}

// Verifies R_k = I_k + span(S_k): the projected (mod span S_k) row space of
// the ideal slice must cover every non-complement monomial, i.e. reach rank
// C - d.  Pivots are grown by shifting the pre-solved rules onto uncovered
// monomials; the complete multiplier pool is the last resort.
ClaimResult verify_claim(SqueezeContext& ctx, int k) {
  const auto& gens = *ctx.pres.gens;
  size_t n = gens.names.size();
  const auto& rules = solved_rules(ctx);

  std::vector<ExpVec> noncone;
  for (const auto& e : monomials(ctx.pres, k))
    if (!ctx.is_cone(e)) noncone.push_back(e);

  Eliminator elim(ctx, true);
  auto divides = [&](const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < n; ++i)
      if (a[i] > b[i]) return false;
    return true;
  };

  for (int stage = 0; stage < 2 && elim.pivots.size() < noncone.size(); ++stage) {
    for (int pass = 0; pass < 50; ++pass) {
      size_t before = elim.pivots.size();
      for (const auto& m : noncone) {
        uint64_t mk = ctx.key(m);
        if (elim.pivots.count(mk)) continue;
        for (const auto& [w, rw] : rules) {
          bool used = false;
          for (const auto& [pk, rule] : rw) {
            ExpVec pivot = unpack(strip_cone_bit(pk), n);
            if (!divides(pivot, m)) continue;
            ExpVec mult(n);
            for (size_t i = 0; i < n; ++i) mult[i] = m[i] - pivot[i];
            elim.insert(elim.shifted(mult, rule));
            used = true;
            if (stage == 0 || elim.pivots.count(mk)) break;
          }
          if (used && (stage == 0 || elim.pivots.count(mk))) break;
        }
        if (elim.pivots.size() == noncone.size()) break;
      }
      if (elim.pivots.size() == before || elim.pivots.size() == noncone.size()) break;
    }
  }

  if (elim.pivots.size() < noncone.size()) {
    // complete multiplier pool: spans the whole degree-k ideal slice
    for (const auto& [rel, poly] : ctx.ideal) {
      if (k < rel->weight) continue;
      for (const auto& m : monomials(ctx.pres, k - rel->weight)) {
        elim.insert(elim.product_row(m, poly));
        if (elim.pivots.size() == noncone.size()) break;
      }
      if (elim.pivots.size() == noncone.size()) break;
    }
  }

  ClaimResult res;
  if (elim.pivots.size() < noncone.size()) {
    res.detail = "projected ideal rank " + std::to_string(elim.pivots.size()) + " < " +
                 std::to_string(noncone.size()) + " at weight " + std::to_string(k);
    return res;
  }
  res.ok = true;
  return res;
}

// Exact evaluation rank with early stop at d (the column count): complement
// monomial rows first, the remaining monomials only if they are needed.
struct EvalRankResult {
  long long rank = 0;
  bool cones_sufficed = false;
};

EvalRankResult eval_rank(const Presentation& pres, int k, int d, Evaluator& ev,
                         SqueezeContext& ctx) {
  EvalRankResult out;
  if (d == 0) return out;
  struct EchelonRow {
    int lead;
    std::vector<Rat> v;
  };
  std::vector<EchelonRow> echelon;
  auto process = [&](const ExpVec& e) -> bool {
    QExpansion q = ev.monomial(*pres.gens, e, d);
    std::vector<Rat> r(q.coeffs().begin(), q.coeffs().begin() + d);
    for (const auto& p : echelon) {
      if (r[static_cast<size_t>(p.lead)] == 0) continue;
      Rat f = r[static_cast<size_t>(p.lead)];
      for (int j = p.lead; j < d; ++j) r[static_cast<size_t>(j)] -= f * p.v[static_cast<size_t>(j)];
    }
    int lead = -1;
    for (int j = 0; j < d; ++j)
      if (r[static_cast<size_t>(j)] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    Rat inv = Rat(1) / r[static_cast<size_t>(lead)];
    for (int j = lead; j < d; ++j) r[static_cast<size_t>(j)] *= inv;
    echelon.push_back({lead, std::move(r)});
    ++out.rank;
    return out.rank == d;
  };

  const auto& cones = ctx.cones(k);
  for (const auto& e : cones)
    if (process(e)) {
      out.cones_sufficed = true;
      return out;
    }
  std::set<ExpVec> cone_set(cones.begin(), cones.end());
  for (const auto& e : monomials(pres, k)) {
    if (cone_set.count(e)) continue;
    if (process(e)) return out;
  }
  return out;
}

}  // namespace

PresentationReport verify_presentation(const Presentation& pres, int K, Evaluator& ev) {
  PresentationReport report;
  report.level = pres.level;
  report.pass = true;

  // the ideal generators must be zero series for the kernel bound
  for (const auto& name : pres.ideal) {
    auto out = verify_vanishing(relation(name), 10, ev);
    if (!out.pass) {
      report.pass = false;
      report.rows.push_back(WeightRow{0, 0, 0, 0, 0, 0, false,
                                      "ideal generator " + name + " is not zero: " + out.detail});
      return report;
    }
  }

  SqueezeContext ctx(pres);

  for (int k = 0; k <= K; k += 2) {
    WeightRow row;
    row.weight = k;
    row.space_dim = dim_space({pres.level, k});
    row.monomial_count = monomial_count(pres, k);
    int d = row.space_dim;

    const auto& cones = ctx.cones(k);
    if (static_cast<int>(cones.size()) != d) {
      row.pass = false;
      row.detail = "complement size " + std::to_string(cones.size()) + " != dim " +
                   std::to_string(d);
      report.pass = false;
      report.rows.push_back(std::move(row));
      continue;
    }

    EvalRankResult er = eval_rank(pres, k, d, ev, ctx);
    row.eval_rank = er.rank;
    row.kernel_dim = row.monomial_count - row.eval_rank;

    long long product_rows = 0;
    for (const auto& name : pres.ideal) {
      int w = relation(name).weight;
      if (k >= w) product_rows += monomial_count(pres, k - w);
    }
    bool small = row.monomial_count <= 120 && product_rows <= 260;
    std::string method;

    if (pres.ideal.empty()) {
      row.ideal_dim = 0;
      method = "free";
    } else if (small) {
      row.ideal_dim = ideal_dim_direct(pres, k);
      method = "direct";
    } else if (er.cones_sufficed) {
      ClaimResult claim = verify_claim(ctx, k);
      if (claim.ok) {
        row.ideal_dim = row.monomial_count - d;
        method = "cone-squeeze";
      } else {
        row.pass = false;
        row.detail = claim.detail;
        report.pass = false;
        report.rows.push_back(std::move(row));
        continue;
      }
    } else {
      row.pass = false;
      row.detail = "complement monomials do not reach full evaluation rank";
      report.pass = false;
      report.rows.push_back(std::move(row));
      continue;
    }

    row.pass = (row.eval_rank == d) && (row.kernel_dim == row.ideal_dim);
    if (!row.pass) report.pass = false;
    std::ostringstream os;
    os << method << ": " << row.monomial_count << " monomials, rank " << row.eval_rank
       << ", kernel " << row.kernel_dim << ", ideal " << row.ideal_dim;
    row.detail = os.str();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace mfring
