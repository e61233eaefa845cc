#include "oscomp/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oscomp {

namespace {

constexpr std::size_t kTableCap = static_cast<std::size_t>(1) << 26;

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ValueOutOfBound: return "ValueOutOfBound";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::WrongKind: return "WrongKind";
    case Errc::ZeroNormalizer: return "ZeroNormalizer";
    case Errc::UnsupportedOrderMode: return "UnsupportedOrderMode";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::IncompatibleModels: return "IncompatibleModels";
    case Errc::NoFullElement: return "NoFullElement";
    case Errc::NoFullPair: return "NoFullPair";
    case Errc::OracleFailure: return "OracleFailure";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::UndecidableAtBound: return "UndecidableAtBound";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalLimit: return "InternalLimit";
  }
  return "UnknownError";
}

// ---- Element ----

bool Element::is_zero() const {
  for (const Int& c : coords)
    if (c != 0) return false;
  return true;
}

Int Element::total() const {
  Int t = 0;
  for (const Int& c : coords) t += c;
  return t;
}

const Int& Element::value() const {
  if (coords.size() != 1) fail(Errc::WrongKind, "value() on a non-numerical element");
  return coords[0];
}

bool graded_lex_less(const Element& a, const Element& b) {
  Int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a.coords < b.coords;
}

Element element_add(const Element& a, const Element& b) {
  if (a.coords.size() != b.coords.size())
    fail(Errc::IncompatibleModels, "adding elements of different dimensions");
  Element r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Element element_scale(const Int& n, const Element& a) {
  if (n < 0) fail(Errc::NegativeInput, "negative scalar");
  Element r = a;
  for (Int& c : r.coords) c *= n;
  return r;
}

std::optional<Element> element_sub(const Element& hi, const Element& lo) {
  if (hi.coords.size() != lo.coords.size())
    fail(Errc::IncompatibleModels, "subtracting elements of different dimensions");
  Element r = hi;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i] -= lo.coords[i];
    if (r.coords[i] < 0) return std::nullopt;
  }
  return r;
}

// ---- Numerical table ----

namespace {

// Sieves membership of the gcd-reduced semigroup on [0, limit], growing the
// limit until the top min_gen entries are all members. That run certifies
// every value beyond the limit (add min_gen repeatedly), so the largest gap
// found is the true Frobenius number. No closed-form bound is relied on.
std::shared_ptr<const NumericalTable> build_numerical_table(const std::vector<Int>& gens) {
  auto t = std::make_shared<NumericalTable>();
  t->gcd = gcd_all(gens);
  if (gens.empty()) {
    t->frobenius_reduced = -1;
    t->member_reduced = {1};
    t->limit = 0;
    return t;
  }
  std::vector<Int> reduced;
  reduced.reserve(gens.size());
  for (const Int& g : gens) reduced.push_back(g / t->gcd);
  const Int& amin = reduced.front();
  const Int& amax = reduced.back();
  if (amin == 1) {
    t->frobenius_reduced = -1;
    t->member_reduced = {1, 1};
    t->limit = 1;
    return t;
  }
  Int limit = amin * amax + amax;
  for (;;) {
    std::size_t n = to_index(limit, kTableCap) + 1;
    std::vector<char> dp(n, 0);
    dp[0] = 1;
    std::vector<std::size_t> gs;
    gs.reserve(reduced.size());
    for (const Int& g : reduced) gs.push_back(to_index(g, kTableCap));
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t g : gs) {
        if (g <= v && dp[v - g]) {
          dp[v] = 1;
          break;
        }
      }
    }
    std::size_t run = to_index(amin, kTableCap);
    bool tail_ok = n > run;
    for (std::size_t v = n - run; tail_ok && v < n; ++v) tail_ok = dp[v] != 0;
    if (tail_ok) {
      std::size_t fr = 0;
      bool any_gap = false;
      for (std::size_t v = n; v-- > 0;) {
        if (!dp[v]) {
          fr = v;
          any_gap = true;
          break;
        }
      }
      t->frobenius_reduced = any_gap ? Int(fr) : Int(-1);
      t->member_reduced = std::move(dp);
      t->limit = limit;
      return t;
    }
    limit *= 2;
  }
}

}  // namespace

// ---- SemigroupModel ----

SemigroupModel::SemigroupModel(KindVariant kind, OrderMode mode, Int element_bound)
    : kind_(std::move(kind)), order_mode_(mode), element_bound_(std::move(element_bound)) {
  validate_and_finish();
}

SemigroupModel::SemigroupModel(const SemigroupModel&) = default;
SemigroupModel::SemigroupModel(SemigroupModel&&) noexcept = default;
SemigroupModel& SemigroupModel::operator=(const SemigroupModel&) = default;
SemigroupModel& SemigroupModel::operator=(SemigroupModel&&) noexcept = default;
SemigroupModel::~SemigroupModel() = default;

const NumericalKind& SemigroupModel::numerical() const {
  if (!is_numerical()) fail(Errc::WrongKind, "expected a numerical model");
  return std::get<NumericalKind>(kind_);
}

const AffineKind& SemigroupModel::affine() const {
  if (!is_affine()) fail(Errc::WrongKind, "expected an affine model");
  return std::get<AffineKind>(kind_);
}

const DirectSumKind& SemigroupModel::direct_sum() const {
  if (!is_direct_sum()) fail(Errc::WrongKind, "expected a direct sum model");
  return std::get<DirectSumKind>(kind_);
}

const std::vector<std::size_t>& SemigroupModel::component_offsets() const {
  if (!is_direct_sum()) fail(Errc::WrongKind, "component offsets on a non-sum model");
  return component_offsets_;
}

const NumericalTable& SemigroupModel::table() const {
  if (!table_) fail(Errc::WrongKind, "membership table on a non-numerical model");
  return *table_;
}

void SemigroupModel::validate_and_finish() {
  if (element_bound_ < 0) fail(Errc::NegativeInput, "element_bound must be non-negative");
  if (is_numerical()) {
    auto& k = std::get<NumericalKind>(kind_);
    for (const Int& g : k.generators)
      if (g < 0) fail(Errc::NegativeInput, "negative numerical generator");
    std::sort(k.generators.begin(), k.generators.end());
    k.generators.erase(std::unique(k.generators.begin(), k.generators.end()),
                       k.generators.end());
    // Zero generates nothing; the zero element is a member regardless.
    if (!k.generators.empty() && k.generators.front() == 0)
      k.generators.erase(k.generators.begin());
    flat_dim_ = 1;
    table_ = build_numerical_table(k.generators);
    for (const Int& g : k.generators) flat_generators_.push_back(Element{{g}});
  } else if (is_affine()) {
    auto& k = std::get<AffineKind>(kind_);
    if (k.dimension == 0) fail(Errc::WrongKind, "affine model needs dimension >= 1");
    for (auto& g : k.generators) {
      if (g.size() != k.dimension)
        fail(Errc::IncompatibleModels, "affine generator has wrong dimension");
      for (const Int& c : g)
        if (c < 0) fail(Errc::NegativeInput, "negative affine generator coordinate");
    }
    auto elem_less = [](const std::vector<Int>& a, const std::vector<Int>& b) {
      return graded_lex_less(Element{a}, Element{b});
    };
    std::sort(k.generators.begin(), k.generators.end(), elem_less);
    k.generators.erase(std::unique(k.generators.begin(), k.generators.end()),
                       k.generators.end());
    k.generators.erase(
        std::remove_if(k.generators.begin(), k.generators.end(),
                       [](const std::vector<Int>& g) { return Element{g}.is_zero(); }),
        k.generators.end());
    flat_dim_ = k.dimension;
    all_leaves_numerical_ = false;
    for (const auto& g : k.generators) flat_generators_.push_back(Element{g});
  } else {
    auto& k = std::get<DirectSumKind>(kind_);
    if (k.components.empty()) fail(Errc::WrongKind, "direct sum needs at least one component");
    flat_dim_ = 0;
    for (auto& comp : k.components) {
      if (comp.order_mode() != order_mode_)
        fail(Errc::IncompatibleModels, "component order mode differs from the sum's");
      component_offsets_.push_back(flat_dim_);
      all_leaves_numerical_ = all_leaves_numerical_ && comp.all_leaves_numerical_;
      for (const Element& g : comp.flat_generators_) {
        Element emb{std::vector<Int>(flat_dim_, 0)};
        emb.coords.insert(emb.coords.end(), g.coords.begin(), g.coords.end());
        flat_generators_.push_back(emb);
      }
      flat_dim_ += comp.flat_dim_;
    }
    // Pad earlier components' embedded generators to the final dimension.
    for (Element& g : flat_generators_) g.coords.resize(flat_dim_, 0);
  }
}

void SemigroupModel::collect_leaves(std::size_t base_offset, std::vector<Leaf>* out) const {
  if (!is_direct_sum()) {
    out->push_back({base_offset, flat_dim_, this});
    return;
  }
  std::size_t off = base_offset;
  for (const auto& comp : direct_sum().components) {
    comp.collect_leaves(off, out);
    off += comp.flat_dim();
  }
}

std::vector<SemigroupModel::Leaf> SemigroupModel::leaves() const {
  std::vector<Leaf> out;
  collect_leaves(0, &out);
  return out;
}

bool SemigroupModel::same_structure(const SemigroupModel& o) const {
  if (order_mode_ != o.order_mode_ || kind_.index() != o.kind_.index()) return false;
  if (is_numerical()) return numerical().generators == o.numerical().generators;
  if (is_affine())
    return affine().dimension == o.affine().dimension &&
           affine().generators == o.affine().generators;
  const auto& a = direct_sum().components;
  const auto& b = o.direct_sum().components;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_structure(b[i])) return false;
  return true;
}

SemigroupModel SemigroupModel::with_element_bound(Int bound) const {
  SemigroupModel copy = *this;
  copy.element_bound_ = std::move(bound);
  return copy;
}

Element SemigroupModel::zero() const { return Element{std::vector<Int>(flat_dim_, 0)}; }

bool SemigroupModel::contains(const Element& v) const {
  if (v.coords.size() != flat_dim_)
    fail(Errc::IncompatibleModels, "element dimension does not match the model");
  for (const Int& c : v.coords)
    if (c < 0) return false;
  if (is_numerical()) {
    const Int& val = v.coords[0];
    const NumericalTable& t = *table_;
    if (t.gcd == 0) return val == 0;
    if (val % t.gcd != 0) return false;
    Int r = val / t.gcd;
    if (r > t.limit) return true;
    return t.member_reduced[to_index(r)] != 0;
  }
  if (is_affine()) return contains_affine(v.coords);
  const auto& comps = direct_sum().components;
  std::size_t off = 0;
  for (const auto& comp : comps) {
    Element slice{std::vector<Int>(v.coords.begin() + off,
                                   v.coords.begin() + off + comp.flat_dim())};
    if (!comp.contains(slice)) return false;
    off += comp.flat_dim();
  }
  return true;
}

namespace {

// Exact Diophantine feasibility for affine models: Gaussian elimination over
// rationals identifies pivot generators, free coefficients are enumerated
// within their coordinate-forced ranges, and pivot coefficients are solved
// back exactly. Exponential only in the number of free generators.
struct AffineSystem {
  std::size_t d, m;
  const std::vector<std::vector<Int>>* gens;
  std::vector<std::size_t> active;  // generator indices taking part

  std::vector<std::vector<Rat>> elim;     // reduced rows of [G | v]
  std::vector<std::size_t> pivot_col;     // per elim row, the pivot column
  std::vector<char> is_pivot;             // per active column

  // Builds the elimination for the target v; returns false when inconsistent.
  bool reduce(const std::vector<Int>& v) {
    std::size_t cols = active.size();
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(cols + 1));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = Rat((*gens)[active[j]][i]);
      rows[i][cols] = Rat(v[i]);
    }
    elim.clear();
    pivot_col.assign(0, 0);
    pivot_col.clear();
    is_pivot.assign(cols, 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < d; ++col) {
      std::size_t sel = rank;
      while (sel < d && rows[sel][col] == Rat(0)) ++sel;
      if (sel == d) continue;
      std::swap(rows[rank], rows[sel]);
      Rat p = rows[rank][col];
      for (auto& x : rows[rank]) x /= p;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == rank || rows[i][col] == Rat(0)) continue;
        Rat f = rows[i][col];
        for (std::size_t j = col; j <= cols; ++j) rows[i][j] -= f * rows[rank][j];
      }
      pivot_col.push_back(col);
      is_pivot[col] = 1;
      ++rank;
    }
    for (std::size_t i = rank; i < d; ++i)
      if (rows[i][cols] != Rat(0)) return false;
    elim.assign(rows.begin(), rows.begin() + rank);
    return true;
  }

  // Solves pivot coefficients given fixed free coefficients; integer and
  // non-negative solutions only.
  bool solve_pivots(const std::vector<Int>& free_vals, std::vector<Int>* out) const {
    std::size_t cols = active.size();
    std::vector<Rat> coeff(cols, Rat(0));
    {
      std::size_t fi = 0;
      for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) coeff[j] = Rat(free_vals[fi++]);
    }
    for (std::size_t r = 0; r < elim.size(); ++r) {
      Rat rhs = elim[r][cols];
      for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j] && elim[r][j] != Rat(0)) rhs -= elim[r][j] * coeff[j];
      if (rhs.denominator() != 1 || rhs.numerator() < 0) return false;
      coeff[pivot_col[r]] = rhs;
    }
    if (out) {
      out->assign(cols, 0);
      for (std::size_t j = 0; j < cols; ++j) (*out)[j] = coeff[j].numerator();
    }
    return true;
  }
};

Int free_range_cap(const std::vector<Int>& g, const std::vector<Int>& v) {
  Int cap = -1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    Int c = v[i] / g[i];
    if (cap < 0 || c < cap) cap = c;
  }
  return cap < 0 ? Int(0) : cap;  // zero vector generators are filtered out
}

bool enumerate_free(const AffineSystem& sys, const std::vector<Int>& caps,
                    std::vector<Int>* free_vals, std::size_t depth, std::vector<Int>* sol) {
  if (depth == free_vals->size()) return sys.solve_pivots(*free_vals, sol);
  for (Int c = 0; c <= caps[depth]; ++c) {
    (*free_vals)[depth] = c;
    if (enumerate_free(sys, caps, free_vals, depth + 1, sol)) return true;
  }
  return false;
}

bool affine_solve(const std::vector<std::vector<Int>>& gens, std::size_t d,
                  const std::vector<Int>& v, std::size_t first_gen,
                  std::vector<Int>* out_coeffs) {
  AffineSystem sys;
  sys.d = d;
  sys.m = gens.size();
  sys.gens = &gens;
  for (std::size_t j = first_gen; j < gens.size(); ++j) sys.active.push_back(j);
  if (sys.active.empty()) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
    if (zero && out_coeffs) out_coeffs->clear();
    return zero;
  }
  if (!sys.reduce(v)) return false;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < sys.active.size(); ++j)
    if (!sys.is_pivot[j]) free_cols.push_back(j);
  std::vector<Int> free_vals(free_cols.size(), 0);
  std::vector<Int> caps(free_cols.size());
  for (std::size_t i = 0; i < free_cols.size(); ++i)
    caps[i] = free_range_cap(gens[sys.active[free_cols[i]]], v);
  std::vector<Int> sol;
  if (!enumerate_free(sys, caps, &free_vals, 0, out_coeffs ? &sol : nullptr)) return false;
  if (out_coeffs) *out_coeffs = sol;
  return true;
}

}  // namespace

bool SemigroupModel::contains_affine(const std::vector<Int>& v) const {
  const AffineKind& k = affine();
  return affine_solve(k.generators, k.dimension, v, 0, nullptr);
}

// ---- factorization ----

namespace {

// Lexicographically smallest coefficient vector for a numerical value.
// Suffix membership tables keep each candidate check O(1).
std::optional<std::vector<Int>> numerical_factorization(const std::vector<Int>& gens,
                                                        const Int& value) {
  std::size_t m = gens.size();
  if (value == 0) return std::vector<Int>(m, 0);
  if (m == 0) return std::nullopt;
  std::size_t n = to_index(value, kTableCap) + 1;
  // suffix_member[i][v]: v expressible from generators i..m-1.
  std::vector<std::vector<char>> suffix(m + 1, std::vector<char>(n, 0));
  suffix[m][0] = 1;
  for (std::size_t i = m; i-- > 0;) {
    std::size_t g = to_index(gens[i], kTableCap);
    for (std::size_t v = 0; v < n; ++v) {
      suffix[i][v] = suffix[i + 1][v];
      if (!suffix[i][v] && g <= v && suffix[i][v - g]) suffix[i][v] = 1;
    }
  }
  if (!suffix[0][n - 1]) return std::nullopt;
  std::vector<Int> coeffs(m, 0);
  Int rem = value;
  for (std::size_t i = 0; i < m; ++i) {
    Int c = 0;
    for (;;) {
      Int rest = rem - c * gens[i];
      if (rest < 0) break;
      std::size_t rv = to_index(rest, kTableCap);
      if (suffix[i + 1][rv]) {
        coeffs[i] = c;
        rem = rest;
        break;
      }
      ++c;
    }
  }
  return coeffs;
}

std::optional<std::vector<Int>> affine_factorization(const std::vector<std::vector<Int>>& gens,
                                                     std::size_t d,
                                                     const std::vector<Int>& v) {
  std::size_t m = gens.size();
  std::vector<Int> coeffs(m, 0);
  std::vector<Int> rem = v;
  // Choose each coefficient minimal such that the remainder stays solvable by
  // the later generators; the result is the lex-smallest solution.
  for (std::size_t i = 0; i < m; ++i) {
    Int c = 0;
    for (;;) {
      std::vector<Int> rest = rem;
      bool neg = false;
      for (std::size_t j = 0; j < d; ++j) {
        rest[j] -= c * gens[i][j];
        if (rest[j] < 0) neg = true;
      }
      if (neg) return std::nullopt;  // cannot happen once overall solvability holds
      if (affine_solve(gens, d, rest, i + 1, nullptr)) {
        coeffs[i] = c;
        rem = rest;
        break;
      }
      ++c;
    }
  }
  return coeffs;
}

}  // namespace

std::optional<std::vector<Int>> SemigroupModel::factorization(const Element& v) const {
  if (!contains(v)) return std::nullopt;
  if (is_numerical()) return numerical_factorization(numerical().generators, v.coords[0]);
  if (is_affine()) return affine_factorization(affine().generators, affine().dimension, v.coords);
  std::vector<Int> out;
  std::size_t off = 0;
  for (const auto& comp : direct_sum().components) {
    Element slice{std::vector<Int>(v.coords.begin() + off,
                                   v.coords.begin() + off + comp.flat_dim())};
    auto part = comp.factorization(slice);
    if (!part) return std::nullopt;
    out.insert(out.end(), part->begin(), part->end());
    off += comp.flat_dim();
  }
  return out;
}

// ---- bounded ops ----

void check_value(const SemigroupModel& m, const Element& v, const char* role) {
  if (v.coords.size() != m.flat_dim())
    fail(Errc::IncompatibleModels, std::string(role) + ": element dimension mismatch");
  for (const Int& c : v.coords)
    if (c < 0) fail(Errc::NegativeInput, std::string(role) + ": negative coordinate");
  if (v.total() > m.element_bound())
    fail(Errc::ValueOutOfBound, std::string(role) + ": total " + v.total().str() +
                                    " exceeds element_bound " + m.element_bound().str());
}

MemberResult member(const SemigroupModel& m, const Element& v) {
  check_value(m, v, "value");
  if (!m.contains(v)) return {false, std::nullopt};
  return {true, m.factorization(v)};
}

FrobeniusResult frobenius(const SemigroupModel& m) {
  const NumericalTable& t = m.table();  // throws WrongKind on non-numerical
  if (t.gcd == 0) return {std::nullopt, FrobeniusReason::InfinitelyManyGaps};
  if (t.gcd >= 2) return {std::nullopt, FrobeniusReason::InfinitelyManyGaps};
  if (t.frobenius_reduced < 0) return {std::nullopt, FrobeniusReason::NoGaps};
  return {t.frobenius_reduced, FrobeniusReason::Finite};
}

namespace {

void enumerate_rec(const SemigroupModel& m, const Int& bound, std::vector<Element>* out);

void enumerate_sum_rec(const std::vector<SemigroupModel>& comps, std::size_t idx,
                       const Int& budget, std::vector<Int>* prefix,
                       std::vector<Element>* out) {
  if (idx == comps.size()) {
    out->push_back(Element{*prefix});
    return;
  }
  std::vector<Element> part;
  enumerate_rec(comps[idx], budget, &part);
  for (const Element& e : part) {
    Int rest = budget - e.total();
    std::size_t mark = prefix->size();
    prefix->insert(prefix->end(), e.coords.begin(), e.coords.end());
    enumerate_sum_rec(comps, idx + 1, rest, prefix, out);
    prefix->resize(mark);
  }
}

void enumerate_rec(const SemigroupModel& m, const Int& bound, std::vector<Element>* out) {
  if (m.is_numerical()) {
    for (Int v = 0; v <= bound; ++v) {
      Element e{{v}};
      if (m.contains(e)) out->push_back(std::move(e));
    }
    return;
  }
  if (m.is_affine()) {
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier{std::vector<Int>(m.flat_dim(), 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<std::vector<Int>> next;
      for (const auto& v : frontier) {
        for (const Element& g : m.flat_generators()) {
          std::vector<Int> w = v;
          Int tot = 0;
          for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] += g.coords[i];
            tot += w[i];
          }
          if (tot <= bound && seen.insert(w).second) next.push_back(std::move(w));
        }
      }
      frontier = std::move(next);
    }
    for (const auto& v : seen) out->push_back(Element{v});
    return;
  }
  std::vector<Int> prefix;
  enumerate_sum_rec(m.direct_sum().components, 0, bound, &prefix, out);
}

}  // namespace

std::vector<Element> enumerate_elements(const SemigroupModel& m, const Int& bound) {
  if (bound < 0) fail(Errc::NegativeInput, "enumeration bound must be non-negative");
  if (bound > m.element_bound())
    fail(Errc::ValueOutOfBound, "enumeration bound " + bound.str() +
                                    " exceeds element_bound " + m.element_bound().str());
  std::vector<Element> out;
  enumerate_rec(m, bound, &out);
  std::sort(out.begin(), out.end(), graded_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool leq_raw(const SemigroupModel& m, const Element& x, const Element& y) {
  if (m.order_mode() == OrderMode::Algebraic) {
    auto d = element_sub(y, x);
    return d && m.contains(*d);
  }
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] > y.coords[i]) return false;
  return true;
}

std::optional<OrderCertificate> leq(const SemigroupModel& m, const Element& x,
                                    const Element& y) {
  check_value(m, x, "x");
  check_value(m, y, "y");
  if (!m.contains(x)) fail(Errc::PreconditionViolated, "x is not a member");
  if (!m.contains(y)) fail(Errc::PreconditionViolated, "y is not a member");
  if (m.order_mode() == OrderMode::Algebraic) {
    auto d = element_sub(y, x);
    if (!d || !m.contains(*d)) return std::nullopt;
    return OrderCertificate{x, y, OrderMode::Algebraic, *d};
  }
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] > y.coords[i]) return std::nullopt;
  return OrderCertificate{x, y, OrderMode::Induced, std::nullopt};
}

bool replay_order(const SemigroupModel& m, const OrderCertificate& c) {
  if (c.mode != m.order_mode()) return false;
  if (c.lhs.coords.size() != m.flat_dim() || c.rhs.coords.size() != m.flat_dim()) return false;
  for (const Int& v : c.lhs.coords)
    if (v < 0) return false;
  for (const Int& v : c.rhs.coords)
    if (v < 0) return false;
  if (c.mode == OrderMode::Algebraic) {
    if (!c.witness) return false;
    if (!m.contains(*c.witness)) return false;
    return element_add(c.lhs, *c.witness) == c.rhs;
  }
  if (!m.contains(c.lhs) || !m.contains(c.rhs)) return false;
  for (std::size_t i = 0; i < c.lhs.coords.size(); ++i)
    if (c.lhs.coords[i] > c.rhs.coords[i]) return false;
  return true;
}

bool propto_obstructed(const SemigroupModel& m, const Element& x, const Element& y) {
  (void)m;
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if (y.coords[i] == 0 && x.coords[i] > 0) return true;
  return false;
}

std::optional<ProptoCertificate> propto(const SemigroupModel& m, const Element& x,
                                        const Element& y, const Int& n_max) {
  check_value(m, x, "x");
  check_value(m, y, "y");
  if (n_max < 1) fail(Errc::PreconditionViolated, "n_max must be >= 1");
  if (!m.contains(x)) fail(Errc::PreconditionViolated, "x is not a member");
  if (!m.contains(y)) fail(Errc::PreconditionViolated, "y is not a member");
  if (propto_obstructed(m, x, y)) return std::nullopt;
  Int ytot = y.total();
  for (Int n = 1; n <= n_max; ++n) {
    if (ytot > 0 && n * ytot > m.element_bound()) break;
    Element ny = element_scale(n, y);
    if (leq_raw(m, x, ny)) {
      OrderCertificate oc{x, ny, m.order_mode(), std::nullopt};
      if (m.order_mode() == OrderMode::Algebraic) oc.witness = *element_sub(ny, x);
      return ProptoCertificate{n, oc};
    }
  }
  return std::nullopt;
}

std::optional<Int> propto_raw(const SemigroupModel& m, const Element& x, const Element& y,
                              const Int& n_max) {
  if (propto_obstructed(m, x, y)) return std::nullopt;
  for (Int n = 1; n <= n_max; ++n)
    if (leq_raw(m, x, element_scale(n, y))) return n;
  return std::nullopt;
}

bool replay_propto(const SemigroupModel& m, const Element& x, const Element& y,
                   const ProptoCertificate& c) {
  if (c.n < 1) return false;
  if (c.inner.lhs != x) return false;
  if (c.inner.rhs != element_scale(c.n, y)) return false;
  return replay_order(m, c.inner);
}

Int default_kmax(const SemigroupModel& m) {
  // 4 * (frobenius-style horizon + largest generator total).
  Int horizon = 0, biggest = 0;
  for (const auto& lf : m.leaves()) {
    Int h = 0, b = 0;
    if (lf.model->is_numerical()) {
      const NumericalTable& t = lf.model->table();
      if (t.frobenius_reduced >= 0) h = t.gcd * (t.frobenius_reduced + 1);
      if (!lf.model->numerical().generators.empty())
        b = lf.model->numerical().generators.back();
    } else {
      for (const Element& g : lf.model->flat_generators()) {
        Int tot = g.total();
        if (tot > b) b = tot;
      }
      h = b * b;
    }
    if (h > horizon) horizon = h;
    if (b > biggest) biggest = b;
  }
  Int k = 4 * (horizon + biggest);
  return k < 8 ? Int(8) : k;
}

}  // namespace oscomp
