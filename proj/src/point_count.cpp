#include "vcount/point_count.hpp"

#include <algorithm>

#include "vcount/error.hpp"

namespace vcount {

namespace {

// q^a - (q-1)^a: the number of a-tuples over F_q with at least one zero.
Int some_zero(const Int& q, int a) {
  return int_pow(q, static_cast<unsigned long>(a)) - int_pow(q - 1, static_cast<unsigned long>(a));
}

}  // namespace

std::string_view case_label_text(CaseLabel label) {
  switch (label) {
    case CaseLabel::n1_n3_n2_n4: return "n1<n3<n2<n4";
    case CaseLabel::n2_eq_n3: return "n2=n3";
    case CaseLabel::n1_eq_n3_n2_lt: return "n1=n3, n2<n4";
    case CaseLabel::n2_eq_n4: return "n1<n3, n2=n4";
    case CaseLabel::n1n3_n2n4_eq: return "n1=n3, n2=n4";
    case CaseLabel::n2_gt_n4: return "n1<n3, n2>n4";
    case CaseLabel::n1_eq_n3_n2_gt: return "n1=n3, n2>n4";
    case CaseLabel::n3_gt_n2: return "n3>n2";
  }
  return "?";
}

CaseLabel resolve_case(const StaircaseShape& s) {
  // The eight conditions are mutually exclusive and exhaustive given
  // n1 <= n3, n1 < n2, n3 < n4; first match wins.
  std::optional<CaseLabel> hit;
  auto take = [&](bool cond, CaseLabel label) {
    if (cond && !hit) hit = label;
  };
  take(s.n1 < s.n3 && s.n3 < s.n2 && s.n2 < s.n4, CaseLabel::n1_n3_n2_n4);
  take(s.n2 == s.n3, CaseLabel::n2_eq_n3);
  take(s.n1 == s.n3 && s.n2 < s.n4, CaseLabel::n1_eq_n3_n2_lt);
  take(s.n1 < s.n3 && s.n2 == s.n4, CaseLabel::n2_eq_n4);
  take(s.n1 == s.n3 && s.n2 == s.n4, CaseLabel::n1n3_n2n4_eq);
  take(s.n1 < s.n3 && s.n2 > s.n4, CaseLabel::n2_gt_n4);
  take(s.n1 == s.n3 && s.n2 > s.n4, CaseLabel::n1_eq_n3_n2_gt);
  take(s.n3 > s.n2, CaseLabel::n3_gt_n2);
  if (!hit)
    fail(Errc::invalid_system, "case dispatch is not exhaustive for this shape (internal bug)");
  return *hit;
}

const std::vector<int>& selected_terms(CaseLabel label) {
  static const std::vector<int> sets[8] = {
      {0, 1, 2, 3, 4},     // n1<n3<n2<n4
      {0, 1, 3, 4},        // n2=n3
      {0, 2, 3, 4},        // n1=n3, n2<n4
      {0, 1, 2, 4},        // n1<n3, n2=n4
      {0, 2, 4},           // n1=n3, n2=n4
      {0, 1, 2, 4, 5},     // n1<n3, n2>n4
      {0, 2, 4, 5},        // n1=n3, n2>n4
      {0, 1, 3, 4, 6},     // n3>n2
  };
  return sets[static_cast<int>(label)];
}

LevelCache::LevelCache(const StaircaseSystem& sys, const StaircaseShape& shape)
    : sys_(sys), shape_(shape) {}

const LevelCache::Data& LevelCache::level(int l) {
  if (l < 1 || l > 4) fail(Errc::bad_argument, "level must be 1..4");
  auto& slot = levels_[static_cast<std::size_t>(l - 1)];
  if (!slot) {
    Data d;
    d.instance = build_level_instance(sys_, shape_, l);
    d.h = compute_h(d.instance, sys_.field);
    d.l = compute_l(d.instance, d.h, sys_.field);
    slot = std::move(d);
  }
  return *slot;
}

Int compute_term(int i, const StaircaseSystem& sys, const StaircaseShape& s, LevelCache& levels) {
  const Int q = Int(static_cast<unsigned long>(sys.field.q()));
  const bool b1_zero = sys.b1 == fq_zero;
  const bool b2_zero = sys.b2 == fq_zero;
  const int nmax = std::max(s.n2, s.n4);
  const int min23 = std::min(s.n2, s.n3);
  const int min24 = std::min(s.n2, s.n4);

  switch (i) {
    case 0:
      if (!(b1_zero && b2_zero)) return 0;
      return int_pow(q, static_cast<unsigned long>(nmax - s.n1)) * some_zero(q, s.n1);
    case 1: {
      if (!b2_zero) return 0;
      if (s.n1 < s.n3)
        return int_pow(q, static_cast<unsigned long>(nmax - min23)) * some_zero(q, min23 - s.n1) *
               levels.level(1).l;
      // n1 = n3
      return int_pow(q, static_cast<unsigned long>(nmax - min24)) * some_zero(q, min24 - s.n1) *
             levels.level(1).l;
    }
    case 2:
      if (!(s.n3 < s.n2)) return 0;
      return int_pow(q, static_cast<unsigned long>(nmax - min24)) * some_zero(q, min24 - s.n3) *
             levels.level(3).l;
    case 3:
      if (s.n3 < s.n2 && s.n2 < s.n4) return some_zero(q, s.n4 - s.n2) * levels.level(2).l;
      if (s.n3 >= s.n2) return some_zero(q, s.n4 - s.n3) * levels.level(3).l;
      return 0;
    case 4:
      return s.n4 >= s.n2 ? levels.level(4).l : levels.level(2).l;
    case 5:
      if (!(s.n2 > s.n4)) return 0;
      return some_zero(q, s.n2 - s.n4) * levels.level(4).l;
    case 6:
      if (!(s.n3 > s.n2 && b2_zero)) return 0;
      return int_pow(q, static_cast<unsigned long>(s.n4 - s.n3)) * some_zero(q, s.n3 - s.n2) *
             levels.level(2).l;
    default:
      fail(Errc::bad_argument, "term index must be 0..6");
  }
}

CountBreakdown count_points(const StaircaseSystem& sys) {
  StaircaseShape shape = staircase_shape(sys);  // throws invalid_system with diagnostics
  CountBreakdown bd;
  bd.shape = shape;
  bd.case_label = resolve_case(shape);
  LevelCache cache(sys, shape);

  const auto& selected = selected_terms(bd.case_label);
  bd.total = 0;
  for (int i = 0; i <= 6; ++i) {
    bool applicable = std::find(selected.begin(), selected.end(), i) != selected.end();
    TermValue tv;
    tv.applicable = applicable;
    tv.value = applicable ? compute_term(i, sys, shape, cache) : Int(0);
    if (applicable) bd.total += tv.value;
    bd.terms[static_cast<std::size_t>(i)] = std::move(tv);
  }

  for (int l = 1; l <= 4; ++l) {
    if (!cache.computed(l)) continue;
    const auto& data = cache.level(l);
    LevelSummary ls;
    ls.level = l;
    ls.cutoff = data.instance.cutoff;
    ls.invariant_factors = data.instance.dec.factors;
    ls.rank = data.instance.dec.rank();
    ls.h = data.h;
    ls.l = data.l;
    bd.levels[static_cast<std::size_t>(l - 1)] = std::move(ls);
  }
  return bd;
}

Int sun_special_count(unsigned nvars, const Int& q, const Int& exponent_det, bool rhs_is_zero) {
  if (int_gcd(exponent_det, q - 1) != 1)
    fail(Errc::hypothesis_violated,
         "gcd(det, q-1) must be 1 for the square-exponent closed form");
  Int pw = int_pow(q - 1, nvars);
  Int sign = (nvars % 2 == 0) ? 1 : -1;
  if (rhs_is_zero)
    return int_pow(q, nvars) - pw + exact_div(pw + sign * (q - 1), q);
  return exact_div(pw - sign, q);
}

}  // namespace vcount
