#include "vcount/brute_force.hpp"

#include <thread>
#include <vector>

#include "vcount/error.hpp"

namespace vcount {

namespace {

struct FlatFactor {
  std::uint32_t var;
  std::uint32_t exp;
};

struct FlatTerm {
  std::uint32_t coef;
  std::vector<FlatFactor> factors;
};

}  // namespace

Int brute_force_count(const PolySystem& ps, const OracleConfig& cfg) {
  if (cfg.max_points == 0) fail(Errc::bad_argument, "evaluation budget must be positive");
  const FiniteField& f = ps.field;
  const std::uint64_t q = f.q();
  const std::uint32_t nvars = ps.nvars;

  std::uint32_t max_exp = 1;
  for (const Polynomial& poly : ps.polys) {
    for (const PolyTerm& term : poly.terms) {
      if (term.exponents.size() != nvars)
        fail(Errc::dimension_mismatch, "term exponent vector does not match the ambient dimension");
      for (std::uint32_t e : term.exponents) max_exp = std::max(max_exp, e);
    }
  }

  Int total = int_pow(Int(static_cast<unsigned long>(q)), nvars);
  if (total > Int(static_cast<unsigned long>(cfg.max_points)))
    fail(Errc::budget_exceeded, "sweep requires " + total.get_str() + " evaluations, budget is " +
                                    std::to_string(cfg.max_points));
  const std::uint64_t total_points = total.get_ui();

  // pow_by_exp[e][x] = x^e with the 0^0 = 1 convention at e = 0.
  std::vector<std::vector<std::uint32_t>> pow_by_exp(max_exp + 1,
                                                     std::vector<std::uint32_t>(q));
  for (std::uint64_t x = 0; x < q; ++x) pow_by_exp[0][x] = 1;
  for (std::uint32_t e = 1; e <= max_exp; ++e)
    for (std::uint64_t x = 0; x < q; ++x)
      pow_by_exp[e][x] = f.pow(Fq{static_cast<std::uint32_t>(x)}, e).v;

  std::vector<std::vector<FlatTerm>> flat(ps.polys.size());
  for (std::size_t pi = 0; pi < ps.polys.size(); ++pi) {
    for (const PolyTerm& term : ps.polys[pi].terms) {
      FlatTerm ft;
      ft.coef = term.coef.v;
      for (std::uint32_t j = 0; j < nvars; ++j)
        if (term.exponents[j] > 0) ft.factors.push_back({j, term.exponents[j]});
      flat[pi].push_back(std::move(ft));
    }
  }

  auto sweep = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::vector<std::uint32_t> x(nvars, 0);
    std::uint64_t rest = begin;
    for (std::uint32_t j = 0; j < nvars; ++j) {  // least-significant first
      x[j] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    std::uint64_t hits = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      bool vanishes = true;
      for (const auto& poly : flat) {
        Fq acc = fq_zero;
        for (const FlatTerm& term : poly) {
          Fq v{term.coef};
          for (const FlatFactor& fac : term.factors) {
            if (v == fq_zero) break;
            v = f.mul(v, Fq{pow_by_exp[fac.exp][x[fac.var]]});
          }
          acc = f.add(acc, v);
        }
        if (!(acc == fq_zero)) {
          vanishes = false;
          break;
        }
      }
      if (vanishes) ++hits;
      for (std::uint32_t j = 0; j < nvars; ++j) {
        if (++x[j] < q) break;
        x[j] = 0;
      }
    }
    return hits;
  };

  const unsigned parts = std::max(1u, cfg.partitions);
  if (parts == 1 || total_points < 2 * parts) return Int(static_cast<unsigned long>(sweep(0, total_points)));

  std::vector<std::uint64_t> partial(parts, 0);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = total_points / parts;
  for (unsigned w = 0; w < parts; ++w) {
    std::uint64_t begin = w * chunk;
    std::uint64_t end = (w + 1 == parts) ? total_points : begin + chunk;
    workers.emplace_back([&partial, &sweep, w, begin, end] { partial[w] = sweep(begin, end); });
  }
  for (auto& t : workers) t.join();
  std::uint64_t sum = 0;
  for (std::uint64_t c : partial) sum += c;
  return Int(static_cast<unsigned long>(sum));
}

}  // namespace vcount
