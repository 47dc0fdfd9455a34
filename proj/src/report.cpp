#include "vcount/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace vcount {

namespace {

std::string term_name(int i) { return "N" + std::to_string(i); }

}  // namespace

std::string render_text(const CountReport& r) {
  std::ostringstream out;
  out << "field: F_" << r.q << " (p=" << r.p << ", n=" << r.degree << ")\n";
  out << "method: " << r.method << "\n";
  out << "input:\n";
  std::istringstream echo(r.input_echo);
  for (std::string line; std::getline(echo, line);) out << "  " << line << "\n";

  if (r.formula) {
    const CountBreakdown& bd = *r.formula;
    const StaircaseShape& s = bd.shape;
    out << "shape: r1=" << s.r1 << " r2=" << s.r2 << " r3=" << s.r3 << " r4=" << s.r4
        << " n1=" << s.n1 << " n2=" << s.n2 << " n3=" << s.n3 << " n4=" << s.n4 << "\n";
    out << "case: " << case_label_text(bd.case_label) << "\n";
    out << "levels (cutoff | invariant factors | rank | H | L):\n";
    for (int l = 1; l <= 4; ++l) {
      const auto& ls = bd.levels[static_cast<std::size_t>(l - 1)];
      out << "  level " << l << ": ";
      if (!ls) {
        out << "not needed\n";
        continue;
      }
      out << ls->cutoff << " | ";
      if (ls->invariant_factors.empty()) out << "-";
      for (std::size_t i = 0; i < ls->invariant_factors.size(); ++i)
        out << (i ? " " : "") << ls->invariant_factors[i].get_str();
      out << " | " << ls->rank << " | " << ls->h.get_str() << " | " << ls->l.get_str() << "\n";
    }
    out << "terms:\n";
    for (int i = 0; i <= 6; ++i) {
      const TermValue& tv = bd.terms[static_cast<std::size_t>(i)];
      out << "  " << term_name(i) << ": ";
      if (tv.applicable)
        out << tv.value.get_str() << "\n";
      else
        out << "not applicable\n";
    }
    out << "formula: N = " << bd.total.get_str() << " (" << r.formula_millis << " ms)\n";
  }
  if (r.oracle) {
    out << "oracle: N = " << r.oracle->value.get_str() << " over " << r.oracle->points
        << " points (" << r.oracle->millis << " ms)\n";
  }
  if (r.formula && r.oracle)
    out << "agreement: " << (r.agreement ? "yes" : "NO - METHODS DISAGREE") << "\n";
  out << "N = " << r.n_value.get_str() << "\n";
  return out.str();
}

nlohmann::json render_json(const CountReport& r) {
  nlohmann::json j;
  j["format"] = 1;
  j["field"] = {{"p", r.p}, {"n", r.degree}, {"q", r.q}};
  j["method"] = r.method;
  j["input"] = r.input_echo;
  if (r.formula) {
    const CountBreakdown& bd = *r.formula;
    const StaircaseShape& s = bd.shape;
    j["shape"] = {{"r1", s.r1}, {"r2", s.r2}, {"r3", s.r3}, {"r4", s.r4},
                  {"n1", s.n1}, {"n2", s.n2}, {"n3", s.n3}, {"n4", s.n4}};
    j["case"] = std::string(case_label_text(bd.case_label));
    nlohmann::json levels = nlohmann::json::array();
    for (int l = 1; l <= 4; ++l) {
      const auto& ls = bd.levels[static_cast<std::size_t>(l - 1)];
      nlohmann::json lj;
      lj["level"] = l;
      lj["computed"] = ls.has_value();
      if (ls) {
        lj["cutoff"] = ls->cutoff;
        nlohmann::json facs = nlohmann::json::array();
        for (const Int& d : ls->invariant_factors) facs.push_back(d.get_str());
        lj["invariant_factors"] = facs;
        lj["rank"] = static_cast<std::int64_t>(ls->rank);
        lj["H"] = ls->h.get_str();
        lj["L"] = ls->l.get_str();
      }
      levels.push_back(lj);
    }
    j["levels"] = levels;
    nlohmann::json terms = nlohmann::json::array();
    for (int i = 0; i <= 6; ++i) {
      const TermValue& tv = bd.terms[static_cast<std::size_t>(i)];
      nlohmann::json tj;
      tj["name"] = term_name(i);
      tj["applicable"] = tv.applicable;
      if (tv.applicable) tj["value"] = tv.value.get_str();
      terms.push_back(tj);
    }
    j["terms"] = terms;
    j["formula"] = {{"N", bd.total.get_str()}, {"millis", r.formula_millis}};
  }
  if (r.oracle) {
    j["oracle"] = {{"N", r.oracle->value.get_str()},
                   {"points", r.oracle->points},
                   {"millis", r.oracle->millis}};
  }
  if (r.formula && r.oracle) j["agreement"] = r.agreement;
  j["N"] = r.n_value.get_str();
  return j;
}

}  // namespace vcount
