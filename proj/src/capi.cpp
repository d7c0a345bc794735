#include "thinsieve/thinsieve.h"

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core/census.hpp"
#include "core/congruence.hpp"
#include "core/dhr.hpp"
#include "core/orbit.hpp"
#include "core/presets.hpp"

using nlohmann::json;
using namespace thinsieve;

struct ts_group {
  GroupConfig cfg;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ts_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Validation: return TS_ERR_VALIDATION;
    case ErrorCode::Budget: return TS_ERR_BUDGET;
    case ErrorCode::Numeric: return TS_ERR_NUMERIC;
    case ErrorCode::Io: return TS_ERR_IO;
  }
  return TS_ERR_VALIDATION;
}

template <typename Fn>
ts_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TS_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TS_ERR_VALIDATION;
  }
}

EnumParams merge_params(const GroupConfig& cfg, double T, double slack,
                        int maxlen, unsigned long long budget) {
  EnumParams p = cfg.enum_defaults;
  p.T = T;
  if (slack > 0) p.slack = slack;
  if (maxlen > 0) p.max_word_length = maxlen;
  if (budget > 0) p.budget_nodes = budget;
  return p;
}

std::vector<double> parse_radii(const char* radii_json) {
  json j;
  try {
    j = json::parse(radii_json ? radii_json : "");
  } catch (const std::exception& e) {
    throw ValidationError(std::string("radii JSON parse error: ") + e.what());
  }
  if (!j.is_array() || j.empty())
    throw ValidationError("radii must be a non-empty JSON array");
  std::vector<double> out;
  for (const json& v : j) out.push_back(v.get<double>());
  return out;
}

json fit_to_json(const PowerLawFit& f) {
  return json{{"delta_hat", f.delta_hat},
              {"c_hat", f.c_hat},
              {"r_squared", f.r_squared}};
}

}  // namespace

extern "C" {

const char* ts_version(void) { return "thinsieve 1.0.0"; }

const char* ts_last_error(void) { return g_last_error.c_str(); }

void ts_string_free(char* s) { std::free(s); }

ts_status ts_group_from_preset(const char* name, ts_group** out) {
  return guarded([&] {
    if (!name || !out) throw ValidationError("null argument");
    auto g = new ts_group{preset(name)};
    *out = g;
  });
}

ts_status ts_group_from_json(const char* json_text, ts_group** out) {
  return guarded([&] {
    if (!json_text || !out) throw ValidationError("null argument");
    auto g = new ts_group{config_from_json(json_text)};
    *out = g;
  });
}

void ts_group_free(ts_group* g) { delete g; }

ts_status ts_orbit_csv(const ts_group* g, double T, double slack,
                       int max_word_length, unsigned long long budget_nodes,
                       char** out_csv) {
  return guarded([&] {
    if (!g || !out_csv) throw ValidationError("null argument");
    EnumParams p = merge_params(g->cfg, T, slack, max_word_length, budget_nodes);
    std::vector<Triple> pts = enumerate_orbit(g->cfg.group, p);
    std::ostringstream os;
    os << "x,y,z\n";
    for (const Triple& t : pts)
      os << t.x.get_str() << ',' << t.y.get_str() << ',' << t.z.get_str()
         << '\n';
    *out_csv = dup_string(os.str());
  });
}

ts_status ts_count_json(const ts_group* g, const char* radii_json, double slack,
                        int max_word_length, unsigned long long budget_nodes,
                        int with_fit, char** out_json) {
  return guarded([&] {
    if (!g || !out_json) throw ValidationError("null argument");
    std::vector<double> radii = parse_radii(radii_json);
    EnumParams p = merge_params(g->cfg, radii.back(), slack, max_word_length,
                                budget_nodes);
    CountSeries s = count_ball(g->cfg.group, radii, p.slack,
                               p.max_word_length, p.budget_nodes);
    json out;
    out["series"] = json::array();
    for (auto& [T, N] : s.entries)
      out["series"].push_back(json{{"T", T}, {"N", N}});
    if (with_fit) {
      std::size_t nonzero = 0;
      for (auto& [T, N] : s.entries) nonzero += N >= 1;
      if (nonzero >= 3) out["fit"] = fit_to_json(fit_exponent(s));
    }
    *out_json = dup_string(out.dump(2));
  });
}

ts_status ts_local_density_json(const ts_group* g, const char* polynomial,
                                long p_lo, long p_hi, int with_oracle,
                                char** out_json) {
  return guarded([&] {
    if (!g || !polynomial || !out_json) throw ValidationError("null argument");
    Poly f = poly_from_string(polynomial);
    std::vector<DensityRow> rows =
        density_table(g->cfg.group, f, p_lo, p_hi, with_oracle != 0);
    RamificationReport ram = detect_ramified_primes(g->cfg.group, p_hi);
    json out;
    out["polynomial"] = poly_name(f);
    out["ramified"] = {{"p_max", ram.p_max},
                       {"two_reported", ram.two_reported},
                       {"odd_primes", ram.odd_primes}};
    out["entries"] = json::array();
    for (const DensityRow& r : rows) {
      out["entries"].push_back(
          json{{"p", r.p},
               {"num", r.g_bfs.get_num().get_si()},
               {"den", r.g_bfs.get_den().get_si()},
               {"provenance", "bfs"},
               {"closed_num", r.g_closed.get_num().get_si()},
               {"closed_den", r.g_closed.get_den().get_si()},
               {"oracle_agrees", r.oracle_agrees},
               {"closed_form_agrees", r.closed_form_agrees}});
    }
    *out_json = dup_string(out.dump(2));
  });
}

ts_status ts_ramified_json(const ts_group* g, long p_max, char** out_json) {
  return guarded([&] {
    if (!g || !out_json) throw ValidationError("null argument");
    RamificationReport r = detect_ramified_primes(g->cfg.group, p_max);
    json out{{"p_max", r.p_max},
             {"two_reported", r.two_reported},
             {"odd_primes", r.odd_primes}};
    *out_json = dup_string(out.dump(2));
  });
}

ts_status ts_primitivity_json(const ts_group* g, const char* polynomial,
                              long q_max, char** out_json) {
  return guarded([&] {
    if (!g || !polynomial || !out_json) throw ValidationError("null argument");
    Poly f = poly_from_string(polynomial);
    PrimitivityResult r = check_strong_primitivity(g->cfg.group, f, q_max);
    json out{{"polynomial", poly_name(f)}, {"q_max", q_max}, {"ok", r.ok}};
    if (r.ok)
      out["failing_q"] = nullptr;
    else
      out["failing_q"] = r.failing_q;
    *out_json = dup_string(out.dump(2));
  });
}

static json table_row_json(const TableRow& t) {
  return json{{"F", t.F},
              {"mode", t.mode},
              {"delta", t.delta},
              {"theta", t.theta},
              {"kappa", t.kappa},
              {"mu", t.mu},
              {"mu_printed", t.mu_printed},
              {"zeta_star", t.zeta_star},
              {"m_star", t.m_star},
              {"m_printed", t.m_printed},
              {"m_matches", matches_printed_m(t.m_star, t.m_printed)},
              {"R", t.R},
              {"R_printed", t.R_printed}};
}

ts_status ts_sieve_table_text(char** out_text) {
  return guarded([&] {
    if (!out_text) throw ValidationError("null argument");
    std::ostringstream os;
    os << std::left << std::setw(4) << "F" << std::setw(10) << "mode"
       << std::setw(10) << "delta" << std::setw(9) << "theta" << std::setw(10)
       << "mu" << std::setw(12) << "zeta*" << std::setw(12) << "m*"
       << std::setw(4) << "R" << '\n';
    os << std::string(71, '-') << '\n';
    for (const TableRow& t : r_table()) {
      os << std::left << std::setw(4) << t.F << std::setw(10) << t.mode
         << std::setw(10) << t.delta << std::setw(9) << std::setprecision(6)
         << t.theta << std::setw(10) << std::setprecision(6) << t.mu
         << std::setw(12) << std::setprecision(4) << t.zeta_star
         << std::setw(12) << std::setprecision(6) << t.m_star << std::setw(4)
         << t.R << '\n';
    }
    *out_text = dup_string(os.str());
  });
}

ts_status ts_sieve_table_json(char** out_json) {
  return guarded([&] {
    if (!out_json) throw ValidationError("null argument");
    json rows = json::array();
    for (const TableRow& t : r_table()) rows.push_back(table_row_json(t));
    *out_json = dup_string(json{{"rows", rows}}.dump(2));
  });
}

ts_status ts_minimize_m_json(double mu, double kappa, double beta,
                             char** out_json) {
  return guarded([&] {
    if (!out_json) throw ValidationError("null argument");
    RBound b = minimize_m(mu, kappa, beta);
    json out{{"zeta_star", b.zeta_star},
             {"m_star", b.m_star},
             {"R", b.R},
             {"near_integer", b.near_integer}};
    *out_json = dup_string(out.dump(2));
  });
}

ts_status ts_mu_tau_json(double delta, double theta, const char* mode,
                         char** out_json) {
  return guarded([&] {
    if (!mode || !out_json) throw ValidationError("null argument");
    MuTau mt = compute_mu_tau(delta, theta, mode_from_string(mode));
    *out_json = dup_string(json{{"mu", mt.mu}, {"tau", mt.tau}}.dump(2));
  });
}

ts_status ts_delta_threshold_json(long R_target, double theta, int kappa,
                                  const char* mode, char** out_json) {
  return guarded([&] {
    if (!mode || !out_json) throw ValidationError("null argument");
    double d = delta_threshold(R_target, theta, kappa, mode_from_string(mode));
    json out{{"R_target", R_target},
             {"theta", theta},
             {"kappa", kappa},
             {"mode", mode},
             {"delta", d}};
    *out_json = dup_string(out.dump(2));
  });
}

ts_status ts_census_json(const ts_group* g, const char* polynomial,
                         const char* radii_json, const char* r_list_json,
                         double slack, int max_word_length,
                         unsigned long long budget_nodes, char** out_json) {
  return guarded([&] {
    if (!g || !polynomial || !out_json) throw ValidationError("null argument");
    Poly f = poly_from_string(polynomial);
    std::vector<double> radii = parse_radii(radii_json);
    std::vector<long> r_list;
    {
      json j = json::parse(r_list_json ? r_list_json : "[]");
      for (const json& v : j) r_list.push_back(v.get<long>());
    }
    EnumParams p = merge_params(g->cfg, radii.back(), slack, max_word_length,
                                budget_nodes);
    std::vector<Triple> pts = enumerate_orbit(g->cfg.group, p);
    json out;
    out["polynomial"] = poly_name(f);
    out["summaries"] = json::array();
    for (double T : radii) {
      std::vector<Triple> sub;
      for (const Triple& t : pts)
        if (norm_lt(t, T)) sub.push_back(t);
      auto [records, summary] = census(sub, f, r_list, T);
      json hist = json::object();
      for (auto& [om, cnt] : summary.omega_histogram)
        hist[std::to_string(om)] = cnt;
      json pr = json::object();
      for (auto& [R, cnt] : summary.in_PR) pr[std::to_string(R)] = cnt;
      out["summaries"].push_back(json{{"T", T},
                                      {"total", summary.total_points},
                                      {"zero_flagged", summary.zero_flagged},
                                      {"histogram", hist},
                                      {"in_PR", pr}});
    }
    *out_json = dup_string(out.dump(2));
  });
}

ts_status ts_figure_csv(const ts_group* g, const char* polynomial, double T,
                        double slack, int max_word_length,
                        unsigned long long budget_nodes, char** out_csv) {
  return guarded([&] {
    if (!g || !polynomial || !out_csv) throw ValidationError("null argument");
    Poly f = poly_from_string(polynomial);
    EnumParams p = merge_params(g->cfg, T, slack, max_word_length, budget_nodes);
    std::vector<Triple> pts = enumerate_orbit(g->cfg.group, p);
    auto [records, summary] = census(pts, f, {}, T);
    *out_csv = dup_string(figure_csv(records));
  });
}

}  // extern "C"
