/* thinsieve: affine linear sieve workbench on thin orbits of Pythagorean
 * triples. C API: opaque handles, status codes, JSON/CSV strings out.
 *
 * All functions returning strings allocate with malloc-compatible storage;
 * release them with ts_string_free. On any non-TS_OK status, ts_last_error()
 * returns a thread-local description of the failure.
 */
#ifndef THINSIEVE_H
#define THINSIEVE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_ERR_VALIDATION = 2, /* bad input / precondition / schema */
  TS_ERR_BUDGET = 3,     /* node budget exceeded */
  TS_ERR_NUMERIC = 4,    /* numeric instability / grid too short */
  TS_ERR_IO = 5          /* file output failure */
} ts_status;

typedef struct ts_group ts_group; /* opaque: group presentation + defaults */

const char* ts_version(void);
const char* ts_last_error(void);
void ts_string_free(char* s);

/* Group construction. Presets: "full-orbit", "schottky-demo".
 * JSON schema: {"preset": "..."} or
 * {"group": {"generator_form": "sl2"|"soq", "generators": [...],
 *            "base_point": [x,y,z], "label": "..."},
 *  "enum": {"slack": 2.0, "max_word_length": 64, "budget_nodes": N}} */
ts_status ts_group_from_preset(const char* name, ts_group** out);
ts_status ts_group_from_json(const char* json_text, ts_group** out);
void ts_group_free(ts_group* g);

/* Enumeration parameters: pass slack <= 0, max_word_length <= 0 or
 * budget_nodes == 0 to use the group's defaults. */

/* CSV of orbit points with Euclidean norm < T (columns x,y,z, sorted). */
ts_status ts_orbit_csv(const ts_group* g, double T, double slack,
                       int max_word_length, unsigned long long budget_nodes,
                       char** out_csv);

/* radii_json: JSON array of increasing radii. Output:
 * {"series":[{"T":..,"N":..}...], "fit":{"delta_hat","c_hat","r_squared"}}
 * ("fit" present only when with_fit != 0 and >= 3 nonzero counts). */
ts_status ts_count_json(const ts_group* g, const char* radii_json,
                        double slack, int max_word_length,
                        unsigned long long budget_nodes, int with_fit,
                        char** out_json);

/* Exact local densities for odd primes in [p_lo, p_hi].
 * polynomial: "FH" | "FA" | "FC". Output:
 * {"polynomial":..., "ramified":{...}, "entries":[
 *   {"p":..,"num":..,"den":..,"provenance":"bfs",
 *    "closed_num":..,"closed_den":..,
 *    "oracle_agrees":bool,"closed_form_agrees":bool}]} */
ts_status ts_local_density_json(const ts_group* g, const char* polynomial,
                                long p_lo, long p_hi, int with_oracle,
                                char** out_json);

/* {"p_max":..,"two_reported":true,"odd_primes":[...]} */
ts_status ts_ramified_json(const ts_group* g, long p_max, char** out_json);

/* {"polynomial":..,"q_max":..,"ok":bool,"failing_q":q|null} */
ts_status ts_primitivity_json(const ts_group* g, const char* polynomial,
                              long q_max, char** out_json);

/* The 21-row R table: aligned text and JSON rows
 * {"F","mode","delta","theta","kappa","mu","mu_printed","zeta_star",
 *  "m_star","m_printed","m_matches","R","R_printed"}. */
ts_status ts_sieve_table_text(char** out_text);
ts_status ts_sieve_table_json(char** out_json);

/* {"zeta_star":..,"m_star":..,"R":..,"near_integer":bool} */
ts_status ts_minimize_m_json(double mu, double kappa, double beta,
                             char** out_json);

/* mode: "any" | "finite" | "infinite". {"mu":..,"tau":..} */
ts_status ts_mu_tau_json(double delta, double theta, const char* mode,
                         char** out_json);

/* {"R_target","theta","kappa","mode","delta"} */
ts_status ts_delta_threshold_json(long R_target, double theta, int kappa,
                                  const char* mode, char** out_json);

/* Almost-prime census over the orbit at each radius. r_list_json: JSON array
 * of R values. Output: {"polynomial":..,"summaries":[{"T","total",
 * "zero_flagged","histogram":{"omega":count},"in_PR":{"R":count}}]} */
ts_status ts_census_json(const ts_group* g, const char* polynomial,
                         const char* radii_json, const char* r_list_json,
                         double slack, int max_word_length,
                         unsigned long long budget_nodes, char** out_json);

/* Figure dataset CSV: x,y,z,omega,category. Categories: FH -> prime /
 * composite; FA, FC -> le4 / eq5 / ge6; zero-valued points -> zero. */
ts_status ts_figure_csv(const ts_group* g, const char* polynomial, double T,
                        double slack, int max_word_length,
                        unsigned long long budget_nodes, char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* THINSIEVE_H */
