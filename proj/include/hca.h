/* C interface to the exact cellular-automaton toolkit.
 *
 * Conventions:
 *   - Every function returns a status int: 0 ok, 1 invalid input,
 *     2 resource cap exceeded, 3 internal invariant violation.
 *   - On failure hca_last_error() returns a thread-local message that
 *     stays valid until the next failing call on the same thread.
 *   - Output payloads are NUL-terminated UTF-8 buffers owned by the
 *     caller; release them with hca_buf_free. Payload formats are
 *     newline-delimited JSON (CSV for the plot table).
 *   - bitcap limits the bit length of any integer state component during
 *     evolution; 0 selects the built-in default.
 */
#ifndef HCA_H
#define HCA_H

#ifdef __cplusplus
extern "C" {
#endif

#define HCA_OK 0
#define HCA_E_VALIDATION 1
#define HCA_E_RESOURCE 2
#define HCA_E_INTERNAL 3

typedef struct hca_model hca_model;

const char* hca_last_error(void);
void hca_buf_free(char* buf);

/* Parse a model JSON document into an opaque handle. */
int hca_model_load_json(const char* json_text, hca_model** out);
void hca_model_free(hca_model* m);

/* Serialize the model back to JSON (round-trip check support). */
int hca_model_dump_json(const hca_model* m, char** out);

int hca_cmd_evolve(const hca_model* m, long long steps, unsigned long long bitcap, char** out);
int hca_cmd_plot_csv(const hca_model* m, long long steps, unsigned long long bitcap, char** out);
int hca_cmd_conserve(const hca_model* m, long long steps, const char* g_spec,
                     unsigned long long bitcap, char** out);
int hca_cmd_bracket(const char* lhs_json, const char* rhs_json, const char* deltas_csv,
                    char** out);
int hca_cmd_action_check(const hca_model* m, long long steps, const char* deltas_csv,
                         unsigned long long bitcap, char** out);
int hca_cmd_reconstruct(const hca_model* m, long long steps, const char* times_csv,
                        long long window, int periodic, unsigned long long bitcap, char** out);
int hca_cmd_dispersion_model(const hca_model* m, char** out);
int hca_cmd_dispersion_eps(const char* eps_csv, double scale_l, char** out);
/* mode: "exact" or "numeric". */
int hca_cmd_scan(int dim, int entry_bound, int dedup, const char* mode, int jobs, int hermitian,
                 char** out);
int hca_cmd_period(const hca_model* m, long long max_steps, unsigned long long bitcap,
                   char** out);

#ifdef __cplusplus
}
#endif

#endif /* HCA_H */
