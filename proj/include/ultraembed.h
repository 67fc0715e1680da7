/* C interface to the ultrametric embedding library.
 *
 * All functions return a ue_status; UE_OK means success. On failure the
 * thread-local message from ue_last_error() describes what went wrong.
 * Objects are opaque; free them with the matching *_free function.
 */
#ifndef ULTRAEMBED_H
#define ULTRAEMBED_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ue_status {
  UE_OK = 0,
  UE_INVALID_ARGUMENT = 1,
  UE_NOT_METRIC = 2,
  UE_NOT_ULTRAMETRIC = 3,
  UE_BOUND_VIOLATION = 4,
  UE_UNDECIDED = 5,
  UE_CAP_EXCEEDED = 6,
  UE_IO_ERROR = 7,
  UE_BAD_JSON = 8,
  UE_INTERNAL = 9
} ue_status;

/* Message from the most recent failing call on this thread. */
const char* ue_last_error(void);

/* ---- distance matrices ---- */

typedef struct ue_metric ue_metric;

/* dense is row-major n*n; validated (symmetry, triangle inequality). */
ue_status ue_metric_create(size_t n, const double* dense, ue_metric** out);
ue_status ue_metric_from_csv(const char* text, ue_metric** out);
ue_status ue_metric_from_json(const char* text, ue_metric** out);
void ue_metric_free(ue_metric* m);

size_t ue_metric_size(const ue_metric* m);
double ue_metric_distance(const ue_metric* m, size_t i, size_t j);
ue_status ue_metric_to_csv(const ue_metric* m, char** out);
ue_status ue_metric_to_json(const ue_metric* m, char** out);

/* 1 if the strong triangle inequality holds within tol, else 0. */
ue_status ue_is_ultrametric(const ue_metric* m, double tol, int* out);

/* Largest ultrametric below m (minimax path distances). */
ue_status ue_subdominant(const ue_metric* m, ue_metric** out);

/* Merge tree of an ultrametric matrix, as Newick text with heights. */
ue_status ue_tree_newick(const ue_metric* m, char** out);

/* Distortion of the map i -> f[i] from src into dst. flen = size of src. */
ue_status ue_distortion(const ue_metric* src, const ue_metric* dst,
                        const size_t* f, size_t flen, double* distortion,
                        double* scale);

/* ---- generators ---- */

/* config is a JSON object {"kind": ..., "n": ..., ...}. */
ue_status ue_generate(const char* config_json, ue_metric** out);

/* ---- high-level pipeline ---- */

/* Runs one command described by a JSON config (the same shape the CLI
 * uses). *report_json receives the full report; *exit_code receives
 * 0 (ok), 1 (input error), 2 (bound violation) or 3 (undecided).
 * Returns UE_OK whenever a report was produced, even for nonzero
 * exit codes. */
ue_status ue_run_json(const char* config_json, char** report_json,
                      char** rendered, int* exit_code);

/* ---- oracles ---- */

/* Largest subset embeddable into an ultrametric with distortion <= bound.
 * Result JSON: {"subset": [...], "objective": ..., "enumerated": ...}. */
ue_status ue_oracle_best_subset(const ue_metric* m, double bound, size_t cap,
                                char** result_json);

/* Optimal ultrametric-embedding distortion of the whole space. */
ue_status ue_oracle_optimal_distortion(const ue_metric* m, double* out);

/* ---- Hilbert realization ---- */

/* Euclidean coordinates reproducing an ultrametric matrix, as CSV
 * (one row per point). */
ue_status ue_hilbert_coordinates(const ue_metric* m, char** csv);

void ue_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ULTRAEMBED_H */
