/*
 * C interface to the moment-angle complex toolkit.
 *
 * Complexes are opaque handles created by one of the mac_complex_* constructors
 * and released with mac_complex_free. Every fallible call returns a
 * mac_status; on failure mac_last_error() describes the problem (the message is
 * thread-local and valid until the next call on the same thread).
 *
 * Vertices are 1-indexed. Where a vertex set crosses the interface as a
 * uint64_t mask, vertex v is bit v-1.
 *
 * Report functions return a NUL-terminated JSON document through *out_json;
 * release it with mac_string_free.
 */
#ifndef MAC_MAC_H_
#define MAC_MAC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MAC_BUILDING_LIBRARY)
#    define MAC_API __declspec(dllexport)
#  else
#    define MAC_API __declspec(dllimport)
#  endif
#else
#  define MAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mac_status {
  MAC_OK = 0,
  MAC_ERROR_INTERNAL = 1,
  MAC_ERROR_INPUT = 2,          /* malformed input, vertex out of range */
  MAC_ERROR_GHOST_VERTEX = 3,   /* a vertex of {1..n} is not a face */
  MAC_ERROR_RESOURCE = 4,       /* a configured size limit would be exceeded */
  MAC_ERROR_NOT_APPLICABLE = 5  /* operation precondition excludes the input */
} mac_status;

typedef struct mac_complex mac_complex;

typedef struct mac_limits {
  int max_vertices;   /* bound for 2^n subset enumerations */
  uint64_t max_cells; /* bound for the cell oracle */
  unsigned threads;   /* worker cap, 0 = hardware concurrency */
} mac_limits;

MAC_API const char* mac_version(void);
MAC_API const char* mac_status_name(mac_status status);
MAC_API const char* mac_last_error(void);
MAC_API mac_limits mac_default_limits(void);

/* Construction */
MAC_API mac_status mac_complex_from_facets(int n, const uint64_t* facet_masks, size_t count,
                                           mac_complex** out);
MAC_API mac_status mac_complex_from_json(const char* json, mac_complex** out);
/* family: "simplex", "boundary", "cycle", "cross_polytope" or "random". */
MAC_API mac_status mac_complex_generate(const char* family, int size, uint64_t seed,
                                        mac_complex** out);
MAC_API mac_status mac_complex_join(const mac_complex* a, const mac_complex* b, mac_complex** out);
MAC_API mac_status mac_complex_full_subcomplex(const mac_complex* k, uint64_t subset,
                                               mac_complex** out);
MAC_API void mac_complex_free(mac_complex* k);

/* Inspection */
MAC_API int mac_complex_vertex_count(const mac_complex* k);
MAC_API size_t mac_complex_facet_count(const mac_complex* k);
MAC_API uint64_t mac_complex_facet(const mac_complex* k, size_t index);
MAC_API int mac_complex_is_face(const mac_complex* k, uint64_t sigma);

/* Computation. Betti vectors are written to out[0..capacity) and *length
 * receives the full length (trimmed after the last nonzero degree); a
 * capacity smaller than *length truncates the copy. limits may be NULL. */
MAC_API mac_status mac_classify(const mac_complex* k, int* is_elliptic);
MAC_API mac_status mac_hochster_betti(const mac_complex* k, const mac_limits* limits, int64_t* out,
                                      size_t capacity, size_t* length);
MAC_API mac_status mac_oracle_betti(const mac_complex* k, const mac_limits* limits, int64_t* out,
                                    size_t capacity, size_t* length);
MAC_API mac_status mac_is_trivial_ring(const mac_complex* k, const mac_limits* limits, int* trivial);

/* JSON reports, one per CLI command. */
MAC_API mac_status mac_report_complex(const mac_complex* k, char** out_json);
MAC_API mac_status mac_report_classify(const mac_complex* k, char** out_json);
MAC_API mac_status mac_report_nonfaces(const mac_complex* k, char** out_json);
MAC_API mac_status mac_report_betti(const mac_complex* k, const mac_limits* limits, char** out_json);
MAC_API mac_status mac_report_oracle_betti(const mac_complex* k, const mac_limits* limits,
                                           char** out_json);
MAC_API mac_status mac_report_ring(const mac_complex* k, const mac_limits* limits, char** out_json);
MAC_API mac_status mac_report_loop_ranks(const mac_complex* k, const mac_limits* limits,
                                         int truncation, double delta, char** out_json);
MAC_API mac_status mac_report_crosscheck(const mac_complex* k, const mac_limits* limits,
                                         char** out_json);
MAC_API void mac_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MAC_MAC_H_ */
