#ifndef KLCENTER_H
#define KLCENTER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KLCENTER_BUILDING)
#define KC_API __attribute__((visibility("default")))
#else
#define KC_API
#endif

/* (k,l)-center clustering of polygonal curves under the discrete and
 * continuous Fréchet distance, curve simplification, and generators for
 * hard instances derived from shortest common supersequence.
 *
 * Every fallible call returns a kc_status. On failure the message is
 * available from kc_last_error() on the same thread until the next call.
 * Objects returned through an out-pointer are owned by the caller and
 * released with the matching *_free function. Borrowed pointers stay
 * valid as long as their owner. */

typedef enum kc_status {
  KC_OK = 0,
  KC_INVALID_ARGUMENT = 1,
  KC_IO = 2,
  KC_PARSE = 3,
  KC_INFEASIBLE = 4,
  KC_INTERNAL = 5
} kc_status;

typedef enum kc_metric { KC_DISCRETE = 0, KC_CONTINUOUS = 1 } kc_metric;

typedef struct kc_curveset kc_curveset;
typedef struct kc_cluster kc_cluster;
typedef struct kc_instance kc_instance;

KC_API const char* kc_version(void);
KC_API const char* kc_last_error(void);
KC_API const char* kc_status_name(kc_status status);

/* Curve sets: ordered curves of one common dimension. */

KC_API kc_status kc_curveset_create(size_t dim, kc_curveset** out);
KC_API void kc_curveset_free(kc_curveset* set);
/* coords holds n_vertices * dim values, vertex-major. id may be NULL. */
KC_API kc_status kc_curveset_add(kc_curveset* set, const char* id, const double* coords, size_t n_vertices);
KC_API size_t kc_curveset_size(const kc_curveset* set);
KC_API size_t kc_curveset_dim(const kc_curveset* set);
KC_API kc_status kc_curveset_vertex_count(const kc_curveset* set, size_t index, size_t* out);
/* Copies the vertices of one curve; capacity is counted in doubles. */
KC_API kc_status kc_curveset_coords(const kc_curveset* set, size_t index, double* out, size_t capacity);
/* NULL when index is out of range. */
KC_API const char* kc_curveset_id(const kc_curveset* set, size_t index);
/* JSON lines, or CSV rows id,x[,y...] when the path ends in .csv. */
KC_API kc_status kc_curveset_load(const char* path, kc_curveset** out);
KC_API kc_status kc_curveset_save(const kc_curveset* set, const char* path);
KC_API kc_status kc_curveset_write_geojson(const kc_curveset* set, const char* path, const char* role);
/* One FeatureCollection holding n_layers curve sets, each tagged with its role. */
KC_API kc_status kc_write_geojson_layers(const kc_curveset* const* sets, const char* const* roles, size_t n_layers,
                                         const char* path);

/* Distances. tol is the continuous bisection tolerance (ignored for
 * KC_DISCRETE); pass 0 for the default. */

KC_API kc_status kc_distance(const kc_curveset* a, size_t i, const kc_curveset* b, size_t j,
                             kc_metric metric, double tol, double* out);
/* Row-major |a| x |b| matrix into out. */
KC_API kc_status kc_distance_matrix(const kc_curveset* a, const kc_curveset* b, kc_metric metric,
                                    double tol, double* out);

/* Simplification of one curve into a new single-curve set. Discrete uses
 * weak simplifications; continuous uses vertex-constrained ones. error may
 * be NULL. */

KC_API kc_status kc_simplify_min_size(const kc_curveset* set, size_t index, kc_metric metric,
                                      double delta, double tol, kc_curveset** out, double* error);
KC_API kc_status kc_simplify_min_error(const kc_curveset* set, size_t index, kc_metric metric,
                                       size_t ell, double tol, kc_curveset** out, double* error);

/* Clustering. */

typedef struct kc_cluster_params {
  size_t k;
  size_t ell;
  kc_metric metric;
  double tol; /* 0 selects the default */
} kc_cluster_params;

KC_API kc_status kc_cluster_gonzalez(const kc_curveset* set, const kc_cluster_params* params, kc_cluster** out);
KC_API kc_status kc_cluster_search(const kc_curveset* set, const kc_cluster_params* params, kc_cluster** out);
/* KC_INFEASIBLE (and *out = NULL) when the decider answers no. */
KC_API kc_status kc_cluster_decide(const kc_curveset* set, const kc_cluster_params* params, double delta,
                                   kc_cluster** out);
KC_API void kc_cluster_free(kc_cluster* cluster);
KC_API double kc_cluster_radius(const kc_cluster* cluster);
KC_API size_t kc_cluster_decider_calls(const kc_cluster* cluster);
/* Borrowed. */
KC_API const kc_curveset* kc_cluster_centers(const kc_cluster* cluster);
/* Copy up to capacity entries and return the total count. */
KC_API size_t kc_cluster_assignment(const kc_cluster* cluster, size_t* out, size_t capacity);
KC_API size_t kc_cluster_history(const kc_cluster* cluster, double* out, size_t capacity);

/* Hard instances. Variants: "1d-discrete", "1d-continuous", "2d-discrete",
 * "2d-continuous", "meb-discrete", "meb-continuous". */

typedef struct kc_instance_params {
  int t;
  int s;
  size_t ell; /* 0 means unbounded */
  double target_radius;
  double gap_radius;
  kc_metric metric;
} kc_instance_params;

/* j and jp are read only by the meb variants. */
KC_API kc_status kc_instance_generate(const char* variant, const char* const* strings, size_t n_strings, int t,
                                      int j, int jp, kc_instance** out);
KC_API kc_status kc_instance_load(const char* dir, kc_instance** out);
KC_API kc_status kc_instance_save(const kc_instance* inst, const char* dir);
KC_API void kc_instance_free(kc_instance* inst);
/* Borrowed. */
KC_API const kc_curveset* kc_instance_curves(const kc_instance* inst);
KC_API const char* kc_instance_variant(const kc_instance* inst);
KC_API kc_status kc_instance_get_params(const kc_instance* inst, kc_instance_params* out);
/* Canonical radius-1 center of a supersequence, as a single-curve set. */
KC_API kc_status kc_instance_center(const kc_instance* inst, const char* superstring, kc_curveset** out);
/* ok is set to 1 iff the center curve is within delta (+ tol) of every
 * instance curve and respects the instance budget. */
KC_API kc_status kc_instance_verify(const kc_instance* inst, const kc_curveset* centers, size_t index, double delta,
                                    double tol, int* ok, double* radius);

/* Reads a supersequence back from a center curve. radius and s are used by
 * the 2d variants only. Writes a NUL-terminated string when it fits and
 * stores the required size (including the terminator) in *needed. */
KC_API kc_status kc_extract_superstring(const char* variant, const kc_curveset* centers, size_t index, double radius,
                                        int s, char* out, size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif
