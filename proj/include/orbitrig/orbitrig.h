#ifndef ORBITRIG_H
#define ORBITRIG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ORBITRIG_API __declspec(dllexport)
#else
#define ORBITRIG_API __attribute__((visibility("default")))
#endif

typedef enum orbitrig_status {
  ORBITRIG_OK = 0,
  ORBITRIG_SCHEMA = 1,      /* malformed document or parameters */
  ORBITRIG_VALIDATION = 2,  /* well-formed but not a symmetric framework */
  ORBITRIG_INTERNAL = 3,
  ORBITRIG_UNSUPPORTED = 4,
  ORBITRIG_NOT_FOUND = 5,   /* unknown catalog name */
  ORBITRIG_ARGUMENT = 6     /* null pointer or out-of-range argument */
} orbitrig_status;

/* Opaque validated framework, optionally carrying a tensegrity assignment. */
typedef struct orbitrig_framework orbitrig_framework;

typedef struct orbitrig_analyze_options {
  double tolerance;  /* <= 0 keeps the document tolerance */
  uint64_t seed;
  int generic;       /* nonzero: resample symmetry-generically with seed */
  int tensegrity;    /* nonzero: run the proper-stress search */
} orbitrig_analyze_options;

typedef struct orbitrig_counts {
  int64_t r;
  int64_t c;
  int64_t m;
  int spanning;
} orbitrig_counts;

/* Strings returned through char** are owned by the caller; release with orbitrig_string_free. */

ORBITRIG_API const char* orbitrig_version(void);
ORBITRIG_API void orbitrig_analyze_options_init(orbitrig_analyze_options* options);

ORBITRIG_API orbitrig_status orbitrig_parse(const char* json, orbitrig_framework** out);
ORBITRIG_API orbitrig_status orbitrig_example(const char* name, uint64_t seed, orbitrig_framework** out);
ORBITRIG_API void orbitrig_free(orbitrig_framework* fw);

ORBITRIG_API orbitrig_status orbitrig_to_json(const orbitrig_framework* fw, char** out);
ORBITRIG_API orbitrig_status orbitrig_cone(const orbitrig_framework* fw, double height,
                                           orbitrig_framework** out);
ORBITRIG_API orbitrig_status orbitrig_counts_of(const orbitrig_framework* fw, orbitrig_counts* out);
ORBITRIG_API orbitrig_status orbitrig_analyze(const orbitrig_framework* fw,
                                              const orbitrig_analyze_options* options, char** out);
/* with_flex nonzero draws velocity arrows for a fully symmetric flex when one exists. */
ORBITRIG_API orbitrig_status orbitrig_draw_svg(const orbitrig_framework* fw, int with_flex, char** out);
/* JSON array of {"name", "summary", "parameters", "defaults"}. */
ORBITRIG_API orbitrig_status orbitrig_catalog_list(char** out);

ORBITRIG_API void orbitrig_string_free(char* s);

/* Per-thread details of the last failing call on this thread. */
ORBITRIG_API const char* orbitrig_last_error(void);
/* JSON object {"status", "kind", "message", "violations": [...]}. */
ORBITRIG_API const char* orbitrig_last_error_detail(void);

#ifdef __cplusplus
}
#endif

#endif
