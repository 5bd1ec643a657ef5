/* C interface to the composite-material groupoid engine.
 *
 * All functions returning compomat_status write a short message into the
 * caller-supplied error buffer on failure. Strings returned through char**
 * are heap-allocated; release them with compomat_string_free.
 */
#ifndef COMPOMAT_H
#define COMPOMAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  COMPOMAT_OK = 0,
  COMPOMAT_E_ENGINE = 1, /* caps exceeded, non-closed accepted sets, ... */
  COMPOMAT_E_INPUT = 2   /* usage, parse, schema and resolution errors */
} compomat_status;

typedef struct compomat_doc compomat_doc;
typedef struct compomat_result compomat_result;
typedef struct compomat_options compomat_options;

const char* compomat_version(void);

compomat_options* compomat_options_new(void);
void compomat_options_free(compomat_options* opt);
void compomat_options_set_threads(compomat_options* opt, int threads);
void compomat_options_set_cap(compomat_options* opt, uint64_t cap);
compomat_status compomat_options_set_tol(compomat_options* opt, const char* tol, char* err,
                                         size_t errlen);

compomat_status compomat_doc_from_file(const char* path, compomat_doc** out, char* err,
                                       size_t errlen);
compomat_status compomat_doc_from_json(const char* json, compomat_doc** out, char* err,
                                       size_t errlen);
/* fixtures: "pair:N", "crystalline:default", "triclinic:default", "random:SEED" */
compomat_status compomat_doc_from_fixture(const char* fixture, compomat_doc** out, char* err,
                                          size_t errlen);
void compomat_doc_free(compomat_doc* doc);
compomat_status compomat_doc_serialize(const compomat_doc* doc, char** out_json, char* err,
                                       size_t errlen);

compomat_status compomat_run_axioms(const compomat_doc* doc, const compomat_options* opt,
                                    compomat_result** out, char* err, size_t errlen);
compomat_status compomat_run_classify(const compomat_doc* doc, const compomat_options* opt,
                                      compomat_result** out, char* err, size_t errlen);
compomat_status compomat_run_core(const compomat_doc* doc, const compomat_options* opt,
                                  compomat_result** out, char* err, size_t errlen);
compomat_status compomat_run_intersect(const compomat_doc* doc, const compomat_options* opt,
                                       compomat_result** out, char* err, size_t errlen);
compomat_status compomat_run_complete(const compomat_doc* doc, const char* partial_json,
                                      const compomat_options* opt, compomat_result** out,
                                      char* err, size_t errlen);
/* exhaustive implant scan for 3..max_points points (max_points in [3,5]) */
compomat_status compomat_run_triclinic_search(int max_points, const compomat_options* opt,
                                              compomat_result** out, char* err, size_t errlen);

compomat_status compomat_result_json(const compomat_result* res, char** out, char* err,
                                     size_t errlen);
compomat_status compomat_result_text(const compomat_result* res, char** out, char* err,
                                     size_t errlen);
void compomat_result_free(compomat_result* res);
void compomat_string_free(char* s);

/* static string owned by the library; do not free */
const char* compomat_classify_schema(void);

#ifdef __cplusplus
}
#endif

#endif /* COMPOMAT_H */
