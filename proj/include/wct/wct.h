// Copyright 2026 The wct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WCT_WCT_H_
#define WCT_WCT_H_

/*
 * C interface to the wct library.
 *
 * Groups, maps and semidirect products are opaque handles.  Every call
 * returns a wct_status; on failure wct_last_error() describes what went
 * wrong on the calling thread.  Results that are documents come back as
 * NUL-terminated JSON strings, each an object carrying "schema": "wct/1",
 * which the caller releases with wct_string_free().
 *
 * Elements are passed either as words in the presentation generators
 * ("x y^-1 rho", "e") or as JSON objects {"a":[i,j],"f":"label"}.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WCT_API __declspec(dllexport)
#else
#define WCT_API __attribute__((visibility("default")))
#endif

typedef enum wct_status {
  WCT_OK                   = 0,
  WCT_ERR_INVALID_ARGUMENT = 1, /* bad name, word, expression or value */
  WCT_ERR_PARSE            = 2, /* malformed JSON */
  WCT_ERR_NULL_POINTER     = 3,
  WCT_ERR_INTERNAL         = 4
} wct_status;

typedef struct wct_group    wct_group;
typedef struct wct_map      wct_map;
typedef struct wct_sd_group wct_sd_group;

WCT_API const char* wct_version(void);
WCT_API const char* wct_status_string(wct_status status);
WCT_API const char* wct_last_error(void);
WCT_API void        wct_string_free(char* s);

/* Indentation of returned JSON on this thread; negative means compact. */
WCT_API void wct_set_json_indent(int indent);

/* {"groups": [...]} with the 17 names in the standard order. */
WCT_API wct_status wct_group_list(char** out_json);

WCT_API wct_status wct_group_open(const char* name, wct_group** out);
WCT_API void       wct_group_close(wct_group* group);

WCT_API wct_status wct_check_presentation(const wct_group* group, char** out_json);
WCT_API wct_status wct_class_descriptor(const wct_group* group, const char* element,
                                        char** out_json);
/* Distinct classes met by the elements of ball(radius). */
WCT_API wct_status wct_classes_in_ball(const wct_group* group, int64_t radius,
                                       char** out_json);
WCT_API wct_status wct_is_conjugate(const wct_group* group, const char* g, const char* h,
                                    int* out);
WCT_API wct_status wct_involutions(const wct_group* group, char** out_json);
WCT_API wct_status wct_map_catalog(const wct_group* group, char** out_json);

WCT_API wct_status wct_map_parse(const wct_group* group, const char* expr, wct_map** out);
WCT_API wct_status wct_map_from_json(const char* json, wct_map** out);
WCT_API void       wct_map_free(wct_map* map);
WCT_API wct_status wct_map_to_json(const wct_map* map, char** out_json);
WCT_API wct_status wct_map_apply(const wct_map* map, const char* element, char** out_json);
/* *out = m1 * m2, i.e. m1 after m2. */
WCT_API wct_status wct_map_compose(const wct_map* m1, const wct_map* m2, wct_map** out);
WCT_API wct_status wct_map_invert(const wct_map* map, wct_map** out);
WCT_API wct_status wct_map_equal(const wct_map* m1, const wct_map* m2, int* out);

/*
 * WCT check on ball(radius) plus a non-triviality certificate search at
 * radius min(radius, 3).  *out_ok is 1 when no violation was found.
 */
WCT_API wct_status wct_verify_map(const wct_map* map, int64_t radius, int* out_ok,
                                  char** out_json);
WCT_API wct_status wct_map_axioms(const wct_map* map, int64_t radius, char** out_json);

/* *out_ok is 1 when every printed relation holds. */
WCT_API wct_status wct_wgroup_relations(const wct_group* group, int* out_ok,
                                        char** out_json);
WCT_API wct_status wct_normality(const wct_group* group, int* out_ok, char** out_json);

/* theta as JSON rows, e.g. "[[0,-1],[1,-1]]", or a single integer. */
WCT_API wct_status wct_sd_open(const char* theta, int64_t p, wct_sd_group** out);
WCT_API void       wct_sd_close(wct_sd_group* group);
/* check is "phi", "p2-candidate" or "identity". */
WCT_API wct_status wct_sd_check(const wct_sd_group* group, const char* check, int64_t radius,
                                int* out_ok, char** out_json);
/* element as {"v":[...],"k":k} */
WCT_API wct_status wct_sd_class(const wct_sd_group* group, const char* element,
                                char** out_json);
WCT_API wct_status wct_sd_derived_lattice(const wct_sd_group* group, char** out_json);

/* suite is "fast" or "full"; candidates <= 0 selects the suite default. */
WCT_API wct_status wct_acceptance(const char* suite, uint64_t seed, int64_t candidates,
                                  int* out_ok, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* WCT_WCT_H_ */
