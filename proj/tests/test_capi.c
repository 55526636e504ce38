/* Exercises the C interface from C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "snc/snc.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void hilbert_pipeline(void) {
  const long long m[4] = {2, 1, 1, 1};
  snc_fan* fan = NULL;
  snc_fan* sub = NULL;
  snc_fan* back = NULL;
  char* report = NULL;
  char* json = NULL;
  size_t cones = 0;
  int ok = -1;
  int smooth = -1;

  EXPECT(snc_fan_hilbert(m, 3, 1, &fan) == SNC_OK);
  EXPECT(snc_fan_cone_count(fan, &cones) == SNC_OK && cones == 3);
  EXPECT(snc_fan_check_snc(fan, &ok, &report) == SNC_OK && ok == 0);
  EXPECT(report != NULL && strstr(report, "\"violations\"") != NULL);
  snc_string_free(report);

  EXPECT(snc_fan_subdivide(fan, &sub) == SNC_OK);
  EXPECT(snc_fan_check_snc(sub, &ok, NULL) == SNC_OK && ok == 1);
  EXPECT(snc_fan_all_smooth(sub, &smooth) == SNC_OK && smooth == 1);
  EXPECT(snc_fan_cone_count(sub, &cones) == SNC_OK && cones == 6);

  EXPECT(snc_fan_to_json(sub, &json) == SNC_OK);
  EXPECT(snc_fan_from_json(json, &back) == SNC_OK);
  {
    char* again = NULL;
    EXPECT(snc_fan_to_json(back, &again) == SNC_OK && strcmp(json, again) == 0);
    snc_string_free(again);
  }
  snc_string_free(json);

  EXPECT(snc_fan_homology(sub, "F", &json) == SNC_OK);
  EXPECT(strstr(json, "\"oriented\": true") != NULL);
  snc_string_free(json);
  EXPECT(snc_fan_homology(sub, "G", &json) == SNC_ERR_INVALID_INPUT);
  EXPECT(strstr(snc_last_error(), "G") != NULL);
  EXPECT(snc_fan_homology(fan, "F", &json) == SNC_ERR_SNC_CONDITION_VIOLATED);

  {
    snc_strata* sc = NULL;
    EXPECT(snc_strata_from_fan(sub, "{\"cusps\": [{\"cusp\": \"F\", \"d\": 2}]}", &sc) == SNC_OK);
    EXPECT(snc_strata_fn_filtration(sc, &json) == SNC_OK);
    EXPECT(strstr(json, "\"invertible\": true") != NULL);
    snc_string_free(json);
    snc_strata_free(sc);
  }

  snc_fan_free(back);
  snc_fan_free(sub);
  snc_fan_free(fan);
}

static void errors(void) {
  snc_fan* fan = NULL;
  const long long singular[4] = {1, 1, 1, 1};
  EXPECT(snc_fan_from_json("{\"cusps\": [", &fan) == SNC_ERR_PARSE);
  EXPECT(fan == NULL);
  EXPECT(strlen(snc_last_error()) > 0);
  EXPECT(snc_fan_from_json(NULL, &fan) == SNC_ERR_NULL_ARGUMENT);
  EXPECT(snc_fan_hilbert(singular, 3, 1, &fan) == SNC_ERR_INVALID_INPUT);
  EXPECT(snc_fan_hilbert(singular, 0, 1, &fan) == SNC_ERR_INVALID_PARAMS);
  EXPECT(strcmp(snc_status_name(SNC_ERR_PARSE), "ParseError") == 0);
  EXPECT(strcmp(snc_status_name(SNC_OK), "OK") == 0);
  snc_fan_free(NULL);
  snc_strata_free(NULL);
}

static void stairs_and_reports(void) {
  size_t count = 0;
  char* text = NULL;
  int consistent = -1;
  EXPECT(snc_stairs_count("sp:2", 3, &count) == SNC_OK && count == 8);
  EXPECT(snc_stairs("sp:2", 3, SNC_FORMAT_SVG, &text) == SNC_OK && strncmp(text, "<svg", 4) == 0);
  snc_string_free(text);
  EXPECT(snc_stairs("sp:0", 3, SNC_FORMAT_JSON, &text) == SNC_ERR_INVALID_PARAMS);
  EXPECT(snc_report("o2n:4",
                    "{\"cusps\": [{\"label\": \"a\", \"corank\": 1, \"dim_S_cat\": 2, \"dim_U\": 1}],"
                    " \"dim_Omega_n_minus_1\": 1, \"n1\": {\"gr\": 1, \"sum_h0k\": 2, \"h_n1\": 1, \"fn_w\": 1}}",
                    &consistent, &text) == SNC_OK);
  EXPECT(consistent == 0);
  snc_string_free(text);
}

static void fixtures(void) {
  size_t i;
  char* text = NULL;
  EXPECT(snc_fixture_count() == 4);
  for (i = 0; i < snc_fixture_count(); ++i) {
    EXPECT(snc_fixture_json(snc_fixture_name(i), 0, &text) == SNC_OK);
    snc_string_free(text);
  }
  EXPECT(snc_fixture_name(99) == NULL);
  EXPECT(snc_fixture_json("nope", 0, &text) == SNC_ERR_INVALID_PARAMS);
  {
    snc_strata* sc = NULL;
    EXPECT(snc_fixture_json("p1xp1", 0, &text) == SNC_OK);
    EXPECT(snc_strata_from_json(text, &sc) == SNC_OK);
    snc_string_free(text);
    EXPECT(snc_strata_spectral(sc, 2, &text) == SNC_OK);
    EXPECT(strstr(text, "\"e2\"") != NULL);
    snc_string_free(text);
    snc_strata_free(sc);
  }
}

int main(void) {
  hilbert_pipeline();
  errors();
  stairs_and_reports();
  fixtures();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  printf("C API checks passed\n");
  return EXIT_SUCCESS;
}
