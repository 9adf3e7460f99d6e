#include <stdio.h>
#include <string.h>

#include "spun.h"

#define CHECK(cond)                                                     \
    do {                                                                \
        if (!(cond)) {                                                  \
            const char *msg = spun_last_error_message();                \
            fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,      \
                    msg ? msg : "no message");                          \
            return 1;                                                   \
        }                                                               \
    } while (0)

int main(void) {
    SpunMultivector *x = NULL, *n = NULL;
    char *text = NULL;

    CHECK(spun_multivector_parse(2, "e1 + e1e2", &x) == SPUN_STATUS_OK);
    CHECK(spun_multivector_norm(x, &n) == SPUN_STATUS_OK);
    CHECK(spun_multivector_to_string(n, &text) == SPUN_STATUS_OK);
    CHECK(strcmp(text, "2") == 0);
    spun_string_free(text);
    spun_multivector_free(x);
    spun_multivector_free(n);

    CHECK(spun_multivector_parse(2, "e7", &x) == SPUN_STATUS_PARSE_ERROR);
    CHECK(spun_last_error_message() != NULL);

    SpunPointConfig *cfg = NULL;
    SpunReport *report = NULL;
    bool pass = false;
    uint64_t pairs = 0;
    CHECK(spun_point_config_lattice(2, 2, &cfg) == SPUN_STATUS_OK);
    CHECK(spun_run_reduction(cfg, 1, 1, &report) == SPUN_STATUS_OK);
    CHECK(spun_report_all_pass(report, &pass) == SPUN_STATUS_OK && pass);
    CHECK(spun_report_pair_count(report, &pairs) == SPUN_STATUS_OK);
    printf("unit square: %llu intersecting ordered pairs\n", (unsigned long long)pairs);
    spun_report_free(report);
    spun_point_config_free(cfg);
    return 0;
}
