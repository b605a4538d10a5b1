#include <stdio.h>

#include "lemniscate.h"

int main(void) {
    LemnContext *ctx = NULL;
    if (lemn_context_new(30, &ctx) != LEMN_STATUS_OK) {
        fprintf(stderr, "context: %s\n", lemn_last_error());
        return 1;
    }
    char *omega = NULL;
    lemn_omega(ctx, &omega);
    printf("omega = %s\n", omega);
    lemn_string_free(omega);

    LemnRun *run = NULL;
    if (lemn_ngon(ctx, 17, 0, &run) != LEMN_STATUS_OK) {
        fprintf(stderr, "17-gon: %s\n", lemn_last_error());
        lemn_context_free(ctx);
        return 1;
    }
    for (size_t k = 0; k < lemn_run_vertex_count(run); k++) {
        double x, y;
        lemn_run_vertex(run, k, &x, &y);
        printf("V%zu = (%.12f, %.12f)\n", k, x, y);
    }
    int passes = 0;
    double worst = 0.0;
    lemn_run_certificate(run, &passes, &worst);
    printf("certificate %s, max error %.3e\n", passes ? "pass" : "FAIL", worst);
    lemn_run_free(run);

    run = NULL;
    if (lemn_ngon(ctx, 9, 0, &run) == LEMN_STATUS_NOT_CONSTRUCTIBLE) {
        printf("9: %s\n", lemn_last_error());
    }
    lemn_run_free(run);
    lemn_context_free(ctx);
    return passes ? 0 : 1;
}
