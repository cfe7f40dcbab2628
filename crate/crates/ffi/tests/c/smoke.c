#include <stdio.h>
#include <string.h>
#include "cmwild.h"

int main(void) {
    CmwildRing *ring = NULL;
    const char *doc = "{\"vars\":[\"x\",\"y\",\"z\"],\"relations\":[\"x^4+y^4+z^4\"]}";
    if (cmwild_ring_from_json(doc, 0, &ring) != CMWILD_STATUS_OK) {
        fprintf(stderr, "ring: %s\n", cmwild_last_error());
        return 1;
    }
    int64_t dim = 0;
    cmwild_ring_krull_dimension(ring, &dim);
    char *report = NULL;
    if (cmwild_check(ring, "x^2,y^2", 0, &report) != CMWILD_STATUS_OK) {
        fprintf(stderr, "check: %s\n", cmwild_last_error());
        return 1;
    }
    int ok = dim == 2 && strstr(report, "\"verdict\":\"CMWild\"") != NULL;
    printf("%s\n", report);
    cmwild_string_free(report);
    cmwild_ring_free(ring);

    CmwildRing *bad = NULL;
    if (cmwild_ring_from_json("{\"vars\":[\"x\"],\"relations\":[\"x+1\"]}", 0, &bad) != CMWILD_STATUS_INVALID_INPUT)
        ok = 0;
    return ok ? 0 : 2;
}
