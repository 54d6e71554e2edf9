#include <stdio.h>
#include <string.h>

#include "pfaffian_ideals.h"

int main(void) {
    const uint32_t alpha[] = {4, 8, 9, 12};
    PfiSpec *spec = NULL;
    if (pfi_spec_new(alpha, 4, 15, &spec) != PFI_STATUS_OK) {
        fprintf(stderr, "%s\n", pfi_last_error_message());
        return 1;
    }
    char *e = NULL;
    if (pfi_multiplicity(spec, &e) != PFI_STATUS_OK) {
        fprintf(stderr, "%s\n", pfi_last_error_message());
        pfi_spec_free(spec);
        return 1;
    }
    printf("multiplicity %s\n", e);
    int ok = strcmp(e, "50752") == 0;
    pfi_string_free(e);
    pfi_spec_free(spec);

    const uint32_t bad[] = {1, 2, 4, 5};
    if (pfi_spec_new(bad, 4, 6, &spec) != PFI_STATUS_OK) {
        return 1;
    }
    if (pfi_multiplicity(spec, &e) != PFI_STATUS_PRECONDITION) {
        ok = 0;
    }
    pfi_spec_free(spec);
    return ok ? 0 : 1;
}
