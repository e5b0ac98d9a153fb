#include <math.h>
#include <stdio.h>
#include "chaincorr.h"

int main(void) {
    CcChain *chain = NULL;
    if (cc_chain_new(3, 1.0, 0.0, &chain) != CC_STATUS_OK) return 1;
    double re = 0.0, im = 0.0;
    if (cc_amplitude(chain, 3, 2.221441469079183, &re, &im) != CC_STATUS_OK) return 2;
    if (fabs(hypot(re, im) - 1.0) > 1e-9) return 3;
    if (cc_amplitude(chain, 4, 1.0, &re, &im) != CC_STATUS_DOMAIN) return 4;
    if (cc_last_error_message()[0] == '\0') return 5;

    CcXState *werner = NULL, *evolved = NULL;
    if (cc_xstate_family("werner:1", &werner) != CC_STATUS_OK) return 6;
    if (cc_evolve_pair(werner, sqrt(0.5), 0.0, &evolved) != CC_STATUS_OK) return 7;
    CcReport report;
    if (cc_report(evolved, &report) != CC_STATUS_OK) return 8;
    if (fabs(report.discord_two_way - report.eof) > 1e-4) return 9;

    printf("chaincorr %s: D = %.6f, E = %.6f\n", cc_version(), report.discord_two_way, report.eof);
    cc_xstate_free(evolved);
    cc_xstate_free(werner);
    cc_chain_free(chain);
    return 0;
}
