#include <stdio.h>
#include <string.h>
#include "subdepth.h"

int main(void) {
    int64_t data[] = {1, 0, 1, 0, 1, 1};
    SdMatrix *m = NULL;
    SdDepths d;
    if (sd_matrix_new(data, 2, 3, &m) != SD_STATUS_OK) return 1;
    if (sd_matrix_depths(m, &d) != SD_STATUS_OK) return 2;
    sd_matrix_free(m);
    if (d.d_odd != 3 || d.d_ev != 4 || d.d_min != 3 || d.d_h != 5) return 3;

    SdReport *r = NULL;
    if (sd_scenario_run(NULL, "{\"kind\":\"pair\",\"group\":\"S3\",\"subgroup\":\"A3\"}", &r) != SD_STATUS_OK) return 4;
    if (sd_report_depths(r, &d) != SD_STATUS_OK || d.d_min != 2) return 5;
    char *json = NULL;
    if (sd_report_to_json(r, &json) != SD_STATUS_OK || strstr(json, "\"depths\"") == NULL) return 6;
    sd_string_free(json);
    sd_report_free(r);

    if (sd_scenario_run(NULL, "{\"kind\":\"pair\",\"group\":\"S9000\",\"subgroup\":\"A3\"}", &r) == SD_STATUS_OK) return 7;
    if (sd_last_error() == NULL) return 8;
    printf("%s\n", sd_version());
    return 0;
}
