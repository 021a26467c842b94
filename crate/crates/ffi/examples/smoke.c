#include <stdio.h>
#include <string.h>

#include "bmres.h"

int main(void) {
    BmGraph *g = NULL;
    BmIdeal *ni = NULL;
    BmBettiTable *crit = NULL, *hom = NULL;
    if (bm_graph_from_json("{\"n\":7,\"edges\":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6]]}", &g) != BM_STATUS_OK)
        return 1;
    if (bm_betti_tree(g, 0, &crit) != BM_STATUS_OK || bm_betti_get(crit, 3, 6) != 4)
        return 2;
    if (bm_ideal_from_graph(g, &ni) != BM_STATUS_OK || bm_betti_homology(ni, 2, &hom) != BM_STATUS_OK)
        return 3;
    char *a = bm_betti_to_json(crit), *b = bm_betti_to_json(hom);
    int same = strcmp(a, b) == 0;
    bm_string_free(a);
    bm_string_free(b);
    BmGraph *bad = NULL;
    if (bm_graph_from_json("{\"n\":2,\"edges\":[[0,0]]}", &bad) != BM_STATUS_INVALID_INPUT || bm_last_error() == NULL)
        return 4;
    printf("beta_3,6 = %llu\n", (unsigned long long)bm_betti_get(crit, 3, 6));
    bm_betti_free(crit);
    bm_betti_free(hom);
    bm_ideal_free(ni);
    bm_graph_free(g);
    return same ? 0 : 5;
}
