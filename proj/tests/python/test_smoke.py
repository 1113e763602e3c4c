#!/usr/bin/env python3
"""Smoke tests for the python extension surface."""

import math
import sys

import hampath as hp


def check(cond, label):
    if not cond:
        print(f"FAIL {label}")
        sys.exit(1)
    print(f"ok   {label}")


def main():
    sizes = {3: 3, 4: 3, 5: 10, 6: 10, 7: 35, 8: 35, 9: 126}
    for n, want in sizes.items():
        fam = hp.construct_triangle_family(n)
        check(len(fam) == want, f"construct_triangle_family({n}) has {want} paths")
        check(len(fam) == hp.balanced_bipartition_count(n), f"size meets the bipartition bound at n={n}")

    fam7 = hp.construct_triangle_family(7)
    report = hp.verify_family(fam7, "triangle")
    check(report["pass"] and report["pairs_checked"] == 595, "full triangle verification at n=7")

    sampled = hp.verify_family(fam7, "triangle", sample=100, seed=7)
    check(sampled["pass"] and sampled["pairs_checked"] == 100, "sampled verification is seeded")

    ok, detail = hp.certify_tightness(fam7)
    check(ok, f"tightness certificate: {detail}")

    check(hp.union_contains([0, 1, 2], [1, 0, 2], "triangle"), "3-path union is a triangle")
    check(not hp.union_contains([0, 1, 2, 3], [0, 3, 2, 1], "triangle"),
          "same-bipartition union has none")

    for n in range(0, 41):
        check_val = hp.identity_check(n)
        if not check_val:
            check(False, f"identity at n={n}")
    print("ok   identity holds for 0..40")

    check(hp.binomial(17, 8) == 24310, "binomial(17,8)")
    check(hp.binomial(64, 32) == math.comb(64, 32), "binomial(64,32) exact")

    res = hp.search_max_clique(5, "triangle")
    check(res["exact"] and res["size"] == 10, "exact clique 10 at n=5")
    wit = res["witness"]
    check(len(wit) == 10, "witness has 10 paths")
    check(hp.verify_family(wit, "triangle")["pass"], "witness re-verifies")

    hc = hp.hc_prime_family(5)
    check(len(hc) == 10, "hc_prime_family(5) has C(5,2) paths")
    check(hp.verify_family(hc, "ham-cycle")["pass"], "prime family unions are hamiltonian")
    ok, detail = hp.end_edge_injectivity(hc)
    check(ok, f"end-edge injectivity: {detail}")

    trees = hp.tree_family(6)
    check(len(trees) == 31, "tree_family(6) has 2^5-1 trees")

    tri, mtf, total = hp.union_family_size(4)
    check(tri + mtf == total, "union family counts add up")

    check(len(hp.enumerate_paths(4)) == 12, "enumerate_paths(4)")

    print("smoke tests passed")


if __name__ == "__main__":
    main()
