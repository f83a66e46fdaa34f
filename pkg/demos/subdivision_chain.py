"""Growing sparse canceling graphs by edge subdivision.

Usage:
    python3 demos/subdivision_chain.py

Starts from the two stored seed witnesses and repeatedly replaces the
designated edge by a longer alternating path.  Each step adds two
vertices and two edges, so together the seeds cover every order from
5 to 10 with the extremal profile: n+2 edges, minimum degree 2.
"""

from signedwiener.witnesses import certify, special_witness, subdivision_extend


def main() -> None:
    print("seed       i    n    m   min deg   certified")
    rows = []
    for tag, irange in (("g_small_odd", range(0, 3)),
                        ("g_small_even", range(1, 4))):
        seed = special_witness(tag)
        for i in irange:
            w = subdivision_extend(seed, seed.designated_edge, i)
            mindeg = min(w.graph.degree(v) for v in range(w.graph.n))
            rows.append((w.graph.n, tag, i, w.graph.m, mindeg,
                         certify(w).ok))
    for n, tag, i, m, mindeg, ok in sorted(rows):
        print(f"{tag:12s} {i}   {n:2d}   {m:2d}      {mindeg}       {ok}")
    print()

    even = special_witness("g_small_even")
    w = subdivision_extend(even, even.designated_edge, 2)
    new = w.signing.signs[even.graph.m - 1:]
    print(f"the replaced edge of {even.name} becomes a 5-edge path with")
    print(f"alternating signs {new}, which sum back to the old edge sign")


if __name__ == "__main__":
    main()
