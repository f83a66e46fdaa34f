"""The squared-path family and its one exceptional size.

Usage:
    python3 demos/squared_paths.py

Builds the distance-two-negative signing of P_n squared for n = 5..12,
tabulates the signed index, and zooms in on n = 6 where a single vertex
pair refuses to cancel.
"""

from signedwiener.distances import signed_distance_row, wiener_signed
from signedwiener.witnesses import certify, square_path_signing


def main() -> None:
    print(" n   W_sigma   claim           certified")
    for n in range(5, 13):
        w = square_path_signing(n)
        value = wiener_signed(w.graph, w.signing)
        claim = w.claim.kind
        if w.claim.exceptional_pair is not None:
            claim += f" except {w.claim.exceptional_pair}"
        print(f"{n:2d}   {value:7d}   {claim:<22s} {certify(w).ok}")
    print()

    w6 = square_path_signing(6)
    print("n = 6 in detail: nonzero signed distances")
    for u in range(6):
        row = signed_distance_row(w6.graph, w6.signing, u)
        for v in range(u + 1, 6):
            if row[v] != 0:
                print(f"  d({u},{v}) = {row[v]}")
    print("only the two endpoints fail, and removing either one of them")
    print("leaves a graph whose remaining pairs all still cancel")


if __name__ == "__main__":
    main()
