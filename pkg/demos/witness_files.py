"""Witness files: emit, re-parse, re-certify.

Usage:
    python3 demos/witness_files.py

Every constructed witness serializes to the plain edge-list format with
its claim in a comment, so a skeptic can re-check it with nothing but
the file.  The same files drive the command line:

    signedwiener construct complete-cyclic 6 --emit-witness w.txt
    signedwiener check w.txt --k 2
"""

from signedwiener.witnesses import (
    certify,
    complete_cyclic_signing,
    emit_witness,
    parse_witness,
)


def main() -> None:
    w = complete_cyclic_signing(5)
    text = emit_witness(w)
    print("emitted witness file:")
    for line in text.splitlines():
        print("  |", line)
    print()

    back = parse_witness(text)
    c = certify(back)
    print(f"re-parsed name={back.name!r}, claim kind={back.claim.kind}, "
          f"k={back.claim.k}")
    print(f"re-certified from the file alone: ok={c.ok}, "
          f"observed={c.observed}")
    assert emit_witness(back) == text
    print("emit(parse(text)) round-trips byte for byte")


if __name__ == "__main__":
    main()
