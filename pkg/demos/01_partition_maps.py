#!/usr/bin/env python3
"""Tour of the partition decompositions the package is built on.

Run with:  python3 demos/01_partition_maps.py
"""

from compoundbasis import (
    as_partition,
    glaisher,
    glaisher_inverse,
    h_abacus_compose,
    h_abacus_decompose,
    partition_str,
    generate_partitions,
    phi,
    phi_inverse,
    psi,
    two_core_quotient,
)


def show(label, value):
    print(f"  {label:24s} {value}")


def main():
    print("1. Splitting a partition into odd-part and doubled-part components")
    lam = as_partition((5, 5, 5, 4, 4, 4, 4, 2, 2, 2, 2, 2, 2, 2, 1))
    r, d = phi(lam)
    show("input", partition_str(lam))
    show("strict component", partition_str(r))
    show("paired component", partition_str(d))
    show("round trip ok", phi_inverse(r, d) == lam)
    print()

    print("2. The companion split: odd parts kept, even parts halved")
    odd, halves = psi(lam)
    show("odd parts", partition_str(odd))
    show("halved even parts", partition_str(halves))
    print()

    print("3. Strict partitions <-> odd partitions (binary/odd-part bijection)")
    mu = as_partition((8, 6, 4, 3, 1))
    show("strict input", partition_str(mu))
    show("odd image", partition_str(glaisher(mu)))
    show("round trip ok", glaisher_inverse(glaisher(mu)) == mu)
    print()

    print("4. Bead model for shifted diagrams: core, runner contents, charge")
    nu = as_partition((11, 10, 5, 3, 2))
    dec = h_abacus_decompose(nu)
    show("input", partition_str(nu))
    show("core", partition_str(dec.core))
    show("runner-0 (shifted)", partition_str(dec.shifted0))
    show("runner-1 quotient", partition_str(dec.quotient1))
    show("charge", dec.charge)
    rebuilt = h_abacus_compose(dec.core, dec.shifted0, dec.quotient1)
    show("round trip ok", rebuilt == nu)
    print()

    print("5. Ordinary 2-core / 2-quotient with sign, for a few shapes")
    for xi in generate_partitions(4):
        tq = two_core_quotient(xi)
        print(
            f"  {partition_str(xi):8s} core={partition_str(tq.core2):6s}"
            f" q0={partition_str(tq.q0):6s} q1={partition_str(tq.q1):6s}"
            f" sign={tq.sign:+d}"
        )


if __name__ == "__main__":
    main()
