"""Kernel identities and Girard-Waring sums, all in exact arithmetic.

The kernel cubic x U^3 - 3U + 2 factors through one rational root (the
bad factor) and a conjugate pair sigma, tau whose elementary symmetric
functions are plain polynomials in t.  Powers of sigma and tau then
collapse into Girard-Waring sums, verified here against their two-term
recurrence.
"""

from knoedel import (
    girard_waring_power_sum,
    girard_waring_quotient,
    kernel_identity_results,
    symmetric_pair,
)


def show_kernel_identities():
    print("=== kernel identities ===")
    for item in kernel_identity_results():
        status = "holds" if item.holds else "FAILS"
        print(f"  {item.name}: {status}")
        print(f"      {item.detail}")
        assert item.holds


def show_symmetric_pair():
    pair = symmetric_pair()
    print("\n=== symmetric functions of sigma and tau ===")
    print(f"  sigma + tau   = {pair.sum_of_roots!r}")
    print(f"  sigma * tau   = {pair.product_of_roots!r}")


def show_girard_waring():
    pair = symmetric_pair()
    e, f = pair.sum_of_roots, pair.product_of_roots
    print("\n=== Girard-Waring sums, first few powers ===")
    for m in range(7):
        print(f"  sigma^{m} + tau^{m} = {girard_waring_power_sum(m)!r}")
    print()
    for m in range(7):
        print(f"  (sigma^{m} - tau^{m})/(sigma - tau) = {girard_waring_quotient(m)!r}")

    print("\nrecurrence check a_m = e a_(m-1) - f a_(m-2), m <= 25:")
    p_prev, p_cur = girard_waring_power_sum(0), girard_waring_power_sum(1)
    q_prev, q_cur = girard_waring_quotient(0), girard_waring_quotient(1)
    for m in range(2, 26):
        p_prev, p_cur = p_cur, e * p_cur - f * p_prev
        q_prev, q_cur = q_cur, e * q_cur - f * q_prev
        assert girard_waring_power_sum(m) == p_cur
        assert girard_waring_quotient(m) == q_cur
    print("  closed sums and recurrences agree")


if __name__ == "__main__":
    show_kernel_identities()
    show_symmetric_pair()
    show_girard_waring()
