"""Exercise the numeric admissibility checks on hand-written tables.

No ring is involved: the two checks consume only the (row, degree) ->
dimension data, so a synthetic table isolates their combinatorics.

Run:  python3 demos/synthetic_gap_demo.py
"""

from formring import CohomologyTable, degree_gap_check, two_diagonal_check


def report(label, verdict):
    print(f"  {label}: {verdict.status}")
    for key in ("violations", "admissible_k_text", "tail_min_allowed"):
        if key in verdict.data and verdict.data[key] not in (None, []):
            print(f"    {key} = {verdict.data[key]}")


def main() -> None:
    print("table with entries H^1 at degree 2 (dim 10),"
          " H^2 at degree 0 (dim 1):")
    table = CohomologyTable.synthetic_from({(1, 2): 10, (2, 0): 1})

    print()
    print("cutoff t = 5 (both rows below the cutoff):")
    report("adjacent-diagonal gap", degree_gap_check(table, 5))
    report("two-diagonal admissibility", two_diagonal_check(table, 5))
    print("  the pair sits at diagonal positions p = 3 and q = 2;")
    print("  p - q = 1 is exactly the forbidden configuration.")

    print()
    print("cutoff t = 2 (row 2 becomes the tail row, no pair remains):")
    report("adjacent-diagonal gap", degree_gap_check(table, 2))
    report("two-diagonal admissibility", two_diagonal_check(table, 2))

    print()
    print("entries on one shared diagonal (degree + row constant) are")
    print("the clean configuration for both checks:")
    clean = CohomologyTable.synthetic_from({(0, 3): 1, (1, 2): 2, (2, 1): 4})
    report("adjacent-diagonal gap", degree_gap_check(clean, 5))
    report("two-diagonal admissibility", two_diagonal_check(clean, 5))


if __name__ == "__main__":
    main()
