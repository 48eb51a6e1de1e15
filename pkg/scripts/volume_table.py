"""Print v_d^(s), the integer ratios v_d^(s)/v_d^(0), and the row checks up to a degree.

    python scripts/volume_table.py 12
"""

import sys

from schurcohn.volumes import ratio, row_sums, total_ratio, volume_table


def main(d_max: int = 12) -> None:
    records = volume_table(d_max)
    sums = row_sums(records)
    for d in range(1, d_max + 1):
        ratios = [int(ratio(d, s)) for s in range(d // 2 + 1)]
        total, full = sums[d]
        flag = "ok" if total == full else "MISMATCH"
        print(f"d={d:2d}  ratios={ratios}  v_d/v_d^(0)={total_ratio(d)}  row sum {flag}")
    print()
    for rec in records:
        print(f"v_{rec.signature.d}^({rec.signature.s}) = {rec.value}  ~ {float(rec.value):.6g}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 12)
