"""Regenerate src/tgrs/_moduli.py: default moduli for every p^m <= 2^16, m >= 2."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tgrs.gf import first_irreducible, is_prime  # noqa: E402

LIMIT = 1 << 16


def main() -> None:
    lines = [
        '"""Default irreducible moduli, constant term first."""',
        "",
        "# generated by scripts/gen_moduli.py; smallest monic irreducible by sum(c_i p^i)",
        "DEFAULT_MODULI = {",
    ]
    for p in range(2, 257):
        if not is_prime(p):
            continue
        m = 2
        while p**m <= LIMIT:
            lines.append(f"    ({p}, {m}): {first_irreducible(p, m)},")
            m += 1
    lines.append("}")
    out = Path(__file__).resolve().parents[1] / "src" / "tgrs" / "_moduli.py"
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
