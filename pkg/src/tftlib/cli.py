"""Command-line front end.

Coefficient files are plain text::

    modulus 13
    n 4            (optional; inferred as the next power of two)
    1 1 1

Exit codes: 0 success, 1 bad input, 2 an internal check failed.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .invtft import inv_tft
from .plan import log2_exact, make_plan
from .polymul import Polynomial, multiply_schoolbook, multiply_tft
from .ring import DEFAULT_MODULUS, PrimeField
from .tft import executed_butterflies, tft_cost_bound, tft_forward
from .transform import OpCounter, dft_inplace

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class InternalCheckError(RuntimeError):
    pass


@dataclass
class CoefficientFile:
    modulus: int
    values: list[int]
    n: int | None = None

    @classmethod
    def parse(cls, text: str) -> CoefficientFile:
        modulus = None
        n = None
        values: list[int] = []
        for lineno, line in enumerate(text.splitlines(), 1):
            words = line.split("#", 1)[0].split()
            if not words:
                continue
            if words[0] == "modulus":
                if modulus is not None or values or len(words) != 2:
                    raise ValueError(f"line {lineno}: misplaced modulus header")
                modulus = int(words[1])
            elif words[0] == "n":
                if n is not None or values or len(words) != 2:
                    raise ValueError(f"line {lineno}: misplaced n header")
                n = int(words[1])
            else:
                try:
                    values.extend(int(w) for w in words)
                except ValueError:
                    raise ValueError(f"line {lineno}: expected integers, got {line.strip()!r}") from None
        if modulus is None:
            raise ValueError("missing 'modulus <P>' header")
        values = [v % modulus for v in values]
        return cls(modulus, values, n)

    @classmethod
    def load(cls, path: str) -> CoefficientFile:
        return cls.parse(Path(path).read_text())

    def dump(self) -> str:
        lines = [f"modulus {self.modulus}"]
        if self.n is not None:
            lines.append(f"n {self.n}")
        lines.append(" ".join(map(str, self.values)))
        return "\n".join(lines) + "\n"

    def transform_length(self, ell: int) -> int:
        if self.n is not None:
            log2_exact(self.n)
            return self.n
        return max(2, 1 << (max(ell, len(self.values)) - 1).bit_length())


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)


def _prepare(cf: CoefficientFile, ell: int | None) -> tuple[PrimeField, list[int], int, int]:
    field = PrimeField(cf.modulus)
    if ell is None:
        ell = len(cf.values)
    n = cf.transform_length(ell)
    if len(cf.values) > n:
        raise ValueError(f"{len(cf.values)} values do not fit in length {n}")
    buf = cf.values + [0] * (n - len(cf.values))
    return field, buf, ell, n


def cmd_tft(args: argparse.Namespace) -> int:
    cf = CoefficientFile.load(args.input)
    field, buf, ell, n = _prepare(cf, args.ell)
    plan = make_plan(field, n)
    ctr = OpCounter()
    tft_forward(buf, ell, plan, ctr)
    add_bound, mul_bound = tft_cost_bound(n, ell)
    print("values: " + " ".join(map(str, buf[:ell])))
    print(f"n={n} ell={ell} omega={plan.omega}")
    print(f"ops: add={ctr.additions} mul={ctr.multiplications}")
    print(f"bound: add<={add_bound} mul<={mul_bound}")
    _emit(CoefficientFile(cf.modulus, buf[:ell], n).dump(), args.output)
    return EXIT_OK


def cmd_invtft(args: argparse.Namespace) -> int:
    cf = CoefficientFile.load(args.input)
    field, buf, ell, n = _prepare(cf, args.ell)
    plan = make_plan(field, n)
    ctr = OpCounter()
    inv_tft(buf, ell, plan, ctr)
    print("values: " + " ".join(map(str, buf[:ell])))
    print(f"n={n} ell={ell} omega={plan.omega}")
    print(f"ops: add={ctr.additions} mul={ctr.multiplications}")
    _emit(CoefficientFile(cf.modulus, buf[:ell], n).dump(), args.output)
    return EXIT_OK


def cmd_mul(args: argparse.Namespace) -> int:
    fa, fb = CoefficientFile.load(args.a), CoefficientFile.load(args.b)
    if fa.modulus != fb.modulus:
        raise ValueError(f"moduli differ: {fa.modulus} vs {fb.modulus}")
    field = PrimeField(fa.modulus)
    f, g = Polynomial(field, fa.values), Polynomial(field, fb.values)
    ctr = OpCounter()
    product = multiply_tft(f, g, ctr)
    coeffs = list(product.coeffs) or [0]
    print("values: " + " ".join(map(str, coeffs)))
    print(f"ops: add={ctr.additions} mul={ctr.multiplications}")
    if args.verify:
        if multiply_schoolbook(f, g) != product:
            raise InternalCheckError("TFT product disagrees with schoolbook product")
        print("verify: ok")
    _emit(CoefficientFile(fa.modulus, coeffs).dump(), args.output)
    return EXIT_OK


def sweep(n: int, seed: int, modulus: int = DEFAULT_MODULUS, inject: int | None = None) -> list[dict]:
    """Forward + inverse TFT on random data for every ell in 1..n."""
    field = PrimeField(modulus)
    plan = make_plan(field, n)
    rng = random.Random(seed)
    rows = []
    for ell in range(1, n + 1):
        a = [rng.randrange(modulus) for _ in range(ell)]
        buf = a + [0] * (n - ell)
        ctr = OpCounter()
        tft_forward(buf, ell, plan, ctr)
        buf[ell:] = [0] * (n - ell)
        if ell == inject:
            buf[0] = (buf[0] + 1) % modulus
        inv_tft(buf, ell, plan)
        add_bound, mul_bound = tft_cost_bound(n, ell)
        ok = (
            buf[:ell] == a
            and ctr.additions <= add_bound
            and ctr.multiplications <= mul_bound
        )
        rows.append(
            dict(ell=ell, adds=ctr.additions, add_bound=add_bound,
                 muls=ctr.multiplications, mul_bound=mul_bound, ok=ok)
        )
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep(args.n, args.seed, args.modulus, args.inject_failure)
    print(f"sweep n={args.n} modulus={args.modulus} seed={args.seed}")
    print(f"{'ell':>6} {'adds':>8} {'add<=':>8} {'muls':>8} {'mul<=':>8}  status")
    for r in rows:
        status = "ok" if r["ok"] else "FAIL"
        print(f"{r['ell']:>6} {r['adds']:>8} {r['add_bound']:>8} {r['muls']:>8} {r['mul_bound']:>8}  {status}")
    failed = sum(not r["ok"] for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} ok")
    return EXIT_INTERNAL if failed else EXIT_OK


def render_schedule(n: int, ell: int, mode: str = "tft") -> tuple[str, int]:
    r"""Text picture of the butterfly grid, one row per stage.

    ``\`` and ``/`` mark the two slots of a butterfly that does arithmetic;
    ``-`` and ``=`` mark a free butterfly whose partner is a known zero
    (the upper slot is a copy); ``.`` is a slot the stage never writes.
    Returns the picture and the number of arithmetic butterflies.
    """
    p = log2_exact(n)
    if mode == "dft":
        ell = n
    elif mode != "tft":
        raise ValueError(f"unknown mode {mode!r}")
    stages = executed_butterflies(n, ell)
    lines = [f"{mode} n={n} ell={ell}", "s=0  " + " ".join("a" if k < ell else "0" for k in range(n))]
    total = 0
    for s, lows in enumerate(stages, 1):
        m = n >> s
        row = ["."] * n
        bound = -(-ell // m) * m
        for base in range(0, bound, 2 * m):
            for lo in range(base, base + m):
                row[lo], row[lo + m] = "-", "="
        for lo in lows:
            row[lo], row[lo + m] = "\\", "/"
        total += len(lows)
        lines.append(f"s={s:<3}" + " ".join(row) + f"   m={m} butterflies={len(lows)}")
    lines.append(f"butterflies: {total}")
    return "\n".join(lines) + "\n", total


def cmd_schedule(args: argparse.Namespace) -> int:
    ell = args.n if args.ell is None else args.ell
    text, _ = render_schedule(args.n, ell, args.mode)
    sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tftlib", description="Truncated Fourier transforms over Z/PZ")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tft", help="forward truncated transform of a coefficient file")
    p.add_argument("input")
    p.add_argument("--ell", type=int, help="truncation length (default: number of values)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tft)

    p = sub.add_parser("invtft", help="recover coefficients from a truncated transform")
    p.add_argument("input")
    p.add_argument("--ell", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_invtft)

    p = sub.add_parser("mul", help="multiply two polynomials")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--verify", action="store_true", help="cross-check against schoolbook multiplication")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("sweep", help="round-trip and cost-bound check for every ell in 1..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--modulus", type=int, default=DEFAULT_MODULUS)
    p.add_argument("--inject-failure", type=int, metavar="ELL", help="corrupt the run at this ell")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("schedule", help="draw the butterfly schedule")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--mode", choices=("dft", "tft"), default="tft")
    p.set_defaults(func=cmd_schedule)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InternalCheckError, AssertionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ZeroDivisionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
