"""Symbolic reversibility / reverse-complement conditions, cross-validated.

Four named condition sets are evaluated on a generator tuple:

* ``T31`` (single generator) and ``T32`` (double generator): the code is
  predicted reversible when f1 (and f3) are self-reciprocal, x^i*f2* = f2,
  and the f14 clause holds, where i = deg f1 - deg f2 and
  j = deg f1 - deg f14.
* ``T41`` / ``T42``: the same conditions plus membership of the word with
  every symbol 3+3u, which is the reverse-complement of the zero word.

Equalities are tested literally after reduction mod x^n - 1; when a
condition fails literally but holds up to a unit factor, that is recorded
as an informational note, not as success.  The cross-validation harness
compares each prediction against brute-force closure of the enumerated
code, and any disagreement is surfaced as a named erratum record instead
of being absorbed.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .cyclic import (
    Code,
    DEFAULT_CAP,
    GeneratorSet,
    enumerate_code,
    validate,
    word_to_row,
)
from . import _dense
from .errors import CapExceeded, InvalidGenerators, WrongForm
from .poly import (
    Poly,
    divides,
    factor_xn_minus_1_z4,
    poly_mod_xn,
    reciprocal,
    self_reciprocal_constant,
)
from .ring import ALL_ELEMENTS, RingElem, UNITS

PROPERTIES = ("reversible", "rc_closed")


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one condition set on one generator tuple.

    ``branch`` names the (b)(ii) disjunct that held: "equality" or
    "divisibility" for T31/T41, "div-f14" or "div-f14-plus-f2" for
    T32/T42, and "vacuous" when f14 = 0 makes the clause trivial.
    ``failures`` lists the unmet conditions; satisfied iff it is empty.
    """

    theorem: str
    satisfied: bool
    i_shift: int
    j_shift: Optional[int]
    branch: Optional[str]
    failures: tuple[str, ...]
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class CrossValReport:
    gens: GeneratorSet
    property: str
    predicted: bool
    observed: bool
    agree: bool
    erratum: Optional[str] = None


def _require_valid(gens: GeneratorSet) -> None:
    problems = validate(gens)
    if problems:
        raise InvalidGenerators("; ".join(problems))


def _self_reciprocal(name: str, f: Poly, failures: list[str]) -> None:
    if self_reciprocal_constant(f) is None:
        failures.append(f"(a) {name} is not self-reciprocal")


def _check_b1(gens: GeneratorSet, failures: list[str], notes: list[str]) -> int:
    """x^i * f2* = f2 mod x^n - 1, literally; unit-factor near-misses are
    noted but still count as failures."""
    i = gens.f1.degree - gens.f2.degree
    lhs = poly_mod_xn(reciprocal(gens.f2).shift(i), gens.n)
    rhs = poly_mod_xn(gens.f2, gens.n)
    if lhs != rhs:
        failures.append("(b)(i) x^i*f2* != f2")
        for m in UNITS:
            if m != RingElem(1) and rhs * m == lhs:
                notes.append(f"(b)(i) holds up to the unit factor m={m}")
                break
    return i


def _f14_dividend(gens: GeneratorSet) -> tuple[Optional[int], Poly, Poly, list[str]]:
    """j, the reduced x^j*f14*, the reduced f14, and any anomaly notes."""
    notes = []
    if gens.f14.is_zero:
        return None, Poly(), Poly(), notes
    j = gens.f1.degree - gens.f14.degree
    if j < 0:
        notes.append("j < 0 (deg f14 exceeds deg f1); exponent taken mod n")
    shifted = poly_mod_xn(reciprocal(gens.f14).shift(j % gens.n), gens.n)
    return j, shifted, poly_mod_xn(gens.f14, gens.n), notes


def check_reversible_single(gens: GeneratorSet) -> ConditionReport:
    """Condition set T31 for a single-generator code."""
    if gens.f3 is not None or gens.f4 is not None:
        raise WrongForm("single-generator checker given a double-generator tuple")
    _require_valid(gens)
    failures: list[str] = []
    notes: list[str] = []
    _self_reciprocal("f1", gens.f1, failures)
    i = _check_b1(gens, failures, notes)
    j, shifted, f14r, jnotes = _f14_dividend(gens)
    notes.extend(jnotes)
    if j is None:
        branch = "vacuous"
    elif shifted == f14r:
        branch = "equality"
    else:
        dividend = poly_mod_xn(shifted * 2 + f14r * 2, gens.n)
        if divides(gens.f2, dividend, gens.n):
            branch = "divisibility"
        else:
            branch = None
            failures.append("(b)(ii) x^j*f14* != f14 and f2 does not divide 2x^j*f14* + 2f14")
    return ConditionReport("T31", not failures, i, j, branch,
                           tuple(failures), tuple(notes))


def check_reversible_double(gens: GeneratorSet) -> ConditionReport:
    """Condition set T32 for a double-generator code."""
    if gens.f3 is None or gens.f4 is None:
        raise WrongForm("double-generator checker needs f3 and f4")
    _require_valid(gens)
    failures: list[str] = []
    notes: list[str] = []
    _self_reciprocal("f1", gens.f1, failures)
    _self_reciprocal("f3", gens.f3, failures)
    i = _check_b1(gens, failures, notes)
    j, shifted, f14r, jnotes = _f14_dividend(gens)
    notes.extend(jnotes)
    dividend = poly_mod_xn(shifted * 2 + f14r * 2, gens.n)
    if divides(gens.f4, dividend, gens.n):
        branch = "div-f14" if j is not None else "vacuous"
    elif divides(gens.f4, poly_mod_xn(dividend + gens.f2 * 2, gens.n), gens.n):
        branch = "div-f14-plus-f2"
    else:
        branch = None
        failures.append("(b)(ii) f4 divides neither 2x^j*f14* + 2f14 nor that plus 2f2")
    return ConditionReport("T32", not failures, i, j, branch,
                           tuple(failures), tuple(notes))


def _all_threes_row(n: int):
    return word_to_row(tuple(RingElem(3, 3) for _ in range(n)))


def _with_membership(report: ConditionReport, theorem: str,
                     gens: GeneratorSet, cap: int,
                     code: Optional[Code]) -> ConditionReport:
    if code is None:
        code = enumerate_code(gens, cap)
    failures = list(report.failures)
    if not _dense.contains(code.rows(), _all_threes_row(gens.n)):
        failures.append("membership: the all-(3+3u) word is not in the code")
    return ConditionReport(theorem, not failures, report.i_shift, report.j_shift,
                           report.branch, tuple(failures), report.notes)


def check_rc_single(gens: GeneratorSet, cap: int = DEFAULT_CAP,
                    code: Optional[Code] = None) -> ConditionReport:
    """Condition set T41: T31 plus membership of the all-(3+3u) word."""
    return _with_membership(check_reversible_single(gens), "T41", gens, cap, code)


def check_rc_double(gens: GeneratorSet, cap: int = DEFAULT_CAP,
                    code: Optional[Code] = None) -> ConditionReport:
    """Condition set T42: T32 plus membership of the all-(3+3u) word."""
    return _with_membership(check_reversible_double(gens), "T42", gens, cap, code)


# ---------------------------------------------------------------------------
# Cross-validation against brute force
# ---------------------------------------------------------------------------

def _gens_signature(gens: GeneratorSet) -> str:
    parts = [str(gens.n), str(gens.f1), str(gens.f2), str(gens.f14),
             str(gens.f3) if gens.f3 is not None else "-",
             str(gens.f4) if gens.f4 is not None else "-"]
    return "|".join(parts)


def _erratum_name(gens: GeneratorSet, prop: str) -> str:
    digest = hashlib.sha1(_gens_signature(gens).encode()).hexdigest()[:8]
    return f"erratum-n{gens.n}-{prop}-{digest}"


def predict(gens: GeneratorSet, prop: str, cap: int = DEFAULT_CAP,
            code: Optional[Code] = None) -> ConditionReport:
    """The condition report relevant to a property and generator form."""
    single = gens.f3 is None
    if prop == "reversible":
        return check_reversible_single(gens) if single else check_reversible_double(gens)
    if prop == "rc_closed":
        return (check_rc_single(gens, cap, code) if single
                else check_rc_double(gens, cap, code))
    raise ValueError(f"unknown property {prop!r}")


def _crossval_with_code(gens: GeneratorSet, prop: str, code: Code) -> CrossValReport:
    predicted = predict(gens, prop, code=code).satisfied
    observed = code.is_reversible() if prop == "reversible" else code.is_rc_closed()
    agree = predicted == observed
    return CrossValReport(gens, prop, predicted, observed, agree,
                          None if agree else _erratum_name(gens, prop))


def cross_validate(gens: GeneratorSet, prop: str,
                   cap: int = DEFAULT_CAP) -> CrossValReport:
    """Compare the symbolic prediction with brute-force closure checking."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    return _crossval_with_code(gens, prop, enumerate_code(gens, cap))


# ---------------------------------------------------------------------------
# Sweeps over the divisor lattice
# ---------------------------------------------------------------------------

#: Coefficient alphabet for exhaustive f14 generation: zero, a unit, the
#: two kinds of zero divisors.  Degree <= 2 over these four values gives
#: the 64 representative f14 polynomials the exhaustive sweep walks.
F14_ALPHABET = (RingElem(0), RingElem(1), RingElem(2), RingElem(0, 1))


def _divisor_lattice(n: int) -> list[tuple[int, Poly]]:
    """Monic divisors of x^n - 1 as (factor subset mask, product)."""
    factors = factor_xn_minus_1_z4(n)
    out = []
    for mask in range(1 << len(factors)):
        prod = Poly([1])
        for i, f in enumerate(factors):
            if mask >> i & 1:
                prod = prod * f
        out.append((mask, prod))
    return out


def _submasks(mask: int) -> list[int]:
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    return sorted(subs)


def _exhaustive_instances(n: int, max_f14_degree: int):
    lattice = _divisor_lattice(n)
    by_mask = dict(lattice)
    ncoef = min(max_f14_degree, n - 1) + 1
    f14s = [Poly(c) for c in itertools.product(F14_ALPHABET, repeat=ncoef)]
    pairs = [(by_mask[m1], by_mask[m2])
             for m1, _ in lattice for m2 in _submasks(m1)]
    for f1, f2 in pairs:
        for f14 in f14s:
            yield GeneratorSet(n, f1, f2, f14)
    for f1, f2 in pairs:
        for f3, f4 in pairs:
            for f14 in f14s:
                yield GeneratorSet(n, f1, f2, f14, f3, f4)


def _random_instance(n: int, max_f14_degree: int, lattice, rng: random.Random):
    by_mask = dict(lattice)
    m1 = rng.randrange(len(lattice))
    f1_mask = lattice[m1][0]
    f2 = by_mask[rng.choice(_submasks(f1_mask))]
    ncoef = min(max_f14_degree, n - 1) + 1
    f14 = Poly(rng.choice(ALL_ELEMENTS) for _ in range(ncoef))
    if rng.random() < 0.5:
        return GeneratorSet(n, lattice[m1][1], f2, f14)
    f3_mask = lattice[rng.randrange(len(lattice))][0]
    f4 = by_mask[rng.choice(_submasks(f3_mask))]
    return GeneratorSet(n, lattice[m1][1], f2, f14, by_mask[f3_mask], f4)


def sweep(n: int, max_f14_degree: int = 2, seed: int = 0,
          samples: Optional[int] = None, cap: int = DEFAULT_CAP) -> list[CrossValReport]:
    """Cross-validate generator tuples drawn from the divisor lattice.

    With ``samples=None`` the lattice is walked exhaustively with f14
    ranging over the representative alphabet; otherwise ``samples``
    instances are drawn with the seeded generator, skipping (and
    redrawing past) instances whose enumeration exceeds ``cap``.  Each
    instance yields one report per property, in a fixed order, so the
    result is deterministic.
    """
    reports: list[CrossValReport] = []
    if samples is None:
        for gens in _exhaustive_instances(n, max_f14_degree):
            code = enumerate_code(gens, cap)
            for prop in PROPERTIES:
                reports.append(_crossval_with_code(gens, prop, code))
        return reports
    lattice = _divisor_lattice(n)
    rng = random.Random(seed)
    collected = 0
    attempts = 0
    while collected < samples:
        attempts += 1
        if attempts > 200 * samples:
            raise CapExceeded(
                f"collected only {collected} of {samples} instances under cap={cap}")
        gens = _random_instance(n, max_f14_degree, lattice, rng)
        try:
            code = enumerate_code(gens, cap)
        except CapExceeded:
            continue
        for prop in PROPERTIES:
            reports.append(_crossval_with_code(gens, prop, code))
        collected += 1
    return reports


def format_sweep_report(reports: list[CrossValReport]) -> str:
    """One line per report plus an ``agreements=k/total`` summary."""
    lines = []
    agreements = 0
    for r in reports:
        g = r.gens
        line = (f"n={g.n} f1={g.f1} f2={g.f2} f14={g.f14} "
                f"f3={g.f3 if g.f3 is not None else '-'} "
                f"f4={g.f4 if g.f4 is not None else '-'} "
                f"property={r.property} predicted={str(r.predicted).lower()} "
                f"observed={str(r.observed).lower()} agree={str(r.agree).lower()}")
        if r.erratum:
            line += f" erratum={r.erratum}"
        else:
            agreements += 1
        lines.append(line)
    lines.append(f"agreements={agreements}/{len(reports)}")
    return "\n".join(lines) + "\n"
