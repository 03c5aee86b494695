"""Cyclic codes over the ring: construction, enumeration, and analysis.

A code is built from a generator tuple ``(n, f1, f2, f14[, f3, f4])``; its
two ideal generators are ``f1 + 2*f2 + 2u*f14`` and, when the second pair
is present, ``u*f3 + 2u*f4``, both reduced mod x^n - 1.  Enumeration is
exact span closure over all cyclic shifts of the generators, capped so a
runaway instance fails loudly instead of thrashing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from . import _dense
from .errors import InvalidGenerators, TrivialCode, LengthMismatch
from .poly import Poly, divides, poly_divmod, poly_mod_xn, xn_minus_1
from .ring import LEE_Z4, RingElem, U

DEFAULT_CAP = 1 << 20

CodeWord = tuple[RingElem, ...]

# Per-element render tables keyed by (a, b).
_STR16 = {(a, b): str(RingElem(a, b)) for a in range(4) for b in range(4)}
_GRAY16 = {(a, b): RingElem(a, b).gray_str() for a in range(4) for b in range(4)}
_CODON16 = {(a, b): RingElem(a, b).codon() for a in range(4) for b in range(4)}


# ---------------------------------------------------------------------------
# Word-level operations
# ---------------------------------------------------------------------------

def cyclic_shift(w: CodeWord) -> CodeWord:
    """Right rotation: (c0, ..., c_{n-1}) -> (c_{n-1}, c0, ..., c_{n-2})."""
    return w[-1:] + w[:-1]


def reverse_word(w: CodeWord) -> CodeWord:
    return tuple(reversed(w))


def complement_word(w: CodeWord) -> CodeWord:
    return tuple(c.complement() for c in w)


def reverse_complement(w: CodeWord) -> CodeWord:
    return tuple(c.complement() for c in reversed(w))


def word_from_poly(f: Poly, n: int) -> CodeWord:
    coeffs = poly_mod_xn(f, n).coeffs
    return tuple(coeffs) + (RingElem(0),) * (n - len(coeffs))


def word_to_row(w: CodeWord) -> np.ndarray:
    return _dense.row_from_pairs(((c.a, c.b) for c in w), len(w))


def row_to_word(row: np.ndarray) -> CodeWord:
    return tuple(RingElem(int(row[2 * k]), int(row[2 * k + 1])) for k in range(row.size // 2))


# ---------------------------------------------------------------------------
# Generator tuples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    """Defining data of a cyclic code of odd length n.

    f2 must divide f1 must divide x^n - 1; the optional pair (f3, f4)
    obeys the same chain.  f14 is unconstrained apart from deg f14 < n.
    """

    n: int
    f1: Poly
    f2: Poly
    f14: Poly = Poly()
    f3: Optional[Poly] = None
    f4: Optional[Poly] = None


def validate(gens: GeneratorSet) -> list[str]:
    """Structural violations as data; an empty list means well-formed."""
    problems = []
    n = gens.n
    if n < 1 or n % 2 == 0:
        problems.append("n must be odd and positive")
        return problems
    modulus = xn_minus_1(n)

    def check_chain(name_small, small, name_big, big):
        small_ok = small.is_monic()
        big_ok = big.is_monic()
        if not small_ok:
            problems.append(f"{name_small} must be monic")
        if not big_ok:
            problems.append(f"{name_big} must be monic")
        if big_ok:
            # Divisibility by the literal x^n - 1 (reducing it first would
            # make the condition vacuous, since x^n - 1 is 0 in the quotient).
            _, r = poly_divmod(modulus, big)
            if not r.is_zero:
                problems.append(f"{name_big} does not divide x^{n}-1")
        if small_ok and not divides(small, big, n):
            problems.append(f"{name_small} does not divide {name_big}")

    check_chain("f2", gens.f2, "f1", gens.f1)
    if (gens.f3 is None) != (gens.f4 is None):
        problems.append("f3 and f4 must be given together")
    elif gens.f3 is not None:
        check_chain("f4", gens.f4, "f3", gens.f3)
    if not gens.f14.is_zero and gens.f14.degree >= n:
        problems.append("f14 must have degree < n")
    return problems


def generator_polys(gens: GeneratorSet) -> tuple[Poly, Optional[Poly]]:
    """The reduced ideal generators (f1 + 2f2 + 2u*f14, u*f3 + 2u*f4)."""
    problems = validate(gens)
    if problems:
        raise InvalidGenerators("; ".join(problems))
    two = RingElem(2)
    two_u = RingElem(0, 2)
    g_a = poly_mod_xn(gens.f1 + gens.f2 * two + gens.f14 * two_u, gens.n)
    g_b = None
    if gens.f3 is not None:
        g_b = poly_mod_xn(gens.f3 * U + gens.f4 * two_u, gens.n)
    return g_a, g_b


# ---------------------------------------------------------------------------
# Enumerated codes
# ---------------------------------------------------------------------------

class Code:
    """An explicitly enumerated code: a canonical array of words.

    Words are stored as rows of 2n base-4 digits in lexicographic order by
    the (a, b) pairs of the symbols, so exports are deterministic and
    diffable.  All predicates below are exhaustive checks over the stored
    set, not algebraic shortcuts.
    """

    def __init__(self, n: int, rows: np.ndarray, source: Optional[GeneratorSet] = None):
        self.n = n
        self._rows = rows
        self.source = source

    @classmethod
    def from_words(cls, n: int, words: Iterable[CodeWord],
                   source: Optional[GeneratorSet] = None) -> "Code":
        """Build from explicit words (deduplicated; closure is not verified)."""
        stacked = [word_to_row(w) for w in words]
        if not stacked:
            raise ValueError("a code needs at least one word")
        return cls(n, _dense.canonical(np.stack(stacked)), source)

    def __len__(self) -> int:
        return self._rows.shape[0]

    def __contains__(self, w: CodeWord) -> bool:
        return _dense.contains(self._rows, word_to_row(w))

    def words(self) -> Iterator[CodeWord]:
        """Words in canonical order."""
        for row in self._rows:
            yield row_to_word(row)

    def rows(self) -> np.ndarray:
        return self._rows.copy()

    # -- closure predicates -------------------------------------------------

    def is_shift_closed(self) -> bool:
        return _dense.same_set(self._rows, _dense.roll_rows(self._rows))

    def is_reversible(self) -> bool:
        return _dense.same_set(self._rows, _dense.reverse_rows(self._rows))

    def is_complement_closed(self) -> bool:
        return _dense.same_set(self._rows, _dense.complement_rows(self._rows))

    def is_rc_closed(self) -> bool:
        return _dense.same_set(self._rows, _dense.rc_rows(self._rows))

    def is_dna_code(self) -> bool:
        """Shift-closed, closed under reverse-complement, with no word
        equal to its own reverse-complement."""
        rc = _dense.rc_rows(self._rows)
        if (rc == self._rows).all(axis=1).any():
            return False
        return self.is_shift_closed() and _dense.same_set(self._rows, rc)

    # -- distances ------------------------------------------------------------

    def _nonzero_pairs(self) -> np.ndarray:
        if len(self) < 2:
            raise TrivialCode("need at least two codewords")
        rows = self._rows
        keep = ~(rows == 0).all(axis=1)
        return rows[keep].reshape(-1, self.n, 2)

    def min_hamming_distance(self) -> int:
        """Minimum symbolwise Hamming distance; equals the minimum nonzero
        weight because the code is an additive group."""
        pairs = self._nonzero_pairs()
        weights = (pairs != 0).any(axis=2).sum(axis=1)
        return int(weights.min())

    def min_lee_distance(self) -> int:
        pairs = self._nonzero_pairs()
        lee = np.asarray(LEE_Z4)
        a = pairs[:, :, 0].astype(np.int64)
        b = pairs[:, :, 1].astype(np.int64)
        weights = (lee[b] + lee[(a + b) % 4]).sum(axis=1)
        return int(weights.min())

    # -- derived views ----------------------------------------------------------

    def dna_words(self) -> list[str]:
        """Nucleotide strings of length 2n, in canonical word order."""
        out = []
        for row in self._rows:
            out.append("".join(_CODON16[(row[2 * k], row[2 * k + 1])]
                               for k in range(self.n)))
        return out

    def gray_words(self) -> list[str]:
        """Binary strings of length 4n, in canonical word order."""
        out = []
        for row in self._rows:
            out.append("".join(_GRAY16[(row[2 * k], row[2 * k + 1])]
                               for k in range(self.n)))
        return out

    def gray_image(self) -> set[str]:
        return set(self.gray_words())


def enumerate_code(gens: GeneratorSet, cap: int = DEFAULT_CAP) -> Code:
    """Exact enumeration of the ideal generated by the generator tuple.

    Span closure over the 2n cyclic shifts of the generators: starting
    from {0}, each shift vector v replaces the running set S by
    {s + r*v : s in S, r in R}, deduplicating as it goes.  Raises
    CapExceeded rather than truncating when the set outgrows ``cap``.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    g_a, g_b = generator_polys(gens)
    n = gens.n
    vectors = []
    for g in (g_a, g_b):
        if g is None:
            continue
        base = word_to_row(word_from_poly(g, n))
        for i in range(n):
            vectors.append(_dense.roll_rows(base.reshape(1, -1), i)[0])
    rows = _dense.span_closure(vectors, cap)
    code = Code(n, rows, gens)
    # spanning all n shifts of each generator makes the result an ideal;
    # fail loudly if that ever stops being true
    assert code.is_shift_closed()
    return code


def is_quasi_cyclic_index4(words: Iterable[str]) -> bool:
    """Whether a set of equal-length binary words is invariant under
    rotation by 4 bit positions."""
    pool = set(words)
    if not pool:
        return True
    lengths = {len(w) for w in pool}
    if len(lengths) != 1:
        raise LengthMismatch("words must share one length")
    length = lengths.pop()
    if length % 4 != 0:
        raise LengthMismatch("word length must be a multiple of 4")
    return all(w[-4:] + w[:-4] in pool for w in pool)


# ---------------------------------------------------------------------------
# Text export
# ---------------------------------------------------------------------------

EXPORT_FORMATS = ("ring", "dna", "gray")


def render_code_export(code: Code, fmt: str = "ring") -> str:
    """Code export file: n=, size=, generators= headers, one word per line."""
    if fmt not in EXPORT_FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if code.source is not None:
        g_a, g_b = generator_polys(code.source)
        gen_text = str(g_a) + (f";{g_b}" if g_b is not None else "")
    else:
        gen_text = "-"
    lines = [f"n={code.n}", f"size={len(code)}", f"generators={gen_text}"]
    if fmt == "ring":
        for row in code.rows():
            lines.append(",".join(_STR16[(row[2 * k], row[2 * k + 1])]
                                  for k in range(code.n)))
    elif fmt == "dna":
        lines.extend(code.dna_words())
    else:
        lines.extend(code.gray_words())
    return "\n".join(lines) + "\n"
