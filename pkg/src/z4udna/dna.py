"""DNA-string views of ring words and the classical codebook constraints.

A ring word of length n encodes as a nucleotide string of length 2n, one
codon per symbol.  Reversal of a DNA word here means reversal of the
*codon* order (the symbol-level reversal of the underlying ring word),
not strand reversal of individual letters; complement is letterwise
Watson-Crick pairing, which coincides with the ring-level complement
through the codon table.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BadAlphabet, LengthMismatch, OddLength
from .ring import RingElem, theta_inv

_WCC = str.maketrans("ACGT", "TGCA")
_LETTERS = frozenset("ACGT")

DnaWord = str


def encode(w: Sequence[RingElem]) -> DnaWord:
    """Concatenate the codon of each symbol."""
    return "".join(c.codon() for c in w)


def decode(d: DnaWord) -> tuple[RingElem, ...]:
    """Inverse of encode; validates alphabet and even length."""
    if set(d) - _LETTERS:
        raise BadAlphabet(f"letters outside ACGT in {d!r}")
    if len(d) % 2 != 0:
        raise OddLength(f"cannot split {d!r} into codons")
    return tuple(theta_inv(d[i:i + 2]) for i in range(0, len(d), 2))


def letterwise_complement(d: DnaWord) -> DnaWord:
    """A<->T, C<->G in place."""
    if set(d) - _LETTERS:
        raise BadAlphabet(f"letters outside ACGT in {d!r}")
    return d.translate(_WCC)


def reverse_word(d: DnaWord) -> DnaWord:
    """Reverse the codon order, keeping letters within each codon."""
    if len(d) % 2 != 0:
        raise OddLength(f"cannot split {d!r} into codons")
    return "".join(d[i:i + 2] for i in range(len(d) - 2, -2, -2))


def reverse_complement_word(d: DnaWord) -> DnaWord:
    return reverse_word(letterwise_complement(d))


def gc_content(d: DnaWord) -> int:
    """Number of G or C letters."""
    return sum(1 for ch in d if ch in "GC")


def hamming(x: DnaWord, y: DnaWord) -> int:
    if len(x) != len(y):
        raise LengthMismatch("words must share one length")
    return sum(1 for cx, cy in zip(x, y) if cx != cy)


def min_letterwise_distance(codebook: Iterable[DnaWord]) -> int:
    """Minimum pairwise letterwise Hamming distance over distinct words."""
    words = _as_book(codebook)
    if len(words) < 2:
        raise LengthMismatch("need at least two words")
    best = len(words[0])
    for i, x in enumerate(words):
        for y in words[i + 1:]:
            dist = hamming(x, y)
            if dist < best:
                best = dist
    return best


def _as_book(codebook: Iterable[DnaWord]) -> list[DnaWord]:
    words = sorted(set(codebook))
    if not words:
        return words
    if len({len(w) for w in words}) != 1:
        raise LengthMismatch("words must share one length")
    for w in words:
        if set(w) - _LETTERS:
            raise BadAlphabet(f"letters outside ACGT in {w!r}")
    return words


def check_hamming_constraint(codebook: Iterable[DnaWord], d: int) -> bool:
    """All distinct pairs at letterwise distance >= d."""
    words = _as_book(codebook)
    return all(hamming(x, y) >= d
               for i, x in enumerate(words) for y in words[i + 1:])


def check_reverse_constraint(codebook: Iterable[DnaWord], d: int) -> bool:
    """H(reverse(x), y) >= d over ordered pairs, skipping the coincidence
    reverse(x) == y (so palindromes do not fail against themselves)."""
    words = _as_book(codebook)
    for x in words:
        rx = reverse_word(x)
        for y in words:
            if rx == y:
                continue
            if hamming(rx, y) < d:
                return False
    return True


def check_rc_constraint(codebook: Iterable[DnaWord], d: int) -> bool:
    """Same as the reverse constraint with reverse-complement in place of
    reverse."""
    words = _as_book(codebook)
    for x in words:
        rcx = reverse_complement_word(x)
        for y in words:
            if rcx == y:
                continue
            if hamming(rcx, y) < d:
                return False
    return True


def check_gc_constraint(codebook: Iterable[DnaWord]) -> bool:
    """All words share one GC count."""
    words = _as_book(codebook)
    return len({gc_content(w) for w in words}) <= 1


# ---------------------------------------------------------------------------
# Codebook files: one word per line, uppercase ACGT, '#' comments allowed.
# ---------------------------------------------------------------------------

def parse_codebook(text: str) -> list[DnaWord]:
    words = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - _LETTERS:
            raise BadAlphabet(f"letters outside ACGT in {line!r}")
        words.append(line)
    return words


def read_codebook(path) -> list[DnaWord]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_codebook(fh.read())


def render_codebook(words: Iterable[DnaWord], comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.extend(words)
    return "\n".join(lines) + "\n"
