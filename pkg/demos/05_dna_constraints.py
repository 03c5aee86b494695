"""The four classical DNA codebook constraints on an enumerated code.

Run:  python3 demos/05_dna_constraints.py
"""

from z4udna import dna
from z4udna.cyclic import GeneratorSet, enumerate_code
from z4udna.poly import Poly

quad = Poly.parse("1,1,1")
code = enumerate_code(GeneratorSet(3, quad, quad))
book = code.dna_words()
d = dna.min_letterwise_distance(book)

print(f"codebook of {len(book)} strands, length {len(book[0])}, "
      f"min letterwise distance {d}")
print(f"hamming constraint at d={d}:          "
      f"{dna.check_hamming_constraint(book, d)}")
print(f"reverse constraint at d={d}:          "
      f"{dna.check_reverse_constraint(book, d)}")
print(f"reverse-complement constraint at d={d}: "
      f"{dna.check_rc_constraint(book, d)}")
print(f"fixed GC-content:                     {dna.check_gc_constraint(book)}")

print("\nGC content is not constant here; group the book by it instead:")
by_gc = {}
for word in book:
    by_gc.setdefault(dna.gc_content(word), []).append(word)
for gc, words in sorted(by_gc.items()):
    print(f"  GC={gc}: {' '.join(words)}")

print("\na fixed-GC sub-book still satisfies all four constraints:")
sub = by_gc[max(by_gc, key=lambda k: len(by_gc[k]))]
sub_d = dna.min_letterwise_distance(sub)
print(f"  {len(sub)} strands, min distance {sub_d}, "
      f"gc constraint {dna.check_gc_constraint(sub)}, "
      f"rc constraint at d={sub_d}: {dna.check_rc_constraint(sub, sub_d)}")
